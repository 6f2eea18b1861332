#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace topogen {

enum class ErrorCode {
    ParseError,
    DimensionMismatch,
    ParityViolation,
    CentralClass,
    OrderViolation,
    SizeMismatch,
    MixedKinds,
    NoSuchClass,
    BoundExceeded,
    Infeasible,
    UnsupportedChar2Class,
    Unsupported,
    NotApplicable,
    UnsupportedGroup,
    MissingSpin8Profile,
    OutsideCatalog,
    BadCharacteristic,
    Uninstantiable,
    NonSplit,
    GroupTooLarge,
    EnumerationTooLarge,
};

const char* error_name(ErrorCode c);

// Validation errors map to CLI exit code 2, everything else to 3.
bool is_validation_error(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode c, const std::string& msg)
        : std::runtime_error(std::string(error_name(c)) + ": " + msg), code_(c) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

enum class Family { SL, Sp, SO, Spin8 };

const char* family_name(Family f);
Family parse_family(const std::string& s);

struct GroupSpec {
    Family family = Family::SL;
    int n = 2;
    int p = 0;

    bool operator==(const GroupSpec&) const = default;
};

enum class Variant { unspecified, plus, minus };

const char* variant_name(Variant v);
Variant parse_variant(const std::string& s);

struct EigenPattern {
    int mult_one = 0;
    int mult_minus_one = 0;
    // Each pair (label, c) stands for eigenvalues label and label^-1, each with multiplicity c.
    std::vector<std::pair<std::string, int>> pairs;
    // Unpaired eigenvalues; only meaningful for SL.
    std::vector<std::pair<std::string, int>> singles;
    // Per base symbol: "sq=-1" or "ord=K".
    std::map<std::string, std::string> relations;
    Variant variant = Variant::unspecified;

    bool operator==(const EigenPattern&) const = default;
};

struct DecoBlock {
    char kind = 'W';  // 'V' or 'W'
    int size = 1;     // 2m for V(2m), l for W(l)
    int mult = 1;

    bool operator==(const DecoBlock&) const = default;
};

struct UnipotentData {
    std::vector<int> partition;         // descending
    std::vector<DecoBlock> decoration;  // Sp/SO in characteristic 2
    std::string as_type;                // e.g. "a4", "b1", "c2"; empty if not an involution
    Variant variant = Variant::unspecified;

    bool operator==(const UnipotentData&) const = default;
};

enum class Kind { Semisimple, Unipotent };

struct ClassDescriptor {
    Kind kind = Kind::Semisimple;
    EigenPattern ss;
    UnipotentData u;
    int order = 0;  // declared prime order modulo the center; 0 = unspecified

    bool unipotent() const { return kind == Kind::Unipotent; }
    bool operator==(const ClassDescriptor&) const = default;
};

struct ValidateOptions {
    // When false, unipotent parts may exceed p (used by closure enumeration).
    bool require_prime_order = true;
    // When false, Sp/SO block-multiplicity parity is not enforced (formula evaluation only).
    bool require_parity = true;
};

// Throws UnsupportedGroup for groups outside the implemented families.
GroupSpec validate_group(GroupSpec g);

// The group whose natural module the class descriptors live on:
// SL4 for SO6, SO8 for Spin8, the group itself otherwise.
GroupSpec descriptor_group(const GroupSpec& g);

ClassDescriptor validate_class(const GroupSpec& group, const ClassDescriptor& raw,
                               ValidateOptions opt = {});

std::pair<int, int> dim_and_rank(const GroupSpec& group);

bool is_prime(long long x);

// Convenience constructors.
ClassDescriptor unipotent(std::vector<int> partition, Variant v = Variant::unspecified);
ClassDescriptor decorated(std::vector<DecoBlock> deco, Variant v = Variant::unspecified);
ClassDescriptor semisimple(int one, int minus_one,
                           std::vector<std::pair<std::string, int>> pairs = {},
                           std::map<std::string, std::string> relations = {});

std::string describe(const ClassDescriptor& c);
std::string describe(const GroupSpec& g);

// ---- symbolic eigenvalues ----
// sign * prod base^exp, reduced by relation tags.
struct Mono {
    bool neg = false;
    std::map<std::string, int> exps;

    bool is_one() const { return !neg && exps.empty(); }
    bool operator==(const Mono&) const = default;
    auto operator<=>(const Mono&) const = default;
};

Mono parse_mono(const std::string& s);
std::string mono_string(const Mono& m);
Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_inv(const Mono& a);
// Order tag of a base symbol: 0 when free.
int relation_order(const std::map<std::string, std::string>& rel, const std::string& base);
Mono reduce(Mono m, const std::map<std::string, std::string>& rel, int p);

// Merged eigenvalue multiset of a semisimple class on the natural module.
std::vector<std::pair<Mono, int>> eigenvalues(const ClassDescriptor& c, int p);

struct SemisimpleShape {
    int a = 0;                  // multiplicity of 1
    int b = 0;                  // multiplicity of -1
    std::vector<int> pair_mults;  // descending
    std::vector<int> single_mults;  // descending, eigenvalues without inverse partner
    bool sq_minus_one = false;  // some pair satisfies lambda^2 = -1
};

SemisimpleShape semisimple_shape(const ClassDescriptor& c, int p);

// Partition utilities.
std::vector<int> conjugate(const std::vector<int>& part);
std::vector<int> partition_from_decoration(const std::vector<DecoBlock>& deco);
std::vector<std::vector<int>> partitions_of(int n, int max_part = 0, int num_parts = 0);

}  // namespace topogen
