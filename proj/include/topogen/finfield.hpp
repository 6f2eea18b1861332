#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "topogen/core.hpp"
#include "topogen/invariants.hpp"

namespace topogen {

// GF(q) for q = p^k <= 1024. Elements are integers in [0, q) read as base-p digit
// vectors (polynomials modulo a primitive polynomial); 0..p-1 is the prime subfield.
class Field {
public:
    explicit Field(int q);

    int q() const { return q_; }
    int p() const { return p_; }
    int degree() const { return k_; }

    int add(int a, int b) const { return k_ == 1 ? (a + b) % p_ : add_[a * q_ + b]; }
    int neg(int a) const { return k_ == 1 ? (a ? p_ - a : 0) : neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const {
        if (k_ == 1) return static_cast<int>(static_cast<long long>(a) * b % p_);
        if (!a || !b) return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }
    int inv(int a) const;
    int pow(int a, long long e) const;
    int from_int(long long c) const { return static_cast<int>(((c % p_) + p_) % p_); }
    // A generator of the multiplicative group.
    int primitive() const { return exp_[1 % (q_ - 1)]; }
    int element_order(int a) const;
    std::string str(int a) const;

private:
    int q_, p_, k_;
    std::vector<int> exp_, log_, add_, neg_;
};

// Cached field instance; throws ParseError unless q is a prime power <= 1024.
const Field& field(int q);

// Rank of a dense matrix over GF(q) (rows may be modified).
int rank_of(const Field& F, std::vector<std::vector<int>> rows);
// Reduced row echelon form; returns the pivot columns.
std::vector<int> rref(const Field& F, std::vector<std::vector<int>>& rows);

enum class FormKind { none, symplectic, symmetric };

struct GFMatrix {
    int q = 2;
    int n = 0;
    std::vector<int> a;            // row-major, acting on column vectors
    FormKind form = FormKind::none;
    std::vector<int> J;            // preserved bilinear form (n*n), empty if none
    std::vector<int> Q;            // upper-triangular quadratic form, characteristic 2 orthogonal only

    int& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    int at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    bool operator==(const GFMatrix& o) const { return q == o.q && n == o.n && a == o.a; }
};

GFMatrix identity_matrix(int q, int n);
GFMatrix multiply(const GFMatrix& x, const GFMatrix& y);
GFMatrix jordan_block(int q, int size, int lambda = 1);
GFMatrix direct_sum(const std::vector<GFMatrix>& blocks);
GFMatrix kron(const GFMatrix& x, const GFMatrix& y);
bool preserves_form(const GFMatrix& m);

using LabelAssignment = std::map<std::string, int>;

// Explicit representative over GF(q). Missing labels are assigned automatically so that
// distinct symbolic eigenvalues stay distinct and order tags are respected.
GFMatrix matrix_from_class(const GroupSpec& group, const ClassDescriptor& c, int q,
                           const LabelAssignment& labels = {});

// Smallest p^k <= max_q over which the class can be instantiated; 0 if none.
int instantiation_field(const GroupSpec& group, const ClassDescriptor& c, int p, int max_q = 1024);

// Jordan data: eigenvalue -> block sizes (descending). Throws NonSplit.
std::map<int, std::vector<int>> jordan_type(const GFMatrix& m);
std::vector<int> jordan_blocks(const GFMatrix& m, int lambda);
int fixed_space_dim(const GFMatrix& m);

enum class Functor { tensor_square, wedge2, sym2 };

GFMatrix induced_matrix(const GFMatrix& m, Functor f);

// Dimension of {X in Lie(G) : Xm = mX}.
int centralizer_lie_dim(const GroupSpec& group, const GFMatrix& m);

// ---- finite matrix groups ----
using Elt = std::vector<std::uint16_t>;

struct Closure {
    long long size = 0;
    bool truncated = false;
};

Closure group_closure(const std::vector<GFMatrix>& generators, long long cap = 1000000);

// All elements of the generated group; throws GroupTooLarge past cap.
std::vector<Elt> enumerate_group(const std::vector<GFMatrix>& generators, long long cap = 1000000);

// Generators of SL_n(q) or Sp_n(q) (standard alternating form).
std::vector<GFMatrix> standard_generators(Family family, int n, int q);
// |SL_n(q)| or |Sp_n(q)| by the order polynomial.
long long group_order_formula(Family family, int n, int q);

struct GenerationCount {
    long long hits = 0;
    long long trials = 0;
    long long group_order = 0;     // of the matrix group
    long long center_order = 0;
    long long r_elements = 0;      // cosets of the center of order r
    long long s_elements = 0;
};

// Uniform pairs (x, y) of order (r, s) modulo the center; trial t uses its own RNG seeded by (seed, t).
GenerationCount estimate_generation_probability(Family family, int n, int q, int r, int s, long long trials,
                                                std::uint64_t seed, long long cap = 1000000);

// Every pair of cosets (x Z, y Z) of order (r, s).
GenerationCount exact_generation_count(Family family, int n, int q, int r, int s, long long cap = 1000000);

// x runs over conjugacy class representatives only; each hit is weighted by 1 (reported as the raw count).
GenerationCount class_reduced_generation_count(Family family, int n, int q, int r, int s,
                                               long long cap = 1000000);

// m-invariant k-dimensional subspaces, optionally totally singular for the declared form.
long long invariant_subspace_count(const GFMatrix& m, int k, SubspaceType type, long long cap = 2000000);

}  // namespace topogen
