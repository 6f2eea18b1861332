#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "topogen/core.hpp"
#include "topogen/invariants.hpp"

namespace topogen {

enum class Reason { DimObstruction, SpChar2FixedVector, QuadraticPair, TableRow, FamilyTheoremCase, Generic };

const char* reason_name(Reason r);

using Spin8Profile = std::array<int, 3>;

struct Verdict {
    bool empty = false;
    Reason reason = Reason::Generic;
    std::string case_id;  // table row or theorem case; empty otherwise
    std::string detail;   // e.g. which module carried the dimension obstruction
    int sum_d = 0;
    int sum_e = 0;
    int bound = 0;  // n(r-1) on the module that decided
    std::vector<EigenProfile> profiles;     // natural module (V for SO6, V1 for Spin8)
    std::vector<EigenProfile> sl4_profiles;  // SO6 only: profiles on the 4-dim module
    std::vector<Spin8Profile> spin8;        // Spin8 only
};

Verdict decide(const GroupSpec& group, const std::vector<ClassDescriptor>& classes,
               const std::optional<std::vector<Spin8Profile>>& spin8_profiles = std::nullopt);

// Profile of an SL4 class on the 6-dimensional exterior square.
EigenProfile so6_transfer(const ClassDescriptor& sl4_class, int p = 0);

// (d1, d3, d4) of an SO8 class lifted to Spin8.
Spin8Profile spin8_profile(const ClassDescriptor& c, int p = 0);

struct ScottBound {
    bool holds = false;
    int lhs = 0;
    int rhs = 0;
};

ScottBound scott_lower_bound(const GroupSpec& group, const std::vector<ClassDescriptor>& classes);

int min_generators(const GroupSpec& group, const ClassDescriptor& c);

// Literal transcription of the two tables of special cases, kept independent of decide.
std::optional<std::string> table_row(const GroupSpec& group, const std::vector<ClassDescriptor>& classes);

}  // namespace topogen
