#pragma once

#include <array>
#include <optional>

#include "topogen/core.hpp"

namespace topogen {

struct EigenProfile {
    int d = 0;
    int e = 0;
    std::optional<std::array<int, 3>> spin8;
};

struct ClassDim {
    int dim_class = 0;
    int dim_centralizer = 0;
};

// Profile on the natural module of descriptor_group(group).
EigenProfile eigen_profile(const GroupSpec& group, const ClassDescriptor& c);

bool is_quadratic(const ClassDescriptor& c, int p = 0);

ClassDim class_dim(const GroupSpec& group, const ClassDescriptor& c);

enum class InducedKind { tensor, wedge2, sym2 };

// Jordan block count of the induced unipotent action.
int induced_block_count(InducedKind kind, int a, int b = 0, int p = 0);

struct Wedge2Fixed {
    std::optional<int> exact;
    int upper = 0;
};

Wedge2Fixed wedge2_fixed_dim(int n, const ClassDescriptor& c, int p = 0);

int sym2_fixed_dim(const std::vector<int>& partition, int p);

// Number of Jordan blocks of the exterior square of a unipotent element with the given partition.
int wedge2_block_count(const std::vector<int>& partition);

enum class SubspaceType { totally_singular, any };

// Sp6 carries two varieties: X1 = G/P (Lagrangian 3-spaces, dim 6) and
// X2 = G/N with N the normalizer of a Levi GL3 (pairs of complementary Lagrangians, dim 12).
enum class Sp6Variety { X1, X2 };

// Returns the fixed-point dimension, -1 for an empty fixed locus, or nothing outside the catalog.
std::optional<int> grassmannian_fixed_dim(const GroupSpec& group, const ClassDescriptor& c, int k,
                                          SubspaceType type,
                                          Sp6Variety variety = Sp6Variety::X1);

}  // namespace topogen
