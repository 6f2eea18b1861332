#pragma once

#include <string>
#include <vector>

#include "topogen/core.hpp"

namespace topogen {

// r prime; i the multiplicative order of q modulo r; t = (r-1)/i.
struct QContext {
    int r = 2;
    int i = 1;
    int t = 1;
    bool is_p = false;
};

// Builds and checks a context; i is ignored when r equals the characteristic.
QContext make_context(int r, int i, int p);

struct MaxClass {
    ClassDescriptor cls;                // first maximizer
    int dim = 0;
    std::vector<ClassDescriptor> all;   // every maximizer
    int candidates = 0;                 // shapes examined
};

MaxClass max_class(const GroupSpec& group, const QContext& ctx);

// Semisimple element of order r with multiplicity a_j on the j-th Frobenius orbit class
// (an orbit closed under inversion when i is even, an orbit with its inverse orbit otherwise).
ClassDescriptor orbit_class(const GroupSpec& group, const QContext& ctx, const std::vector<int>& mults);

// Candidate classes over which max_class optimizes.
std::vector<ClassDescriptor> order_r_classes(const GroupSpec& group, const QContext& ctx);

struct Rational {
    long long num = 0;
    long long den = 1;

    bool operator==(const Rational&) const = default;
    std::string str() const;
};

// Limit of the (r,s)-generation probability along the groups of the family as q grows.
Rational rs_limit(Family family, int n, int p, int r, int s);

}  // namespace topogen
