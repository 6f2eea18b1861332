#pragma once

#include <string>
#include <vector>

#include "topogen/core.hpp"

namespace topogen {

bool dominates(const std::vector<int>& pi1, const std::vector<int>& pi2);

bool in_closure(const GroupSpec& group, const ClassDescriptor& upper, const ClassDescriptor& lower);

ClassDescriptor smallest_class_with_blocks(const GroupSpec& group, int m);

bool splits_in_G(const GroupSpec& group, const ClassDescriptor& c);

// All nontrivial unipotent classes; with prime_order, parts are capped at p (p > 0).
std::vector<ClassDescriptor> unipotent_classes(const GroupSpec& group, bool prime_order);

// Hasse diagram of the closure order in DOT format.
std::string closure_dot(const GroupSpec& group, bool prime_order = false);

}  // namespace topogen
