#pragma once

#include <string>
#include <vector>

#include "topogen/core.hpp"

namespace topogen {

// Thresholds are stored exactly in units of 1/8.
struct ThresholdRow {
    long long dG_eighths = 0;
    long long dG_prime_eighths = 0;
    std::string conditions;

    double dG() const { return dG_eighths / 8.0; }
    double dG_prime() const { return dG_prime_eighths / 8.0; }
};

// Classical rows for GroupSpec families; SO is defined for n >= 7 only.
ThresholdRow threshold(const GroupSpec& group);

// Exceptional rows by name: E8, E7, E6, F4, G2.
ThresholdRow threshold(const std::string& exceptional);

// True iff dimV - dimVG exceeds d(G).
bool generically_free(const GroupSpec& group, long long dimV, long long dimVG);
bool generically_free(const std::string& exceptional, long long dimV, long long dimVG);

struct ShapeConstraints {
    int bound = 12;
    bool unipotent = true;
    bool semisimple = true;
};

// Canonical shapes of prime-order classes (modulo the center), duplicate-free.
std::vector<ClassDescriptor> enumerate_class_shapes(const GroupSpec& group, ShapeConstraints constraints = {});

struct CValue {
    int c = 0;
    ClassDescriptor witness;
    int witness_r = 0;
    int witness_dim = 0;
    int shapes = 0;
    int skipped = 0;  // shapes whose class dimension is unsupported
};

CValue c_value(const GroupSpec& group, ShapeConstraints constraints = {});

}  // namespace topogen
