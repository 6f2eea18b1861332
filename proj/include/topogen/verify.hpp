#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "topogen/serialize.hpp"

namespace topogen {

// Each suite returns a document with a boolean "pass" plus the witnesses it compared.

// Jordan block counts of explicit tensor, wedge and symmetric squares against the closed formulas.
Json verify_blocks(const std::vector<int>& qs = {2, 3, 5, 101}, int max_size = 9);

// Lie centralizer dimension of explicit representatives against dim G - dim C.
Json verify_centralizers(const std::vector<int>& qs = {3, 5, 7});

// PSp4(3): group order and the absence of generating pairs of orders (2,3) and (3,3).
Json verify_psp4(long long cap = 1000000);

// Totally singular invariant 4-spaces of (J2^4, J1) in SO9 over GF(2) and GF(3).
Json verify_so9_count();

// Monte Carlo estimate against exhaustive counting in PSL2(q).
Json verify_mc(long long trials = 10000, std::uint64_t seed = 1, const std::vector<int>& qs = {5, 7, 9});

Json run_suite(const std::string& name, long long trials, std::uint64_t seed, long long cap);

}  // namespace topogen
