#include <doctest.h>

#include <algorithm>

#include "topogen/closure.hpp"
#include "topogen/oracle.hpp"
#include "topogen/stabilizers.hpp"

using namespace topogen;

namespace {

ClassDescriptor regular_sl(int n) {
    ClassDescriptor c;
    c.kind = Kind::Semisimple;
    for (int i = 1; i <= n; ++i) c.ss.singles.push_back({"l" + std::to_string(i), 1});
    return c;
}

ClassDescriptor transvection_char2(int n) {
    std::vector<DecoBlock> d{{'V', 2, 1}};
    if (n > 2) d.push_back({'W', 1, (n - 2) / 2});
    return decorated(d);
}

}  // namespace

TEST_CASE("dimension obstruction") {
    GroupSpec g{Family::Sp, 8, 0};
    auto v = decide(g, {unipotent({2, 1, 1, 1, 1, 1, 1}), unipotent({2, 2, 1, 1, 1, 1})});
    CHECK(v.empty);
    CHECK(v.reason == Reason::DimObstruction);
    CHECK(v.sum_d == 13);
    CHECK(v.bound == 8);
}

TEST_CASE("quadratic pairs") {
    GroupSpec g{Family::SO, 10, 0};
    auto v = decide(g, {semisimple(0, 0, {{"l", 5}}), semisimple(0, 0, {{"m", 5}})});
    CHECK(v.empty);
    CHECK(v.reason == Reason::QuadraticPair);
}

TEST_CASE("table rows") {
    auto v = decide({Family::Sp, 8, 3}, {semisimple(6, 2), semisimple(6, 2), semisimple(4, 4)});
    CHECK(v.empty);
    CHECK(v.reason == Reason::TableRow);
    CHECK(v.case_id == "Sp8-r3");
    auto w = decide({Family::SO, 5, 0}, {unipotent({2, 2, 1}), unipotent({2, 2, 1}), unipotent({2, 2, 1})});
    CHECK(w.case_id == "SO5-r3");
    auto x = decide({Family::Sp, 4, 5}, {semisimple(2, 2), semisimple(2, 0, {{"l", 1}})});
    CHECK(x.case_id == "Sp4-r2");
    auto y = decide({Family::Sp, 4, 5}, {semisimple(2, 2), unipotent({4})});
    CHECK_FALSE(y.empty);
}

TEST_CASE("characteristic 2 symplectic fixed vectors") {
    GroupSpec g{Family::Sp, 6, 2};
    auto t = transvection_char2(6);
    auto v = decide(g, {t, t, t, t, t, t});
    CHECK(v.empty);
    CHECK(v.reason == Reason::SpChar2FixedVector);
    auto w = decide(g, {t, t, t, t, t, t, t});
    CHECK_FALSE(w.empty);
}

TEST_CASE("literal table matcher agrees with the oracle") {
    std::vector<std::pair<GroupSpec, std::vector<ClassDescriptor>>> cases{
        {{Family::Sp, 6, 5}, {semisimple(4, 2), semisimple(4, 2), semisimple(4, 2)}},
        {{Family::Sp, 4, 3}, {semisimple(2, 2), semisimple(2, 2), semisimple(2, 2), semisimple(2, 2)}},
        {{Family::SO, 9, 0}, {unipotent({2, 2, 2, 2, 1}), semisimple(1, 0, {{"l", 4}})}},
    };
    for (auto& [g, x] : cases) {
        auto row = table_row(g, x);
        REQUIRE(row);
        CHECK(decide(g, x).case_id == *row);
    }
}

TEST_CASE("SO6 through the 4-dimensional module") {
    GroupSpec g{Family::SO, 6, 0};
    auto tr = so6_transfer(unipotent({2, 1, 1}), 0);
    CHECK(tr.d == 4);
    auto v = decide(g, {unipotent({2, 1, 1}), unipotent({2, 1, 1}), unipotent({2, 1, 1})});
    CHECK(v.empty);
    CHECK(v.case_id == "SO6-i");
    auto w = decide(g, {unipotent({2, 2}), unipotent({2, 2})});
    CHECK(w.empty);
}

TEST_CASE("Spin8 profiles and triality") {
    CHECK(spin8_profile(unipotent({2, 2, 1, 1, 1, 1})) == Spin8Profile{6, 6, 6});
    CHECK(spin8_profile(unipotent({3, 1, 1, 1, 1, 1})) == Spin8Profile{6, 4, 4});
    CHECK(spin8_profile(unipotent({2, 2, 2, 2}, Variant::plus)) == Spin8Profile{4, 6, 4});
    CHECK(spin8_profile(unipotent({2, 2, 2, 2}, Variant::minus)) == Spin8Profile{4, 4, 6});
    // (-I4, I4) is quadratic on all three modules.
    CHECK(spin8_profile(semisimple(4, 4)) == Spin8Profile{4, 4, 4});
    // The variants of a split semisimple class are swapped by the graph automorphism.
    auto plus = semisimple(0, 0, {{"l", 4}});
    plus.ss.variant = Variant::plus;
    auto minus = plus;
    minus.ss.variant = Variant::minus;
    auto a = spin8_profile(plus), b = spin8_profile(minus);
    CHECK(a[0] == b[0]);
    CHECK(a[1] == b[2]);
    CHECK(a[2] == b[1]);
    // Same check when the eigenvalue is a square root of -1.
    auto iplus = validate_class({Family::SO, 8, 0}, semisimple(0, 0, {{"i", 4}}, {{"i", "sq=-1"}}));
    iplus.ss.variant = Variant::plus;
    auto iminus = iplus;
    iminus.ss.variant = Variant::minus;
    CHECK(spin8_profile(iplus) == Spin8Profile{4, 6, 4});
    CHECK(spin8_profile(iminus) == Spin8Profile{4, 4, 6});
    // SO8 is decided through the triality modules as well.
    auto so8 = decide({Family::SO, 8, 0}, {unipotent({3, 3, 1, 1}), iminus});
    CHECK(so8.empty);
    CHECK(so8.detail == "V4");
    GroupSpec g{Family::Spin8, 8, 0};
    auto v = decide(g, {semisimple(4, 4), semisimple(4, 4)});
    CHECK(v.empty);
    CHECK(v.case_id == "Spin8-i");
    auto u = unipotent({3, 2, 2, 1});
    auto w = decide(g, {u, u, u});
    CHECK_FALSE(w.empty);
    auto t = unipotent({3, 1, 1, 1, 1, 1});
    auto obstructed = decide(g, {t, t, t});
    CHECK(obstructed.reason == Reason::DimObstruction);
    CHECK_THROWS_AS(decide(g, {unipotent({3, 3, 2}), u}), Error);
}

TEST_CASE("minimal number of conjugates") {
    for (int n : {4, 6, 8}) CHECK(min_generators({Family::Sp, n, 2}, transvection_char2(n)) == n + 1);
    CHECK(min_generators({Family::Sp, 4, 5}, semisimple(2, 2)) == 5);
    CHECK(min_generators({Family::SL, 5, 0}, regular_sl(5)) == 2);
    CHECK(min_generators({Family::SL, 5, 0}, unipotent({2, 1, 1, 1})) == 5);
}

TEST_CASE("verdicts are invariant under permutation and monotone along closures") {
    for (GroupSpec g : {GroupSpec{Family::Sp, 6, 3}, GroupSpec{Family::SO, 7, 5}, GroupSpec{Family::SL, 4, 0}}) {
        auto cls = unipotent_classes(g, true);
        for (auto& a : cls)
            for (auto& b : cls)
                for (auto& c : cls) {
                    bool e = decide(g, {a, b, c}).empty;
                    CHECK(decide(g, {c, a, b}).empty == e);
                    CHECK(decide(g, {b, a, c}).empty == e);
                    if (e) continue;
                    for (auto& big : cls)
                        if (in_closure(g, big, a)) CHECK_FALSE(decide(g, {big, b, c}).empty);
                }
    }
}

TEST_CASE("Scott bound holds whenever generation is possible") {
    GroupSpec g{Family::Sp, 8, 5};
    auto cls = enumerate_class_shapes(g);
    for (size_t i = 0; i < cls.size(); ++i)
        for (size_t j = i; j < cls.size(); ++j) {
            auto v = decide(g, {cls[i], cls[j]});
            if (!v.empty) CHECK(scott_lower_bound(g, {cls[i], cls[j]}).holds);
        }
    CHECK_THROWS_AS(scott_lower_bound({Family::Sp, 4, 2}, {unipotent({2, 2}), unipotent({2, 2})}), Error);
}

TEST_CASE("SO10 pairs of the Table 1 shape outside the table fail the adjoint bound") {
    GroupSpec g{Family::SO, 10, 0};
    auto v = decide(g, {semisimple(0, 0, {{"l", 5}}), unipotent({3, 3, 2, 2})});
    CHECK(v.empty);
    CHECK(v.reason == Reason::FamilyTheoremCase);
    CHECK(v.case_id == "Scott");
    auto w = decide(g, {semisimple(0, 0, {{"l", 4}, {"m", 1}}), unipotent({2, 2, 2, 2, 1, 1})});
    CHECK(w.case_id == "Scott");
    auto row = decide(g, {semisimple(2, 0, {{"l", 4}}), unipotent({2, 2, 2, 2, 1, 1})});
    CHECK(row.reason == Reason::TableRow);
    auto free = decide(g, {semisimple(0, 0, {{"l", 5}}), unipotent({3, 3, 3, 1})});
    CHECK_FALSE(free.empty);
}

TEST_CASE("large tuples fail only for dimension reasons") {
    GroupSpec g{Family::Sp, 4, 2};
    auto cls = enumerate_class_shapes(g);
    for (auto& c : cls) {
        auto v = decide(g, std::vector<ClassDescriptor>(5, c));
        if (v.empty) CHECK((v.reason == Reason::DimObstruction || v.reason == Reason::SpChar2FixedVector));
    }
}

TEST_CASE("decide rejects malformed tuples") {
    CHECK_THROWS_AS(decide({Family::Sp, 4, 0}, {unipotent({2, 2})}), Error);
    CHECK_THROWS_AS(decide({Family::Sp, 4, 0}, {unipotent({3, 1}), unipotent({2, 2})}), Error);
}
