#include <doctest.h>

#include <set>

#include "topogen/invariants.hpp"
#include "topogen/oracle.hpp"
#include "topogen/stabilizers.hpp"

using namespace topogen;

TEST_CASE("classical thresholds") {
    CHECK(threshold(GroupSpec{Family::SL, 2, 0}).dG() == 6.0);
    CHECK(threshold(GroupSpec{Family::SL, 2, 0}).dG_prime() == 9.0);
    CHECK(threshold(GroupSpec{Family::SL, 3, 0}).dG() == 20.25);
    CHECK(threshold(GroupSpec{Family::Sp, 4, 3}).dG() == 20.0);
    CHECK(threshold(GroupSpec{Family::Sp, 4, 3}).dG_prime() == 24.0);
    CHECK(threshold(GroupSpec{Family::Sp, 6, 2}).dG() == 42.5);
    CHECK(threshold(GroupSpec{Family::Sp, 6, 3}).dG() == 40.5);
    CHECK(threshold(GroupSpec{Family::Sp, 8, 0}).dG() == 72.0);
    CHECK(threshold(GroupSpec{Family::SO, 7, 0}).dG() == 55.125);
    CHECK(threshold(GroupSpec{Family::SO, 7, 0}).dG_prime() == 72.0);
    CHECK_THROWS_AS(threshold(GroupSpec{Family::SO, 6, 0}), Error);
}

TEST_CASE("exceptional thresholds") {
    CHECK(threshold("E8").dG() == 720.0);
    CHECK(threshold("E7").dG_prime() == 630.0);
    CHECK(threshold("G2").dG() == 36.0);
    CHECK_THROWS_AS(threshold("H4"), Error);
}

TEST_CASE("generic freeness is a strict threshold on the moving part") {
    GroupSpec sp4{Family::Sp, 4, 3};
    CHECK(generically_free(sp4, 21, 0));
    CHECK_FALSE(generically_free(sp4, 20, 0));
    CHECK_FALSE(generically_free(sp4, 25, 5));
    CHECK(generically_free("E8", 3875, 0));
    CHECK_FALSE(generically_free("E8", 248, 0));
    CHECK_THROWS_AS(generically_free(sp4, 10, 11), Error);
}

TEST_CASE("shape enumeration is duplicate free and valid") {
    for (GroupSpec g : {GroupSpec{Family::Sp, 6, 3}, GroupSpec{Family::SO, 8, 5}, GroupSpec{Family::SO, 9, 3},
                        GroupSpec{Family::SL, 4, 0}, GroupSpec{Family::Sp, 4, 2}}) {
        auto shapes = enumerate_class_shapes(g);
        std::set<std::string> seen;
        for (auto& c : shapes) {
            CHECK(seen.insert(describe(c)).second);
            CHECK(validate_class(g, c) == c);
        }
        CHECK(!shapes.empty());
    }
    ShapeConstraints only_unipotent;
    only_unipotent.semisimple = false;
    for (auto& c : enumerate_class_shapes({Family::Sp, 6, 5}, only_unipotent)) CHECK(c.unipotent());
    CHECK_THROWS_AS(enumerate_class_shapes({Family::SL, 13, 0}), Error);
}

TEST_CASE("c value dominates every shape") {
    for (GroupSpec g : {GroupSpec{Family::Sp, 4, 5}, GroupSpec{Family::SL, 3, 0}, GroupSpec{Family::SO, 7, 3}}) {
        CValue cv = c_value(g);
        CHECK(cv.c == cv.witness_r * cv.witness_dim);
        for (auto& c : enumerate_class_shapes(g)) {
            int d = class_dim(g, c).dim_class;
            CHECK(min_generators(g, c) * d <= cv.c);
        }
    }
}

TEST_CASE("c value anchors") {
    CValue odd = c_value({Family::Sp, 4, 5});
    CHECK(odd.c == 20);
    CHECK(odd.witness_r == 5);
    auto sh = semisimple_shape(odd.witness, 5);
    CHECK(sh.a == 2);
    CHECK(sh.b == 2);
    CHECK(c_value({Family::Sp, 4, 2}).c == 20);
}
