#include <doctest.h>

#include "topogen/invariants.hpp"
#include "topogen/maxclass.hpp"

using namespace topogen;

namespace {

int dim_of(const GroupSpec& g, const ClassDescriptor& c) { return class_dim(g, c).dim_class; }

}  // namespace

TEST_CASE("contexts") {
    auto c = make_context(7, 3, 0);
    CHECK(c.t == 2);
    CHECK_FALSE(c.is_p);
    CHECK(make_context(5, 1, 5).is_p);
    CHECK_THROWS_AS(make_context(9, 1, 0), Error);
    CHECK_THROWS_AS(make_context(7, 4, 0), Error);
}

TEST_CASE("symplectic exchange step raises the class dimension by i(e - a1 - i/2)") {
    struct Ctx {
        int r, i;
    };
    for (int n : {8, 10, 12})
        for (Ctx rc : {Ctx{5, 2}, Ctx{5, 4}, Ctx{7, 2}, Ctx{13, 4}, Ctx{13, 6}}) {
            GroupSpec g{Family::Sp, n, 0};
            QContext ctx = make_context(rc.r, rc.i, 0);
            int i = ctx.i;
            for (int a1 = 0; a1 * i <= n; ++a1)
                for (int a2 = 0; (a1 + a2) * i <= n; ++a2) {
                    std::vector<int> m{a1};
                    if (ctx.t > 1) m.push_back(a2);
                    else if (a2) continue;
                    int used = (a1 + (ctx.t > 1 ? a2 : 0)) * i;
                    int e = n - used;
                    if (used == 0 || e < i) continue;
                    auto x = orbit_class(g, ctx, m);
                    auto ym = m;
                    ++ym[0];
                    auto y = orbit_class(g, ctx, ym);
                    CHECK(2 * (dim_of(g, y) - dim_of(g, x)) == i * (2 * (e - a1) - i));
                }
        }
}

TEST_CASE("orthogonal exchange step raises the class dimension by 2i(e - a1 - i - 1)") {
    struct Ctx {
        int r, i;
    };
    for (int n : {10, 12})
        for (Ctx rc : {Ctx{7, 3}, Ctx{7, 1}, Ctx{11, 5}, Ctx{5, 1}}) {
            GroupSpec g{Family::SO, n, 0};
            QContext ctx = make_context(rc.r, rc.i, 0);
            int i = ctx.i;
            for (int a1 = 0; 2 * a1 * i <= n; ++a1) {
                int e = n - 2 * a1 * i;
                if (a1 == 0 || e < 2 * i) continue;
                auto x = orbit_class(g, ctx, {a1});
                auto y = orbit_class(g, ctx, {a1 + 1});
                CHECK(dim_of(g, y) - dim_of(g, x) == 2 * i * (e - a1 - i - 1));
            }
        }
}

TEST_CASE("largest classes of prime order") {
    auto so10 = max_class({Family::SO, 10, 2}, make_context(2, 1, 2));
    CHECK(so10.cls.u.as_type == "c4");
    CHECK(eigen_profile({Family::SO, 10, 2}, so10.cls).d == 6);
    auto sp8 = max_class({Family::Sp, 8, 3}, make_context(2, 1, 3));
    CHECK(sp8.dim == 8 * 10 / 4);
    CHECK(eigen_profile({Family::Sp, 8, 3}, sp8.cls).d == 4);
    auto so10u = max_class({Family::SO, 10, 3}, make_context(3, 1, 3));
    CHECK(so10u.cls.u.partition == std::vector<int>{3, 3, 3, 1});
    auto sp6u = max_class({Family::Sp, 6, 3}, make_context(3, 1, 3));
    CHECK(sp6u.cls.u.partition == std::vector<int>{3, 3});
    auto sp4 = max_class({Family::Sp, 4, 0}, make_context(5, 4, 0));
    CHECK(eigen_profile({Family::Sp, 4, 0}, sp4.cls).d == 1);
    for (auto& c : sp4.all) CHECK(dim_of({Family::Sp, 4, 0}, c) == sp4.dim);
}

TEST_CASE("generation probability limits") {
    CHECK(rs_limit(Family::Sp, 4, 5, 2, 3) == Rational{1, 2});
    CHECK(rs_limit(Family::Sp, 4, 2, 2, 3) == Rational{0, 1});
    CHECK(rs_limit(Family::Sp, 4, 3, 2, 3) == Rational{0, 1});
    CHECK(rs_limit(Family::Sp, 4, 3, 3, 3) == Rational{0, 1});
    CHECK(rs_limit(Family::Sp, 4, 2, 3, 3) == Rational{1, 2});
    CHECK(rs_limit(Family::Sp, 4, 7, 3, 3) == Rational{3, 4});
    CHECK(rs_limit(Family::Sp, 4, 7, 2, 5) == Rational{1, 1});
    CHECK(rs_limit(Family::SO, 9, 3, 2, 3) == Rational{1, 1});
    CHECK(rs_limit(Family::Sp, 4, 7, 3, 3).str() == "3/4");
    CHECK_THROWS_AS(rs_limit(Family::Sp, 4, 7, 2, 2), Error);
    CHECK_THROWS_AS(rs_limit(Family::Sp, 4, 7, 4, 3), Error);
}
