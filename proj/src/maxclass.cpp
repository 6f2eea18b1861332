#include "topogen/maxclass.hpp"

#include <functional>
#include <numeric>
#include <set>

#include "topogen/closure.hpp"
#include "topogen/invariants.hpp"

namespace topogen {

QContext make_context(int r, int i, int p) {
    if (!is_prime(r)) throw Error(ErrorCode::ParseError, "r must be prime");
    QContext c;
    c.r = r;
    c.is_p = r == p;
    if (c.is_p) {
        c.i = 1;
        c.t = r - 1;
        return c;
    }
    if (r == 2) {
        c.i = c.t = 1;
        return c;
    }
    if (i < 1 || (r - 1) % i != 0) throw Error(ErrorCode::ParseError, "i must divide r - 1");
    c.i = i;
    c.t = (r - 1) / i;
    return c;
}

namespace {

int powmod(long long b, long long e, long long m) {
    long long r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return static_cast<int>(r);
}

int primitive_root(int r) {
    for (int g = 2; g < r; ++g) {
        bool ok = true;
        int phi = r - 1;
        for (int f = 2; f * f <= phi && ok; ++f)
            if (phi % f == 0) {
                if (powmod(g, (r - 1) / f, r) == 1) ok = false;
                while (phi % f == 0) phi /= f;
            }
        if (ok && phi > 1 && powmod(g, (r - 1) / phi, r) == 1) ok = false;
        if (ok) return g;
    }
    return 1;  // r = 2
}

// Orbit classes of primitive r-th roots: each entry lists the exponents carried by one class.
// For Sp/SO the list holds one exponent per inverse pair; for SL every exponent.
std::vector<std::vector<int>> orbit_classes(int r, int i, bool paired) {
    int t = (r - 1) / i;
    int g = primitive_root(r);
    std::vector<std::vector<int>> cosets;
    for (int j = 0; j < t; ++j) {
        std::vector<int> c;
        for (int k = 0; k < i; ++k) c.push_back(powmod(g, j + static_cast<long long>(k) * t, r));
        std::sort(c.begin(), c.end());
        cosets.push_back(c);
    }
    if (!paired) return cosets;
    std::vector<std::vector<int>> out;
    std::set<int> used;
    for (auto& c : cosets) {
        if (used.count(c[0])) continue;
        std::vector<int> reps;
        for (int e : c) {
            used.insert(e);
            used.insert(r - e);
            if (i % 2 == 0) {
                if (e < r - e) reps.push_back(e);
            } else {
                reps.push_back(e);
            }
        }
        out.push_back(reps);
    }
    return out;
}

void multisets(int total, int max_part, int slots, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (total == 0) {
        if (!cur.empty()) out.push_back(cur);
        return;
    }
    if (slots == 0) return;
    for (int x = std::min(total, max_part); x >= 1; --x) {
        cur.push_back(x);
        multisets(total - x, x, slots - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

ClassDescriptor orbit_class(const GroupSpec& group, const QContext& ctx, const std::vector<int>& mults) {
    GroupSpec G = validate_group(group);
    GroupSpec D = descriptor_group(G);
    if (ctx.is_p || ctx.r == 2) throw Error(ErrorCode::NotApplicable, "orbit classes need an odd r different from p");
    bool paired = D.family != Family::SL;
    auto orbits = orbit_classes(ctx.r, ctx.i, paired);
    if (mults.size() > orbits.size()) throw Error(ErrorCode::Infeasible, "more orbit multiplicities than orbits");
    ClassDescriptor c;
    c.kind = Kind::Semisimple;
    c.ss.relations["z"] = "ord=" + std::to_string(ctx.r);
    int used = 0;
    for (size_t j = 0; j < mults.size(); ++j) {
        if (mults[j] == 0) continue;
        for (int e : orbits[j]) {
            std::string lab = e == 1 ? "z" : "z^" + std::to_string(e);
            (paired ? c.ss.pairs : c.ss.singles).push_back({lab, mults[j]});
            used += (paired ? 2 : 1) * mults[j];
        }
    }
    if (used > D.n) throw Error(ErrorCode::Infeasible, "orbit multiplicities exceed the dimension");
    c.ss.mult_one = D.n - used;
    c.order = ctx.r;
    return validate_class(G, c);
}

std::vector<ClassDescriptor> order_r_classes(const GroupSpec& group, const QContext& ctx) {
    GroupSpec G = validate_group(group);
    GroupSpec D = descriptor_group(G);
    int n = D.n;
    std::vector<ClassDescriptor> out;
    auto keep = [&](const std::function<ClassDescriptor()>& make) {
        try {
            out.push_back(make());
        } catch (const Error& e) {
            if (is_validation_error(e.code()) || e.code() == ErrorCode::Infeasible) return;
            throw;
        }
    };
    if (ctx.is_p) {
        if (D.p != ctx.r) throw Error(ErrorCode::Infeasible, "context says r = p but the group disagrees");
        return unipotent_classes(G, true);
    }
    if (ctx.r == D.p) throw Error(ErrorCode::Infeasible, "r equals the characteristic but the context says otherwise");
    if (ctx.r == 2) {
        bool so_odd = D.family == Family::SO && n % 2;
        int step = D.family == Family::SL ? 1 : 2;
        for (int b = step; b < n; b += step) {
            if (!so_odd && b > n - b) break;
            keep([&] {
                ClassDescriptor c = semisimple(n - b, b);
                c.order = 2;
                return validate_class(G, c);
            });
        }
        if (D.family != Family::SL && n % 2 == 0)
            keep([&] {
                ClassDescriptor c = semisimple(0, 0, {{"i", n / 2}}, {{"i", "sq=-1"}});
                c.order = 2;
                return validate_class(G, c);
            });
        return out;
    }
    bool paired = D.family != Family::SL;
    auto orbits = orbit_classes(ctx.r, ctx.i, paired);
    int block = paired ? 2 * static_cast<int>(orbits[0].size()) : ctx.i;
    for (int k = 1; k * block <= n; ++k) {
        std::vector<std::vector<int>> ms;
        std::vector<int> cur;
        multisets(k, k, static_cast<int>(orbits.size()), cur, ms);
        for (auto& m : ms) keep([&] { return orbit_class(G, ctx, m); });
    }
    return out;
}

MaxClass max_class(const GroupSpec& group, const QContext& ctx) {
    GroupSpec G = validate_group(group);
    MaxClass res;
    res.dim = -1;
    for (auto& c : order_r_classes(G, ctx)) {
        int dim;
        try {
            dim = class_dim(G, c).dim_class;
        } catch (const Error&) {
            continue;
        }
        ++res.candidates;
        if (dim > res.dim) {
            res.dim = dim;
            res.all.clear();
        }
        if (dim == res.dim) res.all.push_back(c);
    }
    if (res.all.empty()) throw Error(ErrorCode::Infeasible, "no class of order r is consistent with the context");
    res.cls = res.all.front();
    return res;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational rs_limit(Family family, int n, int p, int r, int s) {
    if (!is_prime(r) || !is_prime(s) || s <= 2)
        throw Error(ErrorCode::NotApplicable, "r must be prime and s an odd prime");
    if (p != 0 && !is_prime(p)) throw Error(ErrorCode::ParseError, "characteristic must be 0 or prime");
    if (family == Family::Sp && n == 4) {
        if (r == 2 && s == 3) return (p == 2 || p == 3) ? Rational{0, 1} : Rational{1, 2};
        if (r == 3 && s == 3) {
            if (p == 3) return {0, 1};
            if (p == 2) return {1, 2};
            return {3, 4};
        }
    }
    return {1, 1};
}

}  // namespace topogen
