#include "topogen/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace topogen {

const char* reason_name(Reason r) {
    switch (r) {
        case Reason::DimObstruction: return "DimObstruction";
        case Reason::SpChar2FixedVector: return "SpChar2FixedVector";
        case Reason::QuadraticPair: return "QuadraticPair";
        case Reason::TableRow: return "TableRow";
        case Reason::FamilyTheoremCase: return "FamilyTheoremCase";
        case Reason::Generic: return "Generic";
    }
    return "?";
}

namespace {

using Pred = std::function<bool(const ClassDescriptor&)>;

std::vector<int> parts(std::initializer_list<std::pair<int, int>> spec) {
    std::vector<int> out;
    for (auto [size, mult] : spec)
        for (int i = 0; i < mult; ++i) out.push_back(size);
    std::sort(out.rbegin(), out.rend());
    return out;
}

Pred unip(std::vector<int> part) {
    std::sort(part.rbegin(), part.rend());
    return [part](const ClassDescriptor& c) { return c.unipotent() && c.u.partition == part; };
}

Pred as_type(std::string t) {
    return [t](const ClassDescriptor& c) { return c.unipotent() && c.u.as_type == t; };
}

// Semisimple shape (a ones, b minus ones, pair multiplicities), optionally up to -1.
Pred ss(int p, int a, int b, std::vector<int> pm, bool up_to_sign) {
    std::sort(pm.rbegin(), pm.rend());
    return [=](const ClassDescriptor& c) {
        if (c.unipotent()) return false;
        auto sh = semisimple_shape(c, p);
        if (!sh.single_mults.empty() || sh.pair_mults != pm) return false;
        if (sh.a == a && sh.b == b) return true;
        return up_to_sign && sh.a == b && sh.b == a;
    };
}

Pred any_of(std::vector<Pred> ps) {
    return [ps](const ClassDescriptor& c) {
        for (auto& f : ps)
            if (f(c)) return true;
        return false;
    };
}

bool pair_match(const std::vector<ClassDescriptor>& x, const Pred& f, const Pred& g) {
    return x.size() == 2 && ((f(x[0]) && g(x[1])) || (f(x[1]) && g(x[0])));
}

bool all_match(const std::vector<ClassDescriptor>& x, const Pred& f) {
    return std::all_of(x.begin(), x.end(), f);
}

// Two classes satisfy f and the remaining one satisfies g.
bool triple_match(const std::vector<ClassDescriptor>& x, const Pred& f, const Pred& g) {
    if (x.size() != 3) return false;
    for (int odd = 0; odd < 3; ++odd) {
        bool ok = g(x[odd]);
        for (int i = 0; i < 3 && ok; ++i)
            if (i != odd && !f(x[i])) ok = false;
        if (ok) return true;
    }
    return false;
}

struct Hit {
    Reason reason;
    std::string id;
    std::string detail;
};

// Exceptions of the per-family theorems, evaluated after the generic obstructions.
std::optional<Hit> family_case(const GroupSpec& G, const std::vector<ClassDescriptor>& x,
                               const std::vector<EigenProfile>& pr) {
    int n = G.n, p = G.p;
    size_t r = x.size();
    if (G.family == Family::SL) {
        if (n == 2 && r == 2) {
            auto invol = [&](const ClassDescriptor& c) {
                if (c.unipotent()) return p == 2;
                return p != 2 && semisimple_shape(c, p).sq_minus_one;
            };
            if (invol(x[0]) && invol(x[1])) return Hit{Reason::FamilyTheoremCase, "SL2-involutions", ""};
        }
        return std::nullopt;
    }
    if (G.family == Family::SO && n % 2 == 0) {
        int m = n / 2;
        if (r != 2) return std::nullopt;
        Pred x1_ss = ss(p, 2, 0, {m - 1}, true);
        if (m % 2 == 1) {
            Pred x2 = p == 2 ? as_type("a" + std::to_string(m - 1)) : unip(parts({{2, m - 1}, {1, 2}}));
            if (pair_match(x, x1_ss, x2)) return Hit{Reason::TableRow, "SO2m-odd", "x1 semisimple"};
            if (p != 2 && pair_match(x, unip(parts({{3, 2}, {2, m - 3}})), x2))
                return Hit{Reason::TableRow, "SO2m-odd", "x1 unipotent"};
        } else {
            Pred x2 = p == 2 ? as_type("a" + std::to_string(m)) : unip(parts({{2, m}}));
            if (pair_match(x, x1_ss, x2)) return Hit{Reason::TableRow, "SO2m-even", "x1 semisimple"};
            if (p != 2 && pair_match(x, unip(parts({{3, 2}, {2, m - 4}, {1, 2}})), x2))
                return Hit{Reason::TableRow, "SO2m-even", "x1 (J3^2,J2^(m-4),J1^2)"};
            if (p != 2 && pair_match(x, unip(parts({{3, 1}, {2, m - 2}, {1, 1}})), x2))
                return Hit{Reason::TableRow, "SO2m-even", "x1 (J3,J2^(m-2),J1)"};
        }
        return std::nullopt;
    }
    if (G.family == Family::SO) {
        int m = (n - 1) / 2;
        Pred j2 = unip(parts({{2, m}, {1, 1}}));
        if (r == 3 && m == 2 && all_match(x, j2)) return Hit{Reason::TableRow, "SO5-r3", ""};
        if (r == 2 && m % 2 == 0 && pair_match(x, j2, ss(p, 1, 0, {m}, false)))
            return Hit{Reason::TableRow, "SO2m+1", ""};
        return std::nullopt;
    }
    if (G.family == Family::Sp && p != 2) {
        if (n == 4) {
            Pred inv = ss(p, 2, 2, {}, false);
            if (r == 2) {
                for (int i = 0; i < 2; ++i)
                    if (inv(x[i]) && pr[1 - i].d >= 2) return Hit{Reason::TableRow, "Sp4-r2", ""};
            }
            auto quad = [p](const ClassDescriptor& c) { return is_quadratic(c, p); };
            if (r == 3 && triple_match(x, inv, quad)) return Hit{Reason::TableRow, "Sp4-r3", ""};
            if (r == 4 && all_match(x, inv)) return Hit{Reason::TableRow, "Sp4-r4", ""};
        } else if (n == 6) {
            Pred inv = ss(p, 4, 2, {}, true);
            if (r == 2 && pair_match(x, inv, any_of({unip({3, 3}), ss(p, 2, 0, {2}, true)})))
                return Hit{Reason::FamilyTheoremCase, "Sp6-ii", ""};
            if (r == 3 && all_match(x, inv)) return Hit{Reason::TableRow, "Sp6-r3", ""};
        } else if (n == 8) {
            Pred inv4 = ss(p, 4, 4, {}, false);
            Pred inv2 = ss(p, 6, 2, {}, true);
            Pred x2 = any_of({ss(p, 4, 0, {1, 1}, true), ss(p, 4, 0, {2}, true), unip({3, 3, 1, 1})});
            if (r == 2 && pair_match(x, inv4, x2)) return Hit{Reason::FamilyTheoremCase, "Sp8-ii", ""};
            if (r == 3 && triple_match(x, inv2, inv4)) return Hit{Reason::TableRow, "Sp8-r3", ""};
        }
        return std::nullopt;
    }
    if (G.family == Family::Sp && p == 2 && n == 4) {
        Pred a2 = as_type("a2");
        auto quad = [p](const ClassDescriptor& c) { return is_quadratic(c, p); };
        if (r == 3 && triple_match(x, a2, quad)) return Hit{Reason::TableRow, "Sp4-p2-r3", ""};
        if (r == 4 && all_match(x, a2)) return Hit{Reason::TableRow, "Sp4-p2-r4", ""};
    }
    return std::nullopt;
}

Verdict decide_so6(const GroupSpec& G, const std::vector<ClassDescriptor>& x) {
    Verdict v;
    int r = static_cast<int>(x.size());
    GroupSpec sl4{Family::SL, 4, G.p};
    int sum_dw = 0;
    for (auto& c : x) {
        v.profiles.push_back(so6_transfer(c, G.p));
        v.sl4_profiles.push_back(eigen_profile(sl4, c));
        v.sum_d += v.profiles.back().d;
        v.sum_e += v.profiles.back().e;
        sum_dw += v.sl4_profiles.back().d;
    }
    v.bound = 6 * (r - 1);
    if (v.sum_d > v.bound) {
        v.empty = true;
        v.reason = Reason::DimObstruction;
        v.detail = "V";
        return v;
    }
    if (sum_dw > 4 * (r - 1)) {
        v.empty = true;
        v.reason = Reason::FamilyTheoremCase;
        v.case_id = r == 3 ? "SO6-i" : "SO6-iii";
        v.detail = "sum of d on the 4-dim module is " + std::to_string(sum_dw);
        return v;
    }
    if (r == 2 && is_quadratic(x[0], G.p) && is_quadratic(x[1], G.p)) {
        v.empty = true;
        v.reason = Reason::FamilyTheoremCase;
        v.case_id = "SO6-ii";
        return v;
    }
    return v;
}

Verdict decide_spin8(const GroupSpec& G, const std::vector<ClassDescriptor>& x,
                     const std::optional<std::vector<Spin8Profile>>& given) {
    Verdict v;
    int r = static_cast<int>(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        EigenProfile pr = eigen_profile(G, x[i]);
        Spin8Profile s{};
        if (given) {
            if (given->size() != x.size())
                throw Error(ErrorCode::SizeMismatch, "one Spin8 profile per class is required");
            s = (*given)[i];
            if (s[0] != pr.d)
                throw Error(ErrorCode::DimensionMismatch, "Spin8 profile disagrees with the natural module");
        } else {
            try {
                s = spin8_profile(x[i], G.p);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::OutsideCatalog) throw;
                throw Error(ErrorCode::MissingSpin8Profile, describe(x[i]) + " is outside the built-in catalog");
            }
        }
        pr.spin8 = s;
        v.profiles.push_back(pr);
        v.spin8.push_back(s);
        v.sum_d += pr.d;
        v.sum_e += pr.e;
    }
    v.bound = 8 * (r - 1);
    if (r >= 4) {
        v.detail = "r >= 4";
        return v;
    }
    static const char* names[3] = {"V1", "V3", "V4"};
    for (int j = 0; j < 3; ++j) {
        int s = 0;
        for (auto& t : v.spin8) s += t[j];
        if (s > v.bound) {
            v.empty = true;
            v.reason = Reason::DimObstruction;
            v.detail = names[j];
            v.sum_d = s;
            return v;
        }
    }
    if (r == 2) {
        bool q = is_quadratic(x[0], G.p) && is_quadratic(x[1], G.p);
        if (q) {
            v.empty = true;
            v.reason = Reason::QuadraticPair;
        }
        Pred inv = G.p == 2 ? as_type("c4") : ss(G.p, 4, 4, {}, false);
        if (inv(x[0]) && inv(x[1])) {
            v.empty = true;
            v.reason = Reason::QuadraticPair;
            v.case_id = G.p == 2 ? "Spin8-ii" : "Spin8-i";
        }
    }
    return v;
}

}  // namespace

namespace {

Verdict decide_validated(const GroupSpec& G, const std::vector<ClassDescriptor>& x,
                         const std::optional<std::vector<Spin8Profile>>& spin8_profiles) {
    int r = static_cast<int>(x.size());

    if (G.family == Family::SO && G.n == 6) return decide_so6(G, x);
    if (G.family == Family::Spin8 || (G.family == Family::SO && G.n == 8)) return decide_spin8(G, x, spin8_profiles);

    Verdict v;
    int n = G.n;
    for (auto& c : x) {
        v.profiles.push_back(eigen_profile(G, c));
        v.sum_d += v.profiles.back().d;
        v.sum_e += v.profiles.back().e;
    }
    v.bound = n * (r - 1);
    if (v.sum_d > v.bound) {
        v.empty = true;
        v.reason = Reason::DimObstruction;
        v.detail = "V";
        return v;
    }
    if (G.family == Family::Sp && G.p == 2 && v.sum_e >= v.bound) {
        v.empty = true;
        v.reason = Reason::SpChar2FixedVector;
        return v;
    }
    if (r == 2 && n >= 3 && is_quadratic(x[0], G.p) && is_quadratic(x[1], G.p)) {
        v.empty = true;
        v.reason = Reason::QuadraticPair;
        return v;
    }
    if (auto hit = family_case(G, x, v.profiles)) {
        v.empty = true;
        v.reason = hit->reason;
        v.case_id = hit->id;
        v.detail = hit->detail;
    }
    return v;
}

}  // namespace

Verdict decide(const GroupSpec& group, const std::vector<ClassDescriptor>& classes,
               const std::optional<std::vector<Spin8Profile>>& spin8_profiles) {
    GroupSpec G = validate_group(group);
    if (classes.size() < 2) throw Error(ErrorCode::SizeMismatch, "decide needs at least two classes");
    std::vector<ClassDescriptor> x;
    for (auto& c : classes) x.push_back(validate_class(G, c));
    Verdict v = decide_validated(G, x, spin8_profiles);
    // The adjoint-module inequality is necessary in every good characteristic; it also catches
    // SO2m pairs of the Table 1 shape that the tables do not list.
    if (v.empty || (G.family != Family::SL && G.p == 2)) return v;
    auto [dim, rank] = dim_and_rank(G);
    int z = (G.family == Family::SL && G.p > 0 && G.n % G.p == 0) ? 1 : 0;
    int lhs = 0;
    try {
        for (auto& c : x) lhs += class_dim(G, c).dim_class;
    } catch (const Error&) {
        return v;
    }
    if (lhs < dim + rank - z) {
        v.empty = true;
        v.reason = Reason::FamilyTheoremCase;
        v.case_id = "Scott";
        v.detail = "sum of class dimensions " + std::to_string(lhs) + " < " + std::to_string(dim + rank - z);
    }
    return v;
}

EigenProfile so6_transfer(const ClassDescriptor& c, int p) {
    EigenProfile pr;
    if (c.unipotent()) {
        pr.d = pr.e = wedge2_block_count(c.u.partition);
        return pr;
    }
    auto ev = eigenvalues(c, p);
    auto& rel = c.ss.relations;
    std::map<Mono, int> acc;
    for (size_t i = 0; i < ev.size(); ++i) {
        auto& [m, k] = ev[i];
        if (k >= 2) acc[reduce(mono_mul(m, m), rel, p)] += k * (k - 1) / 2;
        for (size_t j = i + 1; j < ev.size(); ++j) acc[reduce(mono_mul(m, ev[j].first), rel, p)] += k * ev[j].second;
    }
    for (auto& [m, k] : acc) {
        pr.d = std::max(pr.d, k);
        if (m.is_one()) pr.e = k;
    }
    return pr;
}

namespace {

Spin8Profile spin8_semisimple(const ClassDescriptor& c, int p) {
    // Torus coordinates t1..t4 on V1, written as exponent vectors over base symbols.
    auto& s = c.ss;
    auto& rel = s.relations;
    std::vector<std::string> bases{"-"};
    std::set<std::string> seen;
    std::vector<Mono> t;
    for (int i = 0; i < s.mult_one / 2; ++i) t.push_back(Mono{});
    for (int i = 0; i < s.mult_minus_one / 2; ++i) t.push_back(reduce(Mono{true, {}}, rel, p));
    for (auto& [lab, k] : s.pairs)
        for (int i = 0; i < k; ++i) t.push_back(reduce(parse_mono(lab), rel, p));
    if (t.size() != 4) throw Error(ErrorCode::DimensionMismatch, "SO8 semisimple class expected");
    // The two classes of a split pattern differ by inverting one torus coordinate.
    if (s.variant == Variant::minus) t.back() = reduce(mono_inv(t.back()), rel, p);
    // When some base has even order K, -1 is that base to the power K/2; folding the sign
    // into it keeps equal eigenvalues on a single exponent vector.
    std::string even_base;
    int even_order = 0;
    for (auto& m : t)
        for (auto& [b, e] : m.exps) {
            int k = relation_order(rel, b);
            if (k > 0 && k % 2 == 0 && even_base.empty()) {
                even_base = b;
                even_order = k;
            }
        }
    if (!even_base.empty())
        for (auto& x : t)
            if (x.neg) {
                x.neg = false;
                x.exps[even_base] += even_order / 2;
            }
    for (auto& m : t)
        for (auto& [b, e] : m.exps)
            if (seen.insert(b).second) bases.push_back(b);
    std::vector<int> order(bases.size(), 0);
    order[0] = 2;
    for (size_t j = 1; j < bases.size(); ++j) order[j] = relation_order(rel, bases[j]);
    auto vec = [&](const Mono& m) {
        std::vector<long> v(bases.size(), 0);
        v[0] = m.neg ? 1 : 0;
        for (size_t j = 1; j < bases.size(); ++j) {
            auto it = m.exps.find(bases[j]);
            if (it != m.exps.end()) v[j] = it->second;
        }
        return v;
    };
    // Exponents measured against square roots of the bases, of order 2K.
    auto red = [&](std::vector<long> v) {
        for (size_t j = 0; j < v.size(); ++j)
            if (order[j] > 0) {
                long m = 2L * order[j];
                v[j] = ((v[j] % m) + m) % m;
            }
        return v;
    };
    std::vector<std::vector<long>> a;
    for (auto& m : t) a.push_back(vec(m));
    std::map<std::vector<long>, int> v1, v3, v4;
    for (auto& ai : a) {
        std::vector<long> up(ai.size()), dn(ai.size());
        for (size_t j = 0; j < ai.size(); ++j) {
            up[j] = 2 * ai[j];
            dn[j] = -2 * ai[j];
        }
        ++v1[red(up)];
        ++v1[red(dn)];
    }
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<long> e(bases.size(), 0);
        int minus = 0;
        for (int i = 0; i < 4; ++i) {
            int sgn = (mask >> i) & 1 ? -1 : 1;
            if (sgn < 0) ++minus;
            for (size_t j = 0; j < e.size(); ++j) e[j] += sgn * a[i][j];
        }
        ++(minus % 2 == 0 ? v3 : v4)[red(e)];
    }
    auto mx = [](const std::map<std::vector<long>, int>& m) {
        int r = 0;
        for (auto& [k, c] : m) r = std::max(r, c);
        return r;
    };
    return {mx(v1), mx(v3), mx(v4)};
}

}  // namespace

Spin8Profile spin8_profile(const ClassDescriptor& c, int p) {
    if (!c.unipotent()) return spin8_semisimple(c, p);
    const auto& u = c.u;
    Variant var = u.variant;
    if (p == 2) {
        const std::string& t = u.as_type;
        if (t == "a2") return {6, 6, 6};
        if (t == "c2") return {6, 4, 4};
        if (t == "c4") return {4, 4, 4};
        if (t == "a4" && var == Variant::plus) return {4, 6, 4};
        if (t == "a4" && var == Variant::minus) return {4, 4, 6};
        throw Error(ErrorCode::OutsideCatalog, "no Spin8 profile for " + describe(c));
    }
    auto is = [&](std::vector<int> q) { return u.partition == q; };
    if (is({2, 2, 1, 1, 1, 1})) return {6, 6, 6};
    if (is({3, 1, 1, 1, 1, 1})) return {6, 4, 4};
    if (is({2, 2, 2, 2}) && var == Variant::plus) return {4, 6, 4};
    if (is({2, 2, 2, 2}) && var == Variant::minus) return {4, 4, 6};
    if (is({3, 2, 2, 1}) || is({3, 3, 1, 1})) return {4, 4, 4};
    if (is({5, 1, 1, 1})) return {4, 2, 2};
    if (is({4, 4}) && var == Variant::plus) return {2, 4, 2};
    if (is({4, 4}) && var == Variant::minus) return {2, 2, 4};
    if (is({5, 3}) || is({7, 1})) return {2, 2, 2};
    throw Error(ErrorCode::OutsideCatalog, "no Spin8 profile for " + describe(c));
}

ScottBound scott_lower_bound(const GroupSpec& group, const std::vector<ClassDescriptor>& classes) {
    GroupSpec G = validate_group(group);
    if (G.family != Family::SL && G.p == 2)
        throw Error(ErrorCode::BadCharacteristic, "p = 2 is bad for symplectic and orthogonal groups");
    auto [dim, rank] = dim_and_rank(G);
    int z = (G.family == Family::SL && G.p > 0 && G.n % G.p == 0) ? 1 : 0;
    ScottBound s;
    for (auto& c : classes) s.lhs += class_dim(G, validate_class(G, c)).dim_class;
    s.rhs = dim + rank - z;
    s.holds = s.lhs >= s.rhs;
    return s;
}

int min_generators(const GroupSpec& group, const ClassDescriptor& c) {
    GroupSpec G = validate_group(group);
    ClassDescriptor v = validate_class(G, c);
    for (int r = 2; r <= G.n + 1; ++r) {
        std::vector<ClassDescriptor> xs(r, v);
        if (!decide(G, xs).empty) return r;
    }
    throw std::logic_error("no generating tuple found up to n+1 conjugates");
}

std::optional<std::string> table_row(const GroupSpec& group, const std::vector<ClassDescriptor>& classes) {
    GroupSpec G = validate_group(group);
    std::vector<ClassDescriptor> x;
    for (auto& c : classes) x.push_back(validate_class(G, c));
    int n = G.n, p = G.p;
    size_t r = x.size();
    if (r == 2) {
        if (G.family == Family::SO && n % 2 == 0 && n >= 10) {
            int m = n / 2;
            if (m % 2 == 1) {
                // x2 = (J2^(m-1), J1^2), an a-type involution when p = 2
                Pred x2 = p == 2 ? as_type("a" + std::to_string(m - 1)) : unip(parts({{2, m - 1}, {1, 2}}));
                std::vector<Pred> x1{ss(p, 2, 0, {m - 1}, true)};
                if (p != 2) x1.push_back(unip(parts({{3, 2}, {2, m - 3}})));
                if (pair_match(x, any_of(x1), x2)) return "SO2m-odd";
            } else {
                Pred x2 = p == 2 ? as_type("a" + std::to_string(m)) : unip(parts({{2, m}}));
                std::vector<Pred> x1{ss(p, 2, 0, {m - 1}, true)};
                if (p != 2) {
                    x1.push_back(unip(parts({{3, 2}, {2, m - 4}, {1, 2}})));
                    x1.push_back(unip(parts({{3, 1}, {2, m - 2}, {1, 1}})));
                }
                if (pair_match(x, any_of(x1), x2)) return "SO2m-even";
            }
        }
        if (G.family == Family::SO && n % 2 == 1) {
            int m = (n - 1) / 2;
            if (m >= 2 && m % 2 == 0 &&
                pair_match(x, ss(p, 1, 0, {m}, false), unip(parts({{2, m}, {1, 1}}))))
                return "SO2m+1";
        }
        if (G.family == Family::Sp && n == 4 && p != 2) {
            Pred inv = ss(p, 2, 2, {}, false);
            for (int i = 0; i < 2; ++i)
                if (inv(x[i]) && eigen_profile(G, x[1 - i]).d >= 2) return "Sp4-r2";
        }
        return std::nullopt;
    }
    if (G.family == Family::SO && n == 5 && r == 3 && all_match(x, unip({2, 2, 1}))) return "SO5-r3";
    if (G.family == Family::Sp && p != 2) {
        if (n == 8 && r == 3 && triple_match(x, ss(p, 6, 2, {}, true), ss(p, 4, 4, {}, false)))
            return "Sp8-r3";
        if (n == 6 && r == 3 && all_match(x, ss(p, 4, 2, {}, true))) return "Sp6-r3";
        if (n == 4) {
            Pred inv = ss(p, 2, 2, {}, false);
            auto quad = [p](const ClassDescriptor& c) { return is_quadratic(c, p); };
            if (r == 3 && triple_match(x, inv, quad)) return "Sp4-r3";
            if (r == 4 && all_match(x, inv)) return "Sp4-r4";
        }
    }
    if (G.family == Family::Sp && p == 2 && n == 4) {
        auto quad = [p](const ClassDescriptor& c) { return is_quadratic(c, p); };
        if (r == 3 && triple_match(x, as_type("a2"), quad)) return "Sp4-p2-r3";
        if (r == 4 && all_match(x, as_type("a2"))) return "Sp4-p2-r4";
    }
    return std::nullopt;
}

}  // namespace topogen
