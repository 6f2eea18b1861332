#include "topogen/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace topogen {

namespace {

int sum_sq(const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += x * x;
    return s;
}

bool unip_is(const ClassDescriptor& c, std::vector<int> part) {
    std::sort(part.rbegin(), part.rend());
    return c.unipotent() && c.u.partition == part;
}

// Semisimple shape match in Sp/SO, optionally up to multiplication by -1.
bool ss_is(const ClassDescriptor& c, int p, int a, int b, std::vector<int> pm, bool up_to_sign) {
    if (c.unipotent()) return false;
    auto sh = semisimple_shape(c, p);
    std::sort(pm.rbegin(), pm.rend());
    if (!sh.single_mults.empty() || sh.pair_mults != pm) return false;
    if (sh.a == a && sh.b == b) return true;
    return up_to_sign && sh.a == b && sh.b == a;
}

std::vector<int> levi_partition(const ClassDescriptor& c, int p) {
    // Partition of g on a maximal totally isotropic subspace W when g lies in GL(W).
    std::vector<int> mu;
    if (p == 2) {
        for (auto& b : c.u.decoration) {
            if (b.kind == 'V') return {};
            for (int i = 0; i < b.mult; ++i) mu.push_back(b.size);
        }
    } else {
        std::map<int, int> m;
        for (int x : c.u.partition) ++m[x];
        for (auto& [x, k] : m) {
            if (k % 2) return {};
            for (int i = 0; i < k / 2; ++i) mu.push_back(x);
        }
    }
    std::sort(mu.rbegin(), mu.rend());
    return mu;
}

int char2_centralizer(const GroupSpec& D, const ClassDescriptor& c) {
    int n = D.n;
    const auto& u = c.u;
    int dimG = D.family == Family::Sp ? n * (n + 1) / 2 : n * (n - 1) / 2;
    if (!u.as_type.empty()) {
        char t = u.as_type[0];
        int s = std::stoi(u.as_type.substr(1));
        int dc = 0;
        if (D.family == Family::Sp)
            dc = t == 'a' ? s * (n - s) : s * (n - s + 1);
        else
            dc = t == 'a' ? s * (n - s - 1) : s * (n - s);
        return dimG - dc;
    }
    auto mu = levi_partition(c, 2);
    if (mu.empty())
        throw Error(ErrorCode::UnsupportedChar2Class,
                    "no dimension rule for decorated class " + describe(c));
    int levi = sum_sq(conjugate(mu));
    if (D.family == Family::Sp) return levi + 2 * sym2_fixed_dim(mu, 2);
    return levi + 2 * wedge2_block_count(mu);
}

}  // namespace

EigenProfile eigen_profile(const GroupSpec& group, const ClassDescriptor& c) {
    GroupSpec D = descriptor_group(validate_group(group));
    EigenProfile pr;
    if (c.unipotent()) {
        pr.d = pr.e = static_cast<int>(c.u.partition.size());
        return pr;
    }
    for (auto& [m, k] : eigenvalues(c, D.p)) {
        pr.d = std::max(pr.d, k);
        if (m.is_one()) pr.e = k;
    }
    return pr;
}

bool is_quadratic(const ClassDescriptor& c, int p) {
    if (c.unipotent()) return !c.u.partition.empty() && c.u.partition[0] == 2;
    return eigenvalues(c, p).size() == 2;
}

ClassDim class_dim(const GroupSpec& group, const ClassDescriptor& c) {
    GroupSpec D = descriptor_group(validate_group(group));
    int dimG = dim_and_rank(D).first;
    int cent = 0;
    if (!c.unipotent()) {
        if (D.family == Family::SL) {
            cent = -1;
            for (auto& [m, k] : eigenvalues(c, D.p)) cent += k * k;
        } else {
            auto sh = semisimple_shape(c, D.p);
            int a = sh.a, b = sh.b;
            cent = D.family == Family::Sp ? a * (a + 1) / 2 + b * (b + 1) / 2
                                          : a * (a - 1) / 2 + b * (b - 1) / 2;
            cent += sum_sq(sh.pair_mults);
        }
    } else if (D.p == 2 && D.family != Family::SL) {
        cent = char2_centralizer(D, c);
    } else {
        auto lc = conjugate(c.u.partition);
        int o = 0;
        for (int x : c.u.partition)
            if (x % 2) ++o;
        int s = sum_sq(lc);
        if (D.family == Family::SL)
            cent = s - 1;
        else if (D.family == Family::Sp)
            cent = (s + o) / 2;
        else
            cent = (s - o) / 2;
    }
    return {dimG - cent, cent};
}

int induced_block_count(InducedKind kind, int a, int b, int p) {
    switch (kind) {
        case InducedKind::tensor: return std::min(a, b);
        case InducedKind::wedge2: return a / 2;
        case InducedKind::sym2: return (a + 1) / 2 + ((a % 2 == 0 && p == 2) ? 1 : 0);
    }
    return 0;
}

int wedge2_block_count(const std::vector<int>& part) {
    int s = 0;
    for (size_t i = 0; i < part.size(); ++i) {
        s += induced_block_count(InducedKind::wedge2, part[i]);
        for (size_t j = i + 1; j < part.size(); ++j) s += std::min(part[i], part[j]);
    }
    return s;
}

int sym2_fixed_dim(const std::vector<int>& part, int p) {
    int s = 0;
    for (size_t i = 0; i < part.size(); ++i) {
        s += induced_block_count(InducedKind::sym2, part[i], 0, p);
        for (size_t j = i + 1; j < part.size(); ++j) s += std::min(part[i], part[j]);
    }
    return s;
}

Wedge2Fixed wedge2_fixed_dim(int n, const ClassDescriptor& c, int p) {
    Wedge2Fixed w;
    if (c.unipotent()) {
        int total = std::accumulate(c.u.partition.begin(), c.u.partition.end(), 0);
        if (total != n) throw Error(ErrorCode::DimensionMismatch, "partition does not sum to n");
        if (p == 2 && !c.u.partition.empty() && c.u.partition[0] > 2)
            throw Error(ErrorCode::Unsupported, "characteristic 2 unipotent that is not an involution");
        int d = static_cast<int>(c.u.partition.size());
        w.upper = d * (n / 2);
        w.exact = wedge2_block_count(c.u.partition);
        return w;
    }
    auto ev = eigenvalues(c, p);
    int total = 0, d = 0;
    bool has_one = false, has_minus = false;
    Mono minus_one{p != 2, {}};
    for (auto& [m, k] : ev) {
        total += k;
        d = std::max(d, k);
        if (m.is_one()) has_one = true;
        if (m == minus_one && p != 2) has_minus = true;
    }
    if (total != n) throw Error(ErrorCode::DimensionMismatch, "eigenvalue multiplicities do not sum to n");
    w.upper = d * (n / 2);
    if (has_one && has_minus) w.upper = std::min(w.upper, (d * (n - 1) - 1) / 2);
    auto& rel = c.ss.relations;
    int ex = 0;
    for (size_t i = 0; i < ev.size(); ++i) {
        auto& [mi, ki] = ev[i];
        if (reduce(mono_mul(mi, mi), rel, p).is_one()) ex += ki * (ki - 1) / 2;
        for (size_t j = i + 1; j < ev.size(); ++j)
            if (reduce(mono_mul(mi, ev[j].first), rel, p).is_one()) ex += ki * ev[j].second;
    }
    w.exact = ex;
    return w;
}

std::optional<int> grassmannian_fixed_dim(const GroupSpec& group, const ClassDescriptor& c, int k,
                                          SubspaceType type, Sp6Variety variety) {
    GroupSpec G = validate_group(group);
    int n = G.n, p = G.p;
    if (type != SubspaceType::totally_singular) return std::nullopt;

    if (G.family == Family::SO && n == 9 && k == 4) {
        if (unip_is(c, {3, 3, 3})) return 3;
        if (ss_is(c, p, 3, 0, {3}, false)) return 3;
        if (unip_is(c, {2, 2, 2, 2, 1})) return 6;
        return std::nullopt;
    }
    if (G.family == Family::Sp && n == 6 && k == 3 && p != 2) {
        bool x1 = variety == Sp6Variety::X1;
        if (ss_is(c, p, 4, 2, {}, true)) return x1 ? 4 : 8;
        if (unip_is(c, {2, 1, 1, 1, 1}) || unip_is(c, {2, 2, 2})) {
            if (x1) return 3;
            return -1;  // no fixed points
        }
        if (unip_is(c, {2, 2, 1, 1}) || ss_is(c, p, 4, 0, {1}, true)) return x1 ? 3 : 6;
        if (ss_is(c, p, 0, 0, {3}, false)) {
            if (x1) return 2;
            return 4 + (semisimple_shape(c, p).sq_minus_one ? 2 : 0);
        }
        if (unip_is(c, {3, 3})) return x1 ? 2 : 4;
        if (!x1) return std::nullopt;
    }
    if (G.family == Family::Sp && n == 8 && k == 4 && p != 2) {
        if (ss_is(c, p, 6, 2, {}, true)) return 7;
        if (ss_is(c, p, 4, 4, {}, false)) return 6;
        if (unip_is(c, {3, 3, 1, 1})) return 4;
        if (unip_is(c, {3, 3, 2})) return 3;
    }
    if (G.family == Family::Sp && k == n / 2 && c.unipotent()) {
        auto mu = levi_partition(c, p);
        if (!mu.empty()) return sym2_fixed_dim(mu, p);
    }
    return std::nullopt;
}

}  // namespace topogen
