#include "topogen/closure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "topogen/invariants.hpp"

namespace topogen {

bool dominates(const std::vector<int>& a, const std::vector<int>& b) {
    int sa = std::accumulate(a.begin(), a.end(), 0);
    int sb = std::accumulate(b.begin(), b.end(), 0);
    if (sa != sb) throw Error(ErrorCode::SizeMismatch, "partitions of different integers");
    auto x = a, y = b;
    std::sort(x.rbegin(), x.rend());
    std::sort(y.rbegin(), y.rend());
    int px = 0, py = 0;
    for (size_t i = 0; i < std::max(x.size(), y.size()); ++i) {
        px += i < x.size() ? x[i] : 0;
        py += i < y.size() ? y[i] : 0;
        if (px < py) return false;
    }
    return true;
}

namespace {

// A characteristic 2 decomposition: V sizes (each entry one V(2m) summand) and
// W sizes (each entry one W(l) summand, i.e. two Jordan blocks of size l).
struct Deco {
    std::vector<int> v;
    std::vector<int> w;

    auto operator<=>(const Deco&) const = default;
};

Deco normalize(Deco d) {
    std::sort(d.v.rbegin(), d.v.rend());
    // V(2k)^3 is V(2k) + W(2k).
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 2 < d.v.size(); ++i) {
            if (d.v[i] == d.v[i + 2]) {
                int s = d.v[i];
                d.v.erase(d.v.begin() + i + 1, d.v.begin() + i + 3);
                d.w.push_back(s);
                changed = true;
                break;
            }
        }
    }
    std::sort(d.w.rbegin(), d.w.rend());
    return d;
}

Deco to_deco(const ClassDescriptor& c) {
    Deco d;
    for (auto& b : c.u.decoration)
        for (int i = 0; i < b.mult; ++i) (b.kind == 'V' ? d.v : d.w).push_back(b.size);
    return normalize(d);
}

std::vector<Deco> moves(const Deco& d, bool allow_single_v) {
    std::vector<Deco> out;
    auto push = [&](Deco x) {
        x.v.erase(std::remove(x.v.begin(), x.v.end(), 0), x.v.end());
        out.push_back(normalize(std::move(x)));
    };
    size_t nv = d.v.size();
    for (size_t i = 0; i < nv; ++i) {
        for (size_t j = i + 1; j < nv; ++j) {
            int m1 = d.v[i] / 2, m2 = d.v[j] / 2;
            if (m1 - m2 >= 2) {
                Deco x = d;
                x.v[i] -= 2;
                x.v[j] += 2;
                push(x);
            }
            Deco y = d;
            y.v.erase(y.v.begin() + j);
            y.v.erase(y.v.begin() + i);
            y.w.push_back(m1 + m2);
            push(y);
        }
        if (allow_single_v) {
            // Pair with an empty V(0) summand.
            int m1 = d.v[i] / 2;
            if (m1 >= 2) {
                Deco x = d;
                x.v[i] -= 2;
                x.v.push_back(2);
                push(x);
            }
            Deco y = d;
            y.v.erase(y.v.begin() + i);
            y.w.push_back(m1);
            push(y);
        }
    }
    // Elementary dominance moves on the W part.
    size_t nw = d.w.size();
    for (size_t i = 0; i < nw; ++i) {
        if (d.w[i] >= 2) {
            Deco x = d;
            x.w[i] -= 1;
            x.w.push_back(1);
            push(x);
        }
        for (size_t j = i + 1; j < nw; ++j) {
            if (d.w[i] - d.w[j] >= 2) {
                Deco x = d;
                x.w[i] -= 1;
                x.w[j] += 1;
                push(x);
            }
        }
    }
    return out;
}

bool char2_reachable(const Deco& from, const Deco& to, bool allow_single_v) {
    std::set<Deco> seen{from};
    std::deque<Deco> q{from};
    while (!q.empty()) {
        Deco d = q.front();
        q.pop_front();
        if (d == to) return true;
        for (auto& x : moves(d, allow_single_v))
            if (seen.insert(x).second) q.push_back(x);
    }
    return false;
}

Variant variant_of(const ClassDescriptor& c) {
    return c.unipotent() ? c.u.variant : c.ss.variant;
}

}  // namespace

bool in_closure(const GroupSpec& group, const ClassDescriptor& upper, const ClassDescriptor& lower) {
    if (!upper.unipotent() || !lower.unipotent())
        throw Error(ErrorCode::MixedKinds, "closure order is defined on unipotent classes");
    GroupSpec D = descriptor_group(validate_group(group));
    if (upper.u.partition == lower.u.partition && upper.u.decoration == lower.u.decoration) {
        Variant a = variant_of(upper), b = variant_of(lower);
        return a == b || a == Variant::unspecified || b == Variant::unspecified;
    }
    if (D.p == 2 && D.family != Family::SL) {
        if (!dominates(upper.u.partition, lower.u.partition)) return false;
        return char2_reachable(to_deco(upper), to_deco(lower), D.family == Family::Sp);
    }
    return dominates(upper.u.partition, lower.u.partition);
}

bool splits_in_G(const GroupSpec& group, const ClassDescriptor& c) {
    GroupSpec G = validate_group(group);
    GroupSpec D = descriptor_group(G);
    if (D.family != Family::SO) throw Error(ErrorCode::NotApplicable, "class splitting concerns SO");
    if (D.n % 2) return false;
    if (!c.unipotent()) return c.ss.mult_one == 0 && c.ss.mult_minus_one == 0;
    if (D.p == 2) {
        for (auto& b : c.u.decoration)
            if (b.kind == 'V' || b.size % 2) return false;
        return true;
    }
    for (int x : c.u.partition)
        if (x % 2) return false;
    return true;
}

namespace {

bool admissible(Family f, const std::vector<int>& part) {
    std::map<int, int> m;
    for (int x : part) ++m[x];
    for (auto& [x, k] : m) {
        if (f == Family::Sp && x % 2 == 1 && k % 2) return false;
        if (f == Family::SO && x % 2 == 0 && k % 2) return false;
    }
    return true;
}

std::vector<int> near_rectangular(int n, int m) {
    std::vector<int> out;
    for (int i = 0; i < m; ++i) out.push_back(n / m + (i < n % m ? 1 : 0));
    return out;
}

void gen_v(int rest, int size, std::vector<DecoBlock>& cur, int cap,
           std::vector<std::vector<DecoBlock>>& out) {
    // Choose V(size)^a for size = 2,4,...; then W-part as partition of rest/2.
    if (size > rest || size > cap) {
        if (rest % 2 == 0) {
            int half = rest / 2;
            if (half == 0) {
                out.push_back(cur);
                return;
            }
            for (auto& mu : partitions_of(half, cap)) {
                std::vector<DecoBlock> d = cur;
                std::map<int, int> m;
                for (int x : mu) ++m[x];
                for (auto it = m.rbegin(); it != m.rend(); ++it) d.push_back({'W', it->first, it->second});
                out.push_back(d);
            }
        }
        return;
    }
    for (int a = 0; a <= 2 && a * size <= rest; ++a) {
        if (a) cur.push_back({'V', size, a});
        gen_v(rest - a * size, size + 2, cur, cap, out);
        if (a) cur.pop_back();
    }
}

}  // namespace

std::vector<ClassDescriptor> unipotent_classes(const GroupSpec& group, bool prime_order) {
    GroupSpec G = validate_group(group);
    GroupSpec D = descriptor_group(G);
    int n = D.n, p = D.p;
    int cap = (prime_order && p > 0) ? p : n;
    ValidateOptions opt{prime_order};
    std::vector<ClassDescriptor> out;
    bool so_even = D.family == Family::SO && n % 2 == 0;
    auto add = [&](ClassDescriptor c) {
        bool split = so_even && splits_in_G(G, c);
        if (split) {
            c.u.variant = Variant::plus;
            out.push_back(validate_class(G, c, opt));
            c.u.variant = Variant::minus;
        }
        out.push_back(validate_class(G, c, opt));
    };
    if (p == 2 && D.family != Family::SL) {
        std::vector<std::vector<DecoBlock>> decos;
        std::vector<DecoBlock> cur;
        gen_v(n, 2, cur, cap, decos);
        for (auto& d : decos) {
            int a = 0;
            for (auto& b : d)
                if (b.kind == 'V') a += b.mult;
            if (D.family == Family::SO && a % 2) continue;
            auto part = partition_from_decoration(d);
            if (part.empty() || part[0] == 1) continue;
            add(decorated(d));
        }
        return out;
    }
    for (auto& part : partitions_of(n, cap)) {
        if (part[0] == 1) continue;
        if (D.family != Family::SL && !admissible(D.family, part)) continue;
        add(unipotent(part));
    }
    return out;
}

ClassDescriptor smallest_class_with_blocks(const GroupSpec& group, int m) {
    GroupSpec G = validate_group(group);
    GroupSpec D = descriptor_group(G);
    int n = D.n;
    ValidateOptions opt{false};
    if (m < 1 || m >= n) throw Error(ErrorCode::NoSuchClass, "block count out of range");
    if (D.family == Family::SL) return validate_class(G, unipotent(near_rectangular(n, m)), opt);
    if (D.p == 2) {
        if (m % 2) throw Error(ErrorCode::NoSuchClass, "odd block count in characteristic 2");
        auto mu = near_rectangular(n / 2, m / 2);
        std::map<int, int> cnt;
        for (int x : mu) ++cnt[x];
        std::vector<DecoBlock> d;
        for (auto it = cnt.rbegin(); it != cnt.rend(); ++it) d.push_back({'W', it->first, it->second});
        return validate_class(G, decorated(d), opt);
    }
    std::vector<std::vector<int>> cands;
    for (auto& part : partitions_of(n, 0, m))
        if (admissible(D.family, part)) cands.push_back(part);
    if (cands.empty()) throw Error(ErrorCode::NoSuchClass, "no admissible class with that many blocks");
    std::vector<std::vector<int>> minimal;
    for (auto& c : cands) {
        bool is_min = true;
        for (auto& o : cands)
            if (o != c && !dominates(o, c)) {
                is_min = false;
                break;
            }
        if (is_min) minimal.push_back(c);
    }
    if (minimal.size() != 1) throw std::logic_error("smallest class with given block count is not unique");
    return validate_class(G, unipotent(minimal[0]), opt);
}

std::string closure_dot(const GroupSpec& group, bool prime_order) {
    GroupSpec G = validate_group(group);
    auto cls = unipotent_classes(G, prime_order);
    std::ostringstream os;
    os << "digraph closure {\n  rankdir=BT;\n";
    for (size_t i = 0; i < cls.size(); ++i) {
        os << "  n" << i << " [label=\"" << describe(cls[i]);
        try {
            os << "\\ndim " << class_dim(G, cls[i]).dim_class;
        } catch (const Error&) {
        }
        os << "\"];\n";
    }
    size_t k = cls.size();
    std::vector<std::vector<char>> le(k, std::vector<char>(k, 0));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) le[i][j] = i != j && in_closure(G, cls[j], cls[i]);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (!le[i][j]) continue;
            bool cover = true;
            for (size_t t = 0; t < k && cover; ++t)
                if (le[i][t] && le[t][j]) cover = false;
            if (cover) os << "  n" << i << " -> n" << j << ";\n";
        }
    os << "}\n";
    return os.str();
}

}  // namespace topogen
