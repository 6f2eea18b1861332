#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "topogen/finfield.hpp"

namespace topogen {

namespace {

struct EltHash {
    size_t operator()(const Elt& e) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto x : e) {
            h ^= x;
            h *= 1099511628211ULL;
        }
        return static_cast<size_t>(h);
    }
};

using EltSet = std::unordered_set<Elt, EltHash>;

Elt encode(const GFMatrix& m) { return Elt(m.a.begin(), m.a.end()); }

struct Arith {
    const Field& F;
    int n;

    Elt mul(const Elt& x, const Elt& y) const {
        Elt z(x.size(), 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                int a = x[i * n + k];
                if (!a) continue;
                for (int j = 0; j < n; ++j) {
                    int b = y[k * n + j];
                    if (b) z[i * n + j] = static_cast<std::uint16_t>(F.add(z[i * n + j], F.mul(a, b)));
                }
            }
        return z;
    }
    Elt one() const {
        Elt e(static_cast<size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i) e[i * n + i] = 1;
        return e;
    }
    bool scalar(const Elt& x) const {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j ? x[i * n + j] != 0 : x[i * n + j] != x[0]) return false;
        return true;
    }
    Elt inverse(const Elt& x) const {
        Elt p = x, prev = one();
        while (p != one()) {
            prev = p;
            p = mul(p, x);
        }
        return prev;
    }
};

// Breadth-first closure; stops early once the size exceeds stop_above (0 = never).
long long closure(const Arith& A, const std::vector<Elt>& gens, long long cap, long long stop_above,
                  std::vector<Elt>* out, bool& truncated) {
    EltSet seen;
    std::deque<Elt> q;
    Elt e = A.one();
    seen.insert(e);
    q.push_back(e);
    truncated = false;
    while (!q.empty()) {
        Elt x = std::move(q.front());
        q.pop_front();
        if (out) out->push_back(x);
        for (auto& g : gens) {
            Elt y = A.mul(x, g);
            if (seen.insert(y).second) {
                if (static_cast<long long>(seen.size()) > cap) {
                    truncated = true;
                    return static_cast<long long>(seen.size());
                }
                if (stop_above && static_cast<long long>(seen.size()) > stop_above) return static_cast<long long>(seen.size());
                q.push_back(std::move(y));
            }
        }
    }
    return static_cast<long long>(seen.size());
}

}  // namespace

Closure group_closure(const std::vector<GFMatrix>& generators, long long cap) {
    Closure c;
    if (generators.empty()) {
        c.size = 1;
        return c;
    }
    Arith A{field(generators[0].q), generators[0].n};
    std::vector<Elt> gens;
    for (auto& g : generators) gens.push_back(encode(g));
    c.size = closure(A, gens, cap, 0, nullptr, c.truncated);
    return c;
}

std::vector<Elt> enumerate_group(const std::vector<GFMatrix>& generators, long long cap) {
    if (generators.empty()) return {};
    Arith A{field(generators[0].q), generators[0].n};
    std::vector<Elt> gens, out;
    for (auto& g : generators) gens.push_back(encode(g));
    bool truncated = false;
    closure(A, gens, cap, 0, &out, truncated);
    if (truncated) throw Error(ErrorCode::GroupTooLarge, "group exceeds the enumeration cap");
    return out;
}

std::vector<GFMatrix> standard_generators(Family family, int n, int q) {
    const Field& F = field(q);
    std::vector<int> basis;  // additive basis of GF(q) over GF(p)
    for (int t = 0; t < F.degree(); ++t) basis.push_back(F.pow(F.primitive(), t));
    std::vector<GFMatrix> gens;
    if (family == Family::SL) {
        for (int i = 0; i + 1 < n; ++i)
            for (int a : basis) {
                GFMatrix u = identity_matrix(q, n), l = identity_matrix(q, n);
                u.at(i, i + 1) = a;
                l.at(i + 1, i) = a;
                gens.push_back(u);
                gens.push_back(l);
            }
        return gens;
    }
    if (family != Family::Sp || n % 2) throw Error(ErrorCode::UnsupportedGroup, "standard generators exist for SL and Sp");
    int m = n / 2;
    std::vector<int> J(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < m; ++i) {
        J[i * n + m + i] = 1;
        J[(m + i) * n + i] = F.neg(1);
    }
    auto with_form = [&](GFMatrix g) {
        g.form = FormKind::symplectic;
        g.J = J;
        return g;
    };
    for (int a : basis) {
        // Long root elements: transvections along e_i and f_i.
        for (int i = 0; i < m; ++i) {
            GFMatrix te = identity_matrix(q, n), tf = identity_matrix(q, n);
            te.at(i, m + i) = F.neg(a);
            tf.at(m + i, i) = a;
            gens.push_back(with_form(te));
            gens.push_back(with_form(tf));
        }
        // Short root elements diag(A, A^{-T}) with A = I + a E_{i,i+1} or I + a E_{i+1,i}.
        for (int i = 0; i + 1 < m; ++i)
            for (int dir = 0; dir < 2; ++dir) {
                GFMatrix g = identity_matrix(q, n);
                int r = dir ? i + 1 : i, c = dir ? i : i + 1;
                g.at(r, c) = a;
                g.at(m + c, m + r) = F.neg(a);
                gens.push_back(with_form(g));
            }
    }
    return gens;
}

long long group_order_formula(Family family, int n, int q) {
    auto ipow = [](long long b, int e) {
        long long r = 1;
        while (e--) r *= b;
        return r;
    };
    if (family == Family::SL) {
        long long o = ipow(q, n * (n - 1) / 2);
        for (int i = 2; i <= n; ++i) o *= ipow(q, i) - 1;
        return o;
    }
    if (family == Family::Sp && n % 2 == 0) {
        int m = n / 2;
        long long o = ipow(q, m * m);
        for (int i = 1; i <= m; ++i) o *= ipow(q, 2 * i) - 1;
        return o;
    }
    throw Error(ErrorCode::UnsupportedGroup, "order formula for SL and Sp only");
}

namespace {

struct Enumerated {
    Arith A;
    std::vector<Elt> elements;
    std::vector<Elt> center;
    std::vector<Elt> gens;
    std::vector<Elt> r_reps, s_reps;
    long long order = 0;

    Elt canon(const Elt& x) const {
        Elt best = x;
        for (auto& z : center) {
            Elt y = A.mul(z, x);
            if (y < best) best = y;
        }
        return best;
    }

    bool order_mod_center(const Elt& x, int r) const {
        if (A.scalar(x)) return false;
        Elt p = x;
        for (int i = 1; i < r; ++i) p = A.mul(p, x);
        return A.scalar(p);
    }

    std::vector<Elt> reps_of_order(int r) const {
        std::vector<Elt> out;
        for (auto& x : elements)
            if (order_mod_center(x, r) && canon(x) == x) out.push_back(x);
        return out;
    }

    bool generates(const Elt& x, const Elt& y) const {
        std::vector<Elt> g{x, y};
        for (auto& z : center)
            if (z != A.one()) g.push_back(z);
        bool truncated = false;
        long long size = closure(A, g, order + 1, order / 2, nullptr, truncated);
        return size > order / 2;
    }
};

Enumerated enumerate(Family family, int n, int q, int r, int s, long long cap) {
    auto gens = standard_generators(family, n, q);
    Enumerated E{Arith{field(q), n}, {}, {}, {}, {}, {}, 0};
    for (auto& g : gens) E.gens.push_back(encode(g));
    E.elements = enumerate_group(gens, cap);
    E.order = static_cast<long long>(E.elements.size());
    for (auto& x : E.elements)
        if (E.A.scalar(x)) E.center.push_back(x);
    E.r_reps = E.reps_of_order(r);
    E.s_reps = E.reps_of_order(s);
    return E;
}

GenerationCount base_count(const Enumerated& E) {
    GenerationCount g;
    g.group_order = E.order;
    g.center_order = static_cast<long long>(E.center.size());
    g.r_elements = static_cast<long long>(E.r_reps.size());
    g.s_elements = static_cast<long long>(E.s_reps.size());
    return g;
}

}  // namespace

GenerationCount estimate_generation_probability(Family family, int n, int q, int r, int s, long long trials,
                                                std::uint64_t seed, long long cap) {
    Enumerated E = enumerate(family, n, q, r, s, cap);
    GenerationCount g = base_count(E);
    if (E.r_reps.empty() || E.s_reps.empty()) throw Error(ErrorCode::Infeasible, "no elements of the requested orders");
    for (long long t = 0; t < trials; ++t) {
        std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(static_cast<std::uint64_t>(t) >> 32)};
        std::mt19937_64 rng(ss);
        std::uniform_int_distribution<size_t> dr(0, E.r_reps.size() - 1), ds(0, E.s_reps.size() - 1);
        const Elt& x = E.r_reps[dr(rng)];
        const Elt& y = E.s_reps[ds(rng)];
        if (E.generates(x, y)) ++g.hits;
        ++g.trials;
    }
    return g;
}

GenerationCount exact_generation_count(Family family, int n, int q, int r, int s, long long cap) {
    Enumerated E = enumerate(family, n, q, r, s, cap);
    GenerationCount g = base_count(E);
    for (auto& x : E.r_reps)
        for (auto& y : E.s_reps) {
            if (E.generates(x, y)) ++g.hits;
            ++g.trials;
        }
    return g;
}

GenerationCount class_reduced_generation_count(Family family, int n, int q, int r, int s, long long cap) {
    Enumerated E = enumerate(family, n, q, r, s, cap);
    GenerationCount g = base_count(E);
    std::vector<Elt> ginv;
    for (auto& x : E.gens) ginv.push_back(E.A.inverse(x));
    std::set<Elt> done;
    std::vector<Elt> reps;
    for (auto& x : E.r_reps) {
        if (done.count(x)) continue;
        reps.push_back(x);
        std::deque<Elt> q{x};
        done.insert(x);
        while (!q.empty()) {
            Elt h = q.front();
            q.pop_front();
            for (size_t i = 0; i < E.gens.size(); ++i) {
                Elt c = E.canon(E.A.mul(E.A.mul(E.gens[i], h), ginv[i]));
                if (done.insert(c).second) q.push_back(c);
            }
        }
    }
    for (auto& x : reps)
        for (auto& y : E.s_reps) {
            if (E.generates(x, y)) ++g.hits;
            ++g.trials;
        }
    return g;
}

namespace {

using Space = std::vector<std::vector<int>>;  // rows in reduced echelon form

std::vector<int> reduce_mod(const Field& F, const Space& W, const std::vector<int>& piv, std::vector<int> v) {
    for (size_t i = 0; i < W.size(); ++i) {
        int c = v[piv[i]];
        if (!c) continue;
        for (size_t j = 0; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(c, W[i][j]));
    }
    return v;
}

std::vector<std::vector<int>> nullspace(const Field& F, std::vector<std::vector<int>> rows, int n) {
    auto piv = rref(F, rows);
    std::vector<char> is_piv(n, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<std::vector<int>> out;
    for (int f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        std::vector<int> v(n, 0);
        v[f] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.neg(rows[i][f]);
        out.push_back(v);
    }
    return out;
}

}  // namespace

long long invariant_subspace_count(const GFMatrix& m, int k, SubspaceType type, long long cap) {
    const Field& F = field(m.q);
    int n = m.n;
    if (k < 0 || k > n) return 0;
    bool singular = type == SubspaceType::totally_singular;
    if (singular && m.J.empty()) throw Error(ErrorCode::NotApplicable, "no form declared on the module");
    jordan_type(m);  // every invariant subspace is reached level by level only when the spectrum splits
    auto B = [&](const std::vector<int>& u, const std::vector<int>& v) {
        int s = 0;
        for (int i = 0; i < n; ++i) {
            if (!u[i]) continue;
            for (int j = 0; j < n; ++j) s = F.add(s, F.mul(u[i], F.mul(m.J[i * n + j], v[j])));
        }
        return s;
    };
    auto Qv = [&](const std::vector<int>& v) {
        if (m.Q.empty()) return B(v, v);
        int s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) s = F.add(s, F.mul(m.Q[i * n + j], F.mul(v[i], v[j])));
        return s;
    };
    std::set<Space> level{Space{}};
    for (int dim = 0; dim < k; ++dim) {
        std::set<Space> next;
        for (auto& W : level) {
            Space Wr = W;
            auto piv = rref(F, Wr);
            for (int lam = 1; lam < F.q(); ++lam) {
                // v with (m - lam) v in W
                std::vector<std::vector<int>> M(n, std::vector<int>(n, 0));
                for (int c = 0; c < n; ++c) {
                    std::vector<int> col(n);
                    for (int i = 0; i < n; ++i) col[i] = F.sub(m.at(i, c), i == c ? lam : 0);
                    col = reduce_mod(F, Wr, piv, col);
                    for (int i = 0; i < n; ++i) M[i][c] = col[i];
                }
                auto K = nullspace(F, M, n);
                Space U;
                for (auto& v : K) {
                    auto r = reduce_mod(F, Wr, piv, v);
                    if (std::any_of(r.begin(), r.end(), [](int x) { return x != 0; })) U.push_back(r);
                }
                rref(F, U);
                int d = static_cast<int>(U.size());
                if (d == 0) continue;
                // Projective points of U: coefficient vectors whose first nonzero entry is 1.
                std::vector<int> coef(d, 0);
                long long total = 1;
                for (int i = 0; i < d; ++i) total *= F.q();
                for (long long code = 1; code < total; ++code) {
                    long long t = code;
                    int lead = -1;
                    for (int i = 0; i < d; ++i, t /= F.q()) {
                        coef[i] = static_cast<int>(t % F.q());
                        if (coef[i] && lead < 0) lead = i;
                    }
                    if (coef[lead] != 1) continue;
                    std::vector<int> v(n, 0);
                    for (int i = 0; i < d; ++i)
                        if (coef[i])
                            for (int j = 0; j < n; ++j) v[j] = F.add(v[j], F.mul(coef[i], U[i][j]));
                    if (singular) {
                        if (Qv(v) != 0) continue;
                        bool perp = true;
                        for (auto& w : Wr)
                            if (B(w, v) != 0) {
                                perp = false;
                                break;
                            }
                        if (!perp) continue;
                    }
                    Space S = Wr;
                    S.push_back(v);
                    rref(F, S);
                    next.insert(S);
                    if (static_cast<long long>(next.size()) > cap)
                        throw Error(ErrorCode::EnumerationTooLarge, "invariant subspace lattice exceeds the cap");
                }
            }
        }
        level = std::move(next);
    }
    return static_cast<long long>(level.size());
}

}  // namespace topogen
