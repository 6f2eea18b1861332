#include "topogen/finfield.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace topogen {

GFMatrix identity_matrix(int q, int n) {
    GFMatrix m;
    m.q = q;
    m.n = n;
    m.a.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

GFMatrix multiply(const GFMatrix& x, const GFMatrix& y) {
    const Field& F = field(x.q);
    GFMatrix z = x;
    int n = x.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int s = 0;
            for (int k = 0; k < n; ++k) {
                int a = x.at(i, k);
                if (a) s = F.add(s, F.mul(a, y.at(k, j)));
            }
            z.at(i, j) = s;
        }
    return z;
}

GFMatrix jordan_block(int q, int size, int lambda) {
    GFMatrix m = identity_matrix(q, size);
    for (int i = 0; i < size; ++i) {
        m.at(i, i) = lambda;
        if (i + 1 < size) m.at(i, i + 1) = 1;
    }
    return m;
}

GFMatrix direct_sum(const std::vector<GFMatrix>& blocks) {
    int n = 0, q = blocks.empty() ? 2 : blocks[0].q;
    for (auto& b : blocks) n += b.n;
    GFMatrix m;
    m.q = q;
    m.n = n;
    m.a.assign(static_cast<size_t>(n) * n, 0);
    bool has_form = !blocks.empty(), has_q = !blocks.empty();
    for (auto& b : blocks) {
        has_form = has_form && !b.J.empty();
        has_q = has_q && !b.Q.empty();
    }
    if (has_form) {
        m.J.assign(static_cast<size_t>(n) * n, 0);
        m.form = blocks[0].form;
    }
    if (has_q) m.Q.assign(static_cast<size_t>(n) * n, 0);
    int off = 0;
    for (auto& b : blocks) {
        for (int i = 0; i < b.n; ++i)
            for (int j = 0; j < b.n; ++j) {
                size_t dst = static_cast<size_t>(off + i) * n + off + j;
                size_t src = static_cast<size_t>(i) * b.n + j;
                m.a[dst] = b.a[src];
                if (has_form) m.J[dst] = b.J[src];
                if (has_q) m.Q[dst] = b.Q[src];
            }
        off += b.n;
    }
    return m;
}

GFMatrix kron(const GFMatrix& x, const GFMatrix& y) {
    const Field& F = field(x.q);
    GFMatrix m;
    m.q = x.q;
    m.n = x.n * y.n;
    m.a.assign(static_cast<size_t>(m.n) * m.n, 0);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j)
            for (int k = 0; k < y.n; ++k)
                for (int l = 0; l < y.n; ++l) m.at(i * y.n + k, j * y.n + l) = F.mul(x.at(i, j), y.at(k, l));
    return m;
}

namespace {

std::vector<int> transpose_mul_mul(const Field& F, const GFMatrix& g, const std::vector<int>& B) {
    // g^T B g
    int n = g.n;
    std::vector<int> Bg(static_cast<size_t>(n) * n, 0), out(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int s = 0;
            for (int k = 0; k < n; ++k) s = F.add(s, F.mul(B[i * n + k], g.at(k, j)));
            Bg[i * n + j] = s;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int s = 0;
            for (int k = 0; k < n; ++k) s = F.add(s, F.mul(g.at(k, i), Bg[k * n + j]));
            out[i * n + j] = s;
        }
    return out;
}

std::vector<int> fold_upper(const Field& F, const std::vector<int>& M, int n) {
    std::vector<int> U(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        U[i * n + i] = M[i * n + i];
        for (int j = i + 1; j < n; ++j) U[i * n + j] = F.add(M[i * n + j], M[j * n + i]);
    }
    return U;
}

}  // namespace

bool preserves_form(const GFMatrix& m) {
    const Field& F = field(m.q);
    if (!m.J.empty() && transpose_mul_mul(F, m, m.J) != m.J) return false;
    if (!m.Q.empty() && fold_upper(F, transpose_mul_mul(F, m, m.Q), m.n) != fold_upper(F, m.Q, m.n)) return false;
    return true;
}

namespace {

// ---- label assignment ----

int eval_mono(const Field& F, const Mono& m, const LabelAssignment& val) {
    int x = m.neg ? F.neg(1) : 1;
    for (auto& [b, e] : m.exps) x = F.mul(x, F.pow(val.at(b), e));
    return x;
}

bool assign_labels(const Field& F, const ClassDescriptor& c, int p, LabelAssignment& val) {
    auto ev = eigenvalues(c, p);
    std::vector<Mono> monos;
    for (auto& [m, k] : ev) monos.push_back(m);
    std::vector<std::string> bases;
    std::set<std::string> seen;
    for (auto& m : monos)
        for (auto& [b, e] : m.exps)
            if (seen.insert(b).second) bases.push_back(b);
    std::vector<std::vector<int>> cands(bases.size());
    for (size_t i = 0; i < bases.size(); ++i) {
        int k = relation_order(c.ss.relations, bases[i]);
        auto it = val.find(bases[i]);
        if (it != val.end()) {
            if (it->second <= 0 || it->second >= F.q() || (k && F.element_order(it->second) != k)) return false;
            cands[i] = {it->second};
            continue;
        }
        for (int x = 1; x < F.q(); ++x)
            if (!k || F.element_order(x) == k) cands[i].push_back(x);
        if (cands[i].empty()) return false;
    }
    auto ready = [&](const Mono& m, size_t upto) {
        for (auto& [b, e] : m.exps) {
            size_t idx = std::find(bases.begin(), bases.end(), b) - bases.begin();
            if (idx >= upto) return false;
        }
        return true;
    };
    std::function<bool(size_t)> go = [&](size_t i) -> bool {
        std::vector<int> vals;
        for (auto& m : monos)
            if (ready(m, i)) vals.push_back(eval_mono(F, m, val));
        std::sort(vals.begin(), vals.end());
        if (std::adjacent_find(vals.begin(), vals.end()) != vals.end()) return false;
        if (i == bases.size()) return true;
        for (int x : cands[i]) {
            val[bases[i]] = x;
            if (go(i + 1)) return true;
        }
        val.erase(bases[i]);
        return false;
    };
    LabelAssignment keep = val;
    if (go(0)) return true;
    val = keep;
    return false;
}

// ---- form-module blocks ----

int sign_of(Family f) { return f == Family::Sp ? -1 : 1; }

GFMatrix bare(int q, int n) {
    GFMatrix m = identity_matrix(q, n);
    m.J.assign(static_cast<size_t>(n) * n, 0);
    return m;
}

GFMatrix inverse(const GFMatrix& m) {
    const Field& F = field(m.q);
    int n = m.n;
    std::vector<std::vector<int>> rows(n, std::vector<int>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
        rows[i][n + i] = 1;
    }
    rref(F, rows);
    GFMatrix out = identity_matrix(m.q, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = rows[i][n + j];
    return out;
}

// diag(A, A^{-T}) on a pair of complementary totally singular spaces.
GFMatrix hyperbolic(const GFMatrix& A, Family fam, bool char2_orth) {
    const Field& F = field(A.q);
    int k = A.n;
    GFMatrix Ai = inverse(A);
    GFMatrix m = bare(A.q, 2 * k);
    int s = sign_of(fam);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            m.at(i, j) = A.at(i, j);
            m.at(k + i, k + j) = Ai.at(j, i);
        }
    for (int i = 0; i < k; ++i) {
        m.J[static_cast<size_t>(i) * 2 * k + k + i] = 1;
        m.J[static_cast<size_t>(k + i) * 2 * k + i] = F.from_int(s);
    }
    if (char2_orth) {
        m.Q.assign(static_cast<size_t>(4) * k * k, 0);
        for (int i = 0; i < k; ++i) m.Q[static_cast<size_t>(i) * 2 * k + k + i] = 1;
    }
    return m;
}

GFMatrix scalar(int q, int k, int lambda) {
    GFMatrix m = identity_matrix(q, k);
    for (int i = 0; i < k; ++i) m.at(i, i) = lambda;
    return m;
}

long long binom(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Single unipotent block of size k (k <= p): upper Pascal matrix with an
// antidiagonal invariant form, symmetric for odd k and alternating for even k.
GFMatrix pascal_block(int q, int k) {
    const Field& F = field(q);
    if (k > F.p()) throw Error(ErrorCode::Uninstantiable, "single block larger than the characteristic");
    GFMatrix m = bare(q, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= i; ++j) m.at(j, i) = F.from_int(binom(i, j) % F.p());
    for (int i = 0; i < k; ++i) {
        int c = F.inv(F.from_int(binom(k - 1, i) % F.p()));
        m.J[static_cast<size_t>(i) * k + (k - 1 - i)] = i % 2 ? F.neg(c) : c;
    }
    return m;
}

// One anisotropic or radical coordinate for odd-dimensional orthogonal modules.
GFMatrix odd_coordinate(int q, int lambda) {
    const Field& F = field(q);
    GFMatrix m = bare(q, 1);
    m.at(0, 0) = lambda;
    if (F.p() == 2) {
        m.J[0] = 0;
        m.Q = {1};
    } else {
        m.J[0] = 1;
    }
    return m;
}

void finish_form(GFMatrix& m, Family fam) {
    m.form = fam == Family::Sp ? FormKind::symplectic : (fam == Family::SO ? FormKind::symmetric : FormKind::none);
    if (fam == Family::SL) {
        m.J.clear();
        m.Q.clear();
    }
}

std::vector<GFMatrix> unipotent_blocks(const GroupSpec& D, const ClassDescriptor& c, int q) {
    const Field& F = field(q);
    bool char2 = F.p() == 2;
    std::vector<GFMatrix> blocks;
    if (D.family == Family::SL) {
        for (int k : c.u.partition) blocks.push_back(jordan_block(q, k));
        return blocks;
    }
    bool orth = D.family == Family::SO;
    if (char2 && !c.u.decoration.empty()) {
        for (auto& b : c.u.decoration)
            for (int i = 0; i < b.mult; ++i) {
                if (b.kind == 'W') {
                    blocks.push_back(hyperbolic(jordan_block(q, b.size), D.family, orth));
                } else {
                    if (orth || b.size != 2)
                        throw Error(ErrorCode::Uninstantiable, "only V(2) summands are built in characteristic 2");
                    GFMatrix v = bare(q, 2);
                    v.at(0, 1) = 1;
                    v.J = {0, 1, 1, 0};
                    blocks.push_back(v);
                }
            }
        return blocks;
    }
    std::map<int, int> mult;
    for (int k : c.u.partition) ++mult[k];
    bool radical_used = false;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
        auto [k, m] = *it;
        bool pairable = orth ? k % 2 == 0 : k % 2 == 1;
        int pairs = pairable ? m / 2 : (orth ? m / 2 : 0);
        int singles = m - 2 * pairs;
        for (int i = 0; i < pairs; ++i) blocks.push_back(hyperbolic(jordan_block(q, k), D.family, orth && char2));
        for (int i = 0; i < singles; ++i) {
            if (char2) {
                if (!(orth && k == 1) || radical_used)
                    throw Error(ErrorCode::Uninstantiable, "no characteristic 2 block for this summand");
                blocks.push_back(odd_coordinate(q, 1));
                radical_used = true;
            } else if (k == 1 && orth) {
                blocks.push_back(odd_coordinate(q, 1));
            } else {
                blocks.push_back(pascal_block(q, k));
            }
        }
    }
    return blocks;
}

std::vector<GFMatrix> semisimple_blocks(const GroupSpec& D, const ClassDescriptor& c, int q,
                                        const LabelAssignment& val) {
    const Field& F = field(q);
    int p = F.p();
    const auto& s = c.ss;
    std::vector<GFMatrix> blocks;
    auto lam = [&](const std::string& lab) { return eval_mono(F, reduce(parse_mono(lab), s.relations, p), val); };
    if (D.family == Family::SL) {
        std::vector<int> diag;
        for (int i = 0; i < s.mult_one; ++i) diag.push_back(1);
        for (int i = 0; i < s.mult_minus_one; ++i) diag.push_back(F.neg(1));
        for (auto& [l, k] : s.pairs) {
            int x = lam(l);
            for (int i = 0; i < k; ++i) diag.push_back(x);
            for (int i = 0; i < k; ++i) diag.push_back(F.inv(x));
        }
        for (auto& [l, k] : s.singles)
            for (int i = 0; i < k; ++i) diag.push_back(lam(l));
        GFMatrix m = identity_matrix(q, static_cast<int>(diag.size()));
        for (size_t i = 0; i < diag.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = diag[i];
        blocks.push_back(m);
        return blocks;
    }
    bool orth = D.family == Family::SO;
    bool c2 = orth && p == 2;
    auto eigen_block = [&](int eps, int a) {
        if (a >= 2) blocks.push_back(hyperbolic(scalar(q, a / 2, eps), D.family, c2));
        if (a % 2) {
            if (!orth) throw Error(ErrorCode::Uninstantiable, "odd eigenspace in a symplectic module");
            blocks.push_back(odd_coordinate(q, eps));
        }
    };
    eigen_block(1, s.mult_one);
    if (s.mult_minus_one) eigen_block(F.neg(1), s.mult_minus_one);
    for (auto& [l, k] : s.pairs) blocks.push_back(hyperbolic(scalar(q, k, lam(l)), D.family, c2));
    // For the minus class of a split pattern, swap one eigenvector pair.
    if (orth && s.variant == Variant::minus && !blocks.empty()) {
        GFMatrix& b = blocks.back();
        int k = b.n / 2;
        std::swap(b.at(k - 1, k - 1), b.at(2 * k - 1, 2 * k - 1));
    }
    return blocks;
}

}  // namespace

GFMatrix matrix_from_class(const GroupSpec& group, const ClassDescriptor& c, int q, const LabelAssignment& labels) {
    const Field& F = field(q);
    int p = F.p();
    if (group.p != 0 && group.p != p) throw Error(ErrorCode::Uninstantiable, "field characteristic differs from the group's");
    // Odd orthogonal groups in characteristic 2 are read through their odd-characteristic Jordan data.
    bool odd_orth2 = group.family == Family::SO && group.n % 2 == 1 && p == 2;
    GroupSpec Gv = validate_group(GroupSpec{group.family, group.n, odd_orth2 ? 0 : p});
    GroupSpec D = descriptor_group(Gv);
    D.p = p;
    ClassDescriptor v = validate_class(Gv, c, ValidateOptions{false});
    std::vector<GFMatrix> blocks;
    if (v.unipotent()) {
        blocks = unipotent_blocks(D, v, q);
    } else {
        LabelAssignment val = labels;
        if (!assign_labels(F, v, p, val))
            throw Error(ErrorCode::Uninstantiable, "eigenvalue labels cannot be realized in GF(" + std::to_string(q) + ")");
        blocks = semisimple_blocks(D, v, q, val);
    }
    GFMatrix m = direct_sum(blocks);
    finish_form(m, D.family);
    if (m.n != D.n) throw Error(ErrorCode::Uninstantiable, "block construction has the wrong size");
    return m;
}

int instantiation_field(const GroupSpec& group, const ClassDescriptor& c, int p, int max_q) {
    for (long long q = p; q <= max_q; q *= p) {
        try {
            matrix_from_class(group, c, static_cast<int>(q));
            return static_cast<int>(q);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Uninstantiable) throw;
        }
    }
    return 0;
}

namespace {

std::vector<std::vector<int>> rows_of(const GFMatrix& m) {
    std::vector<std::vector<int>> r(m.n, std::vector<int>(m.n));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r[i][j] = m.at(i, j);
    return r;
}

GFMatrix shifted(const GFMatrix& m, int lambda) {
    const Field& F = field(m.q);
    GFMatrix x = m;
    x.J.clear();
    x.Q.clear();
    for (int i = 0; i < m.n; ++i) x.at(i, i) = F.sub(x.at(i, i), lambda);
    return x;
}

}  // namespace

std::vector<int> jordan_blocks(const GFMatrix& m, int lambda) {
    const Field& F = field(m.q);
    GFMatrix N = shifted(m, lambda);
    std::vector<int> ranks{m.n};
    GFMatrix P = N;
    while (true) {
        int r = rank_of(F, rows_of(P));
        ranks.push_back(r);
        if (r == ranks[ranks.size() - 2] || r == 0) break;
        P = multiply(P, N);
    }
    // at_least[k] = ranks[k-1] - ranks[k] blocks of size >= k
    std::vector<int> parts;
    for (size_t k = 1; k < ranks.size(); ++k) {
        int ge = ranks[k - 1] - ranks[k];
        int ge_next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
        for (int i = 0; i < ge - ge_next; ++i) parts.push_back(static_cast<int>(k));
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

std::map<int, std::vector<int>> jordan_type(const GFMatrix& m) {
    const Field& F = field(m.q);
    std::map<int, std::vector<int>> out;
    int total = 0;
    for (int x = 1; x < F.q() && total < m.n; ++x) {
        if (rank_of(F, rows_of(shifted(m, x))) == m.n) continue;
        auto parts = jordan_blocks(m, x);
        for (int k : parts) total += k;
        out[x] = parts;
    }
    if (total != m.n) throw Error(ErrorCode::NonSplit, "characteristic polynomial does not split");
    return out;
}

int fixed_space_dim(const GFMatrix& m) {
    return m.n - rank_of(field(m.q), rows_of(shifted(m, 1)));
}

GFMatrix induced_matrix(const GFMatrix& m, Functor f) {
    const Field& F = field(m.q);
    int n = m.n;
    if (f == Functor::tensor_square) return kron(m, m);
    std::vector<std::pair<int, int>> basis;
    for (int i = 0; i < n; ++i)
        for (int j = i + (f == Functor::wedge2 ? 1 : 0); j < n; ++j) basis.push_back({i, j});
    std::map<std::pair<int, int>, int> index;
    for (size_t t = 0; t < basis.size(); ++t) index[basis[t]] = static_cast<int>(t);
    GFMatrix out = identity_matrix(m.q, static_cast<int>(basis.size()));
    for (size_t col = 0; col < basis.size(); ++col) {
        auto [i, j] = basis[col];
        for (size_t row = 0; row < basis.size(); ++row) {
            auto [k, l] = basis[row];
            int v;
            if (f == Functor::wedge2) {
                v = F.sub(F.mul(m.at(k, i), m.at(l, j)), F.mul(m.at(l, i), m.at(k, j)));
            } else if (k == l) {
                v = F.mul(m.at(k, i), m.at(k, j));
            } else {
                v = F.add(F.mul(m.at(k, i), m.at(l, j)), F.mul(m.at(l, i), m.at(k, j)));
            }
            out.at(static_cast<int>(row), static_cast<int>(col)) = v;
        }
    }
    return out;
}

int centralizer_lie_dim(const GroupSpec& group, const GFMatrix& m) {
    const Field& F = field(m.q);
    int n = m.n;
    int N = n * n;
    auto var = [n](int i, int j) { return i * n + j; };
    std::vector<std::vector<int>> eqs;
    // X m - m X = 0
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> e(N, 0);
            for (int k = 0; k < n; ++k) {
                e[var(i, k)] = F.add(e[var(i, k)], m.at(k, j));
                e[var(k, j)] = F.sub(e[var(k, j)], m.at(i, k));
            }
            eqs.push_back(e);
        }
    GroupSpec D = descriptor_group(validate_group(GroupSpec{group.family, group.n, 0}));
    if (D.family == Family::SL || m.J.empty()) {
        std::vector<int> e(N, 0);
        for (int i = 0; i < n; ++i) e[var(i, i)] = 1;
        eqs.push_back(e);
    } else {
        // X^T J + J X = 0
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<int> e(N, 0);
                for (int k = 0; k < n; ++k) {
                    e[var(k, i)] = F.add(e[var(k, i)], m.J[k * n + j]);
                    e[var(k, j)] = F.add(e[var(k, j)], m.J[i * n + k]);
                }
                eqs.push_back(e);
            }
    }
    return N - rank_of(F, std::move(eqs));
}

}  // namespace topogen
