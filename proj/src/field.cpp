#include <memory>
#include <mutex>

#include "topogen/finfield.hpp"

namespace topogen {

namespace {

bool prime_power(int q, int& p, int& k) {
    if (q < 2) return false;
    for (p = 2; p <= q; ++p)
        if (q % p == 0) break;
    k = 0;
    int t = q;
    while (t % p == 0) {
        t /= p;
        ++k;
    }
    return t == 1;
}

}  // namespace

Field::Field(int q) : q_(q) {
    if (q > 1024 || !prime_power(q, p_, k_)) throw Error(ErrorCode::ParseError, "field size must be a prime power <= 1024");
    exp_.assign(q_, 0);
    log_.assign(q_, 0);
    if (k_ == 1) {
        for (int g = 1; g < p_; ++g) {
            int x = 1, ord = 0;
            do {
                x = x * g % p_;
                ++ord;
            } while (x != 1);
            if (ord == p_ - 1 || p_ == 2) {
                x = 1;
                for (int e = 0; e < p_ - 1; ++e) {
                    exp_[e] = x;
                    log_[x] = e;
                    x = x * g % p_;
                }
                return;
            }
        }
    }
    // Search a primitive polynomial x^k - sum c_i x^i and build log tables of x.
    auto digits = [&](int a) {
        std::vector<int> d(k_);
        for (int i = 0; i < k_; ++i, a /= p_) d[i] = a % p_;
        return d;
    };
    auto value = [&](const std::vector<int>& d) {
        int a = 0;
        for (int i = k_ - 1; i >= 0; --i) a = a * p_ + d[i];
        return a;
    };
    for (int code = 0; code < q_; ++code) {
        std::vector<int> c = digits(code);  // x^k = sum c_i x^i
        if (c[0] == 0) continue;
        std::vector<int> cur(k_, 0);
        cur[0] = 1;
        std::vector<int> seen(q_, 0);
        int ord = 0;
        bool ok = true;
        for (int e = 0; e < q_ - 1; ++e) {
            int v = value(cur);
            if (seen[v]) {
                ok = false;
                break;
            }
            seen[v] = 1;
            exp_[e] = v;
            log_[v] = e;
            int top = cur[k_ - 1];
            for (int i = k_ - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            for (int i = 0; i < k_; ++i) cur[i] = (cur[i] + top * c[i]) % p_;
            ++ord;
        }
        if (ok && value(cur) == 1) break;
    }
    add_.assign(static_cast<size_t>(q_) * q_, 0);
    neg_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        auto da = digits(a);
        std::vector<int> dn(k_);
        for (int i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[a] = value(dn);
        for (int b = 0; b < q_; ++b) {
            auto db = digits(b);
            for (int i = 0; i < k_; ++i) db[i] = (da[i] + db[i]) % p_;
            add_[a * q_ + b] = value(db);
        }
    }
}

int Field::inv(int a) const {
    if (a == 0) throw Error(ErrorCode::Infeasible, "division by zero in GF(q)");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int Field::pow(int a, long long e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    long long m = q_ - 1;
    long long l = (static_cast<long long>(log_[a]) * (((e % m) + m) % m)) % m;
    return exp_[l];
}

int Field::element_order(int a) const {
    if (a == 0) return 0;
    int m = q_ - 1;
    int l = log_[a];
    int g = m;
    for (int x = l, y = m; y;) {
        int t = x % y;
        x = y;
        y = t;
        g = x;
    }
    return m / g;
}

std::string Field::str(int a) const {
    if (k_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    return "w^" + std::to_string(log_[a]);
}

const Field& field(int q) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, std::make_unique<Field>(q)).first;
    return *it->second;
}

std::vector<int> rref(const Field& F, std::vector<std::vector<int>>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    size_t cols = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        int iv = F.inv(rows[r][c]);
        for (auto& x : rows[r]) x = F.mul(x, iv);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            int f = rows[i][c];
            for (size_t j = c; j < cols; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    rows.resize(r);
    return pivots;
}

int rank_of(const Field& F, std::vector<std::vector<int>> rows) {
    return static_cast<int>(rref(F, rows).size());
}

}  // namespace topogen
