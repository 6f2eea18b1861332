#include "topogen/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace topogen {

const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::ParityViolation: return "ParityViolation";
        case ErrorCode::CentralClass: return "CentralClass";
        case ErrorCode::OrderViolation: return "OrderViolation";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::MixedKinds: return "MixedKinds";
        case ErrorCode::NoSuchClass: return "NoSuchClass";
        case ErrorCode::BoundExceeded: return "BoundExceeded";
        case ErrorCode::Infeasible: return "Infeasible";
        case ErrorCode::UnsupportedChar2Class: return "UnsupportedChar2Class";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::NotApplicable: return "NotApplicable";
        case ErrorCode::UnsupportedGroup: return "UnsupportedGroup";
        case ErrorCode::MissingSpin8Profile: return "MissingSpin8Profile";
        case ErrorCode::OutsideCatalog: return "OutsideCatalog";
        case ErrorCode::BadCharacteristic: return "BadCharacteristic";
        case ErrorCode::Uninstantiable: return "Uninstantiable";
        case ErrorCode::NonSplit: return "NonSplit";
        case ErrorCode::GroupTooLarge: return "GroupTooLarge";
        case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    }
    return "Error";
}

bool is_validation_error(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError:
        case ErrorCode::DimensionMismatch:
        case ErrorCode::ParityViolation:
        case ErrorCode::CentralClass:
        case ErrorCode::OrderViolation:
        case ErrorCode::SizeMismatch:
        case ErrorCode::MixedKinds:
            return true;
        default:
            return false;
    }
}

const char* family_name(Family f) {
    switch (f) {
        case Family::SL: return "SL";
        case Family::Sp: return "Sp";
        case Family::SO: return "SO";
        case Family::Spin8: return "Spin8";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "SL") return Family::SL;
    if (s == "Sp") return Family::Sp;
    if (s == "SO") return Family::SO;
    if (s == "Spin8") return Family::Spin8;
    throw Error(ErrorCode::ParseError, "unknown family '" + s + "'");
}

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::plus: return "plus";
        case Variant::minus: return "minus";
        default: return "unspecified";
    }
}

Variant parse_variant(const std::string& s) {
    if (s == "plus") return Variant::plus;
    if (s == "minus") return Variant::minus;
    if (s == "unspecified" || s.empty()) return Variant::unspecified;
    throw Error(ErrorCode::ParseError, "unknown variant '" + s + "'");
}

bool is_prime(long long x) {
    if (x < 2) return false;
    for (long long d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

GroupSpec validate_group(GroupSpec g) {
    if (g.p != 0 && !is_prime(g.p))
        throw Error(ErrorCode::ParseError, "characteristic must be 0 or prime");
    switch (g.family) {
        case Family::SL:
            if (g.n < 2) throw Error(ErrorCode::UnsupportedGroup, "SL needs n >= 2");
            break;
        case Family::Sp:
            if (g.n < 4 || g.n % 2) throw Error(ErrorCode::UnsupportedGroup, "Sp needs even n >= 4");
            break;
        case Family::SO:
            if (g.n < 5) throw Error(ErrorCode::UnsupportedGroup, "SO needs n >= 5");
            if (g.n % 2 && g.p == 2)
                throw Error(ErrorCode::UnsupportedGroup, "SO in odd dimension needs p != 2");
            if (g.n == 8) g.family = Family::Spin8;
            break;
        case Family::Spin8:
            if (g.n != 8) throw Error(ErrorCode::UnsupportedGroup, "Spin8 has n = 8");
            break;
    }
    return g;
}

GroupSpec descriptor_group(const GroupSpec& g) {
    if (g.family == Family::SO && g.n == 6) return {Family::SL, 4, g.p};
    if (g.family == Family::Spin8) return {Family::SO, 8, g.p};
    return g;
}

std::pair<int, int> dim_and_rank(const GroupSpec& group) {
    GroupSpec g = validate_group(group);
    int n = g.n;
    switch (g.family) {
        case Family::SL: return {n * n - 1, n - 1};
        case Family::Sp: return {n * (n + 1) / 2, n / 2};
        case Family::SO: return {n * (n - 1) / 2, n / 2};
        case Family::Spin8: return {28, 4};
    }
    return {0, 0};
}

// ---------------- symbolic eigenvalues ----------------

Mono parse_mono(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    Mono m;
    size_t i = 0;
    if (i < s.size() && s[i] == '-') {
        m.neg = true;
        ++i;
    }
    if (s.substr(i) == "1") return m;
    if (i >= s.size()) throw Error(ErrorCode::ParseError, "empty eigenvalue label");
    while (i < s.size()) {
        size_t j = i;
        if (!(std::isalpha(static_cast<unsigned char>(s[j])) || s[j] == '_'))
            throw Error(ErrorCode::ParseError, "bad eigenvalue label '" + raw + "'");
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        std::string base = s.substr(i, j - i);
        int e = 1;
        if (j < s.size() && s[j] == '^') {
            size_t k = j + 1;
            if (k < s.size() && s[k] == '-') ++k;
            size_t d0 = k;
            while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
            if (k == d0) throw Error(ErrorCode::ParseError, "bad exponent in '" + raw + "'");
            e = std::stoi(s.substr(j + 1, k - j - 1));
            j = k;
        }
        m.exps[base] += e;
        if (m.exps[base] == 0) m.exps.erase(base);
        if (j < s.size()) {
            if (s[j] != '*') throw Error(ErrorCode::ParseError, "bad eigenvalue label '" + raw + "'");
            ++j;
        }
        i = j;
    }
    return m;
}

std::string mono_string(const Mono& m) {
    std::string out = m.neg ? "-" : "";
    if (m.exps.empty()) return out + "1";
    bool first = true;
    for (auto& [b, e] : m.exps) {
        if (!first) out += "*";
        first = false;
        out += b;
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r = a;
    r.neg = a.neg != b.neg;
    for (auto& [k, e] : b.exps) {
        r.exps[k] += e;
        if (r.exps[k] == 0) r.exps.erase(k);
    }
    return r;
}

Mono mono_inv(const Mono& a) {
    Mono r = a;
    for (auto& [k, e] : r.exps) e = -e;
    return r;
}

int relation_order(const std::map<std::string, std::string>& rel, const std::string& base) {
    auto it = rel.find(base);
    if (it == rel.end()) return 0;
    std::string t;
    for (char c : it->second)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t == "sq=-1") return 4;
    if (t.rfind("ord=", 0) == 0) {
        try {
            int k = std::stoi(t.substr(4));
            return k;
        } catch (...) {
        }
    }
    throw Error(ErrorCode::ParseError, "unknown relation tag '" + it->second + "'");
}

Mono reduce(Mono m, const std::map<std::string, std::string>& rel, int p) {
    Mono r;
    r.neg = m.neg;
    for (auto& [b, e0] : m.exps) {
        int k = relation_order(rel, b);
        int e = e0;
        if (k > 0) {
            e = ((e % k) + k) % k;
            if (k % 2 == 0 && e >= k / 2) {
                e -= k / 2;
                r.neg = !r.neg;
            }
        }
        if (e != 0) r.exps[b] = e;
    }
    if (p == 2) r.neg = false;
    return r;
}

std::vector<std::pair<Mono, int>> eigenvalues(const ClassDescriptor& c, int p) {
    std::map<Mono, int> acc;
    const auto& s = c.ss;
    auto& rel = s.relations;
    if (s.mult_one) acc[Mono{}] += s.mult_one;
    if (s.mult_minus_one) acc[reduce(Mono{true, {}}, rel, p)] += s.mult_minus_one;
    for (auto& [lab, k] : s.pairs) {
        Mono m = parse_mono(lab);
        acc[reduce(m, rel, p)] += k;
        acc[reduce(mono_inv(m), rel, p)] += k;
    }
    for (auto& [lab, k] : s.singles) acc[reduce(parse_mono(lab), rel, p)] += k;
    std::vector<std::pair<Mono, int>> out;
    for (auto& [m, k] : acc)
        if (k) out.push_back({m, k});
    return out;
}

SemisimpleShape semisimple_shape(const ClassDescriptor& c, int p) {
    SemisimpleShape sh;
    auto ev = eigenvalues(c, p);
    std::map<Mono, int> mult(ev.begin(), ev.end());
    std::set<Mono> done;
    Mono minus_one{p != 2, {}};
    for (auto& [m, k] : ev) {
        if (done.count(m)) continue;
        done.insert(m);
        if (m.is_one()) {
            sh.a = k;
            continue;
        }
        if (m == minus_one) {
            sh.b = k;
            continue;
        }
        Mono inv = reduce(mono_inv(m), c.ss.relations, p);
        auto it = mult.find(inv);
        if (it != mult.end() && it->second == k && !done.count(inv)) {
            done.insert(inv);
            sh.pair_mults.push_back(k);
            if (reduce(mono_mul(m, m), c.ss.relations, p) == minus_one) sh.sq_minus_one = true;
        } else {
            sh.single_mults.push_back(k);
        }
    }
    std::sort(sh.pair_mults.rbegin(), sh.pair_mults.rend());
    std::sort(sh.single_mults.rbegin(), sh.single_mults.rend());
    return sh;
}

// ---------------- partitions ----------------

std::vector<int> conjugate(const std::vector<int>& part) {
    std::vector<int> out;
    if (part.empty()) return out;
    int mx = *std::max_element(part.begin(), part.end());
    for (int i = 1; i <= mx; ++i) {
        int c = 0;
        for (int x : part)
            if (x >= i) ++c;
        out.push_back(c);
    }
    return out;
}

std::vector<int> partition_from_decoration(const std::vector<DecoBlock>& deco) {
    std::vector<int> out;
    for (auto& b : deco) {
        int copies = b.kind == 'V' ? b.mult : 2 * b.mult;
        for (int i = 0; i < copies; ++i) out.push_back(b.size);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

static void gen_parts(int n, int maxp, int parts_left, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (n == 0) {
        if (parts_left <= 0) out.push_back(cur);
        return;
    }
    if (parts_left == 0) return;
    for (int x = std::min(n, maxp); x >= 1; --x) {
        cur.push_back(x);
        gen_parts(n - x, x, parts_left > 0 ? parts_left - 1 : -1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions_of(int n, int max_part, int num_parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    gen_parts(n, max_part > 0 ? max_part : n, num_parts > 0 ? num_parts : -1, cur, out);
    return out;
}

// ---------------- class validation ----------------

static std::map<int, int> multiplicities(const std::vector<int>& part) {
    std::map<int, int> m;
    for (int x : part) ++m[x];
    return m;
}

static bool so_unipotent_splits(const UnipotentData& u, int p) {
    if (p == 2) {
        for (auto& b : u.decoration)
            if (b.kind == 'V' || b.size % 2) return false;
        return true;
    }
    for (int x : u.partition)
        if (x % 2) return false;
    return true;
}

static ClassDescriptor validate_semisimple(const GroupSpec& D, const ClassDescriptor& raw) {
    ClassDescriptor c = raw;
    auto& s = c.ss;
    int n = D.n, p = D.p;
    if (s.mult_one < 0 || s.mult_minus_one < 0)
        throw Error(ErrorCode::DimensionMismatch, "negative multiplicity");
    if (p == 2 && s.mult_minus_one)
        throw Error(ErrorCode::ParityViolation, "-1 equals 1 in characteristic 2");
    if (D.family != Family::SL && !s.singles.empty())
        throw Error(ErrorCode::ParityViolation, "unpaired eigenvalues only exist for SL");
    for (auto& [lab, k] : s.pairs)
        if (k <= 0) throw Error(ErrorCode::DimensionMismatch, "pair multiplicity must be positive");
    for (auto& [lab, k] : s.singles)
        if (k <= 0) throw Error(ErrorCode::DimensionMismatch, "multiplicity must be positive");

    std::set<std::string> bases;
    for (auto& [lab, k] : s.pairs)
        for (auto& [b, e] : parse_mono(lab).exps) bases.insert(b);
    for (auto& [lab, k] : s.singles)
        for (auto& [b, e] : parse_mono(lab).exps) bases.insert(b);
    std::map<std::string, std::string> rel;
    for (auto& [b, tag] : s.relations) {
        if (!bases.count(b)) continue;
        int k = relation_order(s.relations, b);
        if (k < 3) throw Error(ErrorCode::OrderViolation, "eigenvalue order tag must exceed 2");
        if (p > 0 && k % p == 0)
            throw Error(ErrorCode::OrderViolation, "eigenvalue order divisible by the characteristic");
        if (raw.order > 0 && D.family != Family::SL && (2 * raw.order) % k != 0)
            throw Error(ErrorCode::OrderViolation, "eigenvalue order tag incompatible with declared order");
        rel[b] = k == 4 ? std::string("sq=-1") : "ord=" + std::to_string(k);
    }
    s.relations = rel;

    int total = s.mult_one + s.mult_minus_one;
    for (auto& [lab, k] : s.pairs) total += 2 * k;
    for (auto& [lab, k] : s.singles) total += k;
    if (total != n)
        throw Error(ErrorCode::DimensionMismatch,
                    "multiplicities sum to " + std::to_string(total) + ", expected " + std::to_string(n));

    // Canonical pair orientation and merging.
    std::map<std::string, int> merged;
    for (auto& [lab, k] : s.pairs) {
        Mono m = reduce(parse_mono(lab), rel, p);
        Mono mi = reduce(mono_inv(m), rel, p);
        if (reduce(mono_mul(m, m), rel, p).is_one())
            throw Error(ErrorCode::OrderViolation, "pair eigenvalue '" + lab + "' squares to 1");
        std::string a = mono_string(m), b = mono_string(mi);
        merged[std::min(a, b)] += k;
    }
    s.pairs.assign(merged.begin(), merged.end());
    std::stable_sort(s.pairs.begin(), s.pairs.end(),
                     [](auto& x, auto& y) { return x.second > y.second; });
    std::map<std::string, int> msing;
    for (auto& [lab, k] : s.singles) msing[mono_string(reduce(parse_mono(lab), rel, p))] += k;
    s.singles.assign(msing.begin(), msing.end());
    std::stable_sort(s.singles.begin(), s.singles.end(),
                     [](auto& x, auto& y) { return x.second > y.second; });

    if (D.family == Family::Sp || (D.family == Family::SO && n % 2 == 0)) {
        if (s.mult_one % 2 || s.mult_minus_one % 2)
            throw Error(ErrorCode::ParityViolation, "eigenvalues 1 and -1 need even multiplicity");
    } else if (D.family == Family::SO) {
        if (s.mult_one % 2 == 0 || s.mult_minus_one % 2)
            throw Error(ErrorCode::ParityViolation,
                        "odd orthogonal: 1 needs odd and -1 even multiplicity");
    }

    auto ev = eigenvalues(c, p);
    if (ev.size() < 2) throw Error(ErrorCode::CentralClass, "scalar matrix");

    bool so_even = D.family == Family::SO && n % 2 == 0;
    if (s.variant != Variant::unspecified && !(so_even && s.mult_one == 0 && s.mult_minus_one == 0))
        throw Error(ErrorCode::ParityViolation, "variant only applies to split SO classes");

    if (c.order != 0) {
        if (!is_prime(c.order)) throw Error(ErrorCode::OrderViolation, "declared order is not prime");
        if (c.order == p)
            throw Error(ErrorCode::OrderViolation, "semisimple class cannot have order p");
    }
    c.u = UnipotentData{};
    return c;
}

static ClassDescriptor validate_unipotent(const GroupSpec& D, const ClassDescriptor& raw,
                                          ValidateOptions opt) {
    ClassDescriptor c = raw;
    auto& u = c.u;
    int n = D.n, p = D.p;
    if (c.order != 0) {
        if (p == 0) throw Error(ErrorCode::OrderViolation, "unipotent classes in characteristic 0 carry no order");
        if (c.order != p) throw Error(ErrorCode::OrderViolation, "unipotent class must have order p");
    }
    bool char2_form = p == 2 && (D.family == Family::Sp || D.family == Family::SO);
    if (char2_form) {
        if (u.decoration.empty())
            throw Error(ErrorCode::ParityViolation, "characteristic 2 needs a V/W decoration");
        std::map<int, int> vs, ws;
        for (auto& b : u.decoration) {
            if (b.mult <= 0 || b.size <= 0)
                throw Error(ErrorCode::DimensionMismatch, "decoration sizes must be positive");
            if (b.kind == 'V') {
                if (b.size % 2) throw Error(ErrorCode::ParityViolation, "V blocks have even size");
                vs[b.size] += b.mult;
            } else if (b.kind == 'W') {
                ws[b.size] += b.mult;
            } else {
                throw Error(ErrorCode::ParseError, "decoration kind must be V or W");
            }
        }
        std::vector<DecoBlock> deco;
        int asum = 0;
        for (auto it = vs.rbegin(); it != vs.rend(); ++it) {
            if (it->second > 2) throw Error(ErrorCode::ParityViolation, "V block multiplicity exceeds 2");
            deco.push_back({'V', it->first, it->second});
            asum += it->second;
        }
        for (auto it = ws.rbegin(); it != ws.rend(); ++it) deco.push_back({'W', it->first, it->second});
        if (D.family == Family::SO && asum % 2)
            throw Error(ErrorCode::ParityViolation, "SO needs an even number of V blocks");
        auto part = partition_from_decoration(deco);
        if (!u.partition.empty()) {
            auto given = u.partition;
            std::sort(given.rbegin(), given.rend());
            if (given != part)
                throw Error(ErrorCode::DimensionMismatch, "partition disagrees with decoration");
        }
        u.decoration = deco;
        u.partition = part;
    } else if (!u.decoration.empty()) {
        throw Error(ErrorCode::ParityViolation, "decorations only apply to Sp/SO in characteristic 2");
    }
    for (int x : u.partition)
        if (x <= 0) throw Error(ErrorCode::DimensionMismatch, "parts must be positive");
    std::sort(u.partition.rbegin(), u.partition.rend());
    int total = std::accumulate(u.partition.begin(), u.partition.end(), 0);
    if (total != n)
        throw Error(ErrorCode::DimensionMismatch,
                    "partition sums to " + std::to_string(total) + ", expected " + std::to_string(n));
    if (u.partition.empty() || u.partition[0] == 1) throw Error(ErrorCode::CentralClass, "identity class");
    if (p > 0 && opt.require_prime_order && u.partition[0] > p)
        throw Error(ErrorCode::OrderViolation, "part exceeds p for an element of order p");
    if (p != 2 && opt.require_parity) {
        auto mult = multiplicities(u.partition);
        for (auto& [x, k] : mult) {
            if (D.family == Family::Sp && x % 2 == 1 && k % 2)
                throw Error(ErrorCode::ParityViolation,
                            "odd part " + std::to_string(x) + " has odd multiplicity");
            if (D.family == Family::SO && x % 2 == 0 && k % 2)
                throw Error(ErrorCode::ParityViolation,
                            "even part " + std::to_string(x) + " has odd multiplicity");
        }
    }
    bool so_even = D.family == Family::SO && n % 2 == 0;
    if (u.variant != Variant::unspecified && !(so_even && so_unipotent_splits(u, p)))
        throw Error(ErrorCode::ParityViolation, "variant only applies to split SO classes");
    u.as_type.clear();
    if (char2_form && u.partition[0] <= 2) {
        int s = 0;
        for (int x : u.partition)
            if (x == 2) ++s;
        int a = 0;
        for (auto& b : u.decoration)
            if (b.kind == 'V') a += b.mult;
        u.as_type = std::string(1, char('a' + a)) + std::to_string(s);
    }
    c.ss = EigenPattern{};
    return c;
}

ClassDescriptor validate_class(const GroupSpec& group, const ClassDescriptor& raw, ValidateOptions opt) {
    GroupSpec G = validate_group(group);
    GroupSpec D = descriptor_group(G);
    if (raw.kind == Kind::Semisimple) return validate_semisimple(D, raw);
    return validate_unipotent(D, raw, opt);
}

ClassDescriptor unipotent(std::vector<int> partition, Variant v) {
    ClassDescriptor c;
    c.kind = Kind::Unipotent;
    c.u.partition = std::move(partition);
    c.u.variant = v;
    return c;
}

ClassDescriptor decorated(std::vector<DecoBlock> deco, Variant v) {
    ClassDescriptor c;
    c.kind = Kind::Unipotent;
    c.u.decoration = std::move(deco);
    c.u.variant = v;
    return c;
}

ClassDescriptor semisimple(int one, int minus_one, std::vector<std::pair<std::string, int>> pairs,
                           std::map<std::string, std::string> relations) {
    ClassDescriptor c;
    c.kind = Kind::Semisimple;
    c.ss.mult_one = one;
    c.ss.mult_minus_one = minus_one;
    c.ss.pairs = std::move(pairs);
    c.ss.relations = std::move(relations);
    return c;
}

static std::string power(const std::string& base, int k) {
    return k == 1 ? base : base + "^" + std::to_string(k);
}

std::string describe(const ClassDescriptor& c) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    auto sep = [&] {
        if (!first) os << ",";
        first = false;
    };
    if (c.unipotent()) {
        if (!c.u.decoration.empty()) {
            os.str("");
            for (size_t i = 0; i < c.u.decoration.size(); ++i) {
                auto& b = c.u.decoration[i];
                if (i) os << " ";
                os << b.kind << "(" << b.size << ")";
                if (b.mult > 1) os << "^" << b.mult;
            }
            if (!c.u.as_type.empty()) os << " [" << c.u.as_type << "]";
            if (c.u.variant != Variant::unspecified) os << " " << variant_name(c.u.variant);
            return os.str();
        }
        auto m = multiplicities(c.u.partition);
        for (auto it = m.rbegin(); it != m.rend(); ++it) {
            sep();
            os << power("J" + std::to_string(it->first), it->second);
        }
        os << ")";
        if (c.u.variant != Variant::unspecified) os << " " << variant_name(c.u.variant);
        return os.str();
    }
    auto& s = c.ss;
    if (s.mult_one) {
        sep();
        os << "I" << s.mult_one;
    }
    if (s.mult_minus_one) {
        sep();
        os << "-I" << s.mult_minus_one;
    }
    for (auto& [lab, k] : s.pairs) {
        sep();
        os << "[" << lab << "]" << "I" << k << ",[" << lab << "]^-1 I" << k;
    }
    for (auto& [lab, k] : s.singles) {
        sep();
        os << "[" << lab << "]I" << k;
    }
    os << ")";
    for (auto& [b, t] : s.relations) os << " " << b << ":" << t;
    if (s.variant != Variant::unspecified) os << " " << variant_name(s.variant);
    return os.str();
}

std::string describe(const GroupSpec& g) {
    std::string s = std::string(family_name(g.family)) + std::to_string(g.n);
    return s + " (p=" + std::to_string(g.p) + ")";
}

}  // namespace topogen
