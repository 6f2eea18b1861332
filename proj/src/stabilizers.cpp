#include "topogen/stabilizers.hpp"

#include <map>
#include <set>

#include "topogen/closure.hpp"
#include "topogen/invariants.hpp"
#include "topogen/oracle.hpp"

namespace topogen {

ThresholdRow threshold(const GroupSpec& group) {
    GroupSpec G = validate_group(group);
    long long n = G.n;
    switch (G.family) {
        case Family::SL:
            if (n == 2) return {48, 72, "n = 2"};
            return {18 * n * n, 18 * n * n, "n >= 3"};
        case Family::Sp:
            if (n == 4 || (n == 6 && G.p == 2)) return {9 * n * n + 16, 12 * n * n, "n = 4 or (n,p) = (6,2)"};
            return {9 * n * n, 12 * n * n, "n >= 6 and (n,p) != (6,2)"};
        case Family::SO:
        case Family::Spin8:
            if (n < 7) throw Error(ErrorCode::UnsupportedGroup, "no threshold for SO with n < 7");
            return {9 * n * n, 16 * (n - 1) * (n - 1), "n >= 7"};
    }
    throw Error(ErrorCode::UnsupportedGroup, "unknown family");
}

ThresholdRow threshold(const std::string& name) {
    static const std::map<std::string, std::pair<long long, long long>> rows{
        {"E8", {720, 1200}}, {"E7", {378, 630}}, {"E6", {216, 360}}, {"F4", {144, 240}}, {"G2", {36, 48}}};
    auto it = rows.find(name);
    if (it == rows.end()) throw Error(ErrorCode::UnsupportedGroup, "no threshold row for " + name);
    return {8 * it->second.first, 8 * it->second.second, ""};
}

namespace {

bool exceeds(const ThresholdRow& row, long long dimV, long long dimVG) {
    if (dimVG > dimV || dimVG < 0) throw Error(ErrorCode::DimensionMismatch, "dimVG must lie in [0, dimV]");
    return 8 * (dimV - dimVG) > row.dG_eighths;
}

}  // namespace

bool generically_free(const GroupSpec& group, long long dimV, long long dimVG) {
    return exceeds(threshold(group), dimV, dimVG);
}

bool generically_free(const std::string& exceptional, long long dimV, long long dimVG) {
    return exceeds(threshold(exceptional), dimV, dimVG);
}

namespace {

std::vector<std::pair<std::string, int>> labelled(const std::vector<int>& mults, const char* stem) {
    std::vector<std::pair<std::string, int>> out;
    for (size_t i = 0; i < mults.size(); ++i) out.push_back({stem + std::to_string(i + 1), mults[i]});
    return out;
}

}  // namespace

std::vector<ClassDescriptor> enumerate_class_shapes(const GroupSpec& group, ShapeConstraints cons) {
    GroupSpec G = validate_group(group);
    GroupSpec D = descriptor_group(G);
    int n = D.n, p = D.p;
    if (n > cons.bound) throw Error(ErrorCode::BoundExceeded, "n exceeds the enumeration bound");
    std::vector<ClassDescriptor> out;
    std::set<std::string> seen;
    auto add = [&](ClassDescriptor c) {
        ClassDescriptor v = validate_class(G, c);
        if (seen.insert(describe(v)).second) out.push_back(v);
    };
    if (cons.unipotent)
        for (auto& c : unipotent_classes(G, true)) add(c);
    if (!cons.semisimple) return out;

    if (D.family == Family::SL) {
        for (auto& mu : partitions_of(n)) {
            if (mu.size() < 2) continue;
            ClassDescriptor c;
            c.kind = Kind::Semisimple;
            c.ss.singles = labelled(mu, "s");
            add(c);
        }
        return out;
    }
    bool so_even = D.family == Family::SO && n % 2 == 0;
    auto add_split = [&](ClassDescriptor c) {
        if (so_even && c.ss.mult_one == 0 && c.ss.mult_minus_one == 0) {
            c.ss.variant = Variant::plus;
            add(c);
            c.ss.variant = Variant::minus;
        }
        add(c);
    };
    if (p != 2) {
        // Involutions modulo the center.
        for (int b = 2; b < n; b += 2) {
            if (D.family != Family::SO || n % 2 == 0) {
                if (b > n - b) break;
            }
            add(semisimple(n - b, b));
        }
        if (D.family == Family::Sp || so_even)
            add_split(semisimple(0, 0, {{"i", n / 2}}, {{"i", "sq=-1"}}));
    }
    // Odd prime order: I_a plus pairs with generic labels.
    for (int a = n % 2; a < n; a += 2) {
        for (auto& mu : partitions_of((n - a) / 2)) {
            add_split(semisimple(a, 0, labelled(mu, "l")));
        }
    }
    return out;
}

CValue c_value(const GroupSpec& group, ShapeConstraints cons) {
    GroupSpec G = validate_group(group);
    CValue best;
    std::string best_key;
    for (auto& c : enumerate_class_shapes(G, cons)) {
        ++best.shapes;
        int dim = 0;
        try {
            dim = class_dim(G, c).dim_class;
        } catch (const Error&) {
            ++best.skipped;
            continue;
        }
        int r = min_generators(G, c);
        int val = r * dim;
        std::string key = describe(c);
        if (val > best.c || (val == best.c && key < best_key)) {
            best.c = val;
            best.witness = c;
            best.witness_r = r;
            best.witness_dim = dim;
            best_key = key;
        }
    }
    return best;
}

}  // namespace topogen
