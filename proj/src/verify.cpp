#include "topogen/verify.hpp"

#include <cmath>

#include "topogen/finfield.hpp"
#include "topogen/stabilizers.hpp"

namespace topogen {

Json verify_blocks(const std::vector<int>& qs, int max_size) {
    Json fails = Json::array();
    long long checked = 0;
    for (int q : qs) {
        int p = field(q).p();
        for (int a = 2; a <= max_size; ++a) {
            GFMatrix ja = jordan_block(q, a);
            struct Case {
                const char* name;
                GFMatrix m;
                int expect;
            };
            std::vector<Case> cases{
                {"wedge2", induced_matrix(ja, Functor::wedge2), induced_block_count(InducedKind::wedge2, a, 0, p)},
                {"sym2", induced_matrix(ja, Functor::sym2), induced_block_count(InducedKind::sym2, a, 0, p)}};
            for (int b = 2; b <= max_size; ++b)
                cases.push_back({"tensor", kron(ja, jordan_block(q, b)), induced_block_count(InducedKind::tensor, a, b, p)});
            int b = 2;
            for (auto& c : cases) {
                int got = static_cast<int>(jordan_blocks(c.m, 1).size());
                ++checked;
                if (got != c.expect)
                    fails.push_back(Json{{"q", q}, {"kind", c.name}, {"a", a}, {"b", b}, {"got", got}, {"expected", c.expect}});
                if (std::string(c.name) == "tensor") ++b;
            }
        }
    }
    return Json{{"suite", "blocks"}, {"pass", fails.empty()}, {"checked", checked}, {"failures", fails}};
}

Json verify_centralizers(const std::vector<int>& qs) {
    struct G {
        Family f;
        int n;
    };
    std::vector<G> groups{{Family::Sp, 4}, {Family::Sp, 6}, {Family::SO, 7},
                          {Family::Spin8, 8}, {Family::SO, 9}, {Family::SO, 10}};
    Json fails = Json::array();
    long long checked = 0, skipped = 0;
    for (int q : qs) {
        for (auto& g : groups) {
            GroupSpec spec{g.f, g.n, q};
            int dimG = dim_and_rank(spec).first;
            for (auto& c : enumerate_class_shapes(spec)) {
                int fq = instantiation_field(spec, c, q);
                if (!fq) {
                    ++skipped;
                    continue;
                }
                GFMatrix m = matrix_from_class(spec, c, fq);
                int lie = centralizer_lie_dim(spec, m);
                int expect = dimG - class_dim(spec, c).dim_class;
                ++checked;
                if (lie != expect || !preserves_form(m))
                    fails.push_back(Json{{"group", describe(spec)}, {"class", describe(c)}, {"q", fq},
                                         {"lie", lie}, {"expected", expect}});
            }
        }
    }
    return Json{{"suite", "centralizers"}, {"pass", fails.empty() && checked > 0}, {"checked", checked},
                {"skipped", skipped}, {"failures", fails}};
}

Json verify_psp4(long long cap) {
    auto gens = standard_generators(Family::Sp, 4, 3);
    Closure cl = group_closure(gens, cap);
    long long formula = group_order_formula(Family::Sp, 4, 3);
    GenerationCount a = class_reduced_generation_count(Family::Sp, 4, 3, 2, 3, cap);
    GenerationCount b = class_reduced_generation_count(Family::Sp, 4, 3, 3, 3, cap);
    long long psp = a.center_order ? a.group_order / a.center_order : 0;
    bool pass = !cl.truncated && cl.size == formula && psp == 25920 && a.hits == 0 && b.hits == 0 && a.trials > 0 &&
                b.trials > 0;
    auto doc = [](const GenerationCount& g) {
        return Json{{"pairs_tested", g.trials}, {"generating", g.hits}, {"r_cosets", g.r_elements},
                    {"s_cosets", g.s_elements}};
    };
    return Json{{"suite", "psp4"}, {"pass", pass},           {"sp4_order", cl.size},
                {"order_formula", formula}, {"psp4_order", psp}, {"r2_s3", doc(a)},
                {"r3_s3", doc(b)}};
}

Json verify_so9_count() {
    GroupSpec so9{Family::SO, 9, 0};
    ClassDescriptor c = unipotent({2, 2, 2, 2, 1});
    Json counts;
    std::vector<long long> n;
    bool forms = true;
    for (int q : {2, 3}) {
        GFMatrix m = matrix_from_class(so9, c, q);
        forms = forms && preserves_form(m);
        long long k = invariant_subspace_count(m, 4, SubspaceType::totally_singular);
        counts[std::to_string(q)] = k;
        n.push_back(k);
    }
    double est = std::log(static_cast<double>(n[1]) / static_cast<double>(n[0])) / std::log(1.5);
    bool pass = forms && n[0] > 0 && est >= 5.0 && est <= 7.0;
    return Json{{"suite", "so9-count"}, {"pass", pass}, {"counts", counts}, {"dimension_estimate", est},
                {"catalog_dimension", 6}};
}

Json verify_mc(long long trials, std::uint64_t seed, const std::vector<int>& qs) {
    Json rows = Json::array();
    bool pass = true;
    for (int q : qs) {
        GenerationCount ex = exact_generation_count(Family::SL, 2, q, 2, 3);
        GenerationCount mc = estimate_generation_probability(Family::SL, 2, q, 2, 3, trials, seed);
        double p = static_cast<double>(ex.hits) / static_cast<double>(ex.trials);
        double est = static_cast<double>(mc.hits) / static_cast<double>(mc.trials);
        double sigma = std::sqrt(p * (1 - p) / static_cast<double>(trials));
        bool ok = sigma == 0 ? est == p : std::fabs(est - p) <= 3 * sigma;
        pass = pass && ok;
        rows.push_back(Json{{"q", q}, {"exact", p}, {"exact_hits", ex.hits}, {"exact_pairs", ex.trials},
                            {"estimate", est}, {"hits", mc.hits}, {"trials", mc.trials}, {"sigma", sigma}, {"ok", ok}});
    }
    return Json{{"suite", "mc"}, {"pass", pass}, {"seed", seed}, {"rows", rows}};
}

Json run_suite(const std::string& name, long long trials, std::uint64_t seed, long long cap) {
    if (name == "blocks") return verify_blocks();
    if (name == "centralizers") return verify_centralizers();
    if (name == "psp4") return verify_psp4(cap);
    if (name == "so9-count") return verify_so9_count();
    if (name == "mc") return verify_mc(trials, seed);
    throw Error(ErrorCode::ParseError, "unknown verify suite '" + name + "'");
}

}  // namespace topogen
