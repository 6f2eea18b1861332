#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "topogen/closure.hpp"
#include "topogen/maxclass.hpp"
#include "topogen/serialize.hpp"
#include "topogen/stabilizers.hpp"
#include "topogen/verify.hpp"

using namespace topogen;

namespace {

struct Flags {
    std::string input;
    std::string format = "json";
    std::string suite;
    std::uint64_t seed = 1;
    long long trials = 10000;
    long long cap = 1000000;
};

Json read_input(const Flags& f) {
    std::stringstream ss;
    if (f.input.empty() || f.input == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(f.input);
        if (!in) throw Error(ErrorCode::ParseError, "cannot open " + f.input);
        ss << in.rdbuf();
    }
    try {
        Json j = Json::parse(ss.str());
        if (!j.is_object()) throw Error(ErrorCode::ParseError, "input must be a JSON object");
        if (j.contains("schema") && j["schema"] != kSchema)
            throw Error(ErrorCode::ParseError, "unsupported schema " + j["schema"].dump());
        return j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

std::vector<ClassDescriptor> classes_of(const Json& in) {
    if (!in.contains("classes") || !in["classes"].is_array())
        throw Error(ErrorCode::ParseError, "'classes' must be a list");
    std::vector<ClassDescriptor> out;
    for (auto& c : in["classes"]) out.push_back(class_from_json(c));
    return out;
}

const Json& field_of(const Json& in, const char* key) {
    if (!in.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
    return in[key];
}

int int_of(const Json& in, const char* key) {
    const Json& v = field_of(in, key);
    if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, std::string("'") + key + "' must be an integer");
    return v.get<int>();
}

Json cmd_decide(const Json& in) {
    GroupSpec g = group_from_json(field_of(in, "group"));
    auto cls = classes_of(in);
    std::optional<std::vector<Spin8Profile>> prof;
    if (in.contains("spin8_profiles")) prof = in["spin8_profiles"].get<std::vector<Spin8Profile>>();
    Verdict v = decide(g, cls, prof);
    Json out = to_json(v);
    auto row = table_row(g, cls);
    out["table_row"] = row ? Json(*row) : Json(nullptr);
    try {
        ScottBound s = scott_lower_bound(g, cls);
        out["scott"] = Json{{"holds", s.holds}, {"lhs", s.lhs}, {"rhs", s.rhs}};
    } catch (const Error&) {
        out["scott"] = nullptr;
    }
    return out;
}

Json cmd_classdim(const Json& in) {
    GroupSpec g = group_from_json(field_of(in, "group"));
    auto one = [&](const Json& cj) {
        ClassDescriptor raw = class_from_json(cj);
        bool admissible = true;
        ClassDescriptor c;
        try {
            c = validate_class(g, raw);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ParityViolation || !raw.unipotent()) throw;
            ValidateOptions relaxed;
            relaxed.require_parity = false;
            c = validate_class(g, raw, relaxed);
            admissible = false;
        }
        ClassDim d = class_dim(g, c);
        return Json{{"class", describe(c)}, {"dim_class", d.dim_class}, {"dim_centralizer", d.dim_centralizer},
                    {"profile", to_json(eigen_profile(g, c))}, {"quadratic", is_quadratic(c, g.p)},
                    {"admissible", admissible}};
    };
    if (in.contains("class")) return one(in["class"]);
    Json arr = Json::array();
    for (auto& c : field_of(in, "classes")) arr.push_back(one(c));
    return Json{{"results", arr}};
}

Json cmd_closure(const Json& in) {
    GroupSpec g = group_from_json(field_of(in, "group"));
    if (in.contains("upper") || in.contains("lower")) {
        ClassDescriptor u = validate_class(g, class_from_json(field_of(in, "upper")), ValidateOptions{false});
        ClassDescriptor l = validate_class(g, class_from_json(field_of(in, "lower")), ValidateOptions{false});
        return Json{{"upper", describe(u)}, {"lower", describe(l)}, {"in_closure", in_closure(g, u, l)}};
    }
    if (in.contains("blocks")) {
        ClassDescriptor c = smallest_class_with_blocks(g, int_of(in, "blocks"));
        return Json{{"smallest_class", to_json(c)}};
    }
    bool prime = in.value("prime_order", false);
    return Json{{"dot", closure_dot(g, prime)}};
}

Json cmd_genfree(const Json& in) {
    if (in.contains("exceptional")) {
        std::string name = field_of(in, "exceptional").get<std::string>();
        ThresholdRow row = threshold(name);
        long long dv = int_of(in, "dimV"), dvg = in.value("dimVG", 0);
        return Json{{"group", name}, {"dG", row.dG()}, {"dG_prime", row.dG_prime()},
                    {"generically_free", generically_free(name, dv, dvg)}};
    }
    GroupSpec g = group_from_json(field_of(in, "group"));
    Json out;
    if (in.contains("dimV")) {
        ThresholdRow row = threshold(g);
        long long dv = int_of(in, "dimV"), dvg = in.value("dimVG", 0);
        out["dG"] = row.dG();
        out["dG_prime"] = row.dG_prime();
        out["conditions"] = row.conditions;
        out["generically_free"] = generically_free(g, dv, dvg);
    }
    if (in.value("c_value", false) || !in.contains("dimV")) {
        CValue c = c_value(g);
        out["c_value"] = Json{{"c", c.c}, {"witness", to_json(c.witness)}, {"r", c.witness_r},
                              {"dim_class", c.witness_dim}, {"shapes", c.shapes}, {"skipped", c.skipped}};
    }
    return out;
}

Json cmd_maxclass(const Json& in) {
    GroupSpec g = group_from_json(field_of(in, "group"));
    QContext ctx = make_context(int_of(in, "r"), in.value("i", 1), g.p);
    MaxClass m = max_class(g, ctx);
    Json all = Json::array();
    for (auto& c : m.all) all.push_back(describe(c));
    return Json{{"r", ctx.r}, {"i", ctx.i}, {"t", ctx.t}, {"is_p", ctx.is_p}, {"dim", m.dim},
                {"class", to_json(m.cls)}, {"maximizers", all}, {"candidates", m.candidates}};
}

Json cmd_rslimit(const Json& in) {
    Family f = parse_family(field_of(in, "family").get<std::string>());
    Rational r = rs_limit(f, int_of(in, "n"), in.value("p", 0), int_of(in, "r"), int_of(in, "s"));
    return Json{{"limit", r.str()}, {"value", static_cast<double>(r.num) / static_cast<double>(r.den)}};
}

void print_text(const Json& j, const std::string& prefix = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object())
            print_text(*it, key);
        else if (it->is_string())
            std::cout << key << ": " << it->get<std::string>() << "\n";
        else
            std::cout << key << ": " << it->dump() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topological generation toolkit for classical groups"};
    app.require_subcommand(1);
    Flags f;
    auto common = [&](CLI::App* c) {
        c->add_option("--input", f.input, "Input document (default stdin)");
        c->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "text"}));
        c->add_option("--seed", f.seed, "Random seed");
        c->add_option("--trials", f.trials, "Monte Carlo trials");
        c->add_option("--cap", f.cap, "Enumeration cap");
    };
    std::vector<std::pair<std::string, std::string>> cmds{
        {"decide", "Decide whether a class tuple topologically generates"},
        {"classdim", "Class and centralizer dimensions"},
        {"closure", "Closure order, smallest class with m blocks, or the DOT Hasse diagram"},
        {"genfree", "Generic freeness threshold and c(G)"},
        {"maxclass", "Largest class of elements of prime order r"},
        {"rslimit", "Limit of the (r,s)-generation probability"},
        {"verify", "Run a finite-field cross-check suite"}};
    for (auto& [name, help] : cmds) {
        auto* sc = app.add_subcommand(name, help);
        common(sc);
        if (name == "verify")
            sc->add_option("--suite", f.suite, "blocks, centralizers, psp4, so9-count or mc");
    }
    CLI11_PARSE(app, argc, argv);
    std::string cmd = app.get_subcommands().front()->get_name();
    try {
        Json out;
        if (cmd == "verify") {
            std::string suite = f.suite;
            if (suite.empty()) suite = field_of(read_input(f), "suite").get<std::string>();
            out = run_suite(suite, f.trials, f.seed, f.cap);
        } else {
            Json in = read_input(f);
            if (cmd == "decide") out = cmd_decide(in);
            else if (cmd == "classdim") out = cmd_classdim(in);
            else if (cmd == "closure") out = cmd_closure(in);
            else if (cmd == "genfree") out = cmd_genfree(in);
            else if (cmd == "maxclass") out = cmd_maxclass(in);
            else out = cmd_rslimit(in);
        }
        Json doc{{"schema", kSchema}, {"command", cmd}};
        doc.update(out);
        if (f.format == "text")
            print_text(doc);
        else
            std::cout << doc.dump(2) << "\n";
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_validation_error(e.code()) ? 2 : 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
