#include "topogen/serialize.hpp"

namespace topogen {

namespace {

template <class T>
T get(const Json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
    }
}

void require_object(const Json& j, const char* what) {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an object");
}

std::vector<std::pair<std::string, int>> labelled_list(const Json& j, const char* key) {
    std::vector<std::pair<std::string, int>> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) throw Error(ErrorCode::ParseError, std::string(key) + " must be a list");
    for (auto& e : j[key]) {
        require_object(e, key);
        if (!e.contains("label")) throw Error(ErrorCode::ParseError, "eigenvalue entry without label");
        out.push_back({get<std::string>(e, "label", ""), get<int>(e, "mult", 1)});
    }
    return out;
}

Json labelled_json(const std::vector<std::pair<std::string, int>>& v) {
    Json a = Json::array();
    for (auto& [l, k] : v) a.push_back(Json{{"label", l}, {"mult", k}});
    return a;
}

}  // namespace

GroupSpec group_from_json(const Json& j) {
    require_object(j, "group");
    GroupSpec g;
    g.family = parse_family(get<std::string>(j, "family", ""));
    g.n = get<int>(j, "n", g.family == Family::Spin8 ? 8 : 0);
    g.p = get<int>(j, "p", 0);
    return g;
}

Json to_json(const GroupSpec& g) {
    return Json{{"family", family_name(g.family)}, {"n", g.n}, {"p", g.p}};
}

ClassDescriptor class_from_json(const Json& j) {
    require_object(j, "class");
    ClassDescriptor c;
    std::string kind = get<std::string>(j, "kind", "");
    c.order = get<int>(j, "order", 0);
    Variant var = parse_variant(get<std::string>(j, "variant", ""));
    if (kind == "unipotent") {
        c.kind = Kind::Unipotent;
        c.u.partition = get<std::vector<int>>(j, "partition", {});
        c.u.variant = var;
        if (j.contains("decoration")) {
            if (!j["decoration"].is_array()) throw Error(ErrorCode::ParseError, "decoration must be a list");
            for (auto& b : j["decoration"]) {
                require_object(b, "decoration block");
                DecoBlock d;
                if (b.contains("V")) {
                    d.kind = 'V';
                    d.size = get<int>(b, "V", 0);
                } else if (b.contains("W")) {
                    d.kind = 'W';
                    d.size = get<int>(b, "W", 0);
                } else {
                    throw Error(ErrorCode::ParseError, "decoration block needs a V or W size");
                }
                d.mult = get<int>(b, "mult", 1);
                if (d.size <= 0 || d.mult <= 0) throw Error(ErrorCode::ParseError, "decoration sizes must be positive");
                c.u.decoration.push_back(d);
            }
        }
        return c;
    }
    if (kind == "semisimple") {
        c.kind = Kind::Semisimple;
        c.ss.mult_one = get<int>(j, "mult_one", 0);
        c.ss.mult_minus_one = get<int>(j, "mult_minus_one", 0);
        if (c.ss.mult_one < 0 || c.ss.mult_minus_one < 0)
            throw Error(ErrorCode::ParseError, "multiplicities must be nonnegative");
        c.ss.pairs = labelled_list(j, "pairs");
        c.ss.singles = labelled_list(j, "singles");
        c.ss.relations = get<std::map<std::string, std::string>>(j, "relations", {});
        c.ss.variant = var;
        return c;
    }
    throw Error(ErrorCode::ParseError, "class kind must be 'unipotent' or 'semisimple'");
}

Json to_json(const ClassDescriptor& c) {
    Json j;
    if (c.unipotent()) {
        j["kind"] = "unipotent";
        j["partition"] = c.u.partition;
        if (!c.u.decoration.empty()) {
            Json d = Json::array();
            for (auto& b : c.u.decoration) d.push_back(Json{{std::string(1, b.kind), b.size}, {"mult", b.mult}});
            j["decoration"] = d;
        }
        if (!c.u.as_type.empty()) j["as_type"] = c.u.as_type;
        if (c.u.variant != Variant::unspecified) j["variant"] = variant_name(c.u.variant);
    } else {
        j["kind"] = "semisimple";
        j["mult_one"] = c.ss.mult_one;
        j["mult_minus_one"] = c.ss.mult_minus_one;
        j["pairs"] = labelled_json(c.ss.pairs);
        if (!c.ss.singles.empty()) j["singles"] = labelled_json(c.ss.singles);
        if (!c.ss.relations.empty()) j["relations"] = c.ss.relations;
        if (c.ss.variant != Variant::unspecified) j["variant"] = variant_name(c.ss.variant);
    }
    if (c.order) j["order"] = c.order;
    j["text"] = describe(c);
    return j;
}

Json to_json(const EigenProfile& p) {
    Json j{{"d", p.d}, {"e", p.e}};
    if (p.spin8) j["spin8"] = *p.spin8;
    return j;
}

Json to_json(const Verdict& v) {
    Json j;
    j["empty"] = v.empty;
    j["reason"] = v.empty ? reason_name(v.reason) : "Generic";
    if (!v.case_id.empty()) j["row"] = v.case_id;
    if (!v.detail.empty()) j["detail"] = v.detail;
    j["sum_d"] = v.sum_d;
    j["sum_e"] = v.sum_e;
    j["bound"] = v.bound;
    Json pr = Json::array();
    for (auto& p : v.profiles) pr.push_back(to_json(p));
    j["profiles"] = pr;
    if (!v.sl4_profiles.empty()) {
        Json w = Json::array();
        for (auto& p : v.sl4_profiles) w.push_back(to_json(p));
        j["sl4_profiles"] = w;
    }
    if (!v.spin8.empty()) j["spin8"] = v.spin8;
    return j;
}

}  // namespace topogen
