#include "scrolls/report.hpp"

#include <sstream>

namespace scrolls {

namespace {

const char* rr_status(bool ok) { return ok ? "pass" : "fail"; }

template <class T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<T>();
}

GrassLocus locus_from_string(const std::string& s) {
    for (auto l : {GrassLocus::AlphaPlane, GrassLocus::BetaPlane, GrassLocus::SmoothQuadric,
                   GrassLocus::QuadricCone})
        if (s == to_string(l)) return l;
    throw DomainError("unknown Grassmannian locus '" + s + "'");
}

json min_curve_json(const MinCurve& mc) {
    return {{"label", mc.label},
            {"degree", mc.degree},
            {"self_int", mc.self_int},
            {"special", to_string(mc.special)},
            {"family_dim", optional_json(mc.family_dim)}};
}

}  // namespace

json to_json(const DivisorClass& d) {
    json j = {{"degree", d.degree},
              {"kind", to_string(d.kind)},
              {"label", d.label},
              {"base_point_free", to_string(d.base_point_free)},
              {"birationally_very_ample", to_string(d.birationally_very_ample)}};
    if (d.kind == DivisorKind::ExplicitSpecial) j["h0"] = d.explicit_h0;
    if (d.nontrivial) j["nontrivial"] = true;
    return j;
}

json to_json(const GenericScrollModel& m) {
    return {{"kind", "generic_scroll"},
            {"genus", m.genus},
            {"ambient_dim", m.ambient_dim},
            {"case_id", m.case_id},
            {"degree", m.degree},
            {"speciality", m.speciality},
            {"surface",
             {{"decomposable", to_string(m.surface.decomposable)},
              {"e", m.surface.e},
              {"e_desc", m.surface.e_desc},
              {"E0", m.surface.E0_desc}}},
            {"linear_system", m.linear_system},
            {"b_degree", optional_json(m.b_degree)},
            {"num_points", optional_json(m.num_points)},
            {"special_curve",
             {{"is_min_degree", m.special_curve.is_min_degree},
              {"linearly_normal", m.special_curve.linearly_normal},
              {"degree", m.special_curve.degree},
              {"self_int", m.special_curve.self_int}}},
            {"min_self_int", m.min_self_int},
            {"stability_possible", m.stability_possible},
            {"rr_check", rr_status(m.rr_holds())}};
}

GenericScrollModel generic_model_from_json(const json& j) {
    GenericScrollModel m;
    m.genus = j.at("genus");
    m.ambient_dim = j.at("ambient_dim");
    m.case_id = j.at("case_id");
    m.degree = j.at("degree");
    m.speciality = j.at("speciality");
    const auto& s = j.at("surface");
    m.surface.decomposable = tri_from_string(s.at("decomposable"));
    m.surface.e = s.at("e");
    m.surface.e_desc = s.at("e_desc");
    m.surface.E0_desc = s.at("E0");
    m.linear_system = j.at("linear_system");
    m.b_degree = optional_from<int>(j.at("b_degree"));
    m.num_points = optional_from<int>(j.at("num_points"));
    const auto& c = j.at("special_curve");
    m.special_curve.is_min_degree = c.at("is_min_degree");
    m.special_curve.linearly_normal = c.at("linearly_normal");
    m.special_curve.degree = c.at("degree");
    m.special_curve.self_int = c.at("self_int");
    m.min_self_int = j.at("min_self_int");
    m.stability_possible = j.at("stability_possible");
    return m;
}

json to_json(const GrassCurveType& t) {
    return {{"locus", to_string(t.locus)},   {"degree", t.degree},
            {"a1", t.a1},                    {"a2", t.a2},
            {"a", t.a},                      {"singular_count", t.singular_count},
            {"vertex_mult", t.vertex_mult},  {"interpretation", t.interpretation}};
}

json to_json(const TableRow& r) {
    json curves = json::array();
    for (const auto& c : r.min_curves)
        curves.push_back({{"multiplicity", c.multiplicity},
                          {"degree", c.degree},
                          {"special", c.special},
                          {"span", c.span},
                          {"family_dim", optional_json(c.family_dim)},
                          {"text", c.text}});
    return {{"kind", "table_row"},
            {"genus", r.genus},
            {"hyperelliptic", r.hyperelliptic},
            {"d", r.d},
            {"i", r.i},
            {"decomposable", to_string(r.decomposable)},
            {"E0", r.E0_desc},
            {"e", r.e},
            {"e_divisor_degree", optional_json(r.e_divisor_degree)},
            {"H", r.H_desc},
            {"cone", r.cone},
            {"min_curves", curves},
            {"flagged_inconsistent", r.flagged_inconsistent},
            {"flag_note", r.flag_note},
            {"grass_source", r.grass_source ? to_json(*r.grass_source) : json(nullptr)},
            {"rr_check", rr_status(r.rr_holds())}};
}

TableRow table_row_from_json(const json& j) {
    TableRow r;
    r.genus = j.at("genus");
    r.hyperelliptic = j.at("hyperelliptic");
    r.d = j.at("d");
    r.i = j.at("i");
    r.decomposable = tri_from_string(j.at("decomposable"));
    r.E0_desc = j.at("E0");
    r.e = j.at("e");
    r.e_divisor_degree = optional_from<int>(j.at("e_divisor_degree"));
    r.H_desc = j.at("H");
    r.cone = j.at("cone");
    for (const auto& c : j.at("min_curves"))
        r.min_curves.push_back({c.at("multiplicity"), c.at("degree"), c.at("special"),
                                c.at("span"), optional_from<int>(c.at("family_dim")),
                                c.at("text")});
    r.flagged_inconsistent = j.at("flagged_inconsistent");
    r.flag_note = j.at("flag_note");
    if (const auto& g = j.at("grass_source"); !g.is_null()) {
        GrassCurveType t;
        t.locus = locus_from_string(g.at("locus"));
        t.degree = g.at("degree");
        t.a1 = g.at("a1");
        t.a2 = g.at("a2");
        t.a = g.at("a");
        t.singular_count = g.at("singular_count");
        t.vertex_mult = g.at("vertex_mult");
        t.interpretation = g.at("interpretation");
        r.grass_source = t;
    }
    return r;
}

json to_json(const ScrollModel& m) {
    json curves = json::array();
    for (const auto& tc : m.surface.tracked_curves)
        curves.push_back({{"label", tc.label.str()},
                          {"class", {{"a", tc.num_class.a}, {"b", tc.num_class.b}}},
                          {"self_int", tc.self_int},
                          {"irreducible", tc.irreducible},
                          {"plane_divisor",
                           tc.plane_divisor ? to_json(*tc.plane_divisor) : json(nullptr)}});
    json mins = json::array();
    for (const auto& mc : m.min_curves) mins.push_back(min_curve_json(mc));
    return {{"kind", "scroll_model"},
            {"genus", m.surface.base.genus},
            {"hyperelliptic", m.surface.base.hyperelliptic},
            {"e", m.surface.e},
            {"e_divisor", to_json(m.surface.e_divisor)},
            {"decomposable", to_string(m.surface.decomposable)},
            {"hyperplane", {{"a", m.hyperplane.a}, {"b", m.hyperplane.b}}},
            {"hyperplane_fiber", to_json(m.hyperplane_fiber)},
            {"degree", m.degree},
            {"speciality", m.speciality},
            {"ambient_dim", m.ambient_dim},
            {"tracked_curves", curves},
            {"min_curves", mins},
            {"warnings", m.warnings},
            {"rr_check", rr_status(m.rr_holds())}};
}

json to_json(const MinCurveReport& r) {
    json cases = json::array();
    for (const auto& c : r.cases)
        cases.push_back({{"curve", c.curve},
                         {"self_int", c.self_int},
                         {"family_dim", c.family_dim},
                         {"is_minimum", c.is_minimum}});
    return {{"kind", "min_curve_report"},
            {"cases", cases},
            {"decomposable_after", r.decomposable_after},
            {"j", r.j},
            {"minimum", r.minimum()}};
}

json to_json(const Degenerate& d) {
    return {{"kind", "degenerate"},
            {"reason", d.reason},
            {"case", d.citation},
            {"rr_check", "not_applicable"}};
}

json to_json(const Rejected& r) {
    return {{"kind", "rejected"},
            {"reason", r.reason},
            {"case", r.citation},
            {"rr_check", "not_applicable"}};
}

json to_json(const Report& r) {
    return {{"schema_version", kSchemaVersion},
            {"query_echo", r.query_echo},
            {"results", r.results},
            {"warnings", r.warnings},
            {"provenance", r.provenance}};
}

Report report_from_json(const json& j) {
    if (j.at("schema_version") != kSchemaVersion)
        throw DomainError("unsupported schema_version " + j.at("schema_version").dump());
    Report r;
    r.query_echo = j.at("query_echo");
    r.results = j.at("results").get<std::vector<json>>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    r.provenance = j.at("provenance").get<std::vector<std::string>>();
    return r;
}

std::string serialize_structured(const Report& r) { return to_json(r).dump(2) + "\n"; }

Report parse_structured(const std::string& text) { return report_from_json(json::parse(text)); }

namespace {

void render_value(std::ostringstream& os, const json& v, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        for (const auto& [key, val] : v.items()) {
            if (val.is_structured() && !val.empty()) {
                os << pad << key << ":\n";
                render_value(os, val, indent + 2);
            } else {
                os << pad << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump())
                   << "\n";
            }
        }
    } else if (v.is_array()) {
        for (const auto& item : v) {
            if (item.is_structured()) {
                os << pad << "-\n";
                render_value(os, item, indent + 2);
            } else {
                os << pad << "- " << (item.is_string() ? item.get<std::string>() : item.dump())
                   << "\n";
            }
        }
    } else {
        os << pad << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

}  // namespace

std::string render_text(const Report& r) {
    std::ostringstream os;
    os << "query: " << r.query_echo.dump() << "\n";
    for (std::size_t i = 0; i < r.results.size(); ++i) {
        os << "\nresult " << i + 1;
        if (i < r.provenance.size()) os << " [" << r.provenance[i] << "]";
        os << "\n";
        render_value(os, r.results[i], 2);
    }
    if (!r.warnings.empty()) {
        os << "\nwarnings:\n";
        for (const auto& w : r.warnings) os << "  - " << w << "\n";
    }
    return os.str();
}

}  // namespace scrolls
