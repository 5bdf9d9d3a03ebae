#include "scrolls/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include "CLI11.hpp"

#include "scrolls/report.hpp"
#include "scrolls/verify.hpp"

namespace scrolls {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_positive(const std::string& text, const std::string& token) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty() || v < 1)
        throw UsageError("bad curve index in '" + token + "'");
    return v;
}

}  // namespace

std::vector<PointToken> parse_points(const std::string& text) {
    if (text.empty()) throw UsageError("--points needs at least one point");
    std::vector<PointToken> out;
    for (const auto& point : split(text, ',')) {
        PointToken tok;
        bool saw_generic = false;
        for (const auto& raw : split(point, '+')) {
            std::string part = raw;
            part.erase(std::remove(part.begin(), part.end(), ' '), part.end());
            if (part == "X0") {
                tok.spec.on_curve.push_back(CurveLabel::x0());
            } else if (part == "X1") {
                tok.spec.on_curve.push_back(CurveLabel::x1());
            } else if (part.rfind("Yc:", 0) == 0) {
                tok.spec.on_curve.push_back(CurveLabel::y(parse_positive(part.substr(3), part)));
            } else if (part == "generic") {
                saw_generic = true;
            } else if (part == "singular") {
                tok.singular = true;
            } else if (part.rfind("fiber:", 0) == 0 && part.size() > 6) {
                if (!tok.spec.fiber.empty()) throw UsageError("two fiber labels in '" + point + "'");
                tok.spec.fiber = part.substr(6);
            } else {
                throw UsageError("unknown point token '" + part + "'");
            }
        }
        if (saw_generic && (!tok.spec.on_curve.empty() || tok.singular))
            throw UsageError("'generic' cannot be combined with curves in '" + point + "'");
        tok.spec.generic = tok.spec.on_curve.empty() && !tok.singular;
        out.push_back(std::move(tok));
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i].spec.fiber.empty()) out[i].spec.fiber = "P" + std::to_string(i + 1);
    return out;
}

namespace {

struct Outcome {
    Report report;
    int status = kExitOk;
};

void add_result(Report& r, json result, std::string provenance) {
    r.results.push_back(std::move(result));
    r.provenance.push_back(std::move(provenance));
}

// --- classify -----------------------------------------------------------

struct ClassifyArgs {
    int g = 0;
    std::optional<int> n, d, i;
};

Outcome cmd_classify(const ClassifyArgs& a) {
    Outcome o;
    o.report.query_echo = {{"command", "classify"}, {"g", a.g}};
    if (a.n) o.report.query_echo["N"] = *a.n;
    if (a.d) o.report.query_echo["d"] = *a.d;
    if (a.i) o.report.query_echo["i"] = *a.i;

    if (a.g < 2) throw UsageError("special scrolls need g >= 2");
    const int given = (a.n ? 1 : 0) + (a.d ? 1 : 0) + (a.i ? 1 : 0);
    if (given < 2 && !a.n) throw UsageError("give --N, or two of --N, --d, --i");

    int n = 0;
    if (a.n) {
        n = *a.n;
    } else {
        n = scroll_numerics(a.g, *a.d, *a.i);
        o.report.query_echo["N_resolved"] = n;
    }
    if (n < 3) throw UsageError("N = " + std::to_string(n) + " is below 3");

    if (a.n && a.d && a.i && scroll_numerics(a.g, *a.d, *a.i) != n)
        throw DomainError("d - 2g + 1 + i = " + std::to_string(scroll_numerics(a.g, *a.d, *a.i)) +
                          " disagrees with N = " + std::to_string(n));
    if (a.d && *a.d > speciality_degree_bound(a.g, n))
        throw DomainError("d = " + std::to_string(*a.d) + " exceeds 2g+N-2 = " +
                          std::to_string(speciality_degree_bound(a.g, n)) +
                          ": no special scroll");
    const int i = a.i ? *a.i : a.d ? speciality_from(a.g, *a.d, n) : 1;
    if (i < 1) throw DomainError("i = " + std::to_string(i) + ": the scroll is not special");
    if (i != 1)
        throw DomainError("i = " + std::to_string(i) +
                          ": the generic special scroll has speciality 1");

    const auto m = classify_generic(a.g, n);
    add_result(o.report, to_json(m), "generic special scroll, case " + std::to_string(m.case_id));
    if (!m.special_curve.linearly_normal)
        o.report.warnings.push_back("the special directrix curve is not linearly normal (N < g-1)");
    return o;
}

// --- table --------------------------------------------------------------

Outcome cmd_table(int g, bool hyp, bool non_hyp) {
    Outcome o;
    o.report.query_echo = {{"command", "table"}, {"g", g}};
    if (hyp) o.report.query_echo["hyperelliptic"] = true;
    if (non_hyp) o.report.query_echo["hyperelliptic"] = false;
    if (g != 2 && g != 3) throw UsageError("tables exist for g = 2 and g = 3 only");
    if (g == 2 && non_hyp) throw DomainError("every curve of genus 2 is hyperelliptic");

    std::vector<bool> kinds;
    if (g == 2 || hyp) kinds = {true};
    else if (non_hyp) kinds = {false};
    else kinds = {false, true};

    for (bool h : kinds) {
        const std::string table = "genus " + std::to_string(g) +
                                  (g == 2 ? "" : h ? " hyperelliptic" : " non-hyperelliptic") +
                                  " table";
        for (const auto& row : classify_p3(g, h)) {
            add_result(o.report, to_json(row), table + ", d = " + std::to_string(row.d));
            if (row.flagged_inconsistent)
                o.report.warnings.push_back(table + ", d = " + std::to_string(row.d) + ": " +
                                            row.flag_note);
        }
    }
    return o;
}

// --- project ------------------------------------------------------------

struct ProjectArgs {
    int g = 0;
    int deg_b = 0;
    std::string points;
    bool hyperelliptic = false;
    bool b_canonical = false;
    std::optional<int> span;
};

void add_model(Outcome& o, const ScrollModel& m, const std::string& what, bool hyp) {
    add_result(o.report, to_json(m), what);
    for (const auto& w : m.warnings) o.report.warnings.push_back(w);
    const int g = m.surface.base.genus;
    if (m.ambient_dim != 3 || (g != 2 && g != 3)) return;
    const auto rows = classify_p3(g, hyp);
    for (auto idx : matching_rows(m, hyp)) {
        o.report.query_echo["matched_rows"].push_back(idx);
        if (rows[idx].flagged_inconsistent)
            o.report.warnings.push_back("matched row d = " + std::to_string(rows[idx].d) + ": " +
                                        rows[idx].flag_note);
    }
}

Genus2Point genus2_position(const PointToken& t) {
    const auto& s = t.spec;
    const bool special_fiber = s.fiber == "A1" || s.fiber == "A2";
    if (t.singular) return Genus2Point::SingularPointX1;
    if (s.lies_on(CurveLabel::x0())) return Genus2Point::OnX0Line;
    if (s.lies_on(CurveLabel::x1()))
        return special_fiber ? Genus2Point::SingularPointX1 : Genus2Point::OffSpecialFibers;
    if (!s.on_curve.empty())
        throw DomainError("genus 2 projection points are described by X0, X1, generic, "
                          "singular and the fibers A1, A2");
    return special_fiber ? Genus2Point::OnA1A2Fiber : Genus2Point::OffSpecialFibers;
}

Outcome cmd_project(const ProjectArgs& a) {
    Outcome o;
    o.report.query_echo = {{"command", "project"},       {"g", a.g},
                           {"deg_b", a.deg_b},           {"points", a.points},
                           {"hyperelliptic", a.hyperelliptic}, {"b_canonical", a.b_canonical}};
    if (a.span) o.report.query_echo["span"] = *a.span;
    if (a.g < 2) throw UsageError("projection needs g >= 2");
    const auto tokens = parse_points(a.points);

    if (a.g == 2 && a.deg_b == 4 && tokens.size() == 1) {
        const Genus2Case c{genus2_position(tokens[0]), a.b_canonical};
        o.report.query_echo["position"] = to_string(c.where);
        const auto out = genus2_projection(c);
        if (const auto* d = std::get_if<Degenerate>(&out)) {
            add_result(o.report, to_json(*d), d->citation);
            o.report.warnings.push_back("degenerate: " + d->reason);
        } else {
            add_model(o, std::get<ScrollModel>(out), "genus 2 projection of R_b from one point",
                      true);
        }
        return o;
    }

    if (std::any_of(tokens.begin(), tokens.end(), [](const PointToken& t) { return t.singular; }))
        throw DomainError("'singular' names the genus-2 singular point of R_b (g = 2, deg b = 4)");
    std::vector<PointSpec> points;
    for (const auto& t : tokens) points.push_back(t.spec);

    if (a.g == 3 && a.deg_b == 6 && points.size() == 3 && !a.b_canonical &&
        (!a.span || *a.span == 2)) {
        const auto out = genus3_d7_projection(points, a.hyperelliptic);
        if (const auto* r = std::get_if<Rejected>(&out)) {
            add_result(o.report, to_json(*r), r->citation);
            o.report.warnings.push_back("rejected: " + r->reason);
        } else {
            add_model(o, std::get<ScrollModel>(out), "genus 3 projection of R_b from three points",
                      a.hyperelliptic);
        }
        return o;
    }

    const auto curve = CurveContext::make(a.g, a.hyperelliptic);
    if (a.b_canonical && a.deg_b != curve.canonical_degree())
        throw DomainError("--b-canonical needs deg b = 2g-2 = " +
                          std::to_string(curve.canonical_degree()));
    const auto b = a.b_canonical ? DivisorClass::canonical(curve)
                                 : DivisorClass::generic_effective(a.deg_b, "b");
    int max_c = 4;
    for (const auto& p : points)
        for (const auto& l : p.on_curve)
            if (l.kind == CurveLabelKind::Yc) max_c = std::max(max_c, l.c);
    const auto rb = make_R_b(curve, b, max_c);
    add_model(o, project_scroll(rb, points, a.span),
              "projection of R_b from " + std::to_string(points.size()) + " points", a.hyperelliptic);
    return o;
}

// --- verify -------------------------------------------------------------

Outcome cmd_verify(const std::string& suite, const VerifyRange& range) {
    Outcome o;
    o.report.query_echo = {{"command", "verify"},
                           {"suite", suite},
                           {"g_max", range.g_max},
                           {"k_max", range.k_max},
                           {"n_max", range.n_max}};
    if (!is_verify_suite(suite)) throw UsageError("unknown verify suite '" + suite + "'");
    for (const auto& r : run_verify_suite(suite, range)) {
        json j = {{"kind", "invariant"},
                  {"suite", r.suite},
                  {"invariant", r.invariant},
                  {"status", r.passed ? "pass" : "fail"},
                  {"cases", r.cases},
                  {"rr_check", "not_applicable"}};
        if (!r.passed) {
            j["counterexample"] = r.counterexample;
            o.status = kExitDomain;
        }
        add_result(o.report, std::move(j), "sweep " + r.suite);
    }
    return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linearly normal special scrolls: classification, projection and sweeps",
                 "scrolls"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
    app.fallthrough();

    ClassifyArgs ca;
    auto* classify = app.add_subcommand("classify", "Generic special scroll of genus g in P^N");
    classify->add_option("--g", ca.g, "Genus")->required();
    classify->add_option("--N", ca.n, "Ambient dimension");
    classify->add_option("--d", ca.d, "Degree");
    classify->add_option("--i", ca.i, "Speciality");

    int tg = 0;
    bool hyp = false, non_hyp = false;
    auto* table = app.add_subcommand("table", "Special scrolls in P^3 of genus 2 or 3");
    table->add_option("--g", tg, "Genus")->required();
    auto* hflag = table->add_flag("--hyperelliptic", hyp, "Hyperelliptic base curve only");
    table->add_flag("--non-hyperelliptic", non_hyp, "Non-hyperelliptic base curve only")
        ->excludes(hflag);

    ProjectArgs pa;
    auto* project = app.add_subcommand("project", "Project R_b from points lying on it");
    project->add_option("--g", pa.g, "Genus")->required();
    project->add_option("--deg-b", pa.deg_b, "Degree of b")->required();
    project->add_option("--points", pa.points,
                        "Comma-separated points; each joins X0, X1, Yc:<c>, generic, singular, "
                        "fiber:<label> with '+'")
        ->required();
    project->add_flag("--hyperelliptic", pa.hyperelliptic, "Hyperelliptic base curve");
    project->add_flag("--b-canonical", pa.b_canonical, "Take b to be the canonical class");
    project->add_option("--span", pa.span, "Dimension of the span of the points");

    std::string suite;
    VerifyRange range;
    auto* verify = app.add_subcommand("verify", "Run an invariant sweep");
    verify->add_option("--suite", suite, "Suite name")->required();
    verify->add_option("--g-max", range.g_max, "Largest genus");
    verify->add_option("--k-max", range.k_max, "Largest number of points");
    verify->add_option("--n-max", range.n_max, "Largest ambient dimension");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        Outcome o;
        if (*classify) o = cmd_classify(ca);
        else if (*table) o = cmd_table(tg, hyp, non_hyp);
        else if (*project) o = cmd_project(pa);
        else o = cmd_verify(suite, range);
        out << (format == "structured" ? serialize_structured(o.report) : render_text(o.report));
        return o.status;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}

}  // namespace scrolls
