#include "scrolls/classifier.hpp"

#include <algorithm>

namespace scrolls {

namespace {

bool same_parity(int x, int y) { return ((x - y) % 2 + 2) % 2 == 0; }

}  // namespace

int min_curve_self_int_generic(int genus, int ambient_dim) {
    const int g = genus, n = ambient_dim;
    if (g < 2) throw DomainError("special scrolls need g >= 2");
    if (n < 3) throw DomainError("ambient dimension must be at least 3");
    if (n >= g - 1) return 2 * g - 2 - n;
    return same_parity(n, g - 1) ? g - 1 : g;
}

bool stability_possible(int genus, int degree) {
    if (genus < 2) throw DomainError("stability bound needs g >= 2");
    return degree < 4 * genus - 4;
}

GenericScrollModel classify_generic(int genus, int ambient_dim) {
    const int g = genus, n = ambient_dim;
    if (g < 2) throw DomainError("special scrolls need g >= 2");
    if (n < 3) throw DomainError("ambient dimension must be at least 3");

    GenericScrollModel m;
    m.genus = g;
    m.ambient_dim = n;
    m.degree = n + 2 * g - 2;
    m.speciality = 1;
    m.min_self_int = min_curve_self_int_generic(g, n);
    m.stability_possible = stability_possible(g, m.degree);
    m.special_curve.degree = 2 * g - 2;
    m.special_curve.linearly_normal = n >= g - 1;

    if (n >= 3 * g - 3) {
        m.case_id = 1;
        m.surface = {Tri::Yes, n - 2 * g + 2, "K-b", "O_X + O_X(K-b)"};
        m.linear_system = "|X0+bf|";
        m.b_degree = n;
        m.special_curve.is_min_degree = true;
        m.special_curve.self_int = 2 * g - 2 - n;
    } else if (n >= g - 1) {
        m.case_id = 2;
        m.surface = {Tri::No, -(2 * g - 2 - n), "e", "indecomposable"};
        m.linear_system = "|X0+(K-e)f|";
        m.num_points = 3 * g - 3 - n;
        m.special_curve.is_min_degree = true;
        m.special_curve.self_int = 2 * g - 2 - n;
    } else {
        m.case_id = 3;
        m.surface = {Tri::No, same_parity(n, g - 1) ? -(g - 1) : -g, "e", "indecomposable"};
        m.linear_system = "|X0+(K-a)f|, a ~ pi_*(X0.Y)";
        m.num_points = 3 * g - 3 - n;
        m.special_curve.is_min_degree = false;
        // The special directrix is the image of Y, a unisecant of self-intersection 2g-2+N.
        m.special_curve.self_int = 2 * g - 2 + n;
    }
    return m;
}

namespace {

TableMinCurve curve(int mult, int deg, bool special, int span, std::optional<int> fam,
                    std::string text) {
    return {mult, deg, special, span, fam, std::move(text)};
}

GrassCurveType alpha_plane(int genus, int degree) {
    GrassCurveType t;
    t.locus = GrassLocus::AlphaPlane;
    t.degree = degree;
    t.singular_count = (degree - 1) * (degree - 2) / 2 - genus;
    return t;
}

GrassCurveType smooth_quadric(int a1, int a2, int n) {
    GrassCurveType t;
    t.locus = GrassLocus::SmoothQuadric;
    t.degree = a1 + a2;
    t.a1 = a1;
    t.a2 = a2;
    t.singular_count = n;
    return t;
}

GrassCurveType quadric_cone(int degree, int a, int n) {
    GrassCurveType t;
    t.locus = GrassLocus::QuadricCone;
    t.degree = degree;
    t.a = a;
    t.singular_count = n;
    t.vertex_mult = vertex_multiplicity(degree, a);
    return t;
}

std::vector<TableRow> genus2_rows() {
    std::vector<TableRow> rows;
    TableRow r;
    r.genus = 2;
    r.hyperelliptic = true;

    r.d = 4;
    r.i = 2;
    r.decomposable = Tri::Yes;
    r.E0_desc = "O_X + O_X(-b); b !~ 2K; b ~ K+P+Q";
    r.e = 4;
    r.e_divisor_degree = -4;
    r.H_desc = "|X0+bf| (cone)";
    r.cone = true;
    r.min_curves = {curve(1, 4, false, 2, 3, "C4 in P2 (inf^3)")};
    r.grass_source = alpha_plane(2, 4);
    rows.push_back(r);

    r = TableRow{};
    r.genus = 2;
    r.hyperelliptic = true;
    r.d = 5;
    r.i = 1;
    r.decomposable = Tri::No;
    r.E0_desc = "indecomposable; e = -P";
    r.e = 1;
    r.e_divisor_degree = -1;
    r.H_desc = "|X0+(K+P)f|";
    r.min_curves = {curve(2, 1, true, 1, std::nullopt, "phi(X0) = 2C1* in P1"),
                    curve(1, 4, false, 2, 2, "C4 in P2 (inf^2)")};
    r.flagged_inconsistent = true;
    r.flag_note = "the row lists e = -P while the projection analysis gives e' = K-P for a "
                  "point on A1 f or A2 f; stored as listed";
    rows.push_back(r);

    r = TableRow{};
    r.genus = 2;
    r.hyperelliptic = true;
    r.d = 5;
    r.i = 1;
    r.decomposable = Tri::Yes;
    r.E0_desc = "O_X + O_X(K-b); deg b = 3; b base-point-free";
    r.e = 1;
    r.e_divisor_degree = -1;
    r.H_desc = "|X0+bf|";
    r.min_curves = {curve(2, 1, true, 1, std::nullopt, "phi(X0) = 2C1* in P1"),
                    curve(3, 1, true, 1, std::nullopt, "phi(X1) = 3C1* in P1")};
    rows.push_back(r);
    return rows;
}

TableRow quintic_cone_row(bool hyperelliptic) {
    TableRow r;
    r.genus = 3;
    r.hyperelliptic = hyperelliptic;
    r.d = 5;
    r.i = 3;
    r.decomposable = Tri::Yes;
    r.E0_desc = "O_X + O_X(-b); deg b = 5; b base-point-free";
    r.e = 5;
    r.e_divisor_degree = -5;
    r.H_desc = "|X0+bf| (cone)";
    r.cone = true;
    r.min_curves = {curve(1, 5, false, 2, 3, "C5 in P2 (inf^3)")};
    r.grass_source = alpha_plane(3, 5);
    return r;
}

TableRow degree7_indecomposable(bool hyperelliptic, int e, std::string h_desc,
                                std::vector<TableMinCurve> curves) {
    TableRow r;
    r.genus = 3;
    r.hyperelliptic = hyperelliptic;
    r.d = 7;
    r.i = 1;
    r.decomposable = Tri::No;
    r.E0_desc = "indecomposable";
    r.e = e;
    r.H_desc = std::move(h_desc);
    r.min_curves = std::move(curves);
    return r;
}

std::vector<TableRow> genus3_nonhyperelliptic_rows() {
    std::vector<TableRow> rows;
    TableRow r;
    r.genus = 3;
    r.d = 4;
    r.i = 4;
    r.decomposable = Tri::Yes;
    r.E0_desc = "O_X + O_X(-K)";
    r.e = 4;
    r.e_divisor_degree = -4;
    r.H_desc = "|X0+Kf| (cone)";
    r.cone = true;
    r.min_curves = {curve(1, 4, true, 2, 3, "C4* in P2 (inf^3)")};
    r.grass_source = alpha_plane(3, 4);
    rows.push_back(r);

    rows.push_back(quintic_cone_row(false));

    r = TableRow{};
    r.genus = 3;
    r.d = 6;
    r.i = 2;
    r.decomposable = Tri::Yes;
    r.E0_desc = "O_X + O_X(Q-P); P, Q in X; P != Q";
    r.e = 0;
    r.e_divisor_degree = 0;
    r.H_desc = "|X0+(K-P)f|";
    r.min_curves = {curve(3, 1, true, 1, std::nullopt, "phi(X0) = 3C1* in P1"),
                    curve(3, 1, true, 1, std::nullopt, "phi(X1) = 3C1* in P1")};
    r.grass_source = smooth_quadric(3, 3, 1);
    rows.push_back(r);

    r = TableRow{};
    r.genus = 3;
    r.d = 6;
    r.i = 2;
    r.decomposable = Tri::No;
    r.E0_desc = "indecomposable; e ~ 0";
    r.e = 0;
    r.e_divisor_degree = 0;
    r.H_desc = "|X0+(K-P)f|";
    r.min_curves = {curve(3, 1, true, 1, std::nullopt, "phi(X0) = 3C1* in P1"),
                    curve(1, 4, true, 2, 1, "C4* in P2 (inf^1)")};
    r.grass_source = quadric_cone(6, 3, 1);
    rows.push_back(r);

    rows.push_back(degree7_indecomposable(
        false, -1, "|X0+(K-e)f|",
        {curve(1, 4, true, 2, std::nullopt, "phi(X0) = C4* in P2"),
         curve(1, 5, false, 2, 1, "C5 in P2 (inf^1)")}));
    rows.push_back(degree7_indecomposable(
        false, -1, "|X0+(K-e)f|",
        {curve(1, 4, true, 2, std::nullopt, "phi(X0) = C4* in P2"),
         curve(4, 1, false, 1, std::nullopt, "4C1 in P1")}));

    r = TableRow{};
    r.genus = 3;
    r.d = 7;
    r.i = 1;
    r.decomposable = Tri::Yes;
    r.E0_desc = "O_X + O_X(K-b-P); deg b = 4; b nonspecial; b base-point-free; P in X";
    r.e = 1;
    r.e_divisor_degree = -1;
    r.H_desc = "|X0+bf|";
    r.min_curves = {curve(3, 1, true, 1, std::nullopt, "phi(X0) = 3C1* in P1"),
                    curve(4, 1, false, 1, std::nullopt, "phi(X1) = 4C1 in P1")};
    rows.push_back(r);

    rows.push_back(degree7_indecomposable(
        false, 1, "|X0+(K-P-e)f|",
        {curve(3, 1, true, 1, std::nullopt, "phi(X0) = 3C1* in P1"),
         curve(1, 5, false, 2, 1, "C5 in P2 (inf^1)")}));
    return rows;
}

std::vector<TableRow> genus3_hyperelliptic_rows() {
    std::vector<TableRow> rows;
    rows.push_back(quintic_cone_row(true));

    TableRow r;
    r.genus = 3;
    r.hyperelliptic = true;
    r.d = 6;
    r.i = 2;
    r.decomposable = Tri::Yes;
    r.E0_desc = "O_X + O_X(g12-b); deg b = 4; b base-point-free; b nonspecial";
    r.e = 2;
    r.e_divisor_degree = -2;
    r.H_desc = "|X0+bf|";
    r.min_curves = {curve(2, 1, true, 1, std::nullopt, "phi(X0) = 2C1* in P1"),
                    curve(4, 1, false, 1, std::nullopt, "phi(X1) = 4C1 in P1")};
    r.grass_source = smooth_quadric(2, 4, 0);
    rows.push_back(r);

    r = TableRow{};
    r.genus = 3;
    r.hyperelliptic = true;
    r.d = 6;
    r.i = 2;
    r.decomposable = Tri::No;
    r.E0_desc = "indecomposable; e ~ 0";
    r.e = 2;
    r.e_divisor_degree = 0;
    r.H_desc = "|X0+(g12-e)f|";
    r.min_curves = {curve(2, 1, true, 1, std::nullopt, "phi(X0) = 2C1* in P1"),
                    curve(1, 5, false, 2, 2, "C5 in P2 (inf^2)")};
    r.flagged_inconsistent = true;
    r.flag_note = "the row lists e ~ 0 together with e = 2, contradicting e = -deg(e); "
                  "stored as listed";
    r.grass_source = quadric_cone(6, 2, 0);
    rows.push_back(r);

    rows.push_back(degree7_indecomposable(
        true, -1, "|X0+(K-e)f|",
        {curve(2, 2, true, 2, std::nullopt, "phi(X0) = 2C2* in P2"),
         curve(1, 5, false, 2, 1, "C5 in P2 (inf^1)")}));
    rows.push_back(degree7_indecomposable(
        true, -1, "|X0+(K-e)f|",
        {curve(2, 2, true, 2, std::nullopt, "phi(X0) = 2C2* in P2"),
         curve(4, 1, false, 1, std::nullopt, "4C1 in P1")}));
    return rows;
}

}  // namespace

std::vector<TableRow> classify_p3(int genus, bool hyperelliptic) {
    std::vector<TableRow> rows;
    if (genus == 2) {
        if (!hyperelliptic) throw DomainError("every genus-2 curve is hyperelliptic");
        rows = genus2_rows();
    } else if (genus == 3) {
        rows = hyperelliptic ? genus3_hyperelliptic_rows() : genus3_nonhyperelliptic_rows();
    } else {
        throw DomainError("P^3 classification is available for genus 2 and 3 only");
    }
    std::stable_sort(rows.begin(), rows.end(), [](const TableRow& x, const TableRow& y) {
        if (x.d != y.d) return x.d < y.d;
        return x.decomposable == Tri::Yes && y.decomposable != Tri::Yes;
    });
    return rows;
}

std::vector<std::size_t> matching_rows(const ScrollModel& model, bool hyperelliptic) {
    const auto rows = classify_p3(model.surface.base.genus, hyperelliptic);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].d == model.degree && rows[i].e == model.surface.e &&
            rows[i].decomposable == model.surface.decomposable)
            out.push_back(i);
    return out;
}

const char* to_string(Genus2Point p) {
    switch (p) {
    case Genus2Point::OnX0Line: return "on_x0_line";
    case Genus2Point::SingularPointX1: return "singular_point_x1";
    case Genus2Point::OffSpecialFibers: return "off_special_fibers";
    case Genus2Point::OnA1A2Fiber: break;
    }
    return "on_a1_a2_fiber";
}

ScrollModel genus2_Rb() {
    const auto curve = CurveContext::make(2, true);
    auto b = DivisorClass::generic_effective(4, "K+A1+A2");
    b.base_point_free = Tri::Yes;
    return make_R_b(curve, b);
}

namespace {

ScrollModel genus2_cone() {
    const auto curve = CurveContext::make(2, true);
    auto b = DivisorClass::generic_effective(4, "K+P+Q");
    b.base_point_free = Tri::Yes;

    // P(O + O(-b)): the section X0 is contracted to the vertex.
    ScrollModel m;
    m.surface.base = curve;
    m.surface.e = b.degree;
    m.surface.e_divisor = DivisorClass::generic_effective(-b.degree, "-b");
    m.surface.decomposable = Tri::Yes;
    m.surface.tracking_complete = true;
    m.surface.tracked_curves.push_back(
        {CurveLabel::x0(), NumClass::section(), -b.degree, true, std::nullopt});
    const NumClass x1{1, b.degree};
    m.surface.tracked_curves.push_back(
        {CurveLabel::x1(), x1, m.surface.intersect(x1, x1), true, b});
    m.surface.check_invariants();
    m.surface.decomposable = decomposable_witness(m.surface);

    m.hyperplane = NumClass{1, b.degree};
    m.hyperplane_fiber = b;
    m.degree = m.surface.intersect(m.hyperplane, m.hyperplane);
    m.ambient_dim = 3;
    m.speciality = speciality_from(curve.genus, m.degree, m.ambient_dim);
    MinCurve section;
    section.label = "plane section";
    section.degree = m.surface.intersect(x1, m.hyperplane);
    section.self_int = m.surface.intersect(x1, x1);
    section.special = is_special(curve, b) ? Tri::Yes : Tri::No;
    section.family_dim = 3;
    m.min_curves = {section};
    return m;
}

}  // namespace

Genus2Outcome genus2_projection(const Genus2Case& input) {
    if (input.b_canonical)
        return Degenerate{"b ~ K: the map defined by |X0+bf| is not birational and R_b is a "
                          "rational ruled surface",
                          "genus 2, deg b = 4, b ~ K"};
    const ScrollModel rb = genus2_Rb();
    const CurveContext& curve = rb.surface.base;

    switch (input.where) {
    case Genus2Point::SingularPointX1:
        return Degenerate{"projection from the isolated singular point: X1 maps to a double "
                          "line and the projection is not birational onto its image",
                          "genus 2, projection from the singular point of the image of X1"};

    case Genus2Point::OnX0Line: {
        // The image of X0 is a double line; the point counts with multiplicity 6 - d = 2.
        ScrollModel cone = genus2_cone();
        if (cone.degree != rb.degree - 2) throw InternalError("cone degree is not deg R_b - 2");
        return cone;
    }

    case Genus2Point::OffSpecialFibers: {
        // |X1| = X0 + |b-K|f is a pencil with base points on A1 f and A2 f; off
        // those fibers exactly one irreducible member passes through the point.
        const auto minus_e = DivisorClass::canonical_shift(curve, rb.hyperplane_fiber, 0, -1);
        if (h0_h1(curve, minus_e).h0 < 1)
            throw InternalError("expected |X1| to move in a pencil in genus 2");
        const std::vector<PointSpec> pts{{"P", {CurveLabel::x1()}, true}};
        ScrollModel m = project_scroll(rb, pts, 0);
        m.surface.e_divisor.label = "K-(b-P)";
        return m;
    }

    case Genus2Point::OnA1A2Fiber: {
        // The member of |X1| through a second point of A_i f contains the fiber.
        const std::vector<PointSpec> pts{{"A1", {}, true}};
        return project_scroll(rb, pts, 0);
    }
    }
    throw InternalError("unhandled genus-2 point position");
}

Genus3Outcome genus3_d7_projection(std::span<const PointSpec> points, bool hyperelliptic) {
    if (points.size() != 3) throw DomainError("degree-7 genus-3 scrolls come from three points");
    const auto count = [&](const CurveLabel& c) {
        return std::count_if(points.begin(), points.end(),
                             [&](const PointSpec& p) { return p.lies_on(c); });
    };
    const auto on_x0 = count(CurveLabel::x0());
    const auto on_x1 = count(CurveLabel::x1());

    if (hyperelliptic && on_x0 % 2 != 0)
        throw DomainError("hyperelliptic base: the image of X0 is a double conic, so the number "
                          "of projection points on it must be even");
    if (on_x0 >= 2)
        return Rejected{"the line through two points of the plane quartic image of X0 meets it "
                        "in a further point: not a projection from exactly three points",
                        "genus 3, degree 7, two points on the image of X0"};
    if (on_x0 == 0 && on_x1 == 3)
        return Rejected{"the plane of three points of the image of X1 meets it in six points: "
                        "not a projection from exactly three points",
                        "genus 3, degree 7, three points on the image of X1"};

    const auto curve = CurveContext::make(3, hyperelliptic);
    auto b = DivisorClass::generic_effective(6, "b");
    b.base_point_free = Tri::Yes;
    b.birationally_very_ample = Tri::Yes;
    const ScrollModel rb = make_R_b(curve, b);
    return project_scroll(rb, points, 2);
}

}  // namespace scrolls
