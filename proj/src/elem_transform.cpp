#include "scrolls/elem_transform.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>

namespace scrolls {

bool PointSpec::lies_on(const CurveLabel& label) const {
    return std::find(on_curve.begin(), on_curve.end(), label) != on_curve.end();
}

int intersection_after_transform(int before, std::span<const PointSpec> points,
                                 const CurveLabel& c, const CurveLabel& d) {
    int result = before;
    for (const auto& p : points) {
        const bool on_c = p.lies_on(c);
        const bool on_d = p.lies_on(d);
        if (on_c && on_d) --result;
        else if (!on_c && !on_d) ++result;
    }
    return result;
}

namespace {

void validate_points(const RuledSurface& surface, std::span<const PointSpec> points) {
    std::set<std::string> fibers;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        if (!p.fiber.empty() && !fibers.insert(p.fiber).second)
            throw DomainError("two points in fiber " + p.fiber +
                              ": not an elementary transformation");
        std::set<CurveLabel> seen;
        for (const auto& label : p.on_curve) {
            if (!surface.find(label))
                throw DomainError("point " + std::to_string(i + 1) + " lies on untracked curve " +
                                  label.str());
            if (!seen.insert(label).second)
                throw DomainError("point " + std::to_string(i + 1) + " lists " + label.str() +
                                  " twice");
        }
    }

    // Two distinct irreducible curves share at most C.D points.
    const auto& cs = surface.tracked_curves;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            if (!cs[i].irreducible || !cs[j].irreducible) continue;
            const int cd = surface.intersect(cs[i].num_class, cs[j].num_class);
            const auto both = std::count_if(points.begin(), points.end(), [&](const PointSpec& p) {
                return p.lies_on(cs[i].label) && p.lies_on(cs[j].label);
            });
            if (both > std::max(cd, 0))
                throw DomainError(std::to_string(both) + " points on both " + cs[i].label.str() +
                                  " and " + cs[j].label.str() + ", but they meet in " +
                                  std::to_string(cd));
        }
    }
}

int least_self_int(const std::vector<TrackedCurve>& curves, const std::vector<int>& self) {
    int best = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < curves.size(); ++i)
        if (curves[i].irreducible) best = std::min(best, self[i]);
    return best;
}

}  // namespace

RuledSurface transform(const RuledSurface& surface, std::span<const PointSpec> points) {
    if (points.empty()) return surface;

    for (const auto& tc : surface.tracked_curves)
        if (tc.num_class.a != 1)
            throw DomainError("only unisecant curves can be tracked through a transform (" +
                              tc.label.str() + ")");
    const bool any_irreducible =
        std::any_of(surface.tracked_curves.begin(), surface.tracked_curves.end(),
                    [](const TrackedCurve& tc) { return tc.irreducible; });
    if (!any_irreducible)
        throw DomainError("cannot identify the new invariant e without a tracked section");
    validate_points(surface, points);

    const auto& curves = surface.tracked_curves;
    std::vector<int> self(curves.size());
    for (std::size_t i = 0; i < curves.size(); ++i) self[i] = curves[i].self_int;

    int e = -least_self_int(curves, self);
    for (const auto& p : points) {
        for (std::size_t i = 0; i < curves.size(); ++i) self[i] += p.lies_on(curves[i].label) ? -1 : 1;
        const int next = -least_self_int(curves, self);
        if (std::abs(next - e) != 1)
            throw InternalError("a single elementary transformation moved e from " +
                                std::to_string(e) + " to " + std::to_string(next));
        e = next;
    }

    RuledSurface out;
    out.base = surface.base;
    out.e = e;
    out.e_divisor = DivisorClass::generic_effective(-e, "e'");
    out.tracking_complete = surface.tracking_complete;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        if ((self[i] + e) % 2 != 0)
            throw InternalError("parity of " + curves[i].label.str() + "'^2 disagrees with e'");
        TrackedCurve tc = curves[i];
        tc.num_class = NumClass{1, (self[i] + e) / 2};
        tc.self_int = self[i];
        tc.plane_divisor.reset();
        out.tracked_curves.push_back(std::move(tc));
    }
    out.check_invariants();
    out.decomposable = decomposable_witness(out);
    return out;
}

int MinCurveReport::minimum() const {
    int best = std::numeric_limits<int>::max();
    for (const auto& c : cases) best = std::min(best, c.self_int);
    return best;
}

MinCurveReport generic_transform_report(int genus, int k) {
    if (genus < 1) throw DomainError("genus must be positive");
    if (k < 0) throw DomainError("point count must be non-negative");
    MinCurveReport r;
    r.j = k % 2;
    r.decomposable_after = k == 0;

    const int g = genus;
    const int c = (k + r.j) / 2;
    r.cases.push_back({"X0'", 1 - g + k, 0, false});
    if (k == 0)
        r.cases.push_back({"X1", g - 1, 0, false});
    else
        r.cases.push_back({"Y" + std::to_string(c) + "' family", g - 1 + r.j, r.j, false});

    const int best = r.minimum();
    for (auto& cs : r.cases) cs.is_minimum = cs.self_int == best;
    return r;
}

Reduction reduce_to_Rb(int genus, int ambient_dim, int degree) {
    if (genus < 2) throw DomainError("reduction to R_b needs g >= 2");
    if (ambient_dim < 3) throw DomainError("reduction to R_b needs N >= 3");
    const int i = ambient_dim - degree + 2 * genus - 1;
    if (i < 1) throw DomainError("scroll is not special (i = " + std::to_string(i) + ")");
    Reduction r{2 * genus + ambient_dim - 3, 4 * genus + ambient_dim - 5 - degree, 2 * genus - 4};
    if (r.num_points < 0)
        throw DomainError("degree exceeds 2g+N-2: no special scroll to reduce");
    return r;
}

DivisorClass canonical_minus_points(const CurveContext& curve, int l) {
    if (l == 0) return DivisorClass::canonical(curve);
    auto d = DivisorClass::explicit_special(curve.canonical_degree() - l,
                                            std::max(curve.genus - l, 0),
                                            "K-" + std::to_string(l) + "pts");
    return d;
}

ExplicitRbPoints explicit_Rb_points(const ExplicitRbInput& in) {
    const int g = in.genus;
    const CurveContext curve = CurveContext::make(g);
    const Reduction red = reduce_to_Rb(g, in.ambient_dim, in.degree);

    ExplicitRbPoints out;
    out.on_xb_only = curve.canonical_degree() - in.deg_a1;
    if (out.on_xb_only < 0) throw DomainError("deg(K - a1) < 0: a1 cannot be special");
    if (in.deg_a2 > red.deg_b) throw DomainError("deg a2 exceeds 2g+N-3");
    out.on_xa_only = red.deg_b - in.deg_a2;
    out.on_both = in.deg_a1 + in.deg_a2 - in.degree;
    if (out.on_both < 0) throw DomainError("X_a . X_b would be negative");

    const auto xa = CurveLabel::custom("Xa");
    const auto xb = CurveLabel::custom("Xb");
    const auto h = CurveLabel::custom("H");
    int n = 0;
    auto push = [&](std::vector<CurveLabel> on, const std::string& prefix, int count) {
        for (int i = 1; i <= count; ++i)
            out.points.push_back({prefix + std::to_string(i) + "#" + std::to_string(++n), on, true});
    };
    push({xa, xb}, "R", out.on_both);
    push({xa}, "Q", out.on_xa_only);
    push({xb}, "P", out.on_xb_only);

    out.xa_xb_after = intersection_after_transform(out.on_both, out.points, xa, xb);
    // H passes through none of the points, so C'.H' = C.H + #(points off C).
    const int xa_h = intersection_after_transform(in.deg_a1, out.points, xa, h);
    const int xb_h = intersection_after_transform(in.deg_a2, out.points, xb, h);

    if (out.xa_xb_after != 0) throw InternalError("X_a'.X_b' != 0");
    if (xa_h != curve.canonical_degree()) throw InternalError("pi_*(X_a'.H') is not canonical");
    if (xb_h != red.deg_b) throw InternalError("pi_*(X_b'.H') has the wrong degree");
    if (static_cast<int>(out.points.size()) != red.num_points)
        throw DomainError("point count " + std::to_string(out.points.size()) +
                          " differs from 4g+N-5-d = " + std::to_string(red.num_points));

    // a1 + P_1 + ... + P_l ~ K and a2 + Q_1 + ... + Q_m ~ b.
    out.xa_plane = DivisorClass::canonical(curve);
    out.xb_plane = DivisorClass::generic_effective(xb_h, "b");
    out.xb_plane.birationally_very_ample = Tri::Yes;
    if (is_special(curve, out.xb_plane)) throw InternalError("b came out special");
    return out;
}

ScrollModel project_scroll(const ScrollModel& scroll, std::span<const PointSpec> points,
                           std::optional<int> span_dim) {
    const int k = static_cast<int>(points.size());
    const int span = span_dim.value_or(k - 1);
    if (span > k - 1) throw DomainError("k points span at most a P^(k-1)");
    const CurveContext& curve = scroll.surface.base;

    if (const auto* x0 = scroll.surface.find(CurveLabel::x0());
        curve.hyperelliptic && x0 && x0->plane_divisor &&
        x0->plane_divisor->kind == DivisorKind::Canonical) {
        const auto on_x0 = std::count_if(points.begin(), points.end(), [](const PointSpec& p) {
            return p.lies_on(CurveLabel::x0());
        });
        if (on_x0 % 2 != 0)
            throw DomainError("hyperelliptic base: X0 maps 2:1 onto its image, so the number of "
                              "projection points on it must be even");
    }

    ScrollModel out;
    out.surface = transform(scroll.surface, points);
    const int h2 = scroll.degree - k;
    const int e = out.surface.e;
    if ((h2 + e) % 2 != 0) throw InternalError("parity of H'^2 disagrees with e'");
    out.hyperplane = NumClass{1, (h2 + e) / 2};
    out.hyperplane_fiber = DivisorClass::generic_effective(out.hyperplane.b, "b'");
    out.degree = out.surface.intersect(out.hyperplane, out.hyperplane);
    if (out.degree != h2) throw InternalError("H'^2 != H^2 - k");
    out.ambient_dim = scroll.ambient_dim - (span + 1);
    if (out.ambient_dim < 3) throw DomainError("projection lands in P^" + std::to_string(out.ambient_dim));
    out.speciality = speciality_from(curve.genus, out.degree, out.ambient_dim);

    // pi_*(C' . H') = pi_*(C . H) minus the points on C.
    for (auto& tc : out.surface.tracked_curves) {
        const auto* before = scroll.surface.find(tc.label);
        if (!before || !before->plane_divisor) continue;
        const int l = static_cast<int>(std::count_if(
            points.begin(), points.end(), [&](const PointSpec& p) { return p.lies_on(tc.label); }));
        const DivisorClass& old = *before->plane_divisor;
        if (old.kind == DivisorKind::Canonical)
            tc.plane_divisor = canonical_minus_points(curve, l);
        else
            tc.plane_divisor = DivisorClass::generic_effective(old.degree - l, old.label);
    }
    out.min_curves = min_degree_curves(out.surface, out.hyperplane);
    out.warnings = scroll.warnings;
    if (!out.rr_holds()) throw InternalError("projection violates d - 2g + 1 + i = N");
    return out;
}

}  // namespace scrolls
