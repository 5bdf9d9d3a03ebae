#include "scrolls/ruled_surface.hpp"

#include <algorithm>
#include <limits>

namespace scrolls {

std::string CurveLabel::str() const {
    switch (kind) {
    case CurveLabelKind::X0: return "X0";
    case CurveLabelKind::X1: return "X1";
    case CurveLabelKind::Yc: return "Y" + std::to_string(c);
    case CurveLabelKind::Custom: break;
    }
    return name;
}

const TrackedCurve* RuledSurface::find(const CurveLabel& label) const {
    for (const auto& tc : tracked_curves)
        if (tc.label == label) return &tc;
    return nullptr;
}

void RuledSurface::check_invariants() const {
    if (e_divisor.degree != -e)
        throw InternalError("e_divisor has degree " + std::to_string(e_divisor.degree) +
                            " but e = " + std::to_string(e));
    for (const auto& tc : tracked_curves) {
        const int recomputed = intersect(tc.num_class, tc.num_class);
        if (recomputed != tc.self_int)
            throw InternalError("self-intersection of " + tc.label.str() + " stored as " +
                                std::to_string(tc.self_int) + ", recomputed " +
                                std::to_string(recomputed));
    }
}

RuledSurface make_S_b(const CurveContext& curve, const DivisorClass& b, int max_c) {
    const int g = curve.genus;
    if (b.degree < 2 * g - 2)
        throw DomainError("S_b needs deg b >= 2g-2, got " + std::to_string(b.degree));
    if (max_c < 0) throw DomainError("max_c must be non-negative");

    RuledSurface s;
    s.base = curve;
    s.e = b.degree - curve.canonical_degree();
    s.e_divisor = DivisorClass::canonical_shift(curve, b);
    s.decomposable = Tri::Yes;
    s.tracking_complete = true;
    s.sb_degree = b.degree;

    auto add = [&](CurveLabel label, NumClass cls, std::optional<DivisorClass> plane) {
        s.tracked_curves.push_back(
            {std::move(label), cls, s.intersect(cls, cls), true, std::move(plane)});
    };
    add(CurveLabel::x0(), NumClass::section(), DivisorClass::canonical(curve));
    const NumClass x1{1, s.e};
    add(CurveLabel::x1(), x1, b);
    for (int c = 1; c <= max_c; ++c)
        add(CurveLabel::y(c), x1 + c * NumClass::fiber(),
            DivisorClass::generic_effective(b.degree + c, "b+" + std::to_string(c) + "pts"));

    s.check_invariants();
    return s;
}

std::vector<MinCurve> min_degree_curves(const RuledSurface& surface, NumClass hyperplane) {
    int best = std::numeric_limits<int>::max();
    for (const auto& tc : surface.tracked_curves)
        if (tc.irreducible) best = std::min(best, surface.intersect(tc.num_class, hyperplane));

    std::vector<MinCurve> out;
    for (const auto& tc : surface.tracked_curves) {
        if (!tc.irreducible) continue;
        const int deg = surface.intersect(tc.num_class, hyperplane);
        if (deg != best) continue;
        MinCurve mc;
        mc.label = tc.label.str();
        mc.degree = deg;
        mc.self_int = tc.self_int;
        if (tc.plane_divisor)
            mc.special = is_special(surface.base, *tc.plane_divisor) ? Tri::Yes : Tri::No;
        out.push_back(std::move(mc));
    }
    return out;
}

ScrollModel make_R_b(const CurveContext& curve, const DivisorClass& b, int max_c) {
    ScrollModel m;
    m.surface = make_S_b(curve, b, max_c);
    m.hyperplane = NumClass{1, b.degree};
    m.hyperplane_fiber = b;
    m.degree = m.surface.intersect(m.hyperplane, m.hyperplane);

    // pi_* O(H) = O(K) + O(b)
    const Cohomology k = h0_h1(curve, DivisorClass::canonical(curve));
    const Cohomology hb = h0_h1(curve, b);
    m.ambient_dim = k.h0 + hb.h0 - 1;
    m.speciality = k.h1 + hb.h1;
    m.min_curves = min_degree_curves(m.surface, m.hyperplane);

    if (curve.genus == 2 && b.kind == DivisorKind::Canonical)
        m.warnings.push_back("degenerate: b ~ K in genus 2, the map is not birational and "
                             "the image is a rational ruled surface");
    if (!m.rr_holds()) throw InternalError("R_b violates d - 2g + 1 + i = N");
    return m;
}

int family_Y_fiber_dim(const RuledSurface& surface, int c) {
    if (c < 1) throw DomainError("family index c must be positive");
    if (!surface.sb_degree) throw DomainError("family F_c is defined on an untransformed S_b");
    const auto b = DivisorClass::generic_effective(*surface.sb_degree, "b");
    // b - K + (c points)
    const auto cls = DivisorClass::canonical_shift(surface.base, b, c, -1);
    return h0_h1(surface.base, cls).h0;
}

FamilyInfo family_Y_dim(const RuledSurface& surface, int c) {
    if (!surface.sb_degree) throw DomainError("family F_c is defined on an untransformed S_b");
    const int g = surface.base.genus;
    if (*surface.sb_degree != 3 * g - 3)
        throw DomainError("family dimension is established for deg b = 3g-3");
    return {c + family_Y_fiber_dim(surface, c), true};
}

ThroughPoints family_through_points(int c, int k) {
    if (c < 1) throw DomainError("family index c must be positive");
    if (k < 0) throw DomainError("point count must be non-negative");
    if (k <= 2 * c) return {true, 2 * c - k, ""};
    return {false, 0, "no irreducible member through generic points; finitely many when "
                      "the points are special"};
}

Tri decomposable_witness(const RuledSurface& surface) {
    const auto& cs = surface.tracked_curves;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (!cs[i].irreducible || cs[i].num_class.a != 1) continue;
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            if (!cs[j].irreducible || cs[j].num_class.a != 1) continue;
            if (cs[i].self_int + cs[j].self_int == 0) return Tri::Yes;
        }
    }
    return surface.tracking_complete ? Tri::No : Tri::Unknown;
}

}  // namespace scrolls
