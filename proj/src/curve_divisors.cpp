#include "scrolls/curve_divisors.hpp"

#include <algorithm>
#include <utility>

namespace scrolls {

CurveContext CurveContext::make(int genus, bool hyperelliptic) {
    if (genus < 0) throw DomainError("genus must be non-negative");
    if (hyperelliptic && genus < 2) throw DomainError("hyperelliptic curves have genus >= 2");
    return CurveContext{genus, hyperelliptic};
}

const char* to_string(DivisorKind k) {
    switch (k) {
    case DivisorKind::GenericEffective: return "generic_effective";
    case DivisorKind::Canonical: return "canonical";
    case DivisorKind::CanonicalShift: return "canonical_shift";
    case DivisorKind::ExplicitSpecial: break;
    }
    return "explicit_special";
}

DivisorClass DivisorClass::generic_effective(int degree, std::string label) {
    DivisorClass d;
    d.degree = degree;
    d.label = std::move(label);
    return d;
}

DivisorClass DivisorClass::nontrivial_degree_zero(std::string label) {
    DivisorClass d = generic_effective(0, std::move(label));
    d.nontrivial = true;
    return d;
}

DivisorClass DivisorClass::canonical(const CurveContext& curve) {
    DivisorClass d;
    d.degree = curve.canonical_degree();
    d.kind = DivisorKind::Canonical;
    d.label = "K";
    // |K| is base point free for g >= 2 and birational exactly off the hyperelliptic locus.
    if (curve.genus >= 2) {
        d.base_point_free = Tri::Yes;
        d.birationally_very_ample = curve.hyperelliptic ? Tri::No : Tri::Yes;
    }
    return d;
}

DivisorClass DivisorClass::canonical_shift(const CurveContext& curve, const DivisorClass& base,
                                           int delta, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("canonical shift sign must be +1 or -1");
    DivisorClass d;
    d.kind = DivisorKind::CanonicalShift;
    d.shift_base_degree = base.degree;
    d.shift_sign = sign;
    d.shift_delta = delta;
    d.degree = sign * (curve.canonical_degree() - base.degree) + delta;
    const std::string b = base.label.empty() ? "b" : base.label;
    d.label = sign > 0 ? "K-" + b : b + "-K";
    if (delta != 0) d.label += (delta > 0 ? "+" : "") + std::to_string(delta) + "pts";
    return d;
}

DivisorClass DivisorClass::explicit_special(int degree, int h0, std::string label) {
    DivisorClass d;
    d.degree = degree;
    d.kind = DivisorKind::ExplicitSpecial;
    d.explicit_h0 = h0;
    d.label = std::move(label);
    return d;
}

Cohomology h0_h1(const CurveContext& curve, const DivisorClass& div) {
    const int g = curve.genus;
    const int d = div.degree;
    const int chi = d - g + 1;
    int h0 = 0;

    switch (div.kind) {
    case DivisorKind::Canonical:
        if (d != curve.canonical_degree())
            throw DomainError("canonical class must have degree 2g-2");
        return {g, 1};

    case DivisorKind::GenericEffective:
        if (d < 0) {
            h0 = 0;
        } else if (d == 0) {
            if (div.nontrivial && g == 0)
                throw DomainError("a rational curve has no nontrivial degree-0 class");
            h0 = div.nontrivial ? 0 : 1;
        } else {
            h0 = std::max(1, chi);
        }
        break;

    case DivisorKind::CanonicalShift:
        // A generic class of its net degree, not assumed effective.
        h0 = std::max(0, chi);
        break;

    case DivisorKind::ExplicitSpecial:
        h0 = div.explicit_h0;
        if (h0 < 0) throw DomainError("explicit h0 must be non-negative");
        if (h0 - chi < 0)
            throw DomainError("explicit h0 = " + std::to_string(h0) +
                              " violates Riemann-Roch (forces h1 < 0)");
        break;
    }
    return {h0, h0 - chi};
}

int scroll_numerics(int genus, int degree, int speciality) {
    if (genus < 0) throw DomainError("genus must be non-negative");
    if (degree < 1) throw DomainError("scroll degree must be positive");
    if (speciality < 0) throw DomainError("speciality must be non-negative");
    return degree - 2 * genus + 1 + speciality;
}

int speciality_from(int genus, int degree, int ambient_dim, bool require_nondegenerate) {
    if (genus < 0) throw DomainError("genus must be non-negative");
    if (degree < 1) throw DomainError("scroll degree must be positive");
    if (require_nondegenerate && ambient_dim < 3)
        throw DomainError("a nondegenerate scroll needs N >= 3");
    const int i = ambient_dim - degree + 2 * genus - 1;
    if (i < 0)
        throw DomainError("negative speciality: degree " + std::to_string(degree) +
                          " is too large for genus " + std::to_string(genus) + " in P^" +
                          std::to_string(ambient_dim));
    return i;
}

int speciality_degree_bound(int genus, int ambient_dim) {
    if (genus < 1) throw DomainError("speciality bound needs g >= 1");
    if (ambient_dim < 3) throw DomainError("speciality bound needs N >= 3");
    return 2 * genus + ambient_dim - 2;
}

}  // namespace scrolls
