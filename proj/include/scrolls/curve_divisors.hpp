#pragma once

// Divisor classes on an abstract smooth curve, evaluated through
// Riemann-Roch under explicit genericity models. No curve equations are
// involved: a class is its degree plus a tag saying which h0 model applies.

#include <string>

#include "scrolls/error.hpp"

namespace scrolls {

struct CurveContext {
    int genus = 0;
    bool hyperelliptic = false;

    /// Validating constructor; hyperelliptic curves need genus >= 2.
    static CurveContext make(int genus, bool hyperelliptic = false);

    int canonical_degree() const { return 2 * genus - 2; }
};

enum class DivisorKind {
    GenericEffective,  // generic effective divisor of the given degree
    Canonical,         // the canonical class K
    CanonicalShift,    // sign * (K - base) + delta, evaluated as a generic class
    ExplicitSpecial,   // caller supplies h0
};

const char* to_string(DivisorKind k);

struct DivisorClass {
    int degree = 0;
    DivisorKind kind = DivisorKind::GenericEffective;

    // GenericEffective of degree 0 that is not the trivial class (Q - P, P != Q).
    bool nontrivial = false;

    int explicit_h0 = 0;

    // CanonicalShift bookkeeping. Only the net degree enters h0.
    int shift_base_degree = 0;
    int shift_sign = 1;
    int shift_delta = 0;

    Tri base_point_free = Tri::Unknown;
    Tri birationally_very_ample = Tri::Unknown;

    std::string label;

    static DivisorClass generic_effective(int degree, std::string label = {});
    static DivisorClass nontrivial_degree_zero(std::string label);
    static DivisorClass canonical(const CurveContext& curve);
    /// The class sign * (K - base) + (generic points of total degree delta).
    /// With sign = -1 and delta = 0 this is base - K, i.e. -e on S_b.
    static DivisorClass canonical_shift(const CurveContext& curve, const DivisorClass& base,
                                        int delta = 0, int sign = 1);
    static DivisorClass explicit_special(int degree, int h0, std::string label = {});

    bool operator==(const DivisorClass&) const = default;
};

struct Cohomology {
    int h0 = 0;
    int h1 = 0;
    bool operator==(const Cohomology&) const = default;
};

/// h0 and h1 of a class. Throws DomainError for classes that cannot exist
/// (a canonical tag with the wrong degree, an ExplicitSpecial h0 that would
/// force h1 < 0, a nontrivial degree-0 class on a rational curve).
Cohomology h0_h1(const CurveContext& curve, const DivisorClass& div);

inline bool is_special(const CurveContext& curve, const DivisorClass& div) {
    return h0_h1(curve, div).h1 > 0;
}

/// N = d - 2g + 1 + i for a linearly normal scroll of degree d, genus g, speciality i.
int scroll_numerics(int genus, int degree, int speciality);

/// Inverse of scroll_numerics: i = N - d + 2g - 1. Rejects i < 0 and, when
/// require_nondegenerate is set, N < 3.
int speciality_from(int genus, int degree, int ambient_dim, bool require_nondegenerate = true);

/// Largest degree a special scroll of genus g in P^N can have: 2g + N - 2.
int speciality_degree_bound(int genus, int ambient_dim);

}  // namespace scrolls
