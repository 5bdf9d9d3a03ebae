#include "scrolls/grassmannian.hpp"

#include "scrolls/curve_divisors.hpp"

namespace scrolls {

const char* to_string(GrassLocus locus) {
    switch (locus) {
    case GrassLocus::AlphaPlane: return "alpha_plane";
    case GrassLocus::BetaPlane: return "beta_plane";
    case GrassLocus::SmoothQuadric: return "smooth_quadric";
    case GrassLocus::QuadricCone: break;
    }
    return "quadric_cone";
}

int quadric_genus(int a1, int a2, int n) {
    if (a1 < 1 || a2 < 1) throw DomainError("quadric type entries must be positive");
    if (n < 0) throw DomainError("singular point count must be non-negative");
    return (a1 - 1) * (a2 - 1) - n;
}

int cone_genus(int degree, int a, int n) {
    if (a <= 1) throw DomainError("cone curves need a > 1 points on each line of the cone");
    if (n < 0) throw DomainError("singular point count must be non-negative");
    return (a - 1) * (degree - a - 1) - n;
}

int vertex_multiplicity(int degree, int a) {
    if (a <= 1) throw DomainError("cone curves need a > 1 points on each line of the cone");
    return 2 * a < degree - 1 ? degree - 2 * a : 0;
}

std::vector<GrassCurveType> enumerate_candidates(int genus, int degree) {
    if (genus < 1) throw DomainError("enumeration needs g >= 1");
    if (degree < 3) throw DomainError("enumeration needs d >= 3");
    std::vector<GrassCurveType> out;

    for (int a1 = 1; 2 * a1 <= degree; ++a1) {
        const int a2 = degree - a1;
        const int n = quadric_genus(a1, a2, 0) - genus;
        if (n < 0) continue;
        GrassCurveType t;
        t.locus = GrassLocus::SmoothQuadric;
        t.degree = degree;
        t.a1 = a1;
        t.a2 = a2;
        t.singular_count = n;
        t.interpretation = "directrix lines of multiplicity " + std::to_string(a1) + " and " +
                           std::to_string(a2) + ", " + std::to_string(n) + " double generators";
        out.push_back(std::move(t));
    }

    for (int a = 2; 2 * a <= degree; ++a) {
        const int n = cone_genus(degree, a, 0) - genus;
        if (n < 0) continue;
        GrassCurveType t;
        t.locus = GrassLocus::QuadricCone;
        t.degree = degree;
        t.a = a;
        t.singular_count = n;
        t.vertex_mult = vertex_multiplicity(degree, a);
        t.interpretation = "a directrix line of multiplicity " + std::to_string(a) + " and " +
                           std::to_string(n) + " double generators";
        out.push_back(std::move(t));
    }

    const int arithmetic = (degree - 1) * (degree - 2) / 2;
    if (arithmetic >= genus) {
        GrassCurveType t;
        t.locus = GrassLocus::AlphaPlane;
        t.degree = degree;
        t.singular_count = arithmetic - genus;
        t.interpretation = "cone over a plane curve of degree " + std::to_string(degree);
        out.push_back(std::move(t));
    }
    return out;
}

bool plane_cone_linearly_normal(int genus, int plane_degree) {
    const auto curve = CurveContext::make(genus);
    // A smooth plane quartic is canonically embedded.
    const DivisorClass hyperplane = plane_degree == curve.canonical_degree() && genus >= 3
                                        ? DivisorClass::canonical(curve)
                                        : DivisorClass::generic_effective(plane_degree, "H");
    return h0_h1(curve, hyperplane).h0 == 3;
}

}  // namespace scrolls
