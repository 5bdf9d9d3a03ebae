#pragma once

// Genus bookkeeping for curves in the Grassmannian G(1,3) of lines of P^3.
// A curve of degree d there parameterizes a scroll of the same degree and
// genus. In a P^3 section of G(1,3) the curve lies on a smooth quadric or a
// quadric cone; in a P^2 it lies in an alpha-plane (a cone over a plane
// curve) or a beta-plane (a degenerate, planar scroll).

#include <string>
#include <vector>

#include "scrolls/error.hpp"

namespace scrolls {

enum class GrassLocus { AlphaPlane, BetaPlane, SmoothQuadric, QuadricCone };

const char* to_string(GrassLocus locus);

struct GrassCurveType {
    GrassLocus locus = GrassLocus::AlphaPlane;
    int degree = 0;
    int a1 = 0;  // SmoothQuadric: intersections with lines of the first ruling
    int a2 = 0;  //                and of the second
    int a = 0;   // QuadricCone: intersections with a line of the cone
    int singular_count = 0;
    int vertex_mult = 0;
    std::string interpretation;

    bool operator==(const GrassCurveType& o) const {
        return locus == o.locus && degree == o.degree && a1 == o.a1 && a2 == o.a2 && a == o.a &&
               singular_count == o.singular_count && vertex_mult == o.vertex_mult;
    }
};

/// (a1-1)(a2-1) - n. A negative value means no such curve exists.
int quadric_genus(int a1, int a2, int n);

/// (a-1)(d-a-1) - n for a curve of degree d on a quadric cone meeting each
/// line of the cone in a > 1 points.
int cone_genus(int degree, int a, int n);

/// d - 2a when 2a < d - 1, else 0.
int vertex_multiplicity(int degree, int a);

/// Every locus type that can carry a curve of genus g and degree d:
/// smooth quadric types (a1 <= a2, a1 + a2 = d), cone types (2 <= a, 2a <= d)
/// and the alpha-plane cone when (d-1)(d-2)/2 >= g. Each carries its node
/// count n.
std::vector<GrassCurveType> enumerate_candidates(int genus, int degree);

/// Whether the cone over a plane curve of degree k and genus g is linearly
/// normal, i.e. whether O_C(1) has exactly three sections.
bool plane_cone_linearly_normal(int genus, int plane_degree);

}  // namespace scrolls
