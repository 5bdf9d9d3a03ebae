#pragma once

// Decision procedures for linearly normal special scrolls: the generic
// scroll of genus g in P^N, and the complete lists in P^3 for genus 2 and 3.

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "scrolls/elem_transform.hpp"
#include "scrolls/grassmannian.hpp"

namespace scrolls {

struct SurfaceDesc {
    Tri decomposable = Tri::Unknown;
    int e = 0;
    std::string e_desc;   // the divisor e = wedge^2 E0, as text
    std::string E0_desc;

    bool operator==(const SurfaceDesc&) const = default;
};

struct SpecialCurve {
    bool is_min_degree = false;
    bool linearly_normal = false;
    int degree = 0;    // always 2g - 2: a projected canonical curve
    int self_int = 0;

    bool operator==(const SpecialCurve&) const = default;
};

struct GenericScrollModel {
    int genus = 0;
    int ambient_dim = 0;
    int case_id = 0;
    int degree = 0;
    int speciality = 1;
    SurfaceDesc surface;
    std::string linear_system;
    std::optional<int> b_degree;      // case 1: the nonspecial generic b
    std::optional<int> num_points;    // cases 2, 3: projection of R_b, deg b = 3g-3
    SpecialCurve special_curve;
    int min_self_int = 0;
    bool stability_possible = false;

    bool rr_holds() const { return degree - 2 * genus + 1 + speciality == ambient_dim; }
    bool operator==(const GenericScrollModel&) const = default;
};

/// The generic linearly normal special scroll of genus g >= 2 in P^N, N >= 3.
///   case 1  N >= 3g-3        decomposable S_b, deg b = N
///   case 2  g-1 <= N < 3g-3  indecomposable, e = -(2g-2-N)
///   case 3  3 <= N < g-1     indecomposable, e = -(g-1) or -g by parity of N
GenericScrollModel classify_generic(int genus, int ambient_dim);

/// Self-intersection of the minimal section of the generic special scroll.
/// 2g-2-N when N >= g-1; otherwise g-1 if N and g-1 have the same parity,
/// g if not.
int min_curve_self_int_generic(int genus, int ambient_dim);

/// d < 4g - 4. At or past 4g-4 a special ruled surface cannot be stable.
bool stability_possible(int genus, int degree);

struct TableMinCurve {
    int multiplicity = 1;
    int degree = 0;
    bool special = false;
    int span = 0;                    // the curve spans P^span
    std::optional<int> family_dim;   // (inf^n) annotation
    std::string text;

    bool operator==(const TableMinCurve&) const = default;
};

struct TableRow {
    int genus = 0;
    bool hyperelliptic = false;
    int d = 0;
    int i = 0;
    Tri decomposable = Tri::Unknown;
    std::string E0_desc;
    int e = 0;
    std::optional<int> e_divisor_degree;  // when e is printed as a divisor
    std::string H_desc;
    bool cone = false;
    std::vector<TableMinCurve> min_curves;
    bool flagged_inconsistent = false;
    std::string flag_note;
    std::optional<GrassCurveType> grass_source;

    bool rr_holds() const { return d - 2 * genus + 1 + i == 3; }
    bool e_matches_divisor() const { return !e_divisor_degree || e == -*e_divisor_degree; }
    bool operator==(const TableRow&) const = default;
};

/// The linearly normal special scrolls in P^3 of genus 2 (hyperelliptic
/// only) or 3, ordered by degree, decomposable rows first within a degree.
std::vector<TableRow> classify_p3(int genus, bool hyperelliptic);

/// Rows of classify_p3(genus, hyperelliptic) with the same degree, e and
/// decomposability as the model.
std::vector<std::size_t> matching_rows(const ScrollModel& model, bool hyperelliptic);

struct Degenerate {
    std::string reason;
    std::string citation;
};

struct Rejected {
    std::string reason;
    std::string citation;
};

enum class Genus2Point {
    OnX0Line,          // a point of the singular line image of X0
    SingularPointX1,   // the isolated singular point, image of the base points of |X1|
    OffSpecialFibers,  // nonsingular, off X0 and off A1 f, A2 f
    OnA1A2Fiber,       // nonsingular, off X0 and X1, on A1 f or A2 f
};

const char* to_string(Genus2Point p);

struct Genus2Case {
    Genus2Point where = Genus2Point::OffSpecialFibers;
    bool b_canonical = false;  // b ~ K instead of K + A1 + A2
};

using Genus2Outcome = std::variant<ScrollModel, Degenerate>;

/// Projection of R_b (g = 2, deg b = 4, b = K + A1 + A2) from one point.
Genus2Outcome genus2_projection(const Genus2Case& input);

/// The surface R_b of genus 2 projected in genus2_projection.
ScrollModel genus2_Rb();

using Genus3Outcome = std::variant<ScrollModel, Rejected>;

/// Projection of R_b (g = 3, deg b = 6) from three points spanning a plane.
/// Throws DomainError for an odd number of points on X0 over a
/// hyperelliptic curve, and for incidence data the surface cannot carry.
Genus3Outcome genus3_d7_projection(std::span<const PointSpec> points, bool hyperelliptic);

}  // namespace scrolls
