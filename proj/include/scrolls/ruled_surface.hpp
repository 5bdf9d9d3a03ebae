#pragma once

// Numerical intersection theory on a geometrically ruled surface P(E0) -> X.
//
// Num(S) is generated by the minimal section X0 and a fiber f with
// X0^2 = -e, X0.f = 1, f^2 = 0. Curves are tracked symbolically by their
// numerical class and the incidence data callers attach to them; there are
// no coordinates anywhere.

#include <optional>
#include <string>
#include <vector>

#include "scrolls/curve_divisors.hpp"

namespace scrolls {

/// Numerical class a*X0 + b*f.
struct NumClass {
    int a = 0;
    int b = 0;

    static constexpr NumClass section() { return {1, 0}; }
    static constexpr NumClass fiber() { return {0, 1}; }

    friend constexpr NumClass operator+(NumClass x, NumClass y) { return {x.a + y.a, x.b + y.b}; }
    friend constexpr NumClass operator*(int k, NumClass x) { return {k * x.a, k * x.b}; }
    bool operator==(const NumClass&) const = default;
};

/// -e*a1*a2 + a1*b2 + a2*b1
constexpr int intersect(int e, NumClass c1, NumClass c2) {
    return -e * c1.a * c2.a + c1.a * c2.b + c2.a * c1.b;
}

enum class CurveLabelKind { X0, X1, Yc, Custom };

struct CurveLabel {
    CurveLabelKind kind = CurveLabelKind::Custom;
    int c = 0;         // Yc only
    std::string name;  // Custom only

    static CurveLabel x0() { return {CurveLabelKind::X0, 0, {}}; }
    static CurveLabel x1() { return {CurveLabelKind::X1, 0, {}}; }
    static CurveLabel y(int c) { return {CurveLabelKind::Yc, c, {}}; }
    static CurveLabel custom(std::string name) { return {CurveLabelKind::Custom, 0, std::move(name)}; }

    /// "X0", "X1", "Y3", or the custom name.
    std::string str() const;

    bool operator==(const CurveLabel&) const = default;
    auto operator<=>(const CurveLabel&) const = default;
};

struct TrackedCurve {
    CurveLabel label;
    NumClass num_class;
    int self_int = 0;
    bool irreducible = true;
    std::optional<DivisorClass> plane_divisor;  // class of pi_*(C . H)
};

struct RuledSurface {
    CurveContext base;
    int e = 0;
    DivisorClass e_divisor;  // degree -e
    Tri decomposable = Tri::Unknown;
    std::vector<TrackedCurve> tracked_curves;
    // Caller's assertion that every irreducible unisecant able to realize a
    // minimal or complementary self-intersection is tracked.
    bool tracking_complete = false;
    // deg b when this is an untransformed S_b.
    std::optional<int> sb_degree;

    const TrackedCurve* find(const CurveLabel& label) const;
    int intersect(NumClass c1, NumClass c2) const { return scrolls::intersect(e, c1, c2); }

    /// Throws InternalError when a stored self-intersection disagrees with
    /// the one recomputed from its numerical class, or e_divisor has the
    /// wrong degree.
    void check_invariants() const;
};

struct MinCurve {
    std::string label;
    int degree = 0;  // C . H
    int self_int = 0;
    Tri special = Tri::Unknown;
    std::optional<int> family_dim;

    bool operator==(const MinCurve&) const = default;
};

/// A linearly normal scroll: a ruled surface together with |H|.
struct ScrollModel {
    RuledSurface surface;
    NumClass hyperplane;
    DivisorClass hyperplane_fiber;  // the divisor b in H = X0 + b f
    int degree = 0;
    int speciality = 0;
    int ambient_dim = 0;
    std::vector<MinCurve> min_curves;
    std::vector<std::string> warnings;

    bool rr_holds() const {
        return degree - 2 * surface.base.genus + 1 + speciality == ambient_dim;
    }
};

/// S_b = P(O_X + O_X(b - K)), with X0, X1 and Y_1..Y_max_c tracked.
/// Requires deg b >= 2g - 2.
RuledSurface make_S_b(const CurveContext& curve, const DivisorClass& b, int max_c = 4);

/// R_b: the image of S_b under |X0 + b f|. Carries a warning when b ~ K in
/// genus 2, where the map is not birational.
ScrollModel make_R_b(const CurveContext& curve, const DivisorClass& b, int max_c = 4);

/// Irreducible tracked curves of least degree C.H.
std::vector<MinCurve> min_degree_curves(const RuledSurface& surface, NumClass hyperplane);

struct FamilyInfo {
    int dim = 0;
    bool generic_irreducible = true;
};

/// dim F_c for F_c = {Y_c == X1 + c f} on an S_b with deg b = 3g - 3.
/// Computed as dim Sym^c(X) plus the fiber dimension h0(b - K + c points).
FamilyInfo family_Y_dim(const RuledSurface& surface, int c);

/// h0(b - K + c generic points) on S_b: the dimension of the fiber of
/// F_c -> Sym^c(X).
int family_Y_fiber_dim(const RuledSurface& surface, int c);

struct ThroughPoints {
    bool generic_exists = false;  // an irreducible family through the points
    int dim = 0;                  // meaningful when generic_exists
    std::string annotation;

    bool operator==(const ThroughPoints&) const = default;
};

/// Curves of F_c through k generic points of S_b: a (2c - k)-dimensional
/// family when k <= 2c; otherwise generically none, and finitely many when
/// the points are allowed to be special.
ThroughPoints family_through_points(int c, int k);

/// Yes iff two irreducible tracked unisecants have self-intersections
/// summing to 0. No when there is no such pair and tracking is complete,
/// Unknown otherwise.
Tri decomposable_witness(const RuledSurface& surface);

}  // namespace scrolls
