#pragma once

// Elementary transformations of ruled surfaces and the projections of
// scrolls they model.
//
// Transforming at a point x of the fiber Pf blows up x and contracts the
// strict transform of Pf. For a unisecant C this gives C'^2 = C^2 - 1 when
// x is on C and C^2 + 1 otherwise; more generally
//     C'.D' = C.D - #(points on both) + #(points on neither).
// Projecting a scroll from points on it is the transform at those points
// with H passing through all of them.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scrolls/ruled_surface.hpp"

namespace scrolls {

struct PointSpec {
    std::string fiber;               // label of P = pi(x)
    std::vector<CurveLabel> on_curve;
    bool generic = true;

    bool lies_on(const CurveLabel& label) const;
};

/// C'.D' after transforming at `points`, given C.D before. Pass the same
/// label twice for a self-intersection. A label that no point references
/// behaves like a curve through none of them.
int intersection_after_transform(int before, std::span<const PointSpec> points,
                                 const CurveLabel& c, const CurveLabel& d);

/// Simultaneous elementary transformation at points in pairwise distinct
/// fibers, applied one point at a time. Every tracked curve must be a
/// unisecant. The new e is minus the least tracked self-intersection and
/// decomposability is re-derived with decomposable_witness.
RuledSurface transform(const RuledSurface& surface, std::span<const PointSpec> points);

struct MinCurveCase {
    std::string curve;
    int self_int = 0;
    int family_dim = 0;
    bool is_minimum = false;

    bool operator==(const MinCurveCase&) const = default;
};

struct MinCurveReport {
    std::vector<MinCurveCase> cases;
    bool decomposable_after = false;
    int j = 0;  // k = 2c - j

    int minimum() const;
};

/// Minimum self-intersection curves after transforming S_b (deg b = 3g-3)
/// at k generic points.
MinCurveReport generic_transform_report(int genus, int k);

struct Reduction {
    int deg_b = 0;
    int num_points = 0;
    int span_dim = 0;

    bool operator==(const Reduction&) const = default;
};

/// A special scroll of genus g and degree d in P^N is R_b (deg b = 2g+N-3)
/// projected from 4g+N-5-d points spanning a P^(2g-4).
Reduction reduce_to_Rb(int genus, int ambient_dim, int degree);

struct ExplicitRbInput {
    int genus = 0;
    int ambient_dim = 0;
    int degree = 0;
    int deg_a1 = 0;  // O_{X_a}(H), special
    int deg_a2 = 0;  // O_{X_b}(H)
};

struct ExplicitRbPoints {
    std::vector<PointSpec> points;
    int on_both = 0;    // X_a . X_b
    int on_xa_only = 0; // m: Q_1..Q_m
    int on_xb_only = 0; // l: P_1..P_l ~ K - a1
    int xa_xb_after = 0;
    DivisorClass xa_plane;  // pi_*(X_a' . H')
    DivisorClass xb_plane;  // pi_*(X_b' . H')
};

/// The points at which to transform the surface of a special scroll to
/// recover S_b: X_a . X_b, X_a . (Q_1+..+Q_m)f and X_b . (P_1+..+P_l)f.
/// The identities X_a'.X_b' = 0, pi_*(X_a'.H') ~ K and pi_*(X_b'.H') ~ b
/// are evaluated on the result and violations raise InternalError.
ExplicitRbPoints explicit_Rb_points(const ExplicitRbInput& input);

/// Projection of a scroll from points lying on it. `span_dim` is the
/// dimension of the space the points span (k-1 for points in general
/// position). On a hyperelliptic base whose X0 maps 2:1 onto its image the
/// number of points on X0 must be even.
ScrollModel project_scroll(const ScrollModel& scroll, std::span<const PointSpec> points,
                           std::optional<int> span_dim = std::nullopt);

/// K minus l generic points: special, h0 = max(g - l, 0).
DivisorClass canonical_minus_points(const CurveContext& curve, int l);

}  // namespace scrolls
