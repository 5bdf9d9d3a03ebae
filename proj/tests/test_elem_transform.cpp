#include "doctest.h"

#include <algorithm>

#include "scrolls/elem_transform.hpp"

using namespace scrolls;

namespace {

RuledSurface sb(int g, int deg_b, int max_c = 4) {
    return make_S_b(CurveContext::make(g), DivisorClass::generic_effective(deg_b, "b"), max_c);
}

PointSpec pt(std::string fiber, std::vector<CurveLabel> on = {}) {
    const bool generic = on.empty();
    return {std::move(fiber), std::move(on), generic};
}

int self(const RuledSurface& s, const CurveLabel& l) { return s.find(l)->self_int; }

}  // namespace

TEST_SUITE("elem_transform") {

TEST_CASE("one point on X0 and two on X1 gives a decomposable surface") {
    const auto s = sb(3, 6);
    const std::vector<PointSpec> pts{pt("P1", {CurveLabel::x0()}), pt("P2", {CurveLabel::x1()}),
                                     pt("P3", {CurveLabel::x1()})};
    const auto t = transform(s, pts);
    CHECK(self(t, CurveLabel::x0()) == -1);
    CHECK(self(t, CurveLabel::x1()) == 1);
    CHECK(t.e == 1);
    CHECK(t.decomposable == Tri::Yes);
}

TEST_CASE("three generic points give e = -1, indecomposable") {
    const std::vector<PointSpec> pts{pt("P1"), pt("P2"), pt("P3")};
    const auto t = transform(sb(3, 6), pts);
    CHECK(self(t, CurveLabel::x0()) == 1);
    CHECK(t.e == -1);
    CHECK(t.decomposable == Tri::No);
}

TEST_CASE("no points is the identity") {
    const auto s = sb(3, 6);
    const auto t = transform(s, {});
    CHECK(t.e == s.e);
    for (const auto& tc : s.tracked_curves) {
        CHECK(t.find(tc.label)->self_int == tc.self_int);
        CHECK(t.find(tc.label)->num_class == tc.num_class);
    }
}

TEST_CASE("intersection_after_transform") {
    const std::vector<PointSpec> pts{pt("A", {CurveLabel::x0(), CurveLabel::y(1)}),
                                     pt("B", {CurveLabel::x0()}), pt("C")};
    CHECK(intersection_after_transform(1, pts, CurveLabel::x0(), CurveLabel::y(1)) == 1);
    CHECK(intersection_after_transform(-2, pts, CurveLabel::x0(), CurveLabel::x0()) == -3);
    CHECK(intersection_after_transform(4, pts, CurveLabel::y(1), CurveLabel::y(1)) == 5);
}

TEST_CASE("transform rejects impossible incidence") {
    const auto s = sb(3, 6);
    CHECK_THROWS_AS(transform(s, std::vector{pt("P", {CurveLabel::x0(), CurveLabel::x1()})}),
                    DomainError);
    CHECK_THROWS_AS(transform(s, std::vector{pt("P"), pt("P")}), DomainError);
    CHECK_THROWS_AS(transform(s, std::vector{pt("P", {CurveLabel::y(9)})}), DomainError);
    CHECK_THROWS_AS(transform(s, std::vector{pt("P", {CurveLabel::x0(), CurveLabel::x0()})}),
                    DomainError);
    // X0 . Y1 = 1.
    CHECK_THROWS_AS(transform(s, std::vector{pt("P", {CurveLabel::x0(), CurveLabel::y(1)}),
                                             pt("Q", {CurveLabel::x0(), CurveLabel::y(1)})}),
                    DomainError);
}

TEST_CASE("the result does not depend on the order of the points") {
    const auto s = sb(3, 6);
    std::vector<PointSpec> pts{pt("P1", {CurveLabel::x0()}), pt("P2", {CurveLabel::x1()}),
                               pt("P3", {CurveLabel::y(2)}), pt("P4")};
    const auto ref = transform(s, pts);
    std::sort(pts.begin(), pts.end(), [](auto& a, auto& b) { return a.fiber < b.fiber; });
    do {
        const auto t = transform(s, pts);
        CHECK(t.e == ref.e);
        CHECK(t.decomposable == ref.decomposable);
        for (const auto& tc : ref.tracked_curves) CHECK(t.find(tc.label)->self_int == tc.self_int);
    } while (std::next_permutation(pts.begin(), pts.end(),
                                   [](auto& a, auto& b) { return a.fiber < b.fiber; }));
}

TEST_CASE("minimum curve report") {
    auto r = generic_transform_report(3, 2);
    CHECK(r.minimum() == 0);
    CHECK(r.cases[0].curve == "X0'");
    CHECK(r.cases[0].is_minimum);
    CHECK(r.cases[1].self_int == 2);
    CHECK(r.cases[1].family_dim == 0);
    CHECK_FALSE(r.decomposable_after);

    r = generic_transform_report(3, 5);
    CHECK(r.minimum() == 3);
    CHECK(r.j == 1);
    CHECK(r.cases[1].family_dim == 1);
    CHECK(r.cases[1].is_minimum);

    r = generic_transform_report(3, 0);
    CHECK(r.minimum() == -2);
    CHECK(r.decomposable_after);
}

TEST_CASE("minimum report: X0' below 2g-2 points, the Y family past it") {
    for (int g = 2; g <= 10; ++g)
        for (int k = 1; k <= 4 * g; ++k) {
            const auto r = generic_transform_report(g, k);
            if (k <= 2 * g - 2) CHECK(r.minimum() == 1 - g + k);
            else CHECK(r.minimum() == g - 1 + k % 2);
        }
}

TEST_CASE("reduction to R_b") {
    for (int d = 4; d <= 5; ++d) CHECK(reduce_to_Rb(2, 3, d) == Reduction{4, 6 - d, 0});
    for (int d = 4; d <= 7; ++d) CHECK(reduce_to_Rb(3, 3, d) == Reduction{6, 10 - d, 2});
    CHECK(reduce_to_Rb(2, 3, 5) == Reduction{4, 1, 0});
    CHECK_THROWS_AS(reduce_to_Rb(1, 3, 3), DomainError);
    CHECK_THROWS_AS(reduce_to_Rb(3, 2, 5), DomainError);
    CHECK_THROWS_AS(reduce_to_Rb(3, 3, 8), DomainError);
}

TEST_CASE("explicit points recovering S_b") {
    const auto p = explicit_Rb_points({3, 3, 7, 4, 6});
    CHECK(p.on_xb_only == 0);
    CHECK(p.on_xa_only == 0);
    CHECK(p.on_both == 3);
    CHECK(p.points.size() == 3);
    CHECK(p.xa_xb_after == 0);
    CHECK(p.xa_plane.kind == DivisorKind::Canonical);
    CHECK(p.xb_plane.degree == 6);

    // Every admissible (deg a1, deg a2) for small genus and degree.
    for (int g = 2; g <= 6; ++g)
        for (int n = 3; n <= 6; ++n)
            for (int d = 2 * g + 1; d <= 2 * g + n - 2; ++d)
                for (int a1 = 0; a1 <= 2 * g - 2; ++a1)
                    for (int a2 = 0; a2 <= 2 * g + n - 3; ++a2) {
                        if (a1 + a2 < d) continue;
                        const auto q = explicit_Rb_points({g, n, d, a1, a2});
                        CHECK(q.xa_xb_after == 0);
                        CHECK(q.xa_plane.degree == 2 * g - 2);
                        CHECK(q.xb_plane.degree == 2 * g + n - 3);
                        CHECK(static_cast<int>(q.points.size()) == 4 * g + n - 5 - d);
                    }
    CHECK_THROWS_AS(explicit_Rb_points({3, 3, 7, 5, 6}), DomainError);
    CHECK_THROWS_AS(explicit_Rb_points({3, 3, 7, 1, 2}), DomainError);
}

TEST_CASE("projection drops the degree by the number of points") {
    const auto curve = CurveContext::make(4);
    const auto rb = make_R_b(curve, DivisorClass::generic_effective(8, "b"));
    for (int k = 0; k <= 4; ++k) {
        std::vector<PointSpec> pts;
        for (int i = 0; i < k; ++i) pts.push_back(pt("P" + std::to_string(i)));
        const auto m = project_scroll(rb, pts);
        CHECK(m.degree == rb.degree - k);
        CHECK(m.ambient_dim == rb.ambient_dim - k);
        CHECK(m.speciality == 1);
    }
}

TEST_CASE("projection keeps track of the plane divisor of X0") {
    const auto rb = make_R_b(CurveContext::make(3), DivisorClass::generic_effective(6, "b"));
    const auto m = project_scroll(rb, std::vector{pt("P1", {CurveLabel::x0()}), pt("P2"), pt("P3")}, 2);
    const auto& x0 = *m.surface.find(CurveLabel::x0())->plane_divisor;
    CHECK(x0.degree == 3);
    CHECK(h0_h1(m.surface.base, x0).h0 == 2);
    CHECK(m.ambient_dim == 3);
}

TEST_CASE("hyperelliptic X0 takes an even number of points") {
    const auto rb = make_R_b(CurveContext::make(3, true), DivisorClass::generic_effective(6, "b"));
    CHECK_THROWS_AS(project_scroll(rb, std::vector{pt("P1", {CurveLabel::x0()}), pt("P2"), pt("P3")}, 2),
                    DomainError);
    CHECK_NOTHROW(project_scroll(
        rb, std::vector{pt("P1", {CurveLabel::x0()}), pt("P2", {CurveLabel::x0()}), pt("P3")}, 2));
}

TEST_CASE("projection below P^3 is rejected") {
    const auto rb = make_R_b(CurveContext::make(2), DivisorClass::generic_effective(4, "b"));
    CHECK_THROWS_AS(project_scroll(rb, std::vector{pt("P1"), pt("P2")}), DomainError);
    CHECK_THROWS_AS(project_scroll(rb, std::vector{pt("P1")}, 3), DomainError);
}

TEST_CASE("K minus points") {
    const auto x = CurveContext::make(4);
    CHECK(canonical_minus_points(x, 0).kind == DivisorKind::Canonical);
    CHECK(h0_h1(x, canonical_minus_points(x, 2)) == Cohomology{2, 1});
    CHECK(h0_h1(x, canonical_minus_points(x, 5)).h0 == 0);
}

}
