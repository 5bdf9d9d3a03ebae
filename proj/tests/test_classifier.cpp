#include "doctest.h"

#include <algorithm>

#include "scrolls/classifier.hpp"

using namespace scrolls;

namespace {

PointSpec pt(std::string fiber, std::vector<CurveLabel> on = {}) {
    const bool generic = on.empty();
    return {std::move(fiber), std::move(on), generic};
}

}  // namespace

TEST_SUITE("classifier") {

TEST_CASE("generic scroll, three cases") {
    auto m = classify_generic(3, 6);
    CHECK(m.case_id == 1);
    CHECK(m.surface.decomposable == Tri::Yes);
    CHECK(m.b_degree == 6);
    CHECK(m.degree == 10);

    m = classify_generic(3, 3);
    CHECK(m.case_id == 2);
    CHECK(m.surface.decomposable == Tri::No);
    CHECK(m.surface.e == -1);
    CHECK(m.degree == 7);
    CHECK(m.special_curve.linearly_normal);

    m = classify_generic(5, 3);
    CHECK(m.case_id == 3);
    CHECK(m.surface.e == -5);
    CHECK(m.degree == 11);
    CHECK_FALSE(m.special_curve.linearly_normal);
    CHECK(m.special_curve.self_int == 2 * 5 - 2 + 3);

    CHECK_THROWS_AS(classify_generic(1, 5), DomainError);
    CHECK_THROWS_AS(classify_generic(3, 2), DomainError);
}

TEST_CASE("case 3 parity") {
    for (int g = 5; g <= 20; ++g)
        for (int n = 3; n < g - 1; ++n) {
            const int e = classify_generic(g, n).surface.e;
            if ((g - 1 - n) % 2 == 0) CHECK(e == -(g - 1));
            else CHECK(e == -g);
        }
}

TEST_CASE("least self-intersection of the generic scroll") {
    CHECK(min_curve_self_int_generic(3, 3) == 1);
    CHECK(min_curve_self_int_generic(3, 4) == 0);
    // N = 4 and g - 1 = 5 have different parity: X0^2 = g.
    CHECK(min_curve_self_int_generic(6, 4) == 6);
    CHECK(min_curve_self_int_generic(6, 4) == generic_transform_report(6, 11).minimum());
    for (int g = 2; g <= 20; ++g)
        for (int n = 3; n < 3 * g - 3; ++n)
            CHECK(min_curve_self_int_generic(g, n) ==
                  generic_transform_report(g, 3 * g - 3 - n).minimum());
}

TEST_CASE("stability bound") {
    CHECK_FALSE(stability_possible(3, 8));
    CHECK(stability_possible(3, 7));
    CHECK(stability_possible(10, 35));
    CHECK_THROWS_AS(stability_possible(1, 3), DomainError);
}

TEST_CASE("genus 2 table") {
    const auto rows = classify_p3(2, true);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].d == 4);
    CHECK(rows[0].i == 2);
    CHECK(rows[0].e == 4);
    CHECK(rows[0].cone);
    CHECK(rows[0].E0_desc.find("b ~ K+P+Q") != std::string::npos);
    CHECK(rows[0].min_curves[0].degree == 4);
    CHECK(rows[0].min_curves[0].family_dim == 3);
    CHECK(rows[1].decomposable == Tri::Yes);
    CHECK(rows[2].decomposable == Tri::No);
    CHECK(rows[2].flagged_inconsistent);
    CHECK_THROWS_AS(classify_p3(2, false), DomainError);
    CHECK_THROWS_AS(classify_p3(4, false), DomainError);
}

TEST_CASE("genus 3 tables") {
    const auto nh = classify_p3(3, false);
    CHECK(nh.size() == 8);
    CHECK(std::count_if(nh.begin(), nh.end(), [](auto& r) { return r.d == 7; }) == 4);
    const auto q = std::find_if(nh.begin(), nh.end(), [](auto& r) {
        return r.d == 6 && r.decomposable == Tri::Yes;
    });
    REQUIRE(q != nh.end());
    CHECK(q->e == 0);
    CHECK(q->E0_desc.find("Q-P") != std::string::npos);
    CHECK(q->min_curves.size() == 2);
    CHECK(q->min_curves[0].multiplicity == 3);

    const auto h = classify_p3(3, true);
    CHECK(h.size() == 5);
    const auto d7 = std::find_if(h.begin(), h.end(), [](auto& r) { return r.d == 7; });
    REQUIRE(d7 != h.end());
    CHECK(d7->e == -1);
    CHECK(d7->min_curves[0].multiplicity == 2);
    CHECK(d7->min_curves[0].degree == 2);
    CHECK(d7->min_curves[0].special);
    CHECK(std::count_if(h.begin(), h.end(), [](auto& r) { return r.flagged_inconsistent; }) == 1);
    CHECK(std::count_if(nh.begin(), nh.end(), [](auto& r) { return r.flagged_inconsistent; }) == 0);
}

TEST_CASE("rows are ordered by degree, decomposable first") {
    for (auto [g, hyp] : {std::pair{2, true}, {3, false}, {3, true}}) {
        const auto rows = classify_p3(g, hyp);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            CHECK(rows[i - 1].d <= rows[i].d);
            if (rows[i - 1].d == rows[i].d)
                CHECK_FALSE((rows[i - 1].decomposable == Tri::No &&
                             rows[i].decomposable == Tri::Yes));
        }
        for (const auto& r : rows) CHECK(r.rr_holds());
    }
}

TEST_CASE("genus 2 projections") {
    auto out = genus2_projection({Genus2Point::OnX0Line, false});
    auto* m = std::get_if<ScrollModel>(&out);
    REQUIRE(m);
    CHECK(m->degree == 4);
    CHECK(m->surface.e == 4);
    CHECK(m->speciality == 2);

    out = genus2_projection({Genus2Point::OffSpecialFibers, false});
    m = std::get_if<ScrollModel>(&out);
    REQUIRE(m);
    CHECK(m->degree == 5);
    CHECK(m->surface.e == 1);
    CHECK(m->surface.decomposable == Tri::Yes);

    out = genus2_projection({Genus2Point::OnA1A2Fiber, false});
    m = std::get_if<ScrollModel>(&out);
    REQUIRE(m);
    CHECK(m->surface.e == 1);
    CHECK(m->surface.decomposable == Tri::No);

    CHECK(std::holds_alternative<Degenerate>(genus2_projection({Genus2Point::SingularPointX1, false})));
    CHECK(std::holds_alternative<Degenerate>(genus2_projection({Genus2Point::OffSpecialFibers, true})));
}

TEST_CASE("genus 3 degree 7 projections") {
    auto out = genus3_d7_projection(
        std::vector{pt("P1", {CurveLabel::x0()}), pt("P2", {CurveLabel::x1()}), pt("P3", {CurveLabel::x1()})},
        false);
    auto* m = std::get_if<ScrollModel>(&out);
    REQUIRE(m);
    CHECK(m->surface.decomposable == Tri::Yes);
    CHECK(m->surface.find(CurveLabel::x0())->self_int == -1);
    CHECK(m->surface.find(CurveLabel::x1())->self_int == 1);
    CHECK(matching_rows(*m, false).size() == 1);

    out = genus3_d7_projection(std::vector{pt("P1"), pt("P2"), pt("P3")}, false);
    m = std::get_if<ScrollModel>(&out);
    REQUIRE(m);
    CHECK(m->surface.e == -1);
    CHECK(m->surface.decomposable == Tri::No);

    CHECK(std::holds_alternative<Rejected>(genus3_d7_projection(
        std::vector{pt("P1", {CurveLabel::x0()}), pt("P2", {CurveLabel::x0()}), pt("P3")}, false)));
    CHECK(std::holds_alternative<Rejected>(genus3_d7_projection(
        std::vector{pt("P1", {CurveLabel::x1()}), pt("P2", {CurveLabel::x1()}), pt("P3", {CurveLabel::x1()})},
        false)));
    CHECK_THROWS_AS(genus3_d7_projection(std::vector{pt("P1", {CurveLabel::x0()}), pt("P2"), pt("P3")}, true),
                    DomainError);
    CHECK_THROWS_AS(genus3_d7_projection(std::vector{pt("P1"), pt("P2")}, false), DomainError);
}

}
