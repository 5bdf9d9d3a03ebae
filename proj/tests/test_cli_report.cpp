#include "doctest.h"

#include <sstream>

#include "scrolls/cli.hpp"
#include "scrolls/report.hpp"

using namespace scrolls;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

json structured(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("structured");
    const auto r = run(args);
    REQUIRE(r.status == 0);
    return json::parse(r.out);
}

}  // namespace

TEST_SUITE("cli_report") {

TEST_CASE("classify") {
    auto j = structured({"classify", "--g", "3", "--N", "6"});
    CHECK(j["results"][0]["case_id"] == 1);
    CHECK(j["results"][0]["degree"] == 10);
    CHECK(j["results"][0]["rr_check"] == "pass");

    j = structured({"classify", "--g", "3", "--d", "7", "--i", "1"});
    CHECK(j["query_echo"]["N_resolved"] == 3);
    CHECK(j["results"][0]["case_id"] == 2);
    CHECK(j["results"][0]["surface"]["e"] == -1);

    // N = 7 and 2g+N-2 = 9: d = 9 is on the bound, not past it.
    j = structured({"classify", "--g", "2", "--d", "9", "--i", "1"});
    CHECK(j["results"][0]["ambient_dim"] == 7);
}

TEST_CASE("classify errors: range vs inconsistency") {
    CHECK(run({"classify", "--g", "1", "--N", "5"}).status == kExitUsage);
    CHECK(run({"classify", "--g", "3", "--N", "2"}).status == kExitUsage);
    CHECK(run({"classify", "--g", "3", "--d", "7"}).status == kExitUsage);
    CHECK(run({"classify", "--g", "3", "--N", "3", "--d", "8"}).status == kExitDomain);
    CHECK(run({"classify", "--g", "3", "--N", "3", "--d", "7", "--i", "2"}).status == kExitDomain);
    CHECK(run({"classify", "--g", "3", "--d", "9", "--i", "0"}).status == kExitDomain);
    CHECK(run({"classify", "--g", "3", "--d", "7", "--i", "2"}).status == kExitDomain);
    CHECK(run({"classify", "--g", "x"}).status == kExitUsage);
}

TEST_CASE("table") {
    CHECK(structured({"table", "--g", "2"})["results"].size() == 3);
    CHECK(structured({"table", "--g", "3", "--hyperelliptic"})["results"].size() == 5);
    CHECK(structured({"table", "--g", "3", "--non-hyperelliptic"})["results"].size() == 8);
    const auto both = structured({"table", "--g", "3"});
    CHECK(both["results"].size() == 13);
    CHECK(both["warnings"].size() == 1);
    CHECK(run({"table", "--g", "4"}).status == kExitUsage);
    CHECK(run({"table", "--g", "2", "--non-hyperelliptic"}).status == kExitDomain);
    CHECK(run({"table", "--g", "3", "--hyperelliptic", "--non-hyperelliptic"}).status == kExitUsage);
}

TEST_CASE("project") {
    auto j = structured({"project", "--g", "3", "--deg-b", "6", "--points", "X0,X1,X1"});
    CHECK(j["results"][0]["kind"] == "scroll_model");
    CHECK(j["results"][0]["degree"] == 7);
    CHECK(j["results"][0]["decomposable"] == "yes");

    j = structured({"project", "--g", "2", "--deg-b", "4", "--points", "X0"});
    CHECK(j["results"][0]["degree"] == 4);
    CHECK(j["results"][0]["e"] == 4);

    j = structured({"project", "--g", "3", "--deg-b", "6", "--points", "X0,X0,generic"});
    CHECK(j["results"][0]["kind"] == "rejected");

    j = structured({"project", "--g", "2", "--deg-b", "4", "--points", "singular"});
    CHECK(j["results"][0]["kind"] == "degenerate");

    j = structured({"project", "--g", "2", "--deg-b", "4", "--points", "X1+fiber:A2"});
    CHECK(j["results"][0]["kind"] == "degenerate");

    j = structured({"project", "--g", "4", "--deg-b", "8", "--points", "X0,Yc:2,generic"});
    CHECK(j["results"][0]["degree"] == 11);
    CHECK(j["results"][0]["ambient_dim"] == 5);
}

TEST_CASE("project errors") {
    CHECK(run({"project", "--g", "3", "--deg-b", "6", "--points", "X7"}).status == kExitUsage);
    CHECK(run({"project", "--g", "3", "--deg-b", "6", "--points", ""}).status == kExitUsage);
    CHECK(run({"project", "--g", "3", "--deg-b", "6", "--points", "X0+generic"}).status ==
          kExitUsage);
    CHECK(run({"project", "--g", "3", "--deg-b", "6", "--points", "X0+X1,generic,generic"})
              .status == kExitDomain);
    CHECK(run({"project", "--g", "3", "--deg-b", "6", "--points", "X0,generic,generic",
               "--hyperelliptic"})
              .status == kExitDomain);
    CHECK(run({"project", "--g", "3", "--deg-b", "6", "--points", "fiber:A,fiber:A,generic"})
              .status == kExitDomain);
}

TEST_CASE("points grammar") {
    const auto p = parse_points("X0+fiber:A1, Yc:3 ,generic");
    REQUIRE(p.size() == 3);
    CHECK(p[0].spec.fiber == "A1");
    CHECK(p[0].spec.lies_on(CurveLabel::x0()));
    CHECK(p[1].spec.lies_on(CurveLabel::y(3)));
    CHECK(p[1].spec.fiber == "P2");
    CHECK(p[2].spec.generic);
    CHECK_THROWS_AS(parse_points("Yc:0"), UsageError);
    CHECK_THROWS_AS(parse_points("Yc:x"), UsageError);
    CHECK_THROWS_AS(parse_points("fiber:A+fiber:B"), UsageError);
}

TEST_CASE("verify") {
    CHECK(run({"verify", "--suite", "rr-closure", "--g-max", "12"}).status == 0);
    CHECK(run({"verify", "--suite", "generica-boundaries", "--g-max", "20"}).status == 0);
    CHECK(run({"verify", "--suite", "transform-oracle", "--g-max", "3", "--k-max", "5"}).status == 0);
    CHECK(run({"verify", "--suite", "tables"}).status == 0);
    CHECK(run({"verify", "--suite", "nope"}).status == kExitUsage);
    CHECK(run({"verify", "--suite", "stability", "--g-max", "1"}).status == kExitDomain);
}

TEST_CASE("structured output round-trips byte for byte") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"table", "--g", "3"},
             {"classify", "--g", "5", "--N", "3"},
             {"project", "--g", "2", "--deg-b", "4", "--points", "fiber:A1"},
             {"verify", "--suite", "grassmannian"}}) {
        auto a = args;
        a.insert(a.end(), {"--format", "structured"});
        const auto first = run(a);
        const auto second = run(a);
        CHECK(first.out == second.out);
        const auto parsed = parse_structured(first.out);
        CHECK(serialize_structured(parsed) == first.out);
    }
}

TEST_CASE("typed round-trip of models and rows") {
    for (int g = 2; g <= 8; ++g)
        for (int n = 3; n <= 25; ++n) {
            const auto m = classify_generic(g, n);
            CHECK(generic_model_from_json(to_json(m)) == m);
        }
    for (auto [g, hyp] : {std::pair{2, true}, {3, false}, {3, true}})
        for (const auto& row : classify_p3(g, hyp)) {
            const auto back = table_row_from_json(json::parse(to_json(row).dump()));
            CHECK(back == row);
            if (row.grass_source)
                CHECK(back.grass_source->interpretation == row.grass_source->interpretation);
        }
}

TEST_CASE("parse_structured rejects an unknown schema") {
    Report r;
    auto j = to_json(r);
    j["schema_version"] = 99;
    CHECK_THROWS_AS(report_from_json(j), DomainError);
}

TEST_CASE("text output") {
    const auto r = run({"table", "--g", "2"});
    CHECK(r.status == 0);
    CHECK(r.out.find("result 3") != std::string::npos);
    CHECK(r.out.find("warnings:") != std::string::npos);
    CHECK(run({"--help"}).status == 0);
    CHECK(run({}).status == kExitUsage);
}

}
