#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "kummer/chart_io.hpp"
#include "kummer/toric.hpp"

using namespace kummer;
using namespace kummer::toric;

namespace {

const std::string kChartFile = std::string(KUMMER_DATA_DIR) + "/reference_charts.json";
const std::string kTriFile = std::string(KUMMER_DATA_DIR) + "/reference_triangulations.json";

Triangulation fan_from_case(const ChartCase& c) {
    Triangulation t;
    t.quotient = c.quotient;
    for (const auto& fixture : c.charts) t.cones.push_back(cone_from_chart(fixture.chart, c.quotient));
    return t;
}

}  // namespace

TEST_CASE("element ages") {
    const CyclicQuotient q114(6, {1, 1, 4});
    CHECK(element_age(q114, 1) == FracExp::from_integer(1));
    CHECK(element_age(q114, 0) == FracExp::from_integer(0));
    CHECK(element_age(CyclicQuotient(6, {1, 1, 5, 5}), 3) == FracExp::from_integer(2));
    CHECK(element_age(CyclicQuotient(6, {1, 2, 3}), 1) == FracExp::from_integer(1));
}

TEST_CASE("junior elements") {
    CHECK(junior_elements(CyclicQuotient(6, {1, 1, 5, 5})).empty());
    CHECK(junior_elements(CyclicQuotient(3, {1, 1, 2, 2})).empty());
    CHECK(junior_elements(CyclicQuotient(2, {1, 1, 1, 1})).empty());
    CHECK(junior_elements(CyclicQuotient(6, {1, 1, 4})) == std::vector<std::int64_t>{1, 2, 3});
    CHECK_FALSE(junior_elements(CyclicQuotient(6, {1, 2, 3})).empty());
    CHECK_FALSE(junior_elements(CyclicQuotient(6, {1, 1, 2, 2})).empty());
}

TEST_CASE("ages partition the group") {
    for (const CyclicQuotient& q :
         {CyclicQuotient(6, {1, 1, 4}), CyclicQuotient(6, {1, 2, 3}),
          CyclicQuotient(6, {1, 1, 5, 5}), CyclicQuotient(3, {1, 1, 2, 2})}) {
        CHECK(q.is_gorenstein());
        std::map<std::int64_t, int> count_by_age;
        for (std::int64_t m = 0; m < q.r; ++m) ++count_by_age[element_age(q, m).num];
        std::int64_t total = 0;
        for (const auto& [age_num, count] : count_by_age) {
            (void)age_num;
            total += count;
        }
        CHECK(total == q.r);
    }
}

TEST_CASE("chart invariance") {
    const CyclicQuotient q15(6, {1, 5});
    CHECK(verify_chart_invariance(Chart{{{6, 0}, {-5, 1}}}, q15).ok);
    CHECK(verify_chart_invariance(Chart{{{6, 0, 0}, {-1, 1, 0}, {-4, 0, 1}}},
                                  CyclicQuotient(6, {1, 1, 4}))
              .ok);
    const auto bad = verify_chart_invariance(Chart{{{1, 0}, {0, 1}}}, q15);
    CHECK_FALSE(bad.ok);
    CHECK(bad.offending_row == 0);
}

TEST_CASE("chart crepancy") {
    const CyclicQuotient q15(6, {1, 5});
    CHECK(verify_chart_crepancy(Chart{{{6, 0}, {-5, 1}}}, q15).ok);
    CHECK(verify_chart_crepancy(Chart{{{4, 0, -1}, {-1, 1, 0}, {-2, 0, 2}}},
                                CyclicQuotient(6, {1, 1, 4}))
              .ok);
    const auto identity = verify_chart_crepancy(Chart{{{1, 0}, {0, 1}}}, q15);
    CHECK_FALSE(identity.ok);
    CHECK(identity.failure.find("det") != std::string::npos);
}

TEST_CASE("action lifts") {
    CHECK(lift_action(Chart{{{5, -1}, {-4, 2}}}, 6, {0, 5}) ==
          std::vector<std::int64_t>{1, 4});
    CHECK(lift_action(Chart{{{4, 0, -1}, {-1, 1, 0}, {-2, 0, 2}}}, 6, {0, 1, 4}) ==
          std::vector<std::int64_t>{2, 1, 2});
    CHECK(lift_action(Chart{{{6, 0}, {-5, 1}}}, 6, {0, 0}) == std::vector<std::int64_t>{0, 0});
}

TEST_CASE("cones from charts") {
    const auto rays15 = cone_from_chart(Chart{{{6, 0}, {-5, 1}}}, CyclicQuotient(6, {1, 5}));
    REQUIRE(rays15.size() == 2);
    CHECK(rays15[0].coords == std::vector<BigRational>{BigRational(1, 6), BigRational(5, 6)});
    CHECK(rays15[1].coords == std::vector<BigRational>{0, 1});

    const auto basis = cone_from_chart(Chart{{{1, 0}, {0, 1}}}, CyclicQuotient(1, {0, 0}));
    CHECK(basis[0].coords == std::vector<BigRational>{1, 0});
    CHECK(basis[1].coords == std::vector<BigRational>{0, 1});

    const auto rays114 = cone_from_chart(Chart{{{6, 0, 0}, {-1, 1, 0}, {-4, 0, 1}}},
                                         CyclicQuotient(6, {1, 1, 4}));
    CHECK(rays114[0].coords ==
          std::vector<BigRational>{BigRational(1, 6), BigRational(1, 6), BigRational(2, 3)});
    CHECK(rays114[1].coords == std::vector<BigRational>{0, 1, 0});
    CHECK(rays114[2].coords == std::vector<BigRational>{0, 0, 1});

    // A chart inconsistent with the quotient lattice is rejected.
    CHECK_THROWS_AS(cone_from_chart(Chart{{{6, 0}, {-5, 1}}}, CyclicQuotient(6, {1, 1})),
                    std::domain_error);
}

TEST_CASE("fixture charts all certify") {
    const auto cases = load_chart_cases(kChartFile);
    REQUIRE(cases.size() == 4);
    std::size_t total = 0;
    for (const auto& c : cases) {
        CHECK(c.quotient.is_gorenstein());
        for (const auto& fixture : c.charts) {
            INFO("chart ", fixture.label);
            CHECK(verify_chart_invariance(fixture.chart, c.quotient).ok);
            CHECK(verify_chart_crepancy(fixture.chart, c.quotient).ok);
            REQUIRE(fixture.expected_lift.has_value());
            CHECK(lift_action(fixture.chart, c.quotient.r, c.linearisation) ==
                  *fixture.expected_lift);
            ++total;
        }
    }
    CHECK(total == 24);
}

TEST_CASE("cone round-trip on fixture charts") {
    for (const auto& c : load_chart_cases(kChartFile))
        for (const auto& fixture : c.charts) {
            INFO("chart ", fixture.label);
            const auto rays = cone_from_chart(fixture.chart, c.quotient);
            CHECK(chart_from_cone(rays).rows == fixture.chart.rows);
        }
}

TEST_CASE("triangulations of the junior simplex") {
    const auto cases = load_chart_cases(kChartFile);
    for (const auto& c : cases) {
        if (c.case_name != "ii" && c.case_name != "iii") continue;
        const Triangulation fan = fan_from_case(c);
        const auto result = verify_triangulation(fan);
        INFO("case ", c.case_name, ": ", result.diagnostics);
        CHECK(result.ok);

        Triangulation missing = fan;
        missing.cones.pop_back();
        const auto deficit = verify_triangulation(missing);
        CHECK_FALSE(deficit.ok);
        CHECK(deficit.diagnostics.find("sum") != std::string::npos);

        Triangulation doubled = fan;
        doubled.cones.push_back(doubled.cones.front());
        CHECK_FALSE(verify_triangulation(doubled).ok);
    }
}

TEST_CASE("triangulation fixtures agree with reconstructed fans") {
    const auto tri_cases = load_triangulation_cases(kTriFile);
    REQUIRE(tri_cases.size() == 2);
    const auto chart_cases = load_chart_cases(kChartFile);
    for (const auto& tc : tri_cases) {
        const auto result = verify_triangulation(tc.triangulation);
        INFO("case ", tc.case_name, ": ", result.diagnostics);
        CHECK(result.ok);
        for (const auto& cc : chart_cases)
            if (cc.case_name == tc.case_name)
                CHECK(fan_from_case(cc).cones == tc.triangulation.cones);
    }
}

TEST_CASE("parse errors carry location") {
    CHECK_THROWS_AS(load_chart_cases(std::string(KUMMER_DATA_DIR) + "/nonexistent.json"),
                    ParseError);
}
