#include "kummer/chart_io.hpp"

#include <fstream>

#include <json.hpp>

namespace kummer::toric {

namespace {

using nlohmann::json;

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::vector<json> as_case_array(json root) {
    if (root.is_array()) return std::vector<json>(root.begin(), root.end());
    return {std::move(root)};
}

CyclicQuotient parse_quotient(const json& obj, const std::string& path) {
    if (!obj.contains("r") || !obj.contains("weights"))
        throw ParseError(path + ": case object needs \"r\" and \"weights\"");
    try {
        return CyclicQuotient(obj.at("r").get<std::int64_t>(),
                              obj.at("weights").get<std::vector<std::int64_t>>());
    } catch (const std::exception& e) {
        throw ParseError(path + ": bad quotient: " + e.what());
    }
}

}  // namespace

std::vector<ChartCase> load_chart_cases(const std::string& path) {
    std::vector<ChartCase> cases;
    for (const json& obj : as_case_array(load_file(path))) {
        ChartCase c;
        c.case_name = obj.value("case", "");
        c.quotient = parse_quotient(obj, path);
        if (obj.contains("linearisation"))
            c.linearisation = obj.at("linearisation").get<std::vector<std::int64_t>>();
        if (!obj.contains("charts")) throw ParseError(path + ": case object needs \"charts\"");
        for (const json& chart_obj : obj.at("charts")) {
            ChartFixture fixture;
            fixture.label = chart_obj.value("label", "");
            try {
                fixture.chart.rows =
                    chart_obj.at("rows").get<std::vector<std::vector<std::int64_t>>>();
            } catch (const std::exception& e) {
                throw ParseError(path + ": chart \"" + fixture.label + "\": " + e.what());
            }
            for (const auto& row : fixture.chart.rows)
                if (row.size() != c.quotient.dim())
                    throw ParseError(path + ": chart \"" + fixture.label +
                                     "\": row length does not match quotient dimension");
            if (fixture.chart.rows.size() != c.quotient.dim())
                throw ParseError(path + ": chart \"" + fixture.label + "\": matrix is not square");
            if (chart_obj.contains("expected_lift"))
                fixture.expected_lift =
                    chart_obj.at("expected_lift").get<std::vector<std::int64_t>>();
            c.charts.push_back(std::move(fixture));
        }
        cases.push_back(std::move(c));
    }
    return cases;
}

std::vector<TriangulationCase> load_triangulation_cases(const std::string& path) {
    std::vector<TriangulationCase> cases;
    for (const json& obj : as_case_array(load_file(path))) {
        TriangulationCase c;
        c.case_name = obj.value("case", "");
        c.triangulation.quotient = parse_quotient(obj, path);
        if (!obj.contains("cones")) throw ParseError(path + ": case object needs \"cones\"");
        for (const json& cone_obj : obj.at("cones")) {
            std::vector<LatticePoint> cone;
            for (const json& point_obj : cone_obj) {
                LatticePoint point;
                for (const json& entry : point_obj) {
                    if (!entry.is_array() || entry.size() != 2)
                        throw ParseError(path + ": cone entries must be [num, den] pairs");
                    const auto num = entry.at(0).get<std::int64_t>();
                    const auto den = entry.at(1).get<std::int64_t>();
                    if (den == 0) throw ParseError(path + ": zero denominator in cone entry");
                    point.coords.emplace_back(num, den);
                }
                if (point.coords.size() != c.triangulation.quotient.dim())
                    throw ParseError(path + ": cone point dimension mismatch");
                cone.push_back(std::move(point));
            }
            c.triangulation.cones.push_back(std::move(cone));
        }
        cases.push_back(std::move(c));
    }
    return cases;
}

bool file_contains_triangulations(const std::string& path) {
    const json root = load_file(path);
    const json& first = root.is_array() ? (root.empty() ? root : root.at(0)) : root;
    return first.is_object() && first.contains("cones");
}

}  // namespace kummer::toric
