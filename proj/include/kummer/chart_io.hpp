#pragma once

// JSON ingestion of chart and triangulation files (the bundled reference
// fixtures and user-supplied data in the same schema).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kummer/toric.hpp"

namespace kummer::toric {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct ChartFixture {
    std::string label;
    Chart chart;
    std::optional<std::vector<std::int64_t>> expected_lift;
};

struct ChartCase {
    std::string case_name;
    CyclicQuotient quotient;
    std::vector<std::int64_t> linearisation;  // may be empty when absent
    std::vector<ChartFixture> charts;
};

struct TriangulationCase {
    std::string case_name;
    Triangulation triangulation;
};

// Accepts either a single case object or an array of them.
std::vector<ChartCase> load_chart_cases(const std::string& path);
std::vector<TriangulationCase> load_triangulation_cases(const std::string& path);

// True when the file's top-level object(s) carry a "cones" key.
bool file_contains_triangulations(const std::string& path);

}  // namespace kummer::toric
