#pragma once

// Certification of crepant-resolution data for Gorenstein cyclic quotient
// singularities 1/r(a_1,...,a_k): junior elements, monomial chart checks
// (invariance, crepancy, action lifts), cone reconstruction and exact
// triangulation validation on the junior simplex.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kummer/bigint.hpp"
#include "kummer/fracpoly.hpp"

namespace kummer::toric {

struct CyclicQuotient {
    std::int64_t r = 1;
    std::vector<std::int64_t> weights;  // entries in [0, r)

    CyclicQuotient() = default;
    CyclicQuotient(std::int64_t r, std::vector<std::int64_t> weights);  // validates ranges

    std::size_t dim() const { return weights.size(); }
    bool is_gorenstein() const;  // sum of weights = 0 mod r
};

// age of the group element m: (1/r) sum_i (m * a_i mod r).  The quotients
// in scope have r | 12 so the value embeds in FracExp.
FracExp element_age(const CyclicQuotient& q, std::int64_t m);

// All m in [1, r) of age exactly 1.
std::vector<std::int64_t> junior_elements(const CyclicQuotient& q);

// Rows are exponent vectors of the chart coordinates as Laurent monomials
// in the ambient coordinates.
struct Chart {
    std::vector<std::vector<std::int64_t>> rows;

    std::size_t dim() const { return rows.size(); }
    BigInt determinant() const;  // exact, fraction-free elimination
};

struct InvarianceResult {
    bool ok = true;
    std::optional<std::size_t> offending_row;
};

// Every chart coordinate must be invariant under the diagonal action:
// row . weights = 0 mod r.
InvarianceResult verify_chart_invariance(const Chart& chart, const CyclicQuotient& q);

struct CrepancyResult {
    bool ok = true;
    std::string failure;  // "column sum" or "determinant" description
};

// Column sums all 1 and |det| = r: the chart volume form pulls back to a
// constant multiple of the ambient one.
CrepancyResult verify_chart_crepancy(const Chart& chart, const CyclicQuotient& q);

// Character of each chart coordinate under the diagonal action with the
// given ambient characters: (rows . chars) mod r.
std::vector<std::int64_t> lift_action(const Chart& chart, std::int64_t r,
                                      const std::vector<std::int64_t>& ambient_chars);

// A lattice point with entries num/den, exact.
struct LatticePoint {
    std::vector<BigRational> coords;

    bool operator==(const LatticePoint&) const = default;
};

// Columns of the inverse chart matrix: the rays of the dual cone.  Each
// must lie in the lattice Z^k + Z * (1/r)(a_1,...,a_k); throws
// std::domain_error otherwise.
std::vector<LatticePoint> cone_from_chart(const Chart& chart, const CyclicQuotient& q);

// Reconstructs the chart matrix back from its cone rays (inverse of the
// ray matrix); round-trips with cone_from_chart.
Chart chart_from_cone(const std::vector<LatticePoint>& rays);

struct Triangulation {
    CyclicQuotient quotient;
    std::vector<std::vector<LatticePoint>> cones;  // k rays per cone
};

struct TriangulationResult {
    bool ok = true;
    std::string diagnostics;  // names the failing cone, ray or cone pair
};

// (a) every cone unimodular for the quotient lattice, (b) non-basis rays on
// the junior hyperplane (coordinate sum 1), (c) normalized cone volumes sum
// to r, (d) pairwise disjoint cone interiors, decided by exact rational
// linear algebra.
TriangulationResult verify_triangulation(const Triangulation& t);

}  // namespace kummer::toric
