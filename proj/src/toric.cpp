#include "kummer/toric.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kummer::toric {

namespace {

using Matrix = std::vector<std::vector<BigRational>>;

// Gaussian elimination over the rationals; returns false when singular.
bool solve_inplace(Matrix& a, Matrix& rhs) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return false;
        std::swap(a[pivot], a[col]);
        std::swap(rhs[pivot], rhs[col]);
        const BigRational inv = a[col][col];
        for (auto& v : a[col]) v /= inv;
        for (auto& v : rhs[col]) v /= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const BigRational factor = a[row][col];
            for (std::size_t j = 0; j < n; ++j) a[row][j] -= factor * a[col][j];
            for (std::size_t j = 0; j < rhs[row].size(); ++j)
                rhs[row][j] -= factor * rhs[col][j];
        }
    }
    return true;
}

BigRational determinant_rational(Matrix a) {
    const std::size_t n = a.size();
    BigRational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        const BigRational inv = a[col][col];
        for (std::size_t j = col; j < n; ++j) a[col][j] /= inv;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == 0) continue;
            const BigRational factor = a[row][col];
            for (std::size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
        }
    }
    return det;
}

bool is_integral(const BigRational& v) { return boost::multiprecision::denominator(v) == 1; }

}  // namespace

CyclicQuotient::CyclicQuotient(std::int64_t r_, std::vector<std::int64_t> weights_)
    : r(r_), weights(std::move(weights_)) {
    if (r < 1) throw std::invalid_argument("quotient order must be >= 1");
    for (auto w : weights)
        if (w < 0 || w >= r)
            throw std::invalid_argument("weight out of range [0," + std::to_string(r) + ")");
}

bool CyclicQuotient::is_gorenstein() const {
    std::int64_t sum = std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
    return sum % r == 0;
}

FracExp element_age(const CyclicQuotient& q, std::int64_t m) {
    if (m < 0 || m >= q.r) throw std::invalid_argument("element out of range [0,r)");
    std::int64_t sum = 0;
    for (auto w : q.weights) sum += (m * w) % q.r;
    return FracExp::from_rational(sum, q.r);
}

std::vector<std::int64_t> junior_elements(const CyclicQuotient& q) {
    std::vector<std::int64_t> juniors;
    for (std::int64_t m = 1; m < q.r; ++m) {
        std::int64_t sum = 0;
        for (auto w : q.weights) sum += (m * w) % q.r;
        if (sum == q.r) juniors.push_back(m);
    }
    return juniors;
}

BigInt Chart::determinant() const {
    Matrix a;
    for (const auto& row : rows) {
        a.emplace_back();
        for (auto v : row) a.back().emplace_back(v);
    }
    const BigRational det = determinant_rational(std::move(a));
    return boost::multiprecision::numerator(det);
}

InvarianceResult verify_chart_invariance(const Chart& chart, const CyclicQuotient& q) {
    if (chart.dim() != q.dim())
        throw std::invalid_argument("chart dimension does not match quotient");
    for (std::size_t i = 0; i < chart.rows.size(); ++i) {
        std::int64_t dot = 0;
        for (std::size_t j = 0; j < q.weights.size(); ++j)
            dot += chart.rows[i][j] * q.weights[j];
        if (((dot % q.r) + q.r) % q.r != 0) return {false, i};
    }
    return {true, std::nullopt};
}

CrepancyResult verify_chart_crepancy(const Chart& chart, const CyclicQuotient& q) {
    const std::size_t k = chart.dim();
    for (std::size_t col = 0; col < k; ++col) {
        std::int64_t sum = 0;
        for (std::size_t row = 0; row < k; ++row) sum += chart.rows[row][col];
        if (sum != 1)
            return {false, "column " + std::to_string(col) + " sums to " + std::to_string(sum) +
                               ", expected 1"};
    }
    const BigInt det_abs = boost::multiprecision::abs(chart.determinant());
    if (det_abs != q.r)
        return {false, "|det| = " + det_abs.str() + ", expected " + std::to_string(q.r)};
    return {true, {}};
}

std::vector<std::int64_t> lift_action(const Chart& chart, std::int64_t r,
                                      const std::vector<std::int64_t>& ambient_chars) {
    if (chart.dim() != ambient_chars.size())
        throw std::invalid_argument("character vector length does not match chart dimension");
    std::vector<std::int64_t> lift;
    lift.reserve(chart.rows.size());
    for (const auto& row : chart.rows) {
        std::int64_t dot = 0;
        for (std::size_t j = 0; j < row.size(); ++j) dot += row[j] * ambient_chars[j];
        lift.push_back(((dot % r) + r) % r);
    }
    return lift;
}

namespace {

Matrix invert(const Matrix& m) {
    const std::size_t k = m.size();
    Matrix a = m;
    Matrix inv(k, std::vector<BigRational>(k, 0));
    for (std::size_t i = 0; i < k; ++i) inv[i][i] = 1;
    if (!solve_inplace(a, inv)) throw std::domain_error("matrix is singular");
    return inv;
}

// p in Z^k + Z * (w/r) iff p - m*(w/r) is integral for some m in [0,r).
bool in_quotient_lattice(const std::vector<BigRational>& p, const CyclicQuotient& q) {
    for (std::int64_t m = 0; m < q.r; ++m) {
        bool ok = true;
        for (std::size_t i = 0; i < p.size(); ++i) {
            const BigRational shifted = p[i] - BigRational(m * q.weights[i], q.r);
            if (!is_integral(shifted)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

// Additive order of w/r modulo Z^k; equals the index [L : Z^k].
std::int64_t lattice_index(const CyclicQuotient& q) {
    std::int64_t g = q.r;
    for (auto w : q.weights) g = std::gcd(g, w);
    return q.r / g;
}

}  // namespace

std::vector<LatticePoint> cone_from_chart(const Chart& chart, const CyclicQuotient& q) {
    if (chart.dim() != q.dim())
        throw std::invalid_argument("chart dimension does not match quotient");
    Matrix m;
    for (const auto& row : chart.rows) {
        m.emplace_back();
        for (auto v : row) m.back().emplace_back(v);
    }
    const Matrix inv = invert(m);
    const std::size_t k = chart.dim();
    std::vector<LatticePoint> rays(k);
    for (std::size_t col = 0; col < k; ++col) {
        rays[col].coords.resize(k);
        for (std::size_t row = 0; row < k; ++row) rays[col].coords[row] = inv[row][col];
        if (!in_quotient_lattice(rays[col].coords, q))
            throw std::domain_error("cone ray " + std::to_string(col) +
                                    " does not lie in the quotient lattice");
    }
    return rays;
}

Chart chart_from_cone(const std::vector<LatticePoint>& rays) {
    const std::size_t k = rays.size();
    Matrix m(k, std::vector<BigRational>(k));
    for (std::size_t col = 0; col < k; ++col)
        for (std::size_t row = 0; row < k; ++row) m[row][col] = rays[col].coords[row];
    const Matrix inv = invert(m);
    Chart chart;
    chart.rows.assign(k, std::vector<std::int64_t>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (!is_integral(inv[i][j]))
                throw std::domain_error("cone is not dual to an integral monomial chart");
            chart.rows[i][j] =
                static_cast<std::int64_t>(boost::multiprecision::numerator(inv[i][j]));
        }
    return chart;
}

namespace {

bool is_basis_vector(const LatticePoint& p) {
    int ones = 0;
    for (const auto& c : p.coords) {
        if (c == 1)
            ++ones;
        else if (c != 0)
            return false;
    }
    return ones == 1;
}

// Do the interiors of cone(u_1..u_k) and cone(v_1..v_k) intersect?
// Decide feasibility of  sum l_i u_i = sum m_j v_j,  l,m > 0  by exact
// vertex enumeration of the polytope {A x = 0, sum x = 1, x >= 0} in the
// 2k coefficients x = (l, m): the interiors meet iff the polytope has a
// relatively interior point with all coordinates positive, i.e. iff every
// coordinate is positive at some vertex.
bool cone_interiors_intersect(const std::vector<LatticePoint>& u,
                              const std::vector<LatticePoint>& v) {
    const std::size_t k = u.size();
    const std::size_t vars = 2 * k;
    // Equality rows: k balance equations plus the normalization row.
    Matrix eq(k + 1, std::vector<BigRational>(vars, 0));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t row = 0; row < k; ++row) {
            eq[row][j] = u[j].coords[row];
            eq[row][k + j] = -v[j].coords[row];
        }
    for (std::size_t j = 0; j < vars; ++j) eq[k][j] = 1;

    std::vector<bool> coordinate_positive(vars, false);
    bool nonempty = false;

    // Choose k-1 coordinates pinned to zero; solve the square system.
    auto process = [&](const std::vector<std::size_t>& zeros) {
        Matrix a(vars, std::vector<BigRational>(vars, 0));
        Matrix rhs(vars, std::vector<BigRational>(1, 0));
        for (std::size_t row = 0; row <= k; ++row) a[row] = eq[row];
        rhs[k][0] = 1;
        for (std::size_t i = 0; i < zeros.size(); ++i) a[k + 1 + i][zeros[i]] = 1;
        if (!solve_inplace(a, rhs)) return;
        bool feasible = true;
        for (std::size_t j = 0; j < vars; ++j)
            if (rhs[j][0] < 0) {
                feasible = false;
                break;
            }
        if (!feasible) return;
        nonempty = true;
        for (std::size_t j = 0; j < vars; ++j)
            if (rhs[j][0] > 0) coordinate_positive[j] = true;
    };
    // Enumerate subsets of {0..2k-1} of size k-1.
    std::vector<std::size_t> idx(k >= 1 ? k - 1 : 0);
    std::iota(idx.begin(), idx.end(), 0);
    if (idx.empty()) {
        process(idx);
    } else {
        while (true) {
            process(idx);
            std::size_t i = idx.size();
            while (i > 0 && idx[i - 1] == vars - (idx.size() - (i - 1))) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    if (!nonempty) return false;
    for (std::size_t j = 0; j < vars; ++j)
        if (!coordinate_positive[j]) return false;
    return true;
}

}  // namespace

TriangulationResult verify_triangulation(const Triangulation& t) {
    const CyclicQuotient& q = t.quotient;
    const std::size_t k = q.dim();
    if (t.cones.empty()) return {false, "no cones"};
    const std::int64_t index = lattice_index(q);
    const BigRational covolume(1, index);

    BigRational total_volume = 0;
    for (std::size_t c = 0; c < t.cones.size(); ++c) {
        const auto& cone = t.cones[c];
        if (cone.size() != k)
            return {false, "cone " + std::to_string(c) + " has " + std::to_string(cone.size()) +
                               " rays, expected " + std::to_string(k)};
        for (std::size_t rix = 0; rix < cone.size(); ++rix) {
            const auto& ray = cone[rix];
            if (!in_quotient_lattice(ray.coords, q))
                return {false, "cone " + std::to_string(c) + " ray " + std::to_string(rix) +
                                   " not in the quotient lattice"};
            if (!is_basis_vector(ray)) {
                BigRational sum = 0;
                for (const auto& coord : ray.coords) sum += coord;
                if (sum != 1)
                    return {false, "cone " + std::to_string(c) + " ray " + std::to_string(rix) +
                                       " has coordinate sum != 1 (not on the junior simplex)"};
            }
        }
        Matrix m(k, std::vector<BigRational>(k));
        for (std::size_t col = 0; col < k; ++col)
            for (std::size_t row = 0; row < k; ++row) m[row][col] = cone[col].coords[row];
        BigRational det = determinant_rational(std::move(m));
        if (det < 0) det = -det;
        if (det != covolume)
            return {false, "cone " + std::to_string(c) + " is not unimodular (normalized volume " +
                               BigRational(det * index).str() + ")"};
        total_volume += det;
    }
    if (total_volume != 1)
        return {false, "normalized cone volumes sum to " +
                           BigRational(total_volume * index).str() + ", expected " +
                           std::to_string(index) + " (orthant not covered)"};
    for (std::size_t i = 0; i < t.cones.size(); ++i)
        for (std::size_t j = i + 1; j < t.cones.size(); ++j)
            if (cone_interiors_intersect(t.cones[i], t.cones[j]))
                return {false, "cones " + std::to_string(i) + " and " + std::to_string(j) +
                                   " have overlapping interiors"};
    return {true, {}};
}

}  // namespace kummer::toric
