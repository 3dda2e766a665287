#include "kummer/orbifold.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace kummer {

bool is_supported_modulus(int d) { return d == 2 || d == 3 || d == 4 || d == 6; }

GroupElement::GroupElement(int d_, std::vector<int> residues_)
    : d(d_), residues(std::move(residues_)) {
    if (!is_supported_modulus(d))
        throw std::invalid_argument("unsupported modulus d=" + std::to_string(d));
    int sum = 0;
    for (int r : residues) {
        if (r < 0 || r >= d)
            throw std::invalid_argument("residue out of range [0," + std::to_string(d) + ")");
        sum += r;
    }
    if (sum % d != 0) throw std::invalid_argument("residues do not sum to 0 mod d");
}

bool GroupElement::is_identity() const {
    return std::all_of(residues.begin(), residues.end(), [](int r) { return r == 0; });
}

GroupElement GroupElement::identity(int d, int n) {
    return GroupElement(d, std::vector<int>(static_cast<std::size_t>(n), 0));
}

std::vector<GroupElement> enumerate_group(int d, int n) {
    if (!is_supported_modulus(d))
        throw std::invalid_argument("unsupported modulus d=" + std::to_string(d));
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<GroupElement> result;
    std::vector<int> residues(static_cast<std::size_t>(n), 0);
    // Odometer over the first n-1 residues; the last one is forced.
    while (true) {
        int sum = std::accumulate(residues.begin(), residues.end() - 1, 0);
        residues.back() = (d - sum % d) % d;
        result.emplace_back(d, residues);
        int i = n - 2;
        while (i >= 0 && residues[static_cast<std::size_t>(i)] == d - 1)
            residues[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++residues[static_cast<std::size_t>(i)];
    }
    return result;
}

FracExp age(const GroupElement& g) {
    const int sum = std::accumulate(g.residues.begin(), g.residues.end(), 0);
    return FracExp::from_rational(sum, g.d);
}

std::vector<int> FixedPointTable::power_perm(int k, int power) const {
    const auto& base = phi_perm[static_cast<std::size_t>(k)];
    const int m = static_cast<int>(base.size());
    std::vector<int> result(static_cast<std::size_t>(m));
    std::iota(result.begin(), result.end(), 0);
    for (int step = 0; step < ((power % d) + d) % d; ++step)
        for (int i = 0; i < m; ++i)
            result[static_cast<std::size_t>(i)] = base[static_cast<std::size_t>(
                result[static_cast<std::size_t>(i)])];
    return result;
}

FixedPointTable fixed_point_table(int d) {
    // Derived once from the Weierstrass models; `a` is the infinity point.
    FixedPointTable t;
    t.d = d;
    t.names.resize(static_cast<std::size_t>(d));
    t.phi_perm.resize(static_cast<std::size_t>(d));
    switch (d) {
        case 2:
            // phi_2 = -1 fixes the four 2-torsion points and acts trivially.
            t.names[1] = {"a", "b", "c", "d"};
            t.phi_perm[1] = {0, 1, 2, 3};
            break;
        case 3:
            // y^2 = x^3 + 1, phi_3(x,y) = (z3 x, y): x = 0 gives (0,1), (0,-1).
            t.names[1] = t.names[2] = {"a", "b", "c"};
            t.phi_perm[1] = t.phi_perm[2] = {0, 1, 2};
            break;
        case 4:
            // y^2 = x^3 + x, phi_4(x,y) = (-x, iy).
            // Fix(phi_4) = {a, (0,0)}; Fix(phi_4^2) adds (i,0), (-i,0)
            // which phi_4 swaps.
            t.names[1] = t.names[3] = {"a", "b"};
            t.phi_perm[1] = t.phi_perm[3] = {0, 1};
            t.names[2] = {"a", "b", "c", "d"};
            t.phi_perm[2] = {0, 1, 3, 2};
            break;
        case 6:
            // y^2 = x^3 + 1, phi_6(x,y) = (z3 x, -y).
            // b = (0,1), c = (0,-1) swapped by phi_6;
            // d = (1,0), e = (z3,0), f = (z3^2,0) cycled by phi_6.
            t.names[1] = t.names[5] = {"a"};
            t.phi_perm[1] = t.phi_perm[5] = {0};
            t.names[2] = t.names[4] = {"a", "b", "c"};
            t.phi_perm[2] = t.phi_perm[4] = {0, 2, 1};
            t.names[3] = {"a", "d", "e", "f"};
            t.phi_perm[3] = {0, 2, 3, 1};
            break;
        default:
            throw std::invalid_argument("unsupported modulus d=" + std::to_string(d));
    }
    return t;
}

FixedLocus fixed_locus(const GroupElement& g, const FixedPointTable& table) {
    FixedLocus locus;
    locus.g = g;
    for (int i = 0; i < g.n(); ++i)
        if (g.residues[static_cast<std::size_t>(i)] != 0) locus.support.push_back(i);
    locus.free_count = g.n() - static_cast<int>(locus.support.size());
    // Cartesian product of the per-coordinate fixed sets, lexicographic.
    std::size_t total = 1;
    for (int i : locus.support)
        total *= static_cast<std::size_t>(
            table.fix_count(g.residues[static_cast<std::size_t>(i)]));
    locus.labels.reserve(total);
    Label current(locus.support.size(), 0);
    for (std::size_t c = 0; c < total; ++c) {
        locus.labels.push_back(current);
        for (int pos = static_cast<int>(current.size()) - 1; pos >= 0; --pos) {
            const int limit =
                table.fix_count(g.residues[static_cast<std::size_t>(
                    locus.support[static_cast<std::size_t>(pos)])]);
            if (++current[static_cast<std::size_t>(pos)] < limit) break;
            current[static_cast<std::size_t>(pos)] = 0;
        }
    }
    return locus;
}

Label act_on_labels(const GroupElement& h, const GroupElement& g, const FixedPointTable& table,
                    const Label& label) {
    if (h.d != g.d || h.n() != g.n())
        throw std::invalid_argument("act_on_labels: h and g from different groups");
    std::vector<int> support;
    for (int i = 0; i < g.n(); ++i)
        if (g.residues[static_cast<std::size_t>(i)] != 0) support.push_back(i);
    if (support.size() != label.size())
        throw std::invalid_argument("act_on_labels: label length does not match support of g");
    Label out(label.size());
    for (std::size_t pos = 0; pos < support.size(); ++pos) {
        const int i = support[pos];
        const auto perm = table.power_perm(g.residues[static_cast<std::size_t>(i)],
                                           h.residues[static_cast<std::size_t>(i)]);
        out[pos] = perm[static_cast<std::size_t>(label[pos])];
    }
    return out;
}

void EnumerationBudget::check(int d, int n) const {
    const int limit = (d == 6) ? max_n_d_6 : max_n_d_le_4;
    if (n > limit)
        throw BudgetExceeded("enumeration budget exceeded: d=" + std::to_string(d) +
                             " n=" + std::to_string(n) + " (limit n<=" + std::to_string(limit) +
                             ", override with a larger budget)");
}

std::vector<Orbit> orbits_and_stabilizers(const GroupElement& g, const FixedPointTable& table,
                                          const std::vector<GroupElement>& group) {
    const FixedLocus locus = fixed_locus(g, table);
    std::vector<Orbit> orbits;
    std::set<Label> seen;
    for (const Label& label : locus.labels) {
        if (seen.count(label)) continue;
        Orbit orbit;
        orbit.representative = label;
        std::set<Label> members;
        for (const GroupElement& h : group) {
            Label image = act_on_labels(h, g, table, label);
            if (image == label) {
                std::vector<int> proj;
                proj.reserve(static_cast<std::size_t>(locus.free_count));
                for (int i = 0; i < g.n(); ++i)
                    if (g.residues[static_cast<std::size_t>(i)] == 0)
                        proj.push_back(h.residues[static_cast<std::size_t>(i)]);
                orbit.stabilizer_projection.push_back(std::move(proj));
            }
            members.insert(std::move(image));
        }
        orbit.size = static_cast<std::int64_t>(members.size());
        seen.insert(members.begin(), members.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

std::vector<std::vector<std::int64_t>> invariant_cohomology_dims(
    const std::vector<std::vector<int>>& chars, int l, int d) {
    for (const auto& h : chars)
        if (static_cast<int>(h.size()) != l)
            throw std::invalid_argument("character vector length does not match l");
    std::vector<std::vector<std::int64_t>> dims(
        static_cast<std::size_t>(l + 1), std::vector<std::int64_t>(static_cast<std::size_t>(l + 1), 0));
    const std::uint32_t masks = 1u << l;
    for (std::uint32_t s = 0; s < masks; ++s) {
        for (std::uint32_t t = 0; t < masks; ++t) {
            bool invariant = true;
            for (const auto& h : chars) {
                int value = 0;
                for (int k = 0; k < l; ++k) {
                    if (s >> k & 1u) value += h[static_cast<std::size_t>(k)];
                    if (t >> k & 1u) value -= h[static_cast<std::size_t>(k)];
                }
                if (((value % d) + d) % d != 0) {
                    invariant = false;
                    break;
                }
            }
            if (invariant) ++dims[static_cast<std::size_t>(std::popcount(s))]
                                [static_cast<std::size_t>(std::popcount(t))];
        }
    }
    return dims;
}

BigInt closed_form_invariant_dims(int d, int n, int p, int q) {
    if (!is_supported_modulus(d))
        throw std::invalid_argument("unsupported modulus d=" + std::to_string(d));
    if (p < 0 || q < 0 || p > n || q > n) return 0;
    if (d == 2) {
        const bool diag = (p == q);
        const bool anti = (p + q == n);
        if (diag && anti) return 2 * binomial(n, p);
        if (diag || anti) return binomial(n, p);
        return 0;
    }
    if (p == q) return binomial(n, p);
    if ((p == 0 && q == n) || (p == n && q == 0)) return 1;
    return 0;
}

namespace {

FracPoly group_element_contribution(const GroupElement& g, const FixedPointTable& table,
                                    const std::vector<GroupElement>& group) {
    const FracExp shift = age(g);
    const int l = g.n() - static_cast<int>(std::count_if(
                              g.residues.begin(), g.residues.end(), [](int r) { return r != 0; }));
    FracPoly contribution;
    for (const Orbit& orbit : orbits_and_stabilizers(g, table, group)) {
        const auto dims = invariant_cohomology_dims(orbit.stabilizer_projection, l, g.d);
        for (int i = 0; i <= l; ++i)
            for (int j = 0; j <= l; ++j)
                if (dims[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
                    contribution.add_term(
                        FracExp::from_integer(i) + shift, FracExp::from_integer(j) + shift,
                        dims[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return contribution;
}

}  // namespace

FracPoly chen_ruan_poincare(int d, int n, const EnumerationBudget& budget, unsigned threads) {
    budget.check(d, n);
    const FixedPointTable table = fixed_point_table(d);
    const std::vector<GroupElement> group = enumerate_group(d, n);
    if (threads <= 1) {
        FracPoly total;
        for (const GroupElement& g : group) total += group_element_contribution(g, table, group);
        return total;
    }
    const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(group.size()));
    std::vector<FracPoly> partial(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t idx = w; idx < group.size(); idx += workers)
                partial[w] += group_element_contribution(group[idx], table, group);
        });
    }
    for (auto& th : pool) th.join();
    // The merge is an exact commutative sum; chunk order is fixed anyway.
    FracPoly total;
    for (const FracPoly& p : partial) total += p;
    return total;
}

FracPoly closed_form_poincare(int d, int n) {
    if (!is_supported_modulus(d))
        throw std::invalid_argument("unsupported modulus d=" + std::to_string(d));
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const auto un = static_cast<std::uint32_t>(n);
    const FracPoly xn = FracPoly::x().pow(un);
    const FracPoly yn = FracPoly::y().pow(un);
    switch (d) {
        case 2: {
            FracPoly base = FracPoly::constant(1) + FracPoly::xy_power(1, 1) +
                            FracPoly::xy_power(1, 2, 4);
            return (FracPoly::x() + FracPoly::y()).pow(un) + base.pow(un);
        }
        case 3: {
            FracPoly base = FracPoly::constant(1) + FracPoly::xy_power(1, 3);
            return xn + yn + base.pow(3 * un);
        }
        case 4: {
            FracPoly base = FracPoly::constant(1) + FracPoly::xy_power(1, 1) +
                            FracPoly::xy_power(1, 4, 2) + FracPoly::xy_power(2, 4, 3) +
                            FracPoly::xy_power(3, 4, 2);
            return xn + yn + base.pow(un) + FracPoly::xy_power(n, 2);
        }
        case 6: {
            FracPoly base = FracPoly::constant(1) + FracPoly::xy_power(1, 1) +
                            FracPoly::xy_power(1, 6) + FracPoly::xy_power(2, 6, 2) +
                            FracPoly::xy_power(3, 6, 2) + FracPoly::xy_power(4, 6, 2) +
                            FracPoly::xy_power(5, 6);
            FracPoly tail = (FracPoly::xy_power(2, 6) + FracPoly::xy_power(4, 6)).pow(un);
            return xn + yn + base.pow(un) + FracPoly::xy_power(n, 2, 2) + tail;
        }
        default:
            throw std::invalid_argument("unsupported modulus");
    }
}

namespace {

BigInt ipow(BigInt base, int exp) {
    BigInt r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

BigInt euler_closed(int d, int n) {
    const BigInt sign = (n % 2 == 0) ? 1 : -1;
    switch (d) {
        case 2:
            return (ipow(6, n) + 3 * ipow(-2, n)) / 2;
        case 3:
            return (ipow(8, n) + 8 * sign) / 3;
        case 4:
            return (ipow(9, n) + 3) / 4 + 3 * sign;
        case 6:
            return (ipow(10, n) + 3 * ipow(2, n) + 8) / 6 + 4 * sign;
        default:
            throw std::invalid_argument("unsupported modulus d=" + std::to_string(d));
    }
}

void HodgeDiamond::validate() const {
    auto fail = [](int p, int q, const std::string& what) {
        throw std::logic_error("Hodge diamond invariant violated at (p,q)=(" + std::to_string(p) +
                               "," + std::to_string(q) + "): " + what);
    };
    const auto& h = entries;
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            const auto up = static_cast<std::size_t>(p), uq = static_cast<std::size_t>(q);
            if (h[up][uq] < 0) fail(p, q, "negative entry");
            if (h[up][uq] != h[uq][up]) fail(p, q, "Hodge symmetry h^{p,q} = h^{q,p}");
            if (h[up][uq] != h[static_cast<std::size_t>(n - p)][static_cast<std::size_t>(n - q)])
                fail(p, q, "duality h^{p,q} = h^{n-p,n-q}");
        }
    if (h[0][0] != 1) fail(0, 0, "h^{0,0} = 1");
    if (h[static_cast<std::size_t>(n)][0] != 1) fail(n, 0, "h^{n,0} = 1");
    for (int j = 1; j < n; ++j)
        if (h[static_cast<std::size_t>(j)][0] != 0) fail(j, 0, "h^{j,0} = 0 for 0 < j < n");
}

std::string HodgeDiamond::to_json() const {
    std::ostringstream out;
    out << "{\"d\":" << d << ",\"n\":" << n << ",\"method\":\"" << method << "\",\"entries\":[";
    for (int p = 0; p <= n; ++p) {
        if (p > 0) out << ",";
        out << "[";
        for (int q = 0; q <= n; ++q) {
            if (q > 0) out << ",";
            out << "\"" << entries[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)].str()
                << "\"";
        }
        out << "]";
    }
    out << "],\"euler\":\"" << euler.str() << "\"}";
    return out.str();
}

HodgeDiamond hodge_diamond(int d, int n, DiamondMethod method, const EnumerationBudget& budget,
                           unsigned threads) {
    const FracPoly poly = (method == DiamondMethod::kBrute)
                              ? chen_ruan_poincare(d, n, budget, threads)
                              : closed_form_poincare(d, n);
    HodgeDiamond diamond;
    diamond.d = d;
    diamond.n = n;
    diamond.method = (method == DiamondMethod::kBrute) ? "brute" : "closed";
    diamond.entries.assign(static_cast<std::size_t>(n + 1),
                           std::vector<BigInt>(static_cast<std::size_t>(n + 1), 0));
    const FracPoly integral = poly.integer_part();
    for (const auto& [key, coeff] : integral.terms()) {
        const std::int64_t p = key.first / 12, q = key.second / 12;
        if (p < 0 || q < 0 || p > n || q > n)
            throw std::logic_error("integer-exponent coefficient outside the diamond at (" +
                                   std::to_string(p) + "," + std::to_string(q) + ")");
        diamond.entries[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = coeff;
    }
    diamond.euler = integral.integer_part_euler();
    diamond.validate();
    return diamond;
}

}  // namespace kummer
