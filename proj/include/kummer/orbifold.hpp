#pragma once

// Chen-Ruan orbifold cohomology of the Kummer-type quotients E_d^n/G_{d,n},
// d in {2,3,4,6}: group enumeration, fixed loci, ages, orbit/stabilizer
// analysis and assembly of the Poincare polynomial, plus the closed-form
// counterparts used as cross-checks.

#include <cstdint>
#include <string>
#include <vector>

#include "kummer/bigint.hpp"
#include "kummer/fracpoly.hpp"

namespace kummer {

bool is_supported_modulus(int d);  // d in {2,3,4,6}

// An element of G_{d,n}: residues mod d summing to 0 mod d.
struct GroupElement {
    int d = 2;
    std::vector<int> residues;

    GroupElement() = default;
    GroupElement(int d, std::vector<int> residues);  // validates

    int n() const { return static_cast<int>(residues.size()); }
    bool is_identity() const;
    static GroupElement identity(int d, int n);

    bool operator==(const GroupElement&) const = default;
};

std::vector<GroupElement> enumerate_group(int d, int n);

// age(g) = (1/d) * sum of residues.
FracExp age(const GroupElement& g);

// Fixed points of the powers of phi_d on E_d, with the permutation induced
// by phi_d itself.  Points are symbolic labels; only the permutation action
// matters.  Label conventions follow the torsion geometry of the curves:
// index 0 is always the point at infinity `a`, fixed by every power.
struct FixedPointTable {
    int d = 2;
    // For k = 1..d-1: names[k] lists point labels, phi_perm[k][i] is the
    // index of phi_d(point i) inside Fix(phi_d^k).
    std::vector<std::vector<std::string>> names;
    std::vector<std::vector<int>> phi_perm;

    int fix_count(int k) const { return static_cast<int>(names[k].size()); }
    // Index map of phi_d^power restricted to Fix(phi_d^k).
    std::vector<int> power_perm(int k, int power) const;
};

FixedPointTable fixed_point_table(int d);

// A label is one point index per support coordinate of g.
using Label = std::vector<int>;

struct FixedLocus {
    GroupElement g;
    std::vector<int> support;     // indices i with g_i != 0
    int free_count = 0;           // l = n - |support|
    std::vector<Label> labels;    // F(g), lexicographic order
};

FixedLocus fixed_locus(const GroupElement& g, const FixedPointTable& table);

// Applies phi^{h_i} coordinatewise to a label of F(g).
Label act_on_labels(const GroupElement& h, const GroupElement& g,
                    const FixedPointTable& table, const Label& label);

struct Orbit {
    Label representative;
    std::int64_t size = 0;
    // Projection of the stabilizer of the representative onto the free
    // coordinates of g: a subgroup of (Z/d)^l, listed element by element.
    std::vector<std::vector<int>> stabilizer_projection;
};

struct EnumerationBudget {
    int max_n_d_le_4 = 6;
    int max_n_d_6 = 5;

    void check(int d, int n) const;  // throws BudgetExceeded
};

std::vector<Orbit> orbits_and_stabilizers(const GroupElement& g, const FixedPointTable& table,
                                          const std::vector<GroupElement>& group);

// dims[i][j] = number of pairs (S,T) of subsets of {1..l}, |S|=i, |T|=j,
// with sum_{s in S} h_s - sum_{t in T} h_t = 0 mod d for every character
// vector h.  This is dim of the invariant part of H^{i,j}(E^l) under the
// subgroup of (Z/d)^l cut out by the characters.
std::vector<std::vector<std::int64_t>> invariant_cohomology_dims(
    const std::vector<std::vector<int>>& chars, int l, int d);

// Closed-form invariant dimensions of H^{p,q}(E_d^n)^{G_{d,n}}.
BigInt closed_form_invariant_dims(int d, int n, int p, int q);

// Brute-force Chen-Ruan Poincare polynomial: sum over g of
// (XY)^{age(g)} * sum_{i,j} dims[i][j] X^i Y^j per orbit.  The reduction
// over group elements is associative and order-independent; `threads`
// controls the parallel split (result is identical for any value).
FracPoly chen_ruan_poincare(int d, int n, const EnumerationBudget& budget = {},
                            unsigned threads = 1);

// The closed-form Poincare polynomial (four cases, one per d).
FracPoly closed_form_poincare(int d, int n);

// Closed-form Euler characteristics.
BigInt euler_closed(int d, int n);

struct HodgeDiamond {
    int d = 0;
    int n = 0;
    std::string method;                       // "brute" or "closed"
    std::vector<std::vector<BigInt>> entries; // entries[p][q] = h^{p,q}
    BigInt euler = 0;

    // Hodge symmetry, Serre duality and Calabi-Yau shape; throws
    // std::logic_error naming the failing (p,q) on violation.
    void validate() const;

    std::string to_json() const;  // {d, n, method, entries, euler}
};

enum class DiamondMethod { kBrute, kClosed };

HodgeDiamond hodge_diamond(int d, int n, DiamondMethod method,
                           const EnumerationBudget& budget = {}, unsigned threads = 1);

}  // namespace kummer
