#pragma once

// Monomial invariant theory for diagonal abelian actions on products of
// curves: invariance predicates, truncated generating sets of the invariant
// monomial semigroup, verification of claimed generator lists, formal
// Laurent-monomial identities and the Frobenius-twist conjugation check
// between the group pairs G_1/G_2 (order 3) and H_1/H_3 (order 4).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kummer/bigint.hpp"

namespace kummer::inv {

// Exponent vector; negative entries are permitted only in the Laurent
// identity checks, never in generator computation.
using Monomial = std::vector<std::int64_t>;

std::int64_t total_degree(const Monomial& m);
std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& var_names);

struct DiagonalAction {
    int d = 1;
    int vars = 0;
    std::vector<std::vector<int>> generators;  // character vectors mod d

    DiagonalAction() = default;
    DiagonalAction(int d, int vars, std::vector<std::vector<int>> generators);  // validates
};

// Preset actions from the Zariski construction.  Variables for g1/g2 are
// (x_1..x_n) with tau_3-weight 1 (the y's have weight 0 and are omitted);
// for h1/h3 they are (x_1..x_n, y_1..y_n) with tau_4-weights x:2, y:1.
DiagonalAction group_family(const std::string& name, int n);
std::vector<std::string> family_var_names(const std::string& name, int n);

bool is_invariant(const Monomial& m, const DiagonalAction& a);

struct GeneratorBudget {
    std::int64_t max_enumerated = 20'000'000;
};

// Minimal generating set of the invariant monomial semigroup, truncated at
// the given total degree: invariant monomials not expressible as a product
// of two smaller invariant monomials.
std::vector<Monomial> generators_up_to_degree(const DiagonalAction& a,
                                              std::int64_t max_total_degree,
                                              const GeneratorBudget& budget = {});

struct GeneratorListResult {
    bool ok = true;
    std::optional<Monomial> witness;  // not generated, or not invariant
    std::string reason;
};

// Every claimed monomial must be invariant and every invariant monomial of
// total degree <= max_degree must factor into claimed generators
// (exhaustive bounded factor search).
GeneratorListResult verify_generator_list(const DiagonalAction& a,
                                          const std::vector<Monomial>& claimed,
                                          std::int64_t max_degree,
                                          const GeneratorBudget& budget = {});

struct IdentityFactor {
    std::string name;
    std::int64_t multiplicity = 1;
};

struct IdentityResult {
    bool ok = true;
    Monomial difference;  // lhs - rhs exponent vector when failing
};

// Formal identity in the Laurent monomial group: lhs equals the product of
// named monomials raised to their multiplicities, after substitution.
IdentityResult check_monomial_identity(const Monomial& lhs,
                                       const std::vector<IdentityFactor>& rhs,
                                       const std::map<std::string, Monomial>& substitutions);

struct TwistResult {
    bool ok = true;
    std::string detail;  // offending generator when failing
};

// Applies (m_1,...,m_n) -> (m_1,...,m_{n-1}, twist*m_n) to the generators
// of G_1 (d=3) resp. H_1 (d=4) and checks the images generate exactly G_2
// resp. H_3 as subgroups of (Z/d)^n.
TwistResult twist_conjugation_check(int d, int n, int twist);

}  // namespace kummer::inv
