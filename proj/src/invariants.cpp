#include "kummer/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kummer::inv {

std::int64_t total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), std::int64_t{0});
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& var_names) {
    std::ostringstream out;
    bool any = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (any) out << "*";
        any = true;
        out << var_names[i];
        if (m[i] != 1) out << "^" << m[i];
    }
    return any ? out.str() : "1";
}

DiagonalAction::DiagonalAction(int d_, int vars_, std::vector<std::vector<int>> generators_)
    : d(d_), vars(vars_), generators(std::move(generators_)) {
    if (d < 1) throw std::invalid_argument("modulus must be >= 1");
    if (generators.empty()) throw std::invalid_argument("generator list must be nonempty");
    for (const auto& g : generators)
        if (static_cast<int>(g.size()) != vars)
            throw std::invalid_argument("character vector length does not match vars");
}

DiagonalAction group_family(const std::string& name, int n) {
    if (n < 2) throw std::invalid_argument("group families need n >= 2");
    std::vector<std::vector<int>> gens;
    if (name == "g1" || name == "g2") {
        const int i = (name == "g1") ? 1 : 2;
        for (int k = 0; k < n - 1; ++k) {
            std::vector<int> g(static_cast<std::size_t>(n), 0);
            g[static_cast<std::size_t>(k)] = 1;
            g[static_cast<std::size_t>(n - 1)] = i;
            gens.push_back(std::move(g));
        }
        return DiagonalAction(3, n, std::move(gens));
    }
    if (name == "h1" || name == "h3") {
        const int i = (name == "h1") ? 1 : 3;
        // Variables (x_1..x_n, y_1..y_n); tau_4 weights x:2, y:1.
        for (int k = 0; k < n - 1; ++k) {
            std::vector<int> g(static_cast<std::size_t>(2 * n), 0);
            g[static_cast<std::size_t>(k)] = 2;
            g[static_cast<std::size_t>(n + k)] = 1;
            g[static_cast<std::size_t>(n - 1)] = (2 * i) % 4;
            g[static_cast<std::size_t>(2 * n - 1)] = i % 4;
            gens.push_back(std::move(g));
        }
        return DiagonalAction(4, 2 * n, std::move(gens));
    }
    throw std::invalid_argument("unknown group family: " + name);
}

std::vector<std::string> family_var_names(const std::string& name, int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    if (name == "h1" || name == "h3")
        for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    return names;
}

bool is_invariant(const Monomial& m, const DiagonalAction& a) {
    if (static_cast<int>(m.size()) != a.vars)
        throw std::invalid_argument("monomial length does not match action");
    for (const auto& g : a.generators) {
        std::int64_t dot = 0;
        for (std::size_t i = 0; i < m.size(); ++i) dot += m[i] * g[i];
        if (((dot % a.d) + a.d) % a.d != 0) return false;
    }
    return true;
}

namespace {

// Calls fn for every nonnegative exponent vector of the given total degree.
template <typename Fn>
void for_each_monomial_of_degree(int vars, std::int64_t degree, Monomial& current, int pos,
                                 std::int64_t& counter, std::int64_t cap, Fn&& fn) {
    if (counter > cap) throw BudgetExceeded("monomial enumeration budget exceeded");
    if (pos == vars - 1) {
        current[static_cast<std::size_t>(pos)] = degree;
        ++counter;
        fn(current);
        return;
    }
    for (std::int64_t e = 0; e <= degree; ++e) {
        current[static_cast<std::size_t>(pos)] = e;
        for_each_monomial_of_degree(vars, degree - e, current, pos + 1, counter, cap, fn);
    }
}

}  // namespace

std::vector<Monomial> generators_up_to_degree(const DiagonalAction& a,
                                              std::int64_t max_total_degree,
                                              const GeneratorBudget& budget) {
    if (max_total_degree < 1) throw std::invalid_argument("max_total_degree must be >= 1");
    std::vector<Monomial> generators;
    std::vector<Monomial> invariants;  // all invariants found so far, by degree
    std::set<Monomial> invariant_set;
    std::int64_t counter = 0;
    Monomial current(static_cast<std::size_t>(a.vars), 0);
    for (std::int64_t degree = 1; degree <= max_total_degree; ++degree) {
        for_each_monomial_of_degree(a.vars, degree, current, 0, counter, budget.max_enumerated,
                                    [&](const Monomial& m) {
            if (!is_invariant(m, a)) return;
            bool decomposable = false;
            for (const Monomial& f : invariants) {
                if (total_degree(f) >= degree) break;
                Monomial rest(m.size());
                bool nonneg = true;
                for (std::size_t i = 0; i < m.size(); ++i) {
                    rest[i] = m[i] - f[i];
                    if (rest[i] < 0) {
                        nonneg = false;
                        break;
                    }
                }
                if (nonneg && invariant_set.count(rest)) {
                    decomposable = true;
                    break;
                }
            }
            if (!decomposable) generators.push_back(m);
            invariants.push_back(m);
            invariant_set.insert(m);
        });
    }
    return generators;
}

namespace {

bool generated_by(const Monomial& m, const std::vector<Monomial>& gens,
                  std::map<Monomial, bool>& memo) {
    if (std::all_of(m.begin(), m.end(), [](std::int64_t e) { return e == 0; })) return true;
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const Monomial& g : gens) {
        Monomial rest(m.size());
        bool nonneg = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            rest[i] = m[i] - g[i];
            if (rest[i] < 0) {
                nonneg = false;
                break;
            }
        }
        if (nonneg && generated_by(rest, gens, memo)) {
            ok = true;
            break;
        }
    }
    memo.emplace(m, ok);
    return ok;
}

}  // namespace

GeneratorListResult verify_generator_list(const DiagonalAction& a,
                                          const std::vector<Monomial>& claimed,
                                          std::int64_t max_degree,
                                          const GeneratorBudget& budget) {
    for (const Monomial& m : claimed) {
        if (static_cast<int>(m.size()) != a.vars)
            throw std::invalid_argument("claimed monomial length does not match action");
        if (std::any_of(m.begin(), m.end(), [](std::int64_t e) { return e < 0; }))
            throw std::invalid_argument("claimed generators must have nonnegative exponents");
        if (!is_invariant(m, a)) return {false, m, "claimed monomial is not invariant"};
    }
    std::map<Monomial, bool> memo;
    std::int64_t counter = 0;
    Monomial current(static_cast<std::size_t>(a.vars), 0);
    GeneratorListResult result;
    for (std::int64_t degree = 1; degree <= max_degree && result.ok; ++degree) {
        for_each_monomial_of_degree(a.vars, degree, current, 0, counter, budget.max_enumerated,
                                    [&](const Monomial& m) {
            if (!result.ok || !is_invariant(m, a)) return;
            if (!generated_by(m, claimed, memo)) {
                result.ok = false;
                result.witness = m;
                result.reason = "invariant monomial is not a product of claimed generators";
            }
        });
    }
    return result;
}

IdentityResult check_monomial_identity(const Monomial& lhs, const std::vector<IdentityFactor>& rhs,
                                       const std::map<std::string, Monomial>& substitutions) {
    Monomial total(lhs.size(), 0);
    for (const auto& factor : rhs) {
        auto it = substitutions.find(factor.name);
        if (it == substitutions.end())
            throw std::invalid_argument("unresolved factor name: " + factor.name);
        const Monomial& sub = it->second;
        if (sub.size() != lhs.size())
            throw std::invalid_argument("substitution length mismatch for " + factor.name);
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += factor.multiplicity * sub[i];
    }
    IdentityResult result;
    result.difference.resize(lhs.size());
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        result.difference[i] = lhs[i] - total[i];
        if (result.difference[i] != 0) result.ok = false;
    }
    if (result.ok) result.difference.clear();
    return result;
}

namespace {

// Subgroup of (Z/d)^n generated by the given vectors, as a sorted set.
std::set<std::vector<int>> subgroup_span(const std::vector<std::vector<int>>& gens, int d) {
    if (gens.empty()) return {};
    std::set<std::vector<int>> span;
    std::vector<std::vector<int>> frontier{std::vector<int>(gens.front().size(), 0)};
    span.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<int> v = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& g : gens) {
            std::vector<int> next(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) next[i] = (v[i] + g[i]) % d;
            if (span.insert(next).second) frontier.push_back(std::move(next));
        }
    }
    return span;
}

std::vector<std::vector<int>> zariski_group_generators(int d, int n, int i) {
    std::vector<std::vector<int>> gens;
    for (int k = 0; k < n - 1; ++k) {
        std::vector<int> g(static_cast<std::size_t>(n), 0);
        g[static_cast<std::size_t>(k)] = 1;
        g[static_cast<std::size_t>(n - 1)] = i % d;
        gens.push_back(std::move(g));
    }
    return gens;
}

}  // namespace

TwistResult twist_conjugation_check(int d, int n, int twist) {
    if (d != 3 && d != 4)
        throw std::invalid_argument("twist check is defined for d = 3 (G_1/G_2) or d = 4 (H_1/H_3)");
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (std::gcd(((twist % d) + d) % d, d) != 1)
        throw std::invalid_argument("twist must be coprime to d");
    const int source_i = 1;
    const int target_i = ((twist % d) + d) % d;  // G_1 -> G_twist, H_1 -> H_twist
    const auto source = zariski_group_generators(d, n, source_i);
    const auto target = zariski_group_generators(d, n, target_i);

    std::vector<std::vector<int>> images;
    for (const auto& g : source) {
        std::vector<int> img = g;
        img.back() = ((img.back() * twist) % d + d) % d;
        images.push_back(std::move(img));
    }
    const auto target_span = subgroup_span(target, d);
    for (std::size_t k = 0; k < images.size(); ++k)
        if (!target_span.count(images[k])) {
            std::ostringstream out;
            out << "image of generator " << k + 1 << " lies outside the target group";
            return {false, out.str()};
        }
    if (subgroup_span(images, d) != target_span)
        return {false, "images generate a proper subgroup of the target"};
    return {true, {}};
}

}  // namespace kummer::inv
