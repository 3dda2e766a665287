#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "kummer/invariants.hpp"

using namespace kummer::inv;

namespace {

// Exponent vectors (x_1..x_{n-1}, x_n, y_1..y_{n-1}, y_n) for the named
// rational monomials used in the rationality arguments.
std::map<std::string, Monomial> substitutions_for(int n) {
    const auto sz = static_cast<std::size_t>(2 * n);
    std::map<std::string, Monomial> subs;
    Monomial z1(sz, 0), z2(sz, 0), yn4(sz, 0), w(sz, 0), tn(sz, 0);
    for (int i = 0; i < n - 1; ++i) {
        z1[static_cast<std::size_t>(i)] = 1;
        z2[static_cast<std::size_t>(n + i)] = 1;
    }
    z1[static_cast<std::size_t>(n - 1)] = -1;
    z2[static_cast<std::size_t>(2 * n - 1)] = -1;
    yn4[static_cast<std::size_t>(2 * n - 1)] = 4;
    w[static_cast<std::size_t>(n - 1)] = 1;
    w[static_cast<std::size_t>(2 * n - 1)] = 2;
    tn[static_cast<std::size_t>(n - 1)] = 2;
    subs["z1"] = z1;
    subs["z2"] = z2;
    subs["yn4"] = yn4;
    subs["w"] = w;  // y_n^2 x_n
    subs["tn"] = tn;
    return subs;
}

// Builds x^a y^b with a,b given as (head repeated on 1..n-1, tail on n).
Monomial xy(int n, std::int64_t a_head, std::int64_t a_tail, std::int64_t b_head,
            std::int64_t b_tail) {
    Monomial m(static_cast<std::size_t>(2 * n), 0);
    for (int i = 0; i < n - 1; ++i) {
        m[static_cast<std::size_t>(i)] = a_head;
        m[static_cast<std::size_t>(n + i)] = b_head;
    }
    m[static_cast<std::size_t>(n - 1)] = a_tail;
    m[static_cast<std::size_t>(2 * n - 1)] = b_tail;
    return m;
}

std::set<Monomial> as_set(const std::vector<Monomial>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("invariance predicate examples") {
    const auto g1 = group_family("g1", 3);
    CHECK(is_invariant({1, 1, 2}, g1));        // x1 x2 x3^2
    CHECK(is_invariant({2, 2, 1}, g1));        // x1^2 x2^2 x3
    CHECK(is_invariant({3, 0, 0}, g1));        // x1^3
    CHECK_FALSE(is_invariant({1, 0, 0}, g1));  // x1
    CHECK_FALSE(is_invariant({1, 1, 1}, g1));

    const auto h1 = group_family("h1", 2);
    CHECK(is_invariant({0, 0, 4, 0}, h1));  // y1^4
    CHECK(is_invariant({1, 1, 0, 0}, h1));  // x1 x2
    CHECK(is_invariant({1, 0, 2, 0}, h1));  // x1 y1^2
    CHECK_FALSE(is_invariant({1, 0, 0, 0}, h1));
    CHECK_FALSE(is_invariant({0, 0, 2, 0}, h1));

    CHECK_THROWS_AS(is_invariant({1, 1}, g1), std::invalid_argument);
}

TEST_CASE("character test matches the divisibility criterion (order 3)") {
    for (int n : {2, 3}) {
        const auto a = group_family("g1", n);
        Monomial m(static_cast<std::size_t>(n), 0);
        const std::int64_t limit = 8;
        // odometer over all exponent vectors with entries <= limit
        while (true) {
            bool divisibility = true;
            for (int k = 0; k + 1 < n; ++k)
                if ((m[static_cast<std::size_t>(k)] + m[static_cast<std::size_t>(n - 1)]) % 3 != 0)
                    divisibility = false;
            CHECK(is_invariant(m, a) == divisibility);
            std::size_t pos = 0;
            while (pos < m.size() && m[pos] == limit) m[pos++] = 0;
            if (pos == m.size()) break;
            ++m[pos];
        }
    }
}

TEST_CASE("character test matches the two-case criterion (order 4)") {
    for (int n : {2, 3}) {
        const auto a = group_family("h1", n);
        Monomial m(static_cast<std::size_t>(2 * n), 0);
        const std::int64_t limit = (n == 2) ? 8 : 6;
        while (true) {
            // per index k, either the even case (a_k+a_n even, 4 | b_k+b_n)
            // or the odd case (a_k+a_n odd, b_k+b_n = 2 mod 4) must hold
            bool criterion = true;
            for (int k = 0; k + 1 < n; ++k) {
                const std::int64_t xa = m[static_cast<std::size_t>(k)] +
                                        m[static_cast<std::size_t>(n - 1)];
                const std::int64_t yb = m[static_cast<std::size_t>(n + k)] +
                                        m[static_cast<std::size_t>(2 * n - 1)];
                const bool even_case = xa % 2 == 0 && yb % 4 == 0;
                const bool odd_case = xa % 2 == 1 && yb % 4 == 2;
                if (!even_case && !odd_case) criterion = false;
            }
            CHECK(is_invariant(m, a) == criterion);
            std::size_t pos = 0;
            while (pos < m.size() && m[pos] == limit) m[pos++] = 0;
            if (pos == m.size()) break;
            ++m[pos];
        }
    }
}

TEST_CASE("minimal generators, order 3") {
    const std::set<Monomial> expected_n2{{3, 0}, {2, 1}, {1, 2}, {0, 3}};
    CHECK(as_set(generators_up_to_degree(group_family("g1", 2), 6)) == expected_n2);

    const std::set<Monomial> expected_n3{
        {3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 2}, {2, 2, 1}};
    CHECK(as_set(generators_up_to_degree(group_family("g1", 3), 9)) == expected_n3);
}

TEST_CASE("minimal generators, order 4") {
    // (x1, x2, y1, y2)
    const std::set<Monomial> expected{
        {2, 0, 0, 0}, {1, 1, 0, 0}, {0, 2, 0, 0},                              // x-part
        {0, 0, 4, 0}, {0, 0, 3, 1}, {0, 0, 2, 2}, {0, 0, 1, 3}, {0, 0, 0, 4},  // y-part
        {1, 0, 2, 0}, {1, 0, 1, 1}, {1, 0, 0, 2},                              // mixed, x1
        {0, 1, 2, 0}, {0, 1, 1, 1}, {0, 1, 0, 2}};                             // mixed, x2
    CHECK(as_set(generators_up_to_degree(group_family("h1", 2), 10)) == expected);
}

TEST_CASE("computed generator lists verify against the full semigroup") {
    for (const auto& [family, n, degree] :
         {std::tuple{std::string("g1"), 3, std::int64_t{9}},
          std::tuple{std::string("h1"), 2, std::int64_t{10}},
          std::tuple{std::string("g2"), 2, std::int64_t{6}},
          std::tuple{std::string("h3"), 2, std::int64_t{8}}}) {
        const auto a = group_family(family, n);
        const auto gens = generators_up_to_degree(a, degree);
        const auto result = verify_generator_list(a, gens, degree);
        INFO("family ", family, " n=", n);
        CHECK(result.ok);
    }
}

TEST_CASE("claimed generator lists, order 3") {
    const auto g1 = group_family("g1", 3);
    const std::vector<Monomial> displayed{{1, 1, 2}, {2, 2, 1}};
    std::vector<Monomial> completed = displayed;
    completed.push_back({3, 0, 0});
    completed.push_back({0, 3, 0});
    completed.push_back({0, 0, 3});
    CHECK(verify_generator_list(g1, completed, 9).ok);

    const auto bare = verify_generator_list(g1, displayed, 9);
    CHECK_FALSE(bare.ok);
    REQUIRE(bare.witness.has_value());
    // a pure cube is invariant but not a product of the displayed monomials
    CHECK(total_degree(*bare.witness) == 3);
    CHECK(std::count(bare.witness->begin(), bare.witness->end(), 3) == 1);
}

TEST_CASE("claimed generator lists, order 4") {
    const auto h1 = group_family("h1", 2);
    const std::vector<Monomial> list1{
        {0, 0, 4, 0}, {0, 0, 0, 4}, {0, 0, 1, 3}, {0, 0, 3, 1},
        {2, 0, 0, 0}, {0, 2, 0, 0}, {1, 1, 0, 0}};
    const std::vector<Monomial> list2{
        {1, 0, 2, 0}, {0, 1, 2, 0}, {1, 0, 1, 1}, {0, 1, 1, 1}, {1, 0, 0, 2},
        {0, 1, 0, 2}, {1, 0, 3, 3}, {0, 1, 3, 3}, {0, 1, 2, 4}, {1, 0, 2, 4}};

    std::vector<Monomial> both = list1;
    both.insert(both.end(), list2.begin(), list2.end());

    // y1^2 y2^2 is invariant but not a product of the two displayed lists.
    const auto bare = verify_generator_list(h1, both, 10);
    CHECK_FALSE(bare.ok);
    REQUIRE(bare.witness.has_value());
    CHECK(*bare.witness == Monomial{0, 0, 2, 2});

    std::vector<Monomial> completed = both;
    completed.push_back({0, 0, 2, 2});
    CHECK(verify_generator_list(h1, completed, 10).ok);

    // the even-x list alone misses every odd-x invariant
    const auto only_even = verify_generator_list(h1, list1, 10);
    CHECK_FALSE(only_even.ok);
    REQUIRE(only_even.witness.has_value());
    const Monomial& w = *only_even.witness;
    CHECK((w[0] + w[1]) % 2 == 1);

    // a non-invariant claimed monomial is rejected outright
    const auto invalid = verify_generator_list(h1, {{1, 0, 0, 0}}, 4);
    CHECK_FALSE(invalid.ok);
    CHECK(invalid.witness == Monomial{1, 0, 0, 0});
}

TEST_CASE("monomial identities") {
    for (int n : {2, 3, 4}) {
        INFO("n = ", n);
        const auto subs = substitutions_for(n);
        // products of named monomials matching each displayed invariant
        using F = std::vector<IdentityFactor>;
        const std::vector<std::pair<Monomial, F>> identities{
            {xy(n, 0, 0, 1, 3), F{{"z2", 1}, {"yn4", 1}}},
            {xy(n, 0, 0, 3, 1), F{{"z2", 3}, {"yn4", 1}}},
            {xy(n, 1, 1, 0, 0), F{{"z1", 1}, {"tn", 1}}},
            {xy(n, 1, 0, 2, 0), F{{"z1", 1}, {"z2", 2}, {"w", 1}}},
            {xy(n, 0, 1, 2, 0), F{{"z2", 2}, {"w", 1}}},
            {xy(n, 1, 0, 1, 1), F{{"z2", 1}, {"w", 1}, {"z1", 1}}},
            {xy(n, 0, 1, 1, 1), F{{"z2", 1}, {"w", 1}}},
            {xy(n, 1, 0, 0, 2), F{{"w", 1}, {"z1", 1}}},
            {xy(n, 0, 1, 3, 3), F{{"z2", 3}, {"yn4", 1}, {"w", 1}}},
            {xy(n, 1, 0, 3, 3), F{{"z2", 3}, {"w", 1}, {"yn4", 1}, {"z1", 1}}},
            {xy(n, 0, 1, 2, 4), F{{"z2", 2}, {"w", 1}, {"yn4", 1}}},
            {xy(n, 1, 0, 2, 4), F{{"z2", 2}, {"w", 1}, {"yn4", 1}, {"z1", 1}}},
        };
        for (const auto& [lhs, rhs] : identities) {
            const auto result = check_monomial_identity(lhs, rhs, subs);
            INFO("lhs ", monomial_to_string(lhs, family_var_names("h1", n)));
            CHECK(result.ok);
            CHECK(result.difference.empty());
        }

        const auto wrong = check_monomial_identity(subs.at("z1"), {{"z2", 1}}, subs);
        CHECK_FALSE(wrong.ok);
        CHECK_FALSE(wrong.difference.empty());
    }
    CHECK_THROWS_AS(
        check_monomial_identity({0, 0, 0, 0}, {{"unknown", 1}}, substitutions_for(2)),
        std::invalid_argument);
}

TEST_CASE("twist conjugation") {
    for (int n : {2, 3, 4, 5}) {
        CHECK(twist_conjugation_check(3, n, 2).ok);   // G1 -> G2
        CHECK(twist_conjugation_check(4, n, 3).ok);   // H1 -> H3
        CHECK(twist_conjugation_check(3, n, 1).ok);   // identity twist
        CHECK(twist_conjugation_check(4, n, 1).ok);
        CHECK(twist_conjugation_check(3, n, -1).ok);  // -1 = 2 mod 3
    }
    CHECK_THROWS_AS(twist_conjugation_check(4, 3, 2), std::invalid_argument);  // not coprime
    CHECK_THROWS_AS(twist_conjugation_check(5, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(twist_conjugation_check(3, 1, 2), std::invalid_argument);
}

TEST_CASE("budget enforcement") {
    GeneratorBudget tiny;
    tiny.max_enumerated = 10;
    CHECK_THROWS_AS(generators_up_to_degree(group_family("h1", 3), 8, tiny),
                    kummer::BudgetExceeded);
}

TEST_CASE("monomial printing") {
    CHECK(monomial_to_string({1, 0, 2}, {"x1", "x2", "x3"}) == "x1*x3^2");
    CHECK(monomial_to_string({0, 0}, {"x1", "x2"}) == "1");
    CHECK(family_var_names("h1", 2) == std::vector<std::string>{"x1", "x2", "y1", "y2"});
    CHECK(family_var_names("g1", 3) == std::vector<std::string>{"x1", "x2", "x3"});
}
