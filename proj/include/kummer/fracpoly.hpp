#pragma once

// Sparse exact bivariate polynomials in X, Y whose exponents are
// nonnegative rationals with denominator dividing 12.  This is the carrier
// for Hodge-number generating polynomials, where fractional powers such as
// (XY)^{1/6} or (XY)^{1/2} appear as intermediate terms.

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "kummer/bigint.hpp"

namespace kummer {

// A rational exponent stored as numerator over the fixed denominator 12.
// 12 = lcm(2,3,4,6), so every exponent arising from the four curve
// automorphism orders embeds exactly; equality is numerator equality.
struct FracExp {
    std::int64_t num = 0;  // exponent value = num / 12

    static constexpr std::int64_t kDenominator = 12;

    static FracExp from_integer(std::int64_t n) { return FracExp{12 * n}; }

    // num/den with den | 12; throws std::invalid_argument otherwise.
    static FracExp from_rational(std::int64_t num, std::int64_t den);

    bool is_integer() const { return num % 12 == 0; }
    std::int64_t integer_value() const;  // throws if not an integer

    auto operator<=>(const FracExp&) const = default;
    FracExp operator+(FracExp o) const { return FracExp{num + o.num}; }
};

class FracPoly {
public:
    using Key = std::pair<std::int64_t, std::int64_t>;  // (X num, Y num)
    using TermMap = std::map<Key, BigInt>;              // no zero coefficients

    FracPoly() = default;

    static FracPoly zero() { return FracPoly{}; }
    static FracPoly constant(BigInt c);
    static FracPoly monomial(FracExp xe, FracExp ye, BigInt coeff);
    static FracPoly x() { return monomial(FracExp::from_integer(1), {}, 1); }
    static FracPoly y() { return monomial({}, FracExp::from_integer(1), 1); }
    // c * (XY)^{num/den}
    static FracPoly xy_power(std::int64_t num, std::int64_t den, BigInt coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    FracPoly operator+(const FracPoly& other) const;
    FracPoly operator-(const FracPoly& other) const;
    FracPoly operator*(const FracPoly& other) const;
    FracPoly pow(std::uint32_t n) const;
    FracPoly& operator+=(const FracPoly& other);

    bool operator==(const FracPoly& other) const { return terms_ == other.terms_; }

    // Coefficient at the integer exponent pair (p, q); 0 if absent.
    BigInt coefficient(std::int64_t p, std::int64_t q) const;

    // Coefficient at an arbitrary exponent pair.
    BigInt coefficient_at(FracExp xe, FracExp ye) const;

    // True iff every stored exponent pair is integral.
    bool has_only_integer_exponents() const;

    // Sum_{p,q integer} (-1)^{p+q} coefficient(p,q).  Throws
    // std::domain_error if a term with a non-integer exponent remains,
    // since such a polynomial is not a completed Hodge generating function.
    BigInt integer_part_euler() const;

    // Keeps only terms whose exponents are both integral.
    FracPoly integer_part() const;

    void add_term(FracExp xe, FracExp ye, const BigInt& coeff);

    // JSON array of {xnum, ynum, coeff} records with the coefficient as a
    // decimal string, sorted by (xnum, ynum).
    std::string to_json() const;

    std::string to_string() const;  // human-readable, for diagnostics

private:
    TermMap terms_;
};

}  // namespace kummer
