#include "kummer/fracpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace kummer {

FracExp FracExp::from_rational(std::int64_t num, std::int64_t den) {
    if (den <= 0 || kDenominator % den != 0)
        throw std::invalid_argument("FracExp denominator must divide 12, got " +
                                    std::to_string(den));
    return FracExp{num * (kDenominator / den)};
}

std::int64_t FracExp::integer_value() const {
    if (!is_integer())
        throw std::domain_error("FracExp " + std::to_string(num) + "/12 is not an integer");
    return num / kDenominator;
}

FracPoly FracPoly::constant(BigInt c) {
    FracPoly p;
    if (c != 0) p.terms_[{0, 0}] = std::move(c);
    return p;
}

FracPoly FracPoly::monomial(FracExp xe, FracExp ye, BigInt coeff) {
    FracPoly p;
    if (coeff != 0) p.terms_[{xe.num, ye.num}] = std::move(coeff);
    return p;
}

FracPoly FracPoly::xy_power(std::int64_t num, std::int64_t den, BigInt coeff) {
    const FracExp e = FracExp::from_rational(num, den);
    return monomial(e, e, std::move(coeff));
}

void FracPoly::add_term(FracExp xe, FracExp ye, const BigInt& coeff) {
    if (coeff == 0) return;
    const Key key{xe.num, ye.num};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

FracPoly& FracPoly::operator+=(const FracPoly& other) {
    for (const auto& [key, coeff] : other.terms_) {
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

FracPoly FracPoly::operator+(const FracPoly& other) const {
    FracPoly result = *this;
    result += other;
    return result;
}

FracPoly FracPoly::operator-(const FracPoly& other) const {
    FracPoly result = *this;
    for (const auto& [key, coeff] : other.terms_) {
        auto it = result.terms_.find(key);
        if (it == result.terms_.end()) {
            result.terms_.emplace(key, -coeff);
        } else {
            it->second -= coeff;
            if (it->second == 0) result.terms_.erase(it);
        }
    }
    return result;
}

FracPoly FracPoly::operator*(const FracPoly& other) const {
    FracPoly result;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : other.terms_) {
            const Key key{ka.first + kb.first, ka.second + kb.second};
            auto it = result.terms_.find(key);
            if (it == result.terms_.end()) {
                result.terms_.emplace(key, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) result.terms_.erase(it);
            }
        }
    }
    return result;
}

FracPoly FracPoly::pow(std::uint32_t n) const {
    FracPoly result = constant(1);
    FracPoly base = *this;
    while (n > 0) {
        if (n & 1u) result = result * base;
        base = base * base;
        n >>= 1u;
    }
    return result;
}

BigInt FracPoly::coefficient(std::int64_t p, std::int64_t q) const {
    return coefficient_at(FracExp::from_integer(p), FracExp::from_integer(q));
}

BigInt FracPoly::coefficient_at(FracExp xe, FracExp ye) const {
    auto it = terms_.find({xe.num, ye.num});
    return it == terms_.end() ? BigInt(0) : it->second;
}

bool FracPoly::has_only_integer_exponents() const {
    for (const auto& [key, coeff] : terms_) {
        (void)coeff;
        if (key.first % 12 != 0 || key.second % 12 != 0) return false;
    }
    return true;
}

BigInt FracPoly::integer_part_euler() const {
    BigInt sum = 0;
    for (const auto& [key, coeff] : terms_) {
        if (key.first % 12 != 0 || key.second % 12 != 0)
            throw std::domain_error(
                "integer_part_euler: non-integer exponent X^{" + std::to_string(key.first) +
                "/12} Y^{" + std::to_string(key.second) + "/12} present");
        const std::int64_t p = key.first / 12, q = key.second / 12;
        sum += ((p + q) % 2 == 0) ? coeff : -coeff;
    }
    return sum;
}

FracPoly FracPoly::integer_part() const {
    FracPoly result;
    for (const auto& [key, coeff] : terms_)
        if (key.first % 12 == 0 && key.second % 12 == 0) result.terms_.emplace(key, coeff);
    return result;
}

std::string FracPoly::to_json() const {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
        if (!first) out << ",";
        first = false;
        out << "{\"xnum\":" << key.first << ",\"ynum\":" << key.second << ",\"coeff\":\""
            << coeff.str() << "\"}";
    }
    out << "]";
    return out.str();
}

namespace {

void print_exponent(std::ostream& out, const char* var, std::int64_t num) {
    if (num == 0) return;
    out << var;
    if (num == 12) return;
    if (num % 12 == 0)
        out << "^" << num / 12;
    else
        out << "^(" << num << "/12)";
}

}  // namespace

std::string FracPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
        if (!first) out << " + ";
        first = false;
        if (coeff != 1 || (key.first == 0 && key.second == 0)) out << coeff.str();
        print_exponent(out, "X", key.first);
        print_exponent(out, "Y", key.second);
    }
    return out.str();
}

}  // namespace kummer
