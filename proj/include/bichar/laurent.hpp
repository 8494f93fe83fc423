#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <ostream>
#include <string>

#include <json.hpp>

#include "bichar/rational.hpp"

namespace bichar {

/// Sparse Laurent polynomial in one formal variable z over the rationals.
/// This is the coefficient algebra A; plain rationals are the z^0 terms.
/// No zero coefficient is ever stored.
class LaurentPoly {
public:
    using Terms = std::map<std::int64_t, Rational>;

    LaurentPoly() = default;
    LaurentPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
    LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
    LaurentPoly(int constant) : LaurentPoly(Rational(constant)) {}   // NOLINT(google-explicit-constructor)

    /// c * z^exponent
    static LaurentPoly monomial(const Rational& c, std::int64_t exponent);

    const Terms& terms() const& { return terms_; }
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of z^0.
    Rational constant_term() const;
    Rational coefficient(std::int64_t exponent) const;
    std::int64_t min_exponent() const;
    std::int64_t max_exponent() const;

    /// Invertible iff a single term c*z^k with c != 0.
    bool is_unit() const;
    LaurentPoly inverse() const;
    /// Nonnegative power by repeated squaring; negative powers require is_unit().
    LaurentPoly pow(std::int64_t exponent) const;

    void add_term(std::int64_t exponent, const Rational& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
    friend LaurentPoly operator-(const LaurentPoly& a);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// "-1/4*z^-1 + 3/32*z^-2": terms by decreasing exponent, so the
    /// constant comes first and poles follow in increasing order.
    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

private:
    Terms terms_;
};

/// [[exponent, num, den], ...] with exponents in decreasing order.
nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const Rational& r);
LaurentPoly laurent_from_json(const nlohmann::json& j);

}  // namespace bichar
