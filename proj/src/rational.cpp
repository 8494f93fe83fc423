#include "bichar/rational.hpp"

#include <cctype>

#include "bichar/error.hpp"

namespace bichar {

Rational::Rational(long num, long den) {
    if (den == 0) throw Error(ErrorKind::invalid_argument, "zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    std::string digits;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        if (text[pos] == '-') digits.push_back('-');
        ++pos;
    }
    const std::size_t num_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) digits.push_back(text[pos++]);
    if (pos == num_start) throw ParseError(pos, {"integer"}, "expected digits in rational");
    mpz_class num(digits);
    mpz_class den(1);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        const std::size_t den_start = pos;
        std::string den_digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) den_digits.push_back(text[pos++]);
        if (pos == den_start) throw ParseError(pos, {"integer"}, "expected denominator");
        den = mpz_class(den_digits);
        if (den == 0) throw ParseError(den_start, {}, "zero denominator");
    }
    if (pos != text.size()) throw ParseError(pos, {"end of input"}, "trailing characters in rational");
    mpq_class q(num, den);
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::invalid_argument, "division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw Error(ErrorKind::invalid_argument, "reciprocal of zero");
    return Rational(mpq_class(1) / value_);
}

Rational Rational::pow(std::int64_t exponent) const {
    if (exponent < 0) return reciprocal().pow(-exponent);
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(mpq_class(num, den));
}

std::optional<Rational> Rational::exact_sqrt() const {
    if (sign() < 0) return std::nullopt;
    const mpz_class num = value_.get_num();
    const mpz_class den = value_.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn;
    mpz_class rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(mpq_class(rn, rd));
}

std::string Rational::to_string() const { return value_.get_str(); }

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Rational binomial(const Rational& top, unsigned long k) {
    Rational out(1);
    for (unsigned long i = 0; i < k; ++i) {
        out *= top - Rational(static_cast<long>(i));
        out /= Rational(static_cast<long>(i + 1));
    }
    return out;
}

}  // namespace bichar
