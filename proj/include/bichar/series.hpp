#pragma once

#include <map>
#include <string>
#include <utility>

#include "bichar/laurent.hpp"

namespace bichar {

/// Power series in two variables x, y over Laurent coefficients, truncated
/// at total degree `order`. Terms with m + n > order are never stored.
class BivariateSeries {
public:
    using Key = std::pair<unsigned, unsigned>;  // (power of x, power of y)

    explicit BivariateSeries(unsigned order) : order_(order) {}

    static BivariateSeries constant(unsigned order, const LaurentPoly& c);
    /// c * x^m * y^n (dropped when m + n > order).
    static BivariateSeries term(unsigned order, unsigned m, unsigned n, const LaurentPoly& c);

    unsigned order() const { return order_; }
    const std::map<Key, LaurentPoly>& coefficients() const { return coeffs_; }
    LaurentPoly coefficient(unsigned m, unsigned n) const;
    LaurentPoly constant_term() const { return coefficient(0, 0); }

    void add_term(unsigned m, unsigned n, const LaurentPoly& c);

    BivariateSeries& operator+=(const BivariateSeries& o);
    BivariateSeries& operator-=(const BivariateSeries& o);
    BivariateSeries& operator*=(const LaurentPoly& c);

    friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }
    friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) { return a -= b; }
    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
    friend BivariateSeries operator*(BivariateSeries a, const LaurentPoly& c) { return a *= c; }
    friend BivariateSeries operator-(const BivariateSeries& a);

    friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

    std::string to_string() const;

private:
    unsigned order_;
    std::map<Key, LaurentPoly> coeffs_;
};

/// Square root with unit constant term, via the binomial series of (1+u)^{1/2}.
/// Throws NonUnitConstantTerm unless the constant term is exactly 1.
BivariateSeries series_sqrt(const BivariateSeries& s);

/// log(1+u) = u - u^2/2 + ... truncated at the series order.
/// Throws NonUnitConstantTerm unless the constant term is exactly 1.
BivariateSeries series_log(const BivariateSeries& s);

/// exp(u) for u with zero constant term; inverse of series_log.
BivariateSeries series_exp(const BivariateSeries& u);

}  // namespace bichar
