#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "bichar/bicharacter.hpp"
#include "bichar/hopf.hpp"
#include "bichar/series.hpp"

namespace bichar {

/// Seeded generators for property suites. All draws go through one
/// std::mt19937_64 so a seed fixes the whole run.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool coin() { return uniform(0, 1) == 1; }

    /// p/q with |p| <= 5, 1 <= q <= 4; `nonzero` rejects 0.
    Rational rational(bool nonzero = false);
    /// Up to `max_terms` terms with z-exponents in [-3, 1].
    LaurentPoly laurent(std::size_t max_terms = 2);
    /// Either a plain rational or a short Laurent polynomial.
    LaurentPoly coefficient();

    Monomial monomial(std::size_t rank, std::size_t num_primitives, unsigned max_degree);
    /// Up to `max_terms` terms, primitive degree <= max_degree, group entries in [-2, 2].
    HopfElement element(std::size_t rank, std::size_t num_primitives, std::size_t max_terms, unsigned max_degree);

    /// Random table: gg nonzero rationals, gp/pg/pp short Laurent polynomials
    /// (each entry present with probability 2/3).
    BicharSpec bicharacter(std::size_t rank, std::size_t num_primitives);

    /// Series with constant term 1 and random higher terms.
    BivariateSeries unit_series(unsigned order);

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace bichar
