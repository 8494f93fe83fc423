#include "bichar/random.hpp"

namespace bichar {

std::int64_t RandomSource::uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

Rational RandomSource::rational(bool nonzero) {
    std::int64_t num = 0;
    do {
        num = uniform(-5, 5);
    } while (nonzero && num == 0);
    return Rational(static_cast<long>(num), static_cast<long>(uniform(1, 4)));
}

LaurentPoly RandomSource::laurent(std::size_t max_terms) {
    LaurentPoly out;
    const auto terms = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_terms)));
    for (std::size_t i = 0; i < terms; ++i) out.add_term(uniform(-3, 1), rational());
    return out;
}

LaurentPoly RandomSource::coefficient() {
    if (coin()) return LaurentPoly(rational(true));
    return laurent(2);
}

Monomial RandomSource::monomial(std::size_t rank, std::size_t num_primitives, unsigned max_degree) {
    std::vector<std::int64_t> group(rank);
    for (auto& g : group) g = uniform(-2, 2);
    Monomial::PrimitivePowers prims;
    if (num_primitives > 0) {
        const auto degree = uniform(0, max_degree);
        for (std::int64_t d = 0; d < degree; ++d)
            prims.emplace_back(static_cast<PrimitiveId>(uniform(0, static_cast<std::int64_t>(num_primitives) - 1)), 1);
    }
    return Monomial(std::move(group), std::move(prims));
}

HopfElement RandomSource::element(std::size_t rank, std::size_t num_primitives, std::size_t max_terms, unsigned max_degree) {
    HopfElement out(rank);
    const auto terms = uniform(1, static_cast<std::int64_t>(max_terms));
    for (std::int64_t i = 0; i < terms; ++i) out.add_term(monomial(rank, num_primitives, max_degree), coefficient());
    return out;
}

BicharSpec RandomSource::bicharacter(std::size_t rank, std::size_t num_primitives) {
    BicharSpec r(rank);
    auto present = [&] { return uniform(0, 2) > 0; };
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) r.set_gg(i, j, rational(true));
    for (std::size_t i = 0; i < rank; ++i)
        for (PrimitiveId m = 0; m < num_primitives; ++m) {
            if (present()) r.set_gp(i, m, laurent(2));
            if (present()) r.set_pg(m, i, laurent(2));
        }
    for (PrimitiveId m = 0; m < num_primitives; ++m)
        for (PrimitiveId n = 0; n < num_primitives; ++n)
            if (present()) r.set_pp(m, n, laurent(2));
    return r;
}

BivariateSeries RandomSource::unit_series(unsigned order) {
    BivariateSeries s = BivariateSeries::constant(order, LaurentPoly(1));
    for (unsigned m = 0; m <= order; ++m)
        for (unsigned n = 0; m + n <= order; ++n)
            if ((m + n) > 0 && coin()) s.add_term(m, n, laurent(2));
    return s;
}

}  // namespace bichar
