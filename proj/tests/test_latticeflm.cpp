#include <doctest.h>

#include <vector>

#include "bichar/error.hpp"
#include "bichar/lattice.hpp"
#include "bichar/quadop.hpp"
#include "bichar/twisting.hpp"
#include "helpers.hpp"

using namespace bichar;
using th::lp;
using th::q;

namespace {

using Grid = std::vector<std::vector<Rational>>;

// -log((sqrt(1+x) + sqrt(1+y))/2) at z = 1 via g E(L) = E(g), E the Euler operator.
Grid dense_log_oracle(unsigned order) {
    std::vector<Rational> half(order + 1);
    for (unsigned k = 0; k <= order; ++k) half[k] = binomial(q(1, 2), k);
    Grid g(order + 1, std::vector<Rational>(order + 1));
    for (unsigned k = 0; k <= order; ++k) {
        g[k][0] += half[k] * q(1, 2);
        g[0][k] += half[k] * q(1, 2);
    }
    Grid L(order + 1, std::vector<Rational>(order + 1));
    for (unsigned d = 1; d <= order; ++d)
        for (unsigned m = 0; m <= d; ++m) {
            const unsigned n = d - m;
            Rational acc = g[m][n] * Rational(static_cast<long>(d));
            for (unsigned i = 0; i <= m; ++i)
                for (unsigned j = 0; j <= n; ++j) {
                    if (i + j == 0) continue;
                    acc -= g[i][j] * Rational(static_cast<long>(d - i - j)) * L[m - i][n - j];
                }
            L[m][n] = acc / Rational(static_cast<long>(d));
        }
    for (auto& row : L)
        for (auto& v : row) v = -v;
    return L;
}

const std::vector<std::vector<Rational>> kA2 = {{q(2), q(-1)}, {q(-1), q(2)}};

}  // namespace

TEST_CASE("series coefficients") {
    const SeriesCoefficients c = flm_series(4);
    CHECK(c.at(0, 0).is_zero());
    CHECK(c.at(0, 1) == lp("-1/4*z^-1"));
    CHECK(c.at(1, 0) == lp("-1/4*z^-1"));
    CHECK(c.at(1, 1) == lp("1/16*z^-2"));
    CHECK(c.at(2, 0) == lp("3/32*z^-2"));
    CHECK(c.at(0, 2) == lp("3/32*z^-2"));
}

TEST_CASE("series coefficients against the dense recurrence") {
    const unsigned order = 8;
    const SeriesCoefficients c = flm_series(order);
    const Grid oracle = dense_log_oracle(order);
    for (unsigned m = 0; m <= order; ++m)
        for (unsigned n = 0; m + n <= order; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            CHECK(c.at(m, n) == LaurentPoly::monomial(oracle[m][n], -static_cast<std::int64_t>(m + n)));
        }
}

TEST_CASE("lattice validation") {
    CHECK_THROWS_AS(Lattice({{q(1), q(2)}, {q(3), q(1)}}), Error);
    CHECK_THROWS_AS(Lattice({{q(1), q(1)}, {q(1), q(1)}}), Error);
    CHECK_THROWS_AS(Lattice({{q(1), q(0)}}), Error);
    const Lattice a2(kA2);
    CHECK(a2.determinant() == q(3));
    CHECK(a2.pairing({1, 1}, {1, 0}) == q(1));
}

TEST_CASE("lattice bicharacter values") {
    const Lattice a2(kA2);
    const AlgebraSignature sig = AlgebraSignature::lattice(2, 1);
    const BicharSpec r = lattice_bicharacter(a2, flm_series(2), 1);
    const std::vector<std::vector<std::int64_t>> alphas = {{1, 0}, {0, 1}, {1, 1}, {-1, 2}};
    for (const auto& alpha : alphas)
        for (std::size_t i = 1; i <= 2; ++i) {
            std::vector<std::int64_t> ai(2, 0);
            ai[i - 1] = 1;
            const HopfElement g = HopfElement::grouplike(alpha);
            const HopfElement x = HopfElement::primitive(2, sig.lattice_id(i, 1));
            const Rational p = a2.pairing(alpha, ai);
            CHECK(evaluate(r, g, x) == LaurentPoly::monomial(-p / q(4), -1));
            CHECK(evaluate(r, x, g) == LaurentPoly::monomial(-p / q(4), -1));
            for (const auto& beta : alphas) CHECK(evaluate(r, g, HopfElement::grouplike(beta)) == LaurentPoly(1));
            for (std::size_t j = 1; j <= 2; ++j) {
                const HopfElement y = HopfElement::primitive(2, sig.lattice_id(j, 1));
                CHECK(evaluate(r, x, y) == LaurentPoly::monomial(a2.gram(i - 1, j - 1) / q(16), -2));
            }
        }
}

TEST_CASE("nonzero c00 is rejected") {
    SeriesCoefficients c = flm_series(2);
    c.c[{0, 0}] = LaurentPoly(1);
    try {
        (void)lattice_bicharacter(Lattice(kA2), c, 1);
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::non_constant_grouplike_value);
    }
}

TEST_CASE("deeper lattice table uses c_mn") {
    const Lattice l({{q(3)}});
    const SeriesCoefficients c = flm_series(4);
    const BicharSpec r = lattice_bicharacter(l, c, 2);
    const AlgebraSignature sig = AlgebraSignature::lattice(1, 2);
    CHECK(r.pp(sig.lattice_id(1, 1), sig.lattice_id(1, 2)) == c.at(1, 2) * LaurentPoly(3));
    CHECK(r.gp(0, sig.lattice_id(1, 2)) == c.at(0, 2) * LaurentPoly(3));
    CHECK(r.pg(sig.lattice_id(1, 2), 0) == c.at(2, 0) * LaurentPoly(3));
    CHECK_THROWS_AS(lattice_bicharacter(l, flm_series(3), 2), Error);
}

TEST_CASE("worked example identities") {
    for (const auto& gram : {kA2, std::vector<std::vector<Rational>>{{q(1), q(0)}, {q(0), q(1)}}}) {
        const Lattice lat(gram);
        const AlgebraSignature sig = AlgebraSignature::lattice(2, 1);
        const BicharSpec r = lattice_bicharacter(lat, flm_series(4), 1);
        const QuadraticOperator op{r};
        const std::vector<std::int64_t> alpha = {2, -1};
        const HopfElement g = HopfElement::grouplike(alpha);
        for (std::size_t i = 1; i <= 2; ++i) {
            std::vector<std::int64_t> ai(2, 0);
            ai[i - 1] = 1;
            const Rational p = lat.pairing(alpha, ai);
            const Rational gii = lat.gram(i - 1, i - 1);
            const HopfElement x = HopfElement::primitive(2, sig.lattice_id(i, 1));
            const HopfElement one = HopfElement::one(2);

            const HopfElement e1 = g * x - g * LaurentPoly::monomial(p / q(2), -1);
            const HopfElement e2 = x * x + one * LaurentPoly::monomial(gii / q(8), -2);
            const HopfElement e3 = g * x * x - g * x * LaurentPoly::monomial(p, -1) +
                                   g * LaurentPoly::monomial(p * p / q(4) + gii / q(8), -2);
            CHECK(apply_exp_q(op, g * x) == e1);
            CHECK(apply_exp_q(op, x * x) == e2);
            CHECK(apply_exp_q(op, g * x * x) == e3);
            CHECK(eq_map(r, g * x * x) == e3);
            CHECK(bullet_form(r, g * x * x) == e3);
        }
    }
}

TEST_CASE("run_flm_example report") {
    const FlmReport report = run_flm_example(Lattice(kA2));
    CHECK(report.all_equal());
    CHECK(report.identities.size() >= 5);
    const auto j = report.to_json();
    CHECK(j["all_equal"] == true);
    CHECK(j["identities"][0].contains("lhs"));
    CHECK(j["identities"][0].contains("rhs"));
    CHECK(report.to_text().find("all identities hold") != std::string::npos);
}
