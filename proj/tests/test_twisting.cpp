#include <doctest.h>

#include "bichar/error.hpp"
#include "bichar/twisting.hpp"
#include "helpers.hpp"

using namespace bichar;
using th::el;
using th::lp;
using th::q;

namespace {

// q_mn = distinct values so that every pairing is visible in the output
BicharSpec three_primitives() {
    BicharSpec r(0);
    const char* values[3][3] = {{"z^-2", "2*z^-1", "3"}, {"5", "7*z", "11/2"}, {"-13", "z^-3", "1/17"}};
    for (PrimitiveId m = 0; m < 3; ++m)
        for (PrimitiveId n = 0; n < 3; ++n) r.set_pp(m, n, lp(values[m][n]));
    return r;
}

HopfElement c(const LaurentPoly& v) { return HopfElement::constant(0, v); }

}  // namespace

TEST_CASE("twisted product") {
    const BicharSpec r = three_primitives();
    const SymmetricBicharSpec s = symmetrize(r);
    const HopfElement x1 = el("x1"), x2 = el("x2"), x3 = el("x3");
    const auto qq = [&](PrimitiveId m, PrimitiveId n) { return r.pp(m, n) + r.pp(n, m); };

    CHECK(twisted_product(r, HopfElement::one(0), el("x1^2 + x3")) == el("x1^2 + x3"));
    CHECK(twisted_product(s, x1, x2) == x1 * x2 + c(qq(0, 1)));
    CHECK(twisted_product(r, x1, x2) == x1 * x2 + c(r.pp(0, 1)));
    CHECK(twisted_product(s, x1 * x2, x3) == x1 * x2 * x3 + x2 * qq(0, 2) + x1 * qq(1, 2));
}

TEST_CASE("bullet products") {
    const BicharSpec r = three_primitives();
    const SymmetricBicharSpec s = symmetrize(r);
    const HopfElement x1 = el("x1"), x2 = el("x2"), x3 = el("x3");
    const auto qq = [&](PrimitiveId m, PrimitiveId n) { return r.pp(m, n) + r.pp(n, m); };

    CHECK(bullet_product(s, x1, x2) == x1 * x2 + c(evaluate(s, x1, x2)));
    CHECK(bullet_product(s, el("x1^2 + x3"), HopfElement::one(0)) == el("x1^2 + x3"));
    CHECK(bullet_word({{x1, x2, x3}, s}) ==
          x1 * x2 * x3 + x3 * qq(0, 1) + x2 * qq(0, 2) + x1 * qq(1, 2));
    CHECK(bullet_word({{el("x2^2 - x1")}, s}) == el("x2^2 - x1"));
    CHECK_THROWS_AS(bullet_word({{}, s}), Error);
}

TEST_CASE("bullet product of grouplikes") {
    BicharSpec r(2);
    r.set_gg(0, 1, q(3));
    r.set_gg(1, 0, q(1, 2));
    r.set_gg(0, 0, q(5));
    const SymmetricBicharSpec s = symmetrize(r);
    const HopfElement gi = el("e^(a1)", 2);
    const HopfElement gj = el("e^(a2)", 2);
    CHECK(bullet_product(s, gi, gj) == gi * gj * LaurentPoly(q(3, 2)));
    CHECK(bullet_word({{gi, gj}, s}) == gi * gj * LaurentPoly(s.spec().gg(0, 1)));
    CHECK(bullet_product(s, gi, gi) == el("25*e^(2*a1)", 2));
}

TEST_CASE("EQ map") {
    const BicharSpec r = three_primitives();
    CHECK(eq_map(r, el("x2")) == el("x2"));
    CHECK(eq_map(r, el("x1*x3")) == el("x1*x3") + c(r.pp(0, 2) + r.pp(2, 0)));
    CHECK(eq_map(r, el("x2^2")) == el("x2^2") + c(LaurentPoly(2) * r.pp(1, 1)));

    BicharSpec g(2);
    g.set_gg(0, 0, q(7, 3));
    g.set_gg(1, 1, q(2));
    g.set_gg(0, 1, q(5));
    CHECK(eq_map(g, el("e^(a1)", 2)) == el("7/3*e^(a1)", 2));
    CHECK(eq_map(g, el("e^(a1 + a2)", 2)) == el("e^(a1 + a2)", 2) * LaurentPoly(q(7, 3) * q(5) * q(2)));
}

TEST_CASE("bullet form matches EQ on a mixed element") {
    BicharSpec r(1);
    r.set_gg(0, 0, q(2));
    r.set_gp(0, 0, lp("z^-1"));
    r.set_pg(0, 0, lp("3"));
    r.set_pp(0, 0, lp("1/4"));
    const HopfElement a = el("e^(2*a1)*x1^2 + x1 - 4", 1);
    CHECK(bullet_form(r, a) == eq_map(r, a));
}
