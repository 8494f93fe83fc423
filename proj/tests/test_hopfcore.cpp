#include <doctest.h>

#include "bichar/error.hpp"
#include "helpers.hpp"

using namespace bichar;
using th::el;

namespace {

Monomial x(std::size_t rank, PrimitiveId id, std::uint32_t pow = 1) { return Monomial::primitive(rank, id, pow); }

}  // namespace

TEST_CASE("products") {
    CHECK(el("e^(a1)", 1) * el("e^(-a1)", 1) == HopfElement::one(1));
    CHECK(el("x1") * el("x1") == el("x1^2"));
    CHECK(el("e^(a1)*x2", 2) * el("2*e^(a2)", 2) == el("2*e^(a1 + a2)*x2", 2));
    CHECK_THROWS_AS(el("x1", 1) * el("x1", 2), Error);
}

TEST_CASE("coproduct") {
    Tensor2 expected;
    expected.add_term({x(0, 0, 2), Monomial::unit(0)}, LaurentPoly(1));
    expected.add_term({x(0, 0), x(0, 0)}, LaurentPoly(2));
    expected.add_term({Monomial::unit(0), x(0, 0, 2)}, LaurentPoly(1));
    CHECK(coproduct(el("x1^2")) == expected);

    Tensor2 unit;
    unit.add_term({Monomial::unit(1), Monomial::unit(1)}, LaurentPoly(1));
    CHECK(coproduct(HopfElement::one(1)) == unit);

    const Monomial g = Monomial::grouplike({1});
    Tensor2 gx;
    gx.add_term({g * x(1, 2), g}, LaurentPoly(1));
    gx.add_term({g, g * x(1, 2)}, LaurentPoly(1));
    CHECK(coproduct(el("e^(a1)*x3", 1)) == gx);
    CHECK(operator_coproduct(el("e^(a1)*x3", 1)) == gx);
}

TEST_CASE("double coproduct") {
    const Monomial one = Monomial::unit(0);
    Tensor3 prim;
    prim.add_term({x(0, 0), one, one}, LaurentPoly(1));
    prim.add_term({one, x(0, 0), one}, LaurentPoly(1));
    prim.add_term({one, one, x(0, 0)}, LaurentPoly(1));
    CHECK(coproduct2(el("x1")) == prim);

    const Monomial g = Monomial::grouplike({1});
    Tensor3 grp;
    grp.add_term({g, g, g}, LaurentPoly(1));
    CHECK(coproduct2(el("e^(a1)", 1)) == grp);

    // (x' + x'' + x''')^2
    Tensor3 sq;
    const Monomial x1 = x(0, 0);
    const Monomial x2 = x(0, 0, 2);
    sq.add_term({x2, one, one}, LaurentPoly(1));
    sq.add_term({one, x2, one}, LaurentPoly(1));
    sq.add_term({one, one, x2}, LaurentPoly(1));
    sq.add_term({x1, x1, one}, LaurentPoly(2));
    sq.add_term({x1, one, x1}, LaurentPoly(2));
    sq.add_term({one, x1, x1}, LaurentPoly(2));
    CHECK(coproduct2(el("x1^2")) == sq);
    CHECK(coproduct_left(coproduct(el("x1^2"))) == sq);
}

TEST_CASE("counit and antipode") {
    CHECK(counit(el("x1")).is_zero());
    CHECK(counit(el("e^(a1)", 1)) == LaurentPoly(1));
    CHECK(counit(el("3 + 2*x1")) == LaurentPoly(3));
    CHECK(antipode(el("x1")) == el("-x1"));
    CHECK(antipode(el("e^(a1)", 1)) == el("e^(-a1)", 1));
    CHECK(antipode(el("e^(a1)*x1*x2", 1)) == el("e^(-a1)*x1*x2", 1));
    CHECK(antipode(el("e^(2*a1)*x1^3", 1)) == el("-e^(-2*a1)*x1^3", 1));
}

TEST_CASE("operator coproduct on grouplikes") {
    Tensor2 one;
    one.add_term({Monomial::unit(1), Monomial::unit(1)}, LaurentPoly(1));
    CHECK(operator_coproduct(HopfElement::one(1)) == one);
    const Monomial g2 = Monomial::grouplike({2});
    Tensor2 g;
    g.add_term({g2, g2}, LaurentPoly(1));
    CHECK(operator_coproduct(el("e^(2*a1)", 1)) == g);
}

TEST_CASE("signatures name primitives") {
    CHECK(AlgebraSignature::plain(0).primitive_name(2) == "x3");
    const AlgebraSignature lat = AlgebraSignature::lattice(2, 3);
    CHECK(lat.lattice_id(2, 1) == 3);
    CHECK(lat.primitive_name(lat.lattice_id(2, 3)) == "x(2,3)");
    CHECK(lat.lattice_index(4) == std::pair<std::size_t, unsigned>{2, 2});
    CHECK_THROWS_AS(lat.lattice_id(3, 1), Error);
    CHECK(AlgebraSignature::twisted_fock().primitive_name(1) == "y(3/2)");
}

TEST_CASE("degree and canonical order") {
    CHECK(el("x1^2*x3 + x2").degree() == 3);
    CHECK(el("x2 + x1") == el("x1 + x2"));
    CHECK(el("x1 - x1").is_zero());
}
