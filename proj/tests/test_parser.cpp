#include <doctest.h>

#include "bichar/error.hpp"
#include "bichar/random.hpp"
#include "helpers.hpp"

using namespace bichar;
using th::el;
using th::lp;

TEST_CASE("parse elements") {
    HopfElement expected(0);
    expected.add_term(Monomial(std::vector<std::int64_t>{}, {{0, 1}, {1, 1}}), LaurentPoly(1));
    expected.add_term(Monomial::unit(0), LaurentPoly(3));
    CHECK(el("x1*x2 + 3") == expected);

    const HopfElement b = el("e^(2*a1)*x1^2", 2);
    REQUIRE(b.size() == 1);
    const Monomial& m = b.terms().begin()->first;
    CHECK(m.group() == std::vector<std::int64_t>{2, 0});
    CHECK(m.power(0) == 2);

    CHECK(el("3/2 * e^(2*a1 - a2) * x1^2 * x3 + x2", 2).size() == 2);
    CHECK(el("(-1/4)*z^-1 * x1") == el("x1") * lp("-1/4*z^-1"));
    CHECK(el("(x1 + 1)^2") == el("x1^2 + 2*x1 + 1"));
    CHECK(el("e^(a1)^-2", 1) == el("e^(-2*a1)", 1));
    CHECK(el("x1 / e^(a1)", 1) == el("e^(-a1)*x1", 1));
    CHECK(el("-x1 - -x2") == el("x2 - x1"));
}

TEST_CASE("parse errors") {
    try {
        (void)el("x1 ** x2");
        FAIL("accepted");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);
        CHECK_FALSE(e.expected().empty());
    }
    CHECK_THROWS_AS(el("x1 x2"), ParseError);
    CHECK_THROWS_AS(el("x1 +"), ParseError);
    CHECK_THROWS_AS(el("(x1"), ParseError);
    CHECK_THROWS_AS(el("x1^-1"), Error);
    CHECK_THROWS_AS(el("e^(1/2*a1)", 1), Error);
    try {
        (void)el("e^(a3)", 2);
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::unknown_generator);
    }
}

TEST_CASE("lattice and twisted names") {
    const AlgebraSignature lat = AlgebraSignature::lattice(2, 2);
    const HopfElement a = parse_element("x(2,1)*x(1,2)", lat);
    CHECK(a == HopfElement::primitive(2, lat.lattice_id(2, 1)) * HopfElement::primitive(2, lat.lattice_id(1, 2)));
    CHECK_THROWS_AS(parse_element("x1", lat), Error);
    CHECK_THROWS_AS(parse_element("x(3,1)", lat), Error);
    const AlgebraSignature tw = AlgebraSignature::twisted_fock();
    CHECK(parse_element("y(3/2)^2", tw) == HopfElement(Monomial::primitive(0, 1, 2)));
    CHECK_THROWS_AS(parse_element("y(1)", tw), Error);
    CHECK(parse_primitive_name("x(1,2)", lat) == lat.lattice_id(1, 2));
}

TEST_CASE("rendering") {
    const AlgebraSignature sig = AlgebraSignature::plain(2);
    CHECK(render(el("3/2 * e^(2*a1 - a2) * x1^2", 2), sig) == "3/2*e^(2*a1 - a2)*x1^2");
    CHECK(render(el("x1") * lp("z^-1 + 2"), AlgebraSignature::plain(0)) == "(2 + z^-1)*x1");
    CHECK(render(HopfElement(0), AlgebraSignature::plain(0)) == "0");
    const auto j = to_json(el("2*x1 + 1"), AlgebraSignature::plain(0));
    CHECK(j["text"] == "1 + 2*x1");
    CHECK(j["terms"].size() == 2);
}

TEST_CASE("render round trip") {
    RandomSource rng(2024);
    for (int i = 0; i < 200; ++i) {
        const auto rank = static_cast<std::size_t>(rng.uniform(0, 2));
        const HopfElement a = rng.element(rank, 3, 4, 4);
        const AlgebraSignature sig = AlgebraSignature::plain(rank);
        CHECK(parse_element(render(a, sig), sig) == a);
    }
}
