#include <doctest.h>

#include "bichar/quadop.hpp"
#include "bichar/twisting.hpp"
#include "helpers.hpp"

using namespace bichar;
using th::el;
using th::lp;
using th::q;

TEST_CASE("derivations") {
    CHECK(derive_primitive(0, el("x1^2")) == el("2*x1"));
    CHECK(derive_primitive(0, el("e^(a1)*x1", 1)) == el("e^(a1)", 1));
    CHECK(derive_primitive(1, el("x1")).is_zero());
    CHECK(derive_grouplike(0, el("e^(a1)", 2)) == el("e^(a1)", 2));
    CHECK(derive_grouplike(1, el("e^(a1)", 2)).is_zero());
    CHECK(derive_grouplike(0, el("e^(3*a1 - a2)*x5", 2)) == el("3*e^(3*a1 - a2)*x5", 2));
    CHECK(derive_grouplike(0, el("x5", 2)).is_zero());
}

TEST_CASE("exp(Qp)") {
    BicharSpec r(0);
    r.set_pp(0, 1, lp("z^-1"));
    r.set_pp(1, 0, lp("2"));
    r.set_pp(1, 1, lp("1/3"));
    const QuadraticOperator op{r};
    CHECK(apply_exp_qp(op, el("x1")) == el("x1"));
    CHECK(apply_exp_qp(op, HopfElement::one(0)) == HopfElement::one(0));
    CHECK(apply_exp_qp(op, el("x1*x2")) == el("x1*x2") + HopfElement::constant(0, lp("z^-1 + 2")));
    // x2^4: Qp = 2/3 on x2^2 pairs; exp gives x2^4 + 4 x2^2 + 4/3
    CHECK(apply_exp_qp(op, el("x2^4")) == el("x2^4 + 4*x2^2 + 4/3"));
}

TEST_CASE("exp(Q) on grouplikes and shifts") {
    BicharSpec r(2);
    r.set_gg(0, 0, q(2));
    r.set_gg(0, 1, q(3));
    r.set_gg(1, 0, q(5));
    r.set_gg(1, 1, q(7));
    r.set_gp(0, 0, lp("z^-1"));
    r.set_pg(0, 1, lp("1/2"));
    const QuadraticOperator op{r};
    CHECK(apply_exp_q(op, el("e^(a1)", 2)) == el("2*e^(a1)", 2));
    CHECK(apply_exp_q(op, el("e^(a1 + a2)", 2)) == el("210*e^(a1 + a2)", 2));
    // e^alpha x_1 with alpha = 2 a1 - a2: shift by 2 b_11 - c_12
    const HopfElement a = el("e^(2*a1 - a2)*x1", 2);
    const LaurentPoly factor(q(2).pow(4) * q(3).pow(-2) * q(5).pow(-2) * q(7));
    const HopfElement expected = (el("e^(2*a1 - a2)*x1", 2) + el("e^(2*a1 - a2)", 2) * lp("2*z^-1 - 1/2")) * factor;
    CHECK(apply_exp_q(op, a) == expected);
    CHECK(apply_exp_q(op, a) == eq_map(r, a));
}

TEST_CASE("symmetrized operator") {
    BicharSpec r(0);
    r.set_pp(0, 1, lp("z"));
    const QuadraticOperator sym = symmetrized_operator(QuadraticOperator{r});
    CHECK(sym.spec.pp(0, 1) == lp("1/2*z"));
    CHECK(sym.spec.pp(1, 0) == lp("1/2*z"));

    BicharSpec s(0);
    s.set_pp(0, 0, lp("3"));
    s.set_pp(0, 1, lp("z"));
    s.set_pp(1, 0, lp("z"));
    CHECK(symmetrized_operator(QuadraticOperator{s}).spec == s);
}

TEST_CASE("stage order is irrelevant") {
    BicharSpec r(1);
    r.set_gg(0, 0, q(-3, 2));
    r.set_gp(0, 0, lp("z^-2"));
    r.set_pg(0, 0, lp("4"));
    r.set_pp(0, 0, lp("1/5*z"));
    const QuadraticOperator op{r};
    const HopfElement a = el("e^(-a1)*x1^3 + e^(2*a1)*x1", 1);
    const HopfElement ref = apply_exp_q(op, a);
    CHECK(apply_exp_q_ordered(op, a, {QuadStage::qp, QuadStage::q1, QuadStage::q0}) == ref);
    CHECK(apply_exp_q_ordered(op, a, {QuadStage::q1, QuadStage::q0, QuadStage::qp}) == ref);
    CHECK(ref == eq_map(r, a));
}
