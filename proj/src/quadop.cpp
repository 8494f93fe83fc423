#include "bichar/quadop.hpp"

#include <set>

#include "bichar/error.hpp"

namespace bichar {

namespace {

void check_rank(const QuadraticOperator& q, const HopfElement& a) {
    if (q.spec.rank() != a.rank())
        throw Error(ErrorKind::signature_mismatch, "SignatureMismatch: operator and element ranks differ");
}

}  // namespace

HopfElement derive_primitive(PrimitiveId n, const HopfElement& a) {
    HopfElement out(a.rank());
    for (const auto& [m, c] : a.terms()) {
        const std::uint32_t e = m.power(n);
        if (e == 0) continue;
        out.add_term(m.with_power(n, e - 1), c * Rational(static_cast<long>(e)));
    }
    return out;
}

HopfElement derive_grouplike(std::size_t i, const HopfElement& a) {
    if (i >= a.rank()) throw Error(ErrorKind::unknown_generator, "grouplike index out of range");
    HopfElement out(a.rank());
    for (const auto& [m, c] : a.terms()) {
        const std::int64_t e = m.group()[i];
        if (e != 0) out.add_term(m, c * Rational(static_cast<long>(e)));
    }
    return out;
}

HopfElement apply_qp(const QuadraticOperator& q, const HopfElement& a) {
    check_rank(q, a);
    HopfElement out(a.rank());
    for (const auto& [key, value] : q.spec.pp_table()) {
        const HopfElement d = derive_primitive(key.first, derive_primitive(key.second, a));
        if (!d.is_zero()) out += d * value;
    }
    return out;
}

HopfElement apply_exp_q0(const QuadraticOperator& q, const HopfElement& a) {
    check_rank(q, a);
    HopfElement out(a.rank());
    for (const auto& [m, c] : a.terms()) {
        const auto& alpha = m.group();
        Rational eigen(1);
        for (std::size_t i = 0; i < alpha.size(); ++i)
            for (std::size_t j = 0; j < alpha.size(); ++j)
                if (alpha[i] != 0 && alpha[j] != 0) eigen *= q.spec.gg(i, j).pow(alpha[i] * alpha[j]);
        out.add_term(m, c * eigen);
    }
    return out;
}

HopfElement apply_exp_q1(const QuadraticOperator& q, const HopfElement& a) {
    check_rank(q, a);
    const BicharSpec& r = q.spec;
    HopfElement out(a.rank());
    for (const auto& [m, c] : a.terms()) {
        const auto& alpha = m.group();
        // Expand prod_n (x_n + d_n)^{e_n} with d_n = sum_i m_i (b_in + c_ni).
        HopfElement acc(m.grouplike_part(), c);
        for (const auto& [n, e] : m.primitives()) {
            LaurentPoly shift;
            for (std::size_t i = 0; i < alpha.size(); ++i)
                if (alpha[i] != 0) shift += (r.gp(i, n) + r.pg(n, i)) * Rational(static_cast<long>(alpha[i]));
            HopfElement factor(a.rank());
            LaurentPoly shift_power(1);
            for (std::uint32_t j = 0; j <= e; ++j) {
                // C(e, j) x_n^{e-j} d_n^j
                factor.add_term(Monomial::primitive(a.rank(), n, e - j), shift_power * Rational(binomial(e, j)));
                shift_power *= shift;
                if (shift_power.is_zero()) break;
            }
            acc = acc * factor;
        }
        out += acc;
    }
    return out;
}

HopfElement apply_exp_qp(const QuadraticOperator& q, const HopfElement& a) {
    check_rank(q, a);
    HopfElement out = a;
    HopfElement power = a;
    Rational inv_factorial(1);
    // Each application lowers the primitive degree by 2.
    for (long k = 1; ; ++k) {
        power = apply_qp(q, power);
        if (power.is_zero()) break;
        inv_factorial /= Rational(k);
        out += power * LaurentPoly(inv_factorial);
    }
    return out;
}

HopfElement apply_exp_q(const QuadraticOperator& q, const HopfElement& a) {
    return apply_exp_q1(q, apply_exp_qp(q, apply_exp_q0(q, a)));
}

HopfElement apply_exp_q_ordered(const QuadraticOperator& q, const HopfElement& a, const std::array<QuadStage, 3>& order) {
    std::set<QuadStage> seen(order.begin(), order.end());
    if (seen.size() != 3) throw Error(ErrorKind::invalid_argument, "stage order must be a permutation of q0, q1, qp");
    HopfElement out = a;
    for (QuadStage stage : order) {
        switch (stage) {
            case QuadStage::q0: out = apply_exp_q0(q, out); break;
            case QuadStage::q1: out = apply_exp_q1(q, out); break;
            case QuadStage::qp: out = apply_exp_qp(q, out); break;
        }
    }
    return out;
}

QuadraticOperator symmetrized_operator(const QuadraticOperator& q) {
    QuadraticOperator out{q.spec};
    const Rational half(1, 2);
    for (const auto& [key, value] : q.spec.pp_table()) {
        out.spec.set_pp(key.first, key.second, (value + q.spec.pp(key.second, key.first)) * half);
        out.spec.set_pp(key.second, key.first, (value + q.spec.pp(key.second, key.first)) * half);
    }
    return out;
}

}  // namespace bichar
