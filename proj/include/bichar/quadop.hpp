#pragma once

#include <array>
#include <cstddef>

#include "bichar/bicharacter.hpp"
#include "bichar/hopf.hpp"

namespace bichar {

/// The second-order operator
///
///   Q = sum a_ij d_ai d_aj + sum (b_im + c_mi) d_ai d_xm + sum q_mn d_xm d_xn
///
/// attached to a bicharacter, with e^{a_ij} = gg(i,j). It splits as
/// Q = Q0 + Q1 + Qp into commuting pieces; exp(Q) is applied stagewise.
struct QuadraticOperator {
    BicharSpec spec;
};

/// d/dx_n, the grouplike factor is inert.
HopfElement derive_primitive(PrimitiveId n, const HopfElement& a);
/// d/da_i(e^alpha P) = m_i e^alpha P. `i` is 0-based.
HopfElement derive_grouplike(std::size_t i, const HopfElement& a);

/// Qp(a) = sum q_mn d^2 a / dx_m dx_n.
HopfElement apply_qp(const QuadraticOperator& q, const HopfElement& a);

/// exp(Q0): multiplies e^alpha P by prod gg(i,j)^{m_i m_j}.
HopfElement apply_exp_q0(const QuadraticOperator& q, const HopfElement& a);
/// exp(Q1): substitutes x_m -> x_m + sum_i m_i (b_im + c_mi) in e^alpha P.
HopfElement apply_exp_q1(const QuadraticOperator& q, const HopfElement& a);
/// exp(Qp) = sum Qp^k / k!, stopping once Qp^k(a) vanishes.
HopfElement apply_exp_qp(const QuadraticOperator& q, const HopfElement& a);

/// exp(Q) = exp(Q1) exp(Qp) exp(Q0).
HopfElement apply_exp_q(const QuadraticOperator& q, const HopfElement& a);

enum class QuadStage { q0, q1, qp };

/// exp(Q) with the stage exponentials run as order[0], then order[1], then order[2].
HopfElement apply_exp_q_ordered(const QuadraticOperator& q, const HopfElement& a, const std::array<QuadStage, 3>& order);

/// The same operator with q_mn replaced by (q_mn + q_nm)/2.
QuadraticOperator symmetrized_operator(const QuadraticOperator& q);

}  // namespace bichar
