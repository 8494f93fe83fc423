#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bichar/bicharacter.hpp"
#include "bichar/hopf.hpp"

namespace bichar {

/// Rank-one Fock spaces. States are rank-0 HopfElements: in the untwisted
/// module primitive id n-1 is x_n; in the twisted module id k is y_{k+1/2}.
/// Mode indices are integers (untwisted) or half-integers (twisted) and are
/// carried doubled so both fit in one integer type.
struct Mode {
    std::int64_t twice = 0;

    static Mode integer(std::int64_t n) { return {2 * n}; }
    /// k/2 for odd k.
    static Mode half(std::int64_t k) { return {k}; }

    bool is_half_integer() const { return twice % 2 != 0; }
    Rational value() const { return Rational(static_cast<long>(twice), 2); }
};

/// Primitive id carrying the Fock variable for mode +-n (n != 0).
PrimitiveId fock_variable(Mode n);

/// h_n on a state: h_{-n} multiplies by the n-th variable, h_n = n d/dx_n
/// for n > 0, h_0 = 0. Throws ModeParityMismatch when the mode's
/// integrality does not match `twisted`.
HopfElement apply_mode(Mode n, const HopfElement& state, bool twisted);

/// d^k h(z) / k! (or the twisted field) inside a normal ordered word.
struct FieldFactor {
    unsigned derivative = 0;
    bool twisted = false;
};

/// :f_1(z) f_2(z) ... f_k(z): with all factors of one kind.
struct FieldWord {
    std::vector<FieldFactor> factors;

    /// Throws InvalidArgument on an empty or mixed word.
    void validate() const;
    bool twisted() const { return !factors.empty() && factors.front().twisted; }
};

/// Closed range of z-exponents, doubled (so -3/2 is -3).
struct ExponentWindow {
    std::int64_t lo_twice = 0;
    std::int64_t hi_twice = 0;
};

/// Coefficients of a field applied to a state, keyed by doubled z-exponent.
using FieldValue = std::map<std::int64_t, HopfElement>;

/// Normal ordered word applied to `state`, coefficient by coefficient on the
/// window. Annihilation modes (n >= 0) act first, creation modes after; each
/// coefficient is a finite sum.
FieldValue normal_ordered_apply(const FieldWord& word, const HopfElement& state, const ExponentWindow& window);

/// z^0 coefficient of the word on the vacuum. Throws
/// TwistedWordHasNoZeroEvaluation for twisted words.
HopfElement field_state(const FieldWord& word);

/// x_{n1}...x_{nk} -> the word with derivative orders n_i - 1, factors in
/// increasing n.
FieldWord state_to_word(const Monomial& state, bool twisted = false);

/// Rank-0 bicharacter on the untwisted Fock variables obtained from the
/// lattice construction at rank one with unit Gram matrix:
/// r(x_m (x) x_n) = c_mn for m, n <= depth.
BicharSpec fock_bicharacter(unsigned depth);

struct TwistedBulletState {
    HopfElement state;          // the common value
    HopfElement eq_route;       // EQ_{r^-1}(x_{n1}...x_{nk})
    HopfElement bullet_route;   // x_{n1} ._{s^-1} ... ._{s^-1} x_{nk}
    HopfElement exp_route;      // exp(-Qp)(x_{n1}...x_{nk})
    bool routes_agree = false;
};

/// The untwisted state assigned to a twisted normal ordered word: computed
/// through EQ for the inverse bicharacter, the bullet word for the inverse
/// symmetrization and exp(-Qp). `r` must be a rank-0 table on the x_n.
TwistedBulletState twisted_bullet_state(const FieldWord& word, const BicharSpec& r);

/// Same, with r = fock_bicharacter(largest index in the word).
TwistedBulletState twisted_bullet_state(const FieldWord& word);

}  // namespace bichar
