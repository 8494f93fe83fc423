#pragma once

#include <vector>

#include "bichar/bicharacter.hpp"
#include "bichar/hopf.hpp"

namespace bichar {

/// m_r(a (x) b) = sum a'b' r(a'' (x) b''). Associative and unital for any r.
HopfElement twisted_product(const BicharSpec& r, const HopfElement& a, const HopfElement& b);

/// a . b, the twisted product for a symmetric bicharacter; commutative.
HopfElement bullet_product(const SymmetricBicharSpec& s, const HopfElement& a, const HopfElement& b);

/// Ordered factors to be multiplied by successive bullet products.
struct BulletWord {
    std::vector<HopfElement> factors;
    SymmetricBicharSpec bichar;
};

/// Left fold of bullet_product over the factors. Throws InvalidArgument on an empty word.
HopfElement bullet_word(const BulletWord& w);

/// EQ_r(a) = r(a' (x) a'') a'''.
HopfElement eq_map(const BicharSpec& r, const HopfElement& a);

/// a^bullet, extended linearly: for e^alpha x_{p1}...x_{pk} this is
/// (e^alpha r(e^alpha (x) e^alpha)) . x_{p1} . ... . x_{pk} with . = ._s, s = symmetrize(r).
HopfElement bullet_form(const BicharSpec& r, const HopfElement& a);

}  // namespace bichar
