#pragma once

#include <ostream>
#include <string_view>

#include "bichar/format.hpp"
#include "bichar/hopf.hpp"
#include "bichar/laurent.hpp"

namespace bichar {

inline std::ostream& operator<<(std::ostream& os, const HopfElement& a) {
    return os << render(a, AlgebraSignature::plain(a.rank()));
}

inline std::ostream& operator<<(std::ostream& os, const BicharSpec& r) {
    return os << render(r, AlgebraSignature::plain(r.rank()));
}

}  // namespace bichar

namespace th {

inline bichar::HopfElement el(std::string_view s, std::size_t rank = 0) {
    return bichar::parse_element(s, bichar::AlgebraSignature::plain(rank));
}

inline bichar::LaurentPoly lp(std::string_view s) { return bichar::parse_laurent(s); }

inline bichar::Rational q(long p, long d = 1) { return bichar::Rational(p, d); }

}  // namespace th
