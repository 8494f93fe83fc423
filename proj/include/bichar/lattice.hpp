#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bichar/bicharacter.hpp"
#include "bichar/hopf.hpp"
#include "bichar/series.hpp"

namespace bichar {

/// Lattice with basis a_1..a_L and a nondegenerate symmetric rational Gram matrix.
class Lattice {
public:
    /// Throws InvalidArgument unless `gram` is square, symmetric and nondegenerate.
    explicit Lattice(std::vector<std::vector<Rational>> gram);

    std::size_t rank() const { return gram_.size(); }
    const Rational& gram(std::size_t i, std::size_t j) const { return gram_[i][j]; }
    /// <alpha|beta> for integer coordinate vectors.
    Rational pairing(const std::vector<std::int64_t>& alpha, const std::vector<std::int64_t>& beta) const;
    Rational determinant() const;

private:
    std::vector<std::vector<Rational>> gram_;
};

/// c_mn for m + n <= order.
struct SeriesCoefficients {
    unsigned order = 0;
    std::map<std::pair<unsigned, unsigned>, LaurentPoly> c;

    LaurentPoly at(unsigned m, unsigned n) const;
};

/// Maclaurin coefficients of -log((sqrt(1 + x/z) + sqrt(1 + y/z)) / 2), z a parameter.
SeriesCoefficients flm_series(unsigned order);

/// Primitive a_i(-m) (1 <= i <= rank, 1 <= m <= depth) lives at sig.lattice_id(i, m).
///   r(e^a (x) e^b)           = (e^{c00})^{<a|b>}   (1, as c00 must vanish)
///   r(e^{a_i} (x) a_j(-m))   = <a_i|a_j> c_{0m}
///   r(a_j(-m) (x) e^{a_i})   = <a_j|a_i> c_{m0}
///   r(a_i(-m) (x) a_j(-n))   = <a_i|a_j> c_{mn}
/// Requires c.order >= 2 * depth. Throws NonConstantGrouplikeValue when c00 != 0.
BicharSpec lattice_bicharacter(const Lattice& lattice, const SeriesCoefficients& c, unsigned depth);

/// One checked identity of the worked example: every route must agree with
/// the closed form.
struct IdentityCheck {
    std::string name;
    HopfElement input;
    std::vector<std::pair<std::string, HopfElement>> routes;  // exp(Q), EQ_r, bullet form
    HopfElement expected;
    bool equal = false;
};

struct ValueCheck {
    std::string name;
    LaurentPoly value;
    LaurentPoly expected;
    bool equal = false;
};

struct FlmReport {
    AlgebraSignature signature;
    SeriesCoefficients series;
    std::vector<ValueCheck> values;
    std::vector<IdentityCheck> identities;
    std::vector<std::string> notes;

    bool all_equal() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

/// Reproduces the worked lattice example at depth 1: bicharacter values,
/// their symmetrization, and exp(Q) on e^a, a_i(-1), e^a a_i(-1),
/// a_i(-1)^2 and e^a a_i(-1)^2, each by exp(Q), EQ_r and the bullet form.
/// Grouplike vectors range over the basis, their sum and -a_1.
FlmReport run_flm_example(const Lattice& lattice, unsigned order = 4);

}  // namespace bichar
