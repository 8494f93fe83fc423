#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "bichar/hopf.hpp"

namespace bichar {

/// Generator-level table of an A-valued bicharacter r on V (x) V:
///
///   gg(i,j) = r(e^{a_i} (x) e^{a_j})   nonzero rational (default 1)
///   gp(i,m) = r(e^{a_i} (x) x_m)        in A (default 0)
///   pg(m,i) = r(x_m (x) e^{a_i})        in A (default 0)
///   pp(m,n) = r(x_m (x) x_n)            in A (default 0)
///
/// Grouplike values are held multiplicatively; the exponents a_ij of the
/// quadratic operator never need to be materialized.
class BicharSpec {
public:
    BicharSpec() = default;
    explicit BicharSpec(std::size_t rank);

    /// The identity bicharacter for convolution, r(a (x) b) = eta(a) eta(b).
    static BicharSpec identity(std::size_t rank) { return BicharSpec(rank); }

    std::size_t rank() const { return rank_; }

    const Rational& gg(std::size_t i, std::size_t j) const { return gg_[i][j]; }
    LaurentPoly gp(std::size_t i, PrimitiveId m) const;
    LaurentPoly pg(PrimitiveId m, std::size_t i) const;
    LaurentPoly pp(PrimitiveId m, PrimitiveId n) const;

    /// Throws InvalidArgument on zero (grouplike values must be invertible).
    void set_gg(std::size_t i, std::size_t j, const Rational& value);
    void set_gp(std::size_t i, PrimitiveId m, const LaurentPoly& value);
    void set_pg(PrimitiveId m, std::size_t i, const LaurentPoly& value);
    void set_pp(PrimitiveId m, PrimitiveId n, const LaurentPoly& value);

    const std::map<std::pair<std::size_t, PrimitiveId>, LaurentPoly>& gp_table() const { return gp_; }
    const std::map<std::pair<PrimitiveId, std::size_t>, LaurentPoly>& pg_table() const { return pg_; }
    const std::map<std::pair<PrimitiveId, PrimitiveId>, LaurentPoly>& pp_table() const { return pp_; }

    bool is_symmetric() const;

    friend bool operator==(const BicharSpec&, const BicharSpec&) = default;

private:
    std::size_t rank_ = 0;
    std::vector<std::vector<Rational>> gg_;
    std::map<std::pair<std::size_t, PrimitiveId>, LaurentPoly> gp_;
    std::map<std::pair<PrimitiveId, std::size_t>, LaurentPoly> pg_;
    std::map<std::pair<PrimitiveId, PrimitiveId>, LaurentPoly> pp_;
};

/// A bicharacter known to satisfy s(a (x) b) = s(b (x) a).
class SymmetricBicharSpec {
public:
    /// Throws NotSymmetric if `spec` is not symmetric on generators.
    explicit SymmetricBicharSpec(BicharSpec spec);

    const BicharSpec& spec() const { return spec_; }
    operator const BicharSpec&() const { return spec_; }  // NOLINT(google-explicit-constructor)

    friend bool operator==(const SymmetricBicharSpec&, const SymmetricBicharSpec&) = default;

private:
    BicharSpec spec_;
};

/// Evaluates r on pairs of monomials, extending the generator table through
/// the product and unit laws. Memoizes per instance; not thread safe, so
/// use one evaluator per thread.
class BicharEvaluator {
public:
    explicit BicharEvaluator(const BicharSpec& spec) : spec_(spec) {}
    explicit BicharEvaluator(BicharSpec&&) = delete;

    const LaurentPoly& operator()(const Monomial& a, const Monomial& b);
    LaurentPoly operator()(const HopfElement& a, const HopfElement& b);

private:
    LaurentPoly compute(const Monomial& a, const Monomial& b);
    LaurentPoly grouplike_left(const Monomial& g, const Monomial& b) const;
    LaurentPoly primitive_left(PrimitiveId p, const Monomial& b) const;

    const BicharSpec& spec_;
    std::map<std::pair<Monomial, Monomial>, LaurentPoly> memo_;
};

/// r(a (x) b) extended bilinearly. Throws SignatureMismatch.
LaurentPoly evaluate(const BicharSpec& r, const HopfElement& a, const HopfElement& b);

/// r1 o r2 (a (x) b) = sum r1(a' (x) b') r2(a'' (x) b'').
BicharSpec convolve(const BicharSpec& r1, const BicharSpec& r2);
BicharSpec transpose(const BicharSpec& r);
/// Convolution inverse a (x) b -> r(S(a) (x) b).
BicharSpec inverse(const BicharSpec& r);
/// s = r o r^t.
SymmetricBicharSpec symmetrize(const BicharSpec& r);

/// Some r with symmetrize(r) == s, if one exists with rational grouplike
/// values. Diagonal grouplike values take the positive rational square
/// root; off-diagonal values go wholly to the (i<j) slot. Throws NoSquareRoot.
BicharSpec grouplike_root(const SymmetricBicharSpec& s);

/// Drops all grouplike data, keeping the primitive-primitive table at rank 0.
BicharSpec restrict_to_primitives(const BicharSpec& r);

}  // namespace bichar
