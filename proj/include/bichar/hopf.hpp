#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bichar/laurent.hpp"

namespace bichar {

/// Index of a primitive generator. Primitive generators form a countable,
/// lazily extended family; only their names depend on the session.
using PrimitiveId = std::uint32_t;

/// Naming of the grouplike and primitive generators of
/// V = Q[e^{+-a1}, ..., e^{+-aL}] (x) Q[x1, x2, ...].
class AlgebraSignature {
public:
    enum class Naming {
        indexed,        ///< x1, x2, ... (id 0 is x1)
        lattice,        ///< x(i,m) for a_i(-m); id = (i-1)*depth + (m-1)
        half_integer,   ///< y(1/2), y(3/2), ... (id k is y((2k+1)/2))
    };

    AlgebraSignature() = default;
    AlgebraSignature(std::size_t num_grouplike, Naming naming, unsigned depth = 1);

    static AlgebraSignature plain(std::size_t num_grouplike) { return {num_grouplike, Naming::indexed}; }
    static AlgebraSignature lattice(std::size_t rank, unsigned depth) { return {rank, Naming::lattice, depth}; }
    static AlgebraSignature twisted_fock() { return {0, Naming::half_integer}; }

    std::size_t num_grouplike() const { return num_grouplike_; }
    Naming naming() const { return naming_; }
    unsigned depth() const { return depth_; }

    std::string primitive_name(PrimitiveId id) const;

    /// Lattice sessions: the id of a_i(-m), 1-based i and m.
    PrimitiveId lattice_id(std::size_t i, unsigned m) const;
    /// Inverse of lattice_id: (i, m), both 1-based.
    std::pair<std::size_t, unsigned> lattice_index(PrimitiveId id) const;

    friend bool operator==(const AlgebraSignature&, const AlgebraSignature&) = default;

private:
    std::size_t num_grouplike_ = 0;
    Naming naming_ = Naming::indexed;
    unsigned depth_ = 1;
};

/// e^alpha * x^I: an integer vector over the grouplike generators and a
/// sparse multi-index over the primitives. Primitive exponents are stored
/// sorted by id and strictly positive.
class Monomial {
public:
    using PrimitivePowers = std::vector<std::pair<PrimitiveId, std::uint32_t>>;

    Monomial() = default;
    explicit Monomial(std::size_t rank) : group_(rank, 0) {}
    Monomial(std::vector<std::int64_t> group, PrimitivePowers primitives);

    static Monomial unit(std::size_t rank) { return Monomial(rank); }
    static Monomial grouplike(std::vector<std::int64_t> group) { return Monomial(std::move(group), {}); }
    static Monomial primitive(std::size_t rank, PrimitiveId id, std::uint32_t power = 1);

    std::size_t rank() const { return group_.size(); }
    const std::vector<std::int64_t>& group() const { return group_; }
    const PrimitivePowers& primitives() const { return primitives_; }

    std::uint32_t power(PrimitiveId id) const;
    /// Total primitive degree |I|.
    std::uint64_t degree() const;
    bool is_unit() const;
    bool is_grouplike() const { return primitives_.empty(); }

    /// Grouplike part e^alpha alone.
    Monomial grouplike_part() const { return Monomial(group_, {}); }
    /// Primitive part x^I alone (same rank, zero group vector).
    Monomial primitive_part() const { return Monomial(std::vector<std::int64_t>(group_.size(), 0), primitives_); }

    /// This monomial with the power of `id` replaced (0 removes it).
    Monomial with_power(PrimitiveId id, std::uint32_t power) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::int64_t> group_;
    PrimitivePowers primitives_;
};

/// Finite A-linear combination of monomials of a fixed grouplike rank.
class HopfElement {
public:
    using Terms = std::map<Monomial, LaurentPoly>;

    HopfElement() = default;
    explicit HopfElement(std::size_t rank) : rank_(rank) {}
    HopfElement(const Monomial& m, const LaurentPoly& c = LaurentPoly(1));

    static HopfElement constant(std::size_t rank, const LaurentPoly& c) { return {Monomial::unit(rank), c}; }
    static HopfElement one(std::size_t rank) { return constant(rank, LaurentPoly(1)); }
    static HopfElement primitive(std::size_t rank, PrimitiveId id) { return HopfElement(Monomial::primitive(rank, id)); }
    static HopfElement grouplike(std::vector<std::int64_t> group) { return HopfElement(Monomial::grouplike(std::move(group))); }

    std::size_t rank() const { return rank_; }
    const Terms& terms() const& { return terms_; }
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    LaurentPoly coefficient(const Monomial& m) const;
    /// Maximal primitive degree over the terms.
    std::uint64_t degree() const;

    void add_term(const Monomial& m, const LaurentPoly& c);

    HopfElement& operator+=(const HopfElement& o);
    HopfElement& operator-=(const HopfElement& o);
    HopfElement& operator*=(const LaurentPoly& c);

    friend HopfElement operator+(HopfElement a, const HopfElement& b) { return a += b; }
    friend HopfElement operator-(HopfElement a, const HopfElement& b) { return a -= b; }
    friend HopfElement operator-(const HopfElement& a);
    friend HopfElement operator*(HopfElement a, const LaurentPoly& c) { return a *= c; }
    friend HopfElement operator*(const LaurentPoly& c, HopfElement a) { return a *= c; }

    friend bool operator==(const HopfElement&, const HopfElement&) = default;

private:
    std::size_t rank_ = 0;
    Terms terms_;
};

/// Ordinary commutative product. Throws SignatureMismatch on differing ranks.
HopfElement product(const HopfElement& a, const HopfElement& b);
HopfElement operator*(const HopfElement& a, const HopfElement& b);

/// Sparse element of V^{(x) N}.
template <std::size_t N>
class Tensor {
public:
    using Key = std::array<Monomial, N>;
    using Terms = std::map<Key, LaurentPoly>;

    const Terms& terms() const& { return terms_; }
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Key& k, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Tensor& operator+=(const Tensor& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }

    friend bool operator==(const Tensor&, const Tensor&) = default;

private:
    Terms terms_;
};

using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

/// Delta, determined by Delta(x) = x(x)1 + 1(x)x and Delta(e^a) = e^a (x) e^a.
Tensor2 coproduct(const Monomial& m);
Tensor2 coproduct(const HopfElement& a);

/// Delta^2 = (Delta (x) Id) Delta, expanded directly by multinomials.
Tensor3 coproduct2(const Monomial& m);
Tensor3 coproduct2(const HopfElement& a);

/// (Delta (x) Id) and (Id (x) Delta) applied to a 2-tensor.
Tensor3 coproduct_left(const Tensor2& t);
Tensor3 coproduct_right(const Tensor2& t);

LaurentPoly counit(const Monomial& m);
LaurentPoly counit(const HopfElement& a);

HopfElement antipode(const HopfElement& a);

/// Coproduct computed as exp(sum a_i^(1) d/da_i^(2) + sum x_n^(1) d/dx_n^(2))
/// applied to 1 (x) a; the grouplike exponential acts by its eigenvalue.
Tensor2 operator_coproduct(const HopfElement& a);

/// Slot swap a (x) b -> b (x) a.
Tensor2 swap(const Tensor2& t);
/// Slotwise product in V (x) V.
Tensor2 product(const Tensor2& a, const Tensor2& b);
/// Apply counit to the first (resp. second) slot.
HopfElement counit_first(const Tensor2& t, std::size_t rank);
HopfElement counit_second(const Tensor2& t, std::size_t rank);
/// Multiply the two slots after applying S to the first (resp. second) one.
HopfElement antipode_first_multiply(const Tensor2& t, std::size_t rank);
HopfElement antipode_second_multiply(const Tensor2& t, std::size_t rank);

}  // namespace bichar
