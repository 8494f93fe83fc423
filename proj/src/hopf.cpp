#include "bichar/hopf.hpp"

#include <algorithm>

#include "bichar/error.hpp"

namespace bichar {

namespace {

void check_rank(std::size_t a, std::size_t b) {
    if (a != b)
        throw Error(ErrorKind::signature_mismatch,
                    "SignatureMismatch: grouplike ranks " + std::to_string(a) + " and " + std::to_string(b));
}

std::int64_t add_exponents(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::overflow, "grouplike exponent overflow");
    return out;
}

// Splits x^k over `slots` tensor factors: all (k_1, ..., k_slots) with sum k
// together with the multinomial coefficient.
template <std::size_t Slots>
void for_each_split(std::uint32_t k, auto&& fn) {
    std::array<std::uint32_t, Slots> parts{};
    auto rec = [&](auto&& self, std::size_t slot, std::uint32_t remaining, mpz_class coeff) -> void {
        if (slot + 1 == Slots) {
            parts[slot] = remaining;
            fn(parts, coeff);
            return;
        }
        for (std::uint32_t j = 0; j <= remaining; ++j) {
            parts[slot] = j;
            self(self, slot + 1, remaining - j, coeff * binomial(remaining, j));
        }
    };
    rec(rec, 0, k, mpz_class(1));
}

template <std::size_t N>
Tensor<N> split_monomial(const Monomial& m) {
    const Monomial g = m.grouplike_part();
    std::map<std::array<Monomial, N>, LaurentPoly> current;
    std::array<Monomial, N> start;
    start.fill(g);
    current.emplace(start, LaurentPoly(1));
    for (const auto& [id, k] : m.primitives()) {
        std::map<std::array<Monomial, N>, LaurentPoly> next;
        for (const auto& [key, c] : current) {
            for_each_split<N>(k, [&](const std::array<std::uint32_t, N>& parts, const mpz_class& coeff) {
                std::array<Monomial, N> nk = key;
                for (std::size_t s = 0; s < N; ++s)
                    if (parts[s] > 0) nk[s] = nk[s].with_power(id, parts[s]);
                next[nk] += c * Rational(coeff);
            });
        }
        current = std::move(next);
    }
    Tensor<N> out;
    for (const auto& [k, c] : current) out.add_term(k, c);
    return out;
}

}  // namespace

AlgebraSignature::AlgebraSignature(std::size_t num_grouplike, Naming naming, unsigned depth)
    : num_grouplike_(num_grouplike), naming_(naming), depth_(depth) {
    if (depth_ == 0) throw Error(ErrorKind::invalid_argument, "primitive depth must be >= 1");
}

std::string AlgebraSignature::primitive_name(PrimitiveId id) const {
    switch (naming_) {
        case Naming::indexed: return "x" + std::to_string(static_cast<std::uint64_t>(id) + 1);
        case Naming::lattice: {
            auto [i, m] = lattice_index(id);
            return "x(" + std::to_string(i) + "," + std::to_string(m) + ")";
        }
        case Naming::half_integer: return "y(" + std::to_string(2 * static_cast<std::uint64_t>(id) + 1) + "/2)";
    }
    return "?";
}

PrimitiveId AlgebraSignature::lattice_id(std::size_t i, unsigned m) const {
    if (i < 1 || i > num_grouplike_ || m < 1 || m > depth_)
        throw Error(ErrorKind::unknown_generator, "UnknownGenerator: x(" + std::to_string(i) + "," +
                                                      std::to_string(m) + ") outside rank " +
                                                      std::to_string(num_grouplike_) + ", depth " +
                                                      std::to_string(depth_));
    return static_cast<PrimitiveId>((i - 1) * depth_ + (m - 1));
}

std::pair<std::size_t, unsigned> AlgebraSignature::lattice_index(PrimitiveId id) const {
    return {id / depth_ + 1, id % depth_ + 1};
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::int64_t> group, PrimitivePowers primitives)
    : group_(std::move(group)), primitives_(std::move(primitives)) {
    std::sort(primitives_.begin(), primitives_.end());
    PrimitivePowers merged;
    for (const auto& [id, k] : primitives_) {
        if (!merged.empty() && merged.back().first == id)
            merged.back().second += k;
        else
            merged.emplace_back(id, k);
    }
    std::erase_if(merged, [](const auto& p) { return p.second == 0; });
    primitives_ = std::move(merged);
}

Monomial Monomial::primitive(std::size_t rank, PrimitiveId id, std::uint32_t power) {
    return Monomial(std::vector<std::int64_t>(rank, 0), {{id, power}});
}

std::uint32_t Monomial::power(PrimitiveId id) const {
    auto it = std::lower_bound(primitives_.begin(), primitives_.end(), std::make_pair(id, std::uint32_t{0}));
    return (it != primitives_.end() && it->first == id) ? it->second : 0;
}

std::uint64_t Monomial::degree() const {
    std::uint64_t d = 0;
    for (const auto& p : primitives_) d += p.second;
    return d;
}

bool Monomial::is_unit() const {
    return primitives_.empty() && std::all_of(group_.begin(), group_.end(), [](auto v) { return v == 0; });
}

Monomial Monomial::with_power(PrimitiveId id, std::uint32_t power) const {
    Monomial out = *this;
    auto it = std::lower_bound(out.primitives_.begin(), out.primitives_.end(), std::make_pair(id, std::uint32_t{0}));
    if (it != out.primitives_.end() && it->first == id) {
        if (power == 0)
            out.primitives_.erase(it);
        else
            it->second = power;
    } else if (power > 0) {
        out.primitives_.insert(it, {id, power});
    }
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    check_rank(a.rank(), b.rank());
    std::vector<std::int64_t> g(a.rank());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = add_exponents(a.group_[i], b.group_[i]);
    Monomial::PrimitivePowers p;
    p.reserve(a.primitives_.size() + b.primitives_.size());
    auto ia = a.primitives_.begin();
    auto ib = b.primitives_.begin();
    while (ia != a.primitives_.end() || ib != b.primitives_.end()) {
        if (ib == b.primitives_.end() || (ia != a.primitives_.end() && ia->first < ib->first)) {
            p.push_back(*ia++);
        } else if (ia == a.primitives_.end() || ib->first < ia->first) {
            p.push_back(*ib++);
        } else {
            p.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    Monomial out;
    out.group_ = std::move(g);
    out.primitives_ = std::move(p);
    return out;
}

// ------------------------------------------------------------- HopfElement

HopfElement::HopfElement(const Monomial& m, const LaurentPoly& c) : rank_(m.rank()) { add_term(m, c); }

LaurentPoly HopfElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

std::uint64_t HopfElement::degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void HopfElement::add_term(const Monomial& m, const LaurentPoly& c) {
    check_rank(rank_, m.rank());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HopfElement& HopfElement::operator+=(const HopfElement& o) {
    check_rank(rank_, o.rank_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

HopfElement& HopfElement::operator-=(const HopfElement& o) {
    check_rank(rank_, o.rank_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

HopfElement& HopfElement::operator*=(const LaurentPoly& c) {
    Terms scaled;
    for (const auto& [m, v] : terms_) {
        LaurentPoly p = v * c;
        if (!p.is_zero()) scaled.emplace(m, std::move(p));
    }
    terms_ = std::move(scaled);
    return *this;
}

HopfElement operator-(const HopfElement& a) {
    HopfElement out(a.rank_);
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
    return out;
}

HopfElement product(const HopfElement& a, const HopfElement& b) {
    check_rank(a.rank(), b.rank());
    HopfElement out(a.rank());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
    return out;
}

HopfElement operator*(const HopfElement& a, const HopfElement& b) { return product(a, b); }

// -------------------------------------------------------------- coproducts

Tensor2 coproduct(const Monomial& m) { return split_monomial<2>(m); }

Tensor2 coproduct(const HopfElement& a) {
    Tensor2 out;
    for (const auto& [m, c] : a.terms())
        for (const auto& [k, v] : coproduct(m).terms()) out.add_term(k, v * c);
    return out;
}

Tensor3 coproduct2(const Monomial& m) { return split_monomial<3>(m); }

Tensor3 coproduct2(const HopfElement& a) {
    Tensor3 out;
    for (const auto& [m, c] : a.terms())
        for (const auto& [k, v] : coproduct2(m).terms()) out.add_term(k, v * c);
    return out;
}

Tensor3 coproduct_left(const Tensor2& t) {
    Tensor3 out;
    for (const auto& [k, c] : t.terms())
        for (const auto& [k2, v] : coproduct(k[0]).terms()) out.add_term({k2[0], k2[1], k[1]}, v * c);
    return out;
}

Tensor3 coproduct_right(const Tensor2& t) {
    Tensor3 out;
    for (const auto& [k, c] : t.terms())
        for (const auto& [k2, v] : coproduct(k[1]).terms()) out.add_term({k[0], k2[0], k2[1]}, v * c);
    return out;
}

LaurentPoly counit(const Monomial& m) { return m.is_grouplike() ? LaurentPoly(1) : LaurentPoly(); }

LaurentPoly counit(const HopfElement& a) {
    LaurentPoly out;
    for (const auto& [m, c] : a.terms())
        if (m.is_grouplike()) out += c;
    return out;
}

HopfElement antipode(const HopfElement& a) {
    HopfElement out(a.rank());
    for (const auto& [m, c] : a.terms()) {
        std::vector<std::int64_t> g = m.group();
        for (auto& v : g) v = -v;
        const Monomial sm(std::move(g), m.primitives());
        out.add_term(sm, m.degree() % 2 == 0 ? c : -c);
    }
    return out;
}

Tensor2 operator_coproduct(const HopfElement& a) {
    Tensor2 out;
    for (const auto& [m, c] : a.terms()) {
        // Eigenvalue m_i of d/da_i^(2): the exponential puts (e^{a_i})^{m_i}
        // into the first slot.
        Tensor2 current;
        current.add_term({m.grouplike_part(), m}, c);
        Rational inv_factorial(1);
        for (std::uint64_t k = 0; !current.is_zero(); ++k) {
            if (k > 0) inv_factorial /= Rational(static_cast<long>(k));
            for (const auto& [key, v] : current.terms()) out.add_term(key, v * inv_factorial);
            // One more application of sum_n x_n^(1) d/dx_n^(2).
            Tensor2 next;
            for (const auto& [key, v] : current.terms()) {
                for (const auto& [id, e] : key[1].primitives()) {
                    Monomial left = key[0].with_power(id, key[0].power(id) + 1);
                    Monomial right = key[1].with_power(id, e - 1);
                    next.add_term({left, right}, v * Rational(static_cast<long>(e)));
                }
            }
            current = std::move(next);
        }
    }
    return out;
}

Tensor2 swap(const Tensor2& t) {
    Tensor2 out;
    for (const auto& [k, c] : t.terms()) out.add_term({k[1], k[0]}, c);
    return out;
}

Tensor2 product(const Tensor2& a, const Tensor2& b) {
    Tensor2 out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) out.add_term({ka[0] * kb[0], ka[1] * kb[1]}, ca * cb);
    return out;
}

HopfElement counit_first(const Tensor2& t, std::size_t rank) {
    HopfElement out(rank);
    for (const auto& [k, c] : t.terms())
        if (k[0].is_grouplike()) out.add_term(k[1], c);
    return out;
}

HopfElement counit_second(const Tensor2& t, std::size_t rank) {
    HopfElement out(rank);
    for (const auto& [k, c] : t.terms())
        if (k[1].is_grouplike()) out.add_term(k[0], c);
    return out;
}

HopfElement antipode_first_multiply(const Tensor2& t, std::size_t rank) {
    HopfElement out(rank);
    for (const auto& [k, c] : t.terms()) out += product(antipode(HopfElement(k[0])), HopfElement(k[1])) * c;
    return out;
}

HopfElement antipode_second_multiply(const Tensor2& t, std::size_t rank) {
    HopfElement out(rank);
    for (const auto& [k, c] : t.terms()) out += product(HopfElement(k[0]), antipode(HopfElement(k[1]))) * c;
    return out;
}

}  // namespace bichar
