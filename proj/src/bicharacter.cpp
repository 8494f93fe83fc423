#include "bichar/bicharacter.hpp"

#include "bichar/error.hpp"

namespace bichar {

namespace {

void check_rank(std::size_t a, std::size_t b) {
    if (a != b)
        throw Error(ErrorKind::signature_mismatch,
                    "SignatureMismatch: bicharacter ranks " + std::to_string(a) + " and " + std::to_string(b));
}

template <typename Map, typename Key>
LaurentPoly lookup(const Map& m, const Key& k) {
    auto it = m.find(k);
    return it == m.end() ? LaurentPoly() : it->second;
}

template <typename Map, typename Key>
void store(Map& m, const Key& k, const LaurentPoly& v) {
    if (v.is_zero())
        m.erase(k);
    else
        m[k] = v;
}

}  // namespace

BicharSpec::BicharSpec(std::size_t rank) : rank_(rank), gg_(rank, std::vector<Rational>(rank, Rational(1))) {}

LaurentPoly BicharSpec::gp(std::size_t i, PrimitiveId m) const { return lookup(gp_, std::make_pair(i, m)); }
LaurentPoly BicharSpec::pg(PrimitiveId m, std::size_t i) const { return lookup(pg_, std::make_pair(m, i)); }
LaurentPoly BicharSpec::pp(PrimitiveId m, PrimitiveId n) const { return lookup(pp_, std::make_pair(m, n)); }

void BicharSpec::set_gg(std::size_t i, std::size_t j, const Rational& value) {
    if (i >= rank_ || j >= rank_) throw Error(ErrorKind::unknown_generator, "grouplike index out of range");
    if (value.is_zero()) throw Error(ErrorKind::invalid_argument, "grouplike-grouplike value must be invertible");
    gg_[i][j] = value;
}

void BicharSpec::set_gp(std::size_t i, PrimitiveId m, const LaurentPoly& value) {
    if (i >= rank_) throw Error(ErrorKind::unknown_generator, "grouplike index out of range");
    store(gp_, std::make_pair(i, m), value);
}

void BicharSpec::set_pg(PrimitiveId m, std::size_t i, const LaurentPoly& value) {
    if (i >= rank_) throw Error(ErrorKind::unknown_generator, "grouplike index out of range");
    store(pg_, std::make_pair(m, i), value);
}

void BicharSpec::set_pp(PrimitiveId m, PrimitiveId n, const LaurentPoly& value) { store(pp_, std::make_pair(m, n), value); }

bool BicharSpec::is_symmetric() const {
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = i + 1; j < rank_; ++j)
            if (gg_[i][j] != gg_[j][i]) return false;
    for (const auto& [k, v] : gp_)
        if (pg(k.second, k.first) != v) return false;
    for (const auto& [k, v] : pg_)
        if (gp(k.second, k.first) != v) return false;
    for (const auto& [k, v] : pp_)
        if (pp(k.second, k.first) != v) return false;
    return true;
}

SymmetricBicharSpec::SymmetricBicharSpec(BicharSpec spec) : spec_(std::move(spec)) {
    if (!spec_.is_symmetric()) throw Error(ErrorKind::not_symmetric, "NotSymmetric: bicharacter table is not symmetric");
}

// ------------------------------------------------------------- evaluation

// r(e^alpha (x) e^beta x^J) = prod gg(i,j)^{m_i n_j} * prod_n (sum_i m_i b_in)^{J_n},
// since e^alpha is grouplike and r(gh (x) x) = r(g (x) x) + r(h (x) x).
LaurentPoly BicharEvaluator::grouplike_left(const Monomial& g, const Monomial& b) const {
    const auto& alpha = g.group();
    const auto& beta = b.group();
    Rational scalar(1);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0) continue;
        for (std::size_t j = 0; j < beta.size(); ++j)
            if (beta[j] != 0) scalar *= spec_.gg(i, j).pow(alpha[i] * beta[j]);
    }
    LaurentPoly out(scalar);
    for (const auto& [n, e] : b.primitives()) {
        LaurentPoly value;
        for (std::size_t i = 0; i < alpha.size(); ++i)
            if (alpha[i] != 0) value += spec_.gp(i, n) * Rational(static_cast<long>(alpha[i]));
        out *= value.pow(e);
        if (out.is_zero()) break;
    }
    return out;
}

// r(x_p (x) e^beta x^J): x_p is primitive, so r(x_p (x) uv) = r(x_p (x) u) eta(v) + eta(u) r(x_p (x) v).
// Nonzero only when |J| <= 1.
LaurentPoly BicharEvaluator::primitive_left(PrimitiveId p, const Monomial& b) const {
    const std::uint64_t deg = b.degree();
    if (deg == 0) {
        LaurentPoly out;
        const auto& beta = b.group();
        for (std::size_t j = 0; j < beta.size(); ++j)
            if (beta[j] != 0) out += spec_.pg(p, j) * Rational(static_cast<long>(beta[j]));
        return out;
    }
    if (deg == 1) return spec_.pp(p, b.primitives().front().first);
    return LaurentPoly();
}

LaurentPoly BicharEvaluator::compute(const Monomial& a, const Monomial& b) {
    if (a.is_grouplike()) return grouplike_left(a, b);
    // Peel the lowest primitive off the left slot:
    // r(x_p u (x) v) = sum r(x_p (x) v') r(u (x) v'').
    const PrimitiveId p = a.primitives().front().first;
    const Monomial rest = a.with_power(p, a.power(p) - 1);
    LaurentPoly out;
    for (const auto& [k, c] : coproduct(b).terms()) {
        const LaurentPoly head = primitive_left(p, k[0]);
        if (head.is_zero()) continue;
        out += c * head * (*this)(rest, k[1]);
    }
    return out;
}

const LaurentPoly& BicharEvaluator::operator()(const Monomial& a, const Monomial& b) {
    check_rank(a.rank(), spec_.rank());
    check_rank(b.rank(), spec_.rank());
    auto key = std::make_pair(a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    LaurentPoly value = compute(a, b);
    return memo_.emplace(std::move(key), std::move(value)).first->second;
}

LaurentPoly BicharEvaluator::operator()(const HopfElement& a, const HopfElement& b) {
    check_rank(a.rank(), spec_.rank());
    check_rank(b.rank(), spec_.rank());
    LaurentPoly out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out += ca * cb * (*this)(ma, mb);
    return out;
}

LaurentPoly evaluate(const BicharSpec& r, const HopfElement& a, const HopfElement& b) {
    BicharEvaluator eval(r);
    return eval(a, b);
}

// ------------------------------------------------------- convolution group

BicharSpec convolve(const BicharSpec& r1, const BicharSpec& r2) {
    check_rank(r1.rank(), r2.rank());
    BicharSpec out(r1.rank());
    for (std::size_t i = 0; i < r1.rank(); ++i)
        for (std::size_t j = 0; j < r1.rank(); ++j) out.set_gg(i, j, r1.gg(i, j) * r2.gg(i, j));
    for (const auto* r : {&r1, &r2}) {
        for (const auto& [k, v] : r->gp_table()) out.set_gp(k.first, k.second, out.gp(k.first, k.second) + v);
        for (const auto& [k, v] : r->pg_table()) out.set_pg(k.first, k.second, out.pg(k.first, k.second) + v);
        for (const auto& [k, v] : r->pp_table()) out.set_pp(k.first, k.second, out.pp(k.first, k.second) + v);
    }
    return out;
}

BicharSpec transpose(const BicharSpec& r) {
    BicharSpec out(r.rank());
    for (std::size_t i = 0; i < r.rank(); ++i)
        for (std::size_t j = 0; j < r.rank(); ++j) out.set_gg(i, j, r.gg(j, i));
    for (const auto& [k, v] : r.gp_table()) out.set_pg(k.second, k.first, v);
    for (const auto& [k, v] : r.pg_table()) out.set_gp(k.second, k.first, v);
    for (const auto& [k, v] : r.pp_table()) out.set_pp(k.second, k.first, v);
    return out;
}

BicharSpec inverse(const BicharSpec& r) {
    BicharSpec out(r.rank());
    for (std::size_t i = 0; i < r.rank(); ++i)
        for (std::size_t j = 0; j < r.rank(); ++j) out.set_gg(i, j, r.gg(i, j).reciprocal());
    for (const auto& [k, v] : r.gp_table()) out.set_gp(k.first, k.second, -v);
    for (const auto& [k, v] : r.pg_table()) out.set_pg(k.first, k.second, -v);
    for (const auto& [k, v] : r.pp_table()) out.set_pp(k.first, k.second, -v);
    return out;
}

SymmetricBicharSpec symmetrize(const BicharSpec& r) { return SymmetricBicharSpec(convolve(r, transpose(r))); }

BicharSpec grouplike_root(const SymmetricBicharSpec& sym) {
    const BicharSpec& s = sym.spec();
    BicharSpec out(s.rank());
    for (std::size_t i = 0; i < s.rank(); ++i) {
        auto root = s.gg(i, i).exact_sqrt();
        if (!root) throw NoSquareRoot(i + 1);
        out.set_gg(i, i, *root);
        for (std::size_t j = i + 1; j < s.rank(); ++j) {
            out.set_gg(i, j, s.gg(i, j));
            out.set_gg(j, i, Rational(1));
        }
    }
    for (const auto& [k, v] : s.gp_table()) out.set_gp(k.first, k.second, v);
    const Rational half(1, 2);
    for (const auto& [k, v] : s.pp_table()) out.set_pp(k.first, k.second, v * half);
    return out;
}

BicharSpec restrict_to_primitives(const BicharSpec& r) {
    BicharSpec out(0);
    for (const auto& [k, v] : r.pp_table()) out.set_pp(k.first, k.second, v);
    return out;
}

}  // namespace bichar
