#include "bichar/series.hpp"

#include "bichar/error.hpp"

namespace bichar {

namespace {

void check_same_order(const BivariateSeries& a, const BivariateSeries& b) {
    if (a.order() != b.order())
        throw Error(ErrorKind::invalid_argument, "series truncation orders differ: " + std::to_string(a.order()) +
                                                     " vs " + std::to_string(b.order()));
}

// s - 1, after checking that the constant term is exactly 1.
BivariateSeries unit_tail(const BivariateSeries& s, const char* op) {
    if (s.constant_term() != LaurentPoly(1))
        throw Error(ErrorKind::non_unit_constant_term,
                    std::string(op) + ": constant term is " + s.constant_term().to_string() + ", expected 1");
    return s - BivariateSeries::constant(s.order(), LaurentPoly(1));
}

// sum_k weight(k) u^k for k = 0..order; u has no constant term so u^k has
// minimal degree k and higher powers vanish under truncation.
template <typename Weight>
BivariateSeries compose_power_series(const BivariateSeries& u, Weight weight) {
    BivariateSeries out(u.order());
    BivariateSeries power = BivariateSeries::constant(u.order(), LaurentPoly(1));
    for (unsigned k = 0; k <= u.order(); ++k) {
        const Rational w = weight(k);
        if (!w.is_zero()) out += power * LaurentPoly(w);
        power = power * u;
        if (power.coefficients().empty()) break;
    }
    return out;
}

}  // namespace

BivariateSeries BivariateSeries::constant(unsigned order, const LaurentPoly& c) { return term(order, 0, 0, c); }

BivariateSeries BivariateSeries::term(unsigned order, unsigned m, unsigned n, const LaurentPoly& c) {
    BivariateSeries s(order);
    s.add_term(m, n, c);
    return s;
}

LaurentPoly BivariateSeries::coefficient(unsigned m, unsigned n) const {
    auto it = coeffs_.find({m, n});
    return it == coeffs_.end() ? LaurentPoly() : it->second;
}

void BivariateSeries::add_term(unsigned m, unsigned n, const LaurentPoly& c) {
    if (m + n > order_ || c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace({m, n}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& o) {
    check_same_order(*this, o);
    for (const auto& [k, c] : o.coeffs_) add_term(k.first, k.second, c);
    return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& o) {
    check_same_order(*this, o);
    for (const auto& [k, c] : o.coeffs_) add_term(k.first, k.second, -c);
    return *this;
}

BivariateSeries& BivariateSeries::operator*=(const LaurentPoly& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::map<Key, LaurentPoly> scaled;
    for (const auto& [k, v] : coeffs_) {
        LaurentPoly p = v * c;
        if (!p.is_zero()) scaled.emplace(k, std::move(p));
    }
    coeffs_ = std::move(scaled);
    return *this;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
    check_same_order(a, b);
    BivariateSeries out(a.order_);
    for (const auto& [ka, ca] : a.coeffs_)
        for (const auto& [kb, cb] : b.coeffs_) {
            const unsigned m = ka.first + kb.first;
            const unsigned n = ka.second + kb.second;
            if (m + n <= a.order_) out.add_term(m, n, ca * cb);
        }
    return out;
}

BivariateSeries operator-(const BivariateSeries& a) {
    BivariateSeries out(a.order_);
    for (const auto& [k, c] : a.coeffs_) out.coeffs_.emplace(k, -c);
    return out;
}

std::string BivariateSeries::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : coeffs_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")";
        if (k.first > 0) out += "*x" + (k.first > 1 ? "^" + std::to_string(k.first) : std::string());
        if (k.second > 0) out += "*y" + (k.second > 1 ? "^" + std::to_string(k.second) : std::string());
    }
    return out;
}

BivariateSeries series_sqrt(const BivariateSeries& s) {
    const BivariateSeries u = unit_tail(s, "series_sqrt");
    const Rational half(1, 2);
    return compose_power_series(u, [&](unsigned k) { return binomial(half, k); });
}

BivariateSeries series_log(const BivariateSeries& s) {
    const BivariateSeries u = unit_tail(s, "series_log");
    return compose_power_series(u, [](unsigned k) {
        if (k == 0) return Rational(0);
        return Rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
    });
}

BivariateSeries series_exp(const BivariateSeries& u) {
    if (!u.constant_term().is_zero())
        throw Error(ErrorKind::invalid_argument, "series_exp: argument must have zero constant term");
    Rational factorial(1);
    return compose_power_series(u, [&](unsigned k) {
        if (k > 0) factorial *= Rational(static_cast<long>(k));
        return factorial.reciprocal();
    });
}

}  // namespace bichar
