#include "bichar/laurent.hpp"

#include <json.hpp>

#include "bichar/error.hpp"

namespace bichar {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::overflow, "z-exponent overflow");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::overflow, "z-exponent overflow");
    return out;
}

}  // namespace

LaurentPoly::LaurentPoly(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, std::int64_t exponent) {
    LaurentPoly p;
    p.add_term(exponent, c);
    return p;
}

bool LaurentPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

Rational LaurentPoly::constant_term() const { return coefficient(0); }

Rational LaurentPoly::coefficient(std::int64_t exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::int64_t LaurentPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
std::int64_t LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

bool LaurentPoly::is_unit() const { return terms_.size() == 1; }

LaurentPoly LaurentPoly::inverse() const {
    if (!is_unit()) throw Error(ErrorKind::invalid_argument, "Laurent polynomial " + to_string() + " is not invertible");
    const auto& [e, c] = *terms_.begin();
    return monomial(c.reciprocal(), checked_mul(e, -1));
}

LaurentPoly LaurentPoly::pow(std::int64_t exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

void LaurentPoly::add_term(std::int64_t exponent, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(checked_add(ea, eb), ca * cb);
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly out = a;
    for (auto& [e, v] : out.terms_) v = -v;
    return out;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c;
        if (first) {
            if (c.sign() < 0) {
                out += "-";
                mag = -c;
            }
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            if (c.sign() < 0) mag = -c;
        }
        first = false;
        if (e == 0) {
            out += mag.to_string();
            continue;
        }
        if (!mag.is_one()) out += mag.to_string() + "*";
        out += "z";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

nlohmann::json to_json(const Rational& r) {
    const mpz_class num = r.numerator();
    const mpz_class den = r.denominator();
    auto as_json = [](const mpz_class& v) -> nlohmann::json {
        if (v.fits_slong_p()) return v.get_si();
        return v.get_str();
    };
    return nlohmann::json::array({as_json(num), as_json(den)});
}

nlohmann::json to_json(const LaurentPoly& p) {
    nlohmann::json out = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        nlohmann::json nd = to_json(it->second);
        out.push_back(nlohmann::json::array({it->first, nd[0], nd[1]}));
    }
    return out;
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
    LaurentPoly out;
    auto as_mpz = [](const nlohmann::json& v) {
        if (v.is_string()) return mpz_class(v.get<std::string>());
        return mpz_class(v.get<long>());
    };
    for (const auto& triple : j) {
        if (!triple.is_array() || triple.size() != 3) throw Error(ErrorKind::config_error, "expected [exponent, num, den]");
        mpq_class q(as_mpz(triple[1]), as_mpz(triple[2]));
        q.canonicalize();
        out.add_term(triple[0].get<std::int64_t>(), Rational(q));
    }
    return out;
}

}  // namespace bichar
