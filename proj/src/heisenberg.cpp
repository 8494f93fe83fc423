#include "bichar/heisenberg.hpp"

#include <algorithm>

#include "bichar/error.hpp"
#include "bichar/lattice.hpp"
#include "bichar/quadop.hpp"
#include "bichar/twisting.hpp"

namespace bichar {

namespace {

// Doubled mode index of the variable with the given id.
std::int64_t mode_of_variable(PrimitiveId id, bool twisted) {
    return twisted ? 2 * static_cast<std::int64_t>(id) + 1 : 2 * (static_cast<std::int64_t>(id) + 1);
}

struct ModeChoice {
    std::int64_t twice;  // mode n, doubled
    Rational weight;     // binomial(-n-1, d)
};

class NormalOrderedEvaluator {
public:
    NormalOrderedEvaluator(const FieldWord& word, const HopfElement& state, const ExponentWindow& window)
        : word_(word), state_(state), window_(window), twisted_(word.twisted()) {
        for (const auto& [m, c] : state.terms())
            for (const auto& [id, e] : m.primitives()) annihilators_.push_back(mode_of_variable(id, twisted_));
        std::sort(annihilators_.begin(), annihilators_.end());
        annihilators_.erase(std::unique(annihilators_.begin(), annihilators_.end()), annihilators_.end());

        const std::size_t k = word.factors.size();
        rest_min_.assign(k + 1, 0);
        for (std::size_t j = k; j-- > 0;) rest_min_[j] = rest_min_[j + 1] + min_exponent(word.factors[j].derivative);
    }

    FieldValue run() {
        choices_.clear();
        descend(0, 0);
        return std::move(result_);
    }

private:
    // Doubled z-exponent of mode n in d^d h / d!: -n - 1 - d.
    static std::int64_t exponent(std::int64_t twice, unsigned d) { return -twice - 2 - 2 * static_cast<std::int64_t>(d); }

    std::int64_t min_creation_twice(unsigned d) const {
        // Smallest k = -n > 0 with nonzero binomial(k-1, d).
        return twisted_ ? 1 : 2 * (static_cast<std::int64_t>(d) + 1);
    }

    std::int64_t min_exponent(unsigned d) const {
        std::int64_t best = exponent(-min_creation_twice(d), d);
        if (!annihilators_.empty()) best = std::min(best, exponent(annihilators_.back(), d));
        return best;
    }

    void descend(std::size_t j, std::int64_t partial) {
        const std::size_t k = word_.factors.size();
        if (j == k) {
            if (partial >= window_.lo_twice && partial <= window_.hi_twice) emit(partial);
            return;
        }
        const unsigned d = word_.factors[j].derivative;
        const std::int64_t bound = window_.hi_twice - partial - rest_min_[j + 1];
        for (std::int64_t n : annihilators_) {
            const std::int64_t e = exponent(n, d);
            if (e > bound) continue;
            choices_.push_back({n, binomial(Mode{-n - 2}.value(), d)});
            descend(j + 1, partial + e);
            choices_.pop_back();
        }
        for (std::int64_t k2 = min_creation_twice(d);; k2 += 2) {
            const std::int64_t e = exponent(-k2, d);
            if (e > bound) break;
            const Rational w = binomial(Mode{k2 - 2}.value(), d);
            if (w.is_zero()) continue;
            choices_.push_back({-k2, w});
            descend(j + 1, partial + e);
            choices_.pop_back();
        }
    }

    void emit(std::int64_t total) {
        Rational weight(1);
        for (const auto& c : choices_) weight *= c.weight;
        HopfElement v = state_;
        for (const auto& c : choices_)
            if (c.twice >= 0) {
                v = apply_mode(Mode{c.twice}, v, twisted_);
                if (v.is_zero()) return;
            }
        for (const auto& c : choices_)
            if (c.twice < 0) v = apply_mode(Mode{c.twice}, v, twisted_);
        auto [it, inserted] = result_.try_emplace(total, HopfElement(0));
        it->second += v * LaurentPoly(weight);
        if (it->second.is_zero()) result_.erase(it);
    }

    const FieldWord& word_;
    const HopfElement& state_;
    ExponentWindow window_;
    bool twisted_;
    std::vector<std::int64_t> annihilators_;
    std::vector<std::int64_t> rest_min_;
    std::vector<ModeChoice> choices_;
    FieldValue result_;
};

}  // namespace

PrimitiveId fock_variable(Mode n) {
    const std::int64_t t = n.twice < 0 ? -n.twice : n.twice;
    if (t == 0) throw Error(ErrorKind::invalid_argument, "mode 0 has no Fock variable");
    return static_cast<PrimitiveId>(t % 2 != 0 ? (t - 1) / 2 : t / 2 - 1);
}

HopfElement apply_mode(Mode n, const HopfElement& state, bool twisted) {
    if (n.is_half_integer() != twisted)
        throw Error(ErrorKind::mode_parity_mismatch,
                    "ModeParityMismatch: mode " + n.value().to_string() +
                        (twisted ? " on the twisted module" : " on the untwisted module"));
    if (state.rank() != 0) throw Error(ErrorKind::signature_mismatch, "SignatureMismatch: Fock states have no grouplikes");
    if (n.twice == 0) return HopfElement(0);
    const PrimitiveId var = fock_variable(n);
    if (n.twice < 0) return product(HopfElement::primitive(0, var), state);
    HopfElement out(0);
    for (const auto& [m, c] : state.terms()) {
        const std::uint32_t e = m.power(var);
        if (e == 0) continue;
        out.add_term(m.with_power(var, e - 1), c * (n.value() * Rational(static_cast<long>(e))));
    }
    return out;
}

void FieldWord::validate() const {
    if (factors.empty()) throw Error(ErrorKind::invalid_argument, "field word must have at least one factor");
    for (const auto& f : factors)
        if (f.twisted != factors.front().twisted)
            throw Error(ErrorKind::invalid_argument, "field word mixes twisted and untwisted factors");
}

FieldValue normal_ordered_apply(const FieldWord& word, const HopfElement& state, const ExponentWindow& window) {
    word.validate();
    if (state.rank() != 0) throw Error(ErrorKind::signature_mismatch, "SignatureMismatch: Fock states have no grouplikes");
    if (window.lo_twice > window.hi_twice) return {};
    return NormalOrderedEvaluator(word, state, window).run();
}

HopfElement field_state(const FieldWord& word) {
    word.validate();
    if (word.twisted())
        throw Error(ErrorKind::twisted_word_has_no_zero_evaluation,
                    "TwistedWordHasNoZeroEvaluation: twisted fields cannot be evaluated at z = 0");
    FieldValue v = normal_ordered_apply(word, HopfElement::one(0), {0, 0});
    auto it = v.find(0);
    return it == v.end() ? HopfElement(0) : it->second;
}

FieldWord state_to_word(const Monomial& state, bool twisted) {
    FieldWord w;
    for (const auto& [id, e] : state.primitives())
        for (std::uint32_t k = 0; k < e; ++k) w.factors.push_back({static_cast<unsigned>(id), twisted});
    return w;
}

BicharSpec fock_bicharacter(unsigned depth) {
    const Lattice unit({{Rational(1)}});
    return restrict_to_primitives(lattice_bicharacter(unit, flm_series(2 * depth), depth));
}

TwistedBulletState twisted_bullet_state(const FieldWord& word, const BicharSpec& r) {
    word.validate();
    if (r.rank() != 0) throw Error(ErrorKind::signature_mismatch, "SignatureMismatch: expected a rank-0 bicharacter");
    std::vector<HopfElement> factors;
    HopfElement monomial = HopfElement::one(0);
    for (const auto& f : word.factors) {
        factors.push_back(HopfElement::primitive(0, static_cast<PrimitiveId>(f.derivative)));
        monomial = monomial * factors.back();
    }
    const BicharSpec r_inv = inverse(r);
    TwistedBulletState out;
    out.eq_route = eq_map(r_inv, monomial);
    out.bullet_route = bullet_word({factors, SymmetricBicharSpec(inverse(symmetrize(r).spec()))});
    out.exp_route = apply_exp_qp(QuadraticOperator{r_inv}, monomial);
    out.routes_agree = out.eq_route == out.bullet_route && out.eq_route == out.exp_route;
    out.state = out.eq_route;
    return out;
}

TwistedBulletState twisted_bullet_state(const FieldWord& word) {
    word.validate();
    unsigned depth = 1;
    for (const auto& f : word.factors) depth = std::max(depth, f.derivative + 1);
    return twisted_bullet_state(word, fock_bicharacter(depth));
}

}  // namespace bichar
