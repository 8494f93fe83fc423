#include "bichar/twisting.hpp"

#include "bichar/error.hpp"

namespace bichar {

HopfElement twisted_product(const BicharSpec& r, const HopfElement& a, const HopfElement& b) {
    if (a.rank() != r.rank() || b.rank() != r.rank())
        throw Error(ErrorKind::signature_mismatch, "SignatureMismatch: twisted_product operands and bicharacter ranks differ");
    BicharEvaluator eval(r);
    const Tensor2 da = coproduct(a);
    const Tensor2 db = coproduct(b);
    HopfElement out(r.rank());
    for (const auto& [ka, ca] : da.terms())
        for (const auto& [kb, cb] : db.terms()) {
            const LaurentPoly& value = eval(ka[1], kb[1]);
            if (value.is_zero()) continue;
            out.add_term(ka[0] * kb[0], ca * cb * value);
        }
    return out;
}

HopfElement bullet_product(const SymmetricBicharSpec& s, const HopfElement& a, const HopfElement& b) {
    return twisted_product(s.spec(), a, b);
}

HopfElement bullet_word(const BulletWord& w) {
    if (w.factors.empty()) throw Error(ErrorKind::invalid_argument, "bullet word needs at least one factor");
    HopfElement acc = w.factors.front();
    for (std::size_t i = 1; i < w.factors.size(); ++i) acc = bullet_product(w.bichar, acc, w.factors[i]);
    return acc;
}

HopfElement eq_map(const BicharSpec& r, const HopfElement& a) {
    if (a.rank() != r.rank())
        throw Error(ErrorKind::signature_mismatch, "SignatureMismatch: eq_map operand and bicharacter ranks differ");
    BicharEvaluator eval(r);
    HopfElement out(r.rank());
    for (const auto& [k, c] : coproduct2(a).terms()) {
        const LaurentPoly& value = eval(k[0], k[1]);
        if (!value.is_zero()) out.add_term(k[2], c * value);
    }
    return out;
}

HopfElement bullet_form(const BicharSpec& r, const HopfElement& a) {
    const SymmetricBicharSpec s = symmetrize(r);
    BicharEvaluator eval(r);
    HopfElement out(a.rank());
    for (const auto& [m, c] : a.terms()) {
        const Monomial g = m.grouplike_part();
        BulletWord word{{HopfElement(g, eval(g, g))}, s};
        for (const auto& [id, e] : m.primitives())
            for (std::uint32_t k = 0; k < e; ++k) word.factors.push_back(HopfElement::primitive(a.rank(), id));
        out += bullet_word(word) * c;
    }
    return out;
}

}  // namespace bichar
