#include "bichar/format.hpp"

#include <cctype>
#include <limits>

#include "bichar/error.hpp"

namespace bichar {

namespace {

const std::vector<std::string> kOperandStart = {"integer", "z", "primitive", "e^(", "(", "-"};

class ElementParser {
public:
    ElementParser(std::string_view src, const AlgebraSignature& sig) : src_(src), sig_(sig) {}

    HopfElement parse() {
        HopfElement out = expr();
        skip_ws();
        if (pos_ != src_.size()) fail({"+", "-", "*", "/", "^", "end of input"}, "unexpected character");
        return out;
    }

private:
    [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail) const {
        std::string msg = detail;
        if (pos_ < src_.size()) msg += " '" + std::string(1, src_[pos_]) + "'";
        throw ParseError(pos_, std::move(expected), msg);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail({std::string(1, c)}, "expected '" + std::string(1, c) + "'");
    }

    bool at_digit() {
        skip_ws();
        return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
    }

    mpz_class integer() {
        if (!at_digit()) fail({"integer"}, "expected integer");
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return mpz_class(std::string(src_.substr(start, pos_ - start)));
    }

    std::int64_t small_integer() {
        const std::size_t start = pos_;
        mpz_class v = integer();
        if (!v.fits_slong_p()) {
            pos_ = start;
            fail({"integer"}, "integer too large");
        }
        return v.get_si();
    }

    std::int64_t signed_small_integer() {
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        const std::int64_t v = small_integer();
        return neg ? -v : v;
    }

    // Operand juxtaposed with the previous one, e.g. "2x1" or "x1 x2".
    void reject_juxtaposition() {
        skip_ws();
        if (pos_ >= src_.size()) return;
        const char c = src_[pos_];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '(')
            fail({"+", "-", "*", "/", "^", ")", "end of input"}, "juxtaposition is not allowed");
    }

    HopfElement expr() {
        HopfElement acc(sig_.num_grouplike());
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        HopfElement first = term();
        acc += negate ? -first : first;
        while (true) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    HopfElement term() {
        HopfElement acc = unary();
        while (true) {
            skip_ws();
            if (accept('*')) {
                acc = acc * unary();
            } else if (peek('/')) {
                const std::size_t at = pos_;
                ++pos_;
                HopfElement d = unary();
                acc = acc * invert(d, at);
            } else {
                break;
            }
        }
        return acc;
    }

    HopfElement unary() {
        if (accept('-')) return -unary();
        return power();
    }

    HopfElement power() {
        HopfElement base = atom();
        if (accept('^')) {
            const std::size_t at = pos_;
            const std::int64_t k = signed_small_integer();
            HopfElement b = k < 0 ? invert(base, at) : base;
            HopfElement out = HopfElement::one(sig_.num_grouplike());
            for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out = out * b;
            base = std::move(out);
        }
        reject_juxtaposition();
        return base;
    }

    HopfElement invert(const HopfElement& d, std::size_t at) {
        if (d.size() != 1 || !d.terms().begin()->first.is_grouplike() || !d.terms().begin()->second.is_unit()) {
            pos_ = at;
            fail({}, "only single-term grouplike elements with invertible coefficients can be inverted");
        }
        const auto& [m, c] = *d.terms().begin();
        std::vector<std::int64_t> g = m.group();
        for (auto& v : g) v = -v;
        return HopfElement(Monomial::grouplike(std::move(g)), c.inverse());
    }

    HopfElement atom() {
        skip_ws();
        if (pos_ >= src_.size()) fail(kOperandStart, "unexpected end of input");
        const char c = src_[pos_];
        const std::size_t rank = sig_.num_grouplike();
        if (std::isdigit(static_cast<unsigned char>(c))) return HopfElement::constant(rank, LaurentPoly(Rational(integer())));
        if (c == '(') {
            ++pos_;
            HopfElement inner = expr();
            expect(')');
            return inner;
        }
        if (c == 'z') {
            ++pos_;
            return HopfElement::constant(rank, LaurentPoly::monomial(Rational(1), 1));
        }
        if (c == 'e') {
            ++pos_;
            expect('^');
            expect('(');
            std::vector<std::int64_t> g = linear_combination();
            expect(')');
            return HopfElement::grouplike(std::move(g));
        }
        if (c == 'x' || c == 'y') return HopfElement::primitive(rank, primitive());
        fail(kOperandStart, "unexpected character");
    }

    PrimitiveId primitive() {
        const std::size_t start = pos_;
        const char head = src_[pos_++];
        switch (sig_.naming()) {
            case AlgebraSignature::Naming::indexed: {
                if (head != 'x' || !(pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))) {
                    pos_ = start;
                    fail({"xN"}, "expected primitive generator");
                }
                const std::int64_t n = small_integer();
                if (n < 1 || n > std::numeric_limits<PrimitiveId>::max()) {
                    pos_ = start;
                    throw Error(ErrorKind::unknown_generator, "UnknownGenerator: x" + std::to_string(n));
                }
                return static_cast<PrimitiveId>(n - 1);
            }
            case AlgebraSignature::Naming::lattice: {
                if (head != 'x' || !(pos_ < src_.size() && src_[pos_] == '(')) {
                    pos_ = start;
                    fail({"x(i,m)"}, "expected lattice generator");
                }
                ++pos_;
                const std::int64_t i = small_integer();
                expect(',');
                const std::int64_t m = small_integer();
                expect(')');
                if (i < 1 || m < 1) throw Error(ErrorKind::unknown_generator, "UnknownGenerator: indices start at 1");
                return sig_.lattice_id(static_cast<std::size_t>(i), static_cast<unsigned>(m));
            }
            case AlgebraSignature::Naming::half_integer: {
                if (head != 'y' || !(pos_ < src_.size() && src_[pos_] == '(')) {
                    pos_ = start;
                    fail({"y(k/2)"}, "expected half-integer generator");
                }
                ++pos_;
                const std::int64_t k = small_integer();
                expect('/');
                const std::size_t two_at = pos_;
                if (small_integer() != 2) {
                    pos_ = two_at;
                    fail({"2"}, "expected denominator 2");
                }
                expect(')');
                if (k < 1 || k % 2 == 0) throw Error(ErrorKind::unknown_generator, "UnknownGenerator: y(" + std::to_string(k) + "/2)");
                return static_cast<PrimitiveId>((k - 1) / 2);
            }
        }
        fail({}, "unsupported naming");
    }

    std::vector<std::int64_t> linear_combination() {
        std::vector<std::int64_t> g(sig_.num_grouplike(), 0);
        bool first = true;
        while (true) {
            std::int64_t sign = 1;
            if (accept('-'))
                sign = -1;
            else if (!accept('+') && !first)
                break;
            first = false;
            std::int64_t coeff = 1;
            if (at_digit()) {
                coeff = small_integer();
                if (!accept('*')) {
                    if (coeff == 0) continue;
                    fail({"*"}, "expected '*' before grouplike generator");
                }
            }
            skip_ws();
            if (!(pos_ < src_.size() && src_[pos_] == 'a')) fail({"aN"}, "expected grouplike generator");
            ++pos_;
            const std::size_t at = pos_;
            const std::int64_t i = small_integer();
            if (i < 1 || static_cast<std::size_t>(i) > g.size()) {
                pos_ = at;
                throw Error(ErrorKind::unknown_generator, "UnknownGenerator: a" + std::to_string(i));
            }
            g[static_cast<std::size_t>(i - 1)] += sign * coeff;
            skip_ws();
            if (!(peek('+') || peek('-'))) break;
        }
        return g;
    }

    std::string_view src_;
    const AlgebraSignature& sig_;
    std::size_t pos_ = 0;
};

std::string render_linear(const std::vector<std::int64_t>& g) {
    std::string out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const std::int64_t v = g[i];
        if (v == 0) continue;
        const std::uint64_t mag = v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
        if (out.empty())
            out += v < 0 ? "-" : "";
        else
            out += v < 0 ? " - " : " + ";
        if (mag != 1) out += std::to_string(mag) + "*";
        out += "a" + std::to_string(i + 1);
    }
    return out;
}

}  // namespace

HopfElement parse_element(std::string_view src, const AlgebraSignature& sig) { return ElementParser(src, sig).parse(); }

LaurentPoly parse_laurent(std::string_view src) {
    const AlgebraSignature sig = AlgebraSignature::plain(0);
    const HopfElement e = parse_element(src, sig);
    if (e.is_zero()) return LaurentPoly();
    if (e.size() != 1 || !e.terms().begin()->first.is_unit())
        throw ParseError(0, {"coefficient"}, "expected a coefficient in Q[z, z^-1]");
    return e.terms().begin()->second;
}

PrimitiveId parse_primitive_name(std::string_view name, const AlgebraSignature& sig) {
    const HopfElement e = parse_element(name, sig);
    if (e.size() != 1 || e.terms().begin()->first.degree() != 1 || e.terms().begin()->second != LaurentPoly(1))
        throw ParseError(0, {"primitive"}, "expected a single primitive generator");
    return e.terms().begin()->first.primitives().front().first;
}

std::string render(const Monomial& m, const AlgebraSignature& sig) {
    std::string out;
    const std::string lin = render_linear(m.group());
    if (!lin.empty()) out = "e^(" + lin + ")";
    for (const auto& [id, e] : m.primitives()) {
        if (!out.empty()) out += "*";
        out += sig.primitive_name(id);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string render(const HopfElement& a, const AlgebraSignature& sig) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : a.terms()) {
        const std::string ms = render(m, sig);
        bool negative = false;
        std::string body;
        if (c.is_unit()) {
            const auto& [e, k] = *c.terms().begin();
            negative = k.sign() < 0;
            const Rational mag = negative ? -k : k;
            std::vector<std::string> parts;
            if (!mag.is_one() || (e == 0 && ms.empty())) parts.push_back(mag.to_string());
            if (e != 0) parts.push_back(e == 1 ? "z" : "z^" + std::to_string(e));
            if (!ms.empty()) parts.push_back(ms);
            for (std::size_t i = 0; i < parts.size(); ++i) body += (i ? "*" : "") + parts[i];
        } else {
            body = "(" + c.to_string() + ")";
            if (!ms.empty()) body += "*" + ms;
        }
        if (out.empty())
            out = negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out;
}

nlohmann::json to_json(const HopfElement& a, const AlgebraSignature& sig) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : a.terms()) {
        nlohmann::json prims = nlohmann::json::array();
        for (const auto& [id, e] : m.primitives()) prims.push_back({sig.primitive_name(id), e});
        terms.push_back({{"group", m.group()}, {"primitives", prims}, {"coeff", to_json(c)}});
    }
    return {{"text", render(a, sig)}, {"terms", terms}};
}

std::string render(const BicharSpec& r, const AlgebraSignature& sig) {
    std::string out = "gg = [";
    for (std::size_t i = 0; i < r.rank(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < r.rank(); ++j) out += (j ? ", " : "") + r.gg(i, j).to_string();
        out += "]";
    }
    out += "]\n";
    for (const auto& [k, v] : r.gp_table())
        out += "gp(a" + std::to_string(k.first + 1) + ", " + sig.primitive_name(k.second) + ") = " + v.to_string() + "\n";
    for (const auto& [k, v] : r.pg_table())
        out += "pg(" + sig.primitive_name(k.first) + ", a" + std::to_string(k.second + 1) + ") = " + v.to_string() + "\n";
    for (const auto& [k, v] : r.pp_table())
        out += "pp(" + sig.primitive_name(k.first) + ", " + sig.primitive_name(k.second) + ") = " + v.to_string() + "\n";
    return out;
}

nlohmann::json to_json(const BicharSpec& r, const AlgebraSignature& sig) {
    nlohmann::json gg = nlohmann::json::array();
    for (std::size_t i = 0; i < r.rank(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < r.rank(); ++j) row.push_back(r.gg(i, j).to_string());
        gg.push_back(row);
    }
    nlohmann::json gp = nlohmann::json::array();
    for (const auto& [k, v] : r.gp_table())
        gp.push_back({{"i", k.first + 1}, {"m", sig.primitive_name(k.second)}, {"value", v.to_string()}});
    nlohmann::json pg = nlohmann::json::array();
    for (const auto& [k, v] : r.pg_table())
        pg.push_back({{"m", sig.primitive_name(k.first)}, {"i", k.second + 1}, {"value", v.to_string()}});
    nlohmann::json pp = nlohmann::json::array();
    for (const auto& [k, v] : r.pp_table())
        pp.push_back({{"m", sig.primitive_name(k.first)}, {"n", sig.primitive_name(k.second)}, {"value", v.to_string()}});
    return {{"rank", r.rank()}, {"gg", gg}, {"gp", gp}, {"pg", pg}, {"pp", pp}};
}

}  // namespace bichar
