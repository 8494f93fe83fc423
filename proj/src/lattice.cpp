#include "bichar/lattice.hpp"

#include "bichar/error.hpp"
#include "bichar/format.hpp"
#include "bichar/quadop.hpp"
#include "bichar/twisting.hpp"

namespace bichar {

Lattice::Lattice(std::vector<std::vector<Rational>> gram) : gram_(std::move(gram)) {
    const std::size_t n = gram_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (gram_[i].size() != n) throw Error(ErrorKind::invalid_argument, "Gram matrix must be square");
        for (std::size_t j = 0; j < i; ++j)
            if (gram_[i][j] != gram_[j][i]) throw Error(ErrorKind::invalid_argument, "Gram matrix must be symmetric");
    }
    if (determinant().is_zero()) throw Error(ErrorKind::invalid_argument, "Gram matrix must be nondegenerate");
}

Rational Lattice::pairing(const std::vector<std::int64_t>& alpha, const std::vector<std::int64_t>& beta) const {
    Rational out(0);
    for (std::size_t i = 0; i < rank(); ++i) {
        if (alpha[i] == 0) continue;
        for (std::size_t j = 0; j < rank(); ++j)
            if (beta[j] != 0) out += gram_[i][j] * Rational(static_cast<long>(alpha[i] * beta[j]));
    }
    return out;
}

Rational Lattice::determinant() const {
    auto a = gram_;
    const std::size_t n = a.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col].is_zero()) continue;
            const Rational f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
        }
    }
    return det;
}

LaurentPoly SeriesCoefficients::at(unsigned m, unsigned n) const {
    if (m + n > order)
        throw Error(ErrorKind::invalid_argument, "series coefficient c_" + std::to_string(m) + std::to_string(n) +
                                                     " beyond truncation order " + std::to_string(order));
    auto it = c.find({m, n});
    return it == c.end() ? LaurentPoly() : it->second;
}

SeriesCoefficients flm_series(unsigned order) {
    const LaurentPoly one(1);
    const LaurentPoly inv_z = LaurentPoly::monomial(Rational(1), -1);
    const BivariateSeries root_x = series_sqrt(BivariateSeries::constant(order, one) + BivariateSeries::term(order, 1, 0, inv_z));
    const BivariateSeries root_y = series_sqrt(BivariateSeries::constant(order, one) + BivariateSeries::term(order, 0, 1, inv_z));
    const BivariateSeries mean = (root_x + root_y) * LaurentPoly(Rational(1, 2));
    const BivariateSeries series = -series_log(mean);
    SeriesCoefficients out;
    out.order = order;
    for (const auto& [k, v] : series.coefficients()) out.c.emplace(k, v);
    return out;
}

BicharSpec lattice_bicharacter(const Lattice& lattice, const SeriesCoefficients& c, unsigned depth) {
    if (depth < 1) throw Error(ErrorKind::invalid_argument, "depth must be >= 1");
    if (c.order < 2 * depth)
        throw Error(ErrorKind::invalid_argument, "series order " + std::to_string(c.order) + " too small for depth " +
                                                     std::to_string(depth));
    const LaurentPoly c00 = c.at(0, 0);
    if (!c00.is_zero())
        throw Error(ErrorKind::non_constant_grouplike_value,
                    "NonConstantGrouplikeValue: c00 = " + c00.to_string() + " gives no rational (e^{c00})^{<a|b>}");
    const std::size_t rank = lattice.rank();
    const AlgebraSignature sig = AlgebraSignature::lattice(rank, depth);
    BicharSpec r(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        for (std::size_t j = 0; j < rank; ++j) {
            const Rational g = lattice.gram(i, j);
            for (unsigned m = 1; m <= depth; ++m) {
                r.set_gp(i, sig.lattice_id(j + 1, m), c.at(0, m) * g);
                r.set_pg(sig.lattice_id(j + 1, m), i, c.at(m, 0) * g);
                for (unsigned n = 1; n <= depth; ++n)
                    r.set_pp(sig.lattice_id(i + 1, m), sig.lattice_id(j + 1, n), c.at(m, n) * g);
            }
        }
    }
    return r;
}

// ------------------------------------------------------------ the example

bool FlmReport::all_equal() const {
    for (const auto& v : values)
        if (!v.equal) return false;
    for (const auto& id : identities)
        if (!id.equal) return false;
    return true;
}

nlohmann::json FlmReport::to_json() const {
    nlohmann::json series_json = nlohmann::json::object();
    for (const auto& [k, v] : series.c)
        series_json["c" + std::to_string(k.first) + std::to_string(k.second)] = v.to_string();
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& v : values)
        vals.push_back({{"name", v.name},
                        {"value", v.value.to_string()},
                        {"expected", v.expected.to_string()},
                        {"equal", v.equal}});
    nlohmann::json ids = nlohmann::json::array();
    for (const auto& id : identities) {
        nlohmann::json routes = nlohmann::json::object();
        for (const auto& [name, value] : id.routes) routes[name] = render(value, signature);
        ids.push_back({{"name", id.name},
                       {"input", render(id.input, signature)},
                       {"lhs", render(id.routes.front().second, signature)},
                       {"rhs", render(id.expected, signature)},
                       {"routes", routes},
                       {"equal", id.equal}});
    }
    return {{"series", series_json}, {"values", vals}, {"identities", ids}, {"notes", notes}, {"all_equal", all_equal()}};
}

std::string FlmReport::to_text() const {
    std::string out = "series:";
    for (const auto& [k, v] : series.c) out += " c" + std::to_string(k.first) + std::to_string(k.second) + " = " + v.to_string() + ";";
    out += "\n";
    for (const auto& v : values)
        out += std::string(v.equal ? "[ok]   " : "[FAIL] ") + v.name + " = " + v.value.to_string() +
               (v.equal ? "" : "  (expected " + v.expected.to_string() + ")") + "\n";
    for (const auto& id : identities) {
        out += std::string(id.equal ? "[ok]   " : "[FAIL] ") + id.name + ": " + render(id.routes.front().second, signature) + "\n";
        if (!id.equal) {
            for (const auto& [name, value] : id.routes) out += "         " + name + ": " + render(value, signature) + "\n";
            out += "         expected: " + render(id.expected, signature) + "\n";
        }
    }
    for (const auto& n : notes) out += "note: " + n + "\n";
    out += all_equal() ? "all identities hold\n" : "SOME IDENTITIES FAILED\n";
    return out;
}

FlmReport run_flm_example(const Lattice& lattice, unsigned order) {
    const unsigned depth = 1;
    if (order < 2 * depth) order = 2 * depth;
    const std::size_t rank = lattice.rank();
    FlmReport report{AlgebraSignature::lattice(rank, depth), flm_series(order), {}, {}, {}};
    const AlgebraSignature& sig = report.signature;
    const BicharSpec r = lattice_bicharacter(lattice, report.series, depth);
    const SymmetricBicharSpec s = symmetrize(r);
    const QuadraticOperator q{r};

    const LaurentPoly inv_z = LaurentPoly::monomial(Rational(1), -1);
    const LaurentPoly inv_z2 = LaurentPoly::monomial(Rational(1), -2);

    std::vector<std::vector<std::int64_t>> alphas;
    for (std::size_t j = 0; j < rank; ++j) {
        std::vector<std::int64_t> a(rank, 0);
        a[j] = 1;
        alphas.push_back(a);
    }
    if (rank > 1) alphas.emplace_back(rank, 1);
    if (rank > 0) {
        std::vector<std::int64_t> a(rank, 0);
        a[0] = -1;
        alphas.push_back(a);
    }

    auto basis = [&](std::size_t i) {
        std::vector<std::int64_t> v(rank, 0);
        v[i] = 1;
        return v;
    };
    auto e_alpha = [&](const std::vector<std::int64_t>& a) { return HopfElement::grouplike(a); };
    auto prim = [&](std::size_t i) { return HopfElement::primitive(rank, sig.lattice_id(i + 1, 1)); };
    auto name_of = [&](const HopfElement& h) { return render(h, sig); };

    auto add_value = [&](std::string name, const BicharSpec& spec, const HopfElement& a, const HopfElement& b,
                         const LaurentPoly& expected) {
        const LaurentPoly v = evaluate(spec, a, b);
        report.values.push_back({std::move(name), v, expected, v == expected});
    };
    auto add_identity = [&](const HopfElement& input, const HopfElement& expected) {
        IdentityCheck check{"e^Q(" + name_of(input) + ")", input, {}, expected, false};
        check.routes.emplace_back("exp(Q)", apply_exp_q(q, input));
        check.routes.emplace_back("EQ_r", eq_map(r, input));
        check.routes.emplace_back("bullet", bullet_form(r, input));
        check.equal = true;
        for (const auto& [n, v] : check.routes) check.equal = check.equal && v == expected;
        report.identities.push_back(std::move(check));
    };

    for (const auto& a : alphas) {
        for (const auto& b : alphas) {
            const std::string label = "(" + name_of(e_alpha(a)) + ", " + name_of(e_alpha(b)) + ")";
            add_value("r" + label, r, e_alpha(a), e_alpha(b), LaurentPoly(1));
            add_value("s" + label, s, e_alpha(a), e_alpha(b), LaurentPoly(1));
        }
        for (std::size_t i = 0; i < rank; ++i) {
            const Rational g = lattice.pairing(a, basis(i));
            const std::string ea = name_of(e_alpha(a));
            const std::string xi = name_of(prim(i));
            add_value("r(" + ea + ", " + xi + ")", r, e_alpha(a), prim(i), inv_z * Rational(-g / Rational(4)));
            add_value("r(" + xi + ", " + ea + ")", r, prim(i), e_alpha(a), inv_z * Rational(-g / Rational(4)));
            add_value("s(" + ea + ", " + xi + ")", s, e_alpha(a), prim(i), inv_z * Rational(-g / Rational(2)));
        }
    }
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) {
            const std::string label = "(" + name_of(prim(i)) + ", " + name_of(prim(j)) + ")";
            add_value("r" + label, r, prim(i), prim(j), inv_z2 * (lattice.gram(i, j) / Rational(16)));
            add_value("s" + label, s, prim(i), prim(j), inv_z2 * (lattice.gram(i, j) / Rational(8)));
        }

    for (const auto& a : alphas) add_identity(e_alpha(a), e_alpha(a));
    for (std::size_t i = 0; i < rank; ++i) {
        const HopfElement x = prim(i);
        const Rational gii = lattice.gram(i, i);
        add_identity(x, x);
        add_identity(x * x, x * x + HopfElement::constant(rank, inv_z2 * (gii / Rational(8))));
        for (const auto& a : alphas) {
            const HopfElement e = e_alpha(a);
            const Rational g = lattice.pairing(a, basis(i));
            // e^a x_i - <a|a_i>/(2z) e^a
            add_identity(e * x, e * x + e * (inv_z * (-g / Rational(2))));
            // e^a (x_i^2 - 2 x_i <a|a_i>/(2z) + <a|a_i>^2/(4z^2) + <a_i|a_i>/(8z^2))
            const HopfElement expected = e * x * x + e * x * (inv_z * (-g)) +
                                         e * (inv_z2 * (g * g / Rational(4))) + e * (inv_z2 * (gii / Rational(8)));
            add_identity(e * x * x, expected);
        }
    }
    report.notes.push_back(
        "e^Q(a_i(-1)^2) is checked with constant term <a_i|a_i>/(8z^2), the only pairing with a single index i");
    return report;
}

}  // namespace bichar
