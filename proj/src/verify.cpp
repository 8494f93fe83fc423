#include "bichar/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <optional>

#include "bichar/error.hpp"
#include "bichar/format.hpp"
#include "bichar/heisenberg.hpp"
#include "bichar/lattice.hpp"
#include "bichar/quadop.hpp"
#include "bichar/random.hpp"
#include "bichar/twisting.hpp"

namespace bichar {

namespace {

using Failure = std::optional<std::string>;
using Check = std::function<Failure(RandomSource&)>;

std::uint64_t mix(std::uint64_t seed, const std::string& name) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return seed ^ h;
}

PropertyResult run_property(const std::string& suite, const std::string& name, std::uint64_t seed, std::size_t cases,
                            const Check& check) {
    PropertyResult result{suite, name, 0, 0, {}, 0.0};
    RandomSource rng(mix(seed, suite + "/" + name));
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < cases; ++i) {
        Failure f;
        try {
            f = check(rng);
        } catch (const std::exception& e) {
            f = std::string("exception: ") + e.what();
        }
        ++result.cases;
        if (f) {
            if (result.failures == 0) result.first_failure = "case " + std::to_string(i) + ": " + *f;
            ++result.failures;
        }
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::string show(const HopfElement& a) { return render(a, AlgebraSignature::plain(a.rank())); }

Failure differ(const std::string& what, const HopfElement& lhs, const HopfElement& rhs) {
    if (lhs == rhs) return std::nullopt;
    return what + ": " + show(lhs) + " != " + show(rhs);
}

Failure differ(const std::string& what, const LaurentPoly& lhs, const LaurentPoly& rhs) {
    if (lhs == rhs) return std::nullopt;
    return what + ": " + lhs.to_string() + " != " + rhs.to_string();
}

Failure first_of(std::initializer_list<Failure> fs) {
    for (const auto& f : fs)
        if (f) return f;
    return std::nullopt;
}

struct Shape {
    std::size_t rank;
    std::size_t prims;
};

Shape draw_shape(RandomSource& rng, std::size_t max_rank = 2, std::size_t max_prims = 3) {
    return {static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_rank))),
            static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_prims)))};
}

HopfElement single(const Monomial& m) { return HopfElement(m); }

}  // namespace

PropertyResults verify_hopf_axioms(std::uint64_t seed, std::size_t cases) {
    const std::string suite = "hopf";
    PropertyResults out;
    auto element = [](RandomSource& rng) {
        const Shape sh = draw_shape(rng);
        return rng.element(sh.rank, sh.prims, 4, 4);
    };
    out.push_back(run_property(suite, "coassociativity", seed, cases, [&](RandomSource& rng) -> Failure {
        const HopfElement a = element(rng);
        const Tensor2 d = coproduct(a);
        const Tensor3 left = coproduct_left(d);
        if (left != coproduct_right(d)) return "(D x Id)D != (Id x D)D for " + show(a);
        if (left != coproduct2(a)) return "coproduct2 != (D x Id)D for " + show(a);
        return std::nullopt;
    }));
    out.push_back(run_property(suite, "cocommutativity", seed, cases, [&](RandomSource& rng) -> Failure {
        const HopfElement a = element(rng);
        const Tensor2 d = coproduct(a);
        if (swap(d) != d) return "swap(D a) != D a for " + show(a);
        return std::nullopt;
    }));
    out.push_back(run_property(suite, "counit", seed, cases, [&](RandomSource& rng) -> Failure {
        const HopfElement a = element(rng);
        const Tensor2 d = coproduct(a);
        return first_of({differ("(eta x Id)D", counit_first(d, a.rank()), a),
                         differ("(Id x eta)D", counit_second(d, a.rank()), a)});
    }));
    out.push_back(run_property(suite, "antipode", seed, cases, [&](RandomSource& rng) -> Failure {
        const HopfElement a = element(rng);
        const Tensor2 d = coproduct(a);
        const HopfElement unit = HopfElement::constant(a.rank(), counit(a));
        return first_of({differ("S(a')a''", antipode_first_multiply(d, a.rank()), unit),
                         differ("a'S(a'')", antipode_second_multiply(d, a.rank()), unit)});
    }));
    out.push_back(run_property(suite, "operator_coproduct", seed, cases, [&](RandomSource& rng) -> Failure {
        const HopfElement a = element(rng);
        if (operator_coproduct(a) != coproduct(a)) return "operator route differs for " + show(a);
        return std::nullopt;
    }));
    out.push_back(run_property(suite, "coproduct_multiplicative", seed, cases, [&](RandomSource& rng) -> Failure {
        const Shape sh = draw_shape(rng);
        const HopfElement a = rng.element(sh.rank, sh.prims, 3, 2);
        const HopfElement b = rng.element(sh.rank, sh.prims, 3, 2);
        if (coproduct(a * b) != product(coproduct(a), coproduct(b)))
            return "D(ab) != D(a)D(b) for a = " + show(a) + ", b = " + show(b);
        return std::nullopt;
    }));
    return out;
}

PropertyResults verify_bicharacter_laws(std::uint64_t seed, std::size_t cases) {
    const std::string suite = "bicharacter";
    PropertyResults out;
    out.push_back(run_property(suite, "product_law", seed, cases, [&](RandomSource& rng) -> Failure {
        const Shape sh = draw_shape(rng);
        const BicharSpec r = rng.bicharacter(sh.rank, sh.prims);
        const HopfElement a = rng.element(sh.rank, sh.prims, 2, 2);
        const HopfElement b = rng.element(sh.rank, sh.prims, 2, 2);
        const HopfElement c = rng.element(sh.rank, sh.prims, 2, 3);
        BicharEvaluator eval(r);
        LaurentPoly rhs;
        for (const auto& [k, v] : coproduct(c).terms()) rhs += v * eval(a, single(k[0])) * eval(b, single(k[1]));
        return differ("r(ab (x) c)", eval(a * b, c), rhs);
    }));
    out.push_back(run_property(suite, "mirror_law", seed, cases, [&](RandomSource& rng) -> Failure {
        const Shape sh = draw_shape(rng);
        const BicharSpec r = rng.bicharacter(sh.rank, sh.prims);
        const HopfElement a = rng.element(sh.rank, sh.prims, 2, 3);
        const HopfElement b = rng.element(sh.rank, sh.prims, 2, 2);
        const HopfElement c = rng.element(sh.rank, sh.prims, 2, 2);
        BicharEvaluator eval(r);
        LaurentPoly rhs;
        for (const auto& [k, v] : coproduct(a).terms()) rhs += v * eval(single(k[0]), b) * eval(single(k[1]), c);
        return differ("r(a (x) bc)", eval(a, b * c), rhs);
    }));
    out.push_back(run_property(suite, "unit_law", seed, cases, [&](RandomSource& rng) -> Failure {
        const Shape sh = draw_shape(rng);
        const BicharSpec r = rng.bicharacter(sh.rank, sh.prims);
        const HopfElement a = rng.element(sh.rank, sh.prims, 4, 3);
        const HopfElement one = HopfElement::one(sh.rank);
        return first_of({differ("r(1 (x) a)", evaluate(r, one, a), counit(a)),
                         differ("r(a (x) 1)", evaluate(r, a, one), counit(a))});
    }));
    return out;
}

PropertyResults verify_convolution_group(std::uint64_t seed, std::size_t cases) {
    const std::string suite = "convolution";
    PropertyResults out;
    out.push_back(run_property(suite, "table_matches_sweedler", seed, cases, [&](RandomSource& rng) -> Failure {
        const Shape sh = draw_shape(rng);
        const BicharSpec r1 = rng.bicharacter(sh.rank, sh.prims);
        const BicharSpec r2 = rng.bicharacter(sh.rank, sh.prims);
        const HopfElement a = rng.element(sh.rank, sh.prims, 2, 2);
        const HopfElement b = rng.element(sh.rank, sh.prims, 2, 2);
        BicharEvaluator e1(r1);
        BicharEvaluator e2(r2);
        LaurentPoly rhs;
        const Tensor2 da = coproduct(a);
        const Tensor2 db = coproduct(b);
        for (const auto& [ka, ca] : da.terms())
            for (const auto& [kb, cb] : db.terms()) rhs += ca * cb * e1(ka[0], kb[0]) * e2(ka[1], kb[1]);
        return differ("(r1 o r2)(a (x) b)", evaluate(convolve(r1, r2), a, b), rhs);
    }));
    out.push_back(run_property(suite, "group_axioms", seed, cases, [&](RandomSource& rng) -> Failure {
        const Shape sh = draw_shape(rng);
        const BicharSpec r1 = rng.bicharacter(sh.rank, sh.prims);
        const BicharSpec r2 = rng.bicharacter(sh.rank, sh.prims);
        const BicharSpec r3 = rng.bicharacter(sh.rank, sh.prims);
        const BicharSpec id = BicharSpec::identity(sh.rank);
        if (convolve(r1, r2) != convolve(r2, r1)) return std::string("convolution not commutative");
        if (convolve(convolve(r1, r2), r3) != convolve(r1, convolve(r2, r3))) return std::string("convolution not associative");
        if (convolve(id, r1) != r1 || convolve(r1, id) != r1) return std::string("identity is not neutral");
        if (convolve(r1, inverse(r1)) != id || convolve(inverse(r1), r1) != id) return std::string("inverse fails");
        if (transpose(transpose(r1)) != r1) return std::string("transpose is not an involution");
        return std::nullopt;
    }));
    out.push_back(run_property(suite, "inverse_is_antipode_twist", seed, cases, [&](RandomSource& rng) -> Failure {
        const Shape sh = draw_shape(rng);
        const BicharSpec r = rng.bicharacter(sh.rank, sh.prims);
        const HopfElement a = rng.element(sh.rank, sh.prims, 3, 3);
        const HopfElement b = rng.element(sh.rank, sh.prims, 3, 3);
        BicharEvaluator eval(r);
        // The group inverse evaluated on pairs also agrees with the Sweedler sum.
        LaurentPoly id_value;
        const BicharSpec r_inv = inverse(r);
        BicharEvaluator inv(r_inv);
        const Tensor2 da = coproduct(a);
        const Tensor2 db = coproduct(b);
        for (const auto& [ka, ca] : da.terms())
            for (const auto& [kb, cb] : db.terms()) id_value += ca * cb * eval(ka[0], kb[0]) * inv(ka[1], kb[1]);
        return first_of({differ("r^-1(a (x) b)", inv(a, b), eval(antipode(a), b)),
                         differ("(r o r^-1)(a (x) b)", id_value, counit(a) * counit(b))});
    }));
    out.push_back(run_property(suite, "transpose_and_symmetrization", seed, cases, [&](RandomSource& rng) -> Failure {
        const Shape sh = draw_shape(rng);
        const BicharSpec r = rng.bicharacter(sh.rank, sh.prims);
        const HopfElement a = rng.element(sh.rank, sh.prims, 3, 3);
        const HopfElement b = rng.element(sh.rank, sh.prims, 3, 3);
        const SymmetricBicharSpec s = symmetrize(r);
        return first_of({differ("r^t(a (x) b)", evaluate(transpose(r), a, b), evaluate(r, b, a)),
                         differ("s(a (x) b) vs s(b (x) a)", evaluate(s, a, b), evaluate(s, b, a))});
    }));
    return out;
}

PropertyResults verify_twisting(std::uint64_t seed, std::size_t cases) {
    const std::string suite = "twisting";
    PropertyResults out;
    out.push_back(run_property(suite, "associativity", seed, cases, [&](RandomSource& rng) -> Failure {
        const Shape sh = draw_shape(rng);
        const BicharSpec r = rng.bicharacter(sh.rank, sh.prims);
        const HopfElement a = rng.element(sh.rank, sh.prims, 2, 2);
        const HopfElement b = rng.element(sh.rank, sh.prims, 2, 2);
        const HopfElement c = rng.element(sh.rank, sh.prims, 2, 2);
        return differ("m_r(m_r(a,b),c) vs m_r(a,m_r(b,c))", twisted_product(r, twisted_product(r, a, b), c),
                      twisted_product(r, a, twisted_product(r, b, c)));
    }));
    out.push_back(run_property(suite, "unit", seed, cases, [&](RandomSource& rng) -> Failure {
        const Shape sh = draw_shape(rng);
        const BicharSpec r = rng.bicharacter(sh.rank, sh.prims);
        const HopfElement a = rng.element(sh.rank, sh.prims, 4, 4);
        const HopfElement one = HopfElement::one(sh.rank);
        return first_of({differ("m_r(1,a)", twisted_product(r, one, a), a), differ("m_r(a,1)", twisted_product(r, a, one), a)});
    }));
    out.push_back(run_property(suite, "bullet_commutative", seed, cases, [&](RandomSource& rng) -> Failure {
        const Shape sh = draw_shape(rng);
        const SymmetricBicharSpec s = symmetrize(rng.bicharacter(sh.rank, sh.prims));
        const HopfElement a = rng.element(sh.rank, sh.prims, 3, 3);
        const HopfElement b = rng.element(sh.rank, sh.prims, 3, 3);
        return differ("a.b vs b.a", bullet_product(s, a, b), bullet_product(s, b, a));
    }));
    return out;
}

PropertyResults verify_eq_map(std::uint64_t seed, std::size_t cases) {
    const std::string suite = "eq";
    PropertyResults out;
    out.push_back(run_property(suite, "homomorphism", seed, cases, [&](RandomSource& rng) -> Failure {
        const Shape sh = draw_shape(rng);
        const BicharSpec r = rng.bicharacter(sh.rank, sh.prims);
        const HopfElement a = rng.element(sh.rank, sh.prims, 3, 2);
        const HopfElement b = rng.element(sh.rank, sh.prims, 3, 2);
        return differ("EQ(ab) vs EQ(a).EQ(b)", eq_map(r, a * b), bullet_product(symmetrize(r), eq_map(r, a), eq_map(r, b)));
    }));
    out.push_back(run_property(suite, "composition", seed, cases, [&](RandomSource& rng) -> Failure {
        const Shape sh = draw_shape(rng);
        const BicharSpec r1 = rng.bicharacter(sh.rank, sh.prims);
        const BicharSpec r2 = rng.bicharacter(sh.rank, sh.prims);
        const HopfElement a = rng.element(sh.rank, sh.prims, 4, 4);
        return differ("EQ_{r1 o r2} vs EQ_r1 EQ_r2", eq_map(convolve(r1, r2), a), eq_map(r1, eq_map(r2, a)));
    }));
    out.push_back(run_property(suite, "invertibility", seed, cases, [&](RandomSource& rng) -> Failure {
        const Shape sh = draw_shape(rng);
        const BicharSpec r = rng.bicharacter(sh.rank, sh.prims);
        const HopfElement a = rng.element(sh.rank, sh.prims, 4, 4);
        return first_of({differ("EQ_{r^-1} EQ_r a", eq_map(inverse(r), eq_map(r, a)), a),
                         differ("EQ_r EQ_{r^-1} a", eq_map(r, eq_map(inverse(r), a)), a)});
    }));
    out.push_back(run_property(suite, "interchange", seed, cases, [&](RandomSource& rng) -> Failure {
        const Shape sh = draw_shape(rng);
        const BicharSpec r = rng.bicharacter(sh.rank, sh.prims);
        const SymmetricBicharSpec s1 = symmetrize(rng.bicharacter(sh.rank, sh.prims));
        const SymmetricBicharSpec s2(convolve(symmetrize(r), s1));
        const HopfElement a = rng.element(sh.rank, sh.prims, 2, 2);
        const HopfElement b = rng.element(sh.rank, sh.prims, 2, 2);
        return differ("EQ(a ._s1 b) vs EQ(a) ._s2 EQ(b)", eq_map(r, bullet_product(s1, a, b)),
                      bullet_product(s2, eq_map(r, a), eq_map(r, b)));
    }));
    return out;
}

PropertyResults verify_exp_q(std::uint64_t seed, std::size_t cases) {
    const std::string suite = "expq";
    PropertyResults out;
    out.push_back(run_property(suite, "equals_eq_map", seed, cases, [&](RandomSource& rng) -> Failure {
        const Shape sh = draw_shape(rng);
        const BicharSpec r = rng.bicharacter(sh.rank, sh.prims);
        const HopfElement a = rng.element(sh.rank, sh.prims, 4, 4);
        return differ("exp(Q)(a) vs EQ_r(a) for a = " + show(a), apply_exp_q(QuadraticOperator{r}, a), eq_map(r, a));
    }));
    out.push_back(run_property(suite, "stages_commute", seed, cases, [&](RandomSource& rng) -> Failure {
        const Shape sh = draw_shape(rng);
        const QuadraticOperator q{rng.bicharacter(sh.rank, sh.prims)};
        const HopfElement a = rng.element(sh.rank, sh.prims, 3, 4);
        std::array<QuadStage, 3> order{QuadStage::q0, QuadStage::q1, QuadStage::qp};
        const HopfElement reference = apply_exp_q(q, a);
        do {
            if (apply_exp_q_ordered(q, a, order) != reference) return std::string("stage order changes exp(Q)(a)");
        } while (std::next_permutation(order.begin(), order.end()));
        return std::nullopt;
    }));
    out.push_back(run_property(suite, "equals_bullet_form", seed, cases, [&](RandomSource& rng) -> Failure {
        const Shape sh = draw_shape(rng);
        const BicharSpec r = rng.bicharacter(sh.rank, sh.prims);
        const HopfElement a = rng.element(sh.rank, sh.prims, 3, 4);
        return differ("exp(Q)(a) vs a^bullet", apply_exp_q(QuadraticOperator{r}, a), bullet_form(r, a));
    }));
    out.push_back(run_property(suite, "homomorphism", seed, cases, [&](RandomSource& rng) -> Failure {
        const Shape sh = draw_shape(rng);
        const BicharSpec r = rng.bicharacter(sh.rank, sh.prims);
        const QuadraticOperator q{r};
        const HopfElement a = rng.element(sh.rank, sh.prims, 3, 2);
        const HopfElement b = rng.element(sh.rank, sh.prims, 3, 2);
        return differ("exp(Q)(ab)", apply_exp_q(q, a * b), bullet_product(symmetrize(r), apply_exp_q(q, a), apply_exp_q(q, b)));
    }));
    out.push_back(run_property(suite, "degree_bound", seed, cases, [&](RandomSource& rng) -> Failure {
        const Shape sh = draw_shape(rng, 0, 3);
        const QuadraticOperator q{rng.bicharacter(0, sh.prims)};
        const HopfElement p = rng.element(0, sh.prims, 4, 6);
        const std::uint64_t d = p.degree();
        HopfElement power = p;
        for (std::uint64_t k = 1; k <= d / 2 + 1; ++k) {
            power = apply_qp(q, power);
            if (2 * k > d && !power.is_zero()) return "Qp^" + std::to_string(k) + " nonzero on degree " + std::to_string(d);
        }
        return std::nullopt;
    }));
    return out;
}

PropertyResults verify_symmetrization_dependence(std::uint64_t seed, std::size_t cases) {
    const std::string suite = "symmetrization";
    PropertyResults out;
    out.push_back(run_property(suite, "exp_qp_depends_on_s_only", seed, cases, [&](RandomSource& rng) -> Failure {
        const auto prims = static_cast<std::size_t>(rng.uniform(1, 3));
        const BicharSpec r = rng.bicharacter(0, prims);
        BicharSpec r2 = r;
        for (PrimitiveId m = 0; m < prims; ++m)
            for (PrimitiveId n = m + 1; n < prims; ++n) {
                const LaurentPoly t = rng.laurent(2);
                r2.set_pp(m, n, r.pp(m, n) + t);
                r2.set_pp(n, m, r.pp(n, m) - t);
            }
        if (symmetrize(r) != symmetrize(r2)) return std::string("perturbation changed the symmetrization");
        const HopfElement a = rng.element(0, prims, 4, 4);
        const QuadraticOperator q1{r};
        const QuadraticOperator q2{r2};
        return first_of({differ("exp(Qp) for r vs r'", apply_exp_qp(q1, a), apply_exp_qp(q2, a)),
                         differ("exp(Qp) vs symmetrized operator", apply_exp_qp(q1, a),
                                apply_exp_qp(symmetrized_operator(q1), a))});
    }));
    return out;
}

PropertyResults verify_grouplike_root(std::uint64_t seed, std::size_t cases) {
    const std::string suite = "root";
    PropertyResults out;
    out.push_back(run_property(suite, "resymmetrizes", seed, cases, [&](RandomSource& rng) -> Failure {
        const Shape sh = draw_shape(rng, 3, 3);
        const SymmetricBicharSpec s = symmetrize(rng.bicharacter(sh.rank, sh.prims));
        const BicharSpec root = grouplike_root(s);
        if (symmetrize(root) != s) return std::string("symmetrize(grouplike_root(s)) != s");
        return std::nullopt;
    }));
    out.push_back(run_property(suite, "fails_exactly_on_non_squares", seed, cases, [&](RandomSource& rng) -> Failure {
        const auto rank = static_cast<std::size_t>(rng.uniform(1, 3));
        BicharSpec t(rank);
        bool expect_root = true;
        for (std::size_t i = 0; i < rank; ++i) {
            const Rational v = rng.rational(true);
            t.set_gg(i, i, v);
            // Brute-force search for a/b with (a/b)^2 == v; |v| <= 5 and its denominator <= 4.
            bool found = false;
            for (long a = 0; a <= 5 && !found; ++a)
                for (long b = 1; b <= 4 && !found; ++b) found = Rational(a * a, b * b) == v;
            expect_root = expect_root && found;
            for (std::size_t j = i + 1; j < rank; ++j) {
                const Rational w = rng.rational(true);
                t.set_gg(i, j, w);
                t.set_gg(j, i, w);
            }
        }
        const SymmetricBicharSpec s(t);
        try {
            const BicharSpec root = grouplike_root(s);
            if (!expect_root) return std::string("root found for a non-square diagonal");
            if (symmetrize(root) != s) return std::string("root does not re-symmetrize");
        } catch (const NoSquareRoot&) {
            if (expect_root) return std::string("NoSquareRoot on a square diagonal");
        }
        return std::nullopt;
    }));
    return out;
}

PropertyResults verify_series(std::uint64_t seed, std::size_t cases) {
    const std::string suite = "series";
    PropertyResults out;
    out.push_back(run_property(suite, "laurent_ring_axioms", seed, cases, [&](RandomSource& rng) -> Failure {
        const LaurentPoly a = rng.laurent(8);
        const LaurentPoly b = rng.laurent(8);
        const LaurentPoly c = rng.laurent(8);
        return first_of({differ("(a+b)+c", (a + b) + c, a + (b + c)), differ("a(b+c)", a * (b + c), a * b + a * c),
                         differ("ab", a * b, b * a), differ("a + (-a)", a + (-a), LaurentPoly())});
    }));
    auto series_check = [&](const std::string& name, auto fn) {
        out.push_back(run_property(suite, name, seed, cases, [fn](RandomSource& rng) -> Failure {
            const auto order = static_cast<unsigned>(rng.uniform(0, 6));
            return fn(rng, order);
        }));
    };
    series_check("sqrt_squares_back", [](RandomSource& rng, unsigned order) -> Failure {
        const BivariateSeries s = rng.unit_series(order);
        const BivariateSeries t = series_sqrt(s);
        if (t * t != s) return "sqrt(s)^2 != s for s = " + s.to_string();
        if (t.constant_term() != LaurentPoly(1)) return std::string("sqrt has non-unit constant term");
        return std::nullopt;
    });
    series_check("log_of_product", [](RandomSource& rng, unsigned order) -> Failure {
        const BivariateSeries s = rng.unit_series(order);
        const BivariateSeries t = rng.unit_series(order);
        if (series_log(s * t) != series_log(s) + series_log(t)) return std::string("log(st) != log s + log t");
        return std::nullopt;
    });
    series_check("exp_inverts_log", [](RandomSource& rng, unsigned order) -> Failure {
        const BivariateSeries s = rng.unit_series(order);
        if (series_exp(series_log(s)) != s) return "exp(log s) != s for s = " + s.to_string();
        return std::nullopt;
    });
    return out;
}

PropertyResults verify_heisenberg(std::uint64_t seed, std::size_t cases) {
    const std::string suite = "heisenberg";
    PropertyResults out;
    for (bool twisted : {false, true}) {
        const std::string name = twisted ? "commutators_twisted" : "commutators_untwisted";
        out.push_back(run_property(suite, name, seed, cases, [twisted](RandomSource& rng) -> Failure {
            const HopfElement v = rng.element(0, 5, 3, 3);
            // All modes with |m|, |n| <= 4.
            std::vector<Mode> modes;
            if (twisted) {
                for (std::int64_t k = -7; k <= 7; k += 2) modes.push_back(Mode::half(k));
            } else {
                for (std::int64_t k = -4; k <= 4; ++k) modes.push_back(Mode::integer(k));
            }
            for (const Mode m : modes)
                for (const Mode n : modes) {
                    const HopfElement lhs = apply_mode(m, apply_mode(n, v, twisted), twisted) -
                                            apply_mode(n, apply_mode(m, v, twisted), twisted);
                    const HopfElement rhs = m.twice + n.twice == 0 ? v * LaurentPoly(m.value()) : HopfElement(0);
                    if (lhs != rhs)
                        return "[h_" + m.value().to_string() + ", h_" + n.value().to_string() + "] on " + show(v);
                }
            return std::nullopt;
        }));
    }
    {
        // Every monomial x_{n1}...x_{nk} with sum n_i <= 6.
        std::vector<Monomial> states;
        std::function<void(PrimitiveId, unsigned, Monomial)> gen = [&](PrimitiveId min_id, unsigned budget, Monomial m) {
            states.push_back(m);
            for (PrimitiveId id = min_id; id + 1 <= budget; ++id) gen(id, budget - (id + 1), m * Monomial::primitive(0, id));
        };
        gen(0, 6, Monomial::unit(0));
        std::size_t index = 0;
        out.push_back(run_property(suite, "field_state_round_trip", seed, states.size(), [&](RandomSource&) -> Failure {
            const Monomial& m = states[index++];
            if (m.is_unit()) return std::nullopt;
            const HopfElement back = field_state(state_to_word(m));
            return differ("field_state(state_to_word(m))", back, HopfElement(m));
        }));
    }
    {
        std::vector<FieldWord> words;
        std::function<void(FieldWord)> gen = [&](FieldWord w) {
            if (!w.factors.empty()) words.push_back(w);
            if (w.factors.size() == 4) return;
            for (unsigned d = 0; d <= 2; ++d) {
                FieldWord next = w;
                next.factors.push_back({d, true});
                gen(next);
            }
        };
        gen(FieldWord{});
        const BicharSpec r = fock_bicharacter(3);
        std::size_t index = 0;
        out.push_back(run_property(suite, "twisted_bullet_routes", seed, words.size(), [&](RandomSource&) -> Failure {
            const TwistedBulletState st = twisted_bullet_state(words[index++], r);
            if (!st.routes_agree)
                return "routes differ: EQ " + show(st.eq_route) + ", bullet " + show(st.bullet_route) + ", exp " +
                       show(st.exp_route);
            return std::nullopt;
        }));
    }
    out.push_back(run_property(suite, "normal_ordering_two_fields", seed, cases, [](RandomSource& rng) -> Failure {
        // :h(z)h(z): against the mode sum sum_{m-n=k} :h_m h_{-n}: on random states.
        const HopfElement v = rng.element(0, 3, 2, 3);
        const FieldWord word{{{0, false}, {0, false}}};
        const FieldValue value = normal_ordered_apply(word, v, {-16, 4});
        for (std::int64_t e = -8; e <= 2; ++e) {
            const std::int64_t k = -e - 2;  // coefficient of z^{-k-2}
            HopfElement direct(0);
            for (std::int64_t m = -12; m <= 12; ++m) {
                const std::int64_t n = m - k;
                const Mode a = Mode::integer(m);
                const Mode b = Mode::integer(-n);
                // Annihilators (mode >= 0) act first.
                direct += m >= 0 ? apply_mode(b, apply_mode(a, v, false), false)
                                 : apply_mode(a, apply_mode(b, v, false), false);
            }
            auto it = value.find(2 * e);
            const HopfElement got = it == value.end() ? HopfElement(0) : it->second;
            if (got != direct) return "coefficient of z^" + std::to_string(e) + " on " + show(v);
        }
        return std::nullopt;
    }));
    return out;
}

PropertyResults verify_flm_example() {
    PropertyResults out;
    const std::vector<std::pair<std::string, std::vector<std::vector<Rational>>>> grams = {
        {"A2", {{Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}}},
        {"identity", {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}},
    };
    for (const auto& [label, gram] : grams) {
        const auto start = std::chrono::steady_clock::now();
        PropertyResult res{"flm", "example_" + label, 0, 0, {}, 0.0};
        try {
            const FlmReport report = run_flm_example(Lattice(gram));
            for (const auto& v : report.values) {
                ++res.cases;
                if (!v.equal && res.failures++ == 0) res.first_failure = v.name;
            }
            for (const auto& id : report.identities) {
                ++res.cases;
                if (!id.equal && res.failures++ == 0) res.first_failure = id.name;
            }
        } catch (const std::exception& e) {
            ++res.cases;
            ++res.failures;
            res.first_failure = e.what();
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(res);
    }
    return out;
}

PropertyResults verify_parser(std::uint64_t seed, std::size_t cases) {
    PropertyResults out;
    out.push_back(run_property("parser", "render_round_trip", seed, cases, [](RandomSource& rng) -> Failure {
        const Shape sh = draw_shape(rng);
        const HopfElement a = rng.element(sh.rank, sh.prims, 4, 4);
        const AlgebraSignature sig = AlgebraSignature::plain(sh.rank);
        const std::string text = render(a, sig);
        if (parse_element(text, sig) != a) return "reparse of '" + text + "' differs";
        return std::nullopt;
    }));
    return out;
}

PropertyResults verify_all(std::uint64_t seed, std::size_t cases) {
    PropertyResults all;
    auto append = [&](PropertyResults r) { all.insert(all.end(), r.begin(), r.end()); };
    append(verify_series(seed, cases));
    append(verify_hopf_axioms(seed, cases));
    append(verify_bicharacter_laws(seed, cases));
    append(verify_convolution_group(seed, cases));
    append(verify_twisting(seed, cases));
    append(verify_eq_map(seed, cases));
    append(verify_exp_q(seed, cases));
    append(verify_symmetrization_dependence(seed, cases));
    append(verify_grouplike_root(seed, cases));
    append(verify_heisenberg(seed, cases));
    append(verify_flm_example());
    append(verify_parser(seed, cases));
    return all;
}

}  // namespace bichar
