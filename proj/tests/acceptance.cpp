// Acceptance checks: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bichar/error.hpp"
#include "bichar/format.hpp"
#include "bichar/heisenberg.hpp"
#include "bichar/lattice.hpp"
#include "bichar/quadop.hpp"
#include "bichar/random.hpp"
#include "bichar/twisting.hpp"
#include "config.hpp"

using namespace bichar;

namespace {

constexpr std::uint64_t kSeed = 0x5eed2024;

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<void(Outcome&)> body;
};

Rational q(long p, long d = 1) { return Rational(p, d); }

LaurentPoly zpow(const Rational& c, std::int64_t e) { return LaurentPoly::monomial(c, e); }

std::string show(const HopfElement& a, const AlgebraSignature& sig) { return render(a, sig); }

// 1 -----------------------------------------------------------------------------
void series_coefficients(Outcome& out) {
    const SeriesCoefficients c = flm_series(4);
    const std::vector<std::tuple<unsigned, unsigned, LaurentPoly>> expected = {
        {0, 0, LaurentPoly()},
        {0, 1, zpow(q(-1, 4), -1)},
        {1, 0, zpow(q(-1, 4), -1)},
        {1, 1, zpow(q(1, 16), -2)},
        {2, 0, zpow(q(3, 32), -2)},
        {0, 2, zpow(q(3, 32), -2)},
    };
    for (const auto& [m, n, v] : expected)
        if (c.at(m, n) != v)
            out.fail("c" + std::to_string(m) + std::to_string(n) + " = " + c.at(m, n).to_string() + ", want " + v.to_string());
}

// 2 -----------------------------------------------------------------------------
void golden_identities(Outcome& out) {
    const std::vector<std::pair<std::string, std::vector<std::vector<Rational>>>> grams = {
        {"A2", {{q(2), q(-1)}, {q(-1), q(2)}}},
        {"identity", {{q(1), q(0)}, {q(0), q(1)}}},
    };
    const std::vector<std::vector<std::int64_t>> alphas = {{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {2, -1}, {0, 0}};
    const AlgebraSignature sig = AlgebraSignature::lattice(2, 1);
    for (const auto& [label, gram] : grams) {
        const Lattice lat(gram);
        const BicharSpec r = lattice_bicharacter(lat, flm_series(4), 1);
        const QuadraticOperator op{r};
        auto all_routes = [&](const HopfElement& input, const HopfElement& expected, const std::string& what) {
            const HopfElement routes[] = {apply_exp_q(op, input), eq_map(r, input), bullet_form(r, input)};
            const char* names[] = {"exp(Q)", "EQ_r", "bullet"};
            for (int k = 0; k < 3; ++k)
                if (routes[k] != expected)
                    out.fail(label + " " + what + " via " + names[k] + ": " + show(routes[k], sig) + " != " + show(expected, sig));
        };
        for (std::size_t i = 1; i <= 2; ++i) {
            std::vector<std::int64_t> ai(2, 0);
            ai[i - 1] = 1;
            const HopfElement x = HopfElement::primitive(2, sig.lattice_id(i, 1));
            const Rational gii = lat.gram(i - 1, i - 1);
            all_routes(x * x, x * x + HopfElement::constant(2, zpow(gii / q(8), -2)), "x_i^2");
            for (const auto& alpha : alphas) {
                const HopfElement g = HopfElement::grouplike(alpha);
                const Rational p = lat.pairing(alpha, ai);
                all_routes(g, g, "e^a");
                all_routes(g * x, g * x - g * zpow(p / q(2), -1), "e^a x_i");
                const HopfElement four_terms = g * x * x - g * x * zpow(q(2) * p / q(2), -1) + g * zpow(p * p / q(4), -2) +
                                               g * zpow(gii / q(8), -2);
                all_routes(g * x * x, four_terms, "e^a x_i^2");
            }
        }
        if (!run_flm_example(lat).all_equal()) out.fail(label + ": run_flm_example reports a mismatch");
    }
}

// shared random inputs for 3-5 ------------------------------------------------
struct Draw {
    std::size_t rank;
    std::size_t prims;
};

Draw shape(RandomSource& rng) {
    return {static_cast<std::size_t>(rng.uniform(0, 2)), static_cast<std::size_t>(rng.uniform(1, 3))};
}

std::string plain(const HopfElement& a) { return render(a, AlgebraSignature::plain(a.rank())); }

// 3 -----------------------------------------------------------------------------
void oracle_equivalence(Outcome& out) {
    RandomSource rng(kSeed);
    for (int k = 0; k < 250; ++k) {
        const Draw d = shape(rng);
        const BicharSpec r = rng.bicharacter(d.rank, d.prims);
        const HopfElement a = rng.element(d.rank, d.prims, 4, 4);
        if (apply_exp_q(QuadraticOperator{r}, a) != eq_map(r, a)) out.fail("case " + std::to_string(k) + ": a = " + plain(a));
    }
}

// 4 -----------------------------------------------------------------------------
void homomorphism_and_action(Outcome& out) {
    RandomSource rng(kSeed + 4);
    for (int k = 0; k < 200; ++k) {
        const Draw d = shape(rng);
        const BicharSpec r = rng.bicharacter(d.rank, d.prims);
        const BicharSpec r1 = rng.bicharacter(d.rank, d.prims);
        const BicharSpec r2 = rng.bicharacter(d.rank, d.prims);
        const HopfElement a = rng.element(d.rank, d.prims, 3, 2);
        const HopfElement b = rng.element(d.rank, d.prims, 3, 2);
        const HopfElement c = rng.element(d.rank, d.prims, 4, 4);
        const SymmetricBicharSpec s = symmetrize(r);
        const std::string at = "case " + std::to_string(k) + ": ";

        if (eq_map(r, a * b) != bullet_product(s, eq_map(r, a), eq_map(r, b))) out.fail(at + "homomorphism");
        if (eq_map(convolve(r1, r2), c) != eq_map(r1, eq_map(r2, c))) out.fail(at + "composition");
        if (eq_map(inverse(r), eq_map(r, c)) != c || eq_map(r, eq_map(inverse(r), c)) != c) out.fail(at + "invertibility");
        const SymmetricBicharSpec s1 = symmetrize(r1);
        const SymmetricBicharSpec s2(convolve(s, s1));
        if (eq_map(r, bullet_product(s1, a, b)) != bullet_product(s2, eq_map(r, a), eq_map(r, b))) out.fail(at + "interchange");
    }
}

// 5 -----------------------------------------------------------------------------
void hopf_axioms(Outcome& out) {
    RandomSource rng(kSeed + 5);
    for (int k = 0; k < 250; ++k) {
        const Draw d = shape(rng);
        const HopfElement a = rng.element(d.rank, d.prims, 4, 4);
        const std::string at = "case " + std::to_string(k) + " (" + plain(a) + "): ";
        const Tensor2 delta = coproduct(a);
        if (coproduct_left(delta) != coproduct_right(delta)) out.fail(at + "coassociativity");
        if (swap(delta) != delta) out.fail(at + "cocommutativity");
        if (counit_first(delta, d.rank) != a || counit_second(delta, d.rank) != a) out.fail(at + "counit");
        const HopfElement unit = HopfElement::constant(d.rank, counit(a));
        if (antipode_first_multiply(delta, d.rank) != unit || antipode_second_multiply(delta, d.rank) != unit)
            out.fail(at + "antipode");
        if (operator_coproduct(a) != delta) out.fail(at + "operator_coproduct");
    }
}

// 6 -----------------------------------------------------------------------------
void symmetrization_dependence(Outcome& out) {
    RandomSource rng(kSeed + 6);
    for (int k = 0; k < 150; ++k) {
        const auto prims = static_cast<std::size_t>(rng.uniform(1, 3));
        const BicharSpec r = rng.bicharacter(0, prims);
        BicharSpec r2 = r;
        for (PrimitiveId m = 0; m < prims; ++m)
            for (PrimitiveId n = m + 1; n < prims; ++n) {
                const LaurentPoly t = rng.laurent(2);
                r2.set_pp(m, n, r.pp(m, n) + t);
                r2.set_pp(n, m, r.pp(n, m) - t);
            }
        if (symmetrize(r) != symmetrize(r2)) {
            out.fail("case " + std::to_string(k) + ": perturbation changed s");
            continue;
        }
        const HopfElement a = rng.element(0, prims, 4, 4);
        if (apply_exp_qp(QuadraticOperator{r}, a) != apply_exp_qp(QuadraticOperator{r2}, a))
            out.fail("case " + std::to_string(k) + ": a = " + plain(a));
    }
}

// 7 -----------------------------------------------------------------------------
void obstruction(Outcome& out) {
    BicharSpec two(1);
    two.set_gg(0, 0, q(2));
    try {
        (void)grouplike_root(SymmetricBicharSpec(two));
        out.fail("[[2]] has a root");
    } catch (const NoSquareRoot& e) {
        if (std::string(e.what()) != "NoSquareRoot(1)") out.fail(std::string("message ") + e.what());
    }

    try {
        (void)cli::parse_config("[algebra]\ngrouplike = 1\n[bichar.s]\ngg = [[\"1 + z\"]]\n", false);
        out.fail("non-constant grouplike value accepted");
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::non_constant_grouplike_value) out.fail(std::string("wrong error: ") + e.what());
    }

    BicharSpec four(1);
    four.set_gg(0, 0, q(4));
    const BicharSpec root = grouplike_root(SymmetricBicharSpec(four));
    if (root.gg(0, 0) != q(2)) out.fail("[[4]] root is " + root.gg(0, 0).to_string());
    if (symmetrize(root).spec() != four) out.fail("[[4]] root does not re-symmetrize");

    RandomSource rng(kSeed + 7);
    for (int k = 0; k < 200; ++k) {
        const auto rank = static_cast<std::size_t>(rng.uniform(1, 3));
        const auto prims = static_cast<std::size_t>(rng.uniform(0, 3));
        const SymmetricBicharSpec s = symmetrize(rng.bicharacter(rank, prims));
        try {
            if (symmetrize(grouplike_root(s)) != s) out.fail("case " + std::to_string(k) + ": root does not re-symmetrize");
        } catch (const Error& e) {
            out.fail("case " + std::to_string(k) + ": " + e.what());
        }
    }
}

// 8 -----------------------------------------------------------------------------
void heisenberg(Outcome& out) {
    // field-state round trip over every x_{n1}...x_{nk} with sum n_i <= 6
    std::vector<Monomial> states;
    std::function<void(PrimitiveId, unsigned, Monomial)> gen = [&](PrimitiveId lo, unsigned budget, Monomial m) {
        if (!m.is_unit()) states.push_back(m);
        for (PrimitiveId id = lo; id + 1 <= budget; ++id) gen(id, budget - (id + 1), m * Monomial::primitive(0, id));
    };
    gen(0, 6, Monomial::unit(0));
    if (states.size() != 29) out.fail("expected 29 monomials, got " + std::to_string(states.size()));
    for (const Monomial& m : states)
        if (field_state(state_to_word(m)) != HopfElement(m)) out.fail("round trip of " + plain(HopfElement(m)));

    RandomSource rng(kSeed + 8);
    for (bool twisted : {false, true}) {
        std::vector<Mode> modes;
        for (std::int64_t k = -8; k <= 8; ++k)
            if ((k % 2 != 0) == twisted) modes.push_back(Mode{k});
        for (int trial = 0; trial < 10; ++trial) {
            const HopfElement v = rng.element(0, 5, 3, 3);
            for (const Mode m : modes)
                for (const Mode n : modes) {
                    const HopfElement lhs =
                        apply_mode(m, apply_mode(n, v, twisted), twisted) - apply_mode(n, apply_mode(m, v, twisted), twisted);
                    const HopfElement rhs = m.twice + n.twice == 0 ? v * LaurentPoly(m.value()) : HopfElement(0);
                    if (lhs != rhs) out.fail("[h_" + m.value().to_string() + ", h_" + n.value().to_string() + "]");
                }
        }
    }

    const BicharSpec r = fock_bicharacter(4);
    std::size_t words = 0;
    std::function<void(FieldWord)> walk = [&](FieldWord w) {
        if (!w.factors.empty()) {
            ++words;
            const TwistedBulletState st = twisted_bullet_state(w, r);
            if (!st.routes_agree) out.fail("twisted word of length " + std::to_string(w.factors.size()));
        }
        if (w.factors.size() == 4) return;
        for (unsigned d = 0; d < 4; ++d) {
            FieldWord next = w;
            next.factors.push_back({d, true});
            walk(next);
        }
    };
    walk(FieldWord{});
    if (words != 340) out.fail("expected 340 twisted words, got " + std::to_string(words));
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "lattice series coefficients c00..c20 exact", 1.0, series_coefficients},
        {2, "worked-example identities, A2 and identity Gram", 1.0, golden_identities},
        {3, "exp(Q) = EQ_r on 250 random cases", 30.0, oracle_equivalence},
        {4, "EQ homomorphism/composition/inverse/interchange, 200 cases each", 60.0, homomorphism_and_action},
        {5, "Hopf axioms and operator coproduct, 250 cases", 10.0, hopf_axioms},
        {6, "exp(Qp) depends only on s, 150 pairs", 30.0, symmetrization_dependence},
        {7, "grouplike square-root obstruction", 10.0, obstruction},
        {8, "Fock space: field-state, commutators, twisted routes", 30.0, heisenberg},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome out;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(out);
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= c.limit_seconds) out.fail("took " + std::to_string(secs) + " s");
        const bool ok = out.ok;
        failed += ok ? 0 : 1;
        std::printf("%s criterion %d: %s (%.3f s, limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                    c.limit_seconds, ok ? "" : " -- ", out.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
