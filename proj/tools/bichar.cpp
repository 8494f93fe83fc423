#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bichar/error.hpp"
#include "bichar/format.hpp"
#include "bichar/heisenberg.hpp"
#include "bichar/lattice.hpp"
#include "bichar/quadop.hpp"
#include "bichar/twisting.hpp"
#include "bichar/verify.hpp"
#include "config.hpp"

namespace {

using nlohmann::json;
using namespace bichar;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerify = 3;

struct Options {
    std::string config;
    bool json = false;
    std::uint64_t seed = 1;
    std::size_t cases = 100;
    std::optional<unsigned> order;
    std::optional<unsigned> depth;
    std::string window;
    std::vector<std::string> bichars;
    bool symmetric = false;
    bool twisted = false;
    std::string state;
    std::vector<std::string> args;
};

class Session {
public:
    Session(std::string command, const Options& opt) : command_(std::move(command)), opt_(opt) {
        if (!opt_.config.empty()) cfg_ = cli::load_config(opt_.config);
    }

    int run() {
        if (command_ == "eq") return element_map([](const BicharSpec& r, const HopfElement& a) { return eq_map(r, a); });
        if (command_ == "expq")
            return element_map([](const BicharSpec& r, const HopfElement& a) { return apply_exp_q(QuadraticOperator{r}, a); });
        if (command_ == "twist") return twist();
        if (command_ == "bullet") return bullet();
        if (command_ == "convolve") return convolve_cmd();
        if (command_ == "symmetrize") return emit_bichar(symmetrize(bichar(0)).spec());
        if (command_ == "root") return emit_bichar(grouplike_root(SymmetricBicharSpec(bichar(0))));
        if (command_ == "flm-series") return flm_series_cmd();
        if (command_ == "flm-example") return flm_example();
        if (command_ == "field-state") return field_state_cmd();
        if (command_ == "twisted-bullet") return twisted_bullet();
        if (command_ == "verify") return verify();
        throw Error(ErrorKind::invalid_argument, "unknown command " + command_);
    }

private:
    const BicharSpec& bichar(std::size_t k) const {
        if (k < opt_.bichars.size()) return cfg_.bicharacter(opt_.bichars[k]);
        if (k == 0) {
            if (cfg_.bicharacters.empty()) throw Error(ErrorKind::invalid_argument, "no bicharacter: pass --config with a [bichar.NAME] table or a [lattice]");
            return cfg_.bicharacter("");
        }
        throw Error(ErrorKind::invalid_argument, command_ + " needs --bichar given " + std::to_string(k + 1) + " times");
    }

    HopfElement element(std::size_t k) const {
        if (k >= opt_.args.size()) throw Error(ErrorKind::invalid_argument, command_ + " needs " + std::to_string(k + 1) + " element argument(s)");
        HopfElement a = parse_element(opt_.args[k], cfg_.signature);
        cfg_.check_element(a);
        return a;
    }

    void expect_args(std::size_t lo, std::size_t hi) const {
        if (opt_.args.size() < lo || opt_.args.size() > hi)
            throw Error(ErrorKind::invalid_argument, command_ + " takes " +
                                                         (lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi)) +
                                                         " argument(s), got " + std::to_string(opt_.args.size()));
    }

    int emit_element(const HopfElement& a) const {
        if (opt_.json)
            std::cout << json{{"command", command_}, {"result", to_json(a, cfg_.signature)}}.dump(2) << "\n";
        else
            std::cout << render(a, cfg_.signature) << "\n";
        return kExitOk;
    }

    int emit_bichar(const BicharSpec& r) const {
        if (opt_.json)
            std::cout << json{{"command", command_}, {"result", to_json(r, cfg_.signature)}}.dump(2) << "\n";
        else
            std::cout << render(r, cfg_.signature) << "\n";
        return kExitOk;
    }

    template <class F>
    int element_map(F f) const {
        expect_args(1, 1);
        return emit_element(f(bichar(0), element(0)));
    }

    int twist() const {
        expect_args(2, 2);
        return emit_element(twisted_product(bichar(0), element(0), element(1)));
    }

    int bullet() const {
        expect_args(1, 64);
        const BicharSpec& r = bichar(0);
        BulletWord w{{}, opt_.symmetric ? SymmetricBicharSpec(r) : symmetrize(r)};
        for (std::size_t k = 0; k < opt_.args.size(); ++k) w.factors.push_back(element(k));
        return emit_element(bullet_word(w));
    }

    int convolve_cmd() const {
        expect_args(0, 0);
        if (opt_.bichars.size() < 2) throw Error(ErrorKind::invalid_argument, "convolve needs --bichar A --bichar B");
        BicharSpec out = bichar(0);
        for (std::size_t k = 1; k < opt_.bichars.size(); ++k) out = convolve(out, bichar(k));
        return emit_bichar(out);
    }

    int flm_series_cmd() const {
        expect_args(0, 0);
        const unsigned order = opt_.order.value_or(cfg_.series_order.value_or(2));
        const SeriesCoefficients c = flm_series(order);
        if (opt_.json) {
            json rows = json::array();
            for (const auto& [k, v] : c.c)
                rows.push_back({{"m", k.first}, {"n", k.second}, {"value", v.to_string()}, {"terms", to_json(v)}});
            std::cout << json{{"command", command_}, {"result", {{"order", order}, {"coefficients", rows}}}}.dump(2) << "\n";
        } else {
            for (const auto& [k, v] : c.c)
                std::cout << "c" << k.first << k.second << " = " << (v.is_zero() ? "0" : v.to_string()) << "\n";
        }
        return kExitOk;
    }

    int flm_example() const {
        expect_args(0, 0);
        const Lattice lattice = cfg_.lattice ? *cfg_.lattice : Lattice({{Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}});
        const FlmReport report = run_flm_example(lattice, opt_.order.value_or(cfg_.series_order.value_or(4)));
        if (opt_.json)
            std::cout << json{{"command", command_}, {"result", report.to_json()}}.dump(2) << "\n";
        else
            std::cout << report.to_text();
        return report.all_equal() ? kExitOk : kExitVerify;
    }

    FieldWord word() const {
        if (opt_.args.empty()) throw Error(ErrorKind::invalid_argument, command_ + " needs derivative orders, e.g. '0 0 1' for :h h dh:");
        FieldWord w;
        for (const auto& a : opt_.args) {
            std::size_t used = 0;
            long d = -1;
            try {
                d = std::stol(a, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != a.size() || d < 0) throw ParseError(0, {"non-negative integer"}, "bad derivative order '" + a + "'");
            w.factors.push_back({static_cast<unsigned>(d), opt_.twisted});
        }
        return w;
    }

    static std::int64_t doubled(const std::string& text) {
        const Rational v = Rational::parse(text);
        const Rational t = v * Rational(2);
        if (!t.is_integer()) throw ParseError(0, {"integer", "half-integer"}, "window bound '" + text + "' is not a half-integer");
        return t.numerator().get_si();
    }

    ExponentWindow window() const {
        const auto dots = opt_.window.find("..");
        if (dots == std::string::npos) throw ParseError(0, {"LO..HI"}, "bad --window '" + opt_.window + "'");
        return {doubled(opt_.window.substr(0, dots)), doubled(opt_.window.substr(dots + 2))};
    }

    int field_state_cmd() const {
        const FieldWord w = word();
        const AlgebraSignature sig = w.twisted() ? AlgebraSignature::twisted_fock() : AlgebraSignature::plain(0);
        if (opt_.window.empty() && opt_.state.empty()) {
            const HopfElement v = field_state(w);
            if (opt_.json)
                std::cout << json{{"command", command_}, {"result", to_json(v, sig)}}.dump(2) << "\n";
            else
                std::cout << render(v, sig) << "\n";
            return kExitOk;
        }
        const HopfElement state = opt_.state.empty() ? HopfElement::one(0) : parse_element(opt_.state, sig);
        const ExponentWindow win = opt_.window.empty() ? ExponentWindow{0, 0} : window();
        const FieldValue value = normal_ordered_apply(w, state, win);
        if (opt_.json) {
            json rows = json::array();
            for (const auto& [e, v] : value) rows.push_back({{"exponent", Rational(static_cast<long>(e), 2).to_string()}, {"value", to_json(v, sig)}});
            std::cout << json{{"command", command_}, {"result", rows}}.dump(2) << "\n";
        } else {
            if (value.empty()) std::cout << "0\n";
            for (const auto& [e, v] : value) std::cout << "z^" << Rational(static_cast<long>(e), 2).to_string() << ": " << render(v, sig) << "\n";
        }
        return kExitOk;
    }

    int twisted_bullet() const {
        FieldWord w = word();
        for (auto& f : w.factors) f.twisted = true;
        unsigned need = 1;
        for (const auto& f : w.factors) need = std::max(need, f.derivative + 1);
        const unsigned depth = opt_.depth.value_or(need);
        if (depth < need) throw Error(ErrorKind::invalid_argument, "--depth " + std::to_string(depth) + " is below the largest index in the word");
        const TwistedBulletState st = twisted_bullet_state(w, fock_bicharacter(depth));
        const AlgebraSignature sig = AlgebraSignature::plain(0);
        if (opt_.json) {
            std::cout << json{{"command", command_},
                              {"result",
                               {{"state", to_json(st.state, sig)},
                                {"routes", {{"eq", render(st.eq_route, sig)}, {"bullet", render(st.bullet_route, sig)}, {"exp", render(st.exp_route, sig)}}},
                                {"routes_agree", st.routes_agree}}}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << render(st.state, sig) << "\n";
            if (!st.routes_agree)
                std::cout << "routes differ:\n  EQ: " << render(st.eq_route, sig) << "\n  bullet: " << render(st.bullet_route, sig)
                          << "\n  exp: " << render(st.exp_route, sig) << "\n";
        }
        return st.routes_agree ? kExitOk : kExitVerify;
    }

    int verify() const {
        expect_args(0, 0);
        const PropertyResults results = verify_all(opt_.seed, opt_.cases);
        bool ok = true;
        json rows = json::array();
        for (const auto& r : results) {
            ok = ok && r.passed();
            if (opt_.json) {
                rows.push_back({{"suite", r.suite}, {"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"first_failure", r.first_failure}});
            } else {
                std::cout << (r.passed() ? "PASS " : "FAIL ") << r.suite << "/" << r.name << " cases=" << r.cases << " failures=" << r.failures;
                if (!r.passed()) std::cout << " first: " << r.first_failure;
                std::cout << "\n";
            }
        }
        if (opt_.json) std::cout << json{{"command", command_}, {"seed", opt_.seed}, {"result", rows}, {"passed", ok}}.dump(2) << "\n";
        return ok ? kExitOk : kExitVerify;
    }

    std::string command_;
    const Options& opt_;
    cli::SessionConfig cfg_;
};

int report_error(const Options& opt, const std::string& kind, const std::string& message, int code) {
    if (opt.json)
        std::cout << json{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}}.dump(2) << "\n";
    else
        std::cerr << "error: " << message << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bicharacter twists of Hopf algebras and their quadratic operators"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--config", opt.config, "Session config (TOML, or JSON by extension)");
    app.add_flag("--json", opt.json, "Emit JSON");
    app.add_option("--seed", opt.seed, "Seed for verify");
    app.add_option("--cases", opt.cases, "Cases per property for verify");
    app.add_option("--order", opt.order, "Series order");
    app.add_option("--depth", opt.depth, "Largest Fock index for twisted-bullet");
    app.add_option("--window", opt.window, "z-exponent window LO..HI for field-state (half-integers allowed)");
    app.add_option("--bichar", opt.bichars, "Named bicharacter from the config (repeatable)")->allow_extra_args(false);
    app.add_flag("--symmetric", opt.symmetric, "bullet: use the bicharacter itself (must be symmetric) instead of its symmetrization");
    app.add_flag("--twisted", opt.twisted, "field-state: the word uses the twisted field");
    app.add_option("--state", opt.state, "field-state: state to act on (default the vacuum)");

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"eq", "EQ_r(a)"},
        {"expq", "exp(Q)(a)"},
        {"bullet", "a1 . a2 . ... for the symmetrization of r"},
        {"twist", "m_r(a (x) b)"},
        {"convolve", "r1 o r2 o ..."},
        {"symmetrize", "s = r o r^t"},
        {"root", "grouplike square root of a symmetric bicharacter"},
        {"flm-series", "coefficients c_mn of the lattice series"},
        {"flm-example", "worked lattice example"},
        {"field-state", "state of a normal ordered word of Heisenberg fields"},
        {"twisted-bullet", "untwisted state of a twisted normal ordered word"},
        {"verify", "run the property suites"},
    };
    std::string chosen;
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        sub->add_option("args", opt.args, "Element expressions or derivative orders");
        sub->callback([&chosen, n = name] { chosen = n; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        return Session(chosen, opt).run();
    } catch (const NoSquareRoot& e) {
        return report_error(opt, to_string(e.kind()), e.what(), kExitDomain);
    } catch (const Error& e) {
        const bool usage = e.kind() == ErrorKind::parse_error || e.kind() == ErrorKind::config_error ||
                           e.kind() == ErrorKind::unknown_generator;
        return report_error(opt, to_string(e.kind()), e.what(), usage ? kExitUsage : kExitDomain);
    } catch (const std::exception& e) {
        return report_error(opt, "InternalError", e.what(), kExitDomain);
    }
}
