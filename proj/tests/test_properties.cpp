#include <doctest.h>

#include "bichar/random.hpp"
#include "bichar/verify.hpp"

using namespace bichar;

namespace {

void require_all(const PropertyResults& results) {
    CHECK_FALSE(results.empty());
    for (const auto& r : results) {
        INFO(r.suite << "/" << r.name << ": " << r.first_failure);
        CHECK(r.passed());
    }
}

constexpr std::uint64_t kSeed = 20240611;
constexpr std::size_t kCases = 60;

}  // namespace

TEST_CASE("hopf axioms") { require_all(verify_hopf_axioms(kSeed, kCases)); }
TEST_CASE("bicharacter laws") { require_all(verify_bicharacter_laws(kSeed, kCases)); }
TEST_CASE("convolution group") { require_all(verify_convolution_group(kSeed, kCases)); }
TEST_CASE("twisting") { require_all(verify_twisting(kSeed, kCases)); }
TEST_CASE("EQ map") { require_all(verify_eq_map(kSeed, kCases)); }
TEST_CASE("exp(Q)") { require_all(verify_exp_q(kSeed, kCases)); }
TEST_CASE("symmetrization dependence") { require_all(verify_symmetrization_dependence(kSeed, kCases)); }
TEST_CASE("grouplike root") { require_all(verify_grouplike_root(kSeed, kCases)); }
TEST_CASE("series") { require_all(verify_series(kSeed, kCases)); }
TEST_CASE("heisenberg") { require_all(verify_heisenberg(kSeed, kCases)); }
TEST_CASE("lattice example") { require_all(verify_flm_example()); }
TEST_CASE("parser") { require_all(verify_parser(kSeed, kCases)); }

TEST_CASE("seeded draws are reproducible") {
    RandomSource a(7);
    RandomSource b(7);
    for (int i = 0; i < 20; ++i) {
        CHECK(a.element(2, 3, 4, 4) == b.element(2, 3, 4, 4));
        CHECK(a.bicharacter(2, 3) == b.bicharacter(2, 3));
    }
}
