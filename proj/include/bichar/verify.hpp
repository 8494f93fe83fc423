#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bichar {

/// Outcome of one seeded property over `cases` random inputs.
struct PropertyResult {
    std::string suite;
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;
    double seconds = 0.0;

    bool passed() const { return failures == 0 && cases > 0; }
};

using PropertyResults = std::vector<PropertyResult>;

// Each suite draws from its own RandomSource seeded with `seed`, so suites
// are reproducible independently of each other.

/// Coassociativity, cocommutativity, counit, antipode, Delta multiplicative,
/// operator_coproduct == coproduct, coproduct2 == (Delta (x) Id) Delta.
PropertyResults verify_hopf_axioms(std::uint64_t seed, std::size_t cases);
/// Product, mirror and unit laws of evaluate.
PropertyResults verify_bicharacter_laws(std::uint64_t seed, std::size_t cases);
/// Generator-table convolution against the Sweedler definition; group axioms; symmetry of s.
PropertyResults verify_convolution_group(std::uint64_t seed, std::size_t cases);
/// Associativity and unit of m_r; commutativity of the bullet product.
PropertyResults verify_twisting(std::uint64_t seed, std::size_t cases);
/// EQ homomorphism, composition, invertibility and interchange.
PropertyResults verify_eq_map(std::uint64_t seed, std::size_t cases);
/// exp(Q) == EQ_r, stage commutation, exp(Q)(a) == a^bullet, homomorphism, degree bound.
PropertyResults verify_exp_q(std::uint64_t seed, std::size_t cases);
/// exp(Qp) depends only on the symmetrization (rank 0).
PropertyResults verify_symmetrization_dependence(std::uint64_t seed, std::size_t cases);
/// grouplike_root re-symmetrizes, and fails exactly on non-square diagonals.
PropertyResults verify_grouplike_root(std::uint64_t seed, std::size_t cases);
/// sqrt^2, log of products, exp(log) and Laurent ring axioms.
PropertyResults verify_series(std::uint64_t seed, std::size_t cases);
/// Heisenberg commutators, field-state round trip, twisted bullet routes.
PropertyResults verify_heisenberg(std::uint64_t seed, std::size_t cases);
/// Worked lattice example on the A2 and identity Gram matrices.
PropertyResults verify_flm_example();
/// Render and reparse random elements.
PropertyResults verify_parser(std::uint64_t seed, std::size_t cases);

PropertyResults verify_all(std::uint64_t seed, std::size_t cases);

}  // namespace bichar
