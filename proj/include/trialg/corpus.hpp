#pragma once

// Seeded generators of Jordan homomorphisms and Jordan derivations of T_n(R)
// with known structure, each re-validated by the checkers before it is returned.

#include "trialg/decompose.hpp"

#include <cstdint>

namespace trialg {

/// A unital homomorphism R -> Phi, when one is easy to name: identity on Phi,
/// constant term on free algebras, and inherited through T_m, opposites,
/// order-1 matrices and direct sums. M_k(R) with k >= 2 has none.
std::optional<LinMap> character(const AlgebraPtr& r);

/// x -> x_ij as an element of R.
LinMap entry_projection(const AlgebraPtr& triangular, std::size_t i, std::size_t j);

/// x -> u x u^-1 with u = 1 + e_ij(r), i < j, so u^-1 = 1 - e_ij(r).
LinMap unitriangular_conjugation(const AlgebraPtr& triangular, std::size_t i, std::size_t j, const Element& r);

/// Mix of s_map, h + k' into A + A^op, s_map followed by an envelope
/// automorphism (optionally projected to one side), and psi after the (k,k) entry.
std::vector<JordanHomInput> generate_test_jordan_homs(const AlgebraPtr& triangular, std::uint64_t seed,
                                                      std::size_t count);

struct JordanDerivationInput {
  LinMap d;
  Bimodule module;
  std::string provenance;  // inner_regular | inner_corner | inner_sum | with_antiderivation
};

/// Inner derivations of the regular and corner bimodules, and (when R has a
/// character) inner derivations plus an antiderivation into a one-dimensional module.
std::vector<JordanDerivationInput> generate_test_jordan_derivations(const AlgebraPtr& triangular, std::uint64_t seed,
                                                                    std::size_t count);

/// x -> lambda(x) m - m rho(x).
LinMap inner_derivation(const Bimodule& module, const Element& m);

}  // namespace trialg
