#pragma once

// Splitting a Jordan homomorphism of T_n(R), restricted to T_n^0(R), into a
// homomorphism plus an antihomomorphism with orthogonal images, and a Jordan
// derivation into a derivation plus an antiderivation.

#include "trialg/closure.hpp"

namespace trialg {

using CheckList = std::vector<CheckReport>;
bool all_pass(const CheckList& checks);

struct JordanHomInput {
  LinMap phi;
  std::string provenance;  // s_map | composed | explicit | hom_plus_antihom | psi_p
};

struct PairDecomposition {
  LinMap psi1;  // homomorphism on T_n^0(R)
  LinMap psi2;  // antihomomorphism on T_n^0(R)
  Element local_unit;
};

/// psi1(e_ij(r)) = f_i phi(e_ij(r)) f_j and psi2(e_ij(r)) = f_j phi(e_ij(r)) f_i with f_i = phi(e_i);
/// both agree with phi on Diag(Phi). Throws PreconditionError when the f_i are not
/// orthogonal idempotents summing to phi(1).
PairDecomposition extract_pair(const LinMap& phi);

/// The five checks: diag agreement, orthogonality, phi = psi1 + psi2 on S_n,
/// psi1 multiplicative, psi2 antimultiplicative.
CheckList verify_theorem2(const LinMap& phi, const PairDecomposition& pair);

struct DerivationDecomposition {
  enum class Method { closed_form, linear_solver };
  LinMap d1;
  LinMap d2;
  Method method = Method::closed_form;
  CheckList checks;
  /// Checks of the closed form when it was tried and rejected.
  CheckList rejected_closed_form;
};
const char* to_string(DerivationDecomposition::Method m);

struct DerivationOptions {
  bool force_solver = false;
  bool validate_input = true;
  /// Stage 2 refuses systems with more unknowns than this.
  std::size_t max_unknowns = 4000;
};

/// Splits a Jordan derivation on T_n^0(R) into derivation + antiderivation;
/// throws std::runtime_error when no split exists, which a valid d never hits.
DerivationDecomposition decompose_jordan_derivation(const LinMap& d, const Bimodule& m,
                                                    const DerivationOptions& opts = {});

/// d1 derivation, d2 antiderivation, d1 + d2 = d on T_n^0, d2 = 0 on Diag(Phi) and [S_n, S_n].
CheckList validate_derivation_pair(const LinMap& d, const LinMap& d1, const LinMap& d2, const Bimodule& m);

/// Stage 2 on its own: solve the linear system for (d1, d2); absent when unsolvable.
std::optional<std::pair<LinMap, LinMap>> solve_derivation_split(const LinMap& d, const Bimodule& m,
                                                                std::size_t max_unknowns = 4000);

}  // namespace trialg
