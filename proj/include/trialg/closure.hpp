#pragma once

// Generated subalgebras with product certificates, and the span-level
// verifications carried out inside the envelope A + A^op.

#include "trialg/checks.hpp"

namespace trialg {

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A product g_{w1} g_{w2} ... of generators; the empty word is the unit.
struct ClosureProduct {
  std::vector<std::size_t> word;
  Element value;
};

struct ClosureResult {
  AlgebraPtr ambient;
  std::vector<Element> generators;
  bool with_unit = false;
  /// Spanning products in the order they were found; each one enlarged the span.
  std::vector<ClosureProduct> products;
  /// Normal form of the span, with each row expressed over `products`, and
  /// the linear relations among the product values.
  TrackedEchelon span;

  const EchelonBasis& basis() const noexcept { return span.basis; }
  std::size_t rank() const noexcept { return span.basis.size(); }
  /// Longest certificate word contributing to each basis row.
  std::vector<std::size_t> generation_degree() const;
  /// Multiplies out a word of generators.
  Element evaluate_word(const std::vector<std::size_t>& word) const;
};

/// Fixed-point closure: products of the newest spanning product with every
/// earlier one (both orders) until no product enlarges the span.
ClosureResult generate_subalgebra(const AlgebraPtr& ambient, const std::vector<Element>& generators, bool with_unit,
                                  std::size_t max_products = 100000);

/// S<A0 + A0^op>: the closure of {S(b) : b in the T_n^0(R) basis} inside A + A^op.
ClosureResult envelope_closure(const AlgebraPtr& triangular);

CheckReport verify_eq1(const AlgebraPtr& triangular);
CheckReport verify_eq1(const AlgebraPtr& triangular, const ClosureResult& closure);
/// S(a)S(b) = 0 for homogeneous a in A_alpha, b in A_beta with alpha + beta outside Delta and 0,
/// together with the ad(e_j)^2 identities.
CheckReport verify_lemma1_image(const AlgebraPtr& triangular);
CheckReport verify_lemma2_image(const AlgebraPtr& triangular);
CheckReport verify_lemma2_image(const AlgebraPtr& triangular, const ClosureResult& closure);
CheckReport verify_eq2_eq3_isomorphisms(const AlgebraPtr& triangular);
/// Rank and cardinality of S<A0 + A0^op> against Diag(Phi) x (S_n + S_n^op).
CheckReport verify_prop1_rank(const AlgebraPtr& triangular, const ClosureResult& closure);

/// The natural maps from T_n^0(R) onto the subalgebras {a + a^op | a in Diag} + S_n and + S_n^op.
LinMap left_strict_embedding(const AlgebraPtr& triangular, const AlgebraPtr& envelope);
LinMap right_strict_embedding(const AlgebraPtr& triangular, const AlgebraPtr& envelope);

struct StandardHomResult {
  std::optional<LinMap> chi;
  CheckReport report{"induced_standard_hom"};
  /// A relation among closure products that phi does not respect, if any.
  std::optional<Vec> witness_relation;
};

/// chi on S<A0 + A0^op> with chi(S(b)) = phi(b); phi is defined on T_n(R) or T_n^0(R).
/// With validate_input, throws PreconditionError when phi fails the Jordan battery.
StandardHomResult induced_standard_hom(const LinMap& phi, const ClosureResult& closure, bool validate_input = true);
StandardHomResult induced_standard_hom(const LinMap& phi, bool validate_input = true);

/// T_n^0(R) as a map domain, cached per algebra instance.
DomainPtr tn0_domain(const AlgebraPtr& triangular);

}  // namespace trialg
