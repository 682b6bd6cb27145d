#pragma once

// Operations specific to triangular algebras T_n(R) and to the envelope
// T_n(R) + T_n(R)^op: matrix units, the diagonal idempotents, the Peirce
// grading, distinguished subspaces and the symmetrization map.
//
// Indices i, j are 1-based throughout, matching matrix notation.

#include "trialg/algebra.hpp"
#include "trialg/echelon.hpp"

namespace trialg {

/// Weight omega_i - omega_j; i == j is the degree-zero part, i < j lies in Delta.
struct GradingIndex {
  std::size_t i = 1;
  std::size_t j = 1;
  friend bool operator==(const GradingIndex&, const GradingIndex&) = default;
};

bool is_triangular(const Algebra& a);
void require_triangular(const Algebra& a);
std::size_t triangular_order(const Algebra& a);

/// Basis index of e_ij(b_s) in T_n(R).
std::size_t triangular_index(const Algebra& a, std::size_t i, std::size_t j, std::size_t s);
/// Inverse of triangular_index: (i, j, s).
std::tuple<std::size_t, std::size_t, std::size_t> triangular_position(const Algebra& a, std::size_t index);

Element matrix_unit(const AlgebraPtr& a, std::size_t i, std::size_t j, const Element& r);
Element idempotent(const AlgebraPtr& a, std::size_t i);

/// e_i x e_j. On the envelope A + A^op the sandwich is taken in A on each
/// component, so S(a) is homogeneous of the same weight as a.
Element graded_component(const Element& x, GradingIndex g);

/// (1,1) entry, an element of R.
Element projection_p(const Element& x);

/// Descriptor of A + A^op.
AlgebraDescriptor envelope_descriptor(const AlgebraDescriptor& a);
AlgebraPtr build_envelope(const AlgebraPtr& a);
/// True when `sum` is A + A^op for A = sum.left().
bool is_envelope(const Algebra& sum);

/// a -> (a, a^op).
Element s_map(const AlgebraPtr& envelope, const Element& a);
/// (a, b^op) -> (b, a^op).
Element exchange_involution(const Element& z);

enum class SubspaceTag { diag, strict_upper, tn0, diag_commutators, custom };
const char* to_string(SubspaceTag tag);

struct SubspaceBasis {
  AlgebraPtr algebra;
  SubspaceTag tag = SubspaceTag::custom;
  /// Natural spanning set (e_i; e_ij(b) for i < j; commutators), in canonical order.
  std::vector<Element> generators;
  EchelonBasis echelon;

  bool contains(const Element& x) const;
  std::size_t rank() const { return echelon.size(); }
};

SubspaceBasis subspace(const AlgebraPtr& a, SubspaceTag tag);
SubspaceBasis custom_subspace(const AlgebraPtr& a, std::vector<Element> generators);

/// Basis of e_i A e_j (i < j): e_ij(b) for the inner basis b.
std::vector<Element> homogeneous_basis(const AlgebraPtr& a, GradingIndex g);

std::vector<Vec> dense_rows(const std::vector<Element>& elements);

}  // namespace trialg
