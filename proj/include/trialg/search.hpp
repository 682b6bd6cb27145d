#pragma once

// Exhaustive searches over finite codomains: uniqueness of the
// homomorphism/antihomomorphism pair, and the search for phi = h + k with h a
// homomorphism and k an antihomomorphism on a whole algebra.

#include "trialg/decompose.hpp"

#include <cstdint>

namespace trialg {

struct SearchBounds {
  /// Refuse when |codomain|^(free generators) exceeds this.
  std::uint64_t max_enum = 100000000;
  /// Abort the depth-first search after this many assignments.
  std::uint64_t max_nodes = 50000000;
  /// Keep at most this many solutions in the result (all are counted).
  std::size_t keep = 16;
};

/// All elements of a finite algebra in lexicographic order of coefficient
/// vectors (first coordinate most significant). Throws PreconditionError over Z.
std::vector<Element> enumerate_elements(const AlgebraPtr& b, std::uint64_t max_count);

/// Greedy algebra generating set of a domain: scan the basis (diagonal cells
/// first, then by distance from the diagonal) and keep each element outside the
/// subalgebra generated so far.
std::vector<Element> greedy_generators(const DomainPtr& domain);

/// e_1..e_n followed by e_{i,i+1}(b) for the inner basis b.
std::vector<Element> tn0_generators(const AlgebraPtr& triangular);

struct UniquenessResult {
  bool orthogonality_required = true;
  std::uint64_t hom_candidates = 0;
  std::uint64_t antihom_candidates = 0;
  std::uint64_t pair_count = 0;
  std::uint64_t nodes = 0;
  std::uint64_t search_space = 0;
  std::vector<PairDecomposition> pairs;  // first `keep`, in search order
  CheckReport report{"uniqueness"};
};

/// Counts pairs (psi1, psi2) on T_n^0(R) satisfying (i), (iii), psi1 hom, psi2
/// antihom and, unless dropped, (ii). The report passes when exactly one pair
/// exists and it equals extract_pair(phi).
UniquenessResult exhaustive_uniqueness(const LinMap& phi, bool require_orthogonality = true,
                                       const SearchBounds& bounds = {});

/// Where h and k may take values: the subalgebra generated by the image of
/// phi (the default; B is replaced by the algebra phi actually generates), or
/// the whole codomain, where x -> (x, 0) and x -> (0, x^op) always split S.
enum class CodomainScope { generated, full };
const char* to_string(CodomainScope scope);

/// Elements of the span of `b` inside `ambient`, in lexicographic order.
std::vector<Element> enumerate_span(const AlgebraPtr& ambient, const EchelonBasis& b, std::uint64_t max_count);

struct SumSearchResult {
  bool orthogonality_required = true;
  CodomainScope scope = CodomainScope::generated;
  std::size_t scope_rank = 0;
  std::uint64_t solution_count = 0;
  std::uint64_t nodes = 0;
  std::vector<Element> generators;
  std::vector<std::pair<LinMap, LinMap>> solutions;  // (h, k), first `keep`
  CheckReport report{"search_sum"};
};

/// All h with h a homomorphism and k = phi - h an antihomomorphism on the whole
/// domain of phi, optionally requiring h(x)k(y) = k(y)h(x) = 0. The report
/// carries counts only: whether a solution exists is data, not a pass/fail.
SumSearchResult search_hom_antihom_sum(const LinMap& phi, bool require_orthogonal = true,
                                       const SearchBounds& bounds = {},
                                       CodomainScope scope = CodomainScope::generated);

}  // namespace trialg
