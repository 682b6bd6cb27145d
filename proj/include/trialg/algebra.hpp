#pragma once

// Finite-rank unital algebras over the base ring, presented by a canonical
// basis and structure constants computed on demand.
//
// Canonical basis orderings:
//   scalar          {1}
//   matrix(k, R)    E_pq(r): (p, q) lexicographic, inner basis r nested
//   free(g, D)      words by length, then lexicographic in letters 0..g-1
//   triangular(n,R) e_ij(r), i <= j: (i, j) lexicographic, inner basis nested
//   opposite(A)     same basis as A
//   direct_sum(A,B) basis of A, then basis of B

#include "trialg/scalar.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace trialg {

class AlgebraMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct AlgebraDescriptor {
  enum class Kind { scalar, matrix, free, triangular, opposite, direct_sum };

  Kind kind = Kind::scalar;
  std::size_t size = 0;        // matrix order k or triangular order n
  std::size_t generators = 0;  // free
  std::size_t max_degree = 0;  // free
  std::vector<AlgebraDescriptor> children;

  static AlgebraDescriptor scalar();
  static AlgebraDescriptor matrix(std::size_t k, AlgebraDescriptor inner);
  static AlgebraDescriptor free(std::size_t generators, std::size_t max_degree);
  static AlgebraDescriptor triangular(std::size_t n, AlgebraDescriptor inner);
  static AlgebraDescriptor opposite(AlgebraDescriptor inner);
  static AlgebraDescriptor direct_sum(AlgebraDescriptor left, AlgebraDescriptor right);

  const AlgebraDescriptor& inner() const { return children.at(0); }
  const AlgebraDescriptor& left() const { return children.at(0); }
  const AlgebraDescriptor& right() const { return children.at(1); }

  /// Rank over the base ring, computed from the descriptor alone.
  std::size_t rank() const;
  std::string to_string() const;

  friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;
};

struct Term {
  std::size_t index;
  mpz_class coeff;
  friend bool operator==(const Term&, const Term&) = default;
};
using Terms = std::vector<Term>;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Sparse coefficient vector over an algebra's canonical basis. Terms are
/// sorted by index and never hold a zero coefficient.
class Element {
 public:
  Element() = default;
  static Element zero(AlgebraPtr algebra);
  static Element basis(AlgebraPtr algebra, std::size_t index);
  static Element from_terms(AlgebraPtr algebra, Terms terms);
  static Element from_dense(AlgebraPtr algebra, const Vec& coeffs);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  mpz_class coefficient(std::size_t index) const;
  Vec dense() const;
  std::string to_string() const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element operator-() const;
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element scaled(const mpz_class& c) const;

  /// Coefficient-wise equality; elements of structurally different algebras differ.
  friend bool operator==(const Element& a, const Element& b);

 private:
  AlgebraPtr algebra_;
  Terms terms_;
};

Element operator*(const mpz_class& c, const Element& x);

class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  Algebra(ScalarRing ring, AlgebraDescriptor descriptor);

  const ScalarRing& ring() const noexcept { return ring_; }
  const AlgebraDescriptor& descriptor() const noexcept { return descriptor_; }
  std::size_t rank() const noexcept { return rank_; }
  const Element& unit() const { return unit_; }
  Element basis_element(std::size_t i) const { return Element::basis(self(), i); }
  std::vector<Element> basis() const;

  /// Product of two canonical basis elements, memoized.
  const Terms& basis_product(std::size_t i, std::size_t j) const;

  /// Child algebras: inner for matrix/triangular/opposite, left/right for direct sums.
  const AlgebraPtr& inner() const { return children_.at(0); }
  const AlgebraPtr& left() const { return children_.at(0); }
  const AlgebraPtr& right() const { return children_.at(1); }

  std::string basis_label(std::size_t i) const;

  bool same_as(const Algebra& other) const {
    return this == &other || (ring_ == other.ring_ && descriptor_ == other.descriptor_);
  }

  AlgebraPtr self() const { return shared_from_this(); }

 private:
  friend AlgebraPtr build_algebra(const ScalarRing&, const AlgebraDescriptor&);
  void finish();
  Terms compute_product(std::size_t i, std::size_t j) const;
  Terms compute_unit() const;

  ScalarRing ring_;
  AlgebraDescriptor descriptor_;
  std::size_t rank_ = 0;
  std::vector<AlgebraPtr> children_;
  Element unit_;
  // free algebra: offsets of each word length in the basis
  std::vector<std::size_t> word_offsets_;

  mutable std::mutex memo_mutex_;
  mutable std::vector<std::unique_ptr<Terms>> memo_;
};

/// Throws std::invalid_argument for malformed descriptors (e.g. triangular n < 2).
AlgebraPtr build_algebra(const ScalarRing& ring, const AlgebraDescriptor& descriptor);

void require_same_algebra(const Element& x, const Element& y, const char* what);

Element multiply(const Element& x, const Element& y);
Element operator*(const Element& x, const Element& y);
Element jordan_product(const Element& x, const Element& y);
Element commutator(const Element& x, const Element& y);

// Direct-sum and opposite plumbing.
Element inject_left(const AlgebraPtr& sum, const Element& x);
Element inject_right(const AlgebraPtr& sum, const Element& y);
Element project_left(const Element& z);
Element project_right(const Element& z);
/// Same coefficients, reinterpreted in another algebra with the same basis (A <-> A^op).
Element reinterpret(const AlgebraPtr& target, const Element& x);

/// Words of the truncated free algebra, indexed like its basis.
std::vector<std::vector<std::size_t>> free_words(std::size_t generators, std::size_t max_degree);

}  // namespace trialg
