#pragma once

// Normal forms for submodules of Phi^N: Hermite normal form over Z and
// Howell normal form over Z/m. Both are canonical, so two generating sets of
// the same submodule echelonize to identical rows.

#include "trialg/scalar.hpp"

#include <optional>
#include <span>
#include <vector>

namespace trialg {

class ScalarMatrix {
 public:
  ScalarMatrix(ScalarRing ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Builds from row vectors of equal length `cols`.
  static ScalarMatrix from_rows(ScalarRing ring, const std::vector<Vec>& rows, std::size_t cols);
  static ScalarMatrix identity(ScalarRing ring, std::size_t n);

  const ScalarRing& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  mpz_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const mpz_class& v) { at(r, c) = ring_.canonical(v); }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  ScalarMatrix transpose() const;
  /// Matrix-vector product a·x.
  Vec apply(const Vec& x) const;

 private:
  ScalarRing ring_;
  std::size_t rows_, cols_;
  Vec data_;
};

struct EchelonBasis {
  ScalarRing ring;
  std::size_t ambient_rank = 0;
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
  /// When present, transforms[i] expresses rows[i] as a combination of the
  /// generating vectors the basis was computed from.
  std::vector<Vec> transforms;

  bool tracked() const noexcept { return transforms.size() == rows.size() && !rows.empty(); }
  std::size_t size() const noexcept { return rows.size(); }
};

/// Result of echelonizing a generating set while tracking combinations.
struct TrackedEchelon {
  EchelonBasis basis;
  /// Generators of the relation module {c : sum c_k v_k = 0}.
  std::vector<Vec> kernel;
  std::size_t generator_count = 0;
};

EchelonBasis echelonize(const ScalarRing& ring, std::span<const Vec> rows, std::size_t width);
EchelonBasis echelonize(const ScalarMatrix& m);
TrackedEchelon echelonize_tracked(const ScalarRing& ring, std::span<const Vec> rows, std::size_t width);

/// Coordinates of `v` on the rows of `b`, present iff v lies in the span.
std::optional<Vec> membership(const Vec& v, const EchelonBasis& b);
bool contains(const EchelonBasis& b, const Vec& v);
/// Coordinates of `v` on the original generators of a tracked echelon.
std::optional<Vec> generator_coordinates(const Vec& v, const TrackedEchelon& t);

/// One solution x of a·x = rhs, chosen deterministically through the
/// normal form of the columns of a.
std::optional<Vec> solve_linear(const ScalarMatrix& a, const Vec& rhs);

struct SpanSize {
  std::size_t rank = 0;
  /// Number of elements of the span; only defined over Z/m (and for the zero module).
  std::optional<mpz_class> cardinality;
};
SpanSize span_rank_and_cardinality(const EchelonBasis& b);

bool same_span(const EchelonBasis& a, const EchelonBasis& b);
/// Echelon basis of the sum of two spans.
EchelonBasis span_sum(const EchelonBasis& a, const EchelonBasis& b);
/// Adds one vector to a span; returns false (leaving `b` unchanged) when it was already a member.
bool extend_span(EchelonBasis& b, const Vec& v);

}  // namespace trialg
