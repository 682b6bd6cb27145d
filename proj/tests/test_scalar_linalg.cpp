#include "doctest.h"

#include "trialg/echelon.hpp"
#include "trialg/random.hpp"

#include <set>

using namespace trialg;

namespace {

// Plain Euclid, independent of GMP's gcd.
long euclid(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Vec vec(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// All vectors of Z/m^width, used as a brute-force oracle.
std::vector<Vec> all_vectors(long m, std::size_t width) {
  std::vector<Vec> out;
  Vec cur(width, 0);
  for (;;) {
    out.push_back(cur);
    std::size_t k = 0;
    while (k < width) {
      if (++cur[k] < m) break;
      cur[k] = 0;
      ++k;
    }
    if (k == width) return out;
  }
}

Vec combine(const ScalarRing& ring, const std::vector<Vec>& rows, const Vec& coeffs, std::size_t width) {
  Vec out(width, 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < width; ++j) out[j] += coeffs[i] * rows[i][j];
  }
  for (auto& x : out) ring.reduce(x);
  return out;
}

// Brute-force span over Z/m: every combination of the generators.
std::set<Vec> brute_span(long m, const std::vector<Vec>& gens, std::size_t width) {
  const ScalarRing ring = ScalarRing::modular(m);
  std::set<Vec> out;
  for (const auto& c : all_vectors(m, gens.size())) out.insert(combine(ring, gens, c, width));
  if (gens.empty()) out.insert(Vec(width, 0));
  return out;
}

std::vector<Vec> random_rows(SplitMix64& rng, long m, std::size_t rows, std::size_t width) {
  std::vector<Vec> out(rows, Vec(width));
  for (auto& r : out) {
    for (auto& x : r) x = static_cast<long>(rng.below(static_cast<std::uint64_t>(m)));
  }
  return out;
}

}  // namespace

TEST_CASE("scalar arithmetic") {
  const auto z = ScalarRing::integers();
  const auto z4 = ScalarRing::modular(4);
  CHECK((Scalar(z, 3) + Scalar(z, 4)).value() == 7);
  CHECK((Scalar(z4, 3) + Scalar(z4, 3)).value() == 2);
  CHECK((Scalar(z4, 2) * Scalar(z4, 2)).value() == 0);
  CHECK(scalar_arithmetic(Scalar(z4, 1), Scalar(z4, 0), ScalarOp::neg).value() == 3);
  CHECK((Scalar(z, 2) - Scalar(z, 5)).value() == -3);
  CHECK_THROWS_AS(Scalar(z, 1) + Scalar(z4, 1), RingMismatch);
  CHECK_THROWS_AS(Scalar(z4, 1) * Scalar(ScalarRing::modular(2), 1), RingMismatch);
  CHECK_THROWS(ScalarRing::modular(1));
  CHECK(parse_scalar(z4, "-1") == 3);
  CHECK(parse_scalar(z, "123456789012345678901234567890") == mpz_class("123456789012345678901234567890"));
}

TEST_CASE("echelonize over Z: gcd of a single column") {
  const auto z = ScalarRing::integers();
  const auto b = echelonize(ScalarMatrix::from_rows(z, {vec({4}), vec({6})}, 1));
  REQUIRE(b.rows.size() == 1);
  CHECK(b.rows[0] == vec({euclid(4, 6)}));

  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const long a = static_cast<long>(rng.below(2000)) - 1000;
    const long c = static_cast<long>(rng.below(2000)) - 1000;
    const auto e = echelonize(ScalarMatrix::from_rows(z, {vec({a}), vec({c})}, 1));
    const long g = euclid(a, c);
    if (g == 0) {
      CHECK(e.rows.empty());
    } else {
      REQUIRE(e.rows.size() == 1);
      CHECK(e.rows[0][0] == g);
    }
  }
}

TEST_CASE("identity rows are already in normal form") {
  for (const auto& ring : {ScalarRing::integers(), ScalarRing::modular(2), ScalarRing::modular(4), ScalarRing::modular(6)}) {
    const auto id = ScalarMatrix::identity(ring, 4);
    const auto b = echelonize(id);
    REQUIRE(b.rows.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(b.rows[i] == id.row(i));
  }
}

TEST_CASE("Howell form over Z/4 against enumeration") {
  const auto z4 = ScalarRing::modular(4);
  const auto b = echelonize(ScalarMatrix::from_rows(z4, {vec({2})}, 1));
  REQUIRE(b.rows.size() == 1);
  CHECK(b.rows[0] == vec({2}));
  // multiples of 2 mod 4 are {0, 2}
  const auto span = brute_span(4, {vec({2})}, 1);
  CHECK(span == std::set<Vec>{vec({0}), vec({2})});
  CHECK_FALSE(membership(vec({1}), b).has_value());
  CHECK(membership(vec({2}), b).has_value());
  CHECK(membership(vec({3}), b) == std::nullopt);
  const auto size = span_rank_and_cardinality(b);
  CHECK(size.rank == 1);
  CHECK(*size.cardinality == 2);
}

TEST_CASE("membership basics") {
  const auto z = ScalarRing::integers();
  const auto b = echelonize(z, std::vector<Vec>{vec({2})}, 1);
  CHECK(*membership(vec({0}), b) == vec({0}));
  CHECK(*membership(vec({2}), b) == vec({1}));
  CHECK_FALSE(membership(vec({1}), b));
  CHECK_THROWS_AS(membership(vec({1, 2}), b), DimensionMismatch);
}

TEST_CASE("solve_linear examples") {
  const auto z = ScalarRing::integers();
  const auto z4 = ScalarRing::modular(4);
  const Vec rhs = vec({5, -2, 7});
  CHECK(*solve_linear(ScalarMatrix::identity(z, 3), rhs) == rhs);
  CHECK(*solve_linear(ScalarMatrix::from_rows(z4, {vec({2})}, 1), vec({2})) == vec({1}));
  CHECK_FALSE(solve_linear(ScalarMatrix::from_rows(z, {vec({2})}, 1), vec({1})));
  CHECK_THROWS_AS(solve_linear(ScalarMatrix::identity(z, 2), vec({1})), DimensionMismatch);
}

TEST_CASE("span_rank_and_cardinality examples") {
  const auto z2 = ScalarRing::modular(2);
  EchelonBasis empty{z2, 3, {}, {}, {}};
  CHECK(span_rank_and_cardinality(empty).rank == 0);
  CHECK(*span_rank_and_cardinality(empty).cardinality == 1);
  EchelonBasis empty_z{ScalarRing::integers(), 3, {}, {}, {}};
  CHECK(*span_rank_and_cardinality(empty_z).cardinality == 1);
  const auto plane = echelonize(ScalarMatrix::identity(z2, 2));
  CHECK(span_rank_and_cardinality(plane).rank == 2);
  CHECK(*span_rank_and_cardinality(plane).cardinality == 4);
  const auto line_z = echelonize(ScalarMatrix::identity(ScalarRing::integers(), 1));
  CHECK_FALSE(span_rank_and_cardinality(line_z).cardinality.has_value());
}

TEST_CASE("random spans over small moduli agree with brute force") {
  SplitMix64 rng(11);
  for (long m : {2L, 3L, 4L, 6L, 8L, 9L}) {
    const auto ring = ScalarRing::modular(m);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t width = 1 + rng.below(3);
      const std::size_t count = rng.below(4);
      const auto gens = random_rows(rng, m, count, width);
      const auto b = echelonize(ring, gens, width);
      const auto span = brute_span(m, gens, width);
      CHECK(*span_rank_and_cardinality(b).cardinality == static_cast<long>(span.size()));
      for (const auto& v : all_vectors(m, width)) {
        const auto coords = membership(v, b);
        CHECK(coords.has_value() == (span.count(v) == 1));
        if (coords) CHECK(combine(ring, b.rows, *coords, width) == v);
      }
      // echelonizing the rows again is a no-op
      const auto again = echelonize(ring, b.rows, width);
      CHECK(again.rows == b.rows);
      CHECK(again.pivots == b.pivots);
      // the tracked form agrees and its transforms reproduce the rows
      const auto tracked = echelonize_tracked(ring, gens, width);
      CHECK(tracked.basis.rows == b.rows);
      for (std::size_t i = 0; i < b.rows.size(); ++i) {
        CHECK(combine(ring, gens, tracked.basis.transforms[i], width) == b.rows[i]);
      }
      for (const auto& rel : tracked.kernel) CHECK(is_zero(combine(ring, gens, rel, width)));
    }
  }
}

TEST_CASE("Hermite form is canonical over Z") {
  const auto z = ScalarRing::integers();
  SplitMix64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Vec> gens(3, Vec(4));
    for (auto& r : gens) {
      for (auto& x : r) x = static_cast<long>(rng.below(21)) - 10;
    }
    const auto b = echelonize(z, gens, 4);
    // A different generating set of the same lattice: unimodular row mixing.
    std::vector<Vec> mixed = gens;
    for (std::size_t j = 0; j < 4; ++j) {
      mixed[0][j] += 3 * gens[1][j];
      mixed[2][j] -= 2 * mixed[0][j];
    }
    std::swap(mixed[0], mixed[1]);
    mixed.push_back(Vec(4, 0));
    mixed.push_back(gens[2]);
    const auto c = echelonize(z, mixed, 4);
    CHECK(b.rows == c.rows);
    CHECK(echelonize(z, b.rows, 4).rows == b.rows);
    for (std::size_t i = 0; i < b.rows.size(); ++i) {
      const std::size_t p = b.pivots[i];
      CHECK(b.rows[i][p] > 0);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(b.rows[k][p] >= 0);
        CHECK(b.rows[k][p] < b.rows[i][p]);
      }
      if (i > 0) CHECK(b.pivots[i] > b.pivots[i - 1]);
    }
  }
}

TEST_CASE("solve_linear against exhaustive search") {
  SplitMix64 rng(23);
  struct Shape {
    long m;
    std::size_t unknowns;
  };
  for (const Shape s : {Shape{2, 12}, Shape{3, 7}, Shape{4, 6}, Shape{4, 3}, Shape{2, 5}}) {
    const auto ring = ScalarRing::modular(s.m);
    const auto candidates = all_vectors(s.m, s.unknowns);
    for (int trial = 0; trial < (s.unknowns > 8 ? 3 : 12); ++trial) {
      const std::size_t eqs = 1 + rng.below(4);
      const auto rows = random_rows(rng, s.m, eqs, s.unknowns);
      const ScalarMatrix a = ScalarMatrix::from_rows(ring, rows, s.unknowns);
      Vec rhs = random_rows(rng, s.m, 1, eqs)[0];
      const auto x = solve_linear(a, rhs);
      bool solvable = false;
      for (const auto& c : candidates) {
        Vec ac = a.apply(c);
        if (ac == rhs) {
          solvable = true;
          break;
        }
      }
      CHECK(x.has_value() == solvable);
      if (x) CHECK(a.apply(*x) == rhs);
    }
  }
}

TEST_CASE("span helpers") {
  const auto z4 = ScalarRing::modular(4);
  auto a = echelonize(z4, std::vector<Vec>{vec({1, 0, 0})}, 3);
  const auto b = echelonize(z4, std::vector<Vec>{vec({0, 2, 0})}, 3);
  const auto sum = span_sum(a, b);
  CHECK(*span_rank_and_cardinality(sum).cardinality == 8);
  CHECK(extend_span(a, vec({0, 2, 0})));
  CHECK_FALSE(extend_span(a, vec({3, 2, 0})));
  CHECK(same_span(a, sum));
  CHECK_FALSE(same_span(a, b));
}
