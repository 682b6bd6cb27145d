#include "trialg/echelon.hpp"

#include <algorithm>
#include <string>

namespace trialg {

ScalarMatrix ScalarMatrix::from_rows(ScalarRing ring, const std::vector<Vec>& rows, std::size_t cols) {
  ScalarMatrix m(std::move(ring), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

ScalarMatrix ScalarMatrix::identity(ScalarRing ring, std::size_t n) {
  ScalarMatrix m(std::move(ring), n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Vec ScalarMatrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec ScalarMatrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Vec ScalarMatrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
  Vec y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    mpz_class acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += at(r, c) * x[c];
    y[r] = ring_.canonical(acc);
  }
  return y;
}

namespace {

// Unit u of Z/m with u*a = gcd(a, m) (mod m).
mpz_class normalizing_unit(const mpz_class& a, const mpz_class& m) {
  mpz_class g = gcd(a, m);
  mpz_class ap = a / g;
  mpz_class mp = m / g;
  mpz_class u = 1;
  if (mp > 1) mpz_invert(u.get_mpz_t(), ap.get_mpz_t(), mp.get_mpz_t());
  while (gcd(u, m) != 1) u += mp;
  return u;
}

void reduce_row(const ScalarRing& ring, Vec& v) {
  for (auto& x : v) ring.reduce(x);
}

// v <- v - q*w on columns [from, end).
void axpy_sub(const ScalarRing& ring, Vec& v, const mpz_class& q, const Vec& w, std::size_t from) {
  for (std::size_t c = from; c < v.size(); ++c) {
    if (w[c] == 0) continue;
    v[c] -= q * w[c];
    ring.reduce(v[c]);
  }
}

struct CoreResult {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
};

// Column sweep producing the Hermite (Z) or Howell (Z/m) form of the row span.
CoreResult echelon_core(const ScalarRing& ring, std::vector<Vec> work) {
  CoreResult out;
  if (work.empty()) return out;
  const std::size_t width = work.front().size();
  for (auto& r : work) reduce_row(ring, r);
  std::erase_if(work, [](const Vec& r) { return is_zero(r); });

  mpz_class g, s, t, a_div, b_div;
  for (std::size_t c = 0; c < width && !work.empty(); ++c) {
    std::size_t p = work.size();
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (work[i][c] != 0) {
        p = i;
        break;
      }
    }
    if (p == work.size()) continue;
    Vec pivot = std::move(work[p]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(p));

    for (auto& r : work) {
      if (r[c] == 0) continue;
      const mpz_class a = pivot[c];
      const mpz_class b = r[c];
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      a_div = a / g;
      b_div = b / g;
      for (std::size_t k = c; k < width; ++k) {
        if (pivot[k] == 0 && r[k] == 0) continue;
        mpz_class np = s * pivot[k] + t * r[k];
        mpz_class nr = a_div * r[k] - b_div * pivot[k];
        ring.reduce(np);
        ring.reduce(nr);
        pivot[k] = std::move(np);
        r[k] = std::move(nr);
      }
    }
    std::erase_if(work, [](const Vec& r) { return is_zero(r); });

    if (ring.is_modular()) {
      const mpz_class u = normalizing_unit(pivot[c], ring.modulus());
      if (u != 1) {
        for (std::size_t k = c; k < width; ++k) {
          if (pivot[k] != 0) pivot[k] = ring.mul(pivot[k], u);
        }
      }
      const mpz_class ann = ring.modulus() / pivot[c];
      Vec extra(width);
      for (std::size_t k = c + 1; k < width; ++k) extra[k] = ring.mul(pivot[k], ann);
      if (!is_zero(extra)) work.push_back(std::move(extra));
    } else if (pivot[c] < 0) {
      for (std::size_t k = c; k < width; ++k) pivot[k] = -pivot[k];
    }
    out.rows.push_back(std::move(pivot));
    out.pivots.push_back(c);
  }

  // Reduce entries above each pivot into [0, pivot).
  mpz_class q;
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    const std::size_t c = out.pivots[i];
    const mpz_class& pv = out.rows[i][c];
    for (std::size_t k = 0; k < i; ++k) {
      Vec& row = out.rows[k];
      if (row[c] == 0) continue;
      mpz_fdiv_q(q.get_mpz_t(), row[c].get_mpz_t(), pv.get_mpz_t());
      if (q != 0) axpy_sub(ring, row, q, out.rows[i], c);
    }
  }
  return out;
}

}  // namespace

EchelonBasis echelonize(const ScalarRing& ring, std::span<const Vec> rows, std::size_t width) {
  std::vector<Vec> work;
  work.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != width) throw DimensionMismatch("vector of length " + std::to_string(r.size()) +
                                                   " in span of width " + std::to_string(width));
    work.push_back(r);
  }
  CoreResult core = echelon_core(ring, std::move(work));
  EchelonBasis b;
  b.ring = ring;
  b.ambient_rank = width;
  b.rows = std::move(core.rows);
  b.pivots = std::move(core.pivots);
  return b;
}

EchelonBasis echelonize(const ScalarMatrix& m) {
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return echelonize(m.ring(), rows, m.cols());
}

TrackedEchelon echelonize_tracked(const ScalarRing& ring, std::span<const Vec> rows, std::size_t width) {
  const std::size_t k = rows.size();
  std::vector<Vec> work;
  work.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (rows[i].size() != width) throw DimensionMismatch("generator length mismatch in tracked echelon");
    Vec aug(width + k);
    std::copy(rows[i].begin(), rows[i].end(), aug.begin());
    aug[width + i] = 1;
    work.push_back(std::move(aug));
  }
  CoreResult core = echelon_core(ring, std::move(work));

  TrackedEchelon out;
  out.generator_count = k;
  out.basis.ring = ring;
  out.basis.ambient_rank = width;
  for (std::size_t i = 0; i < core.rows.size(); ++i) {
    Vec& row = core.rows[i];
    Vec tail(row.begin() + static_cast<std::ptrdiff_t>(width), row.end());
    if (core.pivots[i] < width) {
      row.resize(width);
      out.basis.rows.push_back(std::move(row));
      out.basis.pivots.push_back(core.pivots[i]);
      out.basis.transforms.push_back(std::move(tail));
    } else {
      out.kernel.push_back(std::move(tail));
    }
  }
  return out;
}

std::optional<Vec> membership(const Vec& v, const EchelonBasis& b) {
  if (v.size() != b.ambient_rank) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " against span in rank " +
                            std::to_string(b.ambient_rank));
  }
  Vec rest = v;
  reduce_row(b.ring, rest);
  Vec coords(b.rows.size());
  std::size_t next_col = 0;
  for (std::size_t i = 0; i < b.rows.size(); ++i) {
    const std::size_t c = b.pivots[i];
    for (; next_col < c; ++next_col) {
      if (rest[next_col] != 0) return std::nullopt;
    }
    next_col = c + 1;
    if (rest[c] == 0) continue;
    const mpz_class& pv = b.rows[i][c];
    if (!mpz_divisible_p(rest[c].get_mpz_t(), pv.get_mpz_t())) return std::nullopt;
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), rest[c].get_mpz_t(), pv.get_mpz_t());
    axpy_sub(b.ring, rest, q, b.rows[i], c);
    coords[i] = b.ring.canonical(q);
  }
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

bool contains(const EchelonBasis& b, const Vec& v) { return membership(v, b).has_value(); }

std::optional<Vec> generator_coordinates(const Vec& v, const TrackedEchelon& t) {
  auto coords = membership(v, t.basis);
  if (!coords) return std::nullopt;
  Vec x(t.generator_count);
  for (std::size_t i = 0; i < coords->size(); ++i) {
    const mpz_class& q = (*coords)[i];
    if (q == 0) continue;
    const Vec& tr = t.basis.transforms[i];
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (tr[k] != 0) x[k] += q * tr[k];
    }
  }
  reduce_row(t.basis.ring, x);
  return x;
}

std::optional<Vec> solve_linear(const ScalarMatrix& a, const Vec& rhs) {
  if (rhs.size() != a.rows()) throw DimensionMismatch("right-hand side length differs from row count");
  std::vector<Vec> columns;
  columns.reserve(a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) columns.push_back(a.column(c));
  TrackedEchelon t = echelonize_tracked(a.ring(), columns, a.rows());
  return generator_coordinates(rhs, t);
}

SpanSize span_rank_and_cardinality(const EchelonBasis& b) {
  SpanSize s;
  s.rank = b.rows.size();
  if (b.ring.is_modular()) {
    mpz_class card = 1;
    for (std::size_t i = 0; i < b.rows.size(); ++i) card *= b.ring.modulus() / b.rows[i][b.pivots[i]];
    s.cardinality = card;
  } else if (s.rank == 0) {
    s.cardinality = mpz_class(1);
  }
  return s;
}

bool same_span(const EchelonBasis& a, const EchelonBasis& b) {
  return a.ring == b.ring && a.ambient_rank == b.ambient_rank && a.rows == b.rows;
}

EchelonBasis span_sum(const EchelonBasis& a, const EchelonBasis& b) {
  if (!(a.ring == b.ring)) throw RingMismatch("span sum over different rings");
  if (a.ambient_rank != b.ambient_rank) throw DimensionMismatch("span sum of different widths");
  std::vector<Vec> rows = a.rows;
  rows.insert(rows.end(), b.rows.begin(), b.rows.end());
  return echelonize(a.ring, rows, a.ambient_rank);
}

bool extend_span(EchelonBasis& b, const Vec& v) {
  if (contains(b, v)) return false;
  std::vector<Vec> rows = b.rows;
  rows.push_back(v);
  b = echelonize(b.ring, rows, b.ambient_rank);
  return true;
}

}  // namespace trialg
