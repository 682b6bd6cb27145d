#include "trialg/triangular.hpp"

#include <tuple>

namespace trialg {

bool is_triangular(const Algebra& a) { return a.descriptor().kind == AlgebraDescriptor::Kind::triangular; }

void require_triangular(const Algebra& a) {
  if (!is_triangular(a)) throw AlgebraMismatch("expected a triangular algebra, got " + a.descriptor().to_string());
}

std::size_t triangular_order(const Algebra& a) {
  require_triangular(a);
  return a.descriptor().size;
}

namespace {

void check_range(std::size_t n, std::size_t i, const char* what) {
  if (i < 1 || i > n) {
    throw std::out_of_range(std::string(what) + " index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
}

}  // namespace

std::size_t triangular_index(const Algebra& a, std::size_t i, std::size_t j, std::size_t s) {
  const std::size_t n = triangular_order(a);
  check_range(n, i, "row");
  check_range(n, j, "column");
  if (i > j) throw std::invalid_argument("e_ij with i > j is not in T_n");
  const std::size_t r = a.inner()->rank();
  if (s >= r) throw std::out_of_range("inner basis index out of range");
  const std::size_t row = i - 1, col = j - 1;
  const std::size_t cell = row * n - row * (row - 1) / 2 + (col - row);
  return cell * r + s;
}

std::tuple<std::size_t, std::size_t, std::size_t> triangular_position(const Algebra& a, std::size_t index) {
  const std::size_t n = triangular_order(a);
  const std::size_t r = a.inner()->rank();
  std::size_t cell = index / r;
  std::size_t row = 0;
  while (cell >= n - row) {
    cell -= n - row;
    ++row;
  }
  return {row + 1, row + cell + 1, index % r};
}

Element matrix_unit(const AlgebraPtr& a, std::size_t i, std::size_t j, const Element& r) {
  require_triangular(*a);
  if (!r.algebra()->same_as(*a->inner())) throw AlgebraMismatch("matrix unit entry is not in the coefficient algebra");
  Terms terms;
  for (const auto& t : r.terms()) terms.push_back({triangular_index(*a, i, j, t.index), t.coeff});
  return Element::from_terms(a, std::move(terms));
}

Element idempotent(const AlgebraPtr& a, std::size_t i) {
  check_range(triangular_order(*a), i, "idempotent");
  return matrix_unit(a, i, i, a->inner()->unit());
}

Element graded_component(const Element& x, GradingIndex g) {
  const AlgebraPtr& alg = x.algebra();
  if (is_envelope(*alg)) {
    const AlgebraPtr& base = alg->left();
    const Element l = graded_component(project_left(x), g);
    const Element r = graded_component(reinterpret(base, project_right(x)), g);
    return inject_left(alg, l) + inject_right(alg, reinterpret(alg->right(), r));
  }
  const std::size_t n = triangular_order(*alg);
  check_range(n, g.i, "grading");
  check_range(n, g.j, "grading");
  return idempotent(alg, g.i) * x * idempotent(alg, g.j);
}

Element projection_p(const Element& x) {
  const AlgebraPtr& a = x.algebra();
  require_triangular(*a);
  const std::size_t r = a->inner()->rank();
  Terms terms;
  for (const auto& t : x.terms()) {
    if (t.index < r) terms.push_back(t);  // cell (1,1) occupies the first r indices
  }
  return Element::from_terms(a->inner(), std::move(terms));
}

AlgebraDescriptor envelope_descriptor(const AlgebraDescriptor& a) {
  return AlgebraDescriptor::direct_sum(a, AlgebraDescriptor::opposite(a));
}

AlgebraPtr build_envelope(const AlgebraPtr& a) { return build_algebra(a->ring(), envelope_descriptor(a->descriptor())); }

bool is_envelope(const Algebra& sum) {
  const auto& d = sum.descriptor();
  return d.kind == AlgebraDescriptor::Kind::direct_sum && d.right().kind == AlgebraDescriptor::Kind::opposite &&
         d.right().inner() == d.left();
}

namespace {

void require_envelope(const Algebra& a) {
  if (!is_envelope(a)) throw AlgebraMismatch("expected A + A^op, got " + a.descriptor().to_string());
}

}  // namespace

Element s_map(const AlgebraPtr& envelope, const Element& a) {
  require_envelope(*envelope);
  return inject_left(envelope, a) + inject_right(envelope, reinterpret(envelope->right(), a));
}

Element exchange_involution(const Element& z) {
  const AlgebraPtr& env = z.algebra();
  require_envelope(*env);
  const Element l = project_left(z);
  const Element r = project_right(z);
  return inject_left(env, reinterpret(env->left(), r)) + inject_right(env, reinterpret(env->right(), l));
}

const char* to_string(SubspaceTag tag) {
  switch (tag) {
    case SubspaceTag::diag: return "Diag";
    case SubspaceTag::strict_upper: return "StrictUpper";
    case SubspaceTag::tn0: return "Tn0";
    case SubspaceTag::diag_commutators: return "DiagCommutators";
    case SubspaceTag::custom: return "Custom";
  }
  return "?";
}

std::vector<Vec> dense_rows(const std::vector<Element>& elements) {
  std::vector<Vec> rows;
  rows.reserve(elements.size());
  for (const auto& e : elements) rows.push_back(e.dense());
  return rows;
}

bool SubspaceBasis::contains(const Element& x) const {
  if (!x.algebra()->same_as(*algebra)) return false;
  return trialg::contains(echelon, x.dense());
}

std::vector<Element> homogeneous_basis(const AlgebraPtr& a, GradingIndex g) {
  const std::size_t n = triangular_order(*a);
  check_range(n, g.i, "grading");
  check_range(n, g.j, "grading");
  std::vector<Element> out;
  if (g.i > g.j) return out;
  for (std::size_t s = 0; s < a->inner()->rank(); ++s) {
    out.push_back(a->basis_element(triangular_index(*a, g.i, g.j, s)));
  }
  return out;
}

SubspaceBasis subspace(const AlgebraPtr& a, SubspaceTag tag) {
  const std::size_t n = triangular_order(*a);
  std::vector<Element> diag, strict;
  for (std::size_t i = 1; i <= n; ++i) diag.push_back(idempotent(a, i));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      auto block = homogeneous_basis(a, {i, j});
      strict.insert(strict.end(), block.begin(), block.end());
    }
  }
  std::vector<Element> gens;
  switch (tag) {
    case SubspaceTag::diag: gens = diag; break;
    case SubspaceTag::strict_upper: gens = strict; break;
    case SubspaceTag::tn0:
      gens = diag;
      gens.insert(gens.end(), strict.begin(), strict.end());
      break;
    case SubspaceTag::diag_commutators:
      for (const auto& x : strict) {
        for (const auto& y : strict) {
          Element c = commutator(x, y);
          if (!c.is_zero()) gens.push_back(std::move(c));
        }
      }
      break;
    case SubspaceTag::custom: throw std::invalid_argument("use custom_subspace for custom spans");
  }
  SubspaceBasis sb = custom_subspace(a, std::move(gens));
  sb.tag = tag;
  return sb;
}

SubspaceBasis custom_subspace(const AlgebraPtr& a, std::vector<Element> generators) {
  SubspaceBasis sb;
  sb.algebra = a;
  sb.tag = SubspaceTag::custom;
  for (const auto& g : generators) {
    if (!g.algebra()->same_as(*a)) throw AlgebraMismatch("subspace generator outside the algebra");
  }
  sb.echelon = echelonize(a->ring(), dense_rows(generators), a->rank());
  sb.generators = std::move(generators);
  return sb;
}

}  // namespace trialg
