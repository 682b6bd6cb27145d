#include "trialg/decompose.hpp"

#include <algorithm>

namespace trialg {

bool all_pass(const CheckList& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.pass; });
}

PairDecomposition extract_pair(const LinMap& phi) {
  const AlgebraPtr& a = phi.domain()->ambient();
  const std::size_t n = triangular_order(*a);
  const AlgebraPtr& b = phi.codomain();
  std::vector<Element> f;
  for (std::size_t i = 1; i <= n; ++i) f.push_back(phi(idempotent(a, i)));
  const Element e = phi(a->unit());
  Element sum = Element::zero(b);
  for (std::size_t i = 0; i < n; ++i) {
    sum += f[i];
    for (std::size_t j = 0; j < n; ++j) {
      const Element expect = i == j ? f[i] : Element::zero(b);
      if (!(f[i] * f[j] == expect)) {
        throw PreconditionError("phi(e_" + std::to_string(i + 1) + ") phi(e_" + std::to_string(j + 1) +
                                ") breaks the orthogonal idempotent system; phi is not a Jordan homomorphism");
      }
    }
  }
  if (!(sum == e)) throw PreconditionError("sum of phi(e_i) differs from phi(1); phi is not a Jordan homomorphism");

  const DomainPtr tn0 = tn0_domain(a);
  std::vector<Element> im1, im2;
  // T_n^0 basis: e_1..e_n first, then e_ij(b) with i < j, each a single basis term.
  const auto& basis = tn0->basis();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Element px = phi(basis[k]);
    if (k < n) {
      im1.push_back(px);
      im2.push_back(px);
      continue;
    }
    const auto [i, j, s] = triangular_position(*a, basis[k].terms().front().index);
    im1.push_back(f[i - 1] * px * f[j - 1]);
    im2.push_back(f[j - 1] * px * f[i - 1]);
  }
  return PairDecomposition{LinMap(tn0, b, std::move(im1)), LinMap(tn0, b, std::move(im2)), e};
}

CheckList verify_theorem2(const LinMap& phi, const PairDecomposition& pair) {
  const AlgebraPtr& a = phi.domain()->ambient();
  const auto diag = subspace(a, SubspaceTag::diag).generators;
  const auto strict = subspace(a, SubspaceTag::strict_upper).generators;
  CheckList out;

  CheckReport c1("(i) phi = psi1 = psi2 on Diag");
  for (const auto& x : diag) {
    c1.expect_equal("psi1(a) = phi(a)", {x}, pair.psi1(x), phi(x));
    c1.expect_equal("psi2(a) = phi(a)", {x}, pair.psi2(x), phi(x));
  }
  out.push_back(std::move(c1));

  CheckReport c2("(ii) psi1(a)psi2(b) = psi2(b)psi1(a) = 0 on S_n");
  std::vector<Element> p1, p2;
  for (const auto& x : strict) {
    p1.push_back(pair.psi1(x));
    p2.push_back(pair.psi2(x));
  }
  const Element zero = Element::zero(phi.codomain());
  for (std::size_t i = 0; i < strict.size(); ++i) {
    for (std::size_t j = 0; j < strict.size(); ++j) {
      c2.expect_equal("psi1(a)psi2(b) = 0", {strict[i], strict[j]}, p1[i] * p2[j], zero);
      c2.expect_equal("psi2(b)psi1(a) = 0", {strict[i], strict[j]}, p2[j] * p1[i], zero);
    }
  }
  out.push_back(std::move(c2));

  CheckReport c3("(iii) phi = psi1 + psi2 on S_n");
  for (std::size_t i = 0; i < strict.size(); ++i) {
    c3.expect_equal("phi(a) = psi1(a) + psi2(a)", {strict[i]}, phi(strict[i]), p1[i] + p2[i]);
  }
  out.push_back(std::move(c3));

  out.push_back(is_homomorphism(pair.psi1));
  out.back().check = "psi1 homomorphism";
  out.push_back(is_antihomomorphism(pair.psi2));
  out.back().check = "psi2 antihomomorphism";
  return out;
}

const char* to_string(DerivationDecomposition::Method m) {
  return m == DerivationDecomposition::Method::closed_form ? "closed_form" : "linear_solver";
}

CheckList validate_derivation_pair(const LinMap& d, const LinMap& d1, const LinMap& d2, const Bimodule& m) {
  const AlgebraPtr& a = d.domain()->ambient();
  CheckList out;
  out.push_back(is_derivation(d1, m));
  out.back().check = "d1 derivation";
  out.push_back(is_antiderivation(d2, m));
  out.back().check = "d2 antiderivation";

  CheckReport sum("d = d1 + d2 on T_n^0");
  for (const auto& x : d1.domain()->basis()) sum.expect_equal("d(a) = d1(a) + d2(a)", {x}, d(x), d1(x) + d2(x));
  out.push_back(std::move(sum));

  const Element zero = Element::zero(m.carrier);
  CheckReport diag("d2(Diag) = 0");
  for (const auto& x : subspace(a, SubspaceTag::diag).generators) diag.expect_equal("d2(a) = 0", {x}, d2(x), zero);
  out.push_back(std::move(diag));

  CheckReport comm("d2([S_n, S_n]) = 0");
  const SubspaceBasis cs = subspace(a, SubspaceTag::diag_commutators);
  for (const auto& row : cs.echelon.rows) {
    const Element x = Element::from_dense(a, row);
    comm.expect_equal("d2(c) = 0", {x}, d2(x), zero);
  }
  comm.counts["commutator_rank"] = static_cast<std::int64_t>(cs.rank());
  out.push_back(std::move(comm));
  return out;
}

namespace {

// Matrix of m -> L m R on the carrier, column t = image of carrier basis t.
std::vector<Vec> action_matrix(const AlgebraPtr& carrier, const Element& left, const Element& right) {
  std::vector<Vec> cols;
  for (std::size_t t = 0; t < carrier->rank(); ++t) cols.push_back((left * carrier->basis_element(t) * right).dense());
  return cols;
}

}  // namespace

std::optional<std::pair<LinMap, LinMap>> solve_derivation_split(const LinMap& d, const Bimodule& m,
                                                                std::size_t max_unknowns) {
  const AlgebraPtr& a = d.domain()->ambient();
  const DomainPtr tn0 = tn0_domain(a);
  const auto& basis = tn0->basis();
  const std::size_t k_count = basis.size();
  const std::size_t r = m.carrier->rank();
  const std::size_t unknowns = 2 * k_count * r;
  if (unknowns > max_unknowns) {
    throw BoundExceeded("derivation solver needs " + std::to_string(unknowns) + " unknowns, bound is " +
                        std::to_string(max_unknowns));
  }
  const ScalarRing& ring = a->ring();
  auto x1 = [&](std::size_t k, std::size_t t) { return k * r + t; };
  auto x2 = [&](std::size_t k, std::size_t t) { return k_count * r + k * r + t; };

  std::vector<Vec> rows;
  Vec rhs;
  auto push = [&](Vec row, mpz_class value) {
    for (auto& v : row) ring.reduce(v);
    ring.reduce(value);
    if (is_zero(row) && value == 0) return;
    rows.push_back(std::move(row));
    rhs.push_back(std::move(value));
  };

  const Element one = m.carrier->unit();
  std::vector<std::vector<Vec>> left_of, right_of;  // m -> lambda(b_k) m, m -> m rho(b_k)
  for (const auto& b : basis) {
    left_of.push_back(action_matrix(m.carrier, m.left_hom(b), one));
    right_of.push_back(action_matrix(m.carrier, one, m.right_hom(b)));
  }

  // d1 + d2 = d
  for (std::size_t k = 0; k < k_count; ++k) {
    const Vec target = d(basis[k]).dense();
    for (std::size_t t = 0; t < r; ++t) {
      Vec row(unknowns);
      row[x1(k, t)] = 1;
      row[x2(k, t)] = 1;
      push(std::move(row), target[t]);
    }
  }
  // Leibniz for d1, reversed Leibniz for d2, on all basis pairs.
  for (std::size_t i = 0; i < k_count; ++i) {
    for (std::size_t j = 0; j < k_count; ++j) {
      const auto coords = tn0->coordinates(basis[i] * basis[j]);
      if (!coords) throw std::logic_error("T_n^0 is not closed under multiplication");
      for (int which = 0; which < 2; ++which) {
        auto var = [&](std::size_t k, std::size_t t) { return which == 0 ? x1(k, t) : x2(k, t); };
        for (std::size_t u = 0; u < r; ++u) {
          Vec row(unknowns);
          for (std::size_t k = 0; k < k_count; ++k) {
            if ((*coords)[k] != 0) row[var(k, u)] += (*coords)[k];
          }
          for (std::size_t t = 0; t < r; ++t) {
            if (which == 0) {
              // - d1(b_i) b_j - b_i d1(b_j)
              row[var(i, t)] -= right_of[j][t][u];
              row[var(j, t)] -= left_of[i][t][u];
            } else {
              // - b_j d2(b_i) - d2(b_j) b_i
              row[var(i, t)] -= left_of[j][t][u];
              row[var(j, t)] -= right_of[i][t][u];
            }
          }
          push(std::move(row), 0);
        }
      }
    }
  }
  // d2 vanishes on Diag(Phi) and on [S_n, S_n].
  std::vector<Element> vanish = subspace(a, SubspaceTag::diag).generators;
  for (const auto& row : subspace(a, SubspaceTag::diag_commutators).echelon.rows) {
    vanish.push_back(Element::from_dense(a, row));
  }
  for (const auto& x : vanish) {
    const auto coords = tn0->coordinates(x);
    if (!coords) throw std::logic_error("vanishing set outside T_n^0");
    for (std::size_t t = 0; t < r; ++t) {
      Vec row(unknowns);
      for (std::size_t k = 0; k < k_count; ++k) row[x2(k, t)] = (*coords)[k];
      push(std::move(row), 0);
    }
  }

  const ScalarMatrix system = ScalarMatrix::from_rows(ring, rows, unknowns);
  const auto sol = solve_linear(system, rhs);
  if (!sol) return std::nullopt;
  std::vector<Element> im1, im2;
  for (std::size_t k = 0; k < k_count; ++k) {
    Vec v1(r), v2(r);
    for (std::size_t t = 0; t < r; ++t) {
      v1[t] = (*sol)[x1(k, t)];
      v2[t] = (*sol)[x2(k, t)];
    }
    im1.push_back(Element::from_dense(m.carrier, v1));
    im2.push_back(Element::from_dense(m.carrier, v2));
  }
  return std::make_pair(LinMap(tn0, m.carrier, std::move(im1)), LinMap(tn0, m.carrier, std::move(im2)));
}

DerivationDecomposition decompose_jordan_derivation(const LinMap& d, const Bimodule& m, const DerivationOptions& opts) {
  const AlgebraPtr& a = d.domain()->ambient();
  const std::size_t n = triangular_order(*a);
  if (opts.validate_input && !is_jordan_derivation(d, m).pass) {
    throw PreconditionError("decompose_jordan_derivation: d is not a Jordan derivation");
  }
  const DomainPtr tn0 = tn0_domain(a);
  std::vector<Element> e;
  for (std::size_t i = 1; i <= n; ++i) e.push_back(idempotent(a, i));

  CheckList rejected;
  if (!opts.force_solver) {
    std::vector<Element> im2;
    const auto& basis = tn0->basis();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k < n) {
        im2.push_back(Element::zero(m.carrier));
        continue;
      }
      const auto [i, j, s] = triangular_position(*a, basis[k].terms().front().index);
      im2.push_back(m.right(m.left(e[j - 1], d(basis[k])), e[i - 1]));
    }
    LinMap d2(tn0, m.carrier, std::move(im2));
    LinMap d1 = d.restricted_to(tn0) - d2;
    CheckList checks = validate_derivation_pair(d, d1, d2, m);
    if (all_pass(checks)) {
      return DerivationDecomposition{std::move(d1), std::move(d2), DerivationDecomposition::Method::closed_form,
                                     std::move(checks), {}};
    }
    rejected = std::move(checks);
  }

  auto solved = solve_derivation_split(d, m, opts.max_unknowns);
  if (!solved) throw std::runtime_error("no derivation/antiderivation split exists for this Jordan derivation");
  CheckList checks = validate_derivation_pair(d, solved->first, solved->second, m);
  if (!all_pass(checks)) throw std::logic_error("solver output fails validation");
  return DerivationDecomposition{std::move(solved->first), std::move(solved->second),
                                 DerivationDecomposition::Method::linear_solver, std::move(checks),
                                 std::move(rejected)};
}

}  // namespace trialg
