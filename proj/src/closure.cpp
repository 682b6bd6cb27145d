#include "trialg/closure.hpp"

#include <map>
#include <mutex>

namespace trialg {

std::vector<std::size_t> ClosureResult::generation_degree() const {
  std::vector<std::size_t> out;
  for (const auto& tr : span.basis.transforms) {
    std::size_t deg = 0;
    for (std::size_t k = 0; k < tr.size(); ++k) {
      if (tr[k] != 0) deg = std::max(deg, products[k].word.size());
    }
    out.push_back(deg);
  }
  return out;
}

Element ClosureResult::evaluate_word(const std::vector<std::size_t>& word) const {
  Element acc = ambient->unit();
  for (auto g : word) acc = acc * generators.at(g);
  return acc;
}

ClosureResult generate_subalgebra(const AlgebraPtr& ambient, const std::vector<Element>& generators, bool with_unit,
                                  std::size_t max_products) {
  ClosureResult res;
  res.ambient = ambient;
  res.generators = generators;
  res.with_unit = with_unit;
  EchelonBasis span;
  span.ring = ambient->ring();
  span.ambient_rank = ambient->rank();

  auto try_add = [&](std::vector<std::size_t> word, Element value) {
    if (!value.algebra()->same_as(*ambient)) throw AlgebraMismatch("generator outside the ambient algebra");
    if (!extend_span(span, value.dense())) return;
    if (res.products.size() >= max_products) {
      throw BoundExceeded("subalgebra closure exceeded " + std::to_string(max_products) + " spanning products");
    }
    res.products.push_back({std::move(word), std::move(value)});
  };

  if (with_unit) try_add({}, ambient->unit());
  for (std::size_t g = 0; g < generators.size(); ++g) try_add({g}, generators[g]);

  auto concat = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    auto w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
  };
  for (std::size_t f = 0; f < res.products.size(); ++f) {
    // try_add may grow res.products, so work on copies.
    const ClosureProduct p = res.products[f];
    for (std::size_t q = 0; q <= f; ++q) {
      const ClosureProduct o = res.products[q];
      try_add(concat(p.word, o.word), p.value * o.value);
      if (q != f) try_add(concat(o.word, p.word), o.value * p.value);
    }
  }

  std::vector<Vec> values;
  for (const auto& p : res.products) values.push_back(p.value.dense());
  res.span = echelonize_tracked(ambient->ring(), values, ambient->rank());
  return res;
}

DomainPtr tn0_domain(const AlgebraPtr& triangular) {
  static std::mutex mu;
  static std::map<std::string, DomainPtr> cache;
  const std::string key = triangular->ring().to_string() + "|" + triangular->descriptor().to_string();
  std::lock_guard lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  DomainPtr d = MapDomain::of_subspace(subspace(triangular, SubspaceTag::tn0));
  cache.emplace(key, d);
  return d;
}

ClosureResult envelope_closure(const AlgebraPtr& triangular) {
  const AlgebraPtr env = build_envelope(triangular);
  std::vector<Element> gens;
  for (const auto& b : tn0_domain(triangular)->basis()) gens.push_back(s_map(env, b));
  return generate_subalgebra(env, gens, false);
}

namespace {

struct SpanSides {
  EchelonBasis diag, left, right, all;
};

SpanSides span_sides(const AlgebraPtr& a, const AlgebraPtr& env) {
  const auto diag = subspace(a, SubspaceTag::diag).generators;
  const auto strict = subspace(a, SubspaceTag::strict_upper).generators;
  std::vector<Element> d, l, r;
  for (const auto& e : diag) d.push_back(s_map(env, e));
  for (const auto& s : strict) {
    l.push_back(inject_left(env, s));
    r.push_back(inject_right(env, reinterpret(env->right(), s)));
  }
  SpanSides out;
  const auto& ring = a->ring();
  out.diag = echelonize(ring, dense_rows(d), env->rank());
  out.left = echelonize(ring, dense_rows(l), env->rank());
  out.right = echelonize(ring, dense_rows(r), env->rank());
  out.all = span_sum(span_sum(out.diag, out.left), out.right);
  return out;
}

}  // namespace

CheckReport verify_eq1(const AlgebraPtr& triangular) { return verify_eq1(triangular, envelope_closure(triangular)); }

CheckReport verify_eq1(const AlgebraPtr& a, const ClosureResult& closure) {
  CheckReport rep("verify_eq1");
  const std::size_t n = triangular_order(*a);
  const SpanSides rhs = span_sides(a, closure.ambient);
  const std::size_t strict_rank = rhs.left.size();
  const std::size_t expected = n + n * (n - 1) * a->inner()->rank();
  rep.counts["closure_rank"] = static_cast<std::int64_t>(closure.rank());
  rep.counts["rhs_rank"] = static_cast<std::int64_t>(rhs.all.size());
  rep.counts["expected_rank"] = static_cast<std::int64_t>(expected);
  rep.counts["spanning_products"] = static_cast<std::int64_t>(closure.products.size());

  if (!same_span(closure.basis(), rhs.all)) rep.fail_note("closure span differs from Diag + S_n + S_n^op");
  if (rhs.all.size() != n + 2 * strict_rank || rhs.diag.size() != n) {
    rep.fail_note("summands are not independent (rank does not add up)");
  }
  if (a->ring().is_modular()) {
    const auto total = span_rank_and_cardinality(rhs.all).cardinality;
    const mpz_class product = *span_rank_and_cardinality(rhs.diag).cardinality *
                              *span_rank_and_cardinality(rhs.left).cardinality *
                              *span_rank_and_cardinality(rhs.right).cardinality;
    if (!total || *total != product) rep.fail_note("summand cardinalities do not multiply (sum is not direct)");
  }
  if (closure.rank() != expected) {
    rep.fail_note("closure rank " + std::to_string(closure.rank()) + " differs from n + n(n-1) rank(R) = " +
                  std::to_string(expected));
  }
  return rep;
}

CheckReport verify_lemma1_image(const AlgebraPtr& a) {
  CheckReport rep("verify_lemma1_image");
  const std::size_t n = triangular_order(*a);
  const AlgebraPtr env = build_envelope(a);
  std::int64_t weight_pairs = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      for (std::size_t p = 1; p <= n; ++p) {
        for (std::size_t q = p + 1; q <= n; ++q) {
          // (w_i - w_j) + (w_p - w_q) lies in Delta exactly when j == p or q == i; it is never 0.
          if (j == p || q == i) continue;
          ++weight_pairs;
          for (const auto& x : homogeneous_basis(a, {i, j})) {
            for (const auto& y : homogeneous_basis(a, {p, q})) {
              rep.expect_equal("S(a)S(b) = 0", {x, y}, s_map(env, x) * s_map(env, y), Element::zero(env));
            }
          }
        }
      }
    }
  }
  rep.counts["weight_pairs"] = weight_pairs;

  // ad(e_j)^2 fixes e_i A e_j and kills e_i A e_k for k outside {i, j}.
  auto ad2 = [](const Element& e, const Element& x) { return commutator(e, commutator(e, x)); };
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      const Element ej = idempotent(a, j);
      if (i < j) {
        for (const auto& x : homogeneous_basis(a, {i, j})) rep.expect_equal("ad(e_j)^2(a) = a", {ej, x}, ad2(ej, x), x);
      }
      for (std::size_t k = i + 1; k <= n; ++k) {
        if (k == j) continue;
        for (const auto& y : homogeneous_basis(a, {i, k})) {
          rep.expect_equal("ad(e_j)^2(b) = 0", {ej, y}, ad2(ej, y), Element::zero(a));
        }
      }
    }
  }
  return rep;
}

CheckReport verify_lemma2_image(const AlgebraPtr& triangular) {
  return verify_lemma2_image(triangular, envelope_closure(triangular));
}

CheckReport verify_lemma2_image(const AlgebraPtr& a, const ClosureResult& closure) {
  CheckReport rep("verify_lemma2_image");
  const AlgebraPtr& env = closure.ambient;
  const auto& gens = closure.generators;
  EchelonBasis triples;
  triples.ring = a->ring();
  triples.ambient_rank = env->rank();
  std::int64_t count = 0;
  for (const auto& x : gens) {
    for (const auto& y : gens) {
      const Element xy = x * y;
      for (const auto& z : gens) {
        extend_span(triples, (xy * z).dense());
        ++count;
      }
    }
  }
  rep.counts["triples"] = count;
  rep.counts["triple_span_rank"] = static_cast<std::int64_t>(triples.size());
  rep.counts["closure_rank"] = static_cast<std::int64_t>(closure.rank());
  if (!same_span(triples, closure.basis())) rep.fail_note("span of triple products differs from the full closure");
  return rep;
}

LinMap left_strict_embedding(const AlgebraPtr& a, const AlgebraPtr& env) {
  return LinMap::from_function(tn0_domain(a), env, [&](const Element& b) {
    return subspace(a, SubspaceTag::diag).contains(b) ? s_map(env, b) : inject_left(env, b);
  });
}

LinMap right_strict_embedding(const AlgebraPtr& a, const AlgebraPtr& env) {
  return LinMap::from_function(tn0_domain(a), env, [&](const Element& b) {
    return subspace(a, SubspaceTag::diag).contains(b) ? s_map(env, b)
                                                      : inject_right(env, reinterpret(env->right(), b));
  });
}

namespace {

// Injective with multiplicatively closed image.
void check_embedding(CheckReport& rep, const LinMap& f, const char* label) {
  const auto rows = dense_rows(f.images());
  const TrackedEchelon t = echelonize_tracked(f.codomain()->ring(), rows, f.codomain()->rank());
  if (!t.kernel.empty()) rep.fail_note(std::string(label) + ": map has a nonzero kernel");
  rep.counts[std::string(label) + ".image_rank"] = static_cast<std::int64_t>(t.basis.size());
  for (const auto& x : f.images()) {
    for (const auto& y : f.images()) {
      if (!contains(t.basis, (x * y).dense())) {
        rep.fail_note(std::string(label) + ": image is not closed under multiplication");
        return;
      }
    }
  }
}

}  // namespace

CheckReport verify_eq2_eq3_isomorphisms(const AlgebraPtr& a) {
  CheckReport rep("verify_eq2_eq3_isomorphisms");
  const AlgebraPtr env = build_envelope(a);
  const LinMap m2 = left_strict_embedding(a, env);
  const LinMap m3 = right_strict_embedding(a, env);
  rep.absorb(is_homomorphism(m2));
  rep.absorb(is_antihomomorphism(m3));
  check_embedding(rep, m2, "left_strict");
  check_embedding(rep, m3, "right_strict");

  const DomainPtr diag = MapDomain::of_subspace(subspace(a, SubspaceTag::diag));
  CheckReport diag_hom = is_homomorphism(s_map_linmap(diag, env));
  diag_hom.check = "diag_s_map_homomorphism";
  rep.absorb(diag_hom);

  for (const auto& b : m2.domain()->basis()) {
    rep.expect_equal("exchange(right_strict(a)) = left_strict(a)", {b}, exchange_involution(m3(b)), m2(b));
  }
  rep.counts["tn0_rank"] = static_cast<std::int64_t>(m2.domain()->rank());
  rep.counts["strict_rank"] = static_cast<std::int64_t>(subspace(a, SubspaceTag::strict_upper).rank());
  rep.notes.push_back("diag + S_n and diag + S_n^op are compared with T_n^0(R) = Diag(Phi) x S_n(R); their rank is "
                      "tn0_rank, not strict_rank, so they are not isomorphic to S_n(R) itself");
  return rep;
}

CheckReport verify_prop1_rank(const AlgebraPtr& a, const ClosureResult& closure) {
  CheckReport rep("verify_prop1_rank");
  const std::size_t n = triangular_order(*a);
  const std::size_t strict = subspace(a, SubspaceTag::strict_upper).rank();
  const std::size_t expected = n + 2 * strict;
  const SpanSize size = span_rank_and_cardinality(closure.basis());
  rep.counts["closure_rank"] = static_cast<std::int64_t>(size.rank);
  rep.counts["expected_rank"] = static_cast<std::int64_t>(expected);
  if (size.rank != expected) rep.fail_note("closure rank differs from n + 2 rank(S_n)");
  if (a->ring().is_modular()) {
    mpz_class expect_card;
    mpz_pow_ui(expect_card.get_mpz_t(), a->ring().modulus().get_mpz_t(), expected);
    rep.notes.push_back("cardinality " + size.cardinality->get_str() + " (expected " + expect_card.get_str() + ")");
    if (*size.cardinality != expect_card) rep.fail_note("closure cardinality differs from |Phi|^(n + 2 rank(S_n))");
  }
  return rep;
}

StandardHomResult induced_standard_hom(const LinMap& phi, bool validate_input) {
  const AlgebraPtr& a = phi.domain()->ambient();
  return induced_standard_hom(phi, envelope_closure(a), validate_input);
}

StandardHomResult induced_standard_hom(const LinMap& phi, const ClosureResult& closure, bool validate_input) {
  StandardHomResult res;
  CheckReport& rep = res.report;
  const AlgebraPtr& a = phi.domain()->ambient();
  require_triangular(*a);
  if (validate_input) {
    const CheckReport j = is_jordan_homomorphism(phi);
    if (!j.pass) throw PreconditionError("induced_standard_hom: phi is not a Jordan homomorphism");
  }
  const DomainPtr tn0 = tn0_domain(a);
  const auto& tn0_basis = tn0->basis();
  if (closure.generators.size() != tn0_basis.size()) throw std::invalid_argument("closure does not match T_n^0 basis");
  const AlgebraPtr& b = phi.codomain();

  std::vector<Element> phi_gen;
  for (const auto& x : tn0_basis) phi_gen.push_back(phi(x));

  // chi on each spanning product: the same word with S(b) replaced by phi(b).
  std::vector<Element> chi_products;
  for (const auto& p : closure.products) {
    Element acc = b->unit();
    if (p.word.empty()) acc = b->unit();
    for (auto g : p.word) acc = acc * phi_gen[g];
    chi_products.push_back(std::move(acc));
  }

  // (a) every linear relation among the spanning products must map to zero.
  for (const auto& rel : closure.span.kernel) {
    Element img = Element::zero(b);
    for (std::size_t k = 0; k < rel.size(); ++k) {
      if (rel[k] != 0) img += chi_products[k].scaled(rel[k]);
    }
    ++rep.counts["relations_checked"];
    if (!img.is_zero()) {
      rep.fail(Violation{"chi respects relations among closure products", {}, img, Element::zero(b)});
      res.witness_relation = rel;
      return res;
    }
  }

  std::vector<Element> values;
  for (const auto& p : closure.products) values.push_back(p.value);
  const DomainPtr dom = MapDomain::custom(closure.ambient, values, "closure");
  LinMap chi(dom, b, chi_products);

  // (b) multiplicative on all pairs of spanning products.
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = 0; j < values.size(); ++j) {
      rep.expect_equal("chi(xy) = chi(x)chi(y)", {values[i], values[j]}, chi(values[i] * values[j]),
                       chi_products[i] * chi_products[j]);
    }
  }
  // (c) the triangle S then chi equals phi on T_n^0.
  for (std::size_t k = 0; k < tn0_basis.size(); ++k) {
    rep.expect_equal("chi(S(b)) = phi(b)", {tn0_basis[k]}, chi(closure.generators[k]), phi_gen[k]);
  }
  rep.counts["closure_rank"] = static_cast<std::int64_t>(closure.rank());
  if (rep.pass) res.chi = std::move(chi);
  return res;
}

}  // namespace trialg
