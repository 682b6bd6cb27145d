#include "trialg/search.hpp"

#include <algorithm>
#include <functional>

namespace trialg {

std::vector<Element> enumerate_elements(const AlgebraPtr& b, std::uint64_t max_count) {
  const ScalarRing& ring = b->ring();
  if (ring.kind() != ScalarRing::Kind::modular) {
    throw PreconditionError("exhaustive enumeration needs a finite scalar ring, got " + ring.to_string());
  }
  const mpz_class m = ring.modulus();
  mpz_class total = 1;
  for (std::size_t k = 0; k < b->rank(); ++k) {
    total *= m;
    if (total > max_count) {
      throw BoundExceeded("codomain has more than " + std::to_string(max_count) + " elements");
    }
  }
  const std::size_t r = b->rank();
  std::vector<Element> out;
  out.reserve(total.get_ui());
  Vec digits(r, 0);
  for (;;) {
    out.push_back(Element::from_dense(b, digits));
    std::size_t k = r;
    while (k > 0) {
      --k;
      if (++digits[k] < m) break;
      digits[k] = 0;
      if (k == 0) return out;
    }
    if (r == 0) return out;
  }
}

const char* to_string(CodomainScope scope) { return scope == CodomainScope::generated ? "generated" : "full"; }

std::vector<Element> enumerate_span(const AlgebraPtr& ambient, const EchelonBasis& b, std::uint64_t max_count) {
  const ScalarRing& ring = ambient->ring();
  if (!ring.is_modular()) throw PreconditionError("exhaustive enumeration needs a finite scalar ring");
  const auto size = span_rank_and_cardinality(b);
  if (*size.cardinality > max_count) {
    throw BoundExceeded("span has " + size.cardinality->get_str() + " elements, bound is " + std::to_string(max_count));
  }
  // In Howell form, coefficients c_i in [0, m / pivot_i) reach every element exactly once.
  std::vector<mpz_class> limit;
  for (std::size_t i = 0; i < b.size(); ++i) limit.push_back(ring.modulus() / b.rows[i][b.pivots[i]]);
  std::vector<Vec> vectors;
  Vec coeff(b.size(), 0);
  for (;;) {
    Vec v(ambient->rank(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += coeff[i] * b.rows[i][j];
    }
    for (auto& x : v) ring.reduce(x);
    vectors.push_back(std::move(v));
    std::size_t k = 0;
    while (k < coeff.size()) {
      if (++coeff[k] < limit[k]) break;
      coeff[k] = 0;
      ++k;
    }
    if (k == coeff.size()) break;
  }
  std::sort(vectors.begin(), vectors.end());
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
  if (vectors.size() != size.cardinality->get_ui()) throw std::logic_error("span enumeration missed elements");
  std::vector<Element> out;
  for (const auto& v : vectors) out.push_back(Element::from_dense(ambient, v));
  return out;
}

namespace {

// Sort key putting the diagonal cells first, then cells by distance from the diagonal.
std::tuple<std::size_t, std::size_t, std::size_t> cell_key(const Algebra& a, const Element& x) {
  if (!is_triangular(a) || x.terms().empty()) return {0, 0, 0};
  const auto [i, j, s] = triangular_position(a, x.terms().front().index);
  return {j - i, i, s};
}

}  // namespace

std::vector<Element> greedy_generators(const DomainPtr& domain) {
  const AlgebraPtr& a = domain->ambient();
  std::vector<Element> order = domain->basis();
  std::stable_sort(order.begin(), order.end(),
                   [&](const Element& x, const Element& y) { return cell_key(*a, x) < cell_key(*a, y); });
  std::vector<Element> gens;
  EchelonBasis generated;
  generated.ring = a->ring();
  generated.ambient_rank = a->rank();
  for (const auto& x : order) {
    if (contains(generated, x.dense())) continue;
    gens.push_back(x);
    generated = generate_subalgebra(a, gens, false).basis();
  }
  return gens;
}

std::vector<Element> tn0_generators(const AlgebraPtr& triangular) {
  const std::size_t n = triangular_order(*triangular);
  std::vector<Element> gens;
  for (std::size_t i = 1; i <= n; ++i) gens.push_back(idempotent(triangular, i));
  for (std::size_t i = 1; i < n; ++i) {
    for (const auto& x : homogeneous_basis(triangular, {i, i + 1})) gens.push_back(x);
  }
  return gens;
}

namespace {

enum class Kind { hom, antihom };

struct TrackSpec {
  Kind kind;
  // Image of generator t when the search variable takes value c.
  std::function<Element(std::size_t, const Element&)> image;
};

using Images = std::vector<std::vector<Element>>;  // [track][generator]

// g_a g_b = sum_l coords[l] g_l for l <= level.
struct Relation {
  std::size_t a;
  std::size_t b;
  Vec coords;
};

// Depth-first search over one unknown per generator, carrying several derived
// maps ("tracks"). Pairwise generator relations prune each track as soon as
// every generator they mention is assigned.
class Enumerator {
 public:
  Enumerator(DomainPtr domain, std::vector<Element> gens, std::vector<TrackSpec> tracks,
             std::vector<std::optional<Element>> fixed, const std::vector<Element>& candidates,
             const SearchBounds& bounds)
      : domain_(std::move(domain)),
        gens_(std::move(gens)),
        tracks_(std::move(tracks)),
        fixed_(std::move(fixed)),
        candidates_(candidates),
        bounds_(bounds) {
    const AlgebraPtr& a = domain_->ambient();
    const std::size_t g = gens_.size();
    relations_.resize(g);
    std::vector<std::vector<bool>> done(g, std::vector<bool>(g, false));
    std::vector<Vec> rows;
    for (std::size_t level = 0; level < g; ++level) {
      rows.push_back(gens_[level].dense());
      const TrackedEchelon tracked = echelonize_tracked(a->ring(), rows, a->rank());
      if (!tracked.kernel.empty()) break;  // coordinates would not be unique
      for (std::size_t x = 0; x <= level; ++x) {
        for (std::size_t y = 0; y <= level; ++y) {
          if (done[x][y]) continue;
          auto coords = generator_coordinates((gens_[x] * gens_[y]).dense(), tracked);
          if (!coords) continue;
          done[x][y] = true;
          relations_[level].push_back({x, y, std::move(*coords)});
        }
      }
    }

    closure_ = generate_subalgebra(a, gens_, false);
    for (const auto& b : domain_->basis()) {
      auto c = generator_coordinates(b.dense(), closure_.span);
      if (!c) throw std::invalid_argument("generators do not generate the domain");
      basis_coords_.push_back(std::move(*c));
    }
  }

  std::function<bool(std::size_t, const Images&)> constraint;
  std::function<void(const Images&)> leaf;

  void run() {
    images_.assign(tracks_.size(), std::vector<Element>(gens_.size()));
    descend(0);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

  LinMap extend(std::size_t track, const AlgebraPtr& codomain) const {
    const auto& img = images_[track];
    std::vector<Element> values;
    for (const auto& p : closure_.products) {
      Element acc;
      bool first = true;
      auto mul = [&](std::size_t gi) {
        if (first) {
          acc = img[gi];
          first = false;
        } else {
          acc = acc * img[gi];
        }
      };
      if (tracks_[track].kind == Kind::hom) {
        for (auto gi : p.word) mul(gi);
      } else {
        for (auto it = p.word.rbegin(); it != p.word.rend(); ++it) mul(*it);
      }
      values.push_back(std::move(acc));
    }
    std::vector<Element> out;
    for (const auto& coords : basis_coords_) {
      Element v = Element::zero(codomain);
      for (std::size_t p = 0; p < coords.size(); ++p) {
        if (coords[p] != 0) v += values[p].scaled(coords[p]);
      }
      out.push_back(std::move(v));
    }
    return LinMap(domain_, codomain, std::move(out));
  }

 private:
  bool relations_hold(std::size_t level) const {
    for (std::size_t tr = 0; tr < tracks_.size(); ++tr) {
      const auto& img = images_[tr];
      for (const auto& rel : relations_[level]) {
        const Element lhs = tracks_[tr].kind == Kind::hom ? img[rel.a] * img[rel.b] : img[rel.b] * img[rel.a];
        Element rhs = Element::zero(lhs.algebra());
        for (std::size_t l = 0; l < rel.coords.size(); ++l) {
          if (rel.coords[l] != 0) rhs += img[l].scaled(rel.coords[l]);
        }
        if (!(lhs == rhs)) return false;
      }
    }
    return true;
  }

  void descend(std::size_t t) {
    if (t == gens_.size()) {
      if (leaf) leaf(images_);
      return;
    }
    auto try_value = [&](const Element& c) {
      if (++nodes_ > bounds_.max_nodes) {
        throw BoundExceeded("search exceeded " + std::to_string(bounds_.max_nodes) + " nodes");
      }
      for (std::size_t tr = 0; tr < tracks_.size(); ++tr) images_[tr][t] = tracks_[tr].image(t, c);
      if (!relations_hold(t)) return;
      if (constraint && !constraint(t, images_)) return;
      descend(t + 1);
    };
    if (fixed_[t]) {
      try_value(*fixed_[t]);
    } else {
      for (const auto& c : candidates_) try_value(c);
    }
  }

  DomainPtr domain_;
  std::vector<Element> gens_;
  std::vector<TrackSpec> tracks_;
  std::vector<std::optional<Element>> fixed_;
  const std::vector<Element>& candidates_;
  SearchBounds bounds_;
  std::vector<std::vector<Relation>> relations_;
  ClosureResult closure_;
  std::vector<Vec> basis_coords_;
  Images images_;
  std::uint64_t nodes_ = 0;
};

std::uint64_t guarded_space(std::size_t element_count, std::size_t free_gens, std::uint64_t max_enum) {
  mpz_class space = 1;
  for (std::size_t k = 0; k < free_gens; ++k) space *= static_cast<unsigned long>(element_count);
  if (space > max_enum) {
    throw BoundExceeded("search space " + space.get_str() + " exceeds max_enum " + std::to_string(max_enum));
  }
  return space.get_ui();
}

bool orthogonal_pair(const std::vector<Element>& h, const std::vector<Element>& k, std::size_t t) {
  // New pairs only: those involving index t.
  for (std::size_t x = 0; x <= t; ++x) {
    for (const auto& [u, v] : {std::pair{x, t}, std::pair{t, x}}) {
      if (!(h[u] * k[v]).is_zero() || !(k[v] * h[u]).is_zero()) return false;
    }
  }
  return true;
}

CheckReport orthogonality_report(const LinMap& h, const LinMap& k) {
  CheckReport rep("orthogonal images");
  const Element zero = Element::zero(h.codomain());
  const auto& basis = h.domain()->basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      rep.expect_equal("h(a)k(b) = 0", {basis[i], basis[j]}, h.images()[i] * k.images()[j], zero);
      rep.expect_equal("k(b)h(a) = 0", {basis[i], basis[j]}, k.images()[j] * h.images()[i], zero);
    }
  }
  return rep;
}

}  // namespace

UniquenessResult exhaustive_uniqueness(const LinMap& phi, bool require_orthogonality, const SearchBounds& bounds) {
  const AlgebraPtr& a = phi.domain()->ambient();
  const std::size_t n = triangular_order(*a);
  const AlgebraPtr& b = phi.codomain();
  UniquenessResult res;
  res.orthogonality_required = require_orthogonality;

  const DomainPtr tn0 = tn0_domain(a);
  const std::vector<Element> gens = tn0_generators(a);
  const auto elements = enumerate_elements(b, bounds.max_enum);
  res.search_space = guarded_space(elements.size(), gens.size() - n, bounds.max_enum);

  std::vector<std::optional<Element>> fixed(gens.size());
  std::vector<Element> phi_gen;
  for (std::size_t t = 0; t < gens.size(); ++t) {
    phi_gen.push_back(phi(gens[t]));
    if (t < n) fixed[t] = phi_gen[t];
  }
  auto same = [](std::size_t, const Element& c) { return c; };
  // psi2 = phi on the diagonal and phi - psi1 on S_n.
  auto complement = [&](std::size_t t, const Element& c) { return t < n ? c : phi_gen[t] - c; };

  // Homomorphisms and antihomomorphisms agreeing with phi on Diag, counted alone.
  for (Kind kind : {Kind::hom, Kind::antihom}) {
    Enumerator single(tn0, gens, {{kind, same}}, fixed, elements, bounds);
    std::uint64_t count = 0;
    single.leaf = [&](const Images&) {
      const LinMap f = single.extend(0, b);
      const bool ok = kind == Kind::hom ? is_homomorphism(f).pass : is_antihomomorphism(f).pass;
      if (ok) ++count;
    };
    single.run();
    (kind == Kind::hom ? res.hom_candidates : res.antihom_candidates) = count;
    res.nodes += single.nodes();
  }

  Enumerator joint(tn0, gens, {{Kind::hom, same}, {Kind::antihom, complement}}, fixed, elements, bounds);
  if (require_orthogonality) {
    joint.constraint = [&](std::size_t t, const Images& img) {
      // Orthogonality is only demanded on S_n.
      if (t < n) return true;
      std::vector<Element> h(img[0].begin() + n, img[0].begin() + t + 1);
      std::vector<Element> k(img[1].begin() + n, img[1].begin() + t + 1);
      return orthogonal_pair(h, k, t - n);
    };
  }
  const auto strict = subspace(a, SubspaceTag::strict_upper).generators;
  joint.leaf = [&](const Images&) {
    PairDecomposition pair{joint.extend(0, b), joint.extend(1, b), phi(a->unit())};
    CheckList checks = verify_theorem2(phi, pair);
    if (!require_orthogonality) checks.erase(checks.begin() + 1);
    if (!all_pass(checks)) return;
    ++res.pair_count;
    if (res.pairs.size() < bounds.keep) res.pairs.push_back(std::move(pair));
  };
  joint.run();
  res.nodes += joint.nodes();

  res.report.counts["hom_candidates"] = static_cast<std::int64_t>(res.hom_candidates);
  res.report.counts["antihom_candidates"] = static_cast<std::int64_t>(res.antihom_candidates);
  res.report.counts["pair_count"] = static_cast<std::int64_t>(res.pair_count);
  res.report.counts["search_space"] = static_cast<std::int64_t>(res.search_space);
  res.report.counts["nodes"] = static_cast<std::int64_t>(res.nodes);
  if (res.pair_count != 1) {
    res.report.fail_note("expected exactly one pair, found " + std::to_string(res.pair_count));
  } else {
    const PairDecomposition expected = extract_pair(phi);
    if (!(res.pairs.front().psi1 == expected.psi1) || !(res.pairs.front().psi2 == expected.psi2)) {
      res.report.fail_note("the unique pair differs from the closed-form extraction");
    }
  }
  return res;
}

SumSearchResult search_hom_antihom_sum(const LinMap& phi, bool require_orthogonal, const SearchBounds& bounds,
                                       CodomainScope scope) {
  const DomainPtr& domain = phi.domain();
  const AlgebraPtr& b = phi.codomain();
  SumSearchResult res;
  res.orthogonality_required = require_orthogonal;
  res.scope = scope;
  res.generators = greedy_generators(domain);
  const auto& gens = res.generators;
  std::vector<Element> elements;
  if (scope == CodomainScope::full) {
    elements = enumerate_elements(b, bounds.max_enum);
    res.scope_rank = b->rank();
  } else {
    const ClosureResult image = generate_subalgebra(b, phi.images(), false);
    elements = enumerate_span(b, image.basis(), bounds.max_enum);
    res.scope_rank = image.rank();
  }

  std::vector<Element> phi_gen;
  for (const auto& g : gens) phi_gen.push_back(phi(g));
  // phi(g_x g_y) must equal h(g_x)h(g_y) + k(g_y)k(g_x) for every generator pair.
  std::vector<std::vector<Element>> phi_prod(gens.size());
  for (std::size_t x = 0; x < gens.size(); ++x) {
    for (std::size_t y = 0; y < gens.size(); ++y) phi_prod[x].push_back(phi(gens[x] * gens[y]));
  }

  auto same = [](std::size_t, const Element& c) { return c; };
  auto complement = [&](std::size_t t, const Element& c) { return phi_gen[t] - c; };
  Enumerator search(domain, gens, {{Kind::hom, same}, {Kind::antihom, complement}},
                    std::vector<std::optional<Element>>(gens.size()), elements, bounds);
  search.constraint = [&](std::size_t t, const Images& img) {
    const auto& h = img[0];
    const auto& k = img[1];
    for (std::size_t x = 0; x <= t; ++x) {
      if (!(h[x] * h[t] + k[t] * k[x] == phi_prod[x][t])) return false;
      if (!(h[t] * h[x] + k[x] * k[t] == phi_prod[t][x])) return false;
    }
    return !require_orthogonal || orthogonal_pair(h, k, t);
  };
  search.leaf = [&](const Images&) {
    LinMap h = search.extend(0, b);
    LinMap k = search.extend(1, b);
    if (!(h + k == phi)) return;
    if (!is_homomorphism(h).pass || !is_antihomomorphism(k).pass) return;
    if (require_orthogonal && !orthogonality_report(h, k).pass) return;
    ++res.solution_count;
    if (res.solutions.size() < bounds.keep) res.solutions.emplace_back(std::move(h), std::move(k));
  };
  search.run();
  res.nodes = search.nodes();
  res.report.counts["solution_count"] = static_cast<std::int64_t>(res.solution_count);
  res.report.counts["generators"] = static_cast<std::int64_t>(gens.size());
  res.report.counts["scope_size"] = static_cast<std::int64_t>(elements.size());
  res.report.counts["scope_rank"] = static_cast<std::int64_t>(res.scope_rank);
  res.report.counts["nodes"] = static_cast<std::int64_t>(res.nodes);
  return res;
}

}  // namespace trialg
