#include "trialg/corpus.hpp"

#include "trialg/random.hpp"

namespace trialg {

namespace {

using Kind = AlgebraDescriptor::Kind;

AlgebraPtr scalar_algebra(const ScalarRing& ring) { return build_algebra(ring, AlgebraDescriptor::scalar()); }

// The basis index of the component of x that a given "take" function keeps.
LinMap coefficient_map(const AlgebraPtr& from, const AlgebraPtr& to,
                       const std::function<std::optional<std::size_t>(std::size_t)>& take) {
  std::vector<Element> images;
  for (std::size_t k = 0; k < from->rank(); ++k) {
    const auto target = take(k);
    images.push_back(target ? to->basis_element(*target) : Element::zero(to));
  }
  return LinMap(MapDomain::whole(from), to, std::move(images));
}

}  // namespace

std::optional<LinMap> character(const AlgebraPtr& r) {
  const AlgebraPtr phi = scalar_algebra(r->ring());
  const auto& d = r->descriptor();
  switch (d.kind) {
    case Kind::scalar: return LinMap(MapDomain::whole(r), phi, {phi->unit()});
    case Kind::free:
      return coefficient_map(r, phi, [](std::size_t k) { return k == 0 ? std::optional<std::size_t>(0) : std::nullopt; });
    case Kind::triangular: {
      auto inner = character(r->inner());
      if (!inner) return std::nullopt;
      return compose(*inner, entry_projection(r, 1, 1));
    }
    case Kind::matrix: {
      if (d.size != 1) return std::nullopt;
      auto inner = character(r->inner());
      if (!inner) return std::nullopt;
      return LinMap::from_function(MapDomain::whole(r), phi,
                                   [&](const Element& x) { return (*inner)(reinterpret(r->inner(), x)); });
    }
    case Kind::opposite: {
      // Phi is commutative, so a character of R is one of R^op.
      auto inner = character(r->inner());
      if (!inner) return std::nullopt;
      return LinMap::from_function(MapDomain::whole(r), phi,
                                   [&](const Element& x) { return (*inner)(reinterpret(r->inner(), x)); });
    }
    case Kind::direct_sum: {
      auto left = character(r->left());
      if (!left) return std::nullopt;
      return LinMap::from_function(MapDomain::whole(r), phi,
                                   [&](const Element& x) { return (*left)(project_left(x)); });
    }
  }
  return std::nullopt;
}

LinMap entry_projection(const AlgebraPtr& triangular, std::size_t i, std::size_t j) {
  const AlgebraPtr& r = triangular->inner();
  return coefficient_map(triangular, r, [&](std::size_t k) -> std::optional<std::size_t> {
    const auto [p, q, s] = triangular_position(*triangular, k);
    if (p == i && q == j) return s;
    return std::nullopt;
  });
}

LinMap unitriangular_conjugation(const AlgebraPtr& triangular, std::size_t i, std::size_t j, const Element& r) {
  if (i >= j) throw std::invalid_argument("unitriangular_conjugation needs i < j");
  const Element x = matrix_unit(triangular, i, j, r);
  const Element u = triangular->unit() + x;
  const Element u_inv = triangular->unit() - x;
  return LinMap::from_function(MapDomain::whole(triangular), triangular,
                               [&](const Element& y) { return u * y * u_inv; });
}

LinMap inner_derivation(const Bimodule& module, const Element& m) {
  return LinMap::from_function(MapDomain::whole(module.acting), module.carrier, [&](const Element& x) {
    return module.left(x, m) - module.right(m, x);
  });
}

namespace {

struct Picker {
  SplitMix64 rng;
  const ScalarRing& ring;

  std::size_t index(std::size_t bound) { return static_cast<std::size_t>(rng.below(bound)); }

  mpz_class coefficient() {
    // 1..3, kept nonzero over small moduli.
    long top = 3;
    if (ring.is_modular() && ring.modulus() <= 3) top = ring.modulus().get_si() - 1;
    return mpz_class(1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(top))));
  }

  Element element(const AlgebraPtr& a, std::size_t max_terms) {
    Element out = Element::zero(a);
    const std::size_t terms = 1 + index(max_terms);
    for (std::size_t t = 0; t < terms; ++t) out += a->basis_element(index(a->rank())).scaled(coefficient());
    if (out.is_zero()) out = a->basis_element(index(a->rank()));
    return out;
  }

  // A conjugation by a random elementary unitriangular matrix.
  LinMap conjugation(const AlgebraPtr& t) {
    const std::size_t n = triangular_order(*t);
    std::size_t i = 1 + index(n - 1);
    std::size_t j = i + 1 + index(n - i);
    const AlgebraPtr& r = t->inner();
    const Element coeff = r->basis_element(index(r->rank())).scaled(coefficient());
    return unitriangular_conjugation(t, i, j, coeff);
  }

  // Identity, zero or a conjugation, as a homomorphism of t into itself.
  std::pair<LinMap, std::string> endo(const AlgebraPtr& t) {
    switch (index(3)) {
      case 0: return {LinMap::identity(t), "identity"};
      case 1: return {LinMap::zero(MapDomain::whole(t), t), "zero"};
      default: return {conjugation(t), "conjugation"};
    }
  }
};

Element to_right(const AlgebraPtr& env, const Element& x) { return inject_right(env, reinterpret(env->right(), x)); }

}  // namespace

std::vector<JordanHomInput> generate_test_jordan_homs(const AlgebraPtr& a, std::uint64_t seed, std::size_t count) {
  require_triangular(*a);
  const std::size_t n = triangular_order(*a);
  const AlgebraPtr env = build_envelope(a);
  const DomainPtr whole = MapDomain::whole(a);
  Picker pick{SplitMix64(seed), a->ring()};
  std::vector<JordanHomInput> out;
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::optional<LinMap> phi;
    std::string provenance;
    switch (idx % 4) {
      case 0:
        phi = s_map_linmap(whole, env);
        provenance = "s_map";
        break;
      case 1: {
        auto [h, hname] = pick.endo(a);
        auto [k, kname] = pick.endo(a);
        if (hname == "zero" && kname == "zero") std::tie(h, hname) = std::pair{LinMap::identity(a), "identity"};
        phi = LinMap::from_function(whole, env, [&](const Element& x) {
          return inject_left(env, h(x)) + to_right(env, k(x));
        });
        provenance = "hom_plus_antihom";
        break;
      }
      case 2: {
        const LinMap u = pick.conjugation(a);
        const LinMap v = pick.conjugation(a);
        const std::size_t side = pick.index(3);
        phi = LinMap::from_function(whole, env, [&](const Element& x) {
          // s_map, then conj_u + conj_v on the envelope, then maybe keep one side.
          Element left = side == 2 ? Element::zero(env) : inject_left(env, u(x));
          Element right = side == 1 ? Element::zero(env) : to_right(env, v(x));
          return left + right;
        });
        provenance = "composed";
        break;
      }
      default: {
        const AlgebraPtr& r = a->inner();
        const AlgebraPtr r_env = build_envelope(r);
        const std::size_t k = 1 + pick.index(n);
        const LinMap p = entry_projection(a, k, k);
        phi = LinMap::from_function(whole, r_env, [&](const Element& x) { return s_map(r_env, p(x)); });
        provenance = "psi_p";
        break;
      }
    }
    const CheckReport rep = is_jordan_homomorphism(*phi);
    if (!rep.pass) throw std::logic_error("corpus produced a non-Jordan map (" + provenance + ")");
    out.push_back({std::move(*phi), std::move(provenance)});
  }
  return out;
}

std::vector<JordanDerivationInput> generate_test_jordan_derivations(const AlgebraPtr& a, std::uint64_t seed,
                                                                    std::size_t count) {
  require_triangular(*a);
  const std::size_t n = triangular_order(*a);
  const AlgebraPtr& r = a->inner();
  const auto eps = character(r);
  Picker pick{SplitMix64(seed), a->ring()};
  const Bimodule regular = Bimodule::regular(a);
  std::vector<JordanDerivationInput> out;
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::optional<JordanDerivationInput> item;
    switch (idx % 3) {
      case 0:
        item = JordanDerivationInput{inner_derivation(regular, pick.element(a, 3)), regular, "inner_regular"};
        break;
      case 1: {
        // R with a.m = a_jj m and m.a = m a_ii.
        const std::size_t i = 1 + pick.index(n);
        const std::size_t j = i + pick.index(n - i + 1);
        Bimodule corner = Bimodule::from_homs(entry_projection(a, j, j), entry_projection(a, i, i));
        LinMap d = inner_derivation(corner, pick.element(r, 2));
        item = JordanDerivationInput{std::move(d), std::move(corner), "inner_corner"};
        break;
      }
      default: {
        if (!eps) {
          LinMap d = inner_derivation(regular, pick.element(a, 2)) + inner_derivation(regular, pick.element(a, 2));
          item = JordanDerivationInput{std::move(d), regular, "inner_sum"};
          break;
        }
        // Phi with a.m = eps(a_{i+1,i+1}) m and m.a = m eps(a_ii); x -> eps(x_{i,i+1}) is an antiderivation.
        const std::size_t i = 1 + pick.index(n - 1);
        Bimodule line = Bimodule::from_homs(compose(*eps, entry_projection(a, i + 1, i + 1)),
                                            compose(*eps, entry_projection(a, i, i)));
        const LinMap anti = compose(*eps, entry_projection(a, i, i + 1));
        std::vector<Element> images;
        const mpz_class c = pick.coefficient();
        for (const auto& x : anti.images()) images.push_back(x.scaled(c));
        LinMap d = inner_derivation(line, pick.element(line.carrier, 1)) +
                   LinMap(anti.domain(), anti.codomain(), std::move(images));
        item = JordanDerivationInput{std::move(d), std::move(line), "with_antiderivation"};
        break;
      }
    }
    if (!is_jordan_derivation(item->d, item->module).pass) {
      throw std::logic_error("corpus produced a non-Jordan derivation (" + item->provenance + ")");
    }
    out.push_back(std::move(*item));
  }
  return out;
}

}  // namespace trialg
