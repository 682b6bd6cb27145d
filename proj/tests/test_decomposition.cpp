#include "doctest.h"

#include "trialg/corpus.hpp"
#include "trialg/search.hpp"

#include <set>

using namespace trialg;
using D = AlgebraDescriptor;

namespace {

AlgebraPtr t_n(std::size_t n, const ScalarRing& ring, D inner = D::scalar()) {
  return build_algebra(ring, D::triangular(n, std::move(inner)));
}

Element e_ij(const AlgebraPtr& a, std::size_t i, std::size_t j) { return matrix_unit(a, i, j, a->inner()->unit()); }

Element to_right(const AlgebraPtr& env, const Element& x) { return inject_right(env, reinterpret(env->right(), x)); }

}  // namespace

TEST_CASE("extract_pair on s_map over T_2(Z/2)") {
  const auto a = t_n(2, ScalarRing::modular(2));
  const auto env = build_envelope(a);
  const LinMap phi = s_map_linmap(MapDomain::whole(a), env);
  const auto pair = extract_pair(phi);
  const Element x = e_ij(a, 1, 2);
  // direct evaluation in A + A^op: f_1 (x + x^op) f_2 = (e_1 x e_2, (e_2 x e_1)^op)
  CHECK(pair.psi1(x) == inject_left(env, x));
  CHECK(pair.psi2(x) == to_right(env, x));
  for (std::size_t i = 1; i <= 2; ++i) {
    CHECK(pair.psi1(idempotent(a, i)) == s_map(env, idempotent(a, i)));
    CHECK(pair.psi2(idempotent(a, i)) == s_map(env, idempotent(a, i)));
  }
  CHECK(pair.local_unit == env->unit());
  CHECK(all_pass(verify_theorem2(phi, pair)));

  // matches the natural embeddings onto the two subalgebras
  CHECK(pair.psi1 == left_strict_embedding(a, env));
  CHECK(pair.psi2 == right_strict_embedding(a, env));
}

TEST_CASE("extract_pair on a homomorphism has psi2 vanishing on S_n") {
  const auto a = t_n(3, ScalarRing::integers(), D::matrix(2, D::scalar()));
  const LinMap conj = unitriangular_conjugation(a, 1, 3, a->inner()->basis_element(1).scaled(5));
  CHECK(is_homomorphism(conj).pass);
  const auto pair = extract_pair(conj);
  for (const auto& s : subspace(a, SubspaceTag::strict_upper).generators) CHECK(pair.psi2(s).is_zero());
  CHECK(all_pass(verify_theorem2(conj, pair)));
}

TEST_CASE("pair extraction checks on the generated corpus") {
  for (const auto& ring : {ScalarRing::integers(), ScalarRing::modular(2), ScalarRing::modular(4)}) {
    for (const auto& inner : {D::scalar(), D::matrix(2, D::scalar()), D::free(2, 1)}) {
      const auto a = t_n(2, ring, inner);
      const auto corpus = generate_test_jordan_homs(a, 17, 8);
      for (const auto& input : corpus) {
        CAPTURE(input.provenance);
        const auto pair = extract_pair(input.phi);
        CHECK(all_pass(verify_theorem2(input.phi, pair)));
        CHECK(pair.local_unit == input.phi(a->unit()));
      }
    }
  }
}

TEST_CASE("tampered pair fails (iii) with a witness") {
  const auto a = t_n(2, ScalarRing::modular(2));
  const auto env = build_envelope(a);
  const LinMap phi = s_map_linmap(MapDomain::whole(a), env);
  auto pair = extract_pair(phi);
  const std::size_t k = 2;  // basis order of T_2^0: e_1, e_2, e_12
  REQUIRE(pair.psi2.domain()->basis()[k] == e_ij(a, 1, 2));
  pair.psi2 = pair.psi2.with_image(k, Element::zero(env));
  const auto checks = verify_theorem2(phi, pair);
  CHECK_FALSE(all_pass(checks));
  const auto& iii = checks[2];
  CHECK_FALSE(iii.pass);
  REQUIRE_FALSE(iii.violations.empty());
  CHECK(iii.violations[0].inputs[0] == e_ij(a, 1, 2));
}

TEST_CASE("extract_pair rejects a non-Jordan map") {
  const auto a = t_n(2, ScalarRing::modular(2));
  const LinMap bad = LinMap::identity(a).with_image(0, a->basis_element(1));
  CHECK_THROWS_AS(extract_pair(bad), PreconditionError);
}

TEST_CASE("uniqueness over Z/2") {
  const auto a = t_n(2, ScalarRing::modular(2));
  const auto env = build_envelope(a);
  const LinMap phi = s_map_linmap(MapDomain::whole(a), env);
  const auto res = exhaustive_uniqueness(phi);
  CHECK(res.pair_count == 1);
  CHECK(res.report.pass);
  REQUIRE(res.pairs.size() == 1);
  const auto expected = extract_pair(phi);
  CHECK(res.pairs[0].psi1 == expected.psi1);
  CHECK(res.pairs[0].psi2 == expected.psi2);

  const auto relaxed = exhaustive_uniqueness(phi, false);
  CHECK(relaxed.pair_count >= 1);

  SearchBounds tiny;
  tiny.max_enum = 10;
  CHECK_THROWS_AS(exhaustive_uniqueness(phi, true, tiny), BoundExceeded);
  CHECK_THROWS_AS(exhaustive_uniqueness(s_map_linmap(MapDomain::whole(t_n(2, ScalarRing::integers())),
                                                     build_envelope(t_n(2, ScalarRing::integers())))),
                  PreconditionError);
}

TEST_CASE("uniqueness over the small corpus") {
  const auto a = t_n(2, ScalarRing::modular(2));
  for (const auto& input : generate_test_jordan_homs(a, 3, 8)) {
    CAPTURE(input.provenance);
    const auto res = exhaustive_uniqueness(input.phi);
    CHECK(res.pair_count == 1);
    CHECK(res.report.pass);
  }
  const auto a3 = t_n(3, ScalarRing::modular(2));
  const LinMap phi3 = s_map_linmap(MapDomain::whole(a3), build_envelope(a3));
  CHECK(exhaustive_uniqueness(phi3).pair_count == 1);
}

TEST_CASE("closed-form derivation split") {
  const auto z = ScalarRing::integers();
  const auto a = t_n(3, z);
  const auto reg = Bimodule::regular(a);
  const Element m = e_ij(a, 1, 1).scaled(2) - e_ij(a, 3, 3).scaled(7);
  const LinMap d = inner_derivation(reg, m);
  const auto dec = decompose_jordan_derivation(d, reg);
  CHECK(dec.method == DerivationDecomposition::Method::closed_form);
  CHECK(all_pass(dec.checks));
  for (const auto& x : dec.d2.domain()->basis()) CHECK(dec.d2(x).is_zero());

  const LinMap zero = LinMap::zero(MapDomain::whole(a), a);
  const auto dz = decompose_jordan_derivation(zero, reg);
  for (const auto& x : dz.d1.domain()->basis()) {
    CHECK(dz.d1(x).is_zero());
    CHECK(dz.d2(x).is_zero());
  }
  CHECK_THROWS_AS(decompose_jordan_derivation(LinMap::identity(a), reg), PreconditionError);
}

TEST_CASE("derivation plus antiderivation over Z/4") {
  const auto z4 = ScalarRing::modular(4);
  const auto a = t_n(2, z4);
  const auto eps = character(a->inner());
  REQUIRE(eps.has_value());
  const Bimodule line = Bimodule::from_homs(compose(*eps, entry_projection(a, 2, 2)),
                                            compose(*eps, entry_projection(a, 1, 1)));
  CHECK(check_bimodule(line).pass);
  const LinMap anti = compose(*eps, entry_projection(a, 1, 2));
  CHECK(is_antiderivation(anti, line).pass);
  const LinMap d = inner_derivation(line, line.carrier->unit().scaled(3)) + anti;
  for (bool force : {false, true}) {
    DerivationOptions opts;
    opts.force_solver = force;
    const auto dec = decompose_jordan_derivation(d, line, opts);
    CHECK(all_pass(dec.checks));
    CHECK((dec.method == DerivationDecomposition::Method::linear_solver) == force);
  }
}

TEST_CASE("derivation corpus decomposes by both stages") {
  for (const auto& ring : {ScalarRing::integers(), ScalarRing::modular(2), ScalarRing::modular(4)}) {
    for (const auto& inner : {D::scalar(), D::matrix(2, D::scalar()), D::free(2, 1)}) {
      for (std::size_t n : {2, 3}) {
        const auto a = t_n(n, ring, inner);
        const auto corpus = generate_test_jordan_derivations(a, 5, 6);
        for (const auto& input : corpus) {
          CAPTURE(input.provenance);
          const auto dec = decompose_jordan_derivation(input.d, input.module);
          CHECK(all_pass(dec.checks));
          if (input.module.carrier->rank() <= 4 && n == 2) {
            DerivationOptions opts;
            opts.force_solver = true;
            const auto solved = decompose_jordan_derivation(input.d, input.module, opts);
            CHECK(all_pass(solved.checks));
          }
        }
      }
    }
  }
}

TEST_CASE("solver refuses oversized systems") {
  const auto a = t_n(3, ScalarRing::integers(), D::matrix(2, D::scalar()));
  const auto reg = Bimodule::regular(a);
  const LinMap d = inner_derivation(reg, e_ij(a, 1, 2));
  CHECK_THROWS_AS(solve_derivation_split(d, reg, 100), BoundExceeded);
}

TEST_CASE("hom + antihom search") {
  const auto z2 = ScalarRing::modular(2);
  const auto a = t_n(2, z2);
  const auto env = build_envelope(a);
  const LinMap s = s_map_linmap(MapDomain::whole(a), env);
  const auto none = search_hom_antihom_sum(s, true);
  CHECK(none.scope_rank == 4);
  CHECK(none.solution_count == 0);

  // Over the whole envelope S splits as (x, 0) + (0, x^op), whose images multiply to zero.
  const auto full = search_hom_antihom_sum(s, true, {}, CodomainScope::full);
  REQUIRE(full.solution_count == 1);
  const LinMap left = LinMap::from_function(s.domain(), env, [&](const Element& x) { return inject_left(env, x); });
  CHECK(full.solutions[0].first == left);
  CHECK(full.solutions[0].second == s - left);

  // a genuine homomorphism into the envelope: x -> (x, 0)
  const LinMap hom = LinMap::from_function(MapDomain::whole(a), env, [&](const Element& x) { return inject_left(env, x); });
  const auto found = search_hom_antihom_sum(hom, true);
  CHECK(found.solution_count >= 1);
  bool trivial = false;
  for (const auto& [h, k] : found.solutions) {
    if (h == hom && k == LinMap::zero(hom.domain(), env)) trivial = true;
  }
  CHECK(trivial);
}

TEST_CASE("psi after p over R = T_2(Z/2)") {
  const auto z2 = ScalarRing::modular(2);
  const auto a = t_n(2, z2, D::triangular(2, D::scalar()));
  CHECK(a->rank() == 9);
  const auto r = a->inner();
  const auto r_env = build_envelope(r);
  const LinMap p = projection_p_linmap(a);
  const LinMap phi = compose(s_map_linmap(MapDomain::whole(r), r_env), p);
  CHECK(is_jordan_homomorphism(phi).pass);
  CHECK_FALSE(is_homomorphism(phi).pass);
  const auto res = search_hom_antihom_sum(phi, true);
  CHECK(res.solution_count == 0);
  CHECK(search_hom_antihom_sum(phi, true, {}, CodomainScope::full).solution_count == 1);
}

TEST_CASE("span enumeration") {
  const auto z4 = ScalarRing::modular(4);
  const auto a = build_algebra(z4, D::matrix(2, D::scalar()));
  const auto b = echelonize(z4, std::vector<Vec>{Vec{2, 0, 0, 0}, Vec{1, 1, 0, 2}}, 4);
  const auto elems = enumerate_span(a, b, 1000);
  CHECK(elems.size() == 8);
  std::set<Vec> brute;
  for (long x = 0; x < 4; ++x) {
    for (long y = 0; y < 4; ++y) {
      Vec v{2 * x + y, y, 0, 2 * y};
      for (auto& c : v) z4.reduce(c);
      brute.insert(v);
    }
  }
  std::set<Vec> got;
  for (const auto& e : elems) got.insert(e.dense());
  CHECK(got == brute);
}

TEST_CASE("jordan hom corpus is deterministic and covers every kind") {
  const auto a = t_n(3, ScalarRing::modular(4), D::matrix(2, D::scalar()));
  const auto c1 = generate_test_jordan_homs(a, 42, 12);
  const auto c2 = generate_test_jordan_homs(a, 42, 12);
  REQUIRE(c1.size() == 12);
  std::set<std::string> kinds;
  for (std::size_t k = 0; k < c1.size(); ++k) {
    CHECK(c1[k].phi == c2[k].phi);
    kinds.insert(c1[k].provenance);
  }
  CHECK(kinds == std::set<std::string>{"s_map", "hom_plus_antihom", "composed", "psi_p"});
  const auto nested = t_n(2, ScalarRing::modular(2), D::triangular(2, D::scalar()));
  CHECK(generate_test_jordan_homs(nested, 1, 4).size() == 4);
}

TEST_CASE("characters") {
  const auto z = ScalarRing::integers();
  CHECK(character(build_algebra(z, D::scalar())).has_value());
  CHECK(character(build_algebra(z, D::free(2, 2))).has_value());
  CHECK_FALSE(character(build_algebra(z, D::matrix(2, D::scalar()))).has_value());
  for (const auto& d : {D::free(2, 2), D::triangular(2, D::free(1, 2)), D::opposite(D::free(2, 1)),
                        D::direct_sum(D::scalar(), D::matrix(2, D::scalar())), D::matrix(1, D::free(1, 1))}) {
    const auto r = build_algebra(z, d);
    const auto eps = character(r);
    REQUIRE(eps.has_value());
    CHECK(is_homomorphism(*eps).pass);
    CHECK((*eps)(r->unit()) == eps->codomain()->unit());
  }
}
