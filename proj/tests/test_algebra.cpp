#include "doctest.h"

#include "trialg/checks.hpp"

using namespace trialg;
using D = AlgebraDescriptor;

namespace {

AlgebraPtr t_n(std::size_t n, const ScalarRing& ring, D inner = D::scalar()) {
  return build_algebra(ring, D::triangular(n, std::move(inner)));
}

Element one_of(const AlgebraPtr& a) { return a->unit(); }

// Dense n x n matrix product, used as an oracle for T_n(Z).
using Mat = std::vector<std::vector<long>>;
Mat to_matrix(const Element& x, std::size_t n) {
  Mat m(n, std::vector<long>(n, 0));
  for (const auto& t : x.terms()) {
    const auto [i, j, s] = triangular_position(*x.algebra(), t.index);
    m[i - 1][j - 1] = t.coeff.get_si();
  }
  return m;
}
Mat mat_mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace

TEST_CASE("descriptor ranks and element counts") {
  const auto z2 = ScalarRing::modular(2);
  const auto z = ScalarRing::integers();
  const auto t2 = t_n(2, z2);
  CHECK(t2->rank() == 3);
  // 2^3 elements
  CHECK((mpz_class(1) << t2->rank()) == 8);
  const auto env = build_envelope(t2);
  CHECK(env->rank() == 6);
  const auto free = build_algebra(z, D::free(2, 2));
  CHECK(free->rank() == 7);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < free->rank(); ++k) labels.push_back(free->basis_label(k));
  CHECK(labels == std::vector<std::string>{"1", "x", "y", "xx", "xy", "yx", "yy"});
  CHECK(D::triangular(3, D::matrix(2, D::scalar())).rank() == 24);
  CHECK(D::triangular(2, D::triangular(2, D::scalar())).rank() == 9);
  CHECK_THROWS(build_algebra(z, D::triangular(1, D::scalar())));
  CHECK_THROWS(build_algebra(z, D::matrix(0, D::scalar())));
  CHECK_THROWS(build_algebra(z, D::free(0, 2)));
}

TEST_CASE("matrix units multiply like matrices") {
  const auto z = ScalarRing::integers();
  const auto a = t_n(2, z);
  const auto r = a->inner();
  const Element one = one_of(r);
  const Element e12 = matrix_unit(a, 1, 2, one);
  CHECK((e12 * e12).is_zero());
  const Element r2 = r->unit().scaled(2), r3 = r->unit().scaled(3), r5 = r->unit().scaled(5);
  CHECK(matrix_unit(a, 1, 2, r2) * matrix_unit(a, 2, 2, r3) == matrix_unit(a, 1, 2, r2 * r3));
  CHECK((matrix_unit(a, 1, 2, r2) * matrix_unit(a, 1, 2, r3)).is_zero());
  CHECK(matrix_unit(a, 1, 1, r2) * matrix_unit(a, 1, 2, r3) * matrix_unit(a, 2, 2, r5) ==
        matrix_unit(a, 1, 2, r2 * r3 * r5));
  CHECK_THROWS(matrix_unit(a, 2, 1, one));
  for (const auto& x : a->basis()) CHECK(a->unit() * x == x);
}

TEST_CASE("matrix units over a noncommutative coefficient algebra") {
  const auto z = ScalarRing::integers();
  const auto a = t_n(2, z, D::matrix(2, D::scalar()));
  const auto r = a->inner();
  SUBCASE("e_12(r) e_22(s) = e_12(rs) for all basis r, s") {
    for (const auto& x : r->basis()) {
      for (const auto& y : r->basis()) {
        CHECK(matrix_unit(a, 1, 2, x) * matrix_unit(a, 2, 2, y) == matrix_unit(a, 1, 2, x * y));
        CHECK(jordan_product(matrix_unit(a, 1, 2, x), matrix_unit(a, 2, 2, y)) == matrix_unit(a, 1, 2, x * y));
      }
    }
  }
}

TEST_CASE("T_3(Z) products agree with dense matrix products") {
  const auto a = t_n(3, ScalarRing::integers());
  for (const auto& x : a->basis()) {
    for (const auto& y : a->basis()) {
      const Element x2 = x.scaled(2) + a->unit();
      CHECK(to_matrix(x2 * y, 3) == mat_mul(to_matrix(x2, 3), to_matrix(y, 3)));
    }
  }
  const auto r1 = a->inner()->unit();
  CHECK(commutator(matrix_unit(a, 1, 2, r1), matrix_unit(a, 2, 3, r1)) == matrix_unit(a, 1, 3, r1));
  for (const auto& x : a->basis()) CHECK(commutator(x, a->unit()).is_zero());
}

TEST_CASE("opposite multiplication reverses products") {
  const auto z = ScalarRing::integers();
  const auto a = t_n(2, z, D::matrix(2, D::scalar()));
  const auto op = build_algebra(z, D::opposite(a->descriptor()));
  for (const auto& x : a->basis()) {
    for (const auto& y : a->basis()) {
      CHECK(reinterpret(op, x) * reinterpret(op, y) == reinterpret(op, y * x));
    }
  }
}

TEST_CASE("jordan product") {
  const auto z2 = ScalarRing::modular(2);
  const auto a = t_n(2, z2);
  for (const auto& x : a->basis()) {
    CHECK(jordan_product(x, x) == (x * x).scaled(2));
    CHECK(jordan_product(x, x).is_zero());
    for (const auto& y : a->basis()) CHECK(jordan_product(x, y) == jordan_product(y, x));
  }
  const auto one = a->inner()->unit();
  CHECK(jordan_product(idempotent(a, 1), matrix_unit(a, 1, 2, one)) == matrix_unit(a, 1, 2, one));
}

TEST_CASE("idempotents and graded components") {
  const auto z = ScalarRing::integers();
  const auto a = t_n(3, z, D::free(2, 2));
  Element sum = Element::zero(a);
  for (std::size_t i = 1; i <= 3; ++i) {
    sum += idempotent(a, i);
    for (std::size_t j = 1; j <= 3; ++j) {
      CHECK(idempotent(a, i) * idempotent(a, j) == (i == j ? idempotent(a, i) : Element::zero(a)));
    }
  }
  CHECK(sum == a->unit());
  CHECK_THROWS(idempotent(a, 4));
  CHECK_THROWS(idempotent(a, 0));

  const auto r = a->inner()->basis_element(4);  // xy
  const Element e13 = matrix_unit(a, 1, 3, r);
  CHECK(graded_component(e13, {1, 3}) == e13);
  CHECK(graded_component(e13, {1, 2}).is_zero());
  CHECK_THROWS(graded_component(e13, {1, 4}));

  Element x = Element::zero(a);
  for (std::size_t k = 0; k < a->rank(); k += 3) x += a->basis_element(k).scaled(static_cast<long>(k) + 1);
  Element recon = Element::zero(a);
  for (std::size_t i = 1; i <= 3; ++i) {
    for (std::size_t j = 1; j <= 3; ++j) {
      const Element c = graded_component(x, {i, j});
      if (i > j) CHECK(c.is_zero());
      recon += c;
    }
  }
  CHECK(recon == x);
}

TEST_CASE("s_map and the exchange involution") {
  const auto z2 = ScalarRing::modular(2);
  const auto a = t_n(2, z2);
  const auto env = build_envelope(a);
  CHECK(is_envelope(*env));
  CHECK(s_map(env, Element::zero(a)).is_zero());
  CHECK(s_map(env, a->unit()) == env->unit());
  const Element e1 = idempotent(a, 1);
  CHECK(s_map(env, e1) == inject_left(env, e1) + inject_right(env, reinterpret(env->right(), e1)));
  for (const auto& x : a->basis()) {
    for (const auto& y : a->basis()) {
      CHECK(s_map(env, x) * s_map(env, y) ==
            inject_left(env, x * y) + inject_right(env, reinterpret(env->right(), y * x)));
    }
    CHECK(exchange_involution(s_map(env, x)) == s_map(env, x));
    CHECK(exchange_involution(inject_left(env, x)) == inject_right(env, reinterpret(env->right(), x)));
  }
  for (const auto& u : env->basis()) {
    CHECK(exchange_involution(exchange_involution(u)) == u);
    for (const auto& v : env->basis()) {
      CHECK(exchange_involution(u * v) == exchange_involution(v) * exchange_involution(u));
      CHECK(exchange_involution(u + v) == exchange_involution(u) + exchange_involution(v));
    }
  }
  CHECK_THROWS(exchange_involution(e1));
}

TEST_CASE("distinguished subspaces") {
  const auto z = ScalarRing::integers();
  const auto tm = t_n(2, z, D::matrix(2, D::scalar()));
  CHECK(subspace(tm, SubspaceTag::tn0).rank() == 6);
  CHECK(subspace(tm, SubspaceTag::diag).rank() == 2);
  CHECK(subspace(tm, SubspaceTag::strict_upper).rank() == 4);
  CHECK(subspace(tm, SubspaceTag::diag_commutators).rank() == 0);
  // Diag(Phi) uses the unit of M_2, which is not a single basis element
  CHECK(subspace(tm, SubspaceTag::diag).contains(matrix_unit(tm, 1, 1, tm->inner()->unit())));
  CHECK_FALSE(subspace(tm, SubspaceTag::diag).contains(matrix_unit(tm, 1, 1, tm->inner()->basis_element(0))));

  const auto t3 = t_n(3, z);
  const auto comm = subspace(t3, SubspaceTag::diag_commutators);
  REQUIRE(comm.rank() == 1);
  CHECK(comm.contains(matrix_unit(t3, 1, 3, t3->inner()->unit())));
  CHECK_FALSE(comm.contains(matrix_unit(t3, 1, 2, t3->inner()->unit())));
  CHECK(subspace(t3, SubspaceTag::tn0).rank() == 6);
  CHECK_THROWS(subspace(t3->inner(), SubspaceTag::diag));
}

TEST_CASE("projection onto the (1,1) entry") {
  const auto z = ScalarRing::integers();
  const auto a = t_n(2, z, D::matrix(2, D::scalar()));
  const auto& r = a->inner();
  for (const auto& x : r->basis()) {
    CHECK(projection_p(matrix_unit(a, 1, 1, x)) == x);
    CHECK(projection_p(matrix_unit(a, 1, 2, x)).is_zero());
  }
  for (const auto& x : a->basis()) {
    for (const auto& y : a->basis()) CHECK(projection_p(x * y) == projection_p(x) * projection_p(y));
  }
}

TEST_CASE("self-checks on constructed algebras") {
  const auto z4 = ScalarRing::modular(4);
  const std::vector<D> descriptors = {
      D::scalar(),
      D::matrix(2, D::scalar()),
      D::free(2, 2),
      D::triangular(2, D::scalar()),
      D::triangular(3, D::matrix(2, D::scalar())),
      D::triangular(2, D::triangular(2, D::scalar())),
      D::opposite(D::triangular(2, D::free(2, 1))),
      D::direct_sum(D::triangular(2, D::scalar()), D::opposite(D::triangular(2, D::scalar()))),
      D::matrix(2, D::free(1, 2)),
  };
  for (const auto& d : descriptors) {
    CAPTURE(d.to_string());
    const auto a = build_algebra(z4, d);
    CHECK(a->rank() == d.rank());
    CHECK(check_associativity(a).pass);
    CHECK(check_unit_laws(a).pass);
    if (is_triangular(*a)) CHECK(check_peirce(a).pass);
  }
}

TEST_CASE("element invariants") {
  const auto z4 = ScalarRing::modular(4);
  const auto a = t_n(2, z4);
  const Element x = a->basis_element(0).scaled(2) + a->basis_element(0).scaled(2);
  CHECK(x.is_zero());
  CHECK(x.terms().empty());
  const auto other = t_n(2, ScalarRing::modular(2));
  CHECK_THROWS_AS(a->basis_element(0) * other->basis_element(0), AlgebraMismatch);
}
