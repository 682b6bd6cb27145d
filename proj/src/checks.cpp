#include "trialg/checks.hpp"

#include "trialg/random.hpp"

namespace trialg {

bool CheckReport::expect_equal(const char* identity, std::vector<Element> inputs, const Element& lhs,
                               const Element& rhs) {
  ++counts["evaluated"];
  if (lhs == rhs) return true;
  fail(Violation{identity, std::move(inputs), lhs, rhs});
  return false;
}

void CheckReport::fail(Violation v) {
  pass = false;
  ++counts["violations"];
  if (violations.size() < kMaxWitnesses) violations.push_back(std::move(v));
}

void CheckReport::fail_note(std::string note) {
  pass = false;
  notes.push_back(std::move(note));
}

void CheckReport::absorb(const CheckReport& sub) {
  if (!sub.pass) pass = false;
  for (const auto& v : sub.violations) {
    if (violations.size() < kMaxWitnesses) violations.push_back(v);
  }
  for (const auto& [k, v] : sub.counts) counts[sub.check + "." + k] += v;
  for (const auto& n : sub.notes) notes.push_back(sub.check + ": " + n);
}

namespace {

// Domain basis products b_i b_j and their images under f.
struct ProductTable {
  std::vector<std::vector<Element>> prod;
  std::vector<std::vector<Element>> image;
};

ProductTable product_table(const LinMap& f) {
  const auto& basis = f.domain()->basis();
  const std::size_t r = basis.size();
  ProductTable t;
  t.prod.assign(r, std::vector<Element>(r));
  t.image.assign(r, std::vector<Element>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      t.prod[i][j] = basis[i] * basis[j];
      t.image[i][j] = f(t.prod[i][j]);
    }
  }
  return t;
}

void note_domain_closure(CheckReport& rep, const LinMap& f, const ProductTable& t) {
  for (const auto& row : t.prod) {
    for (const auto& p : row) {
      if (!f.domain()->contains(p)) {
        rep.fail_note("domain is not closed under multiplication");
        return;
      }
    }
  }
}

CheckReport multiplicativity(const LinMap& f, bool reversed, const char* name) {
  CheckReport rep(name);
  const auto& basis = f.domain()->basis();
  const std::size_t r = basis.size();
  std::vector<std::vector<Element>> prod(r, std::vector<Element>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) prod[i][j] = basis[i] * basis[j];
  }
  for (const auto& row : prod) {
    for (const auto& p : row) {
      if (!f.domain()->contains(p)) {
        rep.fail_note("domain is not closed under multiplication");
        return rep;
      }
    }
  }
  const auto& img = f.images();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const Element rhs = reversed ? img[j] * img[i] : img[i] * img[j];
      rep.expect_equal(reversed ? "f(ab) = f(b)f(a)" : "f(ab) = f(a)f(b)", {basis[i], basis[j]}, f(prod[i][j]), rhs);
    }
  }
  const Element& one = f.domain()->ambient()->unit();
  if (f.domain()->contains(one)) {
    rep.counts["unit_in_domain"] = 1;
    rep.counts["unit_preserved"] = f(one) == f.codomain()->unit() ? 1 : 0;
  } else {
    rep.counts["unit_in_domain"] = 0;
  }
  return rep;
}

}  // namespace

CheckReport is_homomorphism(const LinMap& f) { return multiplicativity(f, false, "is_homomorphism"); }

CheckReport is_antihomomorphism(const LinMap& f) { return multiplicativity(f, true, "is_antihomomorphism"); }

CheckReport is_jordan_homomorphism(const LinMap& f) {
  CheckReport rep("is_jordan_homomorphism");
  const auto& basis = f.domain()->basis();
  const auto& img = f.images();
  const std::size_t r = basis.size();
  const ProductTable t = product_table(f);
  note_domain_closure(rep, f, t);
  if (!rep.pass) return rep;

  std::vector<std::vector<Element>> g(r, std::vector<Element>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) g[i][j] = img[i] * img[j];

  for (std::size_t i = 0; i < r; ++i) {
    rep.expect_equal("(a) f(x^2) = f(x)^2", {basis[i]}, t.image[i][i], g[i][i]);
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      rep.expect_equal("(b) f(x o y) = f(x) o f(y)", {basis[i], basis[j]}, t.image[i][j] + t.image[j][i],
                       g[i][j] + g[j][i]);
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      rep.expect_equal("(c) f(xyx) = f(x)f(y)f(x)", {basis[i], basis[j]}, f(t.prod[i][j] * basis[i]),
                       g[i][j] * img[i]);
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = i + 1; k < r; ++k) {
      for (std::size_t j = 0; j < r; ++j) {
        const Element lhs_arg = t.prod[i][j] * basis[k] + t.prod[k][j] * basis[i];
        const Element rhs = g[i][j] * img[k] + g[k][j] * img[i];
        const Element lhs = lhs_arg.is_zero() ? Element::zero(f.codomain()) : f(lhs_arg);
        rep.expect_equal("(d) f(xyz + zyx) = f(x)f(y)f(z) + f(z)f(y)f(x)", {basis[i], basis[j], basis[k]}, lhs, rhs);
      }
    }
  }
  return rep;
}

namespace {

void require_bimodule_fit(const LinMap& d, const Bimodule& m) {
  if (!d.domain()->ambient()->same_as(*m.acting)) throw AlgebraMismatch("derivation domain is not the acting algebra");
  if (!d.codomain()->same_as(*m.carrier)) throw AlgebraMismatch("derivation codomain is not the bimodule carrier");
}

struct ActionTables {
  std::vector<Element> lam, rho;                  // images of basis under the action homs
  std::vector<std::vector<Element>> lam2, rho2;   // images of basis products
};

ActionTables action_tables(const LinMap& d, const Bimodule& m, const ProductTable& t) {
  const auto& basis = d.domain()->basis();
  const std::size_t r = basis.size();
  ActionTables a;
  for (const auto& b : basis) {
    a.lam.push_back(m.left_hom(b));
    a.rho.push_back(m.right_hom(b));
  }
  a.lam2.assign(r, std::vector<Element>(r));
  a.rho2.assign(r, std::vector<Element>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      a.lam2[i][j] = m.left_hom(t.prod[i][j]);
      a.rho2[i][j] = m.right_hom(t.prod[i][j]);
    }
  }
  return a;
}

CheckReport leibniz(const LinMap& d, const Bimodule& m, bool reversed, const char* name) {
  require_bimodule_fit(d, m);
  CheckReport rep(name);
  const auto& basis = d.domain()->basis();
  const auto& img = d.images();
  const std::size_t r = basis.size();
  const ProductTable t = product_table(d);
  note_domain_closure(rep, d, t);
  if (!rep.pass) return rep;
  std::vector<Element> lam, rho;
  for (const auto& b : basis) {
    lam.push_back(m.left_hom(b));
    rho.push_back(m.right_hom(b));
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      // derivation: d(a)b + a d(b); antiderivation: b d(a) + d(b) a
      const Element rhs = reversed ? lam[j] * img[i] + img[j] * rho[i] : img[i] * rho[j] + lam[i] * img[j];
      rep.expect_equal(reversed ? "d(ab) = b d(a) + d(b) a" : "d(ab) = d(a) b + a d(b)", {basis[i], basis[j]},
                       t.image[i][j], rhs);
    }
  }
  return rep;
}

}  // namespace

CheckReport is_derivation(const LinMap& d, const Bimodule& m) { return leibniz(d, m, false, "is_derivation"); }

CheckReport is_antiderivation(const LinMap& d, const Bimodule& m) { return leibniz(d, m, true, "is_antiderivation"); }

CheckReport is_jordan_derivation(const LinMap& d, const Bimodule& m) {
  require_bimodule_fit(d, m);
  CheckReport rep("is_jordan_derivation");
  const auto& basis = d.domain()->basis();
  const auto& img = d.images();
  const std::size_t r = basis.size();
  const ProductTable t = product_table(d);
  note_domain_closure(rep, d, t);
  if (!rep.pass) return rep;
  const ActionTables a = action_tables(d, m, t);
  const auto& lam = a.lam;
  const auto& rho = a.rho;

  for (std::size_t i = 0; i < r; ++i) {
    rep.expect_equal("d(a^2) = d(a)a + a d(a)", {basis[i]}, t.image[i][i], img[i] * rho[i] + lam[i] * img[i]);
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      const Element rhs = img[i] * rho[j] + lam[i] * img[j] + img[j] * rho[i] + lam[j] * img[i];
      rep.expect_equal("d(a o b) = d(a)b + a d(b) + d(b)a + b d(a)", {basis[i], basis[j]},
                       t.image[i][j] + t.image[j][i], rhs);
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const Element rhs = img[i] * a.rho2[j][i] + lam[i] * img[j] * rho[i] + a.lam2[i][j] * img[i];
      rep.expect_equal("d(aba) = d(a)ba + a d(b)a + ab d(a)", {basis[i], basis[j]}, d(t.prod[i][j] * basis[i]), rhs);
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = i + 1; k < r; ++k) {
      for (std::size_t j = 0; j < r; ++j) {
        const Element arg = t.prod[i][j] * basis[k] + t.prod[k][j] * basis[i];
        const Element lhs = arg.is_zero() ? Element::zero(d.codomain()) : d(arg);
        const Element rhs = img[i] * a.rho2[j][k] + lam[i] * img[j] * rho[k] + a.lam2[i][j] * img[k] +
                            img[k] * a.rho2[j][i] + lam[k] * img[j] * rho[i] + a.lam2[k][j] * img[i];
        rep.expect_equal("d(abc + cba) = d(a)bc + a d(b)c + ab d(c) + d(c)ba + c d(b)a + cb d(a)",
                         {basis[i], basis[j], basis[k]}, lhs, rhs);
      }
    }
  }
  return rep;
}

CheckReport check_bimodule(const Bimodule& m) {
  CheckReport rep("check_bimodule");
  const auto abasis = m.acting->basis();
  const auto mbasis = m.carrier->basis();
  for (const auto& x : mbasis) {
    rep.expect_equal("1m = m", {x}, m.left(m.acting->unit(), x), x);
    rep.expect_equal("m1 = m", {x}, m.right(x, m.acting->unit()), x);
  }
  for (const auto& a : abasis) {
    for (const auto& b : abasis) {
      const Element ab = a * b;
      for (const auto& x : mbasis) {
        rep.expect_equal("(ab)m = a(bm)", {a, b, x}, m.left(ab, x), m.left(a, m.left(b, x)));
        rep.expect_equal("m(ab) = (ma)b", {x, a, b}, m.right(x, ab), m.right(m.right(x, a), b));
        rep.expect_equal("(am)b = a(mb)", {a, x, b}, m.right(m.left(a, x), b), m.left(a, m.right(x, b)));
      }
    }
  }
  return rep;
}

CheckReport check_associativity(const AlgebraPtr& a, std::size_t exhaustive_limit, std::size_t samples,
                                std::uint64_t seed) {
  CheckReport rep("associativity");
  const std::size_t r = a->rank();
  auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
    const Element bi = a->basis_element(i), bj = a->basis_element(j), bk = a->basis_element(k);
    rep.expect_equal("(xy)z = x(yz)", {bi, bj, bk}, (bi * bj) * bk, bi * (bj * bk));
  };
  if (r <= exhaustive_limit) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) check(i, j, k);
    rep.counts["exhaustive"] = 1;
  } else {
    SplitMix64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) check(rng.below(r), rng.below(r), rng.below(r));
    rep.counts["exhaustive"] = 0;
  }
  return rep;
}

CheckReport check_unit_laws(const AlgebraPtr& a) {
  CheckReport rep("unit_laws");
  for (const auto& b : a->basis()) {
    rep.expect_equal("1x = x", {b}, a->unit() * b, b);
    rep.expect_equal("x1 = x", {b}, b * a->unit(), b);
  }
  return rep;
}

CheckReport check_peirce(const AlgebraPtr& a) {
  CheckReport rep("peirce");
  const std::size_t n = triangular_order(*a);
  Element sum = Element::zero(a);
  for (std::size_t i = 1; i <= n; ++i) {
    sum += idempotent(a, i);
    for (std::size_t j = 1; j <= n; ++j) {
      const Element expect = i == j ? idempotent(a, i) : Element::zero(a);
      rep.expect_equal("e_i e_j = delta_ij e_i", {idempotent(a, i), idempotent(a, j)},
                       idempotent(a, i) * idempotent(a, j), expect);
    }
  }
  rep.expect_equal("sum e_i = 1", {}, sum, a->unit());
  for (const auto& x : a->basis()) {
    Element total = Element::zero(a);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        const Element c = graded_component(x, {i, j});
        if (i > j) {
          rep.expect_equal("e_i x e_j = 0 for i > j", {x}, c, Element::zero(a));
        } else {
          total += c;
        }
      }
    }
    rep.expect_equal("sum of graded components = x", {x}, total, x);
  }
  return rep;
}

}  // namespace trialg
