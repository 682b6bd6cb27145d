#pragma once

// Phi-linear maps recorded by the images of a domain basis, and bimodules
// over an algebra given by a pair of action homomorphisms.

#include "trialg/triangular.hpp"

#include <functional>
#include <memory>
#include <string>

namespace trialg {

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The domain of a linear map: the whole ambient algebra, or a submodule
/// given by a basis (T_n^0(R), a closure, ...).
class MapDomain {
 public:
  static std::shared_ptr<const MapDomain> whole(AlgebraPtr ambient);
  static std::shared_ptr<const MapDomain> of_subspace(const SubspaceBasis& sub);
  static std::shared_ptr<const MapDomain> custom(AlgebraPtr ambient, std::vector<Element> basis, std::string tag);

  const AlgebraPtr& ambient() const noexcept { return ambient_; }
  const std::vector<Element>& basis() const noexcept { return basis_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  bool is_whole() const noexcept { return whole_; }
  /// "algebra" for whole domains, otherwise the subspace tag.
  const std::string& tag() const noexcept { return tag_; }

  bool contains(const Element& x) const;
  /// Coordinates of x on the basis; absent when x is outside the span.
  std::optional<Vec> coordinates(const Element& x) const;
  /// Relations among the basis vectors (empty when the basis is free).
  const std::vector<Vec>& relations() const noexcept { return tracked_.kernel; }

 private:
  AlgebraPtr ambient_;
  std::vector<Element> basis_;
  bool whole_ = false;
  std::string tag_;
  TrackedEchelon tracked_;
};
using DomainPtr = std::shared_ptr<const MapDomain>;

class LinMap {
 public:
  LinMap(DomainPtr domain, AlgebraPtr codomain, std::vector<Element> images);
  static LinMap from_function(DomainPtr domain, AlgebraPtr codomain, const std::function<Element(const Element&)>& fn);
  static LinMap zero(DomainPtr domain, AlgebraPtr codomain);
  static LinMap identity(const AlgebraPtr& a);

  const DomainPtr& domain() const noexcept { return domain_; }
  const AlgebraPtr& codomain() const noexcept { return codomain_; }
  const std::vector<Element>& images() const noexcept { return images_; }

  /// Linear extension of the basis images. Throws DomainError outside the domain span.
  Element evaluate(const Element& x) const;
  Element operator()(const Element& x) const { return evaluate(x); }
  /// Evaluate a combination given by coordinates on the domain basis.
  Element combine(const Vec& coords) const;

  LinMap restricted_to(DomainPtr smaller) const;
  LinMap with_image(std::size_t k, Element image) const;

  friend LinMap operator+(const LinMap& f, const LinMap& g);
  friend LinMap operator-(const LinMap& f, const LinMap& g);
  friend bool operator==(const LinMap& f, const LinMap& g);

 private:
  DomainPtr domain_;
  AlgebraPtr codomain_;
  std::vector<Element> images_;
};

Element evaluate(const LinMap& f, const Element& x);
/// g after f.
LinMap compose(const LinMap& g, const LinMap& f);

/// The symmetrization a -> a + a^op of A into A + A^op, as a linear map on `domain`.
LinMap s_map_linmap(const DomainPtr& domain, const AlgebraPtr& envelope);
/// a -> a^op from A into A^op.
LinMap to_opposite_linmap(const AlgebraPtr& a, const AlgebraPtr& opposite);
/// The (1,1)-entry projection T_n(R) -> R.
LinMap projection_p_linmap(const AlgebraPtr& triangular);

/// A bimodule over `acting` whose carrier is the algebra `carrier`, with
/// a.m = left(a) m and m.a = m right(a) for homomorphisms left, right.
struct Bimodule {
  AlgebraPtr acting;
  AlgebraPtr carrier;
  LinMap left_hom;
  LinMap right_hom;

  /// M = A with multiplication as both actions.
  static Bimodule regular(const AlgebraPtr& a);
  static Bimodule from_homs(LinMap left, LinMap right);

  Element left(const Element& a, const Element& m) const { return left_hom(a) * m; }
  Element right(const Element& m, const Element& a) const { return m * right_hom(a); }
};

}  // namespace trialg
