#include "trialg/linmap.hpp"

namespace trialg {

DomainPtr MapDomain::whole(AlgebraPtr ambient) {
  auto d = std::make_shared<MapDomain>();
  d->basis_ = ambient->basis();
  d->ambient_ = std::move(ambient);
  d->whole_ = true;
  d->tag_ = "algebra";
  return d;
}

DomainPtr MapDomain::of_subspace(const SubspaceBasis& sub) {
  return custom(sub.algebra, sub.generators, to_string(sub.tag));
}

DomainPtr MapDomain::custom(AlgebraPtr ambient, std::vector<Element> basis, std::string tag) {
  auto d = std::make_shared<MapDomain>();
  for (const auto& b : basis) {
    if (!b.algebra()->same_as(*ambient)) throw AlgebraMismatch("domain basis element outside the ambient algebra");
  }
  d->tracked_ = echelonize_tracked(ambient->ring(), dense_rows(basis), ambient->rank());
  d->ambient_ = std::move(ambient);
  d->basis_ = std::move(basis);
  d->tag_ = std::move(tag);
  return d;
}

bool MapDomain::contains(const Element& x) const {
  if (!x.algebra()->same_as(*ambient_)) return false;
  return whole_ || trialg::contains(tracked_.basis, x.dense());
}

std::optional<Vec> MapDomain::coordinates(const Element& x) const {
  if (!x.algebra()->same_as(*ambient_)) return std::nullopt;
  if (whole_) return x.dense();
  return generator_coordinates(x.dense(), tracked_);
}

LinMap::LinMap(DomainPtr domain, AlgebraPtr codomain, std::vector<Element> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != domain_->rank()) {
    throw DimensionMismatch("linear map needs " + std::to_string(domain_->rank()) + " images, got " +
                            std::to_string(images_.size()));
  }
  for (const auto& im : images_) {
    if (!im.algebra()->same_as(*codomain_)) throw AlgebraMismatch("image outside the codomain");
  }
}

LinMap LinMap::from_function(DomainPtr domain, AlgebraPtr codomain, const std::function<Element(const Element&)>& fn) {
  std::vector<Element> images;
  images.reserve(domain->rank());
  for (const auto& b : domain->basis()) images.push_back(fn(b));
  return LinMap(std::move(domain), std::move(codomain), std::move(images));
}

LinMap LinMap::zero(DomainPtr domain, AlgebraPtr codomain) {
  std::vector<Element> images(domain->rank(), Element::zero(codomain));
  return LinMap(std::move(domain), std::move(codomain), std::move(images));
}

LinMap LinMap::identity(const AlgebraPtr& a) { return LinMap(MapDomain::whole(a), a, a->basis()); }

Element LinMap::combine(const Vec& coords) const {
  Terms acc;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] == 0) continue;
    for (const auto& t : images_[k].terms()) acc.push_back({t.index, coords[k] * t.coeff});
  }
  return Element::from_terms(codomain_, std::move(acc));
}

Element LinMap::evaluate(const Element& x) const {
  if (domain_->is_whole()) {
    if (!x.algebra()->same_as(*domain_->ambient())) throw DomainError("argument outside the domain algebra");
    Terms acc;
    for (const auto& s : x.terms()) {
      for (const auto& t : images_[s.index].terms()) acc.push_back({t.index, s.coeff * t.coeff});
    }
    return Element::from_terms(codomain_, std::move(acc));
  }
  auto coords = domain_->coordinates(x);
  if (!coords) throw DomainError("argument " + x.to_string() + " outside the " + domain_->tag() + " domain");
  return combine(*coords);
}

LinMap LinMap::restricted_to(DomainPtr smaller) const {
  return from_function(std::move(smaller), codomain_, [this](const Element& b) { return evaluate(b); });
}

LinMap LinMap::with_image(std::size_t k, Element image) const {
  auto images = images_;
  images.at(k) = std::move(image);
  return LinMap(domain_, codomain_, std::move(images));
}

namespace {

void require_compatible(const LinMap& f, const LinMap& g) {
  if (f.domain() != g.domain() && !(f.domain()->ambient()->same_as(*g.domain()->ambient()) &&
                                    f.domain()->basis() == g.domain()->basis())) {
    throw DomainError("maps have different domains");
  }
  if (!f.codomain()->same_as(*g.codomain())) throw AlgebraMismatch("maps have different codomains");
}

}  // namespace

LinMap operator+(const LinMap& f, const LinMap& g) {
  require_compatible(f, g);
  std::vector<Element> images;
  for (std::size_t k = 0; k < f.images_.size(); ++k) images.push_back(f.images_[k] + g.images_[k]);
  return LinMap(f.domain_, f.codomain_, std::move(images));
}

LinMap operator-(const LinMap& f, const LinMap& g) {
  require_compatible(f, g);
  std::vector<Element> images;
  for (std::size_t k = 0; k < f.images_.size(); ++k) images.push_back(f.images_[k] - g.images_[k]);
  return LinMap(f.domain_, f.codomain_, std::move(images));
}

bool operator==(const LinMap& f, const LinMap& g) {
  return f.codomain_->same_as(*g.codomain_) && f.domain_->ambient()->same_as(*g.domain_->ambient()) &&
         f.domain_->basis() == g.domain_->basis() && f.images_ == g.images_;
}

Element evaluate(const LinMap& f, const Element& x) { return f.evaluate(x); }

LinMap compose(const LinMap& g, const LinMap& f) {
  if (!f.codomain()->same_as(*g.domain()->ambient())) throw AlgebraMismatch("composition: codomain/domain mismatch");
  return LinMap::from_function(f.domain(), g.codomain(), [&](const Element& b) { return g(f(b)); });
}

LinMap s_map_linmap(const DomainPtr& domain, const AlgebraPtr& envelope) {
  return LinMap::from_function(domain, envelope, [&](const Element& b) { return s_map(envelope, b); });
}

LinMap to_opposite_linmap(const AlgebraPtr& a, const AlgebraPtr& opposite) {
  if (opposite->descriptor() != AlgebraDescriptor::opposite(a->descriptor())) {
    throw AlgebraMismatch("target is not the opposite algebra");
  }
  return LinMap::from_function(MapDomain::whole(a), opposite,
                               [&](const Element& b) { return reinterpret(opposite, b); });
}

LinMap projection_p_linmap(const AlgebraPtr& triangular) {
  require_triangular(*triangular);
  return LinMap::from_function(MapDomain::whole(triangular), triangular->inner(),
                               [](const Element& b) { return projection_p(b); });
}

Bimodule Bimodule::regular(const AlgebraPtr& a) {
  return Bimodule{a, a, LinMap::identity(a), LinMap::identity(a)};
}

Bimodule Bimodule::from_homs(LinMap left, LinMap right) {
  if (!left.domain()->is_whole() || !right.domain()->is_whole()) {
    throw DomainError("bimodule actions must be defined on the whole acting algebra");
  }
  if (!left.domain()->ambient()->same_as(*right.domain()->ambient()) || !left.codomain()->same_as(*right.codomain())) {
    throw AlgebraMismatch("left and right action homomorphisms disagree on algebras");
  }
  AlgebraPtr acting = left.domain()->ambient();
  AlgebraPtr carrier = left.codomain();
  return Bimodule{std::move(acting), std::move(carrier), std::move(left), std::move(right)};
}

}  // namespace trialg
