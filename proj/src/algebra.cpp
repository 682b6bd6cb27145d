#include "trialg/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace trialg {

// ---------------------------------------------------------------- descriptors

AlgebraDescriptor AlgebraDescriptor::scalar() { return {}; }

AlgebraDescriptor AlgebraDescriptor::matrix(std::size_t k, AlgebraDescriptor inner) {
  AlgebraDescriptor d;
  d.kind = Kind::matrix;
  d.size = k;
  d.children.push_back(std::move(inner));
  return d;
}

AlgebraDescriptor AlgebraDescriptor::free(std::size_t generators, std::size_t max_degree) {
  AlgebraDescriptor d;
  d.kind = Kind::free;
  d.generators = generators;
  d.max_degree = max_degree;
  return d;
}

AlgebraDescriptor AlgebraDescriptor::triangular(std::size_t n, AlgebraDescriptor inner) {
  AlgebraDescriptor d;
  d.kind = Kind::triangular;
  d.size = n;
  d.children.push_back(std::move(inner));
  return d;
}

AlgebraDescriptor AlgebraDescriptor::opposite(AlgebraDescriptor inner) {
  AlgebraDescriptor d;
  d.kind = Kind::opposite;
  d.children.push_back(std::move(inner));
  return d;
}

AlgebraDescriptor AlgebraDescriptor::direct_sum(AlgebraDescriptor left, AlgebraDescriptor right) {
  AlgebraDescriptor d;
  d.kind = Kind::direct_sum;
  d.children.push_back(std::move(left));
  d.children.push_back(std::move(right));
  return d;
}

std::size_t AlgebraDescriptor::rank() const {
  switch (kind) {
    case Kind::scalar: return 1;
    case Kind::matrix: return size * size * inner().rank();
    case Kind::free: {
      std::size_t total = 0, words = 1;
      for (std::size_t len = 0; len <= max_degree; ++len) {
        total += words;
        words *= generators;
      }
      return total;
    }
    case Kind::triangular: return size * (size + 1) / 2 * inner().rank();
    case Kind::opposite: return inner().rank();
    case Kind::direct_sum: return left().rank() + right().rank();
  }
  return 0;
}

std::string AlgebraDescriptor::to_string() const {
  switch (kind) {
    case Kind::scalar: return "Phi";
    case Kind::matrix: return "M_" + std::to_string(size) + "(" + inner().to_string() + ")";
    case Kind::free: return "Free(" + std::to_string(generators) + "," + std::to_string(max_degree) + ")";
    case Kind::triangular: return "T_" + std::to_string(size) + "(" + inner().to_string() + ")";
    case Kind::opposite: return "(" + inner().to_string() + ")^op";
    case Kind::direct_sum: return left().to_string() + " + " + right().to_string();
  }
  return "?";
}

// ---------------------------------------------------------------- elements

namespace {

void normalize(const ScalarRing& ring, Terms& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  Terms out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().index == t.index) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  for (auto& t : out) ring.reduce(t.coeff);
  std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
  terms = std::move(out);
}

}  // namespace

Element Element::zero(AlgebraPtr algebra) {
  Element e;
  e.algebra_ = std::move(algebra);
  return e;
}

Element Element::basis(AlgebraPtr algebra, std::size_t index) {
  if (index >= algebra->rank()) throw std::out_of_range("basis index out of range");
  Element e;
  e.algebra_ = std::move(algebra);
  e.terms_.push_back({index, 1});
  return e;
}

Element Element::from_terms(AlgebraPtr algebra, Terms terms) {
  for (const auto& t : terms) {
    if (t.index >= algebra->rank()) throw std::out_of_range("term index out of range");
  }
  normalize(algebra->ring(), terms);
  Element e;
  e.algebra_ = std::move(algebra);
  e.terms_ = std::move(terms);
  return e;
}

Element Element::from_dense(AlgebraPtr algebra, const Vec& coeffs) {
  if (coeffs.size() != algebra->rank()) throw DimensionMismatch("coefficient vector length differs from rank");
  Terms terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    mpz_class c = algebra->ring().canonical(coeffs[i]);
    if (c != 0) terms.push_back({i, std::move(c)});
  }
  Element e;
  e.algebra_ = std::move(algebra);
  e.terms_ = std::move(terms);
  return e;
}

mpz_class Element::coefficient(std::size_t index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, std::size_t i) { return t.index < i; });
  return (it != terms_.end() && it->index == index) ? it->coeff : mpz_class(0);
}

Vec Element::dense() const {
  Vec v(algebra_->rank());
  for (const auto& t : terms_) v[t.index] = t.coeff;
  return v;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    if (t.coeff != 1) os << t.coeff.get_str() << "*";
    os << algebra_->basis_label(t.index);
  }
  return os.str();
}

void require_same_algebra(const Element& x, const Element& y, const char* what) {
  if (!x.algebra() || !y.algebra() || !x.algebra()->same_as(*y.algebra())) {
    throw AlgebraMismatch(std::string(what) + ": operands live in different algebras");
  }
}

Element& Element::operator+=(const Element& other) {
  require_same_algebra(*this, other, "addition");
  Terms merged;
  merged.reserve(terms_.size() + other.terms_.size());
  const ScalarRing& ring = algebra_->ring();
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->index < b->index)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->index < a->index) {
      merged.push_back(*b++);
    } else {
      mpz_class c = ring.add(a->coeff, b->coeff);
      if (c != 0) merged.push_back({a->index, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Element& Element::operator-=(const Element& other) { return *this += -other; }

Element Element::operator-() const {
  Element e = *this;
  for (auto& t : e.terms_) t.coeff = algebra_->ring().neg(t.coeff);
  return e;
}

Element Element::scaled(const mpz_class& c) const {
  Element e = *this;
  for (auto& t : e.terms_) t.coeff = algebra_->ring().mul(t.coeff, c);
  std::erase_if(e.terms_, [](const Term& t) { return t.coeff == 0; });
  return e;
}

Element operator*(const mpz_class& c, const Element& x) { return x.scaled(c); }

bool operator==(const Element& a, const Element& b) {
  if (a.algebra_ != b.algebra_) {
    if (!a.algebra_ || !b.algebra_ || !a.algebra_->same_as(*b.algebra_)) return false;
  }
  return a.terms_ == b.terms_;
}

// ---------------------------------------------------------------- algebras

std::vector<std::vector<std::size_t>> free_words(std::size_t generators, std::size_t max_degree) {
  std::vector<std::vector<std::size_t>> words{{}};
  std::size_t start = 0;
  for (std::size_t len = 1; len <= max_degree; ++len) {
    const std::size_t end = words.size();
    for (std::size_t w = start; w < end; ++w) {
      for (std::size_t g = 0; g < generators; ++g) {
        auto next = words[w];
        next.push_back(g);
        words.push_back(std::move(next));
      }
    }
    start = end;
  }
  return words;
}

Algebra::Algebra(ScalarRing ring, AlgebraDescriptor descriptor)
    : ring_(std::move(ring)), descriptor_(std::move(descriptor)), rank_(descriptor_.rank()) {}

AlgebraPtr build_algebra(const ScalarRing& ring, const AlgebraDescriptor& d) {
  using K = AlgebraDescriptor::Kind;
  switch (d.kind) {
    case K::scalar: break;
    case K::matrix:
      if (d.size < 1) throw std::invalid_argument("matrix algebra needs size >= 1");
      break;
    case K::free:
      if (d.generators < 1) throw std::invalid_argument("free algebra needs at least one generator");
      if (d.max_degree < 1) throw std::invalid_argument("free algebra needs max_degree >= 1");
      break;
    case K::triangular:
      if (d.size < 2) throw std::invalid_argument("triangular algebra needs n >= 2, got " + std::to_string(d.size));
      break;
    case K::opposite: break;
    case K::direct_sum: break;
  }
  const std::size_t want_children = (d.kind == K::direct_sum) ? 2
                                    : (d.kind == K::scalar || d.kind == K::free) ? 0
                                                                                 : 1;
  if (d.children.size() != want_children) throw std::invalid_argument("descriptor has wrong number of children");

  auto a = std::make_shared<Algebra>(ring, d);
  for (const auto& child : d.children) a->children_.push_back(build_algebra(ring, child));
  a->finish();
  return a;
}

void Algebra::finish() {
  if (descriptor_.kind == AlgebraDescriptor::Kind::free) {
    std::size_t words = 1, offset = 0;
    for (std::size_t len = 0; len <= descriptor_.max_degree; ++len) {
      word_offsets_.push_back(offset);
      offset += words;
      words *= descriptor_.generators;
    }
  }
  memo_.resize(rank_ * rank_);
  unit_ = Element::from_terms(self(), compute_unit());
}

std::vector<Element> Algebra::basis() const {
  std::vector<Element> out;
  out.reserve(rank_);
  for (std::size_t i = 0; i < rank_; ++i) out.push_back(basis_element(i));
  return out;
}

const Terms& Algebra::basis_product(std::size_t i, std::size_t j) const {
  const std::size_t slot = i * rank_ + j;
  {
    std::lock_guard lock(memo_mutex_);
    if (memo_[slot]) return *memo_[slot];
  }
  auto computed = std::make_unique<Terms>(compute_product(i, j));
  std::lock_guard lock(memo_mutex_);
  if (!memo_[slot]) memo_[slot] = std::move(computed);
  return *memo_[slot];
}

namespace {

Terms shifted(const Terms& in, std::size_t offset) {
  Terms out = in;
  for (auto& t : out) t.index += offset;
  return out;
}

// Cell (row, col) of a k x k grid; triangular grids only hold row <= col.
std::size_t cell_index(bool triangular, std::size_t k, std::size_t row, std::size_t col) {
  if (!triangular) return row * k + col;
  // cells before row `row`: sum_{r < row} (k - r)
  return row * k - row * (row - 1) / 2 + (col - row);
}

std::pair<std::size_t, std::size_t> cell_position(bool triangular, std::size_t k, std::size_t cell) {
  if (!triangular) return {cell / k, cell % k};
  std::size_t row = 0;
  while (cell >= k - row) {
    cell -= k - row;
    ++row;
  }
  return {row, row + cell};
}

}  // namespace

Terms Algebra::compute_unit() const {
  using K = AlgebraDescriptor::Kind;
  switch (descriptor_.kind) {
    case K::scalar: return {{0, 1}};
    case K::free: return {{0, 1}};
    case K::opposite: return inner()->unit().terms();
    case K::direct_sum: {
      Terms out = left()->unit().terms();
      Terms r = shifted(right()->unit().terms(), left()->rank());
      out.insert(out.end(), r.begin(), r.end());
      return out;
    }
    case K::matrix:
    case K::triangular: {
      const bool tri = descriptor_.kind == K::triangular;
      const std::size_t k = descriptor_.size;
      const std::size_t r = inner()->rank();
      Terms out;
      for (std::size_t p = 0; p < k; ++p) {
        Terms block = shifted(inner()->unit().terms(), cell_index(tri, k, p, p) * r);
        out.insert(out.end(), block.begin(), block.end());
      }
      return out;
    }
  }
  return {};
}

Terms Algebra::compute_product(std::size_t i, std::size_t j) const {
  using K = AlgebraDescriptor::Kind;
  switch (descriptor_.kind) {
    case K::scalar: return {{0, 1}};
    case K::free: {
      auto length_of = [&](std::size_t idx) {
        std::size_t len = 0;
        while (len + 1 < word_offsets_.size() && idx >= word_offsets_[len + 1]) ++len;
        return len;
      };
      const std::size_t li = length_of(i), lj = length_of(j);
      if (li + lj > descriptor_.max_degree) return {};
      std::size_t g = descriptor_.generators;
      std::size_t vi = i - word_offsets_[li], vj = j - word_offsets_[lj];
      std::size_t scale = 1;
      for (std::size_t t = 0; t < lj; ++t) scale *= g;
      return {{word_offsets_[li + lj] + vi * scale + vj, 1}};
    }
    case K::opposite: return inner()->basis_product(j, i);
    case K::direct_sum: {
      const std::size_t nl = left()->rank();
      if (i < nl && j < nl) return left()->basis_product(i, j);
      if (i >= nl && j >= nl) return shifted(right()->basis_product(i - nl, j - nl), nl);
      return {};
    }
    case K::matrix:
    case K::triangular: {
      const bool tri = descriptor_.kind == K::triangular;
      const std::size_t k = descriptor_.size;
      const std::size_t r = inner()->rank();
      auto [pi, qi] = cell_position(tri, k, i / r);
      auto [pj, qj] = cell_position(tri, k, j / r);
      if (qi != pj) return {};
      return shifted(inner()->basis_product(i % r, j % r), cell_index(tri, k, pi, qj) * r);
    }
  }
  return {};
}

std::string Algebra::basis_label(std::size_t i) const {
  using K = AlgebraDescriptor::Kind;
  switch (descriptor_.kind) {
    case K::scalar: return "1";
    case K::free: {
      auto words = free_words(descriptor_.generators, descriptor_.max_degree);
      if (words[i].empty()) return "1";
      std::string s;
      for (auto g : words[i]) s += g < 3 ? std::string(1, static_cast<char>('x' + g)) : "g" + std::to_string(g);
      return s;
    }
    case K::opposite: return inner()->basis_label(i) + "^op";
    case K::direct_sum: {
      const std::size_t nl = left()->rank();
      return i < nl ? "(" + left()->basis_label(i) + ",0)" : "(0," + right()->basis_label(i - nl) + ")";
    }
    case K::matrix:
    case K::triangular: {
      const bool tri = descriptor_.kind == K::triangular;
      const std::size_t r = inner()->rank();
      auto [p, q] = cell_position(tri, descriptor_.size, i / r);
      return "e" + std::to_string(p + 1) + std::to_string(q + 1) + "(" + inner()->basis_label(i % r) + ")";
    }
  }
  return "?";
}

// ---------------------------------------------------------------- products

Element multiply(const Element& x, const Element& y) {
  require_same_algebra(x, y, "multiply");
  const Algebra& a = *x.algebra();
  Terms acc;
  for (const auto& s : x.terms()) {
    for (const auto& t : y.terms()) {
      const Terms& prod = a.basis_product(s.index, t.index);
      if (prod.empty()) continue;
      mpz_class c = s.coeff * t.coeff;
      for (const auto& p : prod) acc.push_back({p.index, c * p.coeff});
    }
  }
  return Element::from_terms(x.algebra(), std::move(acc));
}

Element operator*(const Element& x, const Element& y) { return multiply(x, y); }

Element jordan_product(const Element& x, const Element& y) { return x * y + y * x; }

Element commutator(const Element& x, const Element& y) { return x * y - y * x; }

namespace {

void require_direct_sum(const AlgebraPtr& a) {
  if (a->descriptor().kind != AlgebraDescriptor::Kind::direct_sum) {
    throw AlgebraMismatch("expected a direct-sum algebra, got " + a->descriptor().to_string());
  }
}

}  // namespace

Element inject_left(const AlgebraPtr& sum, const Element& x) {
  require_direct_sum(sum);
  if (!x.algebra()->same_as(*sum->left())) throw AlgebraMismatch("left summand mismatch");
  return Element::from_terms(sum, x.terms());
}

Element inject_right(const AlgebraPtr& sum, const Element& y) {
  require_direct_sum(sum);
  if (!y.algebra()->same_as(*sum->right())) throw AlgebraMismatch("right summand mismatch");
  return Element::from_terms(sum, shifted(y.terms(), sum->left()->rank()));
}

Element project_left(const Element& z) {
  const AlgebraPtr& sum = z.algebra();
  require_direct_sum(sum);
  Terms out;
  for (const auto& t : z.terms()) {
    if (t.index < sum->left()->rank()) out.push_back(t);
  }
  return Element::from_terms(sum->left(), std::move(out));
}

Element project_right(const Element& z) {
  const AlgebraPtr& sum = z.algebra();
  require_direct_sum(sum);
  const std::size_t nl = sum->left()->rank();
  Terms out;
  for (const auto& t : z.terms()) {
    if (t.index >= nl) out.push_back({t.index - nl, t.coeff});
  }
  return Element::from_terms(sum->right(), std::move(out));
}

Element reinterpret(const AlgebraPtr& target, const Element& x) {
  if (target->rank() != x.algebra()->rank()) throw AlgebraMismatch("reinterpret between algebras of different rank");
  return Element::from_terms(target, x.terms());
}

}  // namespace trialg
