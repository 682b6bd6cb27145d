#include "trialg/scalar.hpp"

#include <algorithm>

namespace trialg {

ScalarRing ScalarRing::modular(const mpz_class& modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2, got " + modulus.get_str());
  ScalarRing r;
  r.kind_ = Kind::modular;
  r.modulus_ = modulus;
  return r;
}

std::string ScalarRing::to_string() const {
  return is_modular() ? "Z/" + modulus_.get_str() : "Z";
}

Scalar scalar_arithmetic(const Scalar& a, const Scalar& b, ScalarOp op) {
  if (!(a.ring() == b.ring())) {
    throw RingMismatch("scalar operands over " + a.ring().to_string() + " and " + b.ring().to_string());
  }
  const ScalarRing& r = a.ring();
  switch (op) {
    case ScalarOp::add: return Scalar(r, r.add(a.value(), b.value()));
    case ScalarOp::sub: return Scalar(r, r.sub(a.value(), b.value()));
    case ScalarOp::mul: return Scalar(r, r.mul(a.value(), b.value()));
    case ScalarOp::neg: return Scalar(r, r.neg(a.value()));
  }
  throw std::logic_error("unknown scalar op");
}

Scalar operator+(const Scalar& a, const Scalar& b) { return scalar_arithmetic(a, b, ScalarOp::add); }
Scalar operator-(const Scalar& a, const Scalar& b) { return scalar_arithmetic(a, b, ScalarOp::sub); }
Scalar operator*(const Scalar& a, const Scalar& b) { return scalar_arithmetic(a, b, ScalarOp::mul); }

mpz_class parse_scalar(const ScalarRing& ring, const std::string& text) {
  mpz_class v;
  if (text.empty() || v.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: '" + text + "'");
  }
  ring.reduce(v);
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
}

}  // namespace trialg
