#pragma once

// Exact arithmetic in the base ring: the integers or a residue ring Z/m.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace trialg {

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vec = std::vector<mpz_class>;

class ScalarRing {
 public:
  enum class Kind { integers, modular };

  static ScalarRing integers() { return ScalarRing(); }
  static ScalarRing modular(const mpz_class& modulus);
  static ScalarRing modular(long modulus) { return modular(mpz_class(modulus)); }

  Kind kind() const noexcept { return kind_; }
  bool is_modular() const noexcept { return kind_ == Kind::modular; }
  /// Zero for the integers.
  const mpz_class& modulus() const noexcept { return modulus_; }

  /// Brings an arbitrary integer to the canonical representative.
  void reduce(mpz_class& v) const {
    if (kind_ == Kind::modular && (v < 0 || v >= modulus_)) {
      mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
    }
  }
  mpz_class canonical(mpz_class v) const {
    reduce(v);
    return v;
  }

  mpz_class add(const mpz_class& a, const mpz_class& b) const { return canonical(a + b); }
  mpz_class sub(const mpz_class& a, const mpz_class& b) const { return canonical(a - b); }
  mpz_class mul(const mpz_class& a, const mpz_class& b) const { return canonical(a * b); }
  mpz_class neg(const mpz_class& a) const { return canonical(-a); }

  /// Number of elements, absent (zero) for the integers.
  bool is_finite() const noexcept { return is_modular(); }

  std::string to_string() const;

  friend bool operator==(const ScalarRing& a, const ScalarRing& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  Kind kind_ = Kind::integers;
  mpz_class modulus_ = 0;
};

/// A ring element bundled with its ring; used at API boundaries where the
/// ring of an operand is not implied by context.
class Scalar {
 public:
  Scalar(ScalarRing ring, mpz_class value) : ring_(std::move(ring)), value_(std::move(value)) {
    ring_.reduce(value_);
  }
  Scalar(ScalarRing ring, long value) : Scalar(std::move(ring), mpz_class(value)) {}

  const ScalarRing& ring() const noexcept { return ring_; }
  const mpz_class& value() const noexcept { return value_; }
  std::string to_string() const { return value_.get_str(); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.ring_ == b.ring_ && a.value_ == b.value_;
  }

 private:
  ScalarRing ring_;
  mpz_class value_;
};

enum class ScalarOp { add, sub, mul, neg };

/// Exact ring operation; `neg` ignores `b` except for the ring check.
Scalar scalar_arithmetic(const Scalar& a, const Scalar& b, ScalarOp op);

Scalar operator+(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a, const Scalar& b);
Scalar operator*(const Scalar& a, const Scalar& b);

/// Parses a decimal string, reduced into the ring.
mpz_class parse_scalar(const ScalarRing& ring, const std::string& text);

bool is_zero(const Vec& v);

}  // namespace trialg
