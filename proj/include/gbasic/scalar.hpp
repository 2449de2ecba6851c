#ifndef GBASIC_SCALAR_HPP
#define GBASIC_SCALAR_HPP

#include <gmpxx.h>

#include <string>

#include "gbasic/errors.hpp"

namespace gbasic {

class Scalar;

/// Coefficient field: the rationals, or a prime field F_p.
///
/// F_p mode exists for exhaustive enumeration oracles; the shrinking
/// operations refuse to run over F_p when p is too small for their
/// deterministic choices.
class Field {
 public:
  Field() = default;  // rationals

  static Field rationals() { return Field(); }

  /// p must be prime and < 2^31.
  static Field prime_field(unsigned long p);

  bool modular() const { return p_ != 0; }
  unsigned long characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar integer(long n) const;

  /// Parses "a" or "a/b" (a, b decimal integers, optional leading '-').
  /// In F_p mode the value is reduced mod p; b = 0 mod p is rejected.
  Scalar parse(const std::string& text) const;

  std::string name() const;  // "Q" or "F<p>"

  bool operator==(const Field& other) const { return p_ == other.p_; }
  bool operator!=(const Field& other) const { return p_ != other.p_; }

 private:
  unsigned long p_ = 0;  // 0 = rationals
};

/// An exact field element: arbitrary-precision rational (always kept in
/// lowest terms with positive denominator, courtesy of GMP's canonical
/// form) or a residue in F_p.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar from_mpq(mpq_class q);
  static Scalar rational(long num, long den = 1);
  static Scalar modular(unsigned long value, unsigned long p);

  Field field() const;
  bool is_modular() const { return p_ != 0; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(long e) const;  // negative e allowed for nonzero values

  bool operator==(const Scalar& rhs) const;
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

  /// "n" or "n/d"; F_p residues print as "r".
  std::string str() const;

  const mpq_class& rational_value() const;
  unsigned long modular_value() const;
  unsigned long characteristic() const { return p_; }

 private:
  void check_same_field(const Scalar& rhs) const;

  unsigned long p_ = 0;  // 0 = rational
  unsigned long r_ = 0;  // residue when modular
  mpq_class q_;          // value when rational
};

}  // namespace gbasic

#endif
