#include "gbasic/scalar.hpp"

#include <cctype>
#include <cstdint>

namespace gbasic {

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

unsigned long mod_mul(unsigned long a, unsigned long b, unsigned long p) {
  return static_cast<unsigned long>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

unsigned long mod_pow(unsigned long a, unsigned long e, unsigned long p) {
  unsigned long acc = 1 % p;
  while (e) {
    if (e & 1) acc = mod_mul(acc, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return acc;
}

unsigned long mod_inv(unsigned long a, unsigned long p) {
  if (a == 0) throw error("division by zero in F_p");
  // p prime, so a^(p-2) works and avoids signed gcd bookkeeping
  return mod_pow(a, p - 2, p);
}

}  // namespace

Field Field::prime_field(unsigned long p) {
  if (p >= (1ul << 31) || !is_prime(p))
    throw validation_error("field characteristic must be a prime < 2^31, got " +
                           std::to_string(p));
  Field f;
  f.p_ = p;
  return f;
}

Scalar Field::zero() const { return integer(0); }
Scalar Field::one() const { return integer(1); }

Scalar Field::integer(long n) const {
  if (p_ == 0) return Scalar::rational(n);
  long r = n % static_cast<long>(p_);
  if (r < 0) r += static_cast<long>(p_);
  return Scalar::modular(static_cast<unsigned long>(r), p_);
}

Scalar Field::parse(const std::string& text) const {
  std::size_t i = 0, n = text.size();
  auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto read_int = [&]() -> std::string {
    std::string out;
    if (i < n && text[i] == '-') out += text[i++];
    std::size_t start = out.size();
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) out += text[i++];
    if (out.size() == start)
      throw parse_error("expected integer in scalar '" + text + "'");
    return out;
  };
  skip_ws();
  std::string num = read_int();
  std::string den = "1";
  skip_ws();
  if (i < n && text[i] == '/') {
    ++i;
    skip_ws();
    den = read_int();
  }
  skip_ws();
  if (i != n) throw parse_error("trailing characters in scalar '" + text + "'");

  mpq_class q;
  q = mpq_class(mpz_class(num), mpz_class(den));
  if (q.get_den() == 0) throw parse_error("zero denominator in '" + text + "'");
  q.canonicalize();
  if (p_ == 0) return Scalar::from_mpq(q);

  mpz_class nm = q.get_num() % static_cast<long>(p_);
  mpz_class dm = q.get_den() % static_cast<long>(p_);
  if (dm == 0)
    throw parse_error("denominator of '" + text + "' vanishes mod " +
                      std::to_string(p_));
  unsigned long nr = mpz_class(nm < 0 ? nm + static_cast<long>(p_) : nm).get_ui();
  unsigned long dr = dm.get_ui();
  return Scalar::modular(mod_mul(nr, mod_inv(dr, p_), p_), p_);
}

std::string Field::name() const {
  return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::from_mpq(mpq_class q) {
  Scalar s;
  q.canonicalize();
  s.q_ = std::move(q);
  return s;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw error("zero denominator");
  return from_mpq(mpq_class(num, den));
}

Scalar Scalar::modular(unsigned long value, unsigned long p) {
  if (p == 0) throw error("modular scalar needs p > 0");
  Scalar s;
  s.p_ = p;
  s.r_ = value % p;
  return s;
}

Field Scalar::field() const {
  return p_ == 0 ? Field::rationals() : Field::prime_field(p_);
}

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1 % p_; }

void Scalar::check_same_field(const Scalar& rhs) const {
  if (p_ != rhs.p_)
    throw field_mismatch("cannot combine values of " + field().name() +
                         " and " + rhs.field().name());
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (p_ == 0)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (p_ == 0) {
    q_ += rhs.q_;
  } else {
    r_ += rhs.r_;
    if (r_ >= p_) r_ -= p_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (p_ == 0) {
    q_ -= rhs.q_;
  } else {
    r_ = (r_ >= rhs.r_) ? r_ - rhs.r_ : r_ + p_ - rhs.r_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (p_ == 0)
    q_ *= rhs.q_;
  else
    r_ = mod_mul(r_, rhs.r_, p_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  if (rhs.is_zero()) throw error("division by zero");
  if (p_ == 0)
    q_ /= rhs.q_;
  else
    r_ = mod_mul(r_, mod_inv(rhs.r_, p_), p_);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw error("inverse of zero");
  Scalar s(*this);
  if (p_ == 0)
    s.q_ = 1 / q_;
  else
    s.r_ = mod_inv(r_, p_);
  return s;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (p_ != 0) return Scalar::modular(mod_pow(r_, static_cast<unsigned long>(e), p_), p_);
  Scalar acc = Scalar::rational(1);
  Scalar base(*this);
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& rhs) const {
  check_same_field(rhs);
  return p_ == 0 ? q_ == rhs.q_ : r_ == rhs.r_;
}

std::string Scalar::str() const {
  return p_ == 0 ? q_.get_str() : std::to_string(r_);
}

const mpq_class& Scalar::rational_value() const {
  if (p_ != 0) throw field_mismatch("not a rational value");
  return q_;
}

unsigned long Scalar::modular_value() const {
  if (p_ == 0) throw field_mismatch("not an F_p value");
  return r_;
}

}  // namespace gbasic
