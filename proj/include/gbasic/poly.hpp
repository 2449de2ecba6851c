#ifndef GBASIC_POLY_HPP
#define GBASIC_POLY_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "gbasic/scalar.hpp"

namespace gbasic {

/// Exponent vector; entries are non-negative and sum to the total degree.
using ExpVec = std::vector<int>;

int total_degree(const ExpVec& e);

/// All exponent vectors of the given total degree, in graded-lex order
/// (x0 > x1 > ... > x_{n-1}; within a degree this is descending
/// lexicographic order on exponent vectors). Deterministic.
std::vector<ExpVec> monomials(int num_vars, int degree);

/// C(degree + num_vars - 1, num_vars - 1).
long monomial_count(int num_vars, int degree);

/// dim of the degree-d graded piece of the polynomial ring; 0 for d < 0.
long poly_ring_dim(int num_vars, int degree);

/// A homogeneous polynomial with exact coefficients. The zero polynomial
/// is representable at any degree (empty term map).
class HomogPoly {
 public:
  using TermMap = std::map<ExpVec, Scalar, std::greater<ExpVec>>;

  HomogPoly(int num_vars, int degree, const Field& field);

  static HomogPoly zero(int num_vars, int degree, const Field& field);
  static HomogPoly constant(int num_vars, const Scalar& value);
  static HomogPoly variable(int num_vars, int index, const Field& field);

  /// Parses the textual syntax, e.g. "3*x0^2*x1 - 1/2*x2^3".
  /// All terms must share one total degree. "0" (or an empty string)
  /// yields the zero polynomial; its degree is `expected_degree` when
  /// that is >= 0, else 0. A non-negative `expected_degree` is enforced
  /// against nonzero input.
  static HomogPoly parse(const std::string& text, int num_vars,
                         const Field& field, int expected_degree = -1);

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  const Field& field() const { return field_; }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of x^e (zero when the monomial is absent).
  Scalar coefficient(const ExpVec& e) const;
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * x^e; drops the term if the accumulated coefficient is zero.
  void add_term(const ExpVec& e, const Scalar& c);

  /// Coefficient of x^e (zero if absent).
  Scalar coeff(const ExpVec& e) const;

  HomogPoly operator-() const;
  HomogPoly& operator+=(const HomogPoly& rhs);
  HomogPoly& operator-=(const HomogPoly& rhs);
  friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
  friend HomogPoly operator-(HomogPoly a, const HomogPoly& b) { return a -= b; }
  friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b);
  friend HomogPoly operator*(const Scalar& c, const HomogPoly& f);

  HomogPoly pow(int e) const;

  /// Value at a point given by coordinates. The point must be a nonzero
  /// vector of length num_vars over the same field.
  Scalar eval(std::span<const Scalar> point) const;
  Scalar eval(const std::vector<Scalar>& point) const;

  bool operator==(const HomogPoly& rhs) const;
  bool operator!=(const HomogPoly& rhs) const { return !(*this == rhs); }

  std::string str() const;

 private:
  int num_vars_;
  int degree_;
  Field field_;
  TermMap terms_;
};

}  // namespace gbasic

#endif
