#include "gbasic/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace gbasic {

int total_degree(const ExpVec& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

namespace {

void collect_monomials(int num_vars, int degree, int var, ExpVec& cur,
                       std::vector<ExpVec>& out) {
  if (var == num_vars - 1) {
    cur[var] = degree;
    out.push_back(cur);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[var] = e;
    collect_monomials(num_vars, degree - e, var + 1, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<ExpVec> monomials(int num_vars, int degree) {
  if (num_vars <= 0) throw dimension_mismatch("num_vars must be positive");
  if (degree < 0) throw validation_error("monomials: degree must be >= 0");
  std::vector<ExpVec> out;
  out.reserve(static_cast<std::size_t>(monomial_count(num_vars, degree)));
  ExpVec cur(num_vars, 0);
  collect_monomials(num_vars, degree, 0, cur, out);
  return out;
}

long monomial_count(int num_vars, int degree) {
  // C(degree + num_vars - 1, num_vars - 1)
  long n = degree + num_vars - 1;
  long k = num_vars - 1;
  long out = 1;
  for (long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

long poly_ring_dim(int num_vars, int degree) {
  return degree < 0 ? 0 : monomial_count(num_vars, degree);
}

HomogPoly::HomogPoly(int num_vars, int degree, const Field& field)
    : num_vars_(num_vars), degree_(degree), field_(field) {
  if (num_vars <= 0) throw dimension_mismatch("num_vars must be positive");
  if (degree < 0) throw validation_error("polynomial degree must be >= 0");
}

HomogPoly HomogPoly::zero(int num_vars, int degree, const Field& field) {
  return HomogPoly(num_vars, degree, field);
}

HomogPoly HomogPoly::constant(int num_vars, const Scalar& value) {
  HomogPoly f(num_vars, 0, value.field());
  f.add_term(ExpVec(num_vars, 0), value);
  return f;
}

HomogPoly HomogPoly::variable(int num_vars, int index, const Field& field) {
  if (index < 0 || index >= num_vars)
    throw dimension_mismatch("variable index out of range");
  HomogPoly f(num_vars, 1, field);
  ExpVec e(num_vars, 0);
  e[index] = 1;
  f.add_term(e, field.one());
  return f;
}

Scalar HomogPoly::coefficient(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? field_.zero() : it->second;
}

void HomogPoly::add_term(const ExpVec& e, const Scalar& c) {
  if (static_cast<int>(e.size()) != num_vars_)
    throw dimension_mismatch("exponent vector length mismatch");
  for (int x : e)
    if (x < 0) throw validation_error("negative exponent");
  if (total_degree(e) != degree_)
    throw validation_error("term degree does not match polynomial degree");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar HomogPoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? field_.zero() : it->second;
}

HomogPoly HomogPoly::operator-() const {
  HomogPoly out(num_vars_, degree_, field_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

HomogPoly& HomogPoly::operator+=(const HomogPoly& rhs) {
  if (num_vars_ != rhs.num_vars_)
    throw dimension_mismatch("adding polynomials in different rings");
  if (field_ != rhs.field_)
    throw field_mismatch("adding polynomials over different fields");
  if (!is_zero() && !rhs.is_zero() && degree_ != rhs.degree_)
    throw validation_error("adding nonzero polynomials of different degrees");
  if (is_zero() && !rhs.is_zero()) degree_ = rhs.degree_;
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

HomogPoly& HomogPoly::operator-=(const HomogPoly& rhs) { return *this += -rhs; }

HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
  if (a.num_vars_ != b.num_vars_)
    throw dimension_mismatch("multiplying polynomials in different rings");
  if (a.field_ != b.field_)
    throw field_mismatch("multiplying polynomials over different fields");
  HomogPoly out(a.num_vars_, a.degree_ + b.degree_, a.field_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      ExpVec e(a.num_vars_);
      for (int i = 0; i < a.num_vars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

HomogPoly operator*(const Scalar& c, const HomogPoly& f) {
  HomogPoly out(f.num_vars_, f.degree_, f.field_);
  if (c.is_zero()) return out;
  for (const auto& [e, fc] : f.terms_) out.add_term(e, c * fc);
  return out;
}

HomogPoly HomogPoly::pow(int e) const {
  if (e < 0) throw validation_error("negative polynomial power");
  HomogPoly acc = HomogPoly::constant(num_vars_, field_.one());
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

Scalar HomogPoly::eval(std::span<const Scalar> point) const {
  if (static_cast<int>(point.size()) != num_vars_)
    throw dimension_mismatch("point has wrong number of coordinates");
  bool all_zero = true;
  for (const Scalar& c : point) {
    if (c.field() != field_)
      throw field_mismatch("point coordinates over the wrong field");
    if (!c.is_zero()) all_zero = false;
  }
  if (all_zero) throw validation_error("cannot evaluate at the zero vector");
  Scalar out = field_.zero();
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (int i = 0; i < num_vars_; ++i)
      if (e[i] != 0) term *= point[i].pow(e[i]);
    out += term;
  }
  return out;
}

Scalar HomogPoly::eval(const std::vector<Scalar>& point) const {
  return eval(std::span<const Scalar>(point.data(), point.size()));
}

bool HomogPoly::operator==(const HomogPoly& rhs) const {
  if (num_vars_ != rhs.num_vars_ || field_ != rhs.field_) return false;
  if (terms_.size() != rhs.terms_.size()) return false;
  if (!is_zero() && degree_ != rhs.degree_) return false;
  return std::equal(terms_.begin(), terms_.end(), rhs.terms_.begin());
}

std::string HomogPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    for (int i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag;
    } else if (mag == "1") {
      out += mono;
    } else {
      out += mag + "*" + mono;
    }
  }
  return out;
}

namespace {

struct PolyParser {
  const std::string& text;
  std::size_t i = 0;
  int num_vars;
  Field field;

  void skip_ws() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  }

  bool peek_digit() {
    return i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]));
  }

  long read_uint(const char* what) {
    if (!peek_digit())
      throw parse_error(std::string("expected ") + what + " at offset " +
                        std::to_string(i) + " in '" + text + "'");
    std::string digits;
    while (peek_digit()) digits += text[i++];
    return std::stol(digits);
  }

  std::string read_uint_string() {
    std::string digits;
    while (peek_digit()) digits += text[i++];
    return digits;
  }

  // rational literal without sign: "12" or "12/5"
  Scalar read_number() {
    std::string num = read_uint_string();
    std::string den = "1";
    skip_ws();
    if (i < text.size() && text[i] == '/') {
      ++i;
      skip_ws();
      den = read_uint_string();
      if (den.empty())
        throw parse_error("expected denominator at offset " +
                          std::to_string(i) + " in '" + text + "'");
    }
    return field.parse(num + "/" + den);
  }

  // factor := number | x<k>[^<e>]
  void read_factor(Scalar& coeff, ExpVec& exps) {
    skip_ws();
    if (peek_digit()) {
      coeff *= read_number();
      return;
    }
    if (i < text.size() && text[i] == 'x') {
      ++i;
      long idx = read_uint("variable index");
      if (idx >= num_vars)
        throw parse_error("variable x" + std::to_string(idx) +
                          " out of range (num_vars = " +
                          std::to_string(num_vars) + ")");
      long e = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        e = read_uint("exponent");
      }
      exps[static_cast<std::size_t>(idx)] += static_cast<int>(e);
      return;
    }
    throw parse_error("unexpected character at offset " + std::to_string(i) +
                      " in '" + text + "'");
  }

  // term := factor ('*' factor)*
  void read_term(bool negative, std::vector<std::pair<ExpVec, Scalar>>& out) {
    Scalar coeff = field.one();
    ExpVec exps(static_cast<std::size_t>(num_vars), 0);
    read_factor(coeff, exps);
    skip_ws();
    while (i < text.size() && text[i] == '*') {
      ++i;
      read_factor(coeff, exps);
      skip_ws();
    }
    if (negative) coeff = -coeff;
    out.emplace_back(std::move(exps), std::move(coeff));
  }
};

}  // namespace

HomogPoly HomogPoly::parse(const std::string& text, int num_vars,
                           const Field& field, int expected_degree) {
  PolyParser p{text, 0, num_vars, field};
  std::vector<std::pair<ExpVec, Scalar>> raw_terms;
  p.skip_ws();
  if (p.i < text.size()) {
    bool negative = false;
    if (text[p.i] == '+' || text[p.i] == '-') negative = text[p.i++] == '-';
    p.read_term(negative, raw_terms);
    p.skip_ws();
    while (p.i < text.size()) {
      char op = text[p.i];
      if (op != '+' && op != '-')
        throw parse_error("expected '+' or '-' at offset " +
                          std::to_string(p.i) + " in '" + text + "'");
      ++p.i;
      p.read_term(op == '-', raw_terms);
      p.skip_ws();
    }
  }

  int degree = -1;
  for (const auto& [e, c] : raw_terms) {
    if (c.is_zero()) continue;
    int d = total_degree(e);
    if (degree < 0)
      degree = d;
    else if (d != degree)
      throw parse_error("'" + text + "' is not homogeneous (degrees " +
                        std::to_string(degree) + " and " + std::to_string(d) +
                        ")");
  }

  // Nonzero terms may still cancel; detect that via the accumulated map.
  HomogPoly f(num_vars, degree < 0 ? std::max(expected_degree, 0) : degree,
              field);
  for (const auto& [e, c] : raw_terms)
    if (!c.is_zero()) f.add_term(e, c);
  if (f.is_zero() && expected_degree >= 0)
    f = HomogPoly::zero(num_vars, expected_degree, field);
  if (expected_degree >= 0 && !f.is_zero() && f.degree() != expected_degree)
    throw validation_error("'" + text + "' has degree " +
                           std::to_string(f.degree()) + ", expected " +
                           std::to_string(expected_degree));
  return f;
}

}  // namespace gbasic
