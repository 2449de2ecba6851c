#ifndef GBASIC_TESTS_SUPPORT_HPP
#define GBASIC_TESTS_SUPPORT_HPP

#include <random>
#include <set>
#include <string>
#include <vector>

#include "gbasic/generate.hpp"
#include "gbasic/io.hpp"
#include "gbasic/shrink.hpp"

namespace testsupport {

using namespace gbasic;

inline Field Q() { return Field::rationals(); }

inline ProjPoint pt(const Field& f, const std::vector<std::string>& coords) {
  std::vector<Scalar> v;
  for (const auto& c : coords) v.push_back(f.parse(c));
  return ProjPoint(v);
}

inline HomogPoly pp(const std::string& text, int num_vars, const Field& f,
                    int degree) {
  return HomogPoly::parse(text, num_vars, f, degree);
}

using Rng = std::mt19937_64;

inline long draw(Rng& rng, long lo, long hi) {
  return lo +
         static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline Scalar random_scalar(Rng& rng, const Field& f) {
  if (f.characteristic() == 0) {
    long num = draw(rng, -6, 6);
    long den = draw(rng, 1, 3);
    return f.parse(std::to_string(num) + "/" + std::to_string(den));
  }
  return f.integer(draw(rng, 0, static_cast<long>(f.characteristic()) - 1));
}

inline Scalar random_nonzero_scalar(Rng& rng, const Field& f) {
  while (true) {
    Scalar c = random_scalar(rng, f);
    if (!c.is_zero()) return c;
  }
}

/// Random homogeneous polynomial; roughly half the monomials appear.
inline HomogPoly random_poly(Rng& rng, int num_vars, int degree,
                             const Field& f) {
  HomogPoly out = HomogPoly::zero(num_vars, degree, f);
  for (const auto& e : monomials(num_vars, degree)) {
    if (draw(rng, 0, 1) == 0) continue;
    Scalar c = random_scalar(rng, f);
    if (!c.is_zero()) out.add_term(e, c);
  }
  return out;
}

inline HomogPoly random_nonzero_poly(Rng& rng, int num_vars, int degree,
                                     const Field& f) {
  while (true) {
    HomogPoly g = random_poly(rng, num_vars, degree, f);
    if (!g.is_zero()) return g;
  }
}

inline ProjPoint random_point(Rng& rng, const Field& f, int num_vars) {
  while (true) {
    std::vector<Scalar> v;
    bool nonzero = false;
    for (int k = 0; k < num_vars; ++k) {
      Scalar c = random_scalar(rng, f);
      nonzero = nonzero || !c.is_zero();
      v.push_back(c);
    }
    if (nonzero) return ProjPoint(std::move(v));
  }
}

inline std::vector<ProjPoint> random_point_set(Rng& rng, const Field& f,
                                               int num_vars, int count) {
  std::vector<ProjPoint> points;
  std::set<std::string> seen;
  int guard = 0;
  while (static_cast<int>(points.size()) < count) {
    if (++guard > 100000)
      throw error("random_point_set could not reach the requested count");
    ProjPoint p = random_point(rng, f, num_vars);
    if (seen.insert(p.str()).second) points.push_back(p);
  }
  return points;
}

/// r x s presentation with ascending row twists and column twists high
/// enough that every entry may be nonzero.
inline ModulePresentation random_presentation(Rng& rng, const Field& f,
                                              int num_vars, int r, int s) {
  std::vector<int> a;
  int t = static_cast<int>(draw(rng, 0, 1));
  for (int i = 0; i < r; ++i) {
    a.push_back(t);
    t += static_cast<int>(draw(rng, 0, 1));
  }
  int a_max = a.empty() ? 0 : a.back();
  std::vector<int> b;
  for (int j = 0; j < s; ++j)
    b.push_back(a_max + static_cast<int>(draw(rng, 0, 2)));
  std::vector<std::vector<HomogPoly>> entries;
  for (int i = 0; i < r; ++i) {
    std::vector<HomogPoly> row;
    for (int j = 0; j < s; ++j)
      row.push_back(random_poly(rng, num_vars, b[j] - a[i], f));
    entries.push_back(std::move(row));
  }
  return ModulePresentation(num_vars, std::move(a), std::move(b),
                            std::move(entries), f);
}

/// u sections of weakly ascending degrees >= the top row twist.
inline std::vector<Section> random_sections(Rng& rng,
                                            const ModulePresentation& m,
                                            int u) {
  int d = m.row_twists().back() + static_cast<int>(draw(rng, 0, 1));
  std::vector<Section> out;
  for (int k = 0; k < u; ++k) {
    std::vector<HomogPoly> coords;
    for (int i = 0; i < m.rows(); ++i)
      coords.push_back(
          random_poly(rng, m.num_vars(), d - m.row_twists()[i], m.field()));
    out.emplace_back(d, std::move(coords));
    d += static_cast<int>(draw(rng, 0, 1));
  }
  return out;
}

}  // namespace testsupport

#endif
