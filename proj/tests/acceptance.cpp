// Acceptance gate: nine checks printed one per line; exit status is the
// number of failures.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gbasic/parallel.hpp"
#include "support.hpp"

using namespace gbasic;

namespace {

int worker_threads() { return resolve_threads(0); }

struct Outcome {
  bool passed = true;
  std::string detail;
};

void fail(Outcome& out, const std::string& why) {
  out.passed = false;
  if (!out.detail.empty()) out.detail += "; ";
  out.detail += why;
}

long dim_s(int d) { return d < 0 ? 0 : monomial_count(3, d); }

// 1. cb_index of grid complete intersections equals a+b-3
Outcome check_ci_formula() {
  Outcome out;
  Field q = Field::rationals();
  const std::vector<std::pair<int, int>> cases{{1, 2}, {2, 2}, {2, 3}, {3, 3}};
  for (auto [a, b] : cases) {
    int got = cb_index(grid_points(a, b, q), worker_threads());
    if (got != a + b - 3) {
      std::ostringstream msg;
      msg << "grid(" << a << "," << b << ") gave " << got << ", expected "
          << a + b - 3;
      fail(out, msg.str());
    }
  }
  return out;
}

// 2. classical 3x3 statement plus the nine explicit rank equalities
Outcome check_classical_cb() {
  Outcome out;
  Field q = Field::rationals();
  PointSet z = grid_points(3, 3, q);
  if (!satisfies_cb(z, 3, worker_threads())) fail(out, "CB_3 failed");
  int full = rank(evaluation_matrix(z, 3).matrix);
  for (int i = 0; i < z.size(); ++i) {
    int sub = rank(evaluation_matrix(z.without(i), 3).matrix);
    if (sub != full) {
      std::ostringstream msg;
      msg << "cubic rank drops when removing point " << i << " (" << sub
          << " vs " << full << ")";
      fail(out, msg.str());
    }
  }
  return out;
}

std::vector<std::pair<int, unsigned long>> sampled_sets() {
  std::vector<std::pair<int, unsigned long>> out;
  for (unsigned long seed = 1; seed <= 200; ++seed)
    out.emplace_back(2 + static_cast<int>(seed % 11), seed);
  return out;
}

// 3. both sides of the syzygy-degree bound, 200 seeded sets
Outcome check_betti_bounds() {
  Outcome out;
  Field q = Field::rationals();
  int threads = worker_threads();
  int holds = 0, total = 0;
  for (auto [n, seed] : sampled_sets()) {
    PointSet z = random_points(n, seed, q);
    CBReport r = verify_bounds(z, threads);
    ++total;
    if (r.bound_holds) {
      ++holds;
    } else {
      std::ostringstream msg;
      msg << "seed " << seed << " (|Z|=" << n << "): CB " << r.cb_index
          << " outside [" << r.a_min - 3 << ", " << r.a_max - 3 << "]";
      fail(out, msg.str());
    }
  }
  if (out.passed) {
    std::ostringstream msg;
    msg << holds << "/" << total << " bounds hold";
    out.detail = msg.str();
  }
  return out;
}

// 4. resolution shape and the Hilbert identity on the same sets
Outcome check_hilbert_burch() {
  Outcome out;
  Field q = Field::rationals();
  int threads = worker_threads();
  for (auto [n, seed] : sampled_sets()) {
    PointSet z = random_points(n, seed, q);
    BettiTable t = betti_table(z, threads);
    long gens = 0, syz = 0;
    for (const auto& [ij, beta] : t.entries) {
      if (ij.first == 3 && beta != 0) fail(out, "third syzygy appeared");
      if (ij.first == 1) gens += beta;
      if (ij.first == 2) syz += beta;
    }
    if (gens != syz + 1) {
      std::ostringstream msg;
      msg << "seed " << seed << ": " << gens << " generators vs " << syz
          << " syzygies";
      fail(out, msg.str());
    }
    for (int d = 0; d <= t.degree_cap; ++d) {
      long euler = 0;
      for (const auto& [ij, beta] : t.entries)
        euler += (ij.first % 2 == 0 ? 1 : -1) * beta * dim_s(d - ij.second);
      if (euler != hilbert_function(z, d)) {
        std::ostringstream msg;
        msg << "seed " << seed << ": Hilbert identity fails at degree " << d;
        fail(out, msg.str());
        break;
      }
    }
    if (!out.passed) break;
  }
  return out;
}

// 5. shrink_once post-condition across 1000 random instances
Outcome check_main_lemma() {
  Outcome out;
  testsupport::Rng rng(20250817);
  std::vector<Field> fields{Field::rationals(), Field::prime_field(11),
                            Field::prime_field(13)};
  int done = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Field& f = fields[trial % 5 == 4 ? 1 + trial % 2 : 0];
    int r = static_cast<int>(testsupport::draw(rng, 1, 4));
    int s = static_cast<int>(testsupport::draw(rng, 0, r));
    int u = static_cast<int>(testsupport::draw(rng, 2, 5));
    int v = static_cast<int>(testsupport::draw(rng, 1, 4));
    ModulePresentation m = testsupport::random_presentation(rng, f, 3, r, s);
    std::vector<Section> sections = testsupport::random_sections(rng, m, u);
    auto points = testsupport::random_point_set(rng, f, 3, v);
    std::vector<int> weights;
    for (const auto& p : points)
      weights.push_back(section_images_in_fiber(m, sections, p).width);

    ShrinkResult res = shrink_once(m, sections, points, weights);
    for (std::size_t i = 0; i < points.size(); ++i) {
      int target = std::min(u - 1, weights[i]);
      if (!is_w_basic(m, res.sections, points[i], target)) {
        std::ostringstream msg;
        msg << "trial " << trial << " point " << i << " lost width " << target;
        fail(out, msg.str());
        return out;
      }
    }
    ++done;
  }
  out.detail = std::to_string(done) + "/1000 instances pass";
  return out;
}

// 6. exhaustive lambda enumeration over F5 and F7 vs unique_bad_lambda
Outcome check_lemma_linalg() {
  Outcome out;
  int families = 0;
  for (unsigned long p : {5ul, 7ul}) {
    Field f = Field::prime_field(p);
    testsupport::Rng rng(900 + p);
    for (int trial = 0; trial < 250; ++trial) {
      int dim = static_cast<int>(testsupport::draw(rng, 1, 4));
      int count = static_cast<int>(testsupport::draw(rng, 1, 4));
      std::vector<Scalar> v1;
      for (int k = 0; k < dim; ++k)
        v1.push_back(testsupport::random_scalar(rng, f));
      std::vector<std::vector<Scalar>> others;
      for (int c = 0; c < count; ++c) {
        std::vector<Scalar> v;
        for (int k = 0; k < dim; ++k)
          v.push_back(testsupport::random_scalar(rng, f));
        others.push_back(std::move(v));
      }
      int j = static_cast<int>(testsupport::draw(rng, 2, count + 1));

      int base = rank(Matrix::from_columns(others, f));
      std::vector<Scalar> bad;
      for (unsigned long raw = 0; raw < p; ++raw) {
        Scalar lambda = f.integer(static_cast<long>(raw));
        auto modified = others;
        for (int k = 0; k < dim; ++k)
          modified[j - 2][k] = others[j - 2][k] + lambda * v1[k];
        if (rank(Matrix::from_columns(modified, f)) < base)
          bad.push_back(lambda);
      }

      if (bad.size() > 1) {
        fail(out, "two span-dropping lambdas in one family");
        return out;
      }
      auto reported = unique_bad_lambda(v1, others, j);
      bool agree = bad.empty() ? !reported.has_value()
                               : (reported.has_value() && *reported == bad[0]);
      if (!agree) {
        std::ostringstream msg;
        msg << "F" << p << " trial " << trial
            << ": enumeration and unique_bad_lambda disagree";
        fail(out, msg.str());
        return out;
      }
      ++families;
    }
  }
  out.detail = std::to_string(families) + " families agree";
  return out;
}

// 7. serre_section drops mu by exactly one at every point
Outcome check_serre_drop() {
  Outcome out;
  Field q = Field::rationals();
  testsupport::Rng rng(777);
  int done = 0;
  for (int trial = 0; trial < 100; ++trial) {
    int r = static_cast<int>(testsupport::draw(rng, 2, 4));
    int s = static_cast<int>(testsupport::draw(rng, 0, r - 1));
    ModulePresentation m = testsupport::random_presentation(rng, q, 3, r, s);
    std::vector<Section> generators;
    for (int i = 0; i < r; ++i)
      generators.push_back(Section::standard_generator(m, i));
    int v = static_cast<int>(testsupport::draw(rng, 1, 4));
    auto points = testsupport::random_point_set(rng, q, 3, v);

    Section sec = serre_section(m, generators, points);

    std::vector<int> quotient_cols = m.col_twists();
    quotient_cols.push_back(sec.degree());
    std::vector<std::vector<HomogPoly>> entries;
    for (int i = 0; i < r; ++i) {
      std::vector<HomogPoly> row;
      for (int c = 0; c < m.cols(); ++c) row.push_back(m.entry(i, c));
      row.push_back(sec.coords()[i]);
      entries.push_back(std::move(row));
    }
    ModulePresentation quotient(3, m.row_twists(), std::move(quotient_cols),
                                std::move(entries), q);

    for (const auto& p : points) {
      if (mu(quotient, p) != mu(m, p) - 1) {
        std::ostringstream msg;
        msg << "trial " << trial << ": mu did not drop by 1 at " << p.str();
        fail(out, msg.str());
        return out;
      }
    }
    ++done;
  }
  out.detail = std::to_string(done) + "/100 instances drop mu by 1";
  return out;
}

// 8. Fitting vanishing vs the fiber-rank criterion
Outcome check_fitting() {
  Outcome out;
  Field q = Field::rationals();
  testsupport::Rng rng(888);
  int done = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int r = static_cast<int>(testsupport::draw(rng, 1, 4));
    int s = static_cast<int>(testsupport::draw(rng, 0, 4));
    ModulePresentation m = testsupport::random_presentation(rng, q, 3, r, s);
    ProjPoint p = testsupport::random_point(rng, q, 3);
    int i = static_cast<int>(testsupport::draw(rng, 0, r + 1));
    bool by_minors = fitting_vanishes_at(m, i, p);
    bool by_rank = mu(m, p) > i;
    if (by_minors != by_rank) {
      std::ostringstream msg;
      msg << "trial " << trial << ": minors say " << by_minors
          << ", fiber rank says " << by_rank;
      fail(out, msg.str());
      return out;
    }
    ++done;
  }
  out.detail = std::to_string(done) + "/500 agree";
  return out;
}

// 9. mu and widths do not depend on the dehomogenizer
Outcome check_l_independence() {
  Outcome out;
  Field q = Field::rationals();
  testsupport::Rng rng(999);
  int done = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int r = static_cast<int>(testsupport::draw(rng, 1, 4));
    int s = static_cast<int>(testsupport::draw(rng, 0, 3));
    ModulePresentation m = testsupport::random_presentation(rng, q, 3, r, s);
    ProjPoint p = testsupport::random_point(rng, q, 3);
    std::vector<Section> sections = testsupport::random_sections(rng, m, 2);

    HomogPoly l1 = default_dehomogenizer(p);
    HomogPoly l2 = l1;
    while (l2 == l1 || l2.eval(p.coords()).is_zero())
      l2 = testsupport::random_nonzero_poly(rng, 3, 1, q);

    if (mu(m, p, l1) != mu(m, p, l2)) {
      fail(out, "mu differs between dehomogenizers at trial " +
                    std::to_string(trial));
      return out;
    }
    if (section_images_in_fiber(m, sections, p, l1).width !=
        section_images_in_fiber(m, sections, p, l2).width) {
      fail(out, "width differs between dehomogenizers at trial " +
                    std::to_string(trial));
      return out;
    }
    ++done;
  }
  out.detail = std::to_string(done) + "/200 agree";
  return out;
}

struct Criterion {
  const char* name;
  Outcome (*check)();
  double time_limit_seconds;  // 0 = no limit
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"complete-intersection CB formula", check_ci_formula, 5.0},
      {"classical 3x3 Cayley-Bacharach", check_classical_cb, 2.0},
      {"syzygy-degree bounds on 200 random sets", check_betti_bounds, 300.0},
      {"Hilbert-Burch shape and Euler identity", check_hilbert_burch, 0.0},
      {"shrinking post-condition, 1000 instances", check_main_lemma, 0.0},
      {"bad-lambda uniqueness vs exhaustive enumeration", check_lemma_linalg,
       0.0},
      {"mu drop by one from a generating family", check_serre_drop, 0.0},
      {"Fitting vanishing vs fiber rank", check_fitting, 0.0},
      {"dehomogenizer independence", check_l_independence, 0.0},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const Criterion& c = criteria[k];
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.check();
    } catch (const std::exception& e) {
      fail(out, std::string("exception: ") + e.what());
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.time_limit_seconds > 0 && seconds > c.time_limit_seconds) {
      std::ostringstream msg;
      msg << "over time limit (" << c.time_limit_seconds << " s)";
      fail(out, msg.str());
    }

    std::ostringstream line;
    line << (out.passed ? "[PASS] " : "[FAIL] ") << k + 1 << ". " << c.name;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " (" << seconds << " s)";
    if (!out.detail.empty()) line << " - " << out.detail;
    std::cout << line.str() << "\n";
    if (!out.passed) ++failures;
  }
  return failures;
}
