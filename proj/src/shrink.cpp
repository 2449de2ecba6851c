#include "gbasic/shrink.hpp"

#include <algorithm>
#include <vector>

namespace gbasic {

UnipotentTransform::UnipotentTransform(int num_vars, std::vector<int> degrees,
                                       const Field& field)
    : num_vars_(num_vars), degrees_(std::move(degrees)), field_(field) {
  if (!std::is_sorted(degrees_.begin(), degrees_.end()))
    throw validation_error("transform degrees must be ascending");
  int u = size();
  for (int i = 0; i < u; ++i) {
    std::vector<HomogPoly> row;
    for (int j = 0; j < u; ++j) {
      if (i == j)
        row.push_back(HomogPoly::constant(num_vars_, field_.one()));
      else
        row.push_back(HomogPoly::zero(
            num_vars_, std::max(degrees_[i] - degrees_[j], 0), field_));
    }
    entries_.push_back(std::move(row));
  }
}

const HomogPoly& UnipotentTransform::entry(int i, int j) const {
  if (i < 0 || i >= size() || j < 0 || j >= size())
    throw dimension_mismatch("transform index out of range");
  return entries_[i][j];
}

void UnipotentTransform::add_row_multiple(int target, int source,
                                          const HomogPoly& r) {
  if (target <= source)
    throw validation_error("transform updates must stay lower-triangular");
  for (int j = 0; j <= source; ++j) {
    HomogPoly prod = r * entries_[source][j];
    if (prod.is_zero()) continue;
    entries_[target][j] += prod;
  }
}

std::vector<Section> UnipotentTransform::apply(
    const std::vector<Section>& sections) const {
  if (static_cast<int>(sections.size()) != size())
    throw dimension_mismatch("transform size does not match section count");
  std::vector<Section> out;
  for (int i = 0; i < size(); ++i) {
    Section acc = sections[i];
    for (int j = 0; j < i; ++j)
      if (!entries_[i][j].is_zero())
        acc = acc.plus_scaled(entries_[i][j], sections[j]);
    out.push_back(std::move(acc));
  }
  return out;
}

std::optional<Scalar> unique_bad_lambda(
    const std::vector<Scalar>& v1,
    const std::vector<std::vector<Scalar>>& others, int j) {
  int u = static_cast<int>(others.size()) + 1;
  if (j < 2 || j > u) throw dimension_mismatch("index j out of range");
  std::size_t dim = v1.size();
  for (const auto& v : others)
    if (v.size() != dim) throw dimension_mismatch("vector length mismatch");
  const Field& field = v1.empty() ? Field::rationals() : v1[0].field();

  std::vector<std::vector<Scalar>> rest;  // others without v_j
  for (int k = 0; k < u - 1; ++k)
    if (k != j - 2) rest.push_back(others[k]);
  Matrix w = rest.empty() ? Matrix(static_cast<int>(dim), 0, field)
                          : Matrix::from_columns(rest, field);
  const std::vector<Scalar>& vj = others[j - 2];
  if (in_column_span(w, vj)) return std::nullopt;

  // vj = w*x + c*v1 forced; lambda = -c. No solution means v1 is not
  // proportional to vj modulo the span of the rest.
  auto sol = solve(w.with_column(v1), vj);
  if (!sol) return std::nullopt;
  Scalar c = sol->back();
  if (c.is_zero()) return std::nullopt;  // vj in span(rest): handled above
  return -c;
}

HomogPoly find_nonvanishing_linear_form(const std::vector<ProjPoint>& points) {
  if (points.empty())
    throw validation_error("need at least one point to avoid");
  int n = points[0].num_vars();
  const Field& field = points[0].field();
  for (const ProjPoint& p : points) {
    if (p.num_vars() != n) throw dimension_mismatch("points of mixed dimension");
    if (p.field() != field) throw field_mismatch("points over mixed fields");
  }
  long limit = field.modular()
                   ? static_cast<long>(field.characteristic())
                   : static_cast<long>(points.size()) * n + 1;
  for (long t = 0; t < limit; ++t) {
    Scalar tv = field.integer(t);
    HomogPoly L(n, 1, field);
    Scalar c = field.one();
    for (int k = 0; k < n; ++k) {
      ExpVec e(n, 0);
      e[k] = 1;
      L.add_term(e, c);
      c *= tv;
    }
    bool ok = true;
    for (const ProjPoint& p : points)
      if (L.eval(p.coords()).is_zero()) {
        ok = false;
        break;
      }
    if (ok) return L;
  }
  if (field.modular())
    throw field_too_small("no linear form in the scan family avoids all " +
                          std::to_string(points.size()) + " points over " +
                          field.name());
  throw error("linear form scan exhausted its bound; this cannot happen");
}

namespace {

std::vector<std::vector<Scalar>> image_columns(const SectionImages& im) {
  std::vector<std::vector<Scalar>> cols;
  for (int j = 0; j < im.columns.cols(); ++j)
    cols.push_back(im.columns.column(j));
  return cols;
}

}  // namespace

ShrinkResult shrink_once(const ModulePresentation& m,
                         const std::vector<Section>& sections,
                         const std::vector<ProjPoint>& points,
                         const std::vector<int>& weights) {
  int u = static_cast<int>(sections.size());
  int v = static_cast<int>(points.size());
  if (u < 1) throw validation_error("need at least one section");
  if (static_cast<int>(weights.size()) != v)
    throw dimension_mismatch("one weight per point required");
  for (const Section& s : sections) validate_section(m, s);
  for (int j = 1; j < u; ++j)
    if (sections[j].degree() < sections[j - 1].degree())
      throw validation_error("section degrees must be ascending");
  for (int w : weights)
    if (w < 0) throw validation_error("weights must be >= 0");
  if (m.field().modular() && static_cast<long>(m.field().characteristic()) <= v)
    throw field_too_small("shrinking over " + m.field().name() + " needs p > " +
                          std::to_string(v) + " points");

  HomogPoly L = points.empty()
                    ? HomogPoly::variable(m.num_vars(), 0, m.field())
                    : find_nonvanishing_linear_form(points);

  // Hypothesis: the full family is w_i-basic at every point.
  for (int i = 0; i < v; ++i) {
    int width = section_images_in_fiber(m, sections, points[i], L).width;
    if (width < weights[i])
      throw hypothesis_error("sections are not " + std::to_string(weights[i]) +
                                 "-basic at point " + std::to_string(i) + " " +
                                 points[i].str() + " (width " +
                                 std::to_string(width) + ")",
                             i, width, weights[i]);
  }

  std::vector<Section> cur(sections.begin() + 1, sections.end());
  std::vector<Scalar> lambdas(u > 0 ? u - 1 : 0, m.field().zero());
  int a1 = sections.empty() ? 0 : sections[0].degree();

  for (int i = 0; i < v; ++i) {
    if (weights[i] >= u) continue;  // any modification preserves u-1 basicness
    int target = std::min(u - 1, weights[i]);
    SectionImages here = section_images_in_fiber(m, cur, points[i], L);
    if (here.width >= target) continue;

    // Some image lies in the span of the later ones; take the first.
    std::vector<std::vector<Scalar>> cols = image_columns(here);
    int l = -1;
    for (int cand = 0; cand < u - 1; ++cand) {
      std::vector<std::vector<Scalar>> later(cols.begin() + cand + 1,
                                             cols.end());
      Matrix span = later.empty() ? Matrix(m.rows(), 0, m.field())
                                  : Matrix::from_columns(later, m.field());
      if (in_column_span(span, cols[cand])) {
        l = cand;  // 0-based position in cur; section index l+2
        break;
      }
    }
    if (l < 0)
      throw error("no absorbable section found; this cannot happen");

    // lambda must dodge the unique bad value at each earlier point.
    std::vector<Scalar> bad;
    std::vector<Section> s1_only{sections[0]};
    for (int k = 0; k < i; ++k) {
      SectionImages prev = section_images_in_fiber(m, cur, points[k], L);
      std::vector<Scalar> v1 =
          section_images_in_fiber(m, s1_only, points[k], L).columns.column(0);
      auto bad_l = unique_bad_lambda(v1, image_columns(prev), l + 2);
      if (bad_l && std::find(bad.begin(), bad.end(), *bad_l) == bad.end())
        bad.push_back(*bad_l);
    }

    Scalar lambda = m.field().zero();
    long cap = m.field().modular()
                   ? static_cast<long>(m.field().characteristic())
                   : static_cast<long>(bad.size()) + 2;
    for (long c = 1; c < cap; ++c) {
      Scalar cand = m.field().integer(c);
      if (std::find(bad.begin(), bad.end(), cand) == bad.end()) {
        lambda = cand;
        break;
      }
    }
    if (lambda.is_zero())
      throw field_too_small("all nonzero scalars are bad for point " +
                            std::to_string(i));

    int al = cur[l].degree();
    HomogPoly r = lambda * L.pow(al - a1);
    cur[l] = cur[l].plus_scaled(r, sections[0]);
    lambdas[l] += lambda;
  }

  std::vector<HomogPoly> realized;
  for (int j = 0; j < u - 1; ++j)
    realized.push_back(lambdas[j] * L.pow(sections[j + 1].degree() - a1));
  ShrinkStep step{1, lambdas, L, std::move(realized)};

  // The lemma's guarantee, verified.
  for (int i = 0; i < v; ++i) {
    int target = std::min(u - 1, weights[i]);
    if (!is_w_basic(m, cur, points[i], target, L))
      throw error("shrinking postcondition failed at point " +
                  std::to_string(i) + "; this cannot happen");
  }

  return ShrinkResult{std::move(step), std::move(cur)};
}

BasicElementsResult basic_elements(const ModulePresentation& m,
                                   const std::vector<Section>& sections,
                                   const std::vector<ProjPoint>& points,
                                   const std::vector<int>& weights, int t) {
  int u = static_cast<int>(sections.size());
  if (t < 1 || t > u)
    throw validation_error("need 1 <= t <= number of sections");

  std::vector<int> degs;
  for (const Section& s : sections) degs.push_back(s.degree());
  UnipotentTransform transform(m.num_vars(), degs, m.field());

  std::vector<Section> cur = sections;
  std::vector<int> w = weights;
  for (int round = 0; round < u - t; ++round) {
    ShrinkResult res = shrink_once(m, cur, points, w);
    int u_cur = static_cast<int>(cur.size());
    // Row `round` belongs to the section dropped this round; survivors
    // accumulate its row scaled by r_j.
    for (int j = 0; j < u_cur - 1; ++j)
      if (!res.step.realized[j].is_zero())
        transform.add_row_multiple(round + 1 + j, round, res.step.realized[j]);
    cur = std::move(res.sections);
    for (int& wi : w) wi = std::min(u_cur - 1, wi);
  }
  return BasicElementsResult{std::move(transform), std::move(cur)};
}

Section serre_section(const ModulePresentation& m,
                      const std::vector<Section>& sections,
                      const std::vector<ProjPoint>& points) {
  if (sections.empty()) throw validation_error("need at least one section");
  HomogPoly L = points.empty()
                    ? HomogPoly::variable(m.num_vars(), 0, m.field())
                    : find_nonvanishing_linear_form(points);
  std::vector<int> weights;
  for (std::size_t i = 0; i < points.size(); ++i) {
    int mu_i = mu(m, points[i], L);
    if (mu_i == 0)
      throw validation_error("fiber at " + points[i].str() +
                             " needs no generators; nothing to drop");
    int width = section_images_in_fiber(m, sections, points[i], L).width;
    if (width < mu_i)
      throw hypothesis_error(
          "sections do not generate the fiber at point " + std::to_string(i) +
              " " + points[i].str() + " (width " + std::to_string(width) +
              " < mu " + std::to_string(mu_i) + ")",
          static_cast<int>(i), width, mu_i);
    weights.push_back(mu_i);
  }
  BasicElementsResult res = basic_elements(m, sections, points, weights, 1);
  return res.sections[0];
}

}  // namespace gbasic
