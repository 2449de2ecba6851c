#ifndef GBASIC_SHRINK_HPP
#define GBASIC_SHRINK_HPP

#include <optional>

#include "gbasic/module.hpp"

namespace gbasic {

/// Record of one shrinking round: the first (lowest-degree) section is
/// dropped and each survivor s_j is replaced by s_j + r_j * s_1 with
/// r_j = lambda_j * L^(a_j - a_1).
struct ShrinkStep {
  int dropped_index = 1;
  std::vector<Scalar> lambdas;       // lambda_j for j = 2..u, in order
  HomogPoly dehomogenizer;           // the nonvanishing linear form L
  std::vector<HomogPoly> realized;   // r_j = lambda_j * L^(a_j - a_1)
};

/// Lower-unitriangular change of sections: entry (i,j) for i > j is
/// homogeneous of degree a_i - a_j, diagonal entries are 1. Applying it
/// to sections (s_1..s_u) yields s_i' = s_i + sum_{j<i} entry(i,j)*s_j.
class UnipotentTransform {
 public:
  /// Identity transform for sections of the given ascending degrees.
  UnipotentTransform(int num_vars, std::vector<int> degrees,
                     const Field& field);

  int size() const { return static_cast<int>(degrees_.size()); }
  const std::vector<int>& degrees() const { return degrees_; }
  const HomogPoly& entry(int i, int j) const;

  /// row_target += r * row_source (target > source, deg r = a_t - a_s).
  void add_row_multiple(int target, int source, const HomogPoly& r);

  /// Transforms a full input family; element i of the result is
  /// sum_j entry(i,j) * sections[j].
  std::vector<Section> apply(const std::vector<Section>& sections) const;

 private:
  int num_vars_;
  std::vector<int> degrees_;
  Field field_;
  std::vector<std::vector<HomogPoly>> entries_;
};

/// The unique lambda for which replacing v_j by v_j + lambda*v1 drops
/// dim span{v_2..v_u}, if any. `others` lists v_2..v_u; j is the 1-based
/// section index, 2 <= j <= u, so the target vector is others[j-2].
std::optional<Scalar> unique_bad_lambda(
    const std::vector<Scalar>& v1,
    const std::vector<std::vector<Scalar>>& others, int j);

/// L = x0 + t*x1 + t^2*x2 + ... for the smallest t >= 0 with L(p) != 0
/// for every listed point. Over F_p the scan is capped at t = p-1.
HomogPoly find_nonvanishing_linear_form(const std::vector<ProjPoint>& points);

struct ShrinkResult {
  ShrinkStep step;
  std::vector<Section> sections;  // s_2'..s_u'
};

/// One round of the finite shrinking lemma: given (s_1..s_u) w_i-basic at
/// each p_i (degrees ascending), produces (s_2+r_2*s_1, ..., s_u+r_u*s_1)
/// that is min(u-1, w_i)-basic at every p_i.
ShrinkResult shrink_once(const ModulePresentation& m,
                         const std::vector<Section>& sections,
                         const std::vector<ProjPoint>& points,
                         const std::vector<int>& weights);

struct BasicElementsResult {
  UnipotentTransform transform;
  std::vector<Section> sections;  // the final t sections, top degrees
};

/// Iterated shrinking: u - t rounds, each dropping the lowest degree.
/// The surviving t sections are min(t, w_i)-basic at every p_i.
BasicElementsResult basic_elements(const ModulePresentation& m,
                                   const std::vector<Section>& sections,
                                   const std::vector<ProjPoint>& points,
                                   const std::vector<int>& weights, int t);

/// Specialization with t = 1 and weights mu(F_{p_i}): from sections that
/// generate every listed fiber, one section s with mu((F/(s))_{p_i}) =
/// mu(F_{p_i}) - 1 at every point.
Section serre_section(const ModulePresentation& m,
                      const std::vector<Section>& sections,
                      const std::vector<ProjPoint>& points);

}  // namespace gbasic

#endif
