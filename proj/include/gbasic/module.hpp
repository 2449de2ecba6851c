#ifndef GBASIC_MODULE_HPP
#define GBASIC_MODULE_HPP

#include <vector>

#include "gbasic/matrix.hpp"
#include "gbasic/poly.hpp"

namespace gbasic {

/// A rational point of P^{n-1}, stored with the first nonzero coordinate
/// normalized to 1 so equal points have identical coordinates.
class ProjPoint {
 public:
  ProjPoint(std::vector<Scalar> coords);

  int num_vars() const { return static_cast<int>(coords_.size()); }
  const Field& field() const { return field_; }
  const std::vector<Scalar>& coords() const { return coords_; }

  /// Index of the first nonzero (hence =1) coordinate.
  int pivot() const { return pivot_; }

  bool operator==(const ProjPoint& rhs) const;
  bool operator!=(const ProjPoint& rhs) const { return !(*this == rhs); }

  std::string str() const;  // "(1:0:0)"

 private:
  std::vector<Scalar> coords_;
  Field field_;
  int pivot_;
};

/// Throws validation_error when two listed points coincide.
void require_distinct(const std::vector<ProjPoint>& points);

/// A graded module presented as coker(phi: ⊕S(-b_j) -> ⊕S(-a_i)), phi the
/// r x s matrix `entries` with entry (i,j) homogeneous of degree b_j - a_i.
class ModulePresentation {
 public:
  ModulePresentation(int num_vars, std::vector<int> row_twists,
                     std::vector<int> col_twists,
                     std::vector<std::vector<HomogPoly>> entries,
                     const Field& field);

  /// Free module ⊕S(-a_i): no relations.
  static ModulePresentation free_module(int num_vars,
                                        std::vector<int> row_twists,
                                        const Field& field);

  int num_vars() const { return num_vars_; }
  int rows() const { return static_cast<int>(row_twists_.size()); }
  int cols() const { return static_cast<int>(col_twists_.size()); }
  const std::vector<int>& row_twists() const { return row_twists_; }
  const std::vector<int>& col_twists() const { return col_twists_; }
  const HomogPoly& entry(int i, int j) const { return entries_[i][j]; }
  const Field& field() const { return field_; }

 private:
  int num_vars_;
  std::vector<int> row_twists_;
  std::vector<int> col_twists_;
  std::vector<std::vector<HomogPoly>> entries_;
  Field field_;
};

/// A degree-d section of the presented module: component i is homogeneous
/// of degree d - a_i (the zero polynomial where d - a_i < 0).
class Section {
 public:
  Section(int degree, std::vector<HomogPoly> coords);

  int degree() const { return degree_; }
  const std::vector<HomogPoly>& coords() const { return coords_; }
  int size() const { return static_cast<int>(coords_.size()); }
  const Field& field() const { return field_; }

  /// The i-th standard generator e_i of ⊕S(-a_i), a section of degree a_i.
  static Section standard_generator(const ModulePresentation& m, int i);

  /// this + r * other, componentwise.
  Section plus_scaled(const HomogPoly& r, const Section& other) const;

  bool operator==(const Section& rhs) const;

 private:
  int degree_;
  std::vector<HomogPoly> coords_;
  Field field_;
};

/// Checks component count and degrees against m's row twists.
void validate_section(const ModulePresentation& m, const Section& s);

/// The fiber of the module at a point: the evaluated, L-scaled
/// presentation matrix and the minimal generator count mu.
struct Fiber {
  ProjPoint point;
  HomogPoly dehomogenizer;
  Matrix presentation_matrix_at_point;  // entry (i,j) = phi_ij(p)/L(p)^(b_j-a_i)
  int mu;                               // = rows - rank(matrix)
};

/// The coordinate form x_k for the point's first nonzero coordinate;
/// always a valid dehomogenizer.
HomogPoly default_dehomogenizer(const ProjPoint& p);

/// dim of the degree-d piece of the cokernel.
long graded_piece_dim(const ModulePresentation& m, int d);

Fiber fiber(const ModulePresentation& m, const ProjPoint& p,
            const HomogPoly& L);
Fiber fiber(const ModulePresentation& m, const ProjPoint& p);

int mu(const ModulePresentation& m, const ProjPoint& p, const HomogPoly& L);
int mu(const ModulePresentation& m, const ProjPoint& p);

/// Images of sections in the fiber, reduced modulo the column space of the
/// evaluated presentation matrix. Column j is the L-scaled evaluation of
/// section j; width is the dimension of the span of the reduced columns,
/// which equals mu(F_p) - mu((F/(s_1..s_u))_p).
struct SectionImages {
  Matrix columns;  // r x u, reduced
  int width;
};

SectionImages section_images_in_fiber(const ModulePresentation& m,
                                      const std::vector<Section>& sections,
                                      const ProjPoint& p, const HomogPoly& L);
SectionImages section_images_in_fiber(const ModulePresentation& m,
                                      const std::vector<Section>& sections,
                                      const ProjPoint& p);

/// Width >= w test (the basicness definition unwound through the fiber
/// identity). w must be >= 0.
bool is_w_basic(const ModulePresentation& m,
                const std::vector<Section>& sections, const ProjPoint& p,
                int w, const HomogPoly& L);
bool is_w_basic(const ModulePresentation& m,
                const std::vector<Section>& sections, const ProjPoint& p,
                int w);

/// Whether the i-th Fitting ideal of the module vanishes at p, decided by
/// enumerating all (r-i) x (r-i) minors of the scaled evaluated matrix.
/// True exactly when mu at p exceeds i.
bool fitting_vanishes_at(const ModulePresentation& m, int i,
                         const ProjPoint& p, const HomogPoly& L);
bool fitting_vanishes_at(const ModulePresentation& m, int i,
                         const ProjPoint& p);

}  // namespace gbasic

#endif
