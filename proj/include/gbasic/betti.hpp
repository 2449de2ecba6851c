#ifndef GBASIC_BETTI_HPP
#define GBASIC_BETTI_HPP

#include <map>
#include <utility>

#include "gbasic/module.hpp"

namespace gbasic {

/// A reduced set of rational points: distinct, same field and dimension.
class PointSet {
 public:
  explicit PointSet(std::vector<ProjPoint> points);

  int size() const { return static_cast<int>(points_.size()); }
  int num_vars() const { return points_[0].num_vars(); }
  const Field& field() const { return points_[0].field(); }
  const ProjPoint& operator[](int i) const;
  const std::vector<ProjPoint>& points() const { return points_; }

  /// The colength-one subset dropping point i.
  PointSet without(int i) const;

 private:
  std::vector<ProjPoint> points_;
};

/// |Z| x dim S_d; entry (i, m) is monomial m at the normalized
/// coordinates of point i, monomials in graded-lex order.
struct EvaluationMatrix {
  int degree;
  Matrix matrix;
};

EvaluationMatrix evaluation_matrix(const PointSet& z, int d);

/// HF(S/I_Z, d) = rank of the evaluation matrix; 0 for d < 0.
long hilbert_function(const PointSet& z, int d);

/// A basis of the degree-d piece of I_Z (forms vanishing on Z),
/// deterministic via reduced echelon kernel vectors.
std::vector<HomogPoly> ideal_basis(const PointSet& z, int d);

/// Least d with HF(S/I_Z, d) = |Z|; at most |Z| - 1.
int stabilization_degree(const PointSet& z);

/// Graded Betti numbers of S/I_Z for Z in P^2, with the syzygy and
/// generator degree multisets of the length-2 resolution of I_Z.
struct BettiTable {
  std::map<std::pair<int, int>, long> entries;  // (i,j) -> beta, nonzero only
  int degree_cap;
  std::vector<int> a_degrees;  // j with beta_{2,j} > 0, with multiplicity
  std::vector<int> b_degrees;  // j with beta_{1,j} > 0, with multiplicity

  long beta(int i, int j) const;
};

/// Koszul-homology computation of all beta_{i,j}(S/I_Z) up to
/// degree_cap = stabilization_degree + 3. Verifies the structural facts
/// (beta_0 = 1 at 0 only, beta_3 = 0, generator/syzygy counts, the
/// Hilbert function identity, and the vanishing band) and throws on any
/// violation, which would be a bug rather than bad input.
BettiTable betti_table(const PointSet& z, int threads = 1);

}  // namespace gbasic

#endif
