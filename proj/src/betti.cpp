#include "gbasic/betti.hpp"

#include <algorithm>
#include <array>

#include "gbasic/parallel.hpp"

namespace gbasic {

PointSet::PointSet(std::vector<ProjPoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw validation_error("point set is empty");
  for (const ProjPoint& p : points_) {
    if (p.num_vars() != points_[0].num_vars())
      throw dimension_mismatch("points of mixed dimension");
    if (p.field() != points_[0].field())
      throw field_mismatch("points over mixed fields");
  }
  require_distinct(points_);
}

const ProjPoint& PointSet::operator[](int i) const {
  if (i < 0 || i >= size()) throw dimension_mismatch("point index out of range");
  return points_[i];
}

PointSet PointSet::without(int i) const {
  if (size() < 2)
    throw validation_error("cannot drop a point from a singleton");
  std::vector<ProjPoint> rest;
  for (int k = 0; k < size(); ++k)
    if (k != i) rest.push_back(points_[k]);
  return PointSet(std::move(rest));
}

EvaluationMatrix evaluation_matrix(const PointSet& z, int d) {
  if (d < 0) throw validation_error("evaluation degree must be >= 0");
  int n = z.num_vars();
  std::vector<ExpVec> ms = monomials(n, d);
  Matrix m(z.size(), static_cast<int>(ms.size()), z.field());
  for (int i = 0; i < z.size(); ++i) {
    const std::vector<Scalar>& c = z[i].coords();
    for (int j = 0; j < static_cast<int>(ms.size()); ++j) {
      Scalar val = z.field().one();
      for (int k = 0; k < n; ++k)
        if (ms[j][k] != 0) val *= c[k].pow(ms[j][k]);
      m.at(i, j) = val;
    }
  }
  return EvaluationMatrix{d, std::move(m)};
}

long hilbert_function(const PointSet& z, int d) {
  if (d < 0) return 0;
  return rank(evaluation_matrix(z, d).matrix);
}

std::vector<HomogPoly> ideal_basis(const PointSet& z, int d) {
  std::vector<ExpVec> ms = monomials(z.num_vars(), d);
  std::vector<HomogPoly> out;
  for (const std::vector<Scalar>& v :
       kernel_basis(evaluation_matrix(z, d).matrix)) {
    HomogPoly f(z.num_vars(), d, z.field());
    for (std::size_t j = 0; j < ms.size(); ++j)
      if (!v[j].is_zero()) f.add_term(ms[j], v[j]);
    out.push_back(std::move(f));
  }
  return out;
}

int stabilization_degree(const PointSet& z) {
  for (int d = 0; d <= z.size(); ++d)
    if (hilbert_function(z, d) == z.size()) return d;
  throw error("Hilbert function failed to reach |Z|; this cannot happen");
}

long BettiTable::beta(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

namespace {

// The degree-d piece of S/I_Z realized as the column space of the
// evaluation matrix inside k^|Z|, with its canonical echelon basis.
// Multiplication by x_k acts coordinatewise by x_k(p_i), and reading a
// member vector's coordinates in the basis is just reading its pivot
// entries.
struct QuotientPiece {
  std::vector<int> pivots;
  Matrix basis;  // rows form the echelon basis of the space

  explicit QuotientPiece(const Field& field) : basis(0, 0, field) {}

  int dim() const { return static_cast<int>(pivots.size()); }

  std::vector<Scalar> coords(const std::vector<Scalar>& member) const {
    std::vector<Scalar> out;
    out.reserve(pivots.size());
    for (int p : pivots) out.push_back(member[p]);
    return out;
  }
};

QuotientPiece quotient_piece(const PointSet& z, int d) {
  QuotientPiece q(z.field());
  if (d < 0) return q;
  q.basis = rref(evaluation_matrix(z, d).matrix.transpose(), &q.pivots);
  return q;
}

// Subsets of {0,1,2} of size i, lex order, as bitmask-free index lists.
const std::vector<std::vector<int>>& var_subsets(int i) {
  static const std::vector<std::vector<std::vector<int>>> table = {
      {{}},
      {{0}, {1}, {2}},
      {{0, 1}, {0, 2}, {1, 2}},
      {{0, 1, 2}}};
  return table[i];
}

int subset_index(const std::vector<int>& subset) {
  const auto& all = var_subsets(static_cast<int>(subset.size()));
  for (int k = 0; k < static_cast<int>(all.size()); ++k)
    if (all[k] == subset) return k;
  throw error("unknown variable subset");
}

// Rank of the Koszul strand differential d_i in internal degree j:
// Lambda^i V (x) (S/I)_{j-i}  ->  Lambda^{i-1} V (x) (S/I)_{j-i+1}.
long strand_rank(const PointSet& z, const std::vector<QuotientPiece>& pieces,
                 int i, int j) {
  if (i < 1 || i > 3) return 0;
  int sdeg = j - i;
  if (sdeg < 0 || sdeg + 1 >= static_cast<int>(pieces.size())) return 0;
  const QuotientPiece& src = pieces[sdeg];
  const QuotientPiece& dst = pieces[sdeg + 1];
  if (src.dim() == 0) return 0;
  const auto& src_subsets = var_subsets(i);
  const auto& dst_subsets = var_subsets(i - 1);
  int v = z.size();
  const Field& field = z.field();

  long rows = static_cast<long>(dst_subsets.size()) * dst.dim();
  Matrix dmat(static_cast<int>(rows),
              static_cast<int>(src_subsets.size()) * src.dim(), field);
  int col = 0;
  for (const std::vector<int>& T : src_subsets) {
    for (int b = 0; b < src.dim(); ++b, ++col) {
      std::vector<Scalar> w = pieces[sdeg].basis.row(b);
      for (int t = 0; t < i; ++t) {
        int var = T[t];
        std::vector<int> rest;
        for (int x : T)
          if (x != var) rest.push_back(x);
        std::vector<Scalar> image(v, field.zero());
        for (int c = 0; c < v; ++c)
          image[c] = w[c] * z[c].coords()[var];
        std::vector<Scalar> coords = dst.coords(image);
        int block = subset_index(rest) * dst.dim();
        bool negate = t % 2 == 1;
        for (int r = 0; r < dst.dim(); ++r)
          dmat.at(block + r, col) =
              negate ? -coords[r] : coords[r];
      }
    }
  }
  return rank(dmat);
}

long choose3(int i) { return i == 0 || i == 3 ? 1 : 3; }

}  // namespace

BettiTable betti_table(const PointSet& z, int threads) {
  if (z.num_vars() != 3)
    throw validation_error("Betti tables are computed for points in P^2");
  int sigma = stabilization_degree(z);
  int cap = sigma + 3;

  std::vector<QuotientPiece> pieces;
  std::vector<long> hf;
  for (int d = 0; d <= cap + 1; ++d) {
    pieces.push_back(quotient_piece(z, d));
    hf.push_back(pieces.back().dim());
  }

  // ranks[j][i] = rank of d_i in internal degree j, i = 1..3.
  std::vector<std::array<long, 4>> ranks(cap + 1, {0, 0, 0, 0});
  parallel_for(cap + 1, threads, [&](long j) {
    for (int i = 1; i <= 3; ++i)
      ranks[j][i] = strand_rank(z, pieces, i, static_cast<int>(j));
  });

  BettiTable table;
  table.degree_cap = cap;
  for (int j = 0; j <= cap; ++j) {
    for (int i = 0; i <= 3; ++i) {
      int sdeg = j - i;
      long dim = sdeg < 0 ? 0 : choose3(i) * hf[sdeg];
      long r_in = i >= 1 ? ranks[j][i] : 0;
      long r_out = i + 1 <= 3 ? ranks[j][i + 1] : 0;
      long beta = dim - r_in - r_out;
      if (beta < 0)
        throw error("negative Betti number computed; this cannot happen");
      if (beta > 0) table.entries[{i, j}] = beta;
    }
  }

  // Structural guarantees; any failure is a bug in the computation.
  for (const auto& [ij, beta] : table.entries) {
    auto [i, j] = ij;
    if (i == 3)
      throw error("nonzero beta_3 for points in P^2; this cannot happen");
    if (i == 0 && j != 0)
      throw error("beta_0 away from degree 0; this cannot happen");
    if (j - i > sigma + 1)
      throw error("Betti entry beyond the regularity band; this cannot happen");
  }
  if (table.beta(0, 0) != 1)
    throw error("beta_{0,0} != 1; this cannot happen");
  long total1 = 0, total2 = 0;
  for (const auto& [ij, beta] : table.entries) {
    if (ij.first == 1) {
      total1 += beta;
      for (long c = 0; c < beta; ++c) table.b_degrees.push_back(ij.second);
    }
    if (ij.first == 2) {
      total2 += beta;
      for (long c = 0; c < beta; ++c) table.a_degrees.push_back(ij.second);
    }
  }
  if (total1 != total2 + 1)
    throw error("generator/syzygy counts violate the resolution shape");
  for (int d = 0; d <= cap; ++d) {
    long euler = 0;
    for (const auto& [ij, beta] : table.entries) {
      long s = poly_ring_dim(3, d - ij.second);
      euler += (ij.first % 2 == 0 ? beta : -beta) * s;
    }
    if (euler != hf[d])
      throw error("Betti table fails the Hilbert function identity");
  }
  return table;
}

}  // namespace gbasic
