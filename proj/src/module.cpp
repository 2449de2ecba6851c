#include "gbasic/module.hpp"

#include <algorithm>

namespace gbasic {

ProjPoint::ProjPoint(std::vector<Scalar> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw dimension_mismatch("point with no coordinates");
  field_ = coords_[0].field();
  pivot_ = -1;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].field() != field_)
      throw field_mismatch("point coordinates over mixed fields");
    if (pivot_ < 0 && !coords_[i].is_zero()) pivot_ = static_cast<int>(i);
  }
  if (pivot_ < 0) throw validation_error("the zero vector is not a point");
  Scalar inv = coords_[static_cast<std::size_t>(pivot_)].inverse();
  for (Scalar& c : coords_) c *= inv;
}

bool ProjPoint::operator==(const ProjPoint& rhs) const {
  return coords_ == rhs.coords_;
}

std::string ProjPoint::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ":";
    out += coords_[i].str();
  }
  return out + ")";
}

void require_distinct(const std::vector<ProjPoint>& points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw validation_error("points " + std::to_string(i) + " and " +
                               std::to_string(j) + " coincide: " +
                               points[i].str());
}

ModulePresentation::ModulePresentation(
    int num_vars, std::vector<int> row_twists, std::vector<int> col_twists,
    std::vector<std::vector<HomogPoly>> entries, const Field& field)
    : num_vars_(num_vars),
      row_twists_(std::move(row_twists)),
      col_twists_(std::move(col_twists)),
      entries_(std::move(entries)),
      field_(field) {
  if (num_vars_ <= 0) throw dimension_mismatch("num_vars must be positive");
  if (row_twists_.empty())
    throw validation_error("presentation needs at least one generator");
  std::size_t r = row_twists_.size();
  std::size_t s = col_twists_.size();
  if (entries_.size() != r)
    throw dimension_mismatch("entry grid has wrong row count");
  for (std::size_t i = 0; i < r; ++i) {
    if (entries_[i].size() != s)
      throw dimension_mismatch("entry grid has wrong column count");
    for (std::size_t j = 0; j < s; ++j) {
      const HomogPoly& f = entries_[i][j];
      if (f.num_vars() != num_vars_)
        throw dimension_mismatch("entry in the wrong polynomial ring");
      if (f.field() != field_)
        throw field_mismatch("entry over the wrong field");
      int want = col_twists_[j] - row_twists_[i];
      if (f.is_zero()) {
        // Zero entries are legal at any slot; normalize the stored degree.
        entries_[i][j] = HomogPoly::zero(num_vars_, std::max(want, 0), field_);
      } else if (f.degree() != want) {
        throw validation_error(
            "entry (" + std::to_string(i) + "," + std::to_string(j) +
            ") has degree " + std::to_string(f.degree()) + ", expected " +
            std::to_string(want));
      }
    }
  }
}

ModulePresentation ModulePresentation::free_module(int num_vars,
                                                  std::vector<int> row_twists,
                                                  const Field& field) {
  std::vector<std::vector<HomogPoly>> entries(row_twists.size());
  return ModulePresentation(num_vars, std::move(row_twists), {},
                            std::move(entries), field);
}

Section::Section(int degree, std::vector<HomogPoly> coords)
    : degree_(degree), coords_(std::move(coords)) {
  if (coords_.empty()) throw dimension_mismatch("section with no components");
  field_ = coords_[0].field();
  for (const HomogPoly& f : coords_)
    if (f.field() != field_)
      throw field_mismatch("section components over mixed fields");
}

Section Section::standard_generator(const ModulePresentation& m, int i) {
  if (i < 0 || i >= m.rows())
    throw dimension_mismatch("generator index out of range");
  int d = m.row_twists()[static_cast<std::size_t>(i)];
  std::vector<HomogPoly> coords;
  for (int k = 0; k < m.rows(); ++k) {
    int deg = d - m.row_twists()[static_cast<std::size_t>(k)];
    if (k == i)
      coords.push_back(HomogPoly::constant(m.num_vars(), m.field().one()));
    else
      coords.push_back(
          HomogPoly::zero(m.num_vars(), std::max(deg, 0), m.field()));
  }
  return Section(d, std::move(coords));
}

Section Section::plus_scaled(const HomogPoly& r, const Section& other) const {
  if (size() != other.size())
    throw dimension_mismatch("sections of different modules");
  std::vector<HomogPoly> coords;
  coords.reserve(coords_.size());
  for (int i = 0; i < size(); ++i) {
    HomogPoly scaled = r * other.coords_[static_cast<std::size_t>(i)];
    coords.push_back(coords_[static_cast<std::size_t>(i)] + scaled);
  }
  return Section(degree_, std::move(coords));
}

bool Section::operator==(const Section& rhs) const {
  return degree_ == rhs.degree_ && coords_ == rhs.coords_;
}

void validate_section(const ModulePresentation& m, const Section& s) {
  if (s.size() != m.rows())
    throw validation_error("section has " + std::to_string(s.size()) +
                           " components, module has " +
                           std::to_string(m.rows()) + " generators");
  if (s.field() != m.field())
    throw field_mismatch("section over the wrong field");
  for (int i = 0; i < s.size(); ++i) {
    const HomogPoly& f = s.coords()[static_cast<std::size_t>(i)];
    int want = s.degree() - m.row_twists()[static_cast<std::size_t>(i)];
    if (f.num_vars() != m.num_vars())
      throw dimension_mismatch("section component in the wrong ring");
    if (f.is_zero()) continue;
    if (want < 0 || f.degree() != want)
      throw validation_error("section component " + std::to_string(i) +
                             " has degree " + std::to_string(f.degree()) +
                             ", expected " + std::to_string(want));
  }
}

HomogPoly default_dehomogenizer(const ProjPoint& p) {
  return HomogPoly::variable(p.num_vars(), p.pivot(), p.field());
}

long graded_piece_dim(const ModulePresentation& m, int d) {
  int n = m.num_vars();
  long target_dim = 0;
  std::vector<long> row_offsets;  // start of block i in the row index
  for (int i = 0; i < m.rows(); ++i) {
    row_offsets.push_back(target_dim);
    target_dim += poly_ring_dim(n, d - m.row_twists()[static_cast<std::size_t>(i)]);
  }
  if (target_dim == 0) return 0;

  // Row index lookup per block: monomial -> position.
  std::vector<std::map<ExpVec, long, std::greater<ExpVec>>> row_index(
      static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    int deg = d - m.row_twists()[static_cast<std::size_t>(i)];
    if (deg < 0) continue;
    long pos = 0;
    for (const ExpVec& e : monomials(n, deg))
      row_index[static_cast<std::size_t>(i)][e] = row_offsets[static_cast<std::size_t>(i)] + pos++;
  }

  // Columns: (j, monomial nu of degree d - b_j) -> coefficient vector of
  // entry(i,j) * nu over each row block.
  std::vector<std::vector<Scalar>> columns;
  for (int j = 0; j < m.cols(); ++j) {
    int cdeg = d - m.col_twists()[static_cast<std::size_t>(j)];
    if (cdeg < 0) continue;
    for (const ExpVec& nu : monomials(n, cdeg)) {
      std::vector<Scalar> col(static_cast<std::size_t>(target_dim),
                              m.field().zero());
      for (int i = 0; i < m.rows(); ++i) {
        const HomogPoly& f = m.entry(i, j);
        for (const auto& [e, c] : f.terms()) {
          ExpVec prod(static_cast<std::size_t>(n));
          for (int k = 0; k < n; ++k)
            prod[static_cast<std::size_t>(k)] =
                e[static_cast<std::size_t>(k)] + nu[static_cast<std::size_t>(k)];
          col[static_cast<std::size_t>(
              row_index[static_cast<std::size_t>(i)].at(prod))] += c;
        }
      }
      columns.push_back(std::move(col));
    }
  }
  Matrix phi_d = Matrix::from_columns(columns, m.field());
  if (phi_d.rows() == 0) return target_dim;
  return target_dim - rank(phi_d);
}

Fiber fiber(const ModulePresentation& m, const ProjPoint& p,
            const HomogPoly& L) {
  if (L.degree() != 1 || L.is_zero())
    throw validation_error("dehomogenizer must be a nonzero linear form");
  if (p.num_vars() != m.num_vars())
    throw dimension_mismatch("point dimension does not match module");
  Scalar lv = L.eval(p.coords());
  if (lv.is_zero())
    throw validation_error("dehomogenizer vanishes at " + p.str());
  Matrix phi_p(m.rows(), m.cols(), m.field());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const HomogPoly& f = m.entry(i, j);
      if (f.is_zero()) continue;
      long e = m.col_twists()[static_cast<std::size_t>(j)] -
               m.row_twists()[static_cast<std::size_t>(i)];
      phi_p.at(i, j) = f.eval(p.coords()) / lv.pow(e);
    }
  int mu_val = m.rows() - rank(phi_p);
  return Fiber{p, L, std::move(phi_p), mu_val};
}

Fiber fiber(const ModulePresentation& m, const ProjPoint& p) {
  return fiber(m, p, default_dehomogenizer(p));
}

int mu(const ModulePresentation& m, const ProjPoint& p, const HomogPoly& L) {
  return fiber(m, p, L).mu;
}

int mu(const ModulePresentation& m, const ProjPoint& p) {
  return fiber(m, p).mu;
}

namespace {

// Canonical reduction modulo the column space of a: kills the pivot
// coordinates of the space, leaving the unique representative supported
// on the free coordinates.
struct ColumnSpaceReducer {
  std::vector<int> pivots;  // pivot coordinate per basis row
  Matrix basis;             // rref of a^T: rows span col(a)

  explicit ColumnSpaceReducer(const Matrix& a)
      : basis(rref(a.transpose(), &pivots)) {}

  void reduce(std::vector<Scalar>& v) const {
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      Scalar c = v[static_cast<std::size_t>(pivots[k])];
      if (c.is_zero()) continue;
      for (int j = 0; j < basis.cols(); ++j)
        v[static_cast<std::size_t>(j)] -= c * basis.at(static_cast<int>(k), j);
    }
  }
};

}  // namespace

SectionImages section_images_in_fiber(const ModulePresentation& m,
                                      const std::vector<Section>& sections,
                                      const ProjPoint& p, const HomogPoly& L) {
  Fiber fib = fiber(m, p, L);
  Scalar lv = L.eval(p.coords());
  ColumnSpaceReducer reducer(fib.presentation_matrix_at_point);
  std::vector<std::vector<Scalar>> cols;
  for (const Section& s : sections) {
    validate_section(m, s);
    std::vector<Scalar> v(static_cast<std::size_t>(m.rows()),
                          m.field().zero());
    for (int i = 0; i < m.rows(); ++i) {
      const HomogPoly& f = s.coords()[static_cast<std::size_t>(i)];
      if (f.is_zero()) continue;
      long e = s.degree() - m.row_twists()[static_cast<std::size_t>(i)];
      v[static_cast<std::size_t>(i)] = f.eval(p.coords()) / lv.pow(e);
    }
    reducer.reduce(v);
    cols.push_back(std::move(v));
  }
  Matrix images = cols.empty() ? Matrix(m.rows(), 0, m.field())
                               : Matrix::from_columns(cols, m.field());
  int width = rank(images);
  return SectionImages{std::move(images), width};
}

SectionImages section_images_in_fiber(const ModulePresentation& m,
                                      const std::vector<Section>& sections,
                                      const ProjPoint& p) {
  return section_images_in_fiber(m, sections, p, default_dehomogenizer(p));
}

bool is_w_basic(const ModulePresentation& m,
                const std::vector<Section>& sections, const ProjPoint& p,
                int w, const HomogPoly& L) {
  if (w < 0) throw validation_error("basicness weight must be >= 0");
  return section_images_in_fiber(m, sections, p, L).width >= w;
}

bool is_w_basic(const ModulePresentation& m,
                const std::vector<Section>& sections, const ProjPoint& p,
                int w) {
  return is_w_basic(m, sections, p, w, default_dehomogenizer(p));
}

namespace {

// All k-subsets of {0..n-1} in lex order.
bool next_combination(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[static_cast<std::size_t>(i)] < n - k + i) {
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

bool fitting_vanishes_at(const ModulePresentation& m, int i,
                         const ProjPoint& p, const HomogPoly& L) {
  if (i < 0) throw validation_error("Fitting index must be >= 0");
  int k = m.rows() - i;  // minor size
  if (k <= 0) return false;         // Fitt_i = (1)
  if (k > m.rows() || k > m.cols()) return true;  // no minors: zero ideal
  Matrix phi_p = fiber(m, p, L).presentation_matrix_at_point;
  std::vector<int> ri(static_cast<std::size_t>(k)), ci(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) ri[static_cast<std::size_t>(t)] = t;
  do {
    for (int t = 0; t < k; ++t) ci[static_cast<std::size_t>(t)] = t;
    do {
      if (!det(phi_p.submatrix(ri, ci)).is_zero()) return false;
    } while (next_combination(ci, m.cols()));
  } while (next_combination(ri, m.rows()));
  return true;
}

bool fitting_vanishes_at(const ModulePresentation& m, int i,
                         const ProjPoint& p) {
  return fitting_vanishes_at(m, i, p, default_dehomogenizer(p));
}

}  // namespace gbasic
