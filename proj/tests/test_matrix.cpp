#include <doctest.h>

#include <algorithm>
#include <vector>

#include "support.hpp"

using namespace gbasic;
using testsupport::Q;

namespace {

Matrix random_matrix(testsupport::Rng& rng, const Field& f, int r, int c) {
  Matrix m(r, c, f);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = testsupport::random_scalar(rng, f);
  return m;
}

bool is_zero_vector(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar& x) { return x.is_zero(); });
}

}  // namespace

TEST_CASE("rank basics") {
  Field q = Q();
  CHECK(rank(Matrix::identity(3, q)) == 3);
  CHECK(rank(Matrix(2, 5, q)) == 0);
  CHECK(rank(Matrix(0, 4, q)) == 0);
  CHECK(rank(Matrix(4, 0, q)) == 0);

  Matrix m = Matrix::from_rows(
      {{q.integer(1), q.integer(2)}, {q.integer(2), q.integer(4)}}, q);
  CHECK(rank(m) == 1);

  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(is_zero_vector(m.apply(k[0])));
  // proportional to (2, -1): vanishing cross product
  CHECK(k[0][0] * q.integer(-1) - k[0][1] * q.integer(2) == q.integer(0));

  CHECK(kernel_basis(Matrix(2, 5, q)).size() == 5);
}

TEST_CASE("determinant") {
  Field q = Q();
  CHECK(det(Matrix::identity(4, q)).str() == "1");

  // Hilbert matrix H_ij = 1/(i+j-1), a classically ill-conditioned case
  // that floating point cannot survive
  Matrix h(5, 5, q);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      h.at(i, j) = q.integer(1) / q.integer(i + j + 1);
  CHECK(det(h).str() == "1/266716800000");

  Matrix swapped = Matrix::from_rows({h.row(1), h.row(0), h.row(2), h.row(3),
                                      h.row(4)},
                                     q);
  CHECK(det(swapped) == -det(h));

  CHECK_THROWS_AS(det(Matrix(2, 3, q)), dimension_mismatch);
}

TEST_CASE("rank-nullity and rref agreement") {
  testsupport::Rng rng(23);
  for (const Field& f : {Q(), Field::prime_field(7)}) {
    for (int trial = 0; trial < 30; ++trial) {
      int r = static_cast<int>(testsupport::draw(rng, 0, 5));
      int c = static_cast<int>(testsupport::draw(rng, 0, 5));
      Matrix m = random_matrix(rng, f, r, c);
      int rk = rank(m);
      CHECK(rk + static_cast<int>(kernel_basis(m).size()) == c);
      // independent elimination route
      std::vector<int> pivots;
      rref(m, &pivots);
      CHECK(static_cast<int>(pivots.size()) == rk);
      CHECK(rank(m.transpose()) == rk);
    }
  }
}

TEST_CASE("rank invariance under row operations") {
  Field q = Q();
  testsupport::Rng rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = random_matrix(rng, q, 4, 3);
    int rk = rank(m);

    std::vector<std::vector<Scalar>> rows;
    for (int i = 0; i < 4; ++i) rows.push_back(m.row(i));
    std::shuffle(rows.begin(), rows.end(), rng);
    CHECK(rank(Matrix::from_rows(rows, q)) == rk);

    Scalar c = testsupport::random_nonzero_scalar(rng, q);
    for (Scalar& x : rows[0]) x = c * x;
    CHECK(rank(Matrix::from_rows(rows, q)) == rk);
  }
}

TEST_CASE("solve and column span") {
  Field q = Q();
  Matrix m = Matrix::from_rows(
      {{q.integer(1), q.integer(1)}, {q.integer(0), q.integer(1)}}, q);
  std::vector<Scalar> b{q.integer(3), q.integer(1)};
  auto x = solve(m, b);
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == b);

  Matrix tall = Matrix::from_rows({{q.integer(1)}, {q.integer(2)}}, q);
  std::vector<Scalar> inconsistent{q.integer(1), q.integer(3)};
  CHECK(!solve(tall, inconsistent).has_value());
  std::vector<Scalar> consistent{q.integer(2), q.integer(4)};
  CHECK(solve(tall, consistent).has_value());
  CHECK(in_column_span(tall, consistent));
  CHECK(!in_column_span(tall, inconsistent));

  // random consistency: M * (solve(M, M v)) = M v
  testsupport::Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    Matrix a = random_matrix(rng, q, 4, 3);
    std::vector<Scalar> v;
    for (int j = 0; j < 3; ++j)
      v.push_back(testsupport::random_scalar(rng, q));
    std::vector<Scalar> rhs = a.apply(v);
    auto w = solve(a, rhs);
    REQUIRE(w.has_value());
    CHECK(a.apply(*w) == rhs);
  }
}

TEST_CASE("kernel vectors annihilate") {
  testsupport::Rng rng(37);
  for (const Field& f : {Q(), Field::prime_field(5)}) {
    for (int trial = 0; trial < 20; ++trial) {
      Matrix m = random_matrix(rng, f, 3, 5);
      for (const auto& v : kernel_basis(m))
        CHECK(is_zero_vector(m.apply(v)));
    }
  }
}

TEST_CASE("matrix assembly helpers") {
  Field q = Q();
  Matrix m = Matrix::from_columns({{q.integer(1), q.integer(0)},
                                   {q.integer(2), q.integer(3)}},
                                  q);
  CHECK(m.at(0, 1).str() == "2");
  CHECK(m.column(1) == std::vector<Scalar>{q.integer(2), q.integer(3)});
  CHECK(m.transpose().at(1, 0).str() == "2");

  Matrix aug = m.augmented(Matrix::identity(2, q));
  CHECK(aug.cols() == 4);
  CHECK(aug.at(1, 3).str() == "1");

  std::vector<Scalar> extra{q.integer(7), q.integer(8)};
  Matrix wide = m.with_column(extra);
  CHECK(wide.cols() == 3);
  CHECK(wide.at(1, 2).str() == "8");

  Matrix sub = aug.submatrix({1}, {0, 3});
  CHECK(sub.rows() == 1);
  CHECK(sub.at(0, 1).str() == "1");

  Matrix prod = m * Matrix::identity(2, q);
  CHECK(prod == m);
}
