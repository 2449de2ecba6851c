#include <doctest.h>

#include <vector>

#include "support.hpp"

using namespace gbasic;
using testsupport::pt;
using testsupport::Q;

namespace {

// coordinates transformed by a fixed invertible matrix
PointSet transformed(const PointSet& z, const std::vector<std::vector<long>>& a) {
  const Field& f = z.field();
  std::vector<ProjPoint> out;
  for (const auto& p : z.points()) {
    std::vector<Scalar> v;
    for (const auto& row : a) {
      Scalar x = f.zero();
      for (std::size_t k = 0; k < row.size(); ++k)
        x += f.integer(row[k]) * p.coords()[k];
      v.push_back(x);
    }
    out.push_back(ProjPoint(std::move(v)));
  }
  return PointSet(std::move(out));
}

}  // namespace

TEST_CASE("cayley-bacharach membership tests") {
  Field q = Q();
  PointSet simplex = simplex_points(q);
  CHECK(satisfies_cb(simplex, 0));  // vacuous: no constants vanish
  CHECK(!satisfies_cb(simplex, 1));  // the line through the other two points

  PointSet grid2 = grid_points(2, 2, q);
  CHECK(satisfies_cb(grid2, 1));
  CHECK(!satisfies_cb(grid2, 2));  // two lines cover any 3 of the 4

  PointSet grid3 = grid_points(3, 3, q);
  CHECK(satisfies_cb(grid3, 3));  // the classical statement
  CHECK(!satisfies_cb(grid3, 4));
}

TEST_CASE("cb index values") {
  Field q = Q();
  CHECK(cb_index(grid_points(1, 2, q)) == 0);
  CHECK(cb_index(grid_points(2, 2, q)) == 1);
  CHECK(cb_index(grid_points(2, 3, q)) == 2);
  CHECK(cb_index(grid_points(3, 3, q)) == 3);
  CHECK(cb_index(simplex_points(q)) == 0);

  // two points: the line through the other one misses q only in degree 0
  PointSet pair({pt(q, {"1", "0", "0"}), pt(q, {"0", "1", "0"})});
  CHECK(cb_index(pair) == 0);
}

TEST_CASE("singletons are rejected") {
  Field q = Q();
  PointSet single(std::vector<ProjPoint>{pt(q, {"1", "2", "3"})});
  // the colength-one subscheme is empty; every divisor contains it
  CHECK(!satisfies_cb(single, 0));
  CHECK(!satisfies_cb(single, 3));
  CHECK_THROWS_AS(cb_index(single), validation_error);
  CHECK_THROWS_AS(verify_bounds(single), validation_error);
}

TEST_CASE("monotonicity in the degree") {
  Field q = Q();
  testsupport::Rng rng(73);
  for (int trial = 0; trial < 10; ++trial) {
    PointSet z = random_points(static_cast<int>(testsupport::draw(rng, 2, 9)),
                               4000 + trial, q);
    int sigma = stabilization_degree(z);
    bool previous = true;
    for (int l = 0; l <= sigma + 1; ++l) {
      bool now = satisfies_cb(z, l);
      if (now) CHECK(previous);  // CB_l implies CB_{l-1}
      previous = now;
    }
  }
}

TEST_CASE("bounds by syzygy degrees") {
  Field q = Q();

  CBReport grid = verify_bounds(grid_points(3, 3, q), 2);
  CHECK(grid.cb_index == 3);
  CHECK(grid.a_min == 6);
  CHECK(grid.a_max == 6);
  CHECK(grid.bound_holds);  // tight on both sides

  CBReport tri = verify_bounds(simplex_points(q));
  CHECK(tri.cb_index == 0);
  CHECK(tri.a_min == 3);
  CHECK(tri.a_max == 3);
  CHECK(tri.bound_holds);  // 0 <= 0 <= 0

  // per_degree: true up to the index, false right after
  REQUIRE(static_cast<int>(tri.per_degree.size()) == tri.cb_index + 2);
  for (const auto& [l, good] : tri.per_degree)
    CHECK(good == (l <= tri.cb_index));

  // six random points in general position
  PointSet six = random_points(6, 99, q);
  CHECK(verify_bounds(six).bound_holds);
}

TEST_CASE("projective invariance") {
  Field q = Q();
  std::vector<std::vector<long>> a{{1, 2, 0}, {0, 1, 1}, {1, 0, 3}};  // det 5
  for (unsigned long seed : {5ul, 6ul}) {
    PointSet z = random_points(5, seed, q);
    PointSet w = transformed(z, a);
    CHECK(cb_index(z) == cb_index(w));
    BettiTable tz = betti_table(z);
    BettiTable tw = betti_table(w);
    CHECK(tz.entries == tw.entries);
  }
}

TEST_CASE("generated configurations") {
  Field q = Q();
  CHECK(grid_points(3, 3, q).size() == 9);
  CHECK(grid_points(1, 2, q).size() == 2);
  CHECK(simplex_points(q).size() == 3);
  CHECK(simplex_points(q)[0].str() == "(1:0:0)");

  PointSet g = grid_points(2, 2, q);
  CHECK(g[0] == pt(q, {"0", "0", "1"}));
  CHECK(g[3] == pt(q, {"1", "1", "1"}));

  CHECK_THROWS_AS(grid_points(0, 2, q), validation_error);

  // determinism of the seeded generator
  PointSet r1 = random_points(7, 42, q);
  PointSet r2 = random_points(7, 42, q);
  REQUIRE(r1.size() == 7);
  for (int i = 0; i < 7; ++i) CHECK(r1[i] == r2[i]);
  PointSet r3 = random_points(7, 43, q);
  bool identical = true;
  for (int i = 0; i < 7; ++i) identical = identical && r1[i] == r3[i];
  CHECK(!identical);

  // F_p capacity checks
  Field f5 = Field::prime_field(5);
  CHECK_THROWS_AS(grid_points(6, 2, f5), validation_error);
  CHECK(grid_points(5, 2, f5).size() == 10);
  CHECK_THROWS_AS(random_points(32, 1, f5), validation_error);
  CHECK(random_points(10, 1, f5).size() == 10);
}
