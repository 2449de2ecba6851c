#include "gbasic/generate.hpp"

#include <random>

namespace gbasic {

PointSet grid_points(int a, int b, const Field& field) {
  if (a < 1 || b < 1) throw validation_error("grid sides must be >= 1");
  if (field.modular() && static_cast<unsigned long>(std::max(a, b)) >
                             field.characteristic())
    throw validation_error("grid does not fit in " + field.name());
  std::vector<ProjPoint> pts;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      pts.push_back(ProjPoint(
          {field.integer(i), field.integer(j), field.one()}));
  return PointSet(std::move(pts));
}

PointSet simplex_points(const Field& field) {
  std::vector<ProjPoint> pts;
  for (int k = 0; k < 3; ++k) {
    std::vector<Scalar> c(3, field.zero());
    c[k] = field.one();
    pts.push_back(ProjPoint(std::move(c)));
  }
  return PointSet(std::move(pts));
}

PointSet random_points(int count, unsigned long seed, const Field& field) {
  if (count < 1) throw validation_error("need a positive point count");
  if (field.modular()) {
    unsigned long p = field.characteristic();
    if (static_cast<unsigned long>(count) > p * p + p + 1)
      throw validation_error("P^2 over " + field.name() + " has only " +
                             std::to_string(p * p + p + 1) + " points");
  }
  std::mt19937_64 rng(seed);
  // Explicit modulo mapping keeps the stream identical across platforms.
  auto draw = [&rng](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  auto coordinate = [&]() {
    long num = draw(-8, 8);
    long den = field.modular() && field.characteristic() <= 3 ? 1 : draw(1, 3);
    return field.integer(num) / field.integer(den);
  };
  std::vector<ProjPoint> pts;
  long guard = 0;
  while (static_cast<int>(pts.size()) < count) {
    if (++guard > 10000L * count)
      throw error("random point sampling stalled; this cannot happen");
    std::vector<Scalar> c;
    if (draw(0, 9) == 0) {
      // a point on the line at infinity
      if (draw(0, 3) == 0)
        c = {field.zero(), field.one(), field.zero()};
      else
        c = {field.one(), coordinate(), field.zero()};
    } else {
      c = {coordinate(), coordinate(), field.one()};
    }
    ProjPoint p(std::move(c));
    bool fresh = true;
    for (const ProjPoint& q : pts)
      if (q == p) {
        fresh = false;
        break;
      }
    if (fresh) pts.push_back(std::move(p));
  }
  return PointSet(std::move(pts));
}

}  // namespace gbasic
