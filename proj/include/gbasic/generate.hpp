#ifndef GBASIC_GENERATE_HPP
#define GBASIC_GENERATE_HPP

#include "gbasic/betti.hpp"

namespace gbasic {

/// The a*b grid {(i : j : 1)}, the complete intersection of a product of
/// a lines with a product of b lines.
PointSet grid_points(int a, int b, const Field& field);

/// The three coordinate points of P^2.
PointSet simplex_points(const Field& field);

/// `count` distinct seeded pseudo-random rational points of P^2, mostly
/// affine with small rational coordinates plus the occasional point at
/// infinity. Identical (count, seed, field) inputs give identical sets.
PointSet random_points(int count, unsigned long seed, const Field& field);

}  // namespace gbasic

#endif
