#pragma once

#include "locus/inner_space.hpp"

namespace locus {

/// |x|^2 + |y|^2 + 2|x||y|cos(theta), the cosine law for the side x + y.
/// Throws ZeroVector when either side is zero.
double cosine_law_norm_sq(const GramSpace& space, const Vector& x, const Vector& y);

/// Side-over-sine ratios of the triangle with sides x, y, x + y.
struct SineLawRatios {
  double x_side;    // |x| / sin(angle between y and x+y)
  double y_side;    // |y| / sin(angle between x and x+y)
  double sum_side;  // |x+y| / sin(angle between x and y)
};

/// Squared sines below this count as a collapsed (parallel) triangle.
inline constexpr double kDegenerateSineSq = 1e-14;

/// Throws ZeroVector if x, y or x + y is zero, DegenerateTriangle if any of
/// the three squared sines falls below kDegenerateSineSq.
SineLawRatios sine_law_ratios(const GramSpace& space, const Vector& x, const Vector& y);

/// |x+y|^2 = |y|^2 sin^2(theta) + (|x|^2 + <x,y>)^2 / |x|^2, theta the angle
/// between x and y. A zero y contributes nothing; a zero x throws ZeroVector.
double sum_length_sq(const GramSpace& space, const Vector& x, const Vector& y);

/// Bracket on |x+y| from bounding sin^2(theta) by 0 and 1.
struct SumLengthBounds {
  double lower;  // |(|x|^2 + <x,y>)| / |x|
  double upper;  // sqrt(|y|^2 + (|x|^2 + <x,y>)^2 / |x|^2)
};

/// Throws ZeroVector when x is zero.
SumLengthBounds sum_length_bounds(const GramSpace& space, const Vector& x, const Vector& y);

}  // namespace locus
