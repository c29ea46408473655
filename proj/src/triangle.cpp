#include "locus/triangle.hpp"

#include <algorithm>
#include <cmath>

#include "locus/errors.hpp"

namespace locus {

namespace {

double sine_sq_between(const GramSpace& space, const Vector& u, const Vector& v) {
  const double c = cos_angle(space, u, v);
  return std::max(0.0, 1.0 - c * c);
}

}  // namespace

double cosine_law_norm_sq(const GramSpace& space, const Vector& x, const Vector& y) {
  const double nx = norm(space, x);
  const double ny = norm(space, y);
  return nx * nx + ny * ny + 2.0 * nx * ny * cos_angle(space, x, y);
}

SineLawRatios sine_law_ratios(const GramSpace& space, const Vector& x, const Vector& y) {
  const Vector s = x + y;
  const double nx = norm(space, x);
  const double ny = norm(space, y);
  const double ns = norm(space, s);
  if (nx == 0.0 || ny == 0.0 || ns == 0.0) {
    throw Error(Errc::ZeroVector, "a triangle side has zero length");
  }

  const double sin_sq_opposite_x = sine_sq_between(space, y, s);
  const double sin_sq_opposite_y = sine_sq_between(space, x, s);
  const double sin_sq_opposite_s = sine_sq_between(space, x, y);
  if (std::min({sin_sq_opposite_x, sin_sq_opposite_y, sin_sq_opposite_s}) < kDegenerateSineSq) {
    throw Error(Errc::DegenerateTriangle, "sides are parallel");
  }

  return {nx / std::sqrt(sin_sq_opposite_x), ny / std::sqrt(sin_sq_opposite_y),
          ns / std::sqrt(sin_sq_opposite_s)};
}

double sum_length_sq(const GramSpace& space, const Vector& x, const Vector& y) {
  const double nx = norm(space, x);
  if (nx == 0.0) throw Error(Errc::ZeroVector, "x must be nonzero");
  const double ny = norm(space, y);
  const double xy = inner(space, x, y);
  const double along = nx * nx + xy;
  const double across = ny == 0.0 ? 0.0 : ny * ny * sine_sq_between(space, x, y);
  return across + along * along / (nx * nx);
}

SumLengthBounds sum_length_bounds(const GramSpace& space, const Vector& x, const Vector& y) {
  const double nx = norm(space, x);
  if (nx == 0.0) throw Error(Errc::ZeroVector, "x must be nonzero");
  const double ny = norm(space, y);
  const double along = nx * nx + inner(space, x, y);
  return {std::abs(along) / nx, std::sqrt(ny * ny + along * along / (nx * nx))};
}

}  // namespace locus
