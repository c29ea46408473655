#include <doctest.h>

#include <cmath>

#include "locus/errors.hpp"
#include "locus/triangle.hpp"
#include "support/generators.hpp"

using namespace locus;

TEST_SUITE("triangle") {

TEST_CASE("cosine law") {
  const GramSpace e2 = validate_gram(SquareMatrix::identity(2));
  CHECK(cosine_law_norm_sq(e2, Vector{3, 0}, Vector{0, 4}) == doctest::Approx(25.0));
  CHECK(cosine_law_norm_sq(e2, Vector{1, 0}, Vector{-1, 0}) == doctest::Approx(0.0));
}

TEST_CASE("sine law on a 3-4-5 triangle") {
  const GramSpace e2 = validate_gram(SquareMatrix::identity(2));
  const SineLawRatios r = sine_law_ratios(e2, Vector{3, 0}, Vector{0, 4});
  // The angle between the legs sits opposite the hypotenuse: 5 / sin(90) = 5.
  CHECK(r.sum_side == doctest::Approx(5.0));
  CHECK(r.x_side == doctest::Approx(5.0));
  CHECK(r.y_side == doctest::Approx(5.0));
}

TEST_CASE("sine law rejects degenerate input") {
  const GramSpace e2 = validate_gram(SquareMatrix::identity(2));
  auto code = [&](const Vector& x, const Vector& y) {
    try {
      sine_law_ratios(e2, x, y);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidArgument;
  };
  CHECK(code(Vector{1, 0}, Vector{2, 0}) == Errc::DegenerateTriangle);
  CHECK(code(Vector{0, 0}, Vector{2, 0}) == Errc::ZeroVector);
  CHECK(code(Vector{1, 0}, Vector{-1, 0}) == Errc::ZeroVector);
}

TEST_CASE("sum length: zero increment and zero base") {
  const GramSpace e2 = validate_gram(SquareMatrix::identity(2));
  CHECK(sum_length_sq(e2, Vector{3, 4}, Vector{0, 0}) == doctest::Approx(25.0));
  CHECK_THROWS_AS(sum_length_sq(e2, Vector{0, 0}, Vector{1, 0}), Error);
  const SumLengthBounds b = sum_length_bounds(e2, Vector{1, 0}, Vector{0, 1});
  CHECK(b.lower == doctest::Approx(1.0));
  CHECK(b.upper == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("random instances: identities and bracket") {
  testing::Rng rng(23);
  int sine_checked = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    const std::size_t n = 2 + rng.index(5);
    const GramSpace space = testing::random_space(rng, n);
    const Vector x = testing::random_vector(rng, n, 2.0);
    const Vector y = testing::random_vector(rng, n, 2.0);
    const double direct = norm(space, x + y) * norm(space, x + y);
    CHECK(sum_length_sq(space, x, y) == doctest::Approx(direct).epsilon(1e-9));
    CHECK(cosine_law_norm_sq(space, x, y) == doctest::Approx(direct).epsilon(1e-9));
    const SumLengthBounds b = sum_length_bounds(space, x, y);
    CHECK(b.lower <= std::sqrt(direct) * (1 + 1e-12) + 1e-12);
    CHECK(std::sqrt(direct) <= b.upper * (1 + 1e-12) + 1e-12);

    const double cxy = cos_angle(space, x, y);
    if (1.0 - cxy * cxy < 1e-4) continue;
    const SineLawRatios r = sine_law_ratios(space, x, y);
    CHECK(r.x_side == doctest::Approx(r.sum_side).epsilon(1e-9));
    CHECK(r.y_side == doctest::Approx(r.sum_side).epsilon(1e-9));
    ++sine_checked;
  }
  CHECK(sine_checked > 4000);
}

}
