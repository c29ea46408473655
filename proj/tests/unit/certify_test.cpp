#include <doctest.h>

#include <cmath>

#include "locus/certify.hpp"
#include "locus/errors.hpp"
#include "support/generators.hpp"

using namespace locus;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no locus::Error thrown");
  return Errc::InvalidArgument;
}

const GramSpace& plane() {
  static const GramSpace e2 = validate_gram(SquareMatrix::identity(2));
  return e2;
}

double dot(const SquareMatrix& g, const Vector& u, const Vector& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s += u[i] * g(i, j) * v[j];
  return s;
}

// Reference conditions for the add-vector theorem from the raw quadratic
// form: weighted sums of the projection and hypotenuse estimates.
struct Expected {
  double c1, c2, c3, c4;
};

Expected add_vector_conditions(const GramSpace& space, const LocusSpec& spec, const Vector& z,
                               const Vector& y) {
  const SquareMatrix& g = space.gram();
  double lo = 0.0;
  double hi = 0.0;
  double ny = std::sqrt(dot(g, y, y));
  for (std::size_t i = 0; i < spec.focus_count(); ++i) {
    const Vector a = z - spec.foci()[i];
    const double na2 = dot(g, a, a);
    const double t = na2 + dot(g, a, y);
    const double proj = std::abs(t) / std::sqrt(na2);
    const double hyp = std::sqrt(ny * ny + t * t / na2);
    const double al = spec.alphas()[i];
    lo += al > 0 ? al * proj : al * hyp;
    hi += al > 0 ? al * hyp : al * proj;
  }
  double lead = 0.0;
  for (double al : spec.alphas()) lead += al * ny;
  return {spec.c() + lead - lo, spec.c() + lead - hi, lead - spec.c() + lo, lead - spec.c() + hi};
}

}  // namespace

TEST_SUITE("certify") {

TEST_CASE("estimates bracket the true distance") {
  const LocusSpec spec({Vector{4, 0}, Vector{-4, 0}}, {1.0, 1.0}, 10.0);
  const Vector z{0, 3};
  const Vector y{1, 1};
  const DeltaEstimates est = delta_estimates(plane(), spec, z, y);
  REQUIRE(est.per_focus.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    const double d = norm(plane(), z + y - spec.foci()[i]);
    CHECK(est.per_focus[i].proj <= d + 1e-12);
    CHECK(d <= est.per_focus[i].hyp + 1e-12);
  }
  // z - x_1 = (-4, 3), y = (1, 1): 25 - 1 = 24 over 5.
  CHECK(est.per_focus[0].proj == doctest::Approx(24.0 / 5.0));
  CHECK(est.per_focus[0].hyp == doctest::Approx(std::sqrt(2.0 + 24.0 * 24.0 / 25.0)));
}

TEST_CASE("add-vector conditions match the reference derivation") {
  testing::Rng rng(31);
  int checked = 0;
  while (checked < 200) {
    const std::size_t n = 2 + rng.index(3);
    const GramSpace space = testing::random_space(rng, n);
    const LocusSpec spec = testing::random_locus(rng, space, 1 + rng.index(4), true);
    auto z = testing::random_member(rng, space, spec);
    if (!z) continue;
    const Vector y = testing::random_vector(rng, n, 2.0);
    const auto certs = certify_add_vector(space, spec, *z, y);
    const Expected e = add_vector_conditions(space, spec, *z, y);
    REQUIRE(certs.size() == 4);
    const double want[] = {e.c1, e.c2, e.c3, e.c4};
    for (int k = 0; k < 4; ++k) {
      CHECK(certs[k].case_id == k + 1);
      CHECK(certs[k].theorem == Theorem::AddVector);
      CHECK(certs[k].condition_value ==
            doctest::Approx(want[k]).epsilon(1e-9).scale(1.0 + std::abs(spec.c())));
    }
    CHECK(certs[0].fired == (certs[0].condition_value < 0));
    CHECK(certs[1].fired == (certs[1].condition_value > 0));
    CHECK(certs[2].fired == (certs[2].condition_value > 0));
    CHECK(certs[3].fired == (certs[3].condition_value < 0));
    ++checked;
  }
}

TEST_CASE("zero-sum locus: adding a vector keeps the reference level") {
  const LocusSpec spec({Vector{2, 0}, Vector{-2, 0}}, {1.0, -1.0}, 2.0);
  const auto certs = certify_add_vector(plane(), spec, Vector{-2, -3}, Vector{0.5, 0.25});
  CHECK(certs[0].bound == doctest::Approx(2.0));
  CHECK(certs[1].bound == doctest::Approx(2.0));
  CHECK(certs[2].bound == doctest::Approx(2.0));
}

TEST_CASE("per-focus increments reduce to add-members") {
  const GramSpace space = validate_gram(SquareMatrix::identity(3));
  const LocusSpec spec({Vector{2, 3, -1}, Vector{-1, 3, -4}, Vector{0, 0, 3}}, {1, 1, 1}, 15.0);
  const Vector v{3.8945, 1, -2};
  const Vector w{1, 2, -5.001};
  std::vector<Vector> ys;
  for (const Vector& f : spec.foci()) ys.push_back(w - f);
  const auto general = certify_add_vector_per_focus(space, spec, v, ys, {.member_tol = 5e-3});
  const auto members = certify_add_members(space, spec, v, w, {.member_tol = 5e-3});
  // With |w - x_i| summing to c, the general lead is c +- residual.
  const double residual = eval_g(space, spec, w) - spec.c();
  CHECK(general[1].condition_value ==
        doctest::Approx(members[1].condition_value + residual).epsilon(1e-12));
  CHECK(eval_g(space, spec.alphas(), general[1].composite_foci, general[1].composite_point) ==
        doctest::Approx(eval_g(space, spec.alphas(), members[1].composite_foci,
                               members[1].composite_point)));
}

TEST_CASE("add-members case 4 is flagged and both readings are available") {
  const GramSpace space = validate_gram(SquareMatrix::identity(3));
  const LocusSpec spec({Vector{2, 3, -1}, Vector{-1, 3, -4}, Vector{0, 0, 3}}, {1, 1, 1}, 15.0);
  const auto certs = certify_add_members(space, spec, Vector{3.8945, 1, -2},
                                         Vector{1, 2, -5.001}, {.member_tol = 5e-3});
  REQUIRE(certs.size() == 4);
  CHECK(certs[3].suspect_direction);
  CHECK(certs[3].direction == Direction::Geq);
  CHECK(symmetric_reading(certs[3]).direction == Direction::Leq);
  CHECK_FALSE(symmetric_reading(certs[3]).suspect_direction);
  CHECK(certs[1].fired);
  CHECK(certs[1].direction == Direction::Leq);
  CHECK(certs[1].bound == 30.0);
  CHECK(audit_certificate(space, spec, certs[1]));
  for (const Vector& f : certs[1].composite_foci) CHECK(f.size() == 3);
  CHECK(certs[1].composite_foci[2] == Vector{0, 0, 6});
}

TEST_CASE("certificate input errors") {
  const LocusSpec spec({Vector{4, 0}, Vector{-4, 0}}, {1.0, 1.0}, 10.0);
  const Vector on{0, 3};
  CHECK(code_of([&] { certify_add_vector(plane(), spec, Vector{4, 0}, Vector{1, 0}); }) ==
        Errc::FocusCoincidence);
  CHECK(code_of([&] { certify_add_vector(plane(), spec, Vector{0, 0}, Vector{1, 0}); }) ==
        Errc::NotAMember);
  CHECK(code_of([&] { certify_add_members(plane(), spec, on, Vector{0, 0}); }) ==
        Errc::NotAMember);
  CHECK(code_of([&] { certify_linear_combo(plane(), spec, on, on, -1.0, 1.0); }) ==
        Errc::NegativeCoefficient);
  CHECK(code_of([&] { certify_multi_combo(plane(), spec, {on, on}, {1.0, 0.0}); }) ==
        Errc::NonPositiveCoefficient);
  CHECK(code_of([&] { certify_add_vector(plane(), spec, Vector{0, 3, 1}, Vector{1, 0, 0}); }) ==
        Errc::DimensionMismatch);
}

TEST_CASE("linear combination with a zero coefficient is exact on that side") {
  const LocusSpec spec({Vector{4, 0}, Vector{-4, 0}}, {1.0, 1.0}, 10.0);
  const Vector v{5, 0};
  const Vector w{0, 3};
  const auto certs = certify_linear_combo(plane(), spec, v, w, 0.0, 2.0);
  // 0*v + 2*w against foci 2 x_i: g = 2c exactly, so L = U = 20.
  CHECK(certs[0].condition_value == doctest::Approx(0.0).scale(20));
  CHECK(certs[1].condition_value == doctest::Approx(0.0).scale(20));
  // v may sit on a focus when its weight is zero.
  const LocusSpec through({Vector{0, 3}, Vector{0, -3}}, {1.0, 1.0}, 6.0);
  CHECK_NOTHROW(certify_linear_combo(plane(), through, Vector{0, 3}, Vector{0, -3}, 0.0, 1.0));
}

TEST_CASE("linear combination with gamma = beta = 1 is add-members") {
  const GramSpace space = validate_gram(SquareMatrix::identity(3));
  const LocusSpec spec({Vector{2, 3, -1}, Vector{-1, 3, -4}, Vector{0, 0, 3}}, {1, 1, 1}, 15.0);
  const Vector v{3.8945, 1, -2};
  const Vector w{1, 2, -5.001};
  const auto a = certify_add_members(space, spec, v, w, {.member_tol = 5e-3});
  const auto b = certify_linear_combo(space, spec, v, w, 1.0, 1.0, {.member_tol = 5e-3});
  for (int k = 0; k < 4; ++k) CHECK(a[k].condition_value == doctest::Approx(b[k].condition_value));
}

TEST_CASE("multi-combination estimates") {
  testing::Rng rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng.index(4);
    const GramSpace space = testing::random_space(rng, n);
    const std::size_t m = 1 + rng.index(5);
    std::vector<Vector> vs;
    std::vector<double> betas;
    for (std::size_t j = 0; j < m; ++j) {
      vs.push_back(testing::random_vector(rng, n, 3.0));
      betas.push_back(rng.uniform(0.1, 3.0));
    }
    const Vector focus = testing::random_vector(rng, n, 3.0);
    Vector sum = Vector::zeros(n);
    for (std::size_t j = 0; j < m; ++j) sum += betas[j] * (vs[j] - focus);
    const double exact = norm(space, sum);
    const FocusEstimate e = multi_combo_estimate(space, vs, betas, focus);
    CHECK(e.proj <= exact * (1 + 1e-12) + 1e-12);
    CHECK(exact <= e.hyp * (1 + 1e-12) + 1e-12);
    CHECK(multi_combo_norm_sq_expansion(space, vs, betas, focus) ==
          doctest::Approx(exact * exact).epsilon(1e-9).scale(1.0));
    if (m == 2) {
      const FocusEstimate pair_est = [&] {
        const GramSpace& s = space;
        const Vector a = betas[0] * (vs[0] - focus);
        const Vector y = betas[1] * (vs[1] - focus);
        const double na = norm(s, a);
        const double t = na * na + inner(s, a, y);
        return FocusEstimate{std::abs(t) / na, std::sqrt(inner(s, y, y) + t * t / (na * na)), t < 0};
      }();
      CHECK(e.proj == doctest::Approx(pair_est.proj));
      CHECK(e.hyp == doctest::Approx(pair_est.hyp));
    }
  }
}

TEST_CASE("multi-combination: a vanishing leading term is rejected") {
  const Vector f{1, 1};
  try {
    multi_combo_estimate(plane(), {f, Vector{2, 0}, Vector{0, 2}}, {1.0, 1.0, 1.0}, f);
    FAIL("expected ZeroTailVector");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroTailVector);
  }
}

TEST_CASE("multi-combination emits cases 1 and 2") {
  const LocusSpec spec({Vector{4, 0}, Vector{-4, 0}}, {1.0, 1.0}, 10.0);
  const auto certs = certify_multi_combo(plane(), spec, {Vector{0, 3}, Vector{5, 0}, Vector{0, -3}},
                                         {1.0, 2.0, 0.5});
  REQUIRE(certs.size() == 2);
  CHECK(certs[0].theorem == Theorem::MultiCombo);
  CHECK(certs[0].bound == doctest::Approx(35.0));
  CHECK(certs[0].composite_point == Vector{10, 1.5});
  for (const Certificate& c : certs) {
    if (c.fired) CHECK(audit_certificate(plane(), spec, c));
  }
}

}
