#include "locus/example_checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "locus/certify.hpp"
#include "locus/errors.hpp"
#include "locus/trace.hpp"
#include "locus/transport.hpp"

namespace locus {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

CheckResult near(std::string id, std::string what, double measured, double expected, double tol) {
  return {std::move(id), std::move(what), measured, expected, tol,
          std::abs(measured - expected) <= tol};
}

CheckResult at_most(std::string id, std::string what, double measured, double limit) {
  return {std::move(id), std::move(what), measured, limit, 0.0, measured <= limit};
}

CheckResult at_least(std::string id, std::string what, double measured, double limit) {
  return {std::move(id), std::move(what), measured, limit, 0.0, measured >= limit};
}

CheckResult flag(std::string id, std::string what, bool ok) {
  return {std::move(id), std::move(what), ok ? 1.0 : 0.0, 1.0, 0.0, ok};
}

const Certificate& case_of(const std::vector<Certificate>& certs, int case_id) {
  for (const Certificate& c : certs) {
    if (c.case_id == case_id) return c;
  }
  throw Error(Errc::InvalidArgument, "certificate case missing");
}

double max_matrix_diff(const SquareMatrix& a, const SquareMatrix& b, bool relative) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      double d = std::abs(a(i, j) - b(i, j));
      if (relative && b(i, j) != 0.0) d /= std::abs(b(i, j));
      worst = std::max(worst, d);
    }
  }
  return worst;
}

void quadratic_polynomials(std::vector<CheckResult>& out) {
  const GramSpace space = gram_from_basis(PolyIntegralOracle{0.0, 1.0, 1.0, 3});
  const Vector x{0.0, 1.0, 0.0};
  const LocusSpec spec({-1.0 * x, x}, {1.0, -1.0}, 0.5);
  const Vector z{std::sqrt(65.0) / 12.0 - 13.0 / 6.0, 3.0, 0.0};

  const auto start = Clock::now();
  const double g = eval_g(space, spec, z);
  const double elapsed = seconds_since(start);
  out.push_back(near("1", "P2 member: g(z)", g, 0.5, 1e-6));
  out.push_back(at_most("1t", "P2 member: evaluation seconds", elapsed, 1e-3));

  const Vector y{0.0, 0.0, 1.0};
  out.push_back(near("2a", "P2 add: <z+x, x^2>", inner(space, z + x, y), 0.501, 1e-3));
  out.push_back(near("2b", "P2 add: <z-x, x^2>", inner(space, z - x, y), 0.002, 1e-3));
  const auto certs = certify_add_vector(space, spec, z, y);
  out.push_back(near("2c", "P2 add: case-1 condition", case_of(certs, 1).condition_value,
                     -0.2990, 5e-3));
  const double direct = eval_g(space, spec, z + y);
  out.push_back(near("2d", "P2 add: direct g(z+x^2)", direct, 0.7868, 1e-3));
  out.push_back(at_least("2e", "P2 add: g(z+x^2) >= 1/2", direct, 0.5));
}

void real_three_space(std::vector<CheckResult>& out) {
  const GramSpace space = validate_gram(SquareMatrix::identity(3));
  const LocusSpec spec({Vector{2.0, 3.0, -1.0}, Vector{-1.0, 3.0, -4.0}, Vector{0.0, 0.0, 3.0}},
                       {1.0, 1.0, 1.0}, 15.0);
  const Vector v{3.8945, 1.0, -2.0};
  const Vector w{1.0, 2.0, -5.001};
  const double expected[] = {4.1065, 9.787, 45.8995};
  for (std::size_t i = 0; i < 3; ++i) {
    const Vector& f = spec.foci()[i];
    out.push_back(near("3" + std::string(1, static_cast<char>('a' + i)),
                       "R3 members: <v-x" + std::to_string(i + 1) + ", w-x" +
                           std::to_string(i + 1) + ">",
                       inner(space, v - f, w - f), expected[i], 5e-3));
  }
  const auto certs = certify_add_members(space, spec, v, w, {.member_tol = 5e-3});
  const Certificate& c2 = case_of(certs, 2);
  out.push_back(near("3d", "R3 members: case-2 condition", c2.condition_value, 0.2449, 5e-2));
  const double direct = eval_g(space, spec.alphas(), c2.composite_foci, c2.composite_point);
  out.push_back(near("3e", "R3 members: direct composite value", direct, 27.6970, 1e-2));
  out.push_back(at_most("3f", "R3 members: composite value <= 30", direct, 30.0));
}

void linear_polynomials(std::vector<CheckResult>& out) {
  const double pi = std::numbers::pi;
  const GramSpace space =
      validate_gram(SquareMatrix::from_rows({{1.0, pi}, {pi, 4.0 * pi * pi / 3.0}}));
  const LocusSpec spec({Vector{0.0, 1.0}, Vector{0.0, -2.0}}, {2.0, -1.0}, 4.0);
  // Coordinates are (constant, slope).
  const Vector v{-19.3545, 7.9};
  const Vector w{7.9104, 3.0};
  out.push_back(near("4a", "P1 combo: g(7.9x - 19.3545)", eval_g(space, spec, v), 4.0, 5e-3));
  out.push_back(near("4b", "P1 combo: g(3x + 7.9104)", eval_g(space, spec, w), 4.0, 5e-3));
  const double gamma = 2.0;
  const double beta = 3.0;
  const double expected[] = {470.1877, 2641.7982};
  for (std::size_t i = 0; i < 2; ++i) {
    const Vector& f = spec.foci()[i];
    out.push_back(near(i == 0 ? "4c" : "4d",
                       "P1 combo: <2(v-x" + std::to_string(i + 1) + "), 3(w-x" +
                           std::to_string(i + 1) + ")>",
                       inner(space, gamma * (v - f), beta * (w - f)), expected[i], 0.5));
  }
  const auto certs = certify_linear_combo(space, spec, v, w, gamma, beta, {.member_tol = 5e-3});
  const Certificate& c2 = case_of(certs, 2);
  out.push_back(near("4e", "P1 combo: case-2 condition", c2.condition_value, 0.1973, 5e-2));
  const double direct = eval_g(space, spec.alphas(), c2.composite_foci, c2.composite_point);
  out.push_back(near("4f", "P1 combo: direct composite value", direct, 5.1431, 1e-2));
  out.push_back(at_most("4g", "P1 combo: composite value <= 20", direct, 20.0));
}

void transported_grams(std::vector<CheckResult>& out) {
  const double pi = std::numbers::pi;
  const GramSpace unit = gram_from_basis(PolyIntegralOracle{0.0, 1.0, 1.0, 2});
  out.push_back(at_most("5a", "Gram of 1, x on [0,1]: max abs error",
                        max_matrix_diff(unit.gram(),
                                        SquareMatrix::from_rows({{1.0, 0.5}, {0.5, 1.0 / 3.0}}),
                                        false),
                        1e-12));
  const GramSpace circle = gram_from_basis(PolyIntegralOracle{0.0, 2.0 * pi, 0.5 / pi, 2});
  out.push_back(at_most(
      "5b", "Gram of 1, x on [0,2pi] scaled 1/2pi: max rel error",
      max_matrix_diff(circle.gram(),
                      SquareMatrix::from_rows({{1.0, pi}, {pi, 4.0 * pi * pi / 3.0}}), true),
      1e-12));
  const GramSpace matrices = gram_from_basis(MatrixTraceOracle{2, 1});
  out.push_back(at_most("5c", "Gram of 2x1 matrices: max abs error",
                        max_matrix_diff(matrices.gram(), SquareMatrix::identity(2), false), 0.0));
}

void hyperbola_point(std::vector<CheckResult>& out) {
  const GramSpace space = validate_gram(SquareMatrix::identity(2));
  const LocusSpec spec({Vector{2.0, 0.0}, Vector{-2.0, 0.0}}, {1.0, -1.0}, 2.0);
  out.push_back(
      near("6", "hyperbola: g(-2,-3)", eval_g(space, spec, Vector{-2.0, -3.0}), 2.0, 1e-12));
}

void ellipse_trace(std::vector<CheckResult>& out) {
  const GramSpace space = validate_gram(SquareMatrix::identity(2));
  const LocusSpec spec({Vector{4.0, 0.0}, Vector{-4.0, 0.0}}, {1.0, 1.0}, 10.0);
  const Window window{-8.0, 8.0, -6.0, 6.0, 512, 512};
  const auto start = Clock::now();
  const auto polylines = trace_locus(space, spec, window);
  const double elapsed = seconds_since(start);
  const double diag = window.cell_diagonal();
  const double targets[][2] = {{5.0, 0.0}, {-5.0, 0.0}, {0.0, 3.0}, {0.0, -3.0}};
  const char* ids[] = {"7a", "7b", "7c", "7d"};
  for (std::size_t k = 0; k < 4; ++k) {
    const double d = distance_to_polylines(polylines, targets[k][0], targets[k][1]);
    out.push_back(at_most(ids[k],
                          "ellipse: distance to (" + std::to_string(static_cast<int>(targets[k][0])) +
                              "," + std::to_string(static_cast<int>(targets[k][1])) + ")",
                          d, diag));
  }
  const bool closed = !polylines.empty() &&
                      std::all_of(polylines.begin(), polylines.end(),
                                  [](const Polyline& p) { return p.closed; });
  out.push_back(flag("7e", "ellipse: traced curve closed", closed));
  out.push_back(at_most("7t", "ellipse: trace seconds", elapsed, 2.0));
}

}  // namespace

double distance_to_polylines(const std::vector<Polyline>& polylines, double px, double py) {
  double best = std::numeric_limits<double>::infinity();
  auto segment = [&](const Point2& a, const Point2& b) {
    const double ex = b.x - a.x;
    const double ey = b.y - a.y;
    const double len_sq = ex * ex + ey * ey;
    double t = len_sq > 0.0 ? ((px - a.x) * ex + (py - a.y) * ey) / len_sq : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    best = std::min(best, std::hypot(a.x + t * ex - px, a.y + t * ey - py));
  };
  for (const Polyline& p : polylines) {
    if (p.points.size() == 1) segment(p.points[0], p.points[0]);
    for (std::size_t i = 1; i < p.points.size(); ++i) segment(p.points[i - 1], p.points[i]);
    if (p.closed && p.points.size() > 2) segment(p.points.back(), p.points.front());
  }
  return best;
}

std::vector<CheckResult> run_example_checks() {
  std::vector<CheckResult> out;
  const std::pair<const char*, std::function<void(std::vector<CheckResult>&)>> groups[] = {
      {"1", quadratic_polynomials}, {"3", real_three_space}, {"4", linear_polynomials},
      {"5", transported_grams},     {"6", hyperbola_point},  {"7", ellipse_trace}};
  for (const auto& [id, run] : groups) {
    try {
      run(out);
    } catch (const std::exception& e) {
      out.push_back({id, std::string("error: ") + e.what(), 0.0, 0.0, 0.0, false});
    }
  }
  return out;
}

}  // namespace locus
