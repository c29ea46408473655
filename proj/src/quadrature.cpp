#include "locus/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "locus/errors.hpp"

namespace locus {

namespace {

// P_k(x) and P_k'(x) by the three-term recurrence.
std::pair<double, double> legendre_with_derivative(std::size_t k, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (std::size_t n = 2; n <= k; ++n) {
    const double pn = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / static_cast<double>(n);
    p0 = p1;
    p1 = pn;
  }
  const double dp = static_cast<double>(k) * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

QuadratureRule gauss_legendre(std::size_t k) {
  if (k == 0) throw Error(Errc::InvalidArgument, "a quadrature rule needs at least one node");
  QuadratureRule rule;
  rule.nodes.resize(k);
  rule.weights.resize(k);
  if (k == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = 2.0;
    return rule;
  }

  // Roots are symmetric; solve for the upper half and mirror.
  const std::size_t half = (k + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(k) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      auto [p, d] = legendre_with_derivative(k, x);
      dp = d;
      const double dx = p / d;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    dp = legendre_with_derivative(k, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[k - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[k - 1 - i] = w;
  }
  if (k % 2 == 1) rule.nodes[k / 2] = 0.0;
  return rule;
}

std::size_t gauss_legendre_nodes_for_degree(std::size_t degree) noexcept {
  // k nodes are exact through degree 2k - 1.
  return degree / 2 + 1;
}

double integrate(const QuadratureRule& rule, double a, double b,
                 const std::function<double(double)>& f) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

}  // namespace locus
