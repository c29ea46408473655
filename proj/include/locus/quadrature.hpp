#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace locus {

/// Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree
/// 2*nodes.size() - 1.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes from Newton iteration on P_k, converged to 1e-15.
QuadratureRule gauss_legendre(std::size_t k);

/// Fewest Gauss-Legendre nodes integrating degree `degree` exactly.
std::size_t gauss_legendre_nodes_for_degree(std::size_t degree) noexcept;

/// Integral of f over [a, b] with the given rule mapped affinely.
double integrate(const QuadratureRule& rule, double a, double b,
                 const std::function<double(double)>& f);

}  // namespace locus
