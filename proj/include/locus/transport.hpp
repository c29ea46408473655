#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "locus/inner_space.hpp"
#include "locus/locus_spec.hpp"

namespace locus {

/// Explicit table of basis inner products <s_i, s_j>.
struct TableOracle {
  SquareMatrix table;
};

/// Polynomials of degree < dim over the monomial basis 1, x, ..., x^(dim-1)
/// with <f, g> = scale * integral_a^b f g dx.
struct PolyIntegralOracle {
  double a = 0.0;
  double b = 1.0;
  double scale = 1.0;
  std::size_t dim = 1;
};

/// rows x cols real matrices over the row-major unit-matrix basis with
/// <A, B> = tr(A^T B).
struct MatrixTraceOracle {
  std::size_t rows = 1;
  std::size_t cols = 1;
};

using BasisOracle = std::variant<TableOracle, PolyIntegralOracle, MatrixTraceOracle>;

std::size_t oracle_dim(const BasisOracle& oracle);

/// Labels of the oracle's canonical ordered basis ("1", "x", "x^2" ... or
/// "E11", "E12" ...; "s1", "s2" ... for tables).
std::vector<std::string> oracle_basis_labels(const BasisOracle& oracle);

/// Gram matrix of the oracle's canonical basis, validated. Polynomial
/// entries use Gauss-Legendre with the fewest nodes exact for the entry's
/// degree. Throws NotPositiveDefinite for a degenerate oracle and
/// InvalidArgument for malformed parameters.
GramSpace gram_from_basis(const BasisOracle& oracle);

/// The source-space inner product of the elements with coordinates u and v,
/// computed without the Gram matrix: the polynomial product is integrated
/// through its antiderivative, matrices are multiplied and traced, and
/// tables are expanded as sum_ij u_i v_j <s_i, s_j>.
double source_inner(const BasisOracle& oracle, const Vector& u, const Vector& v);

/// [p]_basis for p = coefficients[0] + coefficients[1] x + ..., zero padded
/// to n. Throws DegreeOverflow if there are more than n coefficients.
Vector poly_coords(std::span<const double> coefficients, std::size_t n);

struct TransportedLocus {
  GramSpace space;
  LocusSpec spec;
};

/// Carries a locus given by focus coordinates in the oracle's basis into
/// coordinate space: the foci, coefficients and level are unchanged and the
/// inner product becomes the oracle's Gram form.
TransportedLocus transport_locus(const BasisOracle& oracle, std::vector<Vector> foci,
                                 std::vector<double> alphas, double c);

}  // namespace locus
