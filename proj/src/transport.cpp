#include "locus/transport.hpp"

#include <cmath>

#include <fmt/format.h>

#include "locus/errors.hpp"
#include "locus/quadrature.hpp"

namespace locus {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_poly(const PolyIntegralOracle& o) {
  if (o.dim == 0) throw Error(Errc::InvalidArgument, "polynomial space dimension must be positive");
  if (!std::isfinite(o.a) || !std::isfinite(o.b) || !(o.a < o.b)) {
    throw Error(Errc::InvalidArgument, "integration interval must satisfy a < b");
  }
  if (!std::isfinite(o.scale) || !(o.scale > 0.0)) {
    throw Error(Errc::InvalidArgument, "integral scale must be positive");
  }
}

void check_trace(const MatrixTraceOracle& o) {
  if (o.rows == 0 || o.cols == 0) throw Error(Errc::InvalidArgument, "matrix shape must be positive");
}

double monomial(double x, std::size_t power) {
  double p = 1.0;
  for (std::size_t i = 0; i < power; ++i) p *= x;
  return p;
}

}  // namespace

std::size_t oracle_dim(const BasisOracle& oracle) {
  return std::visit(overloaded{
                        [](const TableOracle& o) { return o.table.size(); },
                        [](const PolyIntegralOracle& o) { return o.dim; },
                        [](const MatrixTraceOracle& o) { return o.rows * o.cols; },
                    },
                    oracle);
}

std::vector<std::string> oracle_basis_labels(const BasisOracle& oracle) {
  std::vector<std::string> labels;
  std::visit(overloaded{
                 [&](const TableOracle& o) {
                   for (std::size_t i = 0; i < o.table.size(); ++i)
                     labels.push_back(fmt::format("s{}", i + 1));
                 },
                 [&](const PolyIntegralOracle& o) {
                   for (std::size_t i = 0; i < o.dim; ++i) {
                     labels.push_back(i == 0 ? "1" : i == 1 ? "x" : fmt::format("x^{}", i));
                   }
                 },
                 [&](const MatrixTraceOracle& o) {
                   for (std::size_t r = 0; r < o.rows; ++r)
                     for (std::size_t c = 0; c < o.cols; ++c)
                       labels.push_back(fmt::format("E{}{}", r + 1, c + 1));
                 },
             },
             oracle);
  return labels;
}

GramSpace gram_from_basis(const BasisOracle& oracle) {
  const std::size_t n = oracle_dim(oracle);
  if (n == 0) throw Error(Errc::InvalidArgument, "oracle has dimension 0");
  SquareMatrix gram(n);
  std::visit(overloaded{
                 [&](const TableOracle& o) { gram = o.table; },
                 [&](const PolyIntegralOracle& o) {
                   check_poly(o);
                   for (std::size_t i = 0; i < n; ++i) {
                     for (std::size_t j = i; j < n; ++j) {
                       const auto rule = gauss_legendre(gauss_legendre_nodes_for_degree(i + j));
                       const double v =
                           o.scale * integrate(rule, o.a, o.b, [i, j](double x) {
                             return monomial(x, i) * monomial(x, j);
                           });
                       gram(i, j) = v;
                       gram(j, i) = v;
                     }
                   }
                 },
                 [&](const MatrixTraceOracle& o) {
                   check_trace(o);
                   for (std::size_t i = 0; i < n; ++i) {
                     for (std::size_t j = 0; j < n; ++j) {
                       std::vector<double> a(n, 0.0), b(n, 0.0);
                       a[i] = 1.0;
                       b[j] = 1.0;
                       gram(i, j) = source_inner(o, Vector(a), Vector(b));
                     }
                   }
                 },
             },
             oracle);
  return validate_gram(gram).with_labels(oracle_basis_labels(oracle));
}

double source_inner(const BasisOracle& oracle, const Vector& u, const Vector& v) {
  const std::size_t n = oracle_dim(oracle);
  if (u.size() != n || v.size() != n) {
    throw Error(Errc::DimensionMismatch,
                fmt::format("coordinates of size {} and {} for a {}-dimensional basis", u.size(),
                            v.size(), n));
  }
  return std::visit(
      overloaded{
          [&](const TableOracle& o) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i)
              for (std::size_t j = 0; j < n; ++j) s += u[i] * v[j] * o.table(i, j);
            return s;
          },
          [&](const PolyIntegralOracle& o) {
            check_poly(o);
            std::vector<double> product(2 * n - 1, 0.0);
            for (std::size_t i = 0; i < n; ++i)
              for (std::size_t j = 0; j < n; ++j) product[i + j] += u[i] * v[j];
            double s = 0.0;
            for (std::size_t k = 0; k < product.size(); ++k) {
              const double e = static_cast<double>(k + 1);
              s += product[k] * (std::pow(o.b, e) - std::pow(o.a, e)) / e;
            }
            return o.scale * s;
          },
          [&](const MatrixTraceOracle& o) {
            check_trace(o);
            // A, B are rows x cols, row-major; (A^T B) is cols x cols.
            auto at = [&](const Vector& m, std::size_t r, std::size_t c) {
              return m[r * o.cols + c];
            };
            double trace = 0.0;
            for (std::size_t d = 0; d < o.cols; ++d) {
              double entry = 0.0;
              for (std::size_t r = 0; r < o.rows; ++r) entry += at(u, r, d) * at(v, r, d);
              trace += entry;
            }
            return trace;
          },
      },
      oracle);
}

Vector poly_coords(std::span<const double> coefficients, std::size_t n) {
  if (coefficients.size() > n) {
    throw Error(Errc::DegreeOverflow,
                fmt::format("{} coefficients do not fit a {}-dimensional polynomial space",
                            coefficients.size(), n));
  }
  std::vector<double> coords(n, 0.0);
  for (std::size_t i = 0; i < coefficients.size(); ++i) coords[i] = coefficients[i];
  return Vector(std::move(coords));
}

TransportedLocus transport_locus(const BasisOracle& oracle, std::vector<Vector> foci,
                                 std::vector<double> alphas, double c) {
  GramSpace space = gram_from_basis(oracle);
  LocusSpec spec(std::move(foci), std::move(alphas), c);
  if (spec.dim() != space.dim()) {
    throw Error(Errc::DimensionMismatch,
                fmt::format("foci have {} coordinates, basis has {} elements", spec.dim(),
                            space.dim()));
  }
  return {std::move(space), std::move(spec)};
}

}  // namespace locus
