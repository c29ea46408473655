#include "locus/inner_space.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "locus/errors.hpp"

namespace locus {

namespace {

void require_same_size(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw Error(Errc::DimensionMismatch,
                fmt::format("vector sizes differ ({} vs {})", a.size(), b.size()));
  }
}

}  // namespace

Vector::Vector(std::vector<double> coords) : coords_(std::move(coords)) {
  for (double c : coords_) {
    if (!std::isfinite(c)) throw Error(Errc::InvalidArgument, "vector entry is not finite");
  }
}

Vector::Vector(std::initializer_list<double> coords) : Vector(std::vector<double>(coords)) {}

Vector Vector::zeros(std::size_t dim) { return Vector(std::vector<double>(dim, 0.0)); }

bool Vector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](double c) { return c == 0.0; });
}

Vector& Vector::operator+=(const Vector& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Vector& Vector::operator*=(double k) noexcept {
  for (double& c : coords_) c *= k;
  return *this;
}

SquareMatrix::SquareMatrix(std::size_t n, double fill) : n_(n), data_(n * n, fill) {}

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  SquareMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(Errc::DimensionMismatch,
                  fmt::format("matrix row {} has {} entries, expected {}", i, rows[i].size(),
                              rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

SquareMatrix SquareMatrix::identity(std::size_t n) {
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<std::vector<double>> SquareMatrix::rows() const {
  std::vector<std::vector<double>> out(n_, std::vector<double>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

GramSpace GramSpace::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != dim()) {
    throw Error(Errc::DimensionMismatch,
                fmt::format("{} basis labels for a {}-dimensional space", labels.size(), dim()));
  }
  GramSpace copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

void GramSpace::require_conforming(const Vector& v) const {
  if (v.size() != dim()) {
    throw Error(Errc::DimensionMismatch,
                fmt::format("vector has {} coordinates, space has dimension {}", v.size(), dim()));
  }
}

GramSpace validate_gram(const SquareMatrix& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) throw Error(Errc::InvalidArgument, "Gram matrix is empty");

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double e = matrix(i, j);
      if (!std::isfinite(e)) {
        throw Error(Errc::InvalidArgument, fmt::format("Gram entry ({},{}) is not finite", i, j));
      }
      scale = std::max(scale, std::abs(e));
    }
  }

  SquareMatrix sym(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double gap = std::abs(matrix(i, j) - matrix(j, i));
      if (gap > kSymmetryTolerance * scale) {
        throw Error(Errc::NotSymmetric,
                    fmt::format("entries ({},{}) and ({},{}) differ by {:.3g}", i, j, j, i, gap));
      }
      sym(i, j) = 0.5 * (matrix(i, j) + matrix(j, i));
    }
  }

  // Cholesky: L L^T = G, lower triangle only.
  SquareMatrix lower(n);
  for (std::size_t j = 0; j < n; ++j) {
    double pivot = sym(j, j);
    for (std::size_t k = 0; k < j; ++k) pivot -= lower(j, k) * lower(j, k);
    if (!(pivot > 0.0)) {
      throw Error(Errc::NotPositiveDefinite,
                  fmt::format("Cholesky pivot {} is {:.3g}", j, pivot));
    }
    lower(j, j) = std::sqrt(pivot);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = sym(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= lower(i, k) * lower(j, k);
      lower(i, j) = s / lower(j, j);
    }
  }

  return GramSpace(std::move(sym));
}

double inner(const GramSpace& space, const Vector& u, const Vector& v) {
  space.require_conforming(u);
  space.require_conforming(v);
  const SquareMatrix& g = space.gram();
  double total = 0.0;
  for (std::size_t i = 0; i < space.dim(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < space.dim(); ++j) row += g(i, j) * v[j];
    total += u[i] * row;
  }
  return total;
}

double norm(const GramSpace& space, const Vector& u) {
  // The quadratic form can round a hair below zero for tiny vectors.
  return std::sqrt(std::max(0.0, inner(space, u, u)));
}

double cos_angle(const GramSpace& space, const Vector& u, const Vector& v) {
  const double nu = norm(space, u);
  const double nv = norm(space, v);
  if (nu == 0.0 || nv == 0.0) throw Error(Errc::ZeroVector, "angle with a zero vector is undefined");
  return std::clamp(inner(space, u, v) / (nu * nv), -1.0, 1.0);
}

}  // namespace locus
