#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace locus {

/// Coordinates [x]_basis of a vector with respect to a space's ordered basis.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<double> coords);
  Vector(std::initializer_list<double> coords);

  static Vector zeros(std::size_t dim);

  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(double k) noexcept;

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(double k, Vector a) { return a *= k; }
  friend Vector operator-(Vector a) { return a *= -1.0; }
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> coords_;
};

/// Dense row-major square matrix; only what Gram handling needs.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0);

  /// Throws DimensionMismatch when the rows are ragged or not square.
  static SquareMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static SquareMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  std::vector<std::vector<double>> rows() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// A real inner product space of dimension n, encoded by the SPD Gram matrix
/// of its ordered basis: <u, v> = u^T G v on coordinate tuples.
///
/// Only validate_gram can build one, so every instance satisfies symmetry
/// and positive-definiteness.
class GramSpace {
 public:
  std::size_t dim() const noexcept { return gram_.size(); }
  const SquareMatrix& gram() const noexcept { return gram_; }
  const std::vector<std::string>& basis_labels() const noexcept { return labels_; }

  /// Copy of this space with basis labels attached (size must equal dim).
  GramSpace with_labels(std::vector<std::string> labels) const;

  /// Throws DimensionMismatch unless v has dim() coordinates.
  void require_conforming(const Vector& v) const;

 private:
  friend GramSpace validate_gram(const SquareMatrix& matrix);
  explicit GramSpace(SquareMatrix gram) : gram_(std::move(gram)) {}

  SquareMatrix gram_;
  std::vector<std::string> labels_;
};

/// Relative tolerance (against the largest |entry|) for accepting and
/// symmetrizing a nearly symmetric Gram matrix.
inline constexpr double kSymmetryTolerance = 1e-12;

/// Checks a candidate Gram matrix and returns the space it defines.
/// Entries must be finite (InvalidArgument). Asymmetry above
/// kSymmetryTolerance raises NotSymmetric; otherwise the matrix is replaced
/// by (G + G^T)/2. A Cholesky pivot <= 0 raises NotPositiveDefinite.
GramSpace validate_gram(const SquareMatrix& matrix);

double inner(const GramSpace& space, const Vector& u, const Vector& v);
double norm(const GramSpace& space, const Vector& u);

/// <u,v>/(|u||v|) clamped to [-1, 1]. Throws ZeroVector if either norm is 0.
double cos_angle(const GramSpace& space, const Vector& u, const Vector& v);

}  // namespace locus
