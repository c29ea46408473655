#pragma once

#include <cstddef>
#include <vector>

#include "locus/inner_space.hpp"

namespace locus {

/// The level set { x : sum_i alpha_i |x - x_i| = c }.
class LocusSpec {
 public:
  /// Throws InvalidArgument for an empty focus list, mismatched lengths,
  /// foci of differing dimension or non-finite numbers; ZeroCoefficient
  /// when any alpha is 0.
  LocusSpec(std::vector<Vector> foci, std::vector<double> alphas, double c);

  const std::vector<Vector>& foci() const noexcept { return foci_; }
  const std::vector<double>& alphas() const noexcept { return alphas_; }
  double c() const noexcept { return c_; }
  std::size_t focus_count() const noexcept { return foci_.size(); }
  std::size_t dim() const noexcept { return foci_.front().size(); }

  /// Same alphas, foci replaced.
  LocusSpec with_foci(std::vector<Vector> foci) const;
  /// Same foci and alphas, new level constant.
  LocusSpec with_c(double c) const;

 private:
  std::vector<Vector> foci_;
  std::vector<double> alphas_;
  double c_;
};

/// g(x) = sum_i alpha_i |x - x_i|. A point sitting on a focus is fine.
double eval_g(const GramSpace& space, const LocusSpec& spec, const Vector& x);

/// g evaluated against an explicit focus list (used for composite foci).
double eval_g(const GramSpace& space, const std::vector<double>& alphas,
              const std::vector<Vector>& foci, const Vector& x);

/// |g(x) - c| <= tol. tol must be positive.
bool is_member(const GramSpace& space, const LocusSpec& spec, const Vector& x, double tol);

/// Sum of |alpha_i|; the Lipschitz constant of g in the space's own norm.
double alpha_abs_sum(const LocusSpec& spec) noexcept;

double alpha_sum(const LocusSpec& spec) noexcept;

inline constexpr double kAlphaSumZeroTolerance = 1e-12;
bool alpha_sum_is_zero(const LocusSpec& spec) noexcept;

/// Foci x_i -> x_i - z. For z on the locus and a zero alpha sum, y solves
/// the translated equation exactly when z + y lies on the original locus.
LocusSpec translate_foci(const LocusSpec& spec, const Vector& z);

struct RaySolveOptions {
  std::size_t samples = 1024;
  double tol = 1e-12;
};

/// Parameters t in [t_min, t_max] where g(origin + t*direction) - c changes
/// sign between neighbouring samples of a uniform grid, each refined by
/// bisection. Even-order roots (tangencies) produce no sign change and are
/// not reported. Results are ascending and deduplicated.
///
/// Throws ZeroDirection for a zero direction, InvalidArgument when
/// t_min >= t_max, tol <= 0 or fewer than 2 samples.
std::vector<double> solve_on_ray(const GramSpace& space, const LocusSpec& spec,
                                 const Vector& origin, const Vector& direction, double t_min,
                                 double t_max, const RaySolveOptions& options = {});

}  // namespace locus
