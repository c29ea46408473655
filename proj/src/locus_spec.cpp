#include "locus/locus_spec.hpp"

#include <cmath>

#include <fmt/format.h>

#include "locus/errors.hpp"

namespace locus {

LocusSpec::LocusSpec(std::vector<Vector> foci, std::vector<double> alphas, double c)
    : foci_(std::move(foci)), alphas_(std::move(alphas)), c_(c) {
  if (foci_.empty()) throw Error(Errc::InvalidArgument, "a locus needs at least one focus");
  if (foci_.size() != alphas_.size()) {
    throw Error(Errc::InvalidArgument,
                fmt::format("{} foci but {} coefficients", foci_.size(), alphas_.size()));
  }
  for (const Vector& f : foci_) {
    if (f.size() != foci_.front().size() || f.size() == 0) {
      throw Error(Errc::InvalidArgument, "foci must share one nonzero dimension");
    }
  }
  for (std::size_t i = 0; i < alphas_.size(); ++i) {
    if (!std::isfinite(alphas_[i])) throw Error(Errc::InvalidArgument, "coefficient is not finite");
    if (alphas_[i] == 0.0) {
      throw Error(Errc::ZeroCoefficient, fmt::format("coefficient {} is zero", i));
    }
  }
  if (!std::isfinite(c_)) throw Error(Errc::InvalidArgument, "level constant is not finite");
}

LocusSpec LocusSpec::with_foci(std::vector<Vector> foci) const {
  return LocusSpec(std::move(foci), alphas_, c_);
}

LocusSpec LocusSpec::with_c(double c) const { return LocusSpec(foci_, alphas_, c); }

double eval_g(const GramSpace& space, const std::vector<double>& alphas,
              const std::vector<Vector>& foci, const Vector& x) {
  space.require_conforming(x);
  if (alphas.size() != foci.size()) {
    throw Error(Errc::InvalidArgument, "coefficient and focus counts differ");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < foci.size(); ++i) total += alphas[i] * norm(space, x - foci[i]);
  return total;
}

double eval_g(const GramSpace& space, const LocusSpec& spec, const Vector& x) {
  return eval_g(space, spec.alphas(), spec.foci(), x);
}

bool is_member(const GramSpace& space, const LocusSpec& spec, const Vector& x, double tol) {
  if (!(tol > 0.0)) throw Error(Errc::InvalidArgument, "membership tolerance must be positive");
  return std::abs(eval_g(space, spec, x) - spec.c()) <= tol;
}

double alpha_abs_sum(const LocusSpec& spec) noexcept {
  double s = 0.0;
  for (double a : spec.alphas()) s += std::abs(a);
  return s;
}

double alpha_sum(const LocusSpec& spec) noexcept {
  double s = 0.0;
  for (double a : spec.alphas()) s += a;
  return s;
}

bool alpha_sum_is_zero(const LocusSpec& spec) noexcept {
  return std::abs(alpha_sum(spec)) <= kAlphaSumZeroTolerance;
}

LocusSpec translate_foci(const LocusSpec& spec, const Vector& z) {
  if (z.size() != spec.dim()) {
    throw Error(Errc::DimensionMismatch,
                fmt::format("translation has {} coordinates, foci have {}", z.size(), spec.dim()));
  }
  std::vector<Vector> moved;
  moved.reserve(spec.focus_count());
  for (const Vector& f : spec.foci()) moved.push_back(f - z);
  return spec.with_foci(std::move(moved));
}

std::vector<double> solve_on_ray(const GramSpace& space, const LocusSpec& spec,
                                 const Vector& origin, const Vector& direction, double t_min,
                                 double t_max, const RaySolveOptions& options) {
  space.require_conforming(origin);
  space.require_conforming(direction);
  if (direction.is_zero()) throw Error(Errc::ZeroDirection, "ray direction is the zero vector");
  if (!(t_min < t_max)) throw Error(Errc::InvalidArgument, "t_min must be below t_max");
  if (!(options.tol > 0.0)) throw Error(Errc::InvalidArgument, "tolerance must be positive");
  if (options.samples < 2) throw Error(Errc::InvalidArgument, "at least two samples are needed");

  auto residual = [&](double t) {
    return eval_g(space, spec, origin + t * direction) - spec.c();
  };

  const double span = t_max - t_min;
  const double step = span / static_cast<double>(options.samples - 1);
  const double min_width = 1e-14 * span;

  std::vector<double> roots;
  auto push_root = [&](double t) {
    if (roots.empty() || t - roots.back() > step) {
      roots.push_back(t);
    }
  };

  double t_prev = t_min;
  double r_prev = residual(t_prev);
  if (r_prev == 0.0) push_root(t_prev);
  for (std::size_t k = 1; k < options.samples; ++k) {
    const double t_cur = k + 1 == options.samples ? t_max : t_min + step * static_cast<double>(k);
    const double r_cur = residual(t_cur);
    if (r_cur == 0.0) {
      push_root(t_cur);
    } else if ((r_prev < 0.0 && r_cur > 0.0) || (r_prev > 0.0 && r_cur < 0.0)) {
      double lo = t_prev, hi = t_cur, r_lo = r_prev;
      double mid = 0.5 * (lo + hi);
      for (;;) {
        mid = 0.5 * (lo + hi);
        const double r_mid = residual(mid);
        if (std::abs(r_mid) <= options.tol || hi - lo <= min_width) break;
        if (mid <= lo || mid >= hi) break;  // bracket below one ulp
        if ((r_mid < 0.0) == (r_lo < 0.0)) {
          lo = mid;
          r_lo = r_mid;
        } else {
          hi = mid;
        }
      }
      push_root(mid);
    }
    t_prev = t_cur;
    r_prev = r_cur;
  }
  return roots;
}

}  // namespace locus
