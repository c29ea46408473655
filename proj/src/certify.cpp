#include "locus/certify.hpp"

#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "locus/errors.hpp"

namespace locus {

namespace {

struct Composite {
  Vector point;
  std::vector<Vector> foci;
};

// Bracket |base + increment| via the length-of-sum identity with
// sin^2 in [0, 1]. A zero base has the exact answer |increment|.
FocusEstimate estimate_pair(const GramSpace& space, const Vector& base, const Vector& increment) {
  const double nb = norm(space, base);
  const double ni = norm(space, increment);
  if (nb == 0.0) return {ni, ni, false};
  const double along = nb * nb + inner(space, base, increment);
  return {std::abs(along) / nb, std::sqrt(ni * ni + along * along / (nb * nb)), along < 0.0};
}

void require_off_foci(const GramSpace& space, const LocusSpec& spec, const Vector& z,
                      std::string_view name) {
  for (std::size_t i = 0; i < spec.focus_count(); ++i) {
    if (norm(space, z - spec.foci()[i]) == 0.0) {
      throw Error(Errc::FocusCoincidence, fmt::format("{} coincides with focus {}", name, i));
    }
  }
}

void require_member(const GramSpace& space, const LocusSpec& spec, const Vector& x,
                    double tol, std::string_view name) {
  const double residual = eval_g(space, spec, x) - spec.c();
  if (!(std::abs(residual) <= tol)) {
    throw Error(Errc::NotAMember,
                fmt::format("{} misses the locus by {:.6g} (tolerance {:.3g})", name, residual,
                            tol));
  }
}

void require_dims(const GramSpace& space, const LocusSpec& spec) {
  if (spec.dim() != space.dim()) {
    throw Error(Errc::DimensionMismatch,
                fmt::format("foci have {} coordinates, space has dimension {}", spec.dim(),
                            space.dim()));
  }
}

std::vector<Certificate> evaluate_cases(Theorem theorem, const LocusSpec& spec,
                                        const std::vector<FocusEstimate>& estimates,
                                        double plus_ref, std::optional<double> minus_lead,
                                        Composite composite) {
  double lower = 0.0;
  double upper = 0.0;
  std::vector<bool> negative(estimates.size());
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    const double a = spec.alphas()[i];
    lower += a * (a > 0.0 ? estimates[i].proj : estimates[i].hyp);
    upper += a * (a > 0.0 ? estimates[i].hyp : estimates[i].proj);
    negative[i] = estimates[i].negative_projection;
  }

  auto make = [&](int case_id, double value, Direction dir, double bound, bool fired) {
    Certificate cert;
    cert.theorem = theorem;
    cert.case_id = case_id;
    cert.condition_value = value;
    cert.direction = dir;
    cert.bound = bound;
    cert.fired = fired;
    cert.negative_projection = negative;
    cert.composite_point = composite.point;
    cert.composite_foci = composite.foci;
    return cert;
  };

  std::vector<Certificate> out;
  const double c1 = plus_ref - lower;
  const double c2 = plus_ref - upper;
  out.push_back(make(1, c1, Direction::Geq, plus_ref, c1 < 0.0));
  out.push_back(make(2, c2, Direction::Leq, plus_ref, c2 > 0.0));
  if (minus_lead) {
    const double c3 = *minus_lead + lower;
    const double c4 = *minus_lead + upper;
    out.push_back(make(3, c3, Direction::Geq, 0.0 - *minus_lead, c3 > 0.0));
    out.push_back(make(4, c4, Direction::Leq, 0.0 - *minus_lead, c4 < 0.0));
  }
  return out;
}

double weighted_norm_sum(const GramSpace& space, const LocusSpec& spec,
                         const std::vector<Vector>& ys) {
  double s = 0.0;
  for (std::size_t i = 0; i < ys.size(); ++i) s += spec.alphas()[i] * norm(space, ys[i]);
  return s;
}

}  // namespace

std::string_view to_string(Theorem t) noexcept {
  switch (t) {
    case Theorem::AddVector: return "T7";
    case Theorem::AddMembers: return "T8";
    case Theorem::LinearCombo: return "T10";
    case Theorem::MultiCombo: return "TMULTI";
  }
  return "?";
}

std::string_view to_string(Direction d) noexcept { return d == Direction::Geq ? "GEQ" : "LEQ"; }

Direction flipped(Direction d) noexcept {
  return d == Direction::Geq ? Direction::Leq : Direction::Geq;
}

Certificate symmetric_reading(const Certificate& cert) {
  Certificate alt = cert;
  alt.direction = flipped(cert.direction);
  alt.suspect_direction = false;
  return alt;
}

DeltaEstimates delta_estimates(const GramSpace& space, const LocusSpec& spec, const Vector& z,
                               const Vector& y) {
  require_dims(space, spec);
  space.require_conforming(z);
  space.require_conforming(y);
  require_off_foci(space, spec, z, "z");
  DeltaEstimates out;
  for (const Vector& f : spec.foci()) out.per_focus.push_back(estimate_pair(space, z - f, y));
  return out;
}

std::vector<Certificate> certify_add_vector(const GramSpace& space, const LocusSpec& spec,
                                            const Vector& z, const Vector& y,
                                            const CertifyOptions& options) {
  const DeltaEstimates est = delta_estimates(space, spec, z, y);
  require_member(space, spec, z, options.member_tol, "z");
  const double lead = alpha_sum(spec) * norm(space, y);
  return evaluate_cases(Theorem::AddVector, spec, est.per_focus, spec.c() + lead,
                        lead - spec.c(), {z + y, spec.foci()});
}

std::vector<Certificate> certify_add_vector_per_focus(const GramSpace& space,
                                                      const LocusSpec& spec, const Vector& z,
                                                      const std::vector<Vector>& increments,
                                                      const CertifyOptions& options) {
  require_dims(space, spec);
  space.require_conforming(z);
  if (increments.size() != spec.focus_count()) {
    throw Error(Errc::InvalidArgument, "one increment per focus is required");
  }
  require_off_foci(space, spec, z, "z");
  require_member(space, spec, z, options.member_tol, "z");

  std::vector<FocusEstimate> est;
  std::vector<Vector> shifted;
  for (std::size_t i = 0; i < spec.focus_count(); ++i) {
    space.require_conforming(increments[i]);
    est.push_back(estimate_pair(space, z - spec.foci()[i], increments[i]));
    // |z + y_i - x_i| = |z - (x_i - y_i)|
    shifted.push_back(spec.foci()[i] - increments[i]);
  }
  const double lead = weighted_norm_sum(space, spec, increments);
  return evaluate_cases(Theorem::AddVector, spec, est, spec.c() + lead, lead - spec.c(),
                        {z, std::move(shifted)});
}

std::vector<Certificate> certify_add_members(const GramSpace& space, const LocusSpec& spec,
                                             const Vector& v, const Vector& w,
                                             const CertifyOptions& options) {
  require_dims(space, spec);
  space.require_conforming(v);
  space.require_conforming(w);
  require_off_foci(space, spec, v, "v");
  require_member(space, spec, v, options.member_tol, "v");
  require_member(space, spec, w, options.member_tol, "w");

  std::vector<FocusEstimate> est;
  std::vector<Vector> doubled;
  for (const Vector& f : spec.foci()) {
    est.push_back(estimate_pair(space, v - f, w - f));
    doubled.push_back(2.0 * f);
  }
  auto certs = evaluate_cases(Theorem::AddMembers, spec, est, 2.0 * spec.c(), 0.0,
                              {v + w, std::move(doubled)});
  // Printed as ">= 0" although the condition bounds g from above.
  certs[3].direction = Direction::Geq;
  certs[3].suspect_direction = true;
  return certs;
}

std::vector<Certificate> certify_linear_combo(const GramSpace& space, const LocusSpec& spec,
                                              const Vector& v, const Vector& w, double gamma,
                                              double beta, const CertifyOptions& options) {
  require_dims(space, spec);
  space.require_conforming(v);
  space.require_conforming(w);
  if (!std::isfinite(gamma) || !std::isfinite(beta)) {
    throw Error(Errc::InvalidArgument, "coefficients must be finite");
  }
  if (gamma < 0.0 || beta < 0.0) {
    throw Error(Errc::NegativeCoefficient,
                fmt::format("gamma={} beta={}; both must be nonnegative", gamma, beta));
  }
  if (gamma > 0.0) require_off_foci(space, spec, v, "v");
  require_member(space, spec, v, options.member_tol, "v");
  require_member(space, spec, w, options.member_tol, "w");

  const double total = gamma + beta;
  std::vector<FocusEstimate> est;
  std::vector<Vector> scaled;
  for (const Vector& f : spec.foci()) {
    est.push_back(estimate_pair(space, gamma * (v - f), beta * (w - f)));
    scaled.push_back(total * f);
  }
  return evaluate_cases(Theorem::LinearCombo, spec, est, total * spec.c(),
                        (beta - gamma) * spec.c(), {gamma * v + beta * w, std::move(scaled)});
}

FocusEstimate multi_combo_estimate(const GramSpace& space, const std::vector<Vector>& vs,
                                   const std::vector<double>& betas, const Vector& focus) {
  if (vs.empty() || vs.size() != betas.size()) {
    throw Error(Errc::InvalidArgument, "need matching, nonempty vector and coefficient lists");
  }
  const std::size_t m = vs.size();
  std::vector<Vector> parts;
  parts.reserve(m);
  for (std::size_t j = 0; j < m; ++j) parts.push_back(betas[j] * (vs[j] - focus));

  if (m == 1) {
    const double n = norm(space, parts[0]);
    return {n, n, false};
  }

  // tails[j] = parts[j] + ... + parts[m-1]
  std::vector<Vector> tails(m);
  tails[m - 1] = parts[m - 1];
  for (std::size_t j = m - 1; j-- > 0;) tails[j] = tails[j + 1] + parts[j];

  double upsilon = 0.0;
  FocusEstimate out;
  for (std::size_t j = 0; j + 1 < m; ++j) {
    const double np = norm(space, parts[j]);
    if (np == 0.0) {
      throw Error(Errc::ZeroTailVector,
                  fmt::format("term {} vanishes; its length-of-sum step is undefined", j + 1));
    }
    const double along = np * np + inner(space, tails[j + 1], parts[j]);
    upsilon += along * along / (np * np);
    if (j == 0) {
      out.proj = std::abs(along) / np;
      out.negative_projection = along < 0.0;
    }
  }
  const double last = norm(space, parts[m - 1]);
  upsilon += last * last;
  out.hyp = std::sqrt(upsilon);
  return out;
}

double multi_combo_norm_sq_expansion(const GramSpace& space, const std::vector<Vector>& vs,
                                     const std::vector<double>& betas, const Vector& focus) {
  if (vs.size() != betas.size()) {
    throw Error(Errc::InvalidArgument, "vector and coefficient counts differ");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i; j < vs.size(); ++j) {
      const double binom = i == j ? 1.0 : 2.0;
      total += binom * betas[i] * betas[j] * inner(space, vs[i] - focus, vs[j] - focus);
    }
  }
  return total;
}

std::vector<Certificate> certify_multi_combo(const GramSpace& space, const LocusSpec& spec,
                                             const std::vector<Vector>& vs,
                                             const std::vector<double>& betas,
                                             const CertifyOptions& options) {
  require_dims(space, spec);
  if (vs.empty() || vs.size() != betas.size()) {
    throw Error(Errc::InvalidArgument, "need matching, nonempty vector and coefficient lists");
  }
  for (std::size_t j = 0; j < betas.size(); ++j) {
    if (!(betas[j] > 0.0) || !std::isfinite(betas[j])) {
      throw Error(Errc::NonPositiveCoefficient, fmt::format("beta_{} = {}", j + 1, betas[j]));
    }
  }
  for (std::size_t j = 0; j < vs.size(); ++j) {
    space.require_conforming(vs[j]);
    require_member(space, spec, vs[j], options.member_tol, fmt::format("v_{}", j + 1));
  }

  const double total = std::accumulate(betas.begin(), betas.end(), 0.0);
  Vector point = Vector::zeros(space.dim());
  for (std::size_t j = 0; j < vs.size(); ++j) point += betas[j] * vs[j];

  std::vector<FocusEstimate> est;
  std::vector<Vector> scaled;
  for (const Vector& f : spec.foci()) {
    est.push_back(multi_combo_estimate(space, vs, betas, f));
    scaled.push_back(total * f);
  }
  return evaluate_cases(Theorem::MultiCombo, spec, est, total * spec.c(), std::nullopt,
                        {std::move(point), std::move(scaled)});
}

bool audit_certificate(const GramSpace& space, const LocusSpec& spec,
                       const Vector& composite_point, const std::vector<Vector>& composite_foci,
                       const Certificate& cert) {
  const double g = eval_g(space, spec.alphas(), composite_foci, composite_point);
  return cert.direction == Direction::Geq ? g >= cert.bound - kAuditSlack
                                          : g <= cert.bound + kAuditSlack;
}

bool audit_certificate(const GramSpace& space, const LocusSpec& spec, const Certificate& cert) {
  return audit_certificate(space, spec, cert.composite_point, cert.composite_foci, cert);
}

}  // namespace locus
