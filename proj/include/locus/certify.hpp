#pragma once

// Bound certificates for points built from locus members.
//
// Every theorem here follows one pattern. For each focus x_i the composite
// offset splits as base_i + increment_i, and the exact distance
// |base_i + increment_i| is bracketed by a projection estimate (from below)
// and a hypotenuse estimate (from above). Weighting those brackets by the
// signs of alpha gives a lower bound L and an upper bound U on g at the
// composite point, and each case condition compares L or U against the
// reference level the theorem names:
//
//   case 1: plus_ref  - L < 0  =>  g >= plus_ref
//   case 2: plus_ref  - U > 0  =>  g <= plus_ref
//   case 3: minus_lead + L > 0  =>  g >= -minus_lead
//   case 4: minus_lead + U < 0  =>  g <= -minus_lead
//
// Conditions are strict; a value of exactly zero fires nothing.

#include <optional>
#include <string_view>
#include <vector>

#include "locus/inner_space.hpp"
#include "locus/locus_spec.hpp"

namespace locus {

enum class Theorem { AddVector, AddMembers, LinearCombo, MultiCombo };
enum class Direction { Geq, Leq };

std::string_view to_string(Theorem t) noexcept;   // "T7", "T8", "T10", "TMULTI"
std::string_view to_string(Direction d) noexcept;  // "GEQ", "LEQ"
Direction flipped(Direction d) noexcept;

/// Bracket on one focus distance |base + increment|.
struct FocusEstimate {
  double proj = 0.0;  // lower estimate
  double hyp = 0.0;   // upper estimate
  /// |base|^2 + <base, increment> < 0: the lower estimate needed the
  /// absolute value to stay a valid bound.
  bool negative_projection = false;
};

struct DeltaEstimates {
  std::vector<FocusEstimate> per_focus;
};

struct Certificate {
  Theorem theorem = Theorem::AddVector;
  int case_id = 1;
  double condition_value = 0.0;
  Direction direction = Direction::Geq;
  double bound = 0.0;
  bool fired = false;
  /// Set on the add-members case 4, whose printed direction (>= 0)
  /// contradicts its own condition; see symmetric_reading().
  bool suspect_direction = false;
  std::vector<bool> negative_projection;

  /// Where the bound applies: g with these foci, evaluated at this point.
  Vector composite_point;
  std::vector<Vector> composite_foci;
};

/// Same certificate with the opposite direction and the suspect flag
/// cleared, so both readings of a suspect case can be audited.
Certificate symmetric_reading(const Certificate& cert);

struct CertifyOptions {
  /// Maximum |g - c| accepted for inputs that must be locus members.
  double member_tol = 1e-6;
};

/// Slack used when auditing a certificate against direct evaluation.
inline constexpr double kAuditSlack = 1e-9;

/// Projection and hypotenuse estimates of |z + y - x_i| per focus.
/// Throws FocusCoincidence when z equals a focus.
DeltaEstimates delta_estimates(const GramSpace& space, const LocusSpec& spec, const Vector& z,
                               const Vector& y);

/// Adding an arbitrary vector y to a member z; composite z + y, foci x_i.
/// Throws FocusCoincidence or NotAMember.
std::vector<Certificate> certify_add_vector(const GramSpace& space, const LocusSpec& spec,
                                            const Vector& z, const Vector& y,
                                            const CertifyOptions& options = {});

/// The add-vector conditions with a separate increment y_i per focus; the
/// lead term becomes sum_i alpha_i |y_i|. With y_i = w - x_i this is the
/// add-members theorem before the membership of w is used.
std::vector<Certificate> certify_add_vector_per_focus(const GramSpace& space,
                                                      const LocusSpec& spec, const Vector& z,
                                                      const std::vector<Vector>& increments,
                                                      const CertifyOptions& options = {});

/// Adding two members v + w; composite foci 2 x_i.
std::vector<Certificate> certify_add_members(const GramSpace& space, const LocusSpec& spec,
                                             const Vector& v, const Vector& w,
                                             const CertifyOptions& options = {});

/// gamma*v + beta*w with gamma, beta >= 0; composite foci (gamma+beta) x_i.
/// A zero coefficient makes that side exact instead of estimated.
/// Throws NegativeCoefficient, FocusCoincidence or NotAMember.
std::vector<Certificate> certify_linear_combo(const GramSpace& space, const LocusSpec& spec,
                                              const Vector& v, const Vector& w, double gamma,
                                              double beta, const CertifyOptions& options = {});

/// Per-focus bracket for |sum_j beta_j (v_j - x)|: the first-step
/// projection below and sqrt(Upsilon) above, where Upsilon iterates the
/// length-of-sum identity along the tails.
FocusEstimate multi_combo_estimate(const GramSpace& space, const std::vector<Vector>& vs,
                                   const std::vector<double>& betas, const Vector& focus);

/// sum_{i<=j} C(2,d) beta_i beta_j <v_i - x, v_j - x>, d = 0 on the
/// diagonal and 1 off it. Equals |sum_j beta_j (v_j - x)|^2.
double multi_combo_norm_sq_expansion(const GramSpace& space, const std::vector<Vector>& vs,
                                     const std::vector<double>& betas, const Vector& focus);

/// sum_j beta_j v_j with all beta_j > 0; composite foci (sum beta) x_i.
/// Emits cases 1 and 2 only. Throws NonPositiveCoefficient, ZeroTailVector
/// or NotAMember.
std::vector<Certificate> certify_multi_combo(const GramSpace& space, const LocusSpec& spec,
                                             const std::vector<Vector>& vs,
                                             const std::vector<double>& betas,
                                             const CertifyOptions& options = {});

/// Direct g (spec alphas, given foci) at the point against the certified
/// bound, with kAuditSlack.
bool audit_certificate(const GramSpace& space, const LocusSpec& spec,
                       const Vector& composite_point, const std::vector<Vector>& composite_foci,
                       const Certificate& cert);

/// Audit against the point and foci the certificate carries.
bool audit_certificate(const GramSpace& space, const LocusSpec& spec, const Certificate& cert);

}  // namespace locus
