#pragma once
// Reproduction of the worked examples: P2 membership and addition, R3
// member addition, P1 linear combination, transported Grams, the hyperbola
// point and the ellipse trace.

#include <string>
#include <vector>

#include "locus/trace.hpp"

namespace locus {

struct CheckResult {
  std::string id;           // "1", "2a", ...
  std::string description;
  double measured = 0.0;
  double expected = 0.0;
  double tol = 0.0;
  bool passed = false;
};

/// Runs every example check. Never throws for a failed comparison; an
/// exception from the library is reported as a failed check.
std::vector<CheckResult> run_example_checks();

/// Distance from (px, py) to the nearest segment of any polyline.
double distance_to_polylines(const std::vector<Polyline>& polylines, double px, double py);

}  // namespace locus
