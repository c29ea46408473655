#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "locus/inner_space.hpp"
#include "locus/locus_spec.hpp"

namespace locus {

/// Rectangular sampling window with an nx-by-ny grid of sample points.
struct Window {
  double x_min = -1.0;
  double x_max = 1.0;
  double y_min = -1.0;
  double y_max = 1.0;
  std::size_t nx = 512;
  std::size_t ny = 512;

  double dx() const noexcept { return (x_max - x_min) / static_cast<double>(nx - 1); }
  double dy() const noexcept { return (y_max - y_min) / static_cast<double>(ny - 1); }
  double cell_diagonal() const noexcept;

  /// Throws InvalidArgument on an empty range or fewer than 2 samples.
  void validate() const;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

struct Polyline {
  std::vector<Point2> points;
  /// The curve returns to its first vertex; the closing edge is implicit.
  bool closed = false;
};

/// Extracts the zero set of g - c over the window by marching squares.
/// Crossings are placed by linear interpolation along cell edges; saddle
/// cells are split according to the sign at the cell centre. Exact zeros on
/// the grid are nudged to +1e-300. Throws DimensionNot2D unless the space
/// and the foci are two-dimensional.
std::vector<Polyline> trace_locus(const GramSpace& space, const LocusSpec& spec,
                                  const Window& window);

/// Upper bound on |g - c| at any traced vertex: a vertex lies on a cell
/// edge that contains a true zero, and g is sum|alpha|-Lipschitz in the
/// space's norm, so the bound is sum|alpha| times the longest cell edge
/// measured in that norm.
double vertex_residual_bound(const GramSpace& space, const LocusSpec& spec, const Window& window);

/// SVG 1.1 document, one path per polyline. The window maps onto a canvas
/// of (nx-1) x (ny-1) user units with y pointing up; strokes are 1 unit
/// wide and unfilled. Output is byte-identical for identical input.
std::string render_svg(const std::vector<Polyline>& polylines, const Window& window);

/// "polyline_id,x,y" rows at 17 significant digits, in polyline order.
std::string render_csv(const std::vector<Polyline>& polylines);

/// File variants; throw IoFailure naming the path.
void emit_svg(const std::vector<Polyline>& polylines, const Window& window,
              const std::filesystem::path& path);
void emit_csv(const std::vector<Polyline>& polylines, const std::filesystem::path& path);

}  // namespace locus
