#include "locus/trace.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <thread>

#include <fmt/format.h>

#include "locus/errors.hpp"

namespace locus {

namespace {

constexpr double kZeroNudge = 1e-300;
constexpr int kNone = -1;

// LOCUS_THREADS caps the sampling workers.
std::size_t worker_count(std::size_t rows) {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LOCUS_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) n = std::min<std::size_t>(n, static_cast<std::size_t>(cap));
  }
  return std::clamp<std::size_t>(n, 1, rows);
}

class ContourGrid {
 public:
  ContourGrid(const GramSpace& space, const LocusSpec& spec, const Window& w)
      : space_(space), spec_(spec), w_(w), values_(w.nx * w.ny) {
    sample();
  }

  std::vector<Polyline> extract() {
    build_segments();
    return chain();
  }

 private:
  double residual(double x, double y) const {
    return eval_g(space_, spec_, Vector{x, y}) - spec_.c();
  }
  double xs(std::size_t i) const {
    return i + 1 == w_.nx ? w_.x_max : w_.x_min + w_.dx() * static_cast<double>(i);
  }
  double ys(std::size_t j) const {
    return j + 1 == w_.ny ? w_.y_max : w_.y_min + w_.dy() * static_cast<double>(j);
  }
  double value(std::size_t i, std::size_t j) const { return values_[j * w_.nx + i]; }

  void sample() {
    auto fill_rows = [this](std::size_t begin, std::size_t end) {
      for (std::size_t j = begin; j < end; ++j) {
        for (std::size_t i = 0; i < w_.nx; ++i) {
          double r = residual(xs(i), ys(j));
          if (r == 0.0) r = kZeroNudge;
          values_[j * w_.nx + i] = r;
        }
      }
    };
    const std::size_t workers = worker_count(w_.ny);
    if (workers == 1) {
      fill_rows(0, w_.ny);
      return;
    }
    std::vector<std::jthread> pool;
    const std::size_t chunk = (w_.ny + workers - 1) / workers;
    for (std::size_t begin = 0; begin < w_.ny; begin += chunk) {
      pool.emplace_back(fill_rows, begin, std::min(w_.ny, begin + chunk));
    }
  }

  // Edge ids: horizontal edges first, then vertical ones.
  int h_edge(std::size_t i, std::size_t j) const {
    return static_cast<int>(j * (w_.nx - 1) + i);
  }
  int v_edge(std::size_t i, std::size_t j) const {
    return static_cast<int>(w_.ny * (w_.nx - 1) + j * w_.nx + i);
  }
  std::size_t edge_count() const { return w_.ny * (w_.nx - 1) + (w_.ny - 1) * w_.nx; }

  Point2 edge_point(int id) const {
    const std::size_t h_count = w_.ny * (w_.nx - 1);
    const auto uid = static_cast<std::size_t>(id);
    if (uid < h_count) {
      const std::size_t j = uid / (w_.nx - 1), i = uid % (w_.nx - 1);
      const double v0 = value(i, j), v1 = value(i + 1, j);
      const double t = v0 / (v0 - v1);
      return {xs(i) + t * (xs(i + 1) - xs(i)), ys(j)};
    }
    const std::size_t k = uid - h_count;
    const std::size_t j = k / w_.nx, i = k % w_.nx;
    const double v0 = value(i, j), v1 = value(i, j + 1);
    const double t = v0 / (v0 - v1);
    return {xs(i), ys(j) + t * (ys(j + 1) - ys(j))};
  }

  void add_segment(int a, int b) {
    const int s = static_cast<int>(segments_.size());
    segments_.push_back({a, b});
    for (int e : {a, b}) {
      auto& slot = incident_[static_cast<std::size_t>(e)];
      (slot[0] == kNone ? slot[0] : slot[1]) = s;
    }
  }

  void build_segments() {
    incident_.assign(edge_count(), {kNone, kNone});
    for (std::size_t j = 0; j + 1 < w_.ny; ++j) {
      for (std::size_t i = 0; i + 1 < w_.nx; ++i) {
        const bool bl = value(i, j) > 0.0;
        const bool br = value(i + 1, j) > 0.0;
        const bool tr = value(i + 1, j + 1) > 0.0;
        const bool tl = value(i, j + 1) > 0.0;
        const int bottom = h_edge(i, j), top = h_edge(i, j + 1);
        const int left = v_edge(i, j), right = v_edge(i + 1, j);

        if (bl == tr && br == tl && bl != br) {
          const double centre = residual(0.5 * (xs(i) + xs(i + 1)), 0.5 * (ys(j) + ys(j + 1)));
          if ((centre > 0.0) == bl) {
            add_segment(bottom, right);
            add_segment(top, left);
          } else {
            add_segment(left, bottom);
            add_segment(right, top);
          }
          continue;
        }

        std::array<int, 4> hits{};
        std::size_t n = 0;
        if (bl != br) hits[n++] = bottom;
        if (br != tr) hits[n++] = right;
        if (tl != tr) hits[n++] = top;
        if (bl != tl) hits[n++] = left;
        if (n == 2) add_segment(hits[0], hits[1]);
      }
    }
  }

  int other_segment(int edge, int seg) const {
    const auto& slot = incident_[static_cast<std::size_t>(edge)];
    return slot[0] == seg ? slot[1] : slot[0];
  }

  Polyline walk(int start_edge, int start_seg) {
    Polyline line;
    line.points.push_back(edge_point(start_edge));
    int edge = start_edge;
    int seg = start_seg;
    while (seg != kNone && !visited_[static_cast<std::size_t>(seg)]) {
      visited_[static_cast<std::size_t>(seg)] = true;
      const auto& [a, b] = segments_[static_cast<std::size_t>(seg)];
      edge = a == edge ? b : a;
      if (edge == start_edge) {
        line.closed = true;
        break;
      }
      line.points.push_back(edge_point(edge));
      seg = other_segment(edge, seg);
    }
    auto last = std::unique(line.points.begin(), line.points.end());
    line.points.erase(last, line.points.end());
    if (line.closed && line.points.size() > 1 && line.points.front() == line.points.back()) {
      line.points.pop_back();
    }
    return line;
  }

  std::vector<Polyline> chain() {
    visited_.assign(segments_.size(), false);
    std::vector<Polyline> out;
    auto keep = [&](Polyline line) {
      if (line.points.size() >= 2) out.push_back(std::move(line));
    };
    // Open curves start where a crossing has only one segment (window border).
    for (std::size_t s = 0; s < segments_.size(); ++s) {
      if (visited_[s]) continue;
      for (int e : segments_[s]) {
        if (other_segment(e, static_cast<int>(s)) == kNone) {
          keep(walk(e, static_cast<int>(s)));
          break;
        }
      }
    }
    for (std::size_t s = 0; s < segments_.size(); ++s) {
      if (!visited_[s]) keep(walk(segments_[s][0], static_cast<int>(s)));
    }
    return out;
  }

  const GramSpace& space_;
  const LocusSpec& spec_;
  const Window& w_;
  std::vector<double> values_;
  std::vector<std::array<int, 2>> segments_;
  std::vector<std::array<int, 2>> incident_;
  std::vector<bool> visited_;
};

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoFailure, fmt::format("cannot open {} for writing", path.string()));
  out << text;
  if (!out) throw Error(Errc::IoFailure, fmt::format("failed writing {}", path.string()));
}

}  // namespace

double Window::cell_diagonal() const noexcept { return std::hypot(dx(), dy()); }

void Window::validate() const {
  if (!(x_min < x_max) || !(y_min < y_max)) {
    throw Error(Errc::InvalidArgument, "window needs x_min < x_max and y_min < y_max");
  }
  if (nx < 2 || ny < 2) throw Error(Errc::InvalidArgument, "window needs at least 2x2 samples");
}

std::vector<Polyline> trace_locus(const GramSpace& space, const LocusSpec& spec,
                                  const Window& window) {
  if (space.dim() != 2 || spec.dim() != 2) {
    throw Error(Errc::DimensionNot2D,
                fmt::format("tracing needs a 2-D space, got dimension {}", space.dim()));
  }
  window.validate();
  ContourGrid grid(space, spec, window);
  return grid.extract();
}

double vertex_residual_bound(const GramSpace& space, const LocusSpec& spec,
                             const Window& window) {
  const double edge = std::max(norm(space, Vector{window.dx(), 0.0}),
                               norm(space, Vector{0.0, window.dy()}));
  return alpha_abs_sum(spec) * edge;
}

std::string render_svg(const std::vector<Polyline>& polylines, const Window& window) {
  window.validate();
  const double width = static_cast<double>(window.nx - 1);
  const double height = static_cast<double>(window.ny - 1);
  auto px = [&](double x) { return (x - window.x_min) / window.dx(); };
  auto py = [&](double y) { return (window.y_max - y) / window.dy(); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\">\n",
      width, height);
  out += "<g fill=\"none\" stroke=\"black\" stroke-width=\"1\">\n";
  for (const Polyline& line : polylines) {
    out += "<path d=\"";
    for (std::size_t k = 0; k < line.points.size(); ++k) {
      out += fmt::format("{}{:.4f} {:.4f} ", k == 0 ? "M" : "L", px(line.points[k].x),
                         py(line.points[k].y));
    }
    if (line.closed) out += "Z";
    if (out.back() == ' ') out.pop_back();
    out += "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string render_csv(const std::vector<Polyline>& polylines) {
  std::string out = "polyline_id,x,y\n";
  for (std::size_t id = 0; id < polylines.size(); ++id) {
    for (const Point2& p : polylines[id].points) {
      out += fmt::format("{},{:.17g},{:.17g}\n", id, p.x, p.y);
    }
  }
  return out;
}

void emit_svg(const std::vector<Polyline>& polylines, const Window& window,
              const std::filesystem::path& path) {
  write_file(path, render_svg(polylines, window));
}

void emit_csv(const std::vector<Polyline>& polylines, const std::filesystem::path& path) {
  write_file(path, render_csv(polylines));
}

}  // namespace locus
