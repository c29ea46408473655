// locus: command-line front end for spaces, loci, certificates, transport
// and tracing.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "locus/certify.hpp"
#include "locus/errors.hpp"
#include "locus/example_checks.hpp"
#include "locus/io.hpp"
#include "locus/locus_spec.hpp"
#include "locus/trace.hpp"
#include "locus/transport.hpp"

namespace {

using namespace locus;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_numbers(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError(fmt::format("{}: cannot parse \"{}\" as a number", flag, item));
    }
  }
  if (out.empty()) throw UsageError(fmt::format("{}: expected comma-separated numbers", flag));
  return out;
}

Vector parse_vector(const std::string& text, const std::string& flag) {
  return Vector(parse_numbers(text, flag));
}

struct Problem {
  LoadedSpace loaded;
  LocusSpec spec;
};

Problem load_problem(const std::string& space_path, const std::string& locus_path) {
  LoadedSpace loaded = space_from_json(read_json_file(space_path));
  LocusSpec spec = locus_from_json(read_json_file(locus_path));
  if (spec.dim() != loaded.space.dim()) {
    throw Error(Errc::DimensionMismatch,
                fmt::format("{} has foci of dimension {} but {} has dimension {}", locus_path,
                            spec.dim(), space_path, loaded.space.dim()));
  }
  return {std::move(loaded), std::move(spec)};
}

void require_dim(const Vector& v, const GramSpace& space, const std::string& flag) {
  if (v.size() != space.dim()) {
    throw UsageError(
        fmt::format("{}: expected {} coordinates, got {}", flag, space.dim(), v.size()));
  }
}

std::string number(double x) { return fmt::format("{:.17g}", x); }

// Returns the exit code for a batch of certificates printed as JSON lines:
// a fired certificate whose operative reading fails its audit is a
// verification failure.
int report_certificates(const Problem& p, const std::vector<Certificate>& certs) {
  int code = kExitOk;
  for (const Certificate& cert : certs) {
    const Json line = certificate_report(p.loaded.space, p.spec, cert);
    std::cout << line.dump() << '\n';
    if (!cert.fired) continue;
    const bool ok = cert.suspect_direction ? line.at("audit_symmetric").get<bool>()
                                           : line.at("audit").get<bool>();
    if (!ok) code = kExitFailed;
  }
  return code;
}

struct Paths {
  std::string space;
  std::string locus;
};

void add_problem_args(CLI::App* cmd, Paths& paths) {
  cmd->add_option("space", paths.space, "Space file (Gram matrix or oracle declaration)")
      ->required();
  cmd->add_option("locus", paths.locus, "Locus file")->required();
}

int run(int argc, char** argv) {
  CLI::App app{"Generalized loci in real inner product spaces"};
  app.require_subcommand(1);
  int code = kExitOk;

  // validate
  std::string validate_space;
  std::string validate_locus;
  auto* validate = app.add_subcommand("validate", "Check a space (and optionally a locus) file");
  validate->add_option("space", validate_space, "Space file")->required();
  validate->add_option("locus", validate_locus, "Locus file");
  validate->callback([&] {
    const LoadedSpace loaded = space_from_json(read_json_file(validate_space));
    Json out = {{"space", to_json(loaded.space)}};
    if (loaded.oracle) out["oracle"] = to_json(*loaded.oracle);
    if (!validate_locus.empty()) {
      const Problem p = load_problem(validate_space, validate_locus);
      out["locus"] = to_json(p.spec);
    }
    std::cout << out.dump(2) << '\n';
  });

  // eval / member
  Paths eval_paths;
  std::string eval_point;
  auto* eval = app.add_subcommand("eval", "Evaluate g at a point");
  add_problem_args(eval, eval_paths);
  eval->add_option("--point", eval_point, "Coordinates, comma separated")->required();
  eval->callback([&] {
    const Problem p = load_problem(eval_paths.space, eval_paths.locus);
    const Vector x = parse_vector(eval_point, "--point");
    require_dim(x, p.loaded.space, "--point");
    std::cout << number(eval_g(p.loaded.space, p.spec, x)) << '\n';
  });

  Paths member_paths;
  std::string member_point;
  double member_tol = 1e-6;
  auto* member = app.add_subcommand("member", "Test |g(x) - c| <= tol");
  add_problem_args(member, member_paths);
  member->add_option("--point", member_point, "Coordinates, comma separated")->required();
  member->add_option("--tol", member_tol, "Absolute tolerance")->capture_default_str();
  member->callback([&] {
    const Problem p = load_problem(member_paths.space, member_paths.locus);
    const Vector x = parse_vector(member_point, "--point");
    require_dim(x, p.loaded.space, "--point");
    const bool in = is_member(p.loaded.space, p.spec, x, member_tol);
    std::cout << (in ? "true" : "false") << '\n';
    if (!in) code = kExitFailed;
  });

  // solve
  Paths solve_paths;
  std::string solve_origin;
  std::string solve_direction;
  std::string solve_range = "0,1";
  RaySolveOptions solve_options;
  auto* solve = app.add_subcommand("solve", "Find locus points along a ray");
  add_problem_args(solve, solve_paths);
  solve->add_option("--origin", solve_origin, "Ray origin")->required();
  solve->add_option("--direction", solve_direction, "Ray direction")->required();
  solve->add_option("--range", solve_range, "Parameter range tmin,tmax")->capture_default_str();
  solve->add_option("--tol", solve_options.tol, "Residual tolerance")->capture_default_str();
  solve->add_option("--samples", solve_options.samples, "Bracketing samples")
      ->capture_default_str();
  solve->callback([&] {
    const Problem p = load_problem(solve_paths.space, solve_paths.locus);
    const Vector origin = parse_vector(solve_origin, "--origin");
    const Vector direction = parse_vector(solve_direction, "--direction");
    require_dim(origin, p.loaded.space, "--origin");
    require_dim(direction, p.loaded.space, "--direction");
    const auto range = parse_numbers(solve_range, "--range");
    if (range.size() != 2) throw UsageError("--range: expected tmin,tmax");
    for (double t : solve_on_ray(p.loaded.space, p.spec, origin, direction, range[0], range[1],
                                 solve_options)) {
      const Vector x = origin + t * direction;
      const Json line = {{"t", t},
                         {"point", to_json(x)},
                         {"residual", eval_g(p.loaded.space, p.spec, x) - p.spec.c()}};
      std::cout << line.dump() << '\n';
    }
  });

  // certify
  auto* certify = app.add_subcommand("certify", "Bound certificates as JSON lines");
  certify->require_subcommand(1);
  CertifyOptions certify_options;
  auto add_tol = [&](CLI::App* cmd) {
    cmd->add_option("--tol", certify_options.member_tol, "Membership tolerance for inputs")
        ->capture_default_str();
  };

  Paths add_paths;
  std::string add_z;
  std::string add_y;
  auto* add = certify->add_subcommand("add", "Member z plus an arbitrary vector y");
  add_problem_args(add, add_paths);
  add->add_option("--z", add_z, "Locus member")->required();
  add->add_option("--y", add_y, "Added vector")->required();
  add_tol(add);
  add->callback([&] {
    const Problem p = load_problem(add_paths.space, add_paths.locus);
    const Vector z = parse_vector(add_z, "--z");
    const Vector y = parse_vector(add_y, "--y");
    require_dim(z, p.loaded.space, "--z");
    require_dim(y, p.loaded.space, "--y");
    code = report_certificates(p, certify_add_vector(p.loaded.space, p.spec, z, y, certify_options));
  });

  Paths members_paths;
  std::string members_v;
  std::string members_w;
  auto* members = certify->add_subcommand("members", "Sum of two members v + w");
  add_problem_args(members, members_paths);
  members->add_option("--v", members_v, "First member")->required();
  members->add_option("--w", members_w, "Second member")->required();
  add_tol(members);
  members->callback([&] {
    const Problem p = load_problem(members_paths.space, members_paths.locus);
    const Vector v = parse_vector(members_v, "--v");
    const Vector w = parse_vector(members_w, "--w");
    require_dim(v, p.loaded.space, "--v");
    require_dim(w, p.loaded.space, "--w");
    code = report_certificates(
        p, certify_add_members(p.loaded.space, p.spec, v, w, certify_options));
  });

  Paths combo_paths;
  std::string combo_v;
  std::string combo_w;
  double combo_gamma = 1.0;
  double combo_beta = 1.0;
  auto* combo = certify->add_subcommand("combo", "Combination gamma*v + beta*w");
  add_problem_args(combo, combo_paths);
  combo->add_option("--v", combo_v, "First member")->required();
  combo->add_option("--w", combo_w, "Second member")->required();
  combo->add_option("--gamma", combo_gamma, "Coefficient of v (>= 0)")->required();
  combo->add_option("--beta", combo_beta, "Coefficient of w (>= 0)")->required();
  add_tol(combo);
  combo->callback([&] {
    const Problem p = load_problem(combo_paths.space, combo_paths.locus);
    const Vector v = parse_vector(combo_v, "--v");
    const Vector w = parse_vector(combo_w, "--w");
    require_dim(v, p.loaded.space, "--v");
    require_dim(w, p.loaded.space, "--w");
    code = report_certificates(p, certify_linear_combo(p.loaded.space, p.spec, v, w, combo_gamma,
                                                       combo_beta, certify_options));
  });

  Paths multi_paths;
  std::vector<std::string> multi_vectors;
  std::string multi_betas;
  auto* multi = certify->add_subcommand("multi", "Combination sum_j beta_j v_j");
  add_problem_args(multi, multi_paths);
  multi->add_option("--vector", multi_vectors, "Member (repeat once per vector)")
      ->required()
      ->take_all()
      ->allow_extra_args(false);
  multi->add_option("--betas", multi_betas, "Coefficients (> 0), comma separated")->required();
  add_tol(multi);
  multi->callback([&] {
    const Problem p = load_problem(multi_paths.space, multi_paths.locus);
    std::vector<Vector> vs;
    for (const std::string& text : multi_vectors) {
      vs.push_back(parse_vector(text, "--vector"));
      require_dim(vs.back(), p.loaded.space, "--vector");
    }
    const auto betas = parse_numbers(multi_betas, "--betas");
    if (betas.size() != vs.size()) {
      throw UsageError(fmt::format("--betas: {} coefficients for {} vectors", betas.size(),
                                   vs.size()));
    }
    code = report_certificates(
        p, certify_multi_combo(p.loaded.space, p.spec, vs, betas, certify_options));
  });

  // transport
  std::string transport_oracle;
  std::string transport_locus_path;
  auto* transport = app.add_subcommand("transport", "Carry a locus into coordinate space");
  transport->add_option("oracle", transport_oracle, "Oracle declaration file")->required();
  transport->add_option("locus", transport_locus_path, "Locus file (foci in oracle basis)")
      ->required();
  transport->callback([&] {
    const BasisOracle oracle = oracle_from_json(read_json_file(transport_oracle));
    const LocusSpec source = locus_from_json(read_json_file(transport_locus_path));
    const TransportedLocus result =
        transport_locus(oracle, source.foci(), source.alphas(), source.c());
    const Json out = {
        {"oracle", to_json(oracle)}, {"space", to_json(result.space)}, {"locus", to_json(result.spec)}};
    std::cout << out.dump(2) << '\n';
  });

  // trace
  Paths trace_paths;
  std::string trace_window = "-1,1,-1,1";
  std::string trace_res = "512";
  std::string trace_svg;
  std::string trace_csv;
  auto* trace = app.add_subcommand("trace", "Trace a 2-D locus to SVG and/or CSV");
  add_problem_args(trace, trace_paths);
  trace->add_option("--window", trace_window, "xmin,xmax,ymin,ymax")->capture_default_str();
  trace->add_option("--res", trace_res, "Samples per axis: N or NX,NY")->capture_default_str();
  trace->add_option("--svg", trace_svg, "SVG output path");
  trace->add_option("--csv", trace_csv, "CSV output path ('-' for stdout)");
  trace->callback([&] {
    const Problem p = load_problem(trace_paths.space, trace_paths.locus);
    const auto w = parse_numbers(trace_window, "--window");
    if (w.size() != 4) throw UsageError("--window: expected xmin,xmax,ymin,ymax");
    const auto res = parse_numbers(trace_res, "--res");
    if (res.size() != 1 && res.size() != 2) throw UsageError("--res: expected N or NX,NY");
    for (double r : res) {
      if (!(r >= 2) || r != static_cast<double>(static_cast<std::size_t>(r))) {
        throw UsageError("--res: sample counts must be integers >= 2");
      }
    }
    Window window{w[0], w[1], w[2], w[3], static_cast<std::size_t>(res.front()),
                  static_cast<std::size_t>(res.back())};
    const auto polylines = trace_locus(p.loaded.space, p.spec, window);
    if (!trace_svg.empty()) emit_svg(polylines, window, trace_svg);
    if (trace_csv == "-") {
      std::cout << render_csv(polylines);
    } else if (!trace_csv.empty()) {
      emit_csv(polylines, trace_csv);
    }
    std::size_t vertices = 0;
    for (const Polyline& pl : polylines) vertices += pl.points.size();
    if (polylines.empty()) std::cerr << "note: the locus does not meet the window\n";
    if (trace_csv != "-") {
      std::cout << fmt::format("polylines {}  vertices {}  residual bound {:.6g}\n",
                               polylines.size(), vertices,
                               vertex_residual_bound(p.loaded.space, p.spec, window));
    }
  });

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "Run the built-in worked examples");
  verify->callback([&] {
    const auto results = run_example_checks();
    std::size_t failed = 0;
    std::cout << fmt::format("{:<4} {:<52} {:>14} {:>14} {:>10}  {}\n", "id", "check", "measured",
                             "expected", "tol", "result");
    for (const CheckResult& r : results) {
      std::cout << fmt::format("{:<4} {:<52} {:>14.6g} {:>14.6g} {:>10.6g}  {}\n", r.id,
                               r.description, r.measured, r.expected, r.tol,
                               r.passed ? "PASS" : "FAIL");
      if (!r.passed) ++failed;
    }
    std::cout << fmt::format("{} of {} checks passed\n", results.size() - failed, results.size());
    if (failed != 0) code = kExitFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const locus::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const bool file_problem =
        e.code() == locus::Errc::IoFailure || e.code() == locus::Errc::ParseError;
    return file_problem ? kExitUsage : kExitFailed;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << '\n';
    return kExitUsage;
  }
}
