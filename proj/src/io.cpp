#include "locus/io.hpp"

#include <fstream>

#include <fmt/format.h>

#include "locus/errors.hpp"

namespace locus {

namespace {

std::vector<double> number_list(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(Errc::ParseError, fmt::format("{} must be an array", what));
  std::vector<double> out;
  for (const Json& e : j) {
    if (!e.is_number()) throw Error(Errc::ParseError, fmt::format("{} must hold numbers", what));
    out.push_back(e.get<double>());
  }
  return out;
}

SquareMatrix matrix_from(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(Errc::ParseError, fmt::format("{} must be an array of rows", what));
  std::vector<std::vector<double>> rows;
  for (const Json& r : j) rows.push_back(number_list(r, what));
  return SquareMatrix::from_rows(rows);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(Errc::ParseError, fmt::format("missing field \"{}\"", key));
  }
  return j.at(key);
}

std::size_t positive_size(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) {
    throw Error(Errc::ParseError, fmt::format("{} must be a positive integer", what));
  }
  return j.get<std::size_t>();
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoFailure, fmt::format("cannot open {}", path.string()));
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, fmt::format("{}: {}", path.string(), e.what()));
  }
}

BasisOracle oracle_from_json(const Json& j) {
  const Json& kind_field = field(j, "kind");
  if (!kind_field.is_string()) throw Error(Errc::ParseError, "\"kind\" must be a string");
  const std::string kind = kind_field.get<std::string>();
  if (kind == "poly_integral") {
    const auto interval = number_list(field(j, "interval"), "interval");
    if (interval.size() != 2) throw Error(Errc::ParseError, "interval needs two numbers");
    PolyIntegralOracle o;
    o.a = interval[0];
    o.b = interval[1];
    o.scale = j.contains("scale") ? j.at("scale").get<double>() : 1.0;
    o.dim = positive_size(field(j, "dim"), "dim");
    return o;
  }
  if (kind == "matrix_trace") {
    const Json& shape = field(j, "shape");
    if (!shape.is_array() || shape.size() != 2) throw Error(Errc::ParseError, "shape needs [rows, cols]");
    return MatrixTraceOracle{positive_size(shape[0], "rows"), positive_size(shape[1], "cols")};
  }
  if (kind == "table") {
    return TableOracle{matrix_from(j.contains("table") ? j.at("table") : field(j, "gram"), "table")};
  }
  throw Error(Errc::ParseError, fmt::format("unknown oracle kind \"{}\"", kind));
}

Json to_json(const BasisOracle& oracle) {
  if (const auto* p = std::get_if<PolyIntegralOracle>(&oracle)) {
    return {{"kind", "poly_integral"}, {"interval", {p->a, p->b}}, {"scale", p->scale},
            {"dim", p->dim}};
  }
  if (const auto* t = std::get_if<MatrixTraceOracle>(&oracle)) {
    return {{"kind", "matrix_trace"}, {"shape", {t->rows, t->cols}}};
  }
  return {{"kind", "table"}, {"table", std::get<TableOracle>(oracle).table.rows()}};
}

LoadedSpace space_from_json(const Json& j) {
  if (j.is_object() && j.contains("kind")) {
    BasisOracle oracle = oracle_from_json(j);
    return {gram_from_basis(oracle), std::move(oracle)};
  }
  SquareMatrix gram = matrix_from(field(j, "gram"), "gram");
  if (j.contains("dim") && positive_size(j.at("dim"), "dim") != gram.size()) {
    throw Error(Errc::DimensionMismatch,
                fmt::format("dim is {} but gram is {}x{}", j.at("dim").get<std::size_t>(),
                            gram.size(), gram.size()));
  }
  GramSpace space = validate_gram(gram);
  if (j.contains("basis_labels")) {
    space = space.with_labels(j.at("basis_labels").get<std::vector<std::string>>());
  }
  return {std::move(space), std::nullopt};
}

Json to_json(const GramSpace& space) {
  Json j = {{"dim", space.dim()}, {"gram", space.gram().rows()}};
  if (!space.basis_labels().empty()) j["basis_labels"] = space.basis_labels();
  return j;
}

LocusSpec locus_from_json(const Json& j) {
  std::vector<Vector> foci;
  const Json& f = field(j, "foci");
  if (!f.is_array()) throw Error(Errc::ParseError, "foci must be an array");
  for (const Json& p : f) foci.emplace_back(number_list(p, "focus"));
  const Json& c = field(j, "c");
  if (!c.is_number()) throw Error(Errc::ParseError, "c must be a number");
  return LocusSpec(std::move(foci), number_list(field(j, "alphas"), "alphas"), c.get<double>());
}

Json to_json(const Vector& v) { return Json(std::vector<double>(v.coords().begin(), v.coords().end())); }

Json to_json(const LocusSpec& spec) {
  Json foci = Json::array();
  for (const Vector& f : spec.foci()) foci.push_back(to_json(f));
  return {{"foci", foci}, {"alphas", spec.alphas()}, {"c", spec.c()}};
}

Json certificate_report(const GramSpace& space, const LocusSpec& spec, const Certificate& cert) {
  Json j;
  j["theorem"] = std::string(to_string(cert.theorem));
  j["case"] = cert.case_id;
  j["condition_value"] = cert.condition_value;
  j["direction"] = std::string(to_string(cert.direction));
  j["bound"] = cert.bound;
  j["fired"] = cert.fired;
  j["direct_value"] = eval_g(space, spec.alphas(), cert.composite_foci, cert.composite_point);
  j["audit"] = cert.fired ? Json(audit_certificate(space, spec, cert)) : Json(nullptr);
  Json flags = {{"suspect_direction", cert.suspect_direction},
                {"negative_projection", cert.negative_projection}};
  j["flags"] = flags;
  if (cert.suspect_direction) {
    j["audit_symmetric"] =
        cert.fired ? Json(audit_certificate(space, spec, symmetric_reading(cert))) : Json(nullptr);
  }
  return j;
}

}  // namespace locus
