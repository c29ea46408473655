#pragma once

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "locus/certify.hpp"
#include "locus/inner_space.hpp"
#include "locus/locus_spec.hpp"
#include "locus/transport.hpp"

namespace locus {

using Json = nlohmann::json;

/// Parses a file as JSON; IoFailure / ParseError messages name the path.
Json read_json_file(const std::filesystem::path& path);

/// {"kind": "poly_integral", "interval": [a, b], "scale": s, "dim": n}
/// {"kind": "matrix_trace", "shape": [rows, cols]}
/// {"kind": "table", "table": [[...], ...]}
BasisOracle oracle_from_json(const Json& j);
Json to_json(const BasisOracle& oracle);

/// A space is either {"dim": n, "gram": [[...]], "basis_labels": [...]}
/// or an oracle declaration (any object with "kind"), which is materialized.
struct LoadedSpace {
  GramSpace space;
  std::optional<BasisOracle> oracle;
};
LoadedSpace space_from_json(const Json& j);
Json to_json(const GramSpace& space);

/// {"foci": [[...], ...], "alphas": [...], "c": r}
LocusSpec locus_from_json(const Json& j);
Json to_json(const LocusSpec& spec);

Json to_json(const Vector& v);

/// One certificate-report line: theorem, case, condition_value, direction,
/// bound, fired, audit (null when not fired), flags, and for suspect
/// directions the audit of the symmetric reading.
Json certificate_report(const GramSpace& space, const LocusSpec& spec, const Certificate& cert);

}  // namespace locus
