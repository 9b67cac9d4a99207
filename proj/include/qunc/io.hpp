#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "qunc/bounds.hpp"
#include "qunc/search.hpp"

namespace qunc::io {

using nlohmann::json;

/// Row-major grid of {"re": x, "im": y} objects.
json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j);

/// {"dim": n, "rho": grid, "a": grid, "b": grid, "q": q}. "q" is optional on
/// input and ignored by the sweep command.
json instance_to_json(const Instance& inst);
Instance instance_from_json(const json& j);
Instance read_instance_file(const std::string& path);

/// Fixed header for report CSVs.
const std::string& csv_header();
std::string csv_row(const BoundReport& r);
json report_to_json(const BoundReport& r);

/// %.17g formatting, the round-trip representation used in CSV output.
std::string format_double(double x);

}  // namespace qunc::io
