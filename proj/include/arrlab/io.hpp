#pragma once

#include <string>

#include <json.hpp>

#include "arrlab/arrangement.hpp"
#include "arrlab/cone.hpp"
#include "arrlab/lattice.hpp"

namespace arrlab {

using nlohmann::json;

/// File format: {"dim": d, "hyperplanes": [[entries]]}, each entry an
/// integer or a lowest-terms "p/q" string. A nonzero "offsets" entry is
/// rejected: only central arrangements are representable.
Arrangement arrangement_from_json(const json& j);
json arrangement_to_json(const Arrangement& arr);
Arrangement load_arrangement(const std::string& path);
void save_arrangement(const Arrangement& arr, const std::string& path);

/// Cone files: {"dim": d, "inequalities": [[entries]]}, rows a with a.y >= 0.
Cone cone_from_json(const json& j);
Cone load_cone(const std::string& path);

Rational rational_from_json(const json& j);
json rational_to_json(const Rational& q);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace arrlab
