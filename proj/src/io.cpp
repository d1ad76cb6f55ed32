#include "arrlab/io.hpp"

#include <fstream>
#include <sstream>

#include "arrlab/errors.hpp"

namespace arrlab {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw IoError("rational entries must be integers or \"p/q\" strings");
}

json rational_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return json(q.get_num().get_si());
  return json(rational_str(q));
}

namespace {

RatMat rows_from_json(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array()) throw IoError(std::string(field) + " missing");
  RatMat rows;
  for (const auto& row : j[field]) {
    if (!row.is_array()) throw IoError("rows must be arrays");
    RatVec v;
    for (const auto& entry : row) v.push_back(rational_from_json(entry));
    rows.push_back(std::move(v));
  }
  return rows;
}

}  // namespace

Arrangement arrangement_from_json(const json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer()) throw IoError("dim missing");
  const int dim = j["dim"].get<int>();
  for (const char* key : {"offsets", "b"}) {
    if (j.contains(key)) {
      for (const auto& entry : j[key])
        if (rational_from_json(entry) != 0) throw AffineNotSupported();
    }
  }
  return canonicalize(rows_from_json(j, "hyperplanes"), dim);
}

json arrangement_to_json(const Arrangement& arr) {
  json j;
  j["dim"] = arr.dim;
  j["hyperplanes"] = json::array();
  for (const auto& h : arr.hyperplanes) {
    json row = json::array();
    for (const auto& x : h.normal) row.push_back(rational_to_json(x));
    j["hyperplanes"].push_back(std::move(row));
  }
  return j;
}

Arrangement load_arrangement(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw IoError("failed to parse " + path + ": " + e.what());
  }
  return arrangement_from_json(j);
}

void save_arrangement(const Arrangement& arr, const std::string& path) {
  write_file(path, arrangement_to_json(arr).dump(2) + "\n");
}

Cone cone_from_json(const json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer()) throw IoError("dim missing");
  return cone_from_rows(rows_from_json(j, "inequalities"), j["dim"].get<int>());
}

Cone load_cone(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw IoError("failed to parse " + path + ": " + e.what());
  }
  return cone_from_json(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << contents;
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace arrlab
