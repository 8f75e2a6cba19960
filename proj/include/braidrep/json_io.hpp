#ifndef BRAIDREP_JSON_IO_HPP_
#define BRAIDREP_JSON_IO_HPP_

#include <fstream>
#include <sstream>
#include <string>

#include "braidrep/braid.hpp"
#include "braidrep/error.hpp"
#include "braidrep/fivetuple.hpp"
#include "json.hpp"

namespace braidrep::json_io {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

// Doubles are written by nlohmann's shortest round-trip formatter, so
// write -> read reproduces every value bit for bit.

inline json to_json(Complex c) { return json::array({c.real(), c.imag()}); }

inline json to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

[[noreturn]] inline void schema_error(const std::string& msg) { throw Error(ErrorKind::Schema, msg); }

inline void require(bool ok, const std::string& msg) {
  if (!ok) schema_error(msg);
}

inline double number(const json& j, const std::string& what) {
  require(j.is_number(), what + " must be a number");
  return j.get<double>();
}

/// A [re, im] pair or a plain real number.
inline Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  require(j.is_array() && j.size() == 2, "complex entries must be [re, im] pairs");
  return {number(j[0], "re"), number(j[1], "im")};
}

inline CMatrix matrix_from_json(const json& j) {
  require(j.is_array() && !j.empty(), "matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  require(j[0].is_array() && !j[0].empty(), "matrix rows must be non-empty arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    require(row.is_array() && static_cast<Eigen::Index>(row.size()) == cols, "matrix rows must have equal length");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

inline int integer(const json& j, const std::string& what) {
  require(j.is_number_integer(), what + " must be an integer");
  return j.get<int>();
}

inline void check_version(const json& j) {
  require(j.is_object(), "document must be a JSON object");
  require(j.contains("schema_version") && j["schema_version"] == kSchemaVersion,
          std::string("schema_version must be \"") + kSchemaVersion + "\"");
}

inline json representation_to_json(const Representation& rep) {
  json gens = json::array();
  for (const auto& g : rep.generators) gens.push_back(to_json(g));
  return {{"schema_version", kSchemaVersion}, {"n", rep.n}, {"dim", rep.dim}, {"generators", std::move(gens)}};
}

inline Representation representation_from_json(const json& j) {
  check_version(j);
  require(j.contains("n") && j.contains("dim") && j.contains("generators"), "representation needs n, dim, generators");
  Representation rep;
  rep.n = integer(j["n"], "n");
  rep.dim = integer(j["dim"], "dim");
  require(j["generators"].is_array(), "generators must be an array");
  require(rep.n >= 2 && static_cast<int>(j["generators"].size()) == rep.n - 1, "generator count must be n - 1");
  for (const auto& g : j["generators"]) {
    CMatrix m = matrix_from_json(g);
    require(m.rows() == rep.dim && m.cols() == rep.dim, "generators must be dim x dim");
    rep.generators.push_back(std::move(m));
  }
  return rep;
}

inline json tuple_to_json(const FiveTuple& t) {
  json cocycle = json::array();
  for (const auto& blocks : t.cocycle) {
    json entries = json::array();
    for (const auto& [x, u] : blocks) entries.push_back({{"point_index", x}, {"matrix", to_json(u)}});
    cocycle.push_back(std::move(entries));
  }
  return {{"schema_version", kSchemaVersion},
          {"n", t.n},
          {"points", t.points},
          {"mu", t.mu},
          {"nu", t.nu},
          {"action", t.action},
          {"cocycle", std::move(cocycle)}};
}

inline FiveTuple tuple_from_json(const json& j) {
  check_version(j);
  for (const char* key : {"n", "points", "mu", "nu", "action", "cocycle"}) {
    require(j.contains(key), std::string("five-tuple needs ") + key);
  }
  FiveTuple t;
  t.n = integer(j["n"], "n");
  require(j["points"].is_array() && j["mu"].is_array() && j["nu"].is_array() && j["action"].is_array() &&
              j["cocycle"].is_array(),
          "points, mu, nu, action, cocycle must be arrays");
  for (const auto& p : j["points"]) {
    require(p.is_array(), "points must be integer arrays");
    std::vector<int> label;
    for (const auto& v : p) label.push_back(integer(v, "point entry"));
    t.points.push_back(std::move(label));
  }
  for (const auto& m : j["mu"]) t.mu.push_back(number(m, "mu"));
  for (const auto& v : j["nu"]) t.nu.push_back(integer(v, "nu"));
  for (const auto& p : j["action"]) {
    require(p.is_array(), "action entries must be arrays");
    Permutation perm;
    for (const auto& v : p) {
      require(v.is_number_unsigned(), "action entries must be nonnegative integers");
      perm.push_back(v.get<std::size_t>());
    }
    t.action.push_back(std::move(perm));
  }
  for (const auto& entries : j["cocycle"]) {
    require(entries.is_array(), "cocycle entries must be arrays");
    std::map<std::size_t, CMatrix> blocks;
    for (const auto& e : entries) {
      require(e.is_object() && e.contains("point_index") && e.contains("matrix"),
              "cocycle entries need point_index and matrix");
      require(e["point_index"].is_number_unsigned(), "point_index must be a nonnegative integer");
      blocks[e["point_index"].get<std::size_t>()] = matrix_from_json(e["matrix"]);
    }
    t.cocycle.push_back(std::move(blocks));
  }
  // Inverses are only derivable from valid permutations; structure
  // validation reports anything else.
  bool perms = true;
  for (const auto& p : t.action) perms = perms && p.size() == t.points.size() && is_permutation(p);
  if (perms) t.derive_inverses();
  return t;
}

inline json report_to_json(const ValidationReport& r) {
  json w = json::array();
  for (const auto& x : r.witnesses) w.push_back({{"generator", x.generator}, {"point", x.point}, {"detail", x.detail}});
  return {{"check", r.check},
          {"pass", r.pass},
          {"worst_residual", r.worst_residual},
          {"tolerance", r.tolerance},
          {"witnesses", std::move(w)}};
}

inline json error_to_json(const Error& e) {
  return {{"error", std::string(to_string(e.kind()))},
          {"message", e.what()},
          {"witness", e.witness()},
          {"residual", e.residual()}};
}

inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    schema_error(std::string("malformed JSON: ") + e.what());
  }
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) schema_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

inline bool is_tuple_doc(const json& j) { return j.is_object() && j.contains("points"); }

}  // namespace braidrep::json_io

#endif  // BRAIDREP_JSON_IO_HPP_
