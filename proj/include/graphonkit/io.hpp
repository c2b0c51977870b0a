#pragma once

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphonkit/errors.hpp"
#include "graphonkit/graphon.hpp"
#include "graphonkit/sampler.hpp"

namespace graphonkit {

namespace detail {

// A numeric JSON field may be a plain number, a full-precision decimal
// string, or an exact rational {"num": .., "den": ..}.
inline double number_from_json(const nlohmann::json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "Infinity") return kInfiniteMass;
    try {
      std::size_t pos = 0;
      const double v = std::stod(s, &pos);
      if (pos == s.size()) return v;
    } catch (...) {
    }
    throw graphon_error(errc::parse_error, std::string(what) + ": bad numeric string '" + s + "'");
  }
  if (j.is_object() && j.contains("num") && j.contains("den")) {
    const double den = j["den"].get<double>();
    if (den == 0.0) throw graphon_error(errc::parse_error, std::string(what) + ": zero denominator");
    return j["num"].get<double>() / den;
  }
  throw graphon_error(errc::parse_error, std::string(what) + ": expected number");
}

}  // namespace detail

inline StepGraphon graphon_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("weights") || !j.contains("values"))
    throw graphon_error(errc::parse_error, "graphon JSON needs 'weights' and 'values'");
  std::vector<double> weights;
  for (const auto& w : j.at("weights")) weights.push_back(detail::number_from_json(w, "weights"));
  const auto& rows = j.at("values");
  if (!rows.is_array() || rows.size() != weights.size())
    throw graphon_error(errc::parse_error, "'values' must have one row per block");
  std::vector<double> values;
  values.reserve(weights.size() * weights.size());
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != weights.size())
      throw graphon_error(errc::parse_error, "'values' must be a square matrix");
    for (const auto& v : row) values.push_back(detail::number_from_json(v, "values"));
  }
  double ambient = kInfiniteMass;
  if (j.contains("ambient_mass")) {
    const auto& a = j.at("ambient_mass");
    ambient = (a.is_string() && (a.get<std::string>() == "inf" || a.get<std::string>() == "Infinity"))
                  ? kInfiniteMass
                  : detail::number_from_json(a, "ambient_mass");
  }
  return StepGraphon(std::move(weights), std::move(values), ambient);
}

// Doubles are serialized with the shortest round-trip representation, so a
// write / read round trip reproduces the graphon bit for bit.
inline nlohmann::json graphon_to_json(const StepGraphon& w) {
  nlohmann::json j;
  j["weights"] = w.weights();
  nlohmann::json rows = nlohmann::json::array();
  const std::size_t k = w.block_count();
  for (std::size_t i = 0; i < k; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t jj = 0; jj < k; ++jj) row.push_back(w.value(i, jj));
    rows.push_back(std::move(row));
  }
  j["values"] = std::move(rows);
  if (w.ambient_mass() == kInfiniteMass)
    j["ambient_mass"] = "inf";
  else
    j["ambient_mass"] = w.ambient_mass();
  return j;
}

inline StepGraphon read_graphon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw graphon_error(errc::parse_error, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw graphon_error(errc::parse_error, path + ": " + e.what());
  }
  return graphon_from_json(j);
}

inline void write_graphon_file(const std::string& path, const StepGraphon& w) {
  std::ofstream out(path);
  if (!out) throw graphon_error(errc::parse_error, "cannot open " + path + " for writing");
  out << graphon_to_json(w).dump(2) << "\n";
}

// --- plain-text graph files: "n m" then m lines "u v" -------------------

inline EdgeListGraph read_graph_file(std::istream& in) {
  EdgeListGraph g;
  std::size_t m = 0;
  if (!(in >> g.n >> m)) throw graphon_error(errc::parse_error, "graph file: bad header");
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t u = 0, v = 0;
    if (!(in >> u >> v)) throw graphon_error(errc::parse_error, "graph file: bad edge line");
    g.edges.emplace_back(u, v);
  }
  return g;
}

inline EdgeListGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw graphon_error(errc::parse_error, "cannot open " + path);
  return read_graph_file(in);
}

inline void write_graph_file(std::ostream& out, const EdgeListGraph& g) {
  out << g.n << " " << g.edges.size() << "\n";
  for (const auto& [u, v] : g.edges) out << u << " " << v << "\n";
}

inline void write_graph_file(const std::string& path, const EdgeListGraph& g) {
  std::ofstream out(path);
  if (!out) throw graphon_error(errc::parse_error, "cannot open " + path + " for writing");
  write_graph_file(out, g);
}

}  // namespace graphonkit
