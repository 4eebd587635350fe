#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ghr/correspondence.hpp"
#include "ghr/error.hpp"
#include "ghr/fuzzy.hpp"
#include "ghr/gamma_hemiring.hpp"
#include "ghr/harness.hpp"
#include "ghr/ideals.hpp"

namespace ghr::io {

using json = nlohmann::ordered_json;

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw StructuralError(path + ": " + e.what());
  }
}

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw StructuralError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::string text(const json& j, const char* what) {
  if (!j.is_string()) throw StructuralError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

inline FiniteMonoid parse_monoid(const json& j, const char* what) {
  FiniteMonoid m;
  const auto& elements = field(j, "elements");
  if (!elements.is_array()) throw StructuralError(std::string(what) + ".elements must be an array");
  for (const auto& e : elements) m.elements.push_back(text(e, "element label"));
  check_monoid_shape({m.elements, 0, std::vector<Elem>(m.size() * m.size(), 0)}, what);
  m.zero = m.index_of(text(field(j, "zero"), "zero"));
  const auto& add = field(j, "add");
  if (!add.is_array() || add.size() != m.size())
    throw StructuralError(std::string(what) + ".add must have one row per element");
  for (const auto& row : add) {
    if (!row.is_array() || row.size() != m.size())
      throw StructuralError(std::string(what) + ".add rows must have one entry per element");
    for (const auto& cell : row) m.add.push_back(m.index_of(text(cell, "table entry")));
  }
  return m;
}

inline json dump_monoid(const FiniteMonoid& m) {
  json rows = json::array();
  for (Elem a = 0; a < m.size(); ++a) {
    json row = json::array();
    for (Elem b = 0; b < m.size(); ++b) row.push_back(m.label(m.sum(a, b)));
    rows.push_back(std::move(row));
  }
  return json{{"elements", m.elements}, {"zero", m.label(m.zero)}, {"add", std::move(rows)}};
}

}  // namespace detail

/// Parses a structure document; shape and label problems raise
/// StructuralError. Axioms are not checked here.
inline GammaHemiring parse_structure(const json& j) {
  try {
    GammaHemiring g;
    g.name = detail::text(detail::field(j, "name"), "name");
    g.S = detail::parse_monoid(detail::field(j, "S"), "S");
    g.Gamma = detail::parse_monoid(detail::field(j, "Gamma"), "Gamma");
    const auto& action = detail::field(j, "action");
    const auto n = g.size(), k = g.gamma_size();
    if (!action.is_array() || action.size() != n) throw StructuralError("action must be indexed [s][gamma][s]");
    for (const auto& plane : action) {
      if (!plane.is_array() || plane.size() != k) throw StructuralError("action must be indexed [s][gamma][s]");
      for (const auto& row : plane) {
        if (!row.is_array() || row.size() != n) throw StructuralError("action must be indexed [s][gamma][s]");
        for (const auto& cell : row) g.action.push_back(g.S.index_of(detail::text(cell, "action entry")));
      }
    }
    return g;
  } catch (const json::exception& e) {
    throw StructuralError(e.what());
  }
}

inline json dump_structure(const GammaHemiring& g) {
  json action = json::array();
  for (Elem a = 0; a < g.size(); ++a) {
    json plane = json::array();
    for (Elem al = 0; al < g.gamma_size(); ++al) {
      json row = json::array();
      for (Elem b = 0; b < g.size(); ++b) row.push_back(g.S.label(g.act(a, al, b)));
      plane.push_back(std::move(row));
    }
    action.push_back(std::move(plane));
  }
  return json{{"name", g.name},
              {"S", detail::dump_monoid(g.S)},
              {"Gamma", detail::dump_monoid(g.Gamma)},
              {"action", std::move(action)}};
}

inline GammaHemiring load_structure(const std::string& path) { return parse_structure(read_json_file(path)); }

/// Element labels of a context carrier: S, L, R or SxS.
inline const std::vector<std::string>& carrier_labels(const CorrespondenceContext& ctx, std::string_view over) {
  if (over != "S" && over != "L" && over != "R" && over != "SxS")
    throw StructuralError("'over' must be S, L, R or SxS, got '" + std::string(over) + "'");
  return ctx.view(over).carrier.elements;
}

/// Parses a fuzzy subset document against a context; omitted labels are 0.
inline FuzzySubset parse_fuzzy(const json& j, const CorrespondenceContext& ctx) {
  try {
    auto over = detail::text(detail::field(j, "over"), "over");
    auto name = detail::text(detail::field(j, "structure"), "structure");
    if (name != ctx.G.name) throw StructuralError("fuzzy subset is for '" + name + "', structure is '" + ctx.G.name + "'");
    const auto& labels = carrier_labels(ctx, over);
    FuzzySubset mu = constant(over, labels.size(), Rational01::zero());
    const auto& values = detail::field(j, "values");
    if (!values.is_object()) throw StructuralError("'values' must be an object");
    for (const auto& [label, value] : values.items()) {
      auto it = std::find(labels.begin(), labels.end(), label);
      if (it == labels.end()) throw StructuralError("unknown element label '" + label + "' on " + over);
      mu.values[static_cast<std::size_t>(it - labels.begin())] = Rational01::parse(detail::text(value, "value"));
    }
    return mu;
  } catch (const json::exception& e) {
    throw StructuralError(e.what());
  }
}

inline json dump_fuzzy(const FuzzySubset& mu, const CorrespondenceContext& ctx) {
  const auto& labels = carrier_labels(ctx, mu.carrier);
  json values = json::object();
  for (std::size_t i = 0; i < mu.size(); ++i) values[labels[i]] = mu.values[i].str();
  return json{{"over", mu.carrier}, {"structure", ctx.G.name}, {"values", std::move(values)}};
}

/// "0,1/2,1" -> ascending grid.
inline Grid parse_grid(std::string_view text) {
  Grid grid;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) grid.push_back(Rational01::parse(item));
  check_grid(grid);
  return grid;
}

inline json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  json out = json::object();
  for (const auto& [role, value] : *w) out[role] = value;
  return out;
}

/// Suite report document. Timings are zeroed unless requested so reports
/// are byte-stable.
inline json report_json(const SuiteReport& report, bool timings = false) {
  json grid = json::array();
  for (const auto& v : report.grid) grid.push_back(v.str());
  json results = json::array();
  for (const auto& r : report.results) {
    json item{{"id", r.id},
              {"status", to_string(r.status)},
              {"witness", witness_json(r.witness)},
              {"ms", timings ? r.ms : 0}};
    if (!r.note.empty()) item["note"] = r.note;
    results.push_back(std::move(item));
  }
  return json{{"structure", report.structure},
              {"grid", std::move(grid)},
              {"results", std::move(results)},
              {"overall", report.overall() ? "pass" : "fail"}};
}

}  // namespace ghr::io
