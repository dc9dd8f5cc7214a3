#ifndef HYPERSPECTRA_JSON_IO_HPP
#define HYPERSPECTRA_JSON_IO_HPP

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "hyperspectra/canonical.hpp"
#include "hyperspectra/certificates.hpp"
#include "hyperspectra/classify.hpp"
#include "hyperspectra/errors.hpp"
#include "hyperspectra/extremal.hpp"
#include "hyperspectra/families.hpp"
#include "hyperspectra/hypergraph.hpp"
#include "hyperspectra/spectral.hpp"

namespace hyperspectra {

using ojson = nlohmann::ordered_json;

/// {"k","n","edges"} in that key order.
inline ojson to_json(const UniformHypergraph& g) {
  ojson edges = ojson::array();
  for (const Edge& e : g.edges()) edges.push_back(e);
  return ojson{{"k", g.k()}, {"n", g.n()}, {"edges", std::move(edges)}};
}

/// Compact normal form plus a trailing newline.
inline std::string write_hypergraph(const UniformHypergraph& g) { return to_json(g).dump() + "\n"; }

/// Strict reader: exactly the keys k, n, edges; integer entries; each edge
/// strictly ascending; the edge list strictly lexicographically ascending.
inline UniformHypergraph read_hypergraph(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("hypergraph JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("hypergraph JSON: top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "k" && key != "n" && key != "edges") throw InputError("hypergraph JSON: unexpected field '" + key + "'");
  }
  for (const char* key : {"k", "n", "edges"}) {
    if (!doc.contains(key)) throw InputError(std::string("hypergraph JSON: missing field '") + key + "'");
  }
  if (!doc["k"].is_number_integer() || doc["k"].get<long long>() < 2) {
    throw InputError("hypergraph JSON: k must be an integer >= 2");
  }
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 0) {
    throw InputError("hypergraph JSON: n must be a nonnegative integer");
  }
  if (!doc["edges"].is_array()) throw InputError("hypergraph JSON: edges must be an array");
  const int k = doc["k"].get<int>();
  const auto n = doc["n"].get<std::size_t>();
  std::vector<Edge> edges;
  for (const auto& item : doc["edges"]) {
    if (!item.is_array()) throw InputError("hypergraph JSON: each edge must be an array");
    Edge e;
    for (const auto& v : item) {
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw InputError("hypergraph JSON: vertices must be nonnegative integers");
      }
      const auto x = v.get<long long>();
      if (static_cast<unsigned long long>(x) >= n) throw InputError("hypergraph JSON: vertex out of range");
      if (!e.empty() && static_cast<Vertex>(x) <= e.back()) {
        throw InputError("hypergraph JSON: edge vertices must be strictly ascending");
      }
      e.push_back(static_cast<Vertex>(x));
    }
    if (!edges.empty() && !(edges.back() < e)) {
      throw InputError("hypergraph JSON: edges must be strictly lexicographically ascending");
    }
    edges.push_back(std::move(e));
  }
  try {
    return UniformHypergraph(k, n, std::move(edges));
  } catch (const StructureError& e) {
    throw InputError(std::string("hypergraph JSON: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

/// Label sidecar: vertex names, edge names and the recorded matching.
inline ojson labels_to_json(const LabeledHypergraph& h) {
  ojson vertices = ojson::object();
  for (Vertex v = 0; v < h.vertex_names.size(); ++v) vertices[h.vertex_names[v]] = v;
  std::vector<std::pair<EdgeIndex, std::string>> by_index;
  for (const auto& [name, e] : h.edge_labels) by_index.emplace_back(e, name);
  std::sort(by_index.begin(), by_index.end());
  ojson edges = ojson::object();
  for (const auto& [e, name] : by_index) edges[name] = e;
  ojson out{{"labels", std::move(vertices)}, {"edges", std::move(edges)}};
  out["matching"] = h.matching ? ojson(h.matching->edges) : ojson::array();
  return out;
}

inline ojson params_to_json(const std::vector<std::pair<std::string, double>>& params) {
  ojson p = ojson::object();
  for (const auto& [name, value] : params) p[name] = value;
  return p;
}

inline ojson weights_to_json(const WeightedIncidenceMatrix& b) {
  ojson w = ojson::array();
  for (const auto& [v, e, x] : b.entries()) w.push_back(ojson::array({v, e, x}));
  return w;
}

inline ojson to_json(const CertificateSolution& s) {
  return ojson{{"family", to_string(s.family)}, {"m", s.m},         {"k", s.k},
               {"alpha", s.alpha},             {"rho", s.rho},     {"params", params_to_json(s.params)},
               {"weights", weights_to_json(s.matrix)}};
}

inline ojson to_json(const SubnormalWitness& w) {
  return ojson{{"pair", to_string(w.pair)},        {"m", w.m},
               {"k", w.k},                         {"alpha", w.alpha},
               {"status", to_string(w.status)},    {"slack", w.slack},
               {"params", params_to_json(w.params)}, {"weights", weights_to_json(w.matrix)}};
}

inline ojson to_json(const ClassLabel& l) {
  return ojson{{"kind", to_string(l.kind)},
               {"cycle_length", l.cycle_length},
               {"pm_edges_on_cycle", l.pm_edges_on_cycle},
               {"tags", l.tags.names()}};
}

inline ojson finite_or_null(double x) { return std::isfinite(x) ? ojson(x) : ojson(nullptr); }

inline ojson to_json(const EnumerationResult& r) {
  ojson members = ojson::array();
  for (const auto& m : r.members) {
    members.push_back(ojson{{"hash", m.hash},
                            {"canonical_form", m.form},
                            {"rho", m.rho},
                            {"class", to_json(m.label)},
                            {"hypergraph", to_json(m.graph)}});
  }
  return ojson{{"n", r.n},
               {"k", r.k},
               {"filter", to_string(r.filter)},
               {"member_count", r.members.size()},
               {"maximizer", r.maximizer ? ojson(*r.maximizer) : ojson(nullptr)},
               {"co_maximizers", r.co_maximizers},
               {"runner_up_gap", finite_or_null(r.runner_up_gap)},
               {"stats", ojson{{"sequences", r.stats.sequences}, {"candidates", r.stats.candidates}}},
               {"members", std::move(members)}};
}

/// One row per member: hash, kind, cycle length, tags, rho.
inline std::string enumeration_csv(const EnumerationResult& r) {
  std::string out = "hash,kind,cycle_length,pm_edges_on_cycle,tags,rho\n";
  char buf[64];
  for (const auto& m : r.members) {
    std::string tags;
    for (const auto& t : m.label.tags.names()) tags += (tags.empty() ? "" : ";") + t;
    std::snprintf(buf, sizeof buf, "%.15g", m.rho);
    out += m.hash + "," + to_string(m.label.kind) + "," + std::to_string(m.label.cycle_length) + "," +
           std::to_string(m.label.pm_edges_on_cycle) + "," + tags + "," + buf + "\n";
  }
  return out;
}

inline ojson to_json(const TheoremReport& r) {
  ojson checks = ojson::array();
  for (const auto& c : r.checks) {
    ojson row{{"m", c.m}, {"check", c.what}, {"gap", finite_or_null(c.gap)}, {"passed", c.passed}};
    if (!c.witness.empty()) row["witness"] = c.witness;
    checks.push_back(std::move(row));
  }
  ojson out{{"id", r.id},
            {"k", r.k},
            {"m_range", ojson::array({r.m_lo, r.m_hi})},
            {"mode", r.exhaustive ? "exhaustive" : "family"},
            {"verdict", to_string(r.verdict)},
            {"min_gap", r.min_gap ? finite_or_null(*r.min_gap) : ojson(nullptr)}};
  if (!r.counterexample.empty()) out["counterexample"] = r.counterexample;
  out["checks"] = std::move(checks);
  out["notes"] = r.notes;
  return out;
}

inline ojson to_json(const std::vector<OpenComparisonRow>& rows, int k) {
  ojson out = ojson::array();
  for (const auto& r : rows) {
    out.push_back(ojson{{"k", k},
                        {"m", r.m},
                        {"rho_A", r.rho_a},
                        {"rho_D", r.rho_d},
                        {"gap_D_minus_A", r.gap},
                        {"sign", r.gap > 0 ? "D" : (r.gap < 0 ? "A" : "tie")}});
  }
  return out;
}

}  // namespace hyperspectra

#endif  // HYPERSPECTRA_JSON_IO_HPP
