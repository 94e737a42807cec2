#pragma once

// JSON and plain-text rendering of reports. Timings are the only
// run-dependent values, so they are emitted only when asked for.

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "brittle/classes.hpp"
#include "brittle/graph6.hpp"
#include "brittle/parameters.hpp"
#include "brittle/traps.hpp"
#include "brittle/verify.hpp"

namespace brittle {

using Json = nlohmann::ordered_json;

inline Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

inline Json to_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(to_json(e));
  return out;
}

inline Json to_json(VertexSet s) { return Json(s.to_vector()); }

inline Json to_json(const Certificate& cert) {
  return std::visit(
      [](const auto& c) -> Json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, EditCertificate>) {
          return {{"kind", "deleted-edges"}, {"edges", to_json(c.deleted)}};
        } else if constexpr (std::is_same_v<T, PartitionCertificate>) {
          Json parts = Json::array();
          for (VertexSet p : c.parts) parts.push_back(to_json(p));
          return {{"kind", "vertex-partition"}, {"parts", parts}};
        } else if constexpr (std::is_same_v<T, BoundaryCertificate>) {
          Json parts = Json::array();
          for (const auto& p : c.parts) parts.push_back(to_json(p));
          return {{"kind", "edge-partition"}, {"boundary", to_json(c.boundary)}, {"parts", parts}};
        } else {
          Json witnesses = Json::array();
          for (const auto& w : c.witnesses) witnesses.push_back(to_json(w));
          return {{"kind", "packing"}, {"witnesses", witnesses}};
        }
      },
      cert);
}

inline Json to_json(const ParameterReport& r, const GraphClass& c, const Graph& g, bool timing) {
  Json out;
  out["parameter"] = parameter_name(r.parameter);
  out["class"] = c.name;
  out["graph6"] = to_graph6(g);
  out["value"] = r.value;
  out["certificate"] = to_json(r.certificate);
  out["elapsed_ms"] = timing ? Json(r.elapsed_ms) : Json(nullptr);
  out["nodes_expanded"] = r.nodes_expanded;
  return out;
}

/// Short human-readable certificate, e.g. "{0-1}" or "Y={2,3} parts=3".
inline std::string certificate_summary(const Certificate& cert) {
  auto edges = [](const std::vector<Edge>& es) {
    std::string s = "{";
    for (std::size_t i = 0; i < es.size(); ++i) {
      s += (i ? " " : "") + std::to_string(es[i].u) + "-" + std::to_string(es[i].v);
    }
    return s + "}";
  };
  auto vertices = [](VertexSet vs) {
    std::string s = "{";
    bool first = true;
    for (int v : vs) {
      s += (first ? "" : ",") + std::to_string(v);
      first = false;
    }
    return s + "}";
  };
  return std::visit(
      [&](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, EditCertificate>) {
          return "delete " + edges(c.deleted);
        } else if constexpr (std::is_same_v<T, PartitionCertificate>) {
          std::string s;
          for (VertexSet p : c.parts) s += (s.empty() ? "" : " ") + vertices(p);
          return "parts " + s;
        } else if constexpr (std::is_same_v<T, BoundaryCertificate>) {
          return "Y=" + vertices(c.boundary) + " parts=" + std::to_string(c.parts.size());
        } else {
          std::string s;
          for (const auto& w : c.witnesses) s += (s.empty() ? "" : " ") + edges(w);
          return "packing " + s;
        }
      },
      cert);
}

inline Json to_json(const TrapRecord& rec) {
  Json out;
  out["j_graph6"] = to_graph6(rec.j);
  out["s_vertices"] = to_json(rec.s);
  out["h_name"] = rec.h_name;
  out["status"] = status_name(rec.status);
  return out;
}

inline Json to_json(const CheckResult& r, bool timing) {
  Json out;
  out["name"] = r.name;
  out["passed"] = r.passed;
  out["cases"] = r.cases;
  out["notes"] = r.notes;
  out["failures"] = r.failures;
  out["elapsed_ms"] = timing ? Json(r.elapsed_ms) : Json(nullptr);
  return out;
}

inline Json verify_summary(const std::vector<CheckResult>& results, bool timing) {
  Json checks = Json::array();
  for (const auto& r : results) checks.push_back(to_json(r, timing));
  return {{"passed", all_passed(results)}, {"checks", checks}};
}

inline std::string verify_table(const std::vector<CheckResult>& results, bool timing) {
  std::ostringstream out;
  out << std::left << std::setw(24) << "check" << std::setw(8) << "result" << std::right << std::setw(10) << "cases";
  if (timing) out << std::setw(12) << "ms";
  out << "\n";
  for (const auto& r : results) {
    out << std::left << std::setw(24) << r.name << std::setw(8) << (r.passed ? "PASS" : "FAIL") << std::right
        << std::setw(10) << r.cases;
    if (timing) out << std::setw(12) << std::fixed << std::setprecision(1) << r.elapsed_ms;
    out << "\n";
    for (const auto& n : r.notes) out << "    " << n << "\n";
    for (const auto& f : r.failures) out << "    FAILED: " << f << "\n";
  }
  out << (all_passed(results) ? "all checks passed" : "some checks FAILED") << "\n";
  return out.str();
}

}  // namespace brittle
