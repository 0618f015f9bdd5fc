#pragma once

#include <ostream>
#include <string>

#include "json.hpp"  // vendored nlohmann/json

#include "gpnef/positivity.hpp"

namespace gpnef {

// Insertion-ordered JSON keeps field order fixed across runs.
using Json = nlohmann::ordered_json;

inline Json gkm_to_json(const GkmGraph& g) {
  Json j;
  j["type"] = g.system().type().to_string();
  j["omit"] = g.parabolic().omitted();
  Json nodes = Json::array();
  for (const FixedPoint& x : g.points()) {
    Json n;
    n["id"] = x.id;
    n["word"] = x.rep.word();
    n["length"] = x.rep.length();
    nodes.push_back(std::move(n));
  }
  j["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (const InvariantCurve& c : g.curves()) {
    Json e;
    e["id"] = c.id;
    e["endpoints"] = {c.tail, c.head};
    e["root"] = g.curve_root(c).on_simple_roots;
    edges.push_back(std::move(e));
  }
  j["edges"] = std::move(edges);
  return j;
}

inline std::string gkm_to_dot(const GkmGraph& g) {
  std::string s = "graph gkm {\n  node [shape=circle];\n";
  for (const FixedPoint& x : g.points())
    s += "  v" + std::to_string(x.id) + " [label=\"" + x.rep.to_string() + "\"];\n";
  for (const InvariantCurve& c : g.curves()) {
    const auto& root = g.curve_root(c).on_simple_roots;
    std::string label = "[";
    for (size_t k = 0; k < root.size(); ++k)
      label += (k ? "," : "") + std::to_string(root[k]);
    label += "]";
    s += "  v" + std::to_string(c.tail) + " -- v" + std::to_string(c.head) +
         " [label=\"" + label + "\"];\n";
  }
  s += "}\n";
  return s;
}

inline Json verdict_to_json(const PositivityVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["global_min"] = v.global_min;
  j["witness"] = Json{{"curve", v.witness.curve}, {"entry", v.witness.entry}};
  j["table_digest"] = v.table_digest;
  return j;
}

inline Json restriction_to_json(const RestrictionTable& t) {
  Json j = Json::object();
  for (size_t id = 0; id < t.rows.size(); ++id)
    j[std::to_string(id)] = t.rows[id].entries();
  return j;
}

inline Json seshadri_entry_to_json(int point_id, const SeshadriResult& r) {
  Json j;
  j["point"] = point_id;
  j["value"] = Json{{"num", r.value.num}, {"den", r.value.den}};
  Json att = Json::array();
  for (const PositivityWitness& w : r.attaining)
    att.push_back(Json{{"curve", w.curve}, {"entry", w.entry}});
  j["attaining"] = std::move(att);
  return j;
}

inline Json describe_to_json(const GkmGraph& g) {
  Json j;
  j["type"] = g.system().type().to_string();
  j["rank"] = g.system().rank();
  j["omit"] = g.parabolic().omitted();
  j["levi"] = g.parabolic().levi();
  j["dimension"] = g.dimension();
  j["fixed_points"] = g.points().size();
  j["invariant_curves"] = g.curves().size();
  return j;
}

// Text renderings, used by the CLI's table mode.

inline std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

inline void describe_to_text(const GkmGraph& g, std::ostream& out) {
  out << "type: " << g.system().type().to_string() << "\n"
      << "rank: " << g.system().rank() << "\n"
      << "omit: " << join_ints(g.parabolic().omitted()) << "\n"
      << "levi: " << join_ints(g.parabolic().levi()) << "\n"
      << "dimension: " << g.dimension() << "\n"
      << g.points().size() << " fixed points, " << g.curves().size()
      << " invariant curves\n";
}

inline void curves_to_text(const GkmGraph& g, std::ostream& out) {
  for (const InvariantCurve& c : g.curves()) {
    const auto& root = g.curve_root(c).on_simple_roots;
    out << "curve " << c.id << ": " << c.tail << " -- " << c.head << ", root [";
    for (size_t k = 0; k < root.size(); ++k)
      out << (k ? "," : "") << root[k];
    out << "]\n";
  }
}

inline void table_to_text(const RestrictionTable& t, std::ostream& out) {
  for (size_t id = 0; id < t.rows.size(); ++id)
    out << "curve " << id << ": " << t.rows[id].to_string() << "\n";
}

inline void verdict_to_text(const PositivityVerdict& v, std::ostream& out) {
  out << "status: " << to_string(v.status) << "\n"
      << "global_min: " << v.global_min << "\n"
      << "witness: curve " << v.witness.curve << ", entry " << v.witness.entry
      << "\n"
      << "table_digest: " << v.table_digest << "\n";
}

inline void seshadri_to_text(int point_id, const SeshadriResult& r,
                             std::ostream& out) {
  out << "point " << point_id << ": epsilon = " << r.value.to_string()
      << ", attaining curves:";
  for (size_t k = 0; k < r.attaining.size(); ++k)
    out << (k ? "," : "") << " " << r.attaining[k].curve;
  out << "\n";
}

}  // namespace gpnef
