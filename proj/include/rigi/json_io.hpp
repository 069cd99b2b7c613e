#pragma once

// JSON encoding of graphs and reports. One pinned format, read and written
// bit-exactly: canonical key order, integers only.
//
//   group element  {"tag": "Z2" | "Z" | "C<k>" | "Refl" | "Gamma<k>",
//                   "t": [int, int], "r": int}
//   colored graph  {"group": {"tag": ...}, "n": int,
//                   "edges": [{"u": int, "v": int, "color": element}, ...]}

#include <json.hpp>
#include <string>

#include "colored_graph.hpp"
#include "group.hpp"
#include "lift.hpp"
#include "rigidity.hpp"
#include "sparsity.hpp"

namespace rigi {

using json = nlohmann::ordered_json;

inline json element_to_json(const GroupElement& x) {
  return json{{"tag", x.tag.name()}, {"t", {x.t[0], x.t[1]}}, {"r", x.r}};
}

inline GroupElement element_from_json(const json& j) {
  GroupElement x{GroupTag::parse(j.at("tag").get<std::string>()),
                 {j.at("t").at(0).get<int64_t>(), j.at("t").at(1).get<int64_t>()},
                 j.at("r").get<int>()};
  validate_element(x);
  return x;
}

inline json graph_to_json(const ColoredGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"u", e.u}, {"v", e.v}, {"color", element_to_json(e.color)}});
  return json{{"group", {{"tag", g.tag.name()}}}, {"n", g.n}, {"edges", edges}};
}

inline ColoredGraph graph_from_json(const json& j) {
  ColoredGraph g;
  g.tag = GroupTag::parse(j.at("group").at("tag").get<std::string>());
  g.n = j.at("n").get<int>();
  for (const auto& je : j.at("edges")) {
    Edge e{je.at("u").get<int>(), je.at("v").get<int>(),
           element_from_json(je.at("color"))};
    g.edges.push_back(e);
  }
  g.validate();
  return g;
}

inline std::string print_graph(const ColoredGraph& g, int indent = -1) {
  return graph_to_json(g).dump(indent);
}

inline ColoredGraph parse_graph(const std::string& text) {
  return graph_from_json(json::parse(text));
}

inline json edge_ids_of_mask(uint32_t mask) {
  json ids = json::array();
  for (uint32_t rest = mask; rest; rest &= rest - 1)
    ids.push_back(__builtin_ctz(rest));
  return ids;
}

inline json sparsity_report_to_json(const SparsityReport& rep) {
  json j{{"family", rep.family.name()}};
  if (rep.family.family == Family::KL) {
    j["k"] = rep.family.k;
    j["l"] = rep.family.l;
  }
  switch (rep.verdict) {
    case Verdict::Sparse: j["verdict"] = "sparse"; break;
    case Verdict::Tight: j["verdict"] = "tight"; break;
    case Verdict::Violating: j["verdict"] = "violating"; break;
  }
  if (rep.verdict == Verdict::Violating) {
    j["witness"] = {{"edges", edge_ids_of_mask(rep.witness_mask)},
                    {"n", rep.witness.n_prime},
                    {"m", rep.witness.m_prime},
                    {"bound", rep.witness_bound}};
  }
  return j;
}

inline json oracle_result_to_json(const OracleResult& r) {
  return json{{"variant", variant_name(r.variant)},
              {"rows", r.rows},
              {"cols", r.cols},
              {"rank", r.rank},
              {"corank", r.corank},
              {"trivial_dim", r.trivial_dim},
              {"verdict", r.rigid ? "rigid" : "flexible"},
              {"dof", r.dof},
              {"trials", r.trials},
              {"seed", r.seed},
              {"modulus", r.modulus}};
}

inline json lift_to_json(const LiftGraph& lg) {
  json verts = json::array();
  for (const auto& v : lg.labels)
    verts.push_back({{"base", v.base}, {"element", element_to_json(v.deck)}});
  json edges = json::array();
  for (const auto& e : lg.edges) edges.push_back({{"u", e.u}, {"v", e.v}});
  json j{{"n", lg.n}, {"vertices", verts}, {"edges", edges}};
  if (lg.window) {
    const auto& w = *lg.window;
    j["window"] = {w[0], w[1], w[2], w[3]};
  }
  return j;
}

}  // namespace rigi
