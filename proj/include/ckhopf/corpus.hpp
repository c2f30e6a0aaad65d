#pragma once

// Named graphs used throughout tests, the harness and the CLI.

#include "canonical.hpp"
#include "graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ckhopf::corpus {

// Descriptions use the half-edge labels 1..2n; CLI edge arguments refer to them.

// One vertex with a self-loop. Grade (1,1,0).
inline RawGraph raw_loop1() { return {{1, 2}, {{1, 2}}, {{1, 2}}, {}}; }

// Two vertices joined by two parallel edges. Grade (2,2,0).
inline RawGraph raw_bubble() { return {{1, 2, 3, 4}, {{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}, {}}; }

// An internal edge between two bivalent vertices, each carrying one external
// leg. Grade (3,1,2).
inline RawGraph raw_twoleg() { return {{1, 2, 3, 4, 5, 6}, {{1, 2}, {3, 5}, {4, 6}}, {{1, 3}, {2, 4}, {5}, {6}}, {2, 3}}; }

// One internal vertex carrying a self-loop and two external legs. Grade (3,1,2).
inline RawGraph raw_tadpole2() { return {{1, 2, 3, 4, 5, 6}, {{1, 2}, {3, 5}, {4, 6}}, {{1, 2, 3, 4}, {5}, {6}}, {1, 2}}; }

// One internal vertex of valency k joined to k external vertices. Grade (k,0,k).
inline RawGraph raw_dot(int k)
{
  RawGraph raw;
  std::vector<long long> centre;
  for (int i = 1; i <= 2 * k; ++i)
    raw.half_edges.push_back(i);
  for (int i = 1; i <= k; ++i) {
    raw.edges.push_back({i, k + i});
    centre.push_back(i);
  }
  raw.vertices.push_back(centre);
  for (int i = 1; i <= k; ++i) {
    raw.vertices.push_back({k + i});
    raw.external.push_back(i);
  }
  return raw;
}

inline Graph empty() { return Graph(); }
inline Graph loop1() { return Graph::validate(raw_loop1()); }
inline Graph bubble() { return Graph::validate(raw_bubble()); }
inline Graph twoleg() { return Graph::validate(raw_twoleg()); }
inline Graph tadpole2() { return Graph::validate(raw_tadpole2()); }
inline Graph dot(int k) { return Graph::validate(raw_dot(k)); }

struct Named {
  std::string name;
  RawGraph raw;
  Graph graph;
};

inline const std::vector<Named>& named_graphs()
{
  static const std::vector<Named> all = [] {
    std::vector<std::pair<std::string, RawGraph>> raws = {
        {"empty", RawGraph{}},         {"loop1", raw_loop1()},   {"bubble", raw_bubble()}, {"twoleg", raw_twoleg()},
        {"tadpole2", raw_tadpole2()}, {"dot_1", raw_dot(1)},    {"dot_2", raw_dot(2)},    {"dot_3", raw_dot(3)},
    };
    std::vector<Named> out;
    for (auto& [name, raw] : raws)
      out.push_back({name, raw, Graph::validate(raw)});
    return out;
  }();
  return all;
}

inline const Named* find(std::string_view name)
{
  for (const Named& n : named_graphs())
    if (n.name == name)
      return &n;
  return nullptr;
}

inline std::optional<Graph> lookup(std::string_view name)
{
  if (const Named* n = find(name))
    return n->graph;
  return std::nullopt;
}

// Name of the corpus graph isomorphic to g, if any.
inline std::optional<std::string> name_of(const CanonicalKey& key)
{
  static const std::vector<std::pair<CanonicalKey, std::string>> keys = [] {
    std::vector<std::pair<CanonicalKey, std::string>> out;
    for (const Named& n : named_graphs())
      out.emplace_back(canonical_key(n.graph), n.name);
    return out;
  }();
  for (const auto& [k, name] : keys)
    if (k == key)
      return name;
  return std::nullopt;
}

} // namespace ckhopf::corpus
