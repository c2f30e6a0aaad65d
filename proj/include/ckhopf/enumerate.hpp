#pragma once

// Exhaustive enumeration of isomorphism classes by edge count.
//
// Connected graphs with n edges are grown from connected graphs with n-1
// edges: every connected graph with n >= 2 edges has an edge whose removal
// (dropping a vertex left empty) keeps it connected, either a cycle edge or
// the edge of a univalent vertex. General graphs are multisets of connected
// ones. Graphs with isolated empty vertices are never generated.

#include "cache.hpp"
#include "canonical.hpp"
#include "graph.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string_view>
#include <vector>

namespace ckhopf {

enum class GraphFilter { All, Connected, ConnectedPlus };

inline GraphFilter parse_graph_filter(std::string_view name)
{
  if (name == "all")
    return GraphFilter::All;
  if (name == "connected")
    return GraphFilter::Connected;
  if (name == "connected_plus" || name == "connected-plus")
    return GraphFilter::ConnectedPlus;
  throw Error(ErrorCode::ParseError, "unknown graph filter '" + std::string(name) + "'");
}

// Caps the number of candidate graphs an enumeration may canonize.
struct Budget {
  std::uint64_t max_candidates = 5'000'000;
};

using GraphList = std::vector<CanonicalForm>;

namespace detail {

enum class Endpoint { Existing, NewInternal, NewExternal };

// Adds one edge whose ends attach to existing internal vertices u, w or to
// fresh vertices.
inline Graph add_edge(const Graph& g, Endpoint first, int u, Endpoint second, int w)
{
  std::vector<int> mate = g.mates();
  const int a = g.half_edge_count();
  const int b = a + 1;
  mate.push_back(b);
  mate.push_back(a);
  std::vector<std::vector<int>> vertices = g.vertices();
  std::vector<bool> external;
  for (int v = 0; v < g.vertex_count(); ++v)
    external.push_back(g.is_external_vertex(v));
  auto attach = [&](Endpoint kind, int v, int h) {
    if (kind == Endpoint::Existing) {
      vertices[v].push_back(h);
    } else {
      vertices.push_back({h});
      external.push_back(kind == Endpoint::NewExternal);
    }
  };
  attach(first, u, a);
  attach(second, w, b);
  return Graph(std::move(mate), std::move(vertices), std::move(external));
}

inline void charge(std::uint64_t& used, const Budget& budget)
{
  if (++used > budget.max_candidates)
    throw Error(ErrorCode::ResourceBound, "enumeration exceeded budget of " +
                                              std::to_string(budget.max_candidates) + " candidates");
}

inline std::vector<std::shared_ptr<const GraphList>>& connected_levels()
{
  static std::vector<std::shared_ptr<const GraphList>> levels;
  return levels;
}

inline std::mutex& connected_levels_mutex()
{
  static std::mutex m;
  return m;
}

inline GraphList grow_connected(const GraphList& previous, int n, const Budget& budget)
{
  std::set<CanonicalKey> seen;
  GraphList out;
  std::uint64_t used = 0;
  auto offer = [&](const Graph& g) {
    charge(used, budget);
    CanonicalForm cf = canonical_form(g);
    if (seen.insert(cf.key).second)
      out.push_back(std::move(cf));
  };
  if (n == 1) {
    const Graph empty;
    offer(add_edge(empty, Endpoint::NewInternal, 0, Endpoint::NewInternal, 0));
    offer(add_edge(empty, Endpoint::NewInternal, 0, Endpoint::NewExternal, 0));
    offer(add_edge(empty, Endpoint::NewExternal, 0, Endpoint::NewExternal, 0));
    // loop1: one vertex carrying both ends
    offer(Graph({1, 0}, {{0, 1}}, {false}));
  } else {
    for (const CanonicalForm& base : previous) {
      const Graph& g = base.graph;
      const std::vector<int> internal = g.internal_vertices();
      for (std::size_t i = 0; i < internal.size(); ++i) {
        const int u = internal[i];
        for (std::size_t j = i; j < internal.size(); ++j)
          offer(add_edge(g, Endpoint::Existing, u, Endpoint::Existing, internal[j]));
        offer(add_edge(g, Endpoint::Existing, u, Endpoint::NewInternal, 0));
        offer(add_edge(g, Endpoint::Existing, u, Endpoint::NewExternal, 0));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.key < y.key; });
  return out;
}

} // namespace detail

// Connected classes with exactly n edges (n >= 1), sorted by canonical key.
inline std::shared_ptr<const GraphList> connected_graphs(int n, const Budget& budget = {})
{
  if (n < 0)
    throw Error(ErrorCode::PreconditionViolated, "edge count must be nonnegative");
  std::lock_guard lock(detail::connected_levels_mutex());
  auto& levels = detail::connected_levels();
  if (levels.empty())
    levels.push_back(std::make_shared<const GraphList>()); // n = 0: none
  while (static_cast<int>(levels.size()) <= n) {
    const int next = static_cast<int>(levels.size());
    levels.push_back(std::make_shared<const GraphList>(detail::grow_connected(*levels.back(), next, budget)));
  }
  return levels[n];
}

// Visits every graph that is a multiset of connected graphs with total edge
// count n. `admit` sees the accumulated grade and component count of a
// partial multiset and may prune; `visit` receives the components.
inline void for_each_graph(int n, const std::function<bool(const GradeTriple&, int)>& admit,
                           const std::function<void(const std::vector<const CanonicalForm*>&)>& visit,
                           const Budget& budget = {})
{
  std::vector<std::shared_ptr<const GraphList>> levels;
  for (int e = 0; e <= n; ++e)
    levels.push_back(connected_graphs(e, budget));
  std::vector<std::pair<int, std::size_t>> flat; // (edge count, index), nondecreasing order
  for (int e = 1; e <= n; ++e)
    for (std::size_t i = 0; i < levels[e]->size(); ++i)
      flat.emplace_back(e, i);
  std::vector<GradeTriple> grades;
  for (const auto& [e, i] : flat)
    grades.push_back((*levels[e])[i].graph.grade());

  std::vector<const CanonicalForm*> chosen;
  std::uint64_t used = 0;
  auto rec = [&](auto&& self, std::size_t start, int remaining, GradeTriple acc) -> void {
    if (remaining == 0) {
      detail::charge(used, budget);
      visit(chosen);
      return;
    }
    for (std::size_t f = start; f < flat.size(); ++f) {
      const auto [e, i] = flat[f];
      if (e > remaining)
        break;
      GradeTriple next = acc + grades[f];
      if (!admit(next, static_cast<int>(chosen.size()) + 1))
        continue;
      chosen.push_back(&(*levels[e])[i]);
      self(self, f, remaining - e, next);
      chosen.pop_back();
    }
  };
  if (admit(GradeTriple{}, 0))
    rec(rec, 0, n, GradeTriple{});
}

inline Graph union_of(const std::vector<const CanonicalForm*>& parts)
{
  Graph g;
  for (const CanonicalForm* p : parts)
    g = disjoint_union(g, p->graph);
  return g;
}

// One representative per isomorphism class with exactly n edges, sorted by
// canonical key.
inline GraphList enumerate_graphs(int n_edges, GraphFilter filter, const Budget& budget = {})
{
  if (n_edges < 0)
    throw Error(ErrorCode::PreconditionViolated, "edge count must be nonnegative");
  GraphList out;
  if (filter != GraphFilter::All) {
    for (const CanonicalForm& cf : *connected_graphs(n_edges, budget))
      if (filter == GraphFilter::Connected || cf.graph.grade().internal_edges > 0)
        out.push_back(cf);
    return out;
  }
  for_each_graph(
      n_edges, [](const GradeTriple&, int) { return true; },
      [&](const std::vector<const CanonicalForm*>& parts) { out.push_back(canonical_form(union_of(parts))); },
      budget);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.key < y.key; });
  return out;
}

} // namespace ckhopf
