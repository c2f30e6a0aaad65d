#pragma once

// Half-edge multigraphs: a set of half-edges {0..2n-1} partitioned into
// edges (pairs) and vertices (arbitrary, possibly empty, parts), with a set
// of distinguished univalent external vertices.

#include "error.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ckhopf {

struct Edge {
  int a = 0;
  int b = 0;

  Edge() = default;
  Edge(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {}

  auto operator<=>(const Edge&) const = default;
};

struct GradeTriple {
  int edges = 0;          // n
  int internal_edges = 0; // m
  int external = 0;       // k

  auto operator<=>(const GradeTriple&) const = default;

  GradeTriple operator+(const GradeTriple& o) const
  {
    return {edges + o.edges, internal_edges + o.internal_edges, external + o.external};
  }
};

// Unvalidated description as it appears in files. Labels are opaque integers.
struct RawGraph {
  std::vector<long long> half_edges;
  std::vector<std::vector<long long>> edges;
  std::vector<std::vector<long long>> vertices;
  std::vector<long long> external; // indices into `vertices`
};

class Graph {
public:
  // The empty graph.
  Graph() = default;

  // Builds a graph from already-normalized parts: `mate` is an involution
  // without fixed points on 0..H-1, `vertices` partitions 0..H-1. Vertex order
  // and in-vertex order are normalized; external flags travel with vertices.
  Graph(std::vector<int> mate, std::vector<std::vector<int>> vertices, std::vector<bool> external)
      : mate_(std::move(mate))
  {
    std::vector<std::pair<std::vector<int>, bool>> vs;
    vs.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      std::sort(vertices[i].begin(), vertices[i].end());
      vs.emplace_back(std::move(vertices[i]), i < external.size() && external[i]);
    }
    std::sort(vs.begin(), vs.end());
    vertex_of_.assign(mate_.size(), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (int h : vs[i].first)
        vertex_of_[h] = static_cast<int>(i);
      vertices_.push_back(std::move(vs[i].first));
      external_.push_back(vs[i].second);
    }
  }

  static Graph validate(const RawGraph& raw);

  int half_edge_count() const { return static_cast<int>(mate_.size()); }
  int edge_count() const { return half_edge_count() / 2; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  bool empty() const { return mate_.empty() && vertices_.empty(); }

  int mate(int h) const { return mate_[h]; }
  int vertex_of(int h) const { return vertex_of_[h]; }
  const std::vector<int>& vertex(int v) const { return vertices_[v]; }
  const std::vector<std::vector<int>>& vertices() const { return vertices_; }
  const std::vector<int>& mates() const { return mate_; }
  bool is_external_vertex(int v) const { return external_[v]; }
  int valency(int v) const { return static_cast<int>(vertices_[v].size()); }

  bool is_edge(const Edge& e) const
  {
    return e.a >= 0 && e.b < half_edge_count() && e.a != e.b && mate_[e.a] == e.b;
  }
  bool is_external_edge(const Edge& e) const
  {
    return external_[vertex_of_[e.a]] || external_[vertex_of_[e.b]];
  }
  bool is_internal_edge(const Edge& e) const { return is_edge(e) && !is_external_edge(e); }
  bool is_loop(const Edge& e) const { return vertex_of_[e.a] == vertex_of_[e.b]; }

  std::vector<Edge> edges() const
  {
    std::vector<Edge> out;
    for (int h = 0; h < half_edge_count(); ++h)
      if (h < mate_[h])
        out.emplace_back(h, mate_[h]);
    return out;
  }
  std::vector<Edge> internal_edges() const
  {
    std::vector<Edge> out;
    for (const Edge& e : edges())
      if (!is_external_edge(e))
        out.push_back(e);
    return out;
  }
  std::vector<Edge> external_edges() const
  {
    std::vector<Edge> out;
    for (const Edge& e : edges())
      if (is_external_edge(e))
        out.push_back(e);
    return out;
  }
  std::vector<int> external_vertices() const
  {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
      if (external_[v])
        out.push_back(v);
    return out;
  }
  std::vector<int> internal_vertices() const
  {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
      if (!external_[v])
        out.push_back(v);
    return out;
  }
  bool has_empty_vertex() const
  {
    return std::any_of(vertices_.begin(), vertices_.end(), [](const auto& v) { return v.empty(); });
  }

  GradeTriple grade() const
  {
    GradeTriple g;
    g.edges = edge_count();
    for (const Edge& e : edges())
      if (!is_external_edge(e))
        ++g.internal_edges;
    g.external = static_cast<int>(std::count(external_.begin(), external_.end(), true));
    return g;
  }

  // Structural equality of the normalized representation (not isomorphism).
  bool operator==(const Graph& o) const
  {
    return mate_ == o.mate_ && vertices_ == o.vertices_ && external_ == o.external_;
  }

private:
  std::vector<int> mate_;
  std::vector<int> vertex_of_;
  std::vector<std::vector<int>> vertices_;
  std::vector<bool> external_;
};

inline Graph Graph::validate(const RawGraph& raw)
{
  std::map<long long, int> index;
  std::vector<long long> labels = raw.half_edges;
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw Error(ErrorCode::OverlappingPartition, "duplicate half-edge label");
  for (std::size_t i = 0; i < labels.size(); ++i)
    index[labels[i]] = static_cast<int>(i);
  const int count = static_cast<int>(index.size());
  auto lookup = [&](long long label, const char* where) {
    auto it = index.find(label);
    if (it == index.end())
      throw Error(ErrorCode::OverlappingPartition,
                  std::string(where) + " references unknown half-edge " + std::to_string(label));
    return it->second;
  };

  std::vector<int> mate(count, -1);
  for (const auto& e : raw.edges) {
    if (e.size() != 2 || e[0] == e[1])
      throw Error(ErrorCode::NonPairEdge, "edge must contain exactly two distinct half-edges");
    int a = lookup(e[0], "edge");
    int b = lookup(e[1], "edge");
    if (mate[a] != -1 || mate[b] != -1)
      throw Error(ErrorCode::OverlappingPartition, "half-edge belongs to two edges");
    mate[a] = b;
    mate[b] = a;
  }

  std::vector<int> owner(count, -1);
  std::vector<std::vector<int>> vertices;
  for (std::size_t v = 0; v < raw.vertices.size(); ++v) {
    std::vector<int> part;
    for (long long label : raw.vertices[v]) {
      int h = lookup(label, "vertex");
      if (owner[h] != -1)
        throw Error(ErrorCode::OverlappingPartition, "half-edge belongs to two vertices");
      owner[h] = static_cast<int>(v);
      part.push_back(h);
    }
    vertices.push_back(std::move(part));
  }

  for (int h = 0; h < count; ++h)
    if (mate[h] == -1 || owner[h] == -1)
      throw Error(ErrorCode::DanglingHalfEdge,
                  "half-edge " + std::to_string(labels[h]) +
                      (mate[h] == -1 ? " is in no edge" : " is in no vertex"));

  std::vector<bool> external(vertices.size(), false);
  for (long long v : raw.external) {
    if (v < 0 || v >= static_cast<long long>(vertices.size()))
      throw Error(ErrorCode::ParseError, "external vertex index out of range");
    if (external[v])
      throw Error(ErrorCode::OverlappingPartition, "external vertex listed twice");
    if (vertices[v].size() != 1)
      throw Error(ErrorCode::ExternalNotUnivalent,
                  "external vertex " + std::to_string(v) + " has valency " +
                      std::to_string(vertices[v].size()));
    external[v] = true;
  }
  return Graph(std::move(mate), std::move(vertices), std::move(external));
}

inline RawGraph to_raw(const Graph& g)
{
  RawGraph raw;
  for (int h = 0; h < g.half_edge_count(); ++h)
    raw.half_edges.push_back(h);
  for (const Edge& e : g.edges())
    raw.edges.push_back({e.a, e.b});
  for (int v = 0; v < g.vertex_count(); ++v) {
    raw.vertices.emplace_back(g.vertex(v).begin(), g.vertex(v).end());
    if (g.is_external_vertex(v))
      raw.external.push_back(v);
  }
  return raw;
}

// Applies a bijection of half-edges: half-edge h becomes perm[h].
inline Graph relabel(const Graph& g, std::span<const int> perm)
{
  const int count = g.half_edge_count();
  std::vector<int> mate(count);
  for (int h = 0; h < count; ++h)
    mate[perm[h]] = perm[g.mate(h)];
  std::vector<std::vector<int>> vertices;
  std::vector<bool> external;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> part;
    for (int h : g.vertex(v))
      part.push_back(perm[h]);
    vertices.push_back(std::move(part));
    external.push_back(g.is_external_vertex(v));
  }
  return Graph(std::move(mate), std::move(vertices), std::move(external));
}

namespace detail {

// Rebuilds a graph keeping the half-edges flagged in `keep`, renumbered in
// increasing order. `vertices` refers to old labels; dropped labels are
// filtered out of each vertex.
inline Graph rebuild(const Graph& g, const std::vector<bool>& keep, const std::vector<std::vector<int>>& vertices,
                     const std::vector<bool>& external)
{
  std::vector<int> fresh(g.half_edge_count(), -1);
  int next = 0;
  for (int h = 0; h < g.half_edge_count(); ++h)
    if (keep[h])
      fresh[h] = next++;
  std::vector<int> mate(next);
  for (int h = 0; h < g.half_edge_count(); ++h)
    if (keep[h])
      mate[fresh[h]] = fresh[g.mate(h)];
  std::vector<std::vector<int>> parts;
  for (const auto& v : vertices) {
    std::vector<int> part;
    for (int h : v)
      if (keep[h])
        part.push_back(fresh[h]);
    parts.push_back(std::move(part));
  }
  return Graph(std::move(mate), std::move(parts), external);
}

} // namespace detail

// Label of half-edge h after the edge `removed` has been contracted.
inline int surviving_label(int h, const Edge& removed)
{
  return h - (removed.a < h ? 1 : 0) - (removed.b < h ? 1 : 0);
}

// Contracts one internal edge: a non-loop merges its two vertices, a loop is
// removed from its vertex (which may become empty). Surviving half-edges are
// renumbered in increasing order.
inline Graph contract_edge(const Graph& g, const Edge& e)
{
  if (!g.is_internal_edge(e))
    throw Error(ErrorCode::NotInternalEdge,
                "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "} is not an internal edge");
  std::vector<bool> keep(g.half_edge_count(), true);
  keep[e.a] = keep[e.b] = false;
  const int v1 = g.vertex_of(e.a);
  const int v2 = g.vertex_of(e.b);
  std::vector<std::vector<int>> vertices;
  std::vector<bool> external;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v == v2 && v1 != v2)
      continue;
    std::vector<int> part = g.vertex(v);
    if (v == v1 && v1 != v2)
      part.insert(part.end(), g.vertex(v2).begin(), g.vertex(v2).end());
    vertices.push_back(std::move(part));
    external.push_back(g.is_external_vertex(v));
  }
  return detail::rebuild(g, keep, vertices, external);
}

// Γ/γ for a set of internal edges, contracting all of them at once: vertices
// joined by edges of γ are merged and the half-edges of γ are dropped.
inline Graph contract_subgraph(const Graph& g, std::span<const Edge> gamma)
{
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v)
      v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> keep(g.half_edge_count(), true);
  for (const Edge& e : gamma) {
    if (!g.is_internal_edge(e) || !keep[e.a])
      throw Error(ErrorCode::NotInternalEdge,
                  "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "} is not an internal edge of the graph");
    keep[e.a] = keep[e.b] = false;
    parent[find(g.vertex_of(e.a))] = find(g.vertex_of(e.b));
  }
  std::map<int, std::vector<int>> merged;
  std::vector<std::vector<int>> vertices;
  std::vector<bool> external;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto& part = merged[find(v)];
    part.insert(part.end(), g.vertex(v).begin(), g.vertex(v).end());
  }
  for (auto& [root, part] : merged) {
    vertices.push_back(std::move(part));
    external.push_back(g.is_external_vertex(root));
  }
  return detail::rebuild(g, keep, vertices, external);
}

// The standalone graph of a nonempty set of internal edges γ: every vertex
// touching γ is kept whole, and each of its half-edges not in γ becomes the
// inner end of a fresh external leg.
inline Graph extract_subgraph(const Graph& g, std::span<const Edge> gamma)
{
  if (gamma.empty())
    throw Error(ErrorCode::EmptySubgraph, "subgraph must contain at least one edge");
  std::vector<bool> in_gamma(g.half_edge_count(), false);
  std::set<int> touched;
  for (const Edge& e : gamma) {
    if (!g.is_internal_edge(e) || in_gamma[e.a])
      throw Error(ErrorCode::NotInternalEdge,
                  "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "} is not an internal edge of the graph");
    in_gamma[e.a] = in_gamma[e.b] = true;
    touched.insert(g.vertex_of(e.a));
    touched.insert(g.vertex_of(e.b));
  }
  std::vector<int> kept; // old labels, increasing
  for (int v : touched)
    kept.insert(kept.end(), g.vertex(v).begin(), g.vertex(v).end());
  std::sort(kept.begin(), kept.end());
  std::vector<int> fresh(g.half_edge_count(), -1);
  for (std::size_t i = 0; i < kept.size(); ++i)
    fresh[kept[i]] = static_cast<int>(i);

  int next = static_cast<int>(kept.size());
  std::vector<int> mate(kept.size(), -1);
  std::vector<std::vector<int>> vertices;
  std::vector<bool> external;
  for (int h : kept) {
    if (in_gamma[h]) {
      mate[fresh[h]] = fresh[g.mate(h)];
    } else {
      mate[fresh[h]] = next;
      mate.push_back(fresh[h]);
      vertices.push_back({next});
      external.push_back(true);
      ++next;
    }
  }
  for (int v : touched) {
    std::vector<int> part;
    for (int h : g.vertex(v))
      part.push_back(fresh[h]);
    vertices.push_back(std::move(part));
    external.push_back(false);
  }
  return Graph(std::move(mate), std::move(vertices), std::move(external));
}

inline Graph disjoint_union(const Graph& g1, const Graph& g2)
{
  const int offset = g1.half_edge_count();
  std::vector<int> mate = g1.mates();
  for (int m : g2.mates())
    mate.push_back(m + offset);
  std::vector<std::vector<int>> vertices = g1.vertices();
  std::vector<bool> external;
  for (int v = 0; v < g1.vertex_count(); ++v)
    external.push_back(g1.is_external_vertex(v));
  for (int v = 0; v < g2.vertex_count(); ++v) {
    std::vector<int> part;
    for (int h : g2.vertex(v))
      part.push_back(h + offset);
    vertices.push_back(std::move(part));
    external.push_back(g2.is_external_vertex(v));
  }
  return Graph(std::move(mate), std::move(vertices), std::move(external));
}

// Components ordered by their smallest half-edge; isolated empty vertices
// come last, one component each. The empty graph has no components.
inline std::vector<Graph> connected_components(const Graph& g)
{
  const int nv = g.vertex_count();
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v)
      v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : g.edges())
    parent[find(g.vertex_of(e.a))] = find(g.vertex_of(e.b));

  std::map<int, int> first_half_edge; // root -> smallest half-edge
  for (int h = g.half_edge_count() - 1; h >= 0; --h)
    first_half_edge[find(g.vertex_of(h))] = h;
  std::vector<std::pair<int, int>> order; // (sort key, root)
  for (int v = 0; v < nv; ++v) {
    if (find(v) != v)
      continue;
    auto it = first_half_edge.find(v);
    order.emplace_back(it == first_half_edge.end() ? g.half_edge_count() + v : it->second, v);
  }
  std::sort(order.begin(), order.end());

  std::vector<Graph> out;
  for (const auto& [key, root] : order) {
    std::vector<bool> keep(g.half_edge_count(), false);
    std::vector<std::vector<int>> vertices;
    std::vector<bool> external;
    for (int v = 0; v < nv; ++v) {
      if (find(v) != root)
        continue;
      for (int h : g.vertex(v))
        keep[h] = true;
      vertices.push_back(g.vertex(v));
      external.push_back(g.is_external_vertex(v));
    }
    out.push_back(detail::rebuild(g, keep, vertices, external));
  }
  return out;
}

inline int component_count(const Graph& g) { return static_cast<int>(connected_components(g).size()); }

inline bool is_connected(const Graph& g) { return component_count(g) == 1; }

} // namespace ckhopf
