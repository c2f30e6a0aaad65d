#pragma once

// Canonical labeling and automorphism counting.
//
// Half-edges at a vertex are interchangeable, so a half-edge graph is
// determined up to isomorphism by its vertex multigraph: external flags, loop
// counts and edge multiplicities between distinct vertices. We canonize that
// multigraph by colour refinement plus individualization, keep the
// lexicographically smallest leaf encoding, and rebuild a half-edge graph from
// it deterministically.

#include "graph.hpp"
#include "rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace ckhopf {

// Serialized canonical graph; equal keys <=> isomorphic graphs.
class CanonicalKey {
public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }

  auto operator<=>(const CanonicalKey&) const = default;
  bool operator==(const CanonicalKey&) const = default;

private:
  std::string bytes_;
};

// Compact JSON with keys in lexicographic order and no whitespace; this is the
// byte-exact graph file serialization.
inline std::string graph_json_string(const Graph& g)
{
  std::string s = "{\"edges\":[";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first)
      s += ',';
    first = false;
    s += '[' + std::to_string(e.a) + ',' + std::to_string(e.b) + ']';
  }
  s += "],\"external\":[";
  first = true;
  for (int v : g.external_vertices()) {
    if (!first)
      s += ',';
    first = false;
    s += std::to_string(v);
  }
  s += "],\"half_edges\":[";
  for (int h = 0; h < g.half_edge_count(); ++h) {
    if (h)
      s += ',';
    s += std::to_string(h);
  }
  s += "],\"vertices\":[";
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v)
      s += ',';
    s += '[';
    for (std::size_t i = 0; i < g.vertex(v).size(); ++i) {
      if (i)
        s += ',';
      s += std::to_string(g.vertex(v)[i]);
    }
    s += ']';
  }
  s += "]}";
  return s;
}

namespace detail {

struct VertexMultigraph {
  int n = 0;
  std::vector<int> external;             // 0/1
  std::vector<int> loops;
  std::vector<std::vector<int>> mult;    // mult[u][w], u != w

  explicit VertexMultigraph(const Graph& g)
      : n(g.vertex_count()), external(n), loops(n), mult(n, std::vector<int>(n, 0))
  {
    for (int v = 0; v < n; ++v)
      external[v] = g.is_external_vertex(v) ? 1 : 0;
    for (const Edge& e : g.edges()) {
      int u = g.vertex_of(e.a), w = g.vertex_of(e.b);
      if (u == w)
        ++loops[u];
      else {
        ++mult[u][w];
        ++mult[w][u];
      }
    }
  }

  std::vector<int> initial_colours(const Graph& g) const
  {
    std::vector<std::tuple<int, int, int>> keys(n);
    for (int v = 0; v < n; ++v)
      keys[v] = {external[v], g.valency(v), loops[v]};
    return rank(keys);
  }

  template <class Key>
  static std::vector<int> rank(const std::vector<Key>& keys)
  {
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i)
      out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
    return out;
  }

  static int colour_count(const std::vector<int>& colours)
  {
    return colours.empty() ? 0 : *std::max_element(colours.begin(), colours.end()) + 1;
  }

  // Iterated neighbourhood refinement until the number of colours is stable.
  std::vector<int> refine(std::vector<int> colours) const
  {
    int count = colour_count(colours);
    while (true) {
      std::vector<std::pair<int, std::vector<std::pair<int, int>>>> sig(n);
      for (int v = 0; v < n; ++v) {
        sig[v].first = colours[v];
        for (int w = 0; w < n; ++w)
          if (w != v && mult[v][w] > 0)
            sig[v].second.emplace_back(colours[w], mult[v][w]);
        std::sort(sig[v].second.begin(), sig[v].second.end());
      }
      std::vector<int> next = rank(sig);
      int next_count = colour_count(next);
      if (next_count == count)
        return next;
      colours = std::move(next);
      count = next_count;
    }
  }

  bool twins(int u, int w) const
  {
    if (external[u] != external[w] || loops[u] != loops[w])
      return false;
    for (int x = 0; x < n; ++x)
      if (x != u && x != w && mult[u][x] != mult[w][x])
        return false;
    return true;
  }

  // order[p] = vertex at position p.
  std::vector<int> encode(const std::vector<int>& order) const
  {
    std::vector<int> code;
    code.reserve(2 + 2 * n + n * n / 2);
    code.push_back(n);
    for (int p = 0; p < n; ++p) {
      code.push_back(external[order[p]]);
      code.push_back(loops[order[p]]);
    }
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        code.push_back(mult[order[p]][order[q]]);
    return code;
  }
};

struct CanonSearch {
  const VertexMultigraph& mg;
  std::vector<int> best_code;
  std::vector<int> best_order;
  bool have_best = false;

  void run(std::vector<int> colours)
  {
    colours = mg.refine(std::move(colours));
    const int n = mg.n;
    if (VertexMultigraph::colour_count(colours) == n) {
      std::vector<int> order(n);
      for (int v = 0; v < n; ++v)
        order[colours[v]] = v;
      std::vector<int> code = mg.encode(order);
      if (!have_best || code < best_code) {
        best_code = std::move(code);
        best_order = std::move(order);
        have_best = true;
      }
      return;
    }
    // First non-singleton cell in colour order.
    std::vector<int> size(n, 0);
    for (int c : colours)
      ++size[c];
    int target = 0;
    while (size[target] < 2)
      ++target;
    std::vector<int> cell;
    for (int v = 0; v < n; ++v)
      if (colours[v] == target)
        cell.push_back(v);
    std::vector<int> tried;
    for (int v : cell) {
      bool redundant = false;
      for (int t : tried)
        if (mg.twins(v, t)) {
          redundant = true;
          break;
        }
      if (redundant)
        continue;
      tried.push_back(v);
      std::vector<std::pair<int, int>> keys(n);
      for (int w = 0; w < n; ++w)
        keys[w] = {colours[w], (colours[w] == target && w != v) ? 1 : 0};
      run(VertexMultigraph::rank(keys));
    }
  }
};

inline Graph build_from_order(const VertexMultigraph& mg, const std::vector<int>& order)
{
  const int n = mg.n;
  // stubs[p][q]: half-edges of position p that pair with position q (q == p for loops)
  std::vector<std::vector<std::vector<int>>> stubs(n, std::vector<std::vector<int>>(n));
  std::vector<std::vector<int>> vertices(n);
  std::vector<bool> external(n);
  int next = 0;
  for (int p = 0; p < n; ++p) {
    const int u = order[p];
    external[p] = mg.external[u] != 0;
    for (int i = 0; i < 2 * mg.loops[u]; ++i) {
      stubs[p][p].push_back(next);
      vertices[p].push_back(next++);
    }
    for (int q = 0; q < n; ++q) {
      if (q == p)
        continue;
      for (int i = 0; i < mg.mult[u][order[q]]; ++i) {
        stubs[p][q].push_back(next);
        vertices[p].push_back(next++);
      }
    }
  }
  std::vector<int> mate(next, -1);
  for (int p = 0; p < n; ++p) {
    const auto& loop = stubs[p][p];
    for (std::size_t i = 0; i + 1 < loop.size(); i += 2) {
      mate[loop[i]] = loop[i + 1];
      mate[loop[i + 1]] = loop[i];
    }
    for (int q = p + 1; q < n; ++q)
      for (std::size_t i = 0; i < stubs[p][q].size(); ++i) {
        mate[stubs[p][q][i]] = stubs[q][p][i];
        mate[stubs[q][p][i]] = stubs[p][q][i];
      }
  }
  return Graph(std::move(mate), std::move(vertices), std::move(external));
}

} // namespace detail

struct CanonicalForm {
  CanonicalKey key;
  Graph graph; // canonically relabeled representative
};

inline CanonicalForm canonical_form(const Graph& g)
{
  detail::VertexMultigraph mg(g);
  detail::CanonSearch search{mg, {}, {}, false};
  search.run(mg.initial_colours(g));
  Graph canon = detail::build_from_order(mg, search.best_order);
  return {CanonicalKey(graph_json_string(canon)), std::move(canon)};
}

inline CanonicalKey canonical_key(const Graph& g) { return canonical_form(g).key; }

inline bool isomorphic(const Graph& a, const Graph& b)
{
  if (a.half_edge_count() != b.half_edge_count() || a.vertex_count() != b.vertex_count())
    return false;
  return canonical_key(a) == canonical_key(b);
}

namespace detail {

// Counts vertex permutations preserving external flags, loop counts and
// multiplicities, by backtracking along refined colour classes.
inline Integer vertex_automorphisms(const Graph& g, const VertexMultigraph& mg)
{
  const int n = mg.n;
  std::vector<int> colours = mg.refine(mg.initial_colours(g));
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  Integer count = 0;
  auto extend = [&](auto&& self, int v) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || colours[w] != colours[v] || mg.external[w] != mg.external[v] || mg.loops[w] != mg.loops[v])
        continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        ok = mg.mult[v][u] == mg.mult[w][image[u]];
      if (!ok)
        continue;
      used[w] = true;
      image[v] = w;
      self(self, v + 1);
      used[w] = false;
      image[v] = -1;
    }
  };
  extend(extend, 0);
  return count;
}

} // namespace detail

// |Aut(Γ)| on half-edges: vertex automorphisms times the symmetries fixing
// every vertex (permuting parallel edges, permuting and flipping loops).
inline Integer automorphism_count(const Graph& g)
{
  detail::VertexMultigraph mg(g);
  Integer total = detail::vertex_automorphisms(g, mg);
  for (int u = 0; u < mg.n; ++u) {
    total *= factorial(mg.loops[u]);
    total <<= mg.loops[u];
    for (int w = u + 1; w < mg.n; ++w)
      total *= factorial(mg.mult[u][w]);
  }
  return total;
}

} // namespace ckhopf
