#pragma once

// Brute-force reference implementations used only by the tests. They read
// graphs through accessors and rebuild results through Graph::validate, and
// never call canonical_form, automorphism_count, contraction, extraction or
// insertion from the library.

#include <ckhopf/graph.hpp>
#include <ckhopf/rational.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using ckhopf::Graph;
using ckhopf::RawGraph;
using ckhopf::Rational;

// Backtracking over half-edge maps a -> b. Calls `found` on each complete
// structure-preserving bijection; stops early when it returns false.
inline void for_each_isomorphism(const Graph& a, const Graph& b, const std::function<bool()>& found)
{
  const int h = a.half_edge_count();
  if (h != b.half_edge_count() || a.vertex_count() != b.vertex_count())
    return;
  auto empties = [](const Graph& g) {
    int n = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
      n += g.valency(v) == 0;
    return n;
  };
  if (empties(a) != empties(b))
    return;
  std::vector<int> image(h, -1);
  std::vector<bool> used(h, false);
  std::vector<int> vimage(a.vertex_count(), -1), vpre(b.vertex_count(), -1);
  bool stop = false;
  auto rec = [&](auto&& self, int x) -> void {
    if (stop)
      return;
    if (x == h) {
      if (!found())
        stop = true;
      return;
    }
    const int va = a.vertex_of(x);
    for (int y = 0; y < h && !stop; ++y) {
      if (used[y])
        continue;
      const int vb = b.vertex_of(y);
      if (a.is_external_vertex(va) != b.is_external_vertex(vb) || a.valency(va) != b.valency(vb))
        continue;
      if (vimage[va] != -1 && vimage[va] != vb)
        continue;
      if (vimage[va] == -1 && vpre[vb] != -1)
        continue;
      const int ma = a.mate(x);
      if (image[ma] != -1 && image[ma] != b.mate(y))
        continue;
      const bool fresh_vertex = vimage[va] == -1;
      image[x] = y;
      used[y] = true;
      if (fresh_vertex) {
        vimage[va] = vb;
        vpre[vb] = va;
      }
      self(self, x + 1);
      image[x] = -1;
      used[y] = false;
      if (fresh_vertex) {
        vimage[va] = -1;
        vpre[vb] = -1;
      }
    }
  };
  rec(rec, 0);
}

inline bool iso(const Graph& a, const Graph& b)
{
  bool any = false;
  for_each_isomorphism(a, b, [&] {
    any = true;
    return false;
  });
  return any;
}

inline long long aut(const Graph& g)
{
  long long n = 0;
  for_each_isomorphism(g, g, [&] {
    ++n;
    return true;
  });
  return n;
}

// Half-edge description with explicit vertex sets, rebuilt into a Graph via
// validate.
struct Naive {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> vertices;
  std::vector<bool> external;

  static Naive of(const Graph& g)
  {
    Naive n;
    for (int h = 0; h < g.half_edge_count(); ++h)
      if (h < g.mate(h))
        n.edges.emplace_back(h, g.mate(h));
    for (int v = 0; v < g.vertex_count(); ++v) {
      n.vertices.push_back(g.vertex(v));
      n.external.push_back(g.is_external_vertex(v));
    }
    return n;
  }

  Graph build() const
  {
    RawGraph raw;
    for (auto [a, b] : edges) {
      raw.half_edges.push_back(a);
      raw.half_edges.push_back(b);
      raw.edges.push_back({a, b});
    }
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      raw.vertices.emplace_back(vertices[v].begin(), vertices[v].end());
      if (external[v])
        raw.external.push_back(static_cast<long long>(v));
    }
    return Graph::validate(raw);
  }
};

inline std::vector<std::pair<int, int>> internal_edges(const Graph& g)
{
  std::vector<std::pair<int, int>> out;
  for (int h = 0; h < g.half_edge_count(); ++h) {
    const int m = g.mate(h);
    if (h < m && !g.is_external_vertex(g.vertex_of(h)) && !g.is_external_vertex(g.vertex_of(m)))
      out.emplace_back(h, m);
  }
  return out;
}

inline Graph contract(const Graph& g, const std::vector<std::pair<int, int>>& gamma)
{
  Naive n = Naive::of(g);
  std::set<int> gone;
  for (auto [a, b] : gamma) {
    gone.insert(a);
    gone.insert(b);
  }
  // merge vertex sets joined by gamma edges until stable
  std::vector<int> group(n.vertices.size());
  std::iota(group.begin(), group.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : gamma) {
      const int ga = group[g.vertex_of(a)], gb = group[g.vertex_of(b)];
      if (ga == gb)
        continue;
      const int lo = std::min(ga, gb), hi = std::max(ga, gb);
      for (int& x : group)
        if (x == hi)
          x = lo;
      changed = true;
    }
  }
  Naive out;
  for (auto e : n.edges)
    if (!gone.count(e.first))
      out.edges.push_back(e);
  std::map<int, std::vector<int>> merged;
  std::map<int, bool> ext;
  for (std::size_t v = 0; v < n.vertices.size(); ++v) {
    auto& dst = merged[group[v]];
    for (int h : n.vertices[v])
      if (!gone.count(h))
        dst.push_back(h);
    ext[group[v]] = ext[group[v]] || n.external[v];
  }
  for (auto& [k, hs] : merged) {
    out.vertices.push_back(hs);
    out.external.push_back(ext[k]);
  }
  return out.build();
}

inline Graph extract(const Graph& g, const std::vector<std::pair<int, int>>& gamma)
{
  std::set<int> in_gamma;
  std::set<int> touched;
  for (auto [a, b] : gamma) {
    in_gamma.insert(a);
    in_gamma.insert(b);
    touched.insert(g.vertex_of(a));
    touched.insert(g.vertex_of(b));
  }
  Naive out;
  out.edges = gamma;
  int fresh = 1000;
  for (int v : touched) {
    out.vertices.push_back(g.vertex(v));
    out.external.push_back(false);
    for (int h : g.vertex(v))
      if (!in_gamma.count(h)) {
        out.edges.emplace_back(h, fresh);
        out.vertices.push_back({fresh});
        out.external.push_back(true);
        ++fresh;
      }
  }
  return out.build();
}

// Pairs of graphs with coefficients, merged by brute-force isomorphism.
struct PairSum {
  struct Term {
    Graph left, right;
    Rational coeff;
  };
  std::vector<Term> terms;

  void add(const Graph& l, const Graph& r, const Rational& c)
  {
    for (Term& t : terms)
      if (iso(t.left, l) && iso(t.right, r)) {
        t.coeff += c;
        return;
      }
    terms.push_back({l, r, c});
  }
};

// Coproduct of a connected graph over nonempty proper subsets of internal edges.
inline PairSum coproduct(const Graph& g, bool full = false)
{
  PairSum s;
  s.add(Graph(), g, 1);
  s.add(g, Graph(), 1);
  const auto internal = internal_edges(g);
  const int m = static_cast<int>(internal.size());
  for (int mask = 1; mask < (1 << m); ++mask) {
    if (mask == (1 << m) - 1 && !full)
      continue;
    std::vector<std::pair<int, int>> gamma;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1)
        gamma.push_back(internal[i]);
    s.add(extract(g, gamma), contract(g, gamma), 1);
  }
  return s;
}

// Single graphs with coefficients, merged by brute-force isomorphism.
struct Sum {
  struct Term {
    Graph graph;
    Rational coeff;
  };
  std::vector<Term> terms;

  void add(const Graph& g, const Rational& c)
  {
    for (Term& t : terms)
      if (iso(t.graph, g)) {
        t.coeff += c;
        return;
      }
    terms.push_back({g, c});
  }

  Rational coefficient(const Graph& g) const
  {
    for (const Term& t : terms)
      if (iso(t.graph, g))
        return t.coeff;
    return 0;
  }
};

// Γ1∘Γ2 by direct construction on half-edge labels.
inline Sum insert(const Graph& g1, const Graph& g2)
{
  Sum s;
  std::vector<std::pair<int, int>> legs; // (attachment half-edge, leg half-edge) in g2
  for (int h = 0; h < g2.half_edge_count(); ++h)
    if (!g2.is_external_vertex(g2.vertex_of(h)) && g2.is_external_vertex(g2.vertex_of(g2.mate(h))))
      legs.emplace_back(h, g2.mate(h));
  const int k = static_cast<int>(legs.size());
  const int offset = 100;
  for (int v = 0; v < g1.vertex_count(); ++v) {
    if (g1.is_external_vertex(v) || g1.valency(v) != k)
      continue;
    std::vector<int> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      Naive out;
      for (int h = 0; h < g1.half_edge_count(); ++h)
        if (h < g1.mate(h))
          out.edges.emplace_back(h, g1.mate(h));
      for (int u = 0; u < g1.vertex_count(); ++u)
        if (u != v) {
          out.vertices.push_back(g1.vertex(u));
          out.external.push_back(g1.is_external_vertex(u));
        }
      std::map<int, int> replace;
      for (int i = 0; i < k; ++i)
        replace[legs[sigma[i]].first] = g1.vertex(v)[i];
      for (int h = 0; h < g2.half_edge_count(); ++h) {
        const int m = g2.mate(h);
        if (h < m && !g2.is_external_vertex(g2.vertex_of(h)) && !g2.is_external_vertex(g2.vertex_of(m)))
          out.edges.emplace_back(offset + h, offset + m);
      }
      for (int u = 0; u < g2.vertex_count(); ++u) {
        if (g2.is_external_vertex(u))
          continue;
        std::vector<int> hs;
        for (int h : g2.vertex(u))
          hs.push_back(replace.count(h) ? replace[h] : offset + h);
        out.vertices.push_back(hs);
        out.external.push_back(false);
      }
      s.add(out.build(), 1);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return s;
}

// Every graph on 2n half-edges: all pairings, all set partitions into
// vertices, all choices of external vertices among the univalent ones,
// deduplicated by brute-force isomorphism.
inline std::vector<Graph> all_graphs(int n_edges, bool connected_only)
{
  const int h = 2 * n_edges;
  std::vector<std::vector<std::pair<int, int>>> pairings;
  {
    std::vector<std::pair<int, int>> cur;
    std::vector<bool> used(h, false);
    auto rec = [&](auto&& self) -> void {
      int first = 0;
      while (first < h && used[first])
        ++first;
      if (first == h) {
        pairings.push_back(cur);
        return;
      }
      used[first] = true;
      for (int o = first + 1; o < h; ++o)
        if (!used[o]) {
          used[o] = true;
          cur.emplace_back(first, o);
          self(self);
          cur.pop_back();
          used[o] = false;
        }
      used[first] = false;
    };
    rec(rec);
  }
  std::vector<std::vector<int>> partitions; // restricted growth strings
  {
    std::vector<int> rgs(h, 0);
    auto rec = [&](auto&& self, int i, int blocks) -> void {
      if (i == h) {
        partitions.push_back(rgs);
        return;
      }
      for (int b = 0; b <= blocks; ++b) {
        rgs[i] = b;
        self(self, i + 1, std::max(blocks, b + 1));
      }
    };
    if (h == 0)
      partitions.push_back({});
    else
      rec(rec, 0, 0);
  }
  struct Bucket {
    std::vector<Graph> reps;
  };
  std::map<std::vector<int>, Bucket> buckets; // cheap invariant -> classes
  std::vector<Graph> out;
  for (const auto& pairing : pairings)
    for (const auto& rgs : partitions) {
      const int blocks = h == 0 ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
      std::vector<std::vector<int>> vertices(blocks);
      for (int x = 0; x < h; ++x)
        vertices[rgs[x]].push_back(x);
      std::vector<int> singles;
      for (int b = 0; b < blocks; ++b)
        if (vertices[b].size() == 1)
          singles.push_back(b);
      for (int mask = 0; mask < (1 << singles.size()); ++mask) {
        RawGraph raw;
        for (int x = 0; x < h; ++x)
          raw.half_edges.push_back(x);
        for (auto [a, b] : pairing)
          raw.edges.push_back({a, b});
        for (const auto& vs : vertices)
          raw.vertices.emplace_back(vs.begin(), vs.end());
        for (std::size_t i = 0; i < singles.size(); ++i)
          if (mask >> i & 1)
            raw.external.push_back(singles[i]);
        const Graph g = Graph::validate(raw);
        if (connected_only) {
          // flood fill over vertices through edges
          std::vector<bool> seen(g.vertex_count(), false);
          std::vector<int> stack = {0};
          seen[0] = true;
          while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int x : g.vertex(v)) {
              const int w = g.vertex_of(g.mate(x));
              if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
              }
            }
          }
          if (std::find(seen.begin(), seen.end(), false) != seen.end())
            continue;
        }
        std::vector<int> key = {g.vertex_count(), static_cast<int>(raw.external.size())};
        std::vector<int> val;
        for (int v = 0; v < g.vertex_count(); ++v)
          val.push_back(g.valency(v) * 2 + (g.is_external_vertex(v) ? 1 : 0));
        std::sort(val.begin(), val.end());
        key.insert(key.end(), val.begin(), val.end());
        Bucket& bucket = buckets[key];
        bool known = false;
        for (const Graph& r : bucket.reps)
          if (iso(r, g)) {
            known = true;
            break;
          }
        if (!known) {
          bucket.reps.push_back(g);
          out.push_back(g);
        }
      }
    }
  return out;
}

} // namespace oracle
