#pragma once

// Insertion of one connected graph into an internal vertex of another.

#include "canonical.hpp"
#include "graph.hpp"
#include "graph_poly.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace ckhopf {

// Replaces vertex v of g1 by g2. The i-th half-edge of v (in g1.vertex(v)
// order) takes the place of the internal end of g2.external_edges()[sigma[i]];
// g2's external edges and external vertices are dropped.
inline Graph insert_at(const Graph& g1, int v, const std::vector<int>& sigma, const Graph& g2)
{
  if (v < 0 || v >= g1.vertex_count() || g1.is_external_vertex(v))
    throw Error(ErrorCode::NotInternalVertex, "vertex " + std::to_string(v) + " is not an internal vertex");
  const std::vector<Edge> legs = g2.external_edges();
  const int k = static_cast<int>(legs.size());
  if (g1.valency(v) != k)
    throw Error(ErrorCode::ValencyMismatch, "vertex valency " + std::to_string(g1.valency(v)) + " differs from " +
                                                std::to_string(k) + " external edges");
  std::vector<int> check = sigma;
  std::sort(check.begin(), check.end());
  std::vector<int> identity(k);
  std::iota(identity.begin(), identity.end(), 0);
  if (check != identity)
    throw Error(ErrorCode::PreconditionViolated, "sigma is not a bijection onto the external edges");

  const int h1 = g1.half_edge_count();
  // attachment half-edge of g2 -> replacing half-edge of g1
  std::vector<int> replaced_by(g2.half_edge_count(), -1);
  std::vector<bool> dropped(g2.half_edge_count(), false);
  for (int i = 0; i < k; ++i) {
    const Edge& e = legs[sigma[i]];
    const bool a_ext = g2.is_external_vertex(g2.vertex_of(e.a));
    const bool b_ext = g2.is_external_vertex(g2.vertex_of(e.b));
    if (a_ext && b_ext)
      throw Error(ErrorCode::PreconditionViolated, "inserted graph has an edge between two external vertices");
    const int attach = a_ext ? e.b : e.a;
    replaced_by[attach] = g1.vertex(v)[i];
    dropped[e.a] = dropped[e.b] = true;
  }
  std::vector<int> new_label(g2.half_edge_count(), -1);
  int next = h1;
  for (int h = 0; h < g2.half_edge_count(); ++h)
    if (!dropped[h])
      new_label[h] = next++;
  std::vector<int> mate(next);
  for (int h = 0; h < h1; ++h)
    mate[h] = g1.mate(h);
  for (int h = 0; h < g2.half_edge_count(); ++h)
    if (!dropped[h])
      mate[new_label[h]] = new_label[g2.mate(h)];

  std::vector<std::vector<int>> vertices;
  std::vector<bool> external;
  for (int u = 0; u < g1.vertex_count(); ++u) {
    if (u == v)
      continue;
    vertices.push_back(g1.vertex(u));
    external.push_back(g1.is_external_vertex(u));
  }
  for (int u = 0; u < g2.vertex_count(); ++u) {
    if (g2.is_external_vertex(u))
      continue;
    std::vector<int> hs;
    for (int h : g2.vertex(u))
      hs.push_back(replaced_by[h] >= 0 ? replaced_by[h] : new_label[h]);
    vertices.push_back(std::move(hs));
    external.push_back(false);
  }
  return Graph(std::move(mate), std::move(vertices), std::move(external));
}

// Γ1∘Γ2: every internal vertex of Γ1 whose valency equals the number of
// external edges of Γ2, and every bijection, counted with multiplicity.
inline GraphPoly insertion_product(const Graph& g1, const Graph& g2)
{
  GraphPoly out;
  const int k = static_cast<int>(g2.external_edges().size());
  std::vector<int> sigma(k);
  for (int v : g1.internal_vertices()) {
    if (g1.valency(v) != k)
      continue;
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      out.add(insert_at(g1, v, sigma, g2), 1);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return out;
}

inline GraphPoly insertion_product(const GraphPoly& a, const GraphPoly& b)
{
  GraphPoly out;
  for (const auto& [ka, ea] : a.terms()) {
    if (!is_connected(ea.graphs[0]))
      throw Error(ErrorCode::PreconditionViolated, "insertion_product needs connected graphs");
    for (const auto& [kb, eb] : b.terms()) {
      if (!is_connected(eb.graphs[0]))
        throw Error(ErrorCode::PreconditionViolated, "insertion_product needs connected graphs");
      out += (ea.coeff * eb.coeff) * insertion_product(ea.graphs[0], eb.graphs[0]);
    }
  }
  return out;
}

inline GraphPoly associator(const GraphPoly& a, const GraphPoly& b, const GraphPoly& c)
{
  return insertion_product(insertion_product(a, b), c) - insertion_product(a, insertion_product(b, c));
}

// Right symmetry of the associator.
inline bool prelie_check(const GraphPoly& a, const GraphPoly& b, const GraphPoly& c)
{
  return associator(a, b, c) == associator(a, c, b);
}

inline GraphPoly insertion_bracket(const GraphPoly& a, const GraphPoly& b)
{
  return insertion_product(a, b) - insertion_product(b, a);
}

} // namespace ckhopf
