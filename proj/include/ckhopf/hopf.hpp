#pragma once

// The commutative Hopf algebra of graphs: disjoint-union product, subgraph
// coproduct, counit, antipode, the isomorphism pairing and the dual star
// product computed on finite edge-count windows.

#include "cache.hpp"
#include "canonical.hpp"
#include "enumerate.hpp"
#include "graph.hpp"
#include "graph_poly.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <utility>
#include <vector>

namespace ckhopf {

struct CoproductOptions {
  // Also sum over the subgraph made of every internal edge.
  bool full_subgraph_term = false;
};

inline GraphPoly unit(const Rational& r = 1) { return GraphPoly::basis(Graph(), r); }

inline Rational counit(const GraphPoly& p) { return p.coefficient(canonical_key(Graph())); }

inline GraphPoly product(const GraphPoly& p, const GraphPoly& q)
{
  GraphPoly out;
  for (const auto& [ka, ea] : p.terms())
    for (const auto& [kb, eb] : q.terms())
      out.add(disjoint_union(ea.graphs[0], eb.graphs[0]), ea.coeff * eb.coeff);
  return out;
}

// Product in H⊗H.
inline GraphTensorPoly tensor_product(const GraphTensorPoly& x, const GraphTensorPoly& y)
{
  GraphTensorPoly out;
  for (const auto& [kx, ex] : x.terms())
    for (const auto& [ky, ey] : y.terms())
      out.add({disjoint_union(ex.graphs[0], ey.graphs[0]), disjoint_union(ex.graphs[1], ey.graphs[1])},
              ex.coeff * ey.coeff);
  return out;
}

inline Rational pairing(const GraphPoly& p, const GraphPoly& q)
{
  Rational s = 0;
  for (const auto& [k, e] : p.terms())
    s += e.coeff * q.coefficient(k[0]);
  return s;
}

// One term of ∇ on a connected graph, with the data star_product prunes on.
struct CoproductTerm {
  CanonicalForm left;  // the subgraph
  CanonicalForm right; // the quotient
  Rational coeff;
  GradeTriple left_grade, right_grade;
};

using CoproductTerms = std::vector<CoproductTerm>;

namespace detail {

inline ConcurrentMemo<std::pair<std::string, bool>, std::shared_ptr<const CoproductTerms>>& coproduct_memo()
{
  static ConcurrentMemo<std::pair<std::string, bool>, std::shared_ptr<const CoproductTerms>> memo;
  return memo;
}

inline CoproductTerms compute_connected_coproduct(const CanonicalForm& cf, const CoproductOptions& opts)
{
  const Graph& g = cf.graph;
  const CanonicalForm one = canonical_form(Graph());
  std::map<std::pair<CanonicalKey, CanonicalKey>, CoproductTerm> acc;
  auto add = [&](CanonicalForm l, CanonicalForm r, const Rational& c) {
    auto key = std::make_pair(l.key, r.key);
    auto it = acc.find(key);
    if (it == acc.end()) {
      GradeTriple lg = l.graph.grade(), rg = r.graph.grade();
      acc.emplace(std::move(key), CoproductTerm{std::move(l), std::move(r), c, lg, rg});
    } else {
      it->second.coeff += c;
    }
  };
  add(one, cf, 1);
  add(cf, one, 1);
  const std::vector<Edge> internal = g.internal_edges();
  const int m = static_cast<int>(internal.size());
  if (m >= 31)
    throw Error(ErrorCode::ResourceBound, "too many internal edges for subgraph enumeration");
  const unsigned long full = (1UL << m) - 1;
  for (unsigned long mask = 1; mask <= full; ++mask) {
    if (mask == full && !opts.full_subgraph_term)
      break;
    std::vector<Edge> gamma;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1UL)
        gamma.push_back(internal[i]);
    add(canonical_form(extract_subgraph(g, gamma)), canonical_form(contract_subgraph(g, gamma)), 1);
  }
  CoproductTerms out;
  for (auto& [k, t] : acc)
    if (t.coeff != 0)
      out.push_back(std::move(t));
  return out;
}

} // namespace detail

// ∇ of a connected graph given in canonical form, memoized by key.
inline std::shared_ptr<const CoproductTerms> connected_coproduct(const CanonicalForm& cf,
                                                                 const CoproductOptions& opts = {})
{
  return detail::coproduct_memo().get_or_compute({cf.key.bytes(), opts.full_subgraph_term}, [&] {
    return std::make_shared<const CoproductTerms>(detail::compute_connected_coproduct(cf, opts));
  });
}

// ∇ of a single graph: multiplicative over connected components.
inline GraphTensorPoly coproduct(const Graph& g, const CoproductOptions& opts = {})
{
  GraphTensorPoly result;
  result.add({Graph(), Graph()}, 1);
  for (const Graph& c : connected_components(g)) {
    GraphTensorPoly factor;
    for (const CoproductTerm& t : *connected_coproduct(canonical_form(c), opts))
      factor.add_canonical({t.left, t.right}, t.coeff);
    result = tensor_product(result, factor);
  }
  return result;
}

inline GraphTensorPoly coproduct(const GraphPoly& p, const CoproductOptions& opts = {})
{
  GraphTensorPoly out;
  for (const auto& [k, e] : p.terms()) {
    GraphTensorPoly t = coproduct(e.graphs[0], opts);
    t *= e.coeff;
    out += t;
  }
  return out;
}

// (∇⊗id) and (id⊗∇) on H⊗H.
inline GraphTriplePoly coproduct_left(const GraphTensorPoly& x, const CoproductOptions& opts = {})
{
  GraphTriplePoly out;
  for (const auto& [k, e] : x.terms()) {
    const GraphTensorPoly inner = coproduct(e.graphs[0], opts);
    for (const auto& [k2, e2] : inner.terms())
      out.add_canonical({CanonicalForm{k2[0], e2.graphs[0]}, CanonicalForm{k2[1], e2.graphs[1]},
                         CanonicalForm{k[1], e.graphs[1]}},
                        e.coeff * e2.coeff);
  }
  return out;
}

inline GraphTriplePoly coproduct_right(const GraphTensorPoly& x, const CoproductOptions& opts = {})
{
  GraphTriplePoly out;
  for (const auto& [k, e] : x.terms()) {
    const GraphTensorPoly inner = coproduct(e.graphs[1], opts);
    for (const auto& [k2, e2] : inner.terms())
      out.add_canonical({CanonicalForm{k[0], e.graphs[0]}, CanonicalForm{k2[0], e2.graphs[0]},
                         CanonicalForm{k2[1], e2.graphs[1]}},
                        e.coeff * e2.coeff);
  }
  return out;
}

namespace detail {

inline ConcurrentMemo<std::string, GraphPoly>& antipode_memo()
{
  static ConcurrentMemo<std::string, GraphPoly> memo;
  return memo;
}

inline GraphPoly antipode_graph(const Graph& g);

inline GraphPoly antipode_connected(const CanonicalForm& cf)
{
  if (auto hit = antipode_memo().find(cf.key.bytes()))
    return *hit;
  GraphPoly s = -GraphPoly::from_canonical(cf);
  for (const CoproductTerm& t : *connected_coproduct(cf)) {
    if (t.left.graph.empty() || t.right.graph.empty())
      continue;
    s -= t.coeff * product(antipode_graph(t.left.graph), GraphPoly::from_canonical(t.right));
  }
  return antipode_memo().insert(cf.key.bytes(), std::move(s));
}

inline GraphPoly antipode_graph(const Graph& g)
{
  GraphPoly s = unit();
  for (const Graph& c : connected_components(g))
    s = product(s, antipode_connected(canonical_form(c)));
  return s;
}

} // namespace detail

// Antipode by the connected-graded recursion for the default coproduct.
inline GraphPoly antipode(const GraphPoly& p)
{
  GraphPoly out;
  for (const auto& [k, e] : p.terms())
    out += e.coeff * detail::antipode_graph(e.graphs[0]);
  return out;
}

// μ(S⊗id) and μ(id⊗S) applied to an element of H⊗H.
inline GraphPoly antipode_left_multiply(const GraphTensorPoly& x)
{
  GraphPoly out;
  for (const auto& [k, e] : x.terms())
    out += e.coeff * product(detail::antipode_graph(e.graphs[0]), GraphPoly::from_canonical({k[1], e.graphs[1]}));
  return out;
}

inline GraphPoly antipode_right_multiply(const GraphTensorPoly& x)
{
  GraphPoly out;
  for (const auto& [k, e] : x.terms())
    out += e.coeff * product(GraphPoly::from_canonical({k[0], e.graphs[0]}), detail::antipode_graph(e.graphs[1]));
  return out;
}

namespace detail {

struct WindowBounds {
  int min_edges = 0, max_edges = 0;
  std::set<int> internal_sums;
  int max_internal = 0;
  int max_external = 0;
  int max_components = 0;
};

// Coefficients of ∇Γ restricted to pairs whose grades lie below the given
// componentwise maxima, keyed by (subgraph key, quotient key).
inline std::map<std::pair<CanonicalKey, CanonicalKey>, Rational>
restricted_coproduct(const std::vector<const CanonicalForm*>& components, const GradeTriple& left_max,
                     const GradeTriple& right_max)
{
  std::vector<std::shared_ptr<const CoproductTerms>> factors;
  for (const CanonicalForm* c : components)
    factors.push_back(connected_coproduct(*c));
  auto fits = [](const GradeTriple& g, const GradeTriple& bound) {
    return g.edges <= bound.edges && g.internal_edges <= bound.internal_edges && g.external <= bound.external;
  };
  std::map<std::pair<CanonicalKey, CanonicalKey>, Rational> out;
  std::vector<const CoproductTerm*> chosen;
  auto rec = [&](auto&& self, std::size_t i, GradeTriple lg, GradeTriple rg, Rational coeff) -> void {
    if (i == factors.size()) {
      Graph left, right;
      for (const CoproductTerm* t : chosen) {
        left = disjoint_union(left, t->left.graph);
        right = disjoint_union(right, t->right.graph);
      }
      out[{canonical_key(left), canonical_key(right)}] += coeff;
      return;
    }
    for (const CoproductTerm& t : *factors[i]) {
      GradeTriple nl = lg + t.left_grade, nr = rg + t.right_grade;
      if (!fits(nl, left_max) || !fits(nr, right_max))
        continue;
      chosen.push_back(&t);
      self(self, i + 1, nl, nr, coeff * t.coeff);
      chosen.pop_back();
    }
  };
  rec(rec, 0, GradeTriple{}, GradeTriple{}, Rational(1));
  return out;
}

} // namespace detail

// a ⋆ b, dual to ∇ under the pairing weighted by |Aut|: the coefficient of Γ
// is Σ a_A b_B |Aut A| |Aut B| [B ⊗ A]∇Γ / |Aut Γ|, so b is matched with the
// subgraph leg and a with the quotient leg. Every output graph has at most
// e_a + e_b edges; `edge_bound` below that is rejected.
inline GraphPoly star_product(const GraphPoly& a, const GraphPoly& b, int edge_bound, const Budget& budget = {})
{
  GraphPoly out;
  if (a.is_zero() || b.is_zero())
    return out;
  detail::WindowBounds w;
  w.min_edges = -1;
  GradeTriple left_max{}, right_max{};
  auto raise = [](GradeTriple& m, const GradeTriple& g) {
    m.edges = std::max(m.edges, g.edges);
    m.internal_edges = std::max(m.internal_edges, g.internal_edges);
    m.external = std::max(m.external, g.external);
  };
  for (const auto& [ka, ea] : a.terms()) {
    if (ea.graphs[0].has_empty_vertex())
      throw Error(ErrorCode::EmptyVertexUnsupported, "star_product input contains an empty vertex");
    raise(right_max, ea.graphs[0].grade());
  }
  for (const auto& [kb, eb] : b.terms()) {
    if (eb.graphs[0].has_empty_vertex())
      throw Error(ErrorCode::EmptyVertexUnsupported, "star_product input contains an empty vertex");
    raise(left_max, eb.graphs[0].grade());
  }
  for (const auto& [ka, ea] : a.terms())
    for (const auto& [kb, eb] : b.terms()) {
      const GradeTriple ga = ea.graphs[0].grade(), gb = eb.graphs[0].grade();
      const int e = ga.edges + gb.edges;
      if (edge_bound < e)
        throw Error(ErrorCode::WindowTooSmall, "edge bound " + std::to_string(edge_bound) +
                                                   " is below the required degree " + std::to_string(e));
      const int lo = (e + 2) / 3;
      w.min_edges = w.min_edges < 0 ? lo : std::min(w.min_edges, lo);
      w.max_edges = std::max(w.max_edges, e);
      w.internal_sums.insert(ga.internal_edges + gb.internal_edges);
      w.max_internal = std::max(w.max_internal, ga.internal_edges + gb.internal_edges);
      w.max_external = std::max(w.max_external, ga.external + gb.external);
      w.max_components =
          std::max(w.max_components, component_count(ea.graphs[0]) + component_count(eb.graphs[0]));
    }

  for (int n = w.min_edges; n <= w.max_edges; ++n) {
    auto admit = [&](const GradeTriple& g, int comps) {
      return g.internal_edges <= w.max_internal && g.external <= w.max_external && comps <= w.max_components;
    };
    auto visit = [&](const std::vector<const CanonicalForm*>& parts) {
      GradeTriple g{};
      for (const CanonicalForm* p : parts)
        g = g + p->graph.grade();
      if (!w.internal_sums.count(g.internal_edges))
        return;
      const auto delta = detail::restricted_coproduct(parts, left_max, right_max);
      Rational c = 0;
      for (const auto& [ka, ea] : a.terms())
        for (const auto& [kb, eb] : b.terms()) {
          auto it = delta.find({kb[0], ka[0]});
          if (it == delta.end())
            continue;
          c += ea.coeff * eb.coeff * Rational(automorphism_count(ea.graphs[0]) * automorphism_count(eb.graphs[0])) *
               it->second;
        }
      if (c == 0)
        return;
      const Graph whole = union_of(parts);
      out.add(whole, c / Rational(automorphism_count(whole)));
    };
    for_each_graph(n, admit, visit, budget);
  }
  return out;
}

inline GraphPoly lie_bracket(const GraphPoly& a, const GraphPoly& b, int edge_bound, const Budget& budget = {})
{
  return star_product(a, b, edge_bound, budget) - star_product(b, a, edge_bound, budget);
}

// Largest edge count in the support (0 for the zero element).
inline int max_edges(const GraphPoly& p)
{
  int m = 0;
  for (const auto& [k, e] : p.terms())
    m = std::max(m, e.graphs[0].edge_count());
  return m;
}

} // namespace ckhopf
