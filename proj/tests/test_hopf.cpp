#include "oracles.hpp"

#include <ckhopf/corpus.hpp>
#include <ckhopf/enumerate.hpp>
#include <ckhopf/hopf.hpp>
#include <ckhopf/io.hpp>
#include <ckhopf/prelie.hpp>

#include <gtest/gtest.h>

using namespace ckhopf;

namespace {

GraphPoly G(const Graph& g, const Rational& c = 1) { return GraphPoly::basis(g, c); }

Graph U(const Graph& a, const Graph& b) { return disjoint_union(a, b); }

Rational coefficient(const GraphTensorPoly& p, const Graph& l, const Graph& r)
{
  return p.coefficient({canonical_key(l), canonical_key(r)});
}

// Library coproduct against the brute-force one, term by term.
void expect_matches(const GraphTensorPoly& lib, const oracle::PairSum& ref)
{
  EXPECT_EQ(lib.size(), ref.terms.size());
  for (const auto& t : ref.terms)
    EXPECT_EQ(coefficient(lib, t.left, t.right), t.coeff)
        << graph_json_string(t.left) << " (x) " << graph_json_string(t.right);
}

ErrorCode code_of(const std::function<void()>& f)
{
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::ParseError;
}

std::vector<Graph> small_corpus(int max_edges)
{
  std::vector<Graph> out;
  for (int n = 0; n <= max_edges; ++n)
    for (const CanonicalForm& cf : enumerate_graphs(n, GraphFilter::All))
      out.push_back(cf.graph);
  return out;
}

} // namespace

TEST(Product, UnitAndBasis)
{
  const Graph l = corpus::loop1();
  EXPECT_EQ(product(G(l), unit()), G(l));
  const GraphPoly ll = product(G(l), G(l));
  EXPECT_EQ(ll.size(), 1u);
  EXPECT_EQ(ll.coefficient_of(U(l, l)), 1);
}

TEST(Product, Commutative)
{
  const GraphPoly p = G(corpus::loop1(), 2) + G(corpus::twoleg(), Rational(-1, 3));
  const GraphPoly q = G(corpus::bubble()) + G(corpus::dot(2), 5);
  EXPECT_EQ(product(p, q), product(q, p));
}

TEST(Coproduct, LoopIsPrimitive)
{
  const GraphTensorPoly d = coproduct(corpus::loop1());
  EXPECT_EQ(d.size(), 2u);
  EXPECT_EQ(coefficient(d, Graph(), corpus::loop1()), 1);
  EXPECT_EQ(coefficient(d, corpus::loop1(), Graph()), 1);
}

TEST(Coproduct, Bubble)
{
  const Graph b = corpus::bubble();
  const GraphTensorPoly d = coproduct(b);
  expect_matches(d, oracle::coproduct(b));
  EXPECT_EQ(d.size(), 3u);
  EXPECT_EQ(coefficient(d, corpus::twoleg(), corpus::loop1()), 2);
}

TEST(Coproduct, MatchesOracleOnConnectedGraphs)
{
  for (int n = 1; n <= 3; ++n)
    for (const CanonicalForm& cf : enumerate_graphs(n, GraphFilter::Connected))
      expect_matches(coproduct(cf.graph), oracle::coproduct(cf.graph));
}

TEST(Coproduct, FullSubgraphTermMatchesOracle)
{
  CoproductOptions full;
  full.full_subgraph_term = true;
  for (const CanonicalForm& cf : enumerate_graphs(2, GraphFilter::Connected))
    expect_matches(coproduct(cf.graph, full), oracle::coproduct(cf.graph, true));
}

TEST(Coproduct, MultiplicativeOnUnions)
{
  const auto conn = enumerate_graphs(2, GraphFilter::Connected);
  for (const auto& a : conn)
    for (const auto& b : conn)
      EXPECT_EQ(coproduct(U(a.graph, b.graph)), tensor_product(coproduct(a.graph), coproduct(b.graph)));
}

TEST(Coproduct, GradingWindow)
{
  for (const Graph& g : small_corpus(3)) {
    const GradeTriple gg = g.grade();
    const GraphTensorPoly d = coproduct(g);
    for (const auto& [k, e] : d.terms()) {
      const GradeTriple l = e.graphs[0].grade(), r = e.graphs[1].grade();
      EXPECT_EQ(l.internal_edges + r.internal_edges, gg.internal_edges);
      EXPECT_GE(l.edges + r.edges, gg.edges);
      EXPECT_LE(l.edges + r.edges, 3 * gg.edges);
    }
  }
}

TEST(Coproduct, Coassociative)
{
  for (const Graph& g : small_corpus(3)) {
    const GraphTensorPoly d = coproduct(g);
    EXPECT_EQ(coproduct_left(d), coproduct_right(d)) << graph_json_string(g);
  }
}

TEST(Counit, Values)
{
  EXPECT_EQ(counit(unit()), 1);
  EXPECT_EQ(counit(G(corpus::loop1())), 0);
  EXPECT_EQ(counit(unit(Rational(3, 4)) + G(corpus::bubble())), Rational(3, 4));
}

TEST(Counit, Axiom)
{
  for (const Graph& g : small_corpus(3)) {
    GraphPoly left, right;
    const GraphTensorPoly d = coproduct(g);
    for (const auto& [k, e] : d.terms()) {
      left += G(e.graphs[1], e.coeff * counit(G(e.graphs[0])));
      right += G(e.graphs[0], e.coeff * counit(G(e.graphs[1])));
    }
    EXPECT_EQ(left, G(g));
    EXPECT_EQ(right, G(g));
  }
}

TEST(Antipode, Loop)
{
  EXPECT_EQ(antipode(G(corpus::loop1())), G(corpus::loop1(), -1));
}

TEST(Antipode, Bubble)
{
  // Hand recursion S(B) = -B - Σ S(left) right over the nontrivial terms of the
  // brute-force coproduct; every nontrivial left factor here is primitive.
  const Graph b = corpus::bubble();
  GraphPoly expected = G(b, -1);
  for (const auto& t : oracle::coproduct(b).terms) {
    if (t.left.empty() || t.right.empty())
      continue;
    expected += G(U(t.left, t.right), t.coeff);
  }
  EXPECT_EQ(antipode(G(b)), expected);
  EXPECT_EQ(expected, G(b, -1) + G(U(corpus::twoleg(), corpus::loop1()), 2));
}

TEST(Antipode, HopfAxiom)
{
  for (const Graph& g : small_corpus(3)) {
    const GraphTensorPoly d = coproduct(g);
    const GraphPoly expected = unit(counit(G(g)));
    EXPECT_EQ(antipode_left_multiply(d), expected) << graph_json_string(g);
    EXPECT_EQ(antipode_right_multiply(d), expected) << graph_json_string(g);
  }
}

TEST(Antipode, Linear)
{
  const GraphPoly p = G(corpus::bubble(), 3) + G(corpus::loop1(), Rational(1, 2));
  EXPECT_EQ(antipode(p), 3 * antipode(G(corpus::bubble())) + Rational(1, 2) * antipode(G(corpus::loop1())));
}

TEST(Pairing, Orthonormal)
{
  EXPECT_EQ(pairing(G(corpus::loop1()), G(corpus::loop1())), 1);
  EXPECT_EQ(pairing(G(corpus::loop1()), G(corpus::bubble())), 0);
  const auto corpus2 = small_corpus(2);
  for (const Graph& a : corpus2)
    for (const Graph& b : corpus2)
      if (a.edge_count() != b.edge_count()) {
        EXPECT_EQ(pairing(G(a), G(b)), 0);
      }
}

// Coefficient of each connected Γ in a ⋆ b from the brute-force coproduct:
// |Aut a| |Aut b| [b ⊗ a]∇Γ / |Aut Γ|.
TEST(Star, ConnectedPartMatchesOracle)
{
  const auto plus = enumerate_graphs(1, GraphFilter::ConnectedPlus);
  const auto plus2 = enumerate_graphs(2, GraphFilter::ConnectedPlus);
  std::vector<Graph> factors;
  for (const auto& cf : plus)
    factors.push_back(cf.graph);
  for (const auto& cf : plus2)
    factors.push_back(cf.graph);
  factors.push_back(corpus::twoleg());
  for (const Graph& a : factors)
    for (const Graph& b : factors) {
      const int e = a.edge_count() + b.edge_count();
      const GraphPoly s = star_product(G(a), G(b), e);
      for (int n = 1; n <= e; ++n)
        for (const CanonicalForm& cf : enumerate_graphs(n, GraphFilter::Connected)) {
          Rational expected = 0;
          for (const auto& t : oracle::coproduct(cf.graph).terms)
            if (oracle::iso(t.left, b) && oracle::iso(t.right, a))
              expected += t.coeff * oracle::aut(a) * oracle::aut(b) / Rational(oracle::aut(cf.graph));
          EXPECT_EQ(s.coefficient(cf.key), expected);
        }
    }
}

TEST(Star, EqualsUnionPlusInsertion)
{
  std::vector<CanonicalForm> plus;
  for (int n = 1; n <= 3; ++n)
    for (const auto& cf : enumerate_graphs(n, GraphFilter::ConnectedPlus))
      plus.push_back(cf);
  for (const auto& a : plus)
    for (const auto& b : plus) {
      if (a.graph.edge_count() + b.graph.edge_count() > 4)
        continue;
      const GraphPoly s = star_product(G(a.graph), G(b.graph), a.graph.edge_count() + b.graph.edge_count());
      EXPECT_EQ(s, G(U(a.graph, b.graph)) + insertion_product(G(a.graph), G(b.graph)));
    }
}

TEST(Star, WithNoInternalEdgesIsUnion)
{
  for (int k = 1; k <= 3; ++k) {
    const Graph d = corpus::dot(k);
    EXPECT_EQ(star_product(G(corpus::bubble()), G(d), 2 + k), G(U(corpus::bubble(), d)));
    EXPECT_EQ(star_product(G(corpus::tadpole2()), G(d), 3 + k), G(U(corpus::tadpole2(), d)));
  }
}

TEST(Star, CorrectionLowersComponentCount)
{
  const auto conn = enumerate_graphs(2, GraphFilter::Connected);
  for (const auto& a : conn)
    for (const auto& b : conn) {
      const GraphPoly diff = star_product(G(a.graph), G(b.graph), 4) - G(U(a.graph, b.graph));
      for (const auto& [k, e] : diff.terms())
        EXPECT_LT(component_count(e.graphs[0]), 2);
    }
}

TEST(Star, LoopIntoTwoLeg)
{
  const Graph t = corpus::twoleg(), l = corpus::loop1();
  EXPECT_EQ(star_product(G(l), G(t), 4), G(U(t, l)) + G(corpus::bubble(), 2));
}

// The stated instance with the twoleg factor on the left. Under the pairing
// that makes the union-plus-insertion identity hold, this product has no
// correction term, so the check is expected to fail.
TEST(Star, TwoLegTimesLoopInstance)
{
  const Graph t = corpus::twoleg(), l = corpus::loop1();
  EXPECT_EQ(io::to_text(star_product(G(t), G(l), 4) - G(U(t, l))), "2 * bubble");
}

TEST(Star, Errors)
{
  EXPECT_EQ(code_of([] { star_product(G(corpus::bubble()), G(corpus::loop1()), 2); }), ErrorCode::WindowTooSmall);
  const Graph empty_vertex = Graph::validate({{}, {}, {{}}, {}});
  EXPECT_EQ(code_of([&] { star_product(G(empty_vertex), G(corpus::loop1()), 3); }),
            ErrorCode::EmptyVertexUnsupported);
}

TEST(Star, ZeroFactor)
{
  EXPECT_TRUE(star_product(GraphPoly(), G(corpus::loop1()), 3).is_zero());
}

TEST(Bracket, Antisymmetric)
{
  EXPECT_TRUE(lie_bracket(G(corpus::bubble()), G(corpus::bubble()), 4).is_zero());
  const GraphPoly x = G(corpus::twoleg()), y = G(corpus::bubble());
  EXPECT_EQ(lie_bracket(x, y, 5), -lie_bracket(y, x, 5));
}

TEST(Bracket, TwoLegLoop)
{
  EXPECT_EQ(lie_bracket(G(corpus::twoleg()), G(corpus::loop1()), 4), G(corpus::bubble(), -2));
}

TEST(Bracket, Jacobi)
{
  const std::vector<GraphPoly> xs = {G(corpus::loop1()), G(corpus::twoleg()), G(corpus::dot(2)), G(corpus::bubble())};
  for (const auto& a : xs)
    for (const auto& b : xs)
      for (const auto& c : xs) {
        const int e = max_edges(a) + max_edges(b) + max_edges(c);
        const GraphPoly j = lie_bracket(a, lie_bracket(b, c, e), e) + lie_bracket(b, lie_bracket(c, a, e), e) +
                            lie_bracket(c, lie_bracket(a, b, e), e);
        EXPECT_TRUE(j.is_zero());
      }
}
