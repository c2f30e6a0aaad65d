#pragma once

// Exhaustive and seeded verification suites with JSON / table reports, and
// brute-force oracles for isomorphism and automorphisms.

#include "canonical.hpp"
#include "chord.hpp"
#include "corpus.hpp"
#include "enumerate.hpp"
#include "graph.hpp"
#include "hopf.hpp"
#include "io.hpp"
#include "prelie.hpp"
#include "tensor.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace ckhopf::harness {

using json = nlohmann::json;

// Brute-force oracles: try every half-edge bijection. They share no code
// with canonical_form or automorphism_count.

namespace detail {

inline bool maps_structure(const Graph& a, const Graph& b, const std::vector<int>& p)
{
  for (int h = 0; h < a.half_edge_count(); ++h)
    if (p[a.mate(h)] != b.mate(p[h]))
      return false;
  for (int v = 0; v < a.vertex_count(); ++v) {
    const auto& hs = a.vertex(v);
    if (hs.empty())
      continue;
    const int w = b.vertex_of(p[hs[0]]);
    if (b.valency(w) != static_cast<int>(hs.size()) || b.is_external_vertex(w) != a.is_external_vertex(v))
      return false;
    for (int h : hs)
      if (b.vertex_of(p[h]) != w)
        return false;
  }
  return true;
}

inline int empty_vertices(const Graph& g)
{
  int n = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    n += g.valency(v) == 0 ? 1 : 0;
  return n;
}

inline void oracle_bound(const Graph& g)
{
  if (g.half_edge_count() > 10)
    throw Error(ErrorCode::ResourceBound, "brute-force oracle limited to 10 half-edges");
}

} // namespace detail

inline Integer oracle_aut(const Graph& g)
{
  detail::oracle_bound(g);
  std::vector<int> p(g.half_edge_count());
  std::iota(p.begin(), p.end(), 0);
  Integer count = 0;
  do {
    if (detail::maps_structure(g, g, p))
      ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline bool oracle_iso(const Graph& a, const Graph& b)
{
  detail::oracle_bound(a);
  detail::oracle_bound(b);
  if (a.half_edge_count() != b.half_edge_count() || a.vertex_count() != b.vertex_count() ||
      detail::empty_vertices(a) != detail::empty_vertices(b))
    return false;
  std::vector<int> p(a.half_edge_count());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (detail::maps_structure(a, b, p))
      return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

struct SuiteParams {
  int max_edges = 3;
  int dimension = 4;
  std::uint64_t seed = 7;
  bool full_subgraph_term = false;
  int random_triples = 200;
  Budget budget;
};

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  std::string status = "pass"; // pass, fail, skipped
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  json counterexample; // first failing case
  std::string note;

  void record(bool ok, const std::function<json()>& witness)
  {
    ++cases;
    if (ok)
      return;
    if (failures++ == 0)
      counterexample = witness();
    status = "fail";
  }

  void skip(std::string why)
  {
    status = "skipped";
    note = std::move(why);
  }
};

struct VerificationReport {
  std::string suite;
  SuiteParams params;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool passed() const
  {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == "fail"; });
  }
};

inline json to_json(const VerificationReport& r, bool with_timing = false)
{
  json checks = json::array();
  for (const CheckResult& c : r.checks) {
    json j = {{"name", c.name}, {"status", c.status}, {"cases", c.cases}, {"failures", c.failures}};
    if (c.status == "fail")
      j["counterexample"] = c.counterexample;
    if (!c.note.empty())
      j["note"] = c.note;
    checks.push_back(j);
  }
  json out = {{"suite", r.suite},
              {"params",
               {{"max_edges", r.params.max_edges},
                {"dimension", r.params.dimension},
                {"seed", r.params.seed},
                {"full_subgraph_term", r.params.full_subgraph_term}}},
              {"passed", r.passed()},
              {"checks", checks}};
  if (with_timing)
    out["seconds"] = r.seconds;
  return out;
}

inline std::string to_table(const VerificationReport& r)
{
  std::ostringstream os;
  os << "suite " << r.suite << " (max_edges=" << r.params.max_edges << ", dim=" << r.params.dimension
     << ", seed=" << r.params.seed << (r.params.full_subgraph_term ? ", full-subgraph-term" : "") << ")\n";
  std::size_t width = 5;
  for (const CheckResult& c : r.checks)
    width = std::max(width, c.name.size());
  for (const CheckResult& c : r.checks) {
    os << "  " << std::left << std::setw(static_cast<int>(width)) << c.name << "  " << std::setw(7) << c.status
       << " cases=" << c.cases;
    if (c.failures)
      os << " failures=" << c.failures;
    if (!c.note.empty())
      os << "  (" << c.note << ")";
    os << '\n';
    if (c.status == "fail")
      os << "    counterexample: " << c.counterexample.dump() << '\n';
  }
  os << "  " << (r.passed() ? "PASS" : "FAIL") << " in " << std::fixed << std::setprecision(2) << r.seconds << "s\n";
  return os.str();
}

// Corpus: every class with at most max_edges edges plus the named graphs,
// sorted by canonical key.
inline GraphList corpus_graphs(int max_edges, const Budget& budget = {})
{
  std::map<CanonicalKey, Graph> all;
  for (int n = 0; n <= max_edges; ++n)
    for (CanonicalForm& cf : enumerate_graphs(n, GraphFilter::All, budget))
      all.emplace(cf.key, cf.graph);
  for (const corpus::Named& named : corpus::named_graphs()) {
    CanonicalForm cf = canonical_form(named.graph);
    all.emplace(cf.key, cf.graph);
  }
  GraphList out;
  for (auto& [k, g] : all)
    out.push_back({k, g});
  return out;
}

// Connected corpus graphs with internal-edge count in [min_internal, max_internal].
inline GraphList connected_corpus(int max_edges, int min_internal, int max_internal, const Budget& budget = {})
{
  GraphList out;
  for (const CanonicalForm& cf : corpus_graphs(max_edges, budget)) {
    const int m = cf.graph.grade().internal_edges;
    if (is_connected(cf.graph) && m >= min_internal && m <= max_internal)
      out.push_back(cf);
  }
  return out;
}

namespace detail {

using io::to_json;

inline GraphPoly basis(const CanonicalForm& cf) { return GraphPoly::from_canonical(cf); }

// Deterministic across platforms: mt19937_64 output is fixed by the standard,
// the reduction below is ours.
inline std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

inline json graphs_json(std::initializer_list<const Graph*> gs)
{
  json out = json::array();
  for (const Graph* g : gs)
    out.push_back(to_json(*g));
  return out;
}

inline bool grading_ok(const Graph& g, const GraphTensorPoly& delta)
{
  const GradeTriple gr = g.grade();
  for (const auto& [k, e] : delta.terms()) {
    const GradeTriple l = e.graphs[0].grade(), r = e.graphs[1].grade();
    const int total = l.edges + r.edges;
    if (l.internal_edges + r.internal_edges != gr.internal_edges || total < gr.edges || total > 3 * gr.edges)
      return false;
  }
  return true;
}

inline GraphTensorPoly counit_left(const GraphTensorPoly& x)
{
  GraphTensorPoly out;
  for (const auto& [k, e] : x.terms())
    if (e.graphs[0].empty())
      out.add_entry(k, e);
  return out;
}

inline GraphPoly collapse_left(const GraphTensorPoly& x)
{
  GraphPoly out;
  for (const auto& [k, e] : x.terms())
    if (e.graphs[0].empty())
      out.add_canonical({CanonicalForm{k[1], e.graphs[1]}}, e.coeff);
  return out;
}

inline GraphPoly collapse_right(const GraphTensorPoly& x)
{
  GraphPoly out;
  for (const auto& [k, e] : x.terms())
    if (e.graphs[1].empty())
      out.add_canonical({CanonicalForm{k[0], e.graphs[0]}}, e.coeff);
  return out;
}

} // namespace detail

inline VerificationReport suite_hopf(const SuiteParams& params)
{
  VerificationReport r{"hopf", params, {}, 0};
  const CoproductOptions opts{params.full_subgraph_term};
  const GraphList corpus = corpus_graphs(params.max_edges, params.budget);
  CheckResult coassoc{"coassociativity"}, algebra{"coproduct_algebra_map"}, counit_axiom{"counit_axiom"},
      antipode_axiom{"antipode_axiom"}, grading{"grading_law"};
  for (const CanonicalForm& cf : corpus) {
    const GraphTensorPoly delta = coproduct(cf.graph, opts);
    coassoc.record(coproduct_left(delta, opts) == coproduct_right(delta, opts),
                   [&] { return json{{"graph", io::to_json(cf.graph)}}; });
    const GraphPoly self = detail::basis(cf);
    counit_axiom.record(detail::collapse_left(delta) == self && detail::collapse_right(delta) == self,
                        [&] { return json{{"graph", io::to_json(cf.graph)}}; });
    grading.record(detail::grading_ok(cf.graph, delta), [&] { return json{{"graph", io::to_json(cf.graph)}}; });
    if (!params.full_subgraph_term) {
      const GraphPoly expected = unit(counit(self));
      antipode_axiom.record(antipode_left_multiply(delta) == expected && antipode_right_multiply(delta) == expected,
                            [&] { return json{{"graph", io::to_json(cf.graph)}}; });
    }
  }
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i; j < corpus.size(); ++j) {
      const Graph& a = corpus[i].graph;
      const Graph& b = corpus[j].graph;
      if (a.edge_count() + b.edge_count() > params.max_edges)
        continue;
      algebra.record(coproduct(disjoint_union(a, b), opts) ==
                         tensor_product(coproduct(a, opts), coproduct(b, opts)),
                     [&] { return detail::graphs_json({&a, &b}); });
    }
  if (params.full_subgraph_term)
    antipode_axiom.skip("antipode recursion is not defined when the full subgraph is summed");
  r.checks = {coassoc, algebra, counit_axiom, antipode_axiom, grading};
  return r;
}

inline VerificationReport suite_duality(const SuiteParams& params)
{
  VerificationReport r{"duality", params, {}, 0};
  const GraphList plus = connected_corpus(params.max_edges, 1, params.max_edges, params.budget);
  const GraphList k_type = connected_corpus(params.max_edges, 0, 0, params.budget);
  CheckResult star_split{"star_equals_union_plus_insertion"}, dual{"star_insertion_pairing"},
      deformation{"star_lowers_components"}, k_union{"star_with_K_is_union"}, instance{"twoleg_star_loop1_instance"},
      bracket{"bracket_matches_insertion"}, bracket_instance{"bracket_twoleg_loop1_instance"};

  for (const CanonicalForm& a : plus)
    for (const CanonicalForm& b : plus) {
      const int bound = a.graph.edge_count() + b.graph.edge_count();
      const GraphPoly star = star_product(detail::basis(a), detail::basis(b), bound, params.budget);
      const GraphPoly disjoint = product(detail::basis(a), detail::basis(b));
      const GraphPoly insertion = insertion_product(detail::basis(a), detail::basis(b));
      auto witness = [&] {
        return json{{"left", io::to_json(a.graph)}, {"right", io::to_json(b.graph)}, {"star", io::to_json(star)},
                    {"insertion", io::to_json(insertion)}};
      };
      star_split.record(star == disjoint + insertion, witness);
      // ⟨a⋆b, Γ⟩ = ⟨a∘b, Γ⟩ for every connected Γ in the window.
      bool ok = true;
      const int lo = (bound + 2) / 3;
      for (int n = lo; n <= bound && ok; ++n)
        for (const CanonicalForm& g : *connected_graphs(n, params.budget)) {
          const GraphPoly probe = detail::basis(g);
          if (pairing(star, probe) != pairing(insertion, probe)) {
            ok = false;
            break;
          }
        }
      dual.record(ok, witness);
      const int components = component_count(a.graph) + component_count(b.graph);
      bool lower = true;
      const GraphPoly rest = star - disjoint;
      for (const auto& [k, e] : rest.terms())
        lower = lower && component_count(e.graphs[0]) < components;
      deformation.record(lower, witness);
    }
  for (const CanonicalForm& a : plus)
    for (const CanonicalForm& b : k_type) {
      const int bound = a.graph.edge_count() + b.graph.edge_count();
      const GraphPoly star = star_product(detail::basis(a), detail::basis(b), bound, params.budget);
      k_union.record(star == product(detail::basis(a), detail::basis(b)), [&] {
        return json{{"left", io::to_json(a.graph)}, {"right", io::to_json(b.graph)}, {"star", io::to_json(star)}};
      });
    }
  {
    const GraphPoly tw = GraphPoly::basis(corpus::twoleg()), loop = GraphPoly::basis(corpus::loop1());
    const GraphPoly lhs = star_product(tw, loop, 4, params.budget) - product(tw, loop);
    const GraphPoly rhs = GraphPoly::basis(corpus::bubble(), 2);
    instance.record(lhs == rhs, [&] {
      return json{{"expected", io::to_json(rhs)}, {"got", io::to_json(lhs)}, {"got_text", io::to_text(lhs)}};
    });
    const GraphPoly br = lie_bracket(tw, loop, 4, params.budget);
    const GraphPoly expected = GraphPoly::basis(corpus::bubble(), -2);
    bracket_instance.record(br == expected && insertion_bracket(tw, loop) == expected, [&] {
      return json{{"bracket", io::to_json(br)}, {"insertion_bracket", io::to_json(insertion_bracket(tw, loop))}};
    });
  }
  for (std::size_t i = 0; i < plus.size(); ++i)
    for (std::size_t j = i + 1; j < plus.size(); ++j) {
      const int bound = plus[i].graph.edge_count() + plus[j].graph.edge_count();
      const GraphPoly a = detail::basis(plus[i]), b = detail::basis(plus[j]);
      const GraphPoly br = lie_bracket(a, b, bound, params.budget);
      bracket.record(br == insertion_bracket(a, b), [&] {
        return json{{"left", io::to_json(plus[i].graph)}, {"right", io::to_json(plus[j].graph)},
                    {"bracket", io::to_json(br)}};
      });
    }
  r.checks = {star_split, dual, deformation, k_union, bracket, bracket_instance, instance};
  return r;
}

inline VerificationReport suite_prelie(const SuiteParams& params)
{
  VerificationReport r{"prelie", params, {}, 0};
  CheckResult exhaustive{"associator_right_symmetric"}, sampled{"associator_right_symmetric_random_4_edges"},
      jacobi{"bracket_jacobi"}, grade_law{"insertion_grade_law"};
  const GraphList small = connected_corpus(params.max_edges, 1, 2, params.budget);

  // Products are cached: the same pairs recur across triples.
  std::map<std::pair<CanonicalKey, CanonicalKey>, GraphPoly> cache;
  auto ins = [&](const CanonicalForm& a, const CanonicalForm& b) -> const GraphPoly& {
    auto key = std::make_pair(a.key, b.key);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, insertion_product(detail::basis(a), detail::basis(b))).first;
    return it->second;
  };
  auto assoc = [&](const CanonicalForm& a, const CanonicalForm& b, const CanonicalForm& c) {
    return insertion_product(ins(a, b), detail::basis(c)) - insertion_product(detail::basis(a), ins(b, c));
  };
  auto triple_json = [](const Graph& a, const Graph& b, const Graph& c) { return detail::graphs_json({&a, &b, &c}); };

  for (const CanonicalForm& a : small)
    for (const CanonicalForm& b : small) {
      const GraphPoly& p = ins(a, b);
      const GradeTriple ga = a.graph.grade(), gb = b.graph.grade();
      bool ok = true;
      for (const auto& [k, e] : p.terms()) {
        const GradeTriple g = e.graphs[0].grade();
        ok = ok && g.edges == ga.edges + gb.edges - gb.external && g.external == ga.external;
      }
      grade_law.record(ok, [&] { return detail::graphs_json({&a.graph, &b.graph}); });
    }
  for (const CanonicalForm& a : small)
    for (std::size_t j = 0; j < small.size(); ++j)
      for (std::size_t k = j; k < small.size(); ++k) {
        const CanonicalForm &b = small[j], &c = small[k];
        exhaustive.record(assoc(a, b, c) == assoc(a, c, b), [&] { return triple_json(a.graph, b.graph, c.graph); });
      }
  auto bracket = [&](const GraphPoly& x, const GraphPoly& y) { return insertion_bracket(x, y); };
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = i; j < small.size(); ++j)
      for (std::size_t k = j; k < small.size(); ++k) {
        const GraphPoly a = detail::basis(small[i]), b = detail::basis(small[j]), c = detail::basis(small[k]);
        const GraphPoly sum = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
        jacobi.record(sum.is_zero(), [&] { return triple_json(small[i].graph, small[j].graph, small[k].graph); });
      }
  GraphList four;
  for (const CanonicalForm& cf : *connected_graphs(4, params.budget))
    if (cf.graph.grade().internal_edges >= 1)
      four.push_back(cf);
  std::mt19937_64 rng(params.seed);
  for (int t = 0; t < params.random_triples && !four.empty(); ++t) {
    const CanonicalForm& a = four[detail::pick(rng, four.size())];
    const CanonicalForm& b = four[detail::pick(rng, four.size())];
    const CanonicalForm& c = four[detail::pick(rng, four.size())];
    sampled.record(assoc(a, b, c) == assoc(a, c, b), [&] { return triple_json(a.graph, b.graph, c.graph); });
  }
  r.checks = {grade_law, exhaustive, sampled, jacobi};
  return r;
}

inline VerificationReport suite_invariants(const SuiteParams& params)
{
  VerificationReport r{"invariants", params, {}, 0};
  CheckResult counts{"chord_count"}, duality{"beta_z_identity"}, ranks{"beta_rank"}, naturality{"beta_restriction"},
      closure{"signed_permutation_invariance"}, parity{"even_degree_only"};
  const int top = std::max(3, params.dimension);
  for (int big_n = 1; big_n <= 3; ++big_n) {
    const auto diagrams = enumerate_chords(big_n);
    counts.record(diagrams.size() == double_factorial_odd(big_n),
                  [&] { return json{{"N", big_n}, {"count", diagrams.size()}}; });
    for (int n = big_n; n <= top; ++n) {
      std::vector<RawTensor> betas;
      for (const ChordDiagram& c : diagrams)
        betas.push_back(beta(c, n));
      bool identity = true;
      for (std::size_t i = 0; i < diagrams.size(); ++i)
        for (std::size_t j = 0; j < diagrams.size(); ++j)
          identity = identity && pair_raw(betas[i], z_coinv(diagrams[j], n)) == (i == j ? 1 : 0);
      duality.record(identity, [&] { return json{{"N", big_n}, {"n", n}}; });
      const int rk = rank(betas);
      ranks.record(rk == static_cast<int>(diagrams.size()), [&] { return json{{"N", big_n}, {"n", n}, {"rank", rk}}; });
      for (const ChordDiagram& c : diagrams) {
        RawTensor restricted{n, c.points(), {}};
        for (const auto& [w, coeff] : beta(c, n + 1).coeffs)
          if (*std::max_element(w.begin(), w.end()) <= n)
            restricted.add(w, coeff);
        naturality.record(restricted == betas[&c - diagrams.data()], [&] { return json{{"chords", io::to_json(c)}, {"n", n}}; });
      }
    }
  }
  std::mt19937_64 rng(params.seed);
  const int n = params.dimension;
  for (const CanonicalForm& cf : corpus_graphs(params.max_edges, params.budget)) {
    if (cf.graph.has_empty_vertex())
      continue;
    const InvariantTensor t = phi(cf.graph, n);
    bool even = true;
    for (const auto& [term, c] : t.terms())
      even = even && term.degree() % 2 == 0;
    parity.record(even, [&] { return json{{"graph", io::to_json(cf.graph)}}; });
    std::vector<int> perm(n + 1), sign(n + 1, 1);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n; i > 1; --i)
      std::swap(perm[i], perm[1 + detail::pick(rng, static_cast<std::size_t>(i))]);
    for (int i = 1; i <= n; ++i)
      sign[i] = detail::pick(rng, 2) ? -1 : 1;
    closure.record(signed_permute(t, perm, sign) == t, [&] { return json{{"graph", io::to_json(cf.graph)}}; });
  }
  r.checks = {counts, duality, ranks, naturality, closure, parity};
  return r;
}

inline VerificationReport suite_bialgebra(const SuiteParams& params)
{
  VerificationReport r{"bialgebra", params, {}, 0};
  CheckResult mult{"phi_multiplicative"}, prim{"phi_primitive"}, cross{"delta_cross_terms"};
  const int m = 3, n = 3;
  const GraphList conn = connected_corpus(params.max_edges, 0, params.max_edges, params.budget);
  const int dim = params.dimension;
  for (std::size_t i = 0; i < conn.size(); ++i)
    for (std::size_t j = i; j < conn.size(); ++j) {
      const Graph& a = conn[i].graph;
      const Graph& b = conn[j].graph;
      mult.record(phi(disjoint_union(a, b), dim) == tensor_mul(phi(a, dim), phi(b, dim)),
                  [&] { return detail::graphs_json({&a, &b}); });
    }
  for (const CanonicalForm& cf : conn) {
    const InvariantTensorPair d = tensor_delta(phi(cf.graph, m + n), m, n);
    const InvariantTensorPair expected =
        outer(phi(cf.graph, m), InvariantTensor::one(n)) + outer(InvariantTensor::one(m), phi(cf.graph, n));
    prim.record(d == expected, [&] { return json{{"graph", io::to_json(cf.graph)}, {"delta", io::to_json(d)}}; });
  }
  // δ is an algebra map, so on a product of two primitives it has the two cross terms.
  for (std::size_t i = 0; i < conn.size(); ++i)
    for (std::size_t j = i; j < conn.size(); ++j) {
      const Graph& a = conn[i].graph;
      const Graph& b = conn[j].graph;
      if (a.edge_count() + b.edge_count() > 3)
        continue;
      const int sm = 2, sn = 2;
      const InvariantTensorPair d = tensor_delta(phi(disjoint_union(a, b), sm + sn), sm, sn);
      const InvariantTensor one_m = InvariantTensor::one(sm), one_n = InvariantTensor::one(sn);
      const InvariantTensorPair expected = outer(phi(disjoint_union(a, b), sm), one_n) + outer(phi(a, sm), phi(b, sn)) +
                                           outer(phi(b, sm), phi(a, sn)) + outer(one_m, phi(disjoint_union(a, b), sn));
      cross.record(d == expected, [&] { return detail::graphs_json({&a, &b}); });
    }
  r.checks = {mult, prim, cross};
  return r;
}

inline VerificationReport suite_main_theorem(const SuiteParams& params)
{
  VerificationReport r{"main-theorem", params, {}, 0};
  CheckResult equivariance{"phi_intertwines_insertion"}, symmetric{"tensor_associator_right_symmetric"};
  const int total = std::max(4, params.max_edges);
  const GraphList plus = connected_corpus(total - 1, 1, total, params.budget);
  for (const CanonicalForm& a : plus)
    for (const CanonicalForm& b : plus) {
      const int n = a.graph.edge_count() + b.graph.edge_count();
      if (n > total)
        continue;
      const InvariantTensor lhs = phi(insertion_product(detail::basis(a), detail::basis(b)), n);
      const InvariantTensor rhs = tensor_prelie(phi(a.graph, n), phi(b.graph, n));
      equivariance.record(lhs == rhs, [&] { return json{{"left", io::to_json(a.graph)}, {"right", io::to_json(b.graph)}, {"n", n}}; });
    }
  const GraphList tiny = connected_corpus(2, 1, 2, params.budget);
  for (const CanonicalForm& a : tiny)
    for (const CanonicalForm& b : tiny)
      for (const CanonicalForm& c : tiny) {
        const int n = 3;
        const InvariantTensor ta = phi(a.graph, n), tb = phi(b.graph, n), tc = phi(c.graph, n);
        auto assoc = [&](const InvariantTensor& x, const InvariantTensor& y, const InvariantTensor& z) {
          return tensor_prelie(tensor_prelie(x, y), z) - tensor_prelie(x, tensor_prelie(y, z));
        };
        symmetric.record(assoc(ta, tb, tc) == assoc(ta, tc, tb),
                         [&] { return detail::graphs_json({&a.graph, &b.graph, &c.graph}); });
      }
  r.checks = {equivariance, symmetric};
  return r;
}

inline VerificationReport suite_roundtrip(const SuiteParams& params)
{
  VerificationReport r{"roundtrip", params, {}, 0};
  CheckResult psi_phi{"psi_after_phi"}, phi_psi{"phi_after_psi"}, proj{"project_phi"}, proj_prelie{"project_prelie"},
      chords{"chord_presentation"}, json_rt{"json_roundtrip"}, below{"psi_zero_below_degree"};
  const int top = 4;
  for (const CanonicalForm& cf : corpus_graphs(params.max_edges, params.budget)) {
    json_rt.record(isomorphic(io::graph_from_json(io::to_json(cf.graph)), cf.graph),
                   [&] { return json{{"graph", io::to_json(cf.graph)}}; });
    if (cf.graph.has_empty_vertex())
      continue;
    const ChordPresentation p = chord_from_graph(cf.graph);
    chords.record(isomorphic(graph_from_chord(p.shape, p.chords), cf.graph),
                  [&] { return json{{"graph", io::to_json(cf.graph)}}; });
    const GraphPoly self = detail::basis(cf);
    for (int n = cf.graph.edge_count(); n <= top; ++n) {
      const InvariantTensor t = phi(cf.graph, n);
      const GraphPoly back = psi(t, n);
      psi_phi.record(back == self, [&] { return json{{"graph", io::to_json(cf.graph)}, {"n", n}, {"psi", io::to_json(back)}}; });
      phi_psi.record(phi(back, n) == t, [&] { return json{{"graph", io::to_json(cf.graph)}, {"n", n}}; });
      proj.record(project(phi(cf.graph, n + 1)) == t, [&] { return json{{"graph", io::to_json(cf.graph)}, {"n", n}}; });
    }
    if (cf.graph.edge_count() >= 1) {
      const int n = cf.graph.edge_count() - 1;
      below.record(psi(phi(cf.graph, n), n).is_zero(), [&] { return json{{"graph", io::to_json(cf.graph)}, {"n", n}}; });
    }
  }
  const GraphList plus = connected_corpus(params.max_edges, 1, params.max_edges, params.budget);
  for (const CanonicalForm& a : plus)
    for (const CanonicalForm& b : plus) {
      const int n = a.graph.edge_count() + b.graph.edge_count();
      if (n > top)
        continue;
      const InvariantTensor lhs = project(tensor_prelie(phi(a.graph, n + 1), phi(b.graph, n + 1)));
      const InvariantTensor rhs = tensor_prelie(project(phi(a.graph, n + 1)), project(phi(b.graph, n + 1)));
      proj_prelie.record(lhs == rhs, [&] { return detail::graphs_json({&a.graph, &b.graph}); });
    }
  r.checks = {json_rt, chords, psi_phi, phi_psi, proj, below, proj_prelie};
  return r;
}

inline VerificationReport suite_oracle(const SuiteParams& params)
{
  VerificationReport r{"oracle", params, {}, 0};
  CheckResult aut{"automorphism_count"}, iso{"isomorphism"}, relabel_check{"relabel_invariance"};
  const GraphList corpus = corpus_graphs(params.max_edges, params.budget);
  for (const CanonicalForm& cf : corpus) {
    const Integer fast = automorphism_count(cf.graph), slow = oracle_aut(cf.graph);
    aut.record(fast == slow, [&] {
      return json{{"graph", io::to_json(cf.graph)}, {"fast", fast.str()}, {"oracle", slow.str()}};
    });
  }
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i; j < corpus.size(); ++j) {
      const Graph& a = corpus[i].graph;
      const Graph& b = corpus[j].graph;
      if (a.grade() != b.grade())
        continue;
      iso.record(oracle_iso(a, b) == (corpus[i].key == corpus[j].key), [&] { return detail::graphs_json({&a, &b}); });
    }
  std::mt19937_64 rng(params.seed);
  for (const CanonicalForm& cf : corpus) {
    std::vector<int> perm(cf.graph.half_edge_count());
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i)
      std::swap(perm[i - 1], perm[detail::pick(rng, i)]);
    const Graph moved = relabel(cf.graph, perm);
    relabel_check.record(canonical_key(moved) == cf.key && oracle_iso(moved, cf.graph),
                         [&] { return json{{"graph", io::to_json(cf.graph)}}; });
  }
  r.checks = {aut, iso, relabel_check};
  return r;
}

inline const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names = {"hopf",      "duality",      "prelie",    "invariants",
                                                  "bialgebra", "main-theorem", "roundtrip", "oracle"};
  return names;
}

inline VerificationReport run_suite(const std::string& name, const SuiteParams& params)
{
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  if (name == "hopf")
    r = suite_hopf(params);
  else if (name == "duality")
    r = suite_duality(params);
  else if (name == "prelie")
    r = suite_prelie(params);
  else if (name == "invariants")
    r = suite_invariants(params);
  else if (name == "bialgebra")
    r = suite_bialgebra(params);
  else if (name == "main-theorem")
    r = suite_main_theorem(params);
  else if (name == "roundtrip")
    r = suite_roundtrip(params);
  else if (name == "oracle")
    r = suite_oracle(params);
  else if (name == "all") {
    r = VerificationReport{"all", params, {}, 0};
    for (const std::string& s : suite_names()) {
      VerificationReport sub = run_suite(s, params);
      for (CheckResult& c : sub.checks) {
        c.name = s + "/" + c.name;
        r.checks.push_back(std::move(c));
      }
    }
  } else
    throw Error(ErrorCode::PreconditionViolated, "unknown suite '" + name + "'");
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

} // namespace ckhopf::harness
