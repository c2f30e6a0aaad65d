#pragma once

// JSON and text serialization for graphs, graph polynomials and tensors.

#include "canonical.hpp"
#include "chord.hpp"
#include "corpus.hpp"
#include "graph.hpp"
#include "graph_poly.hpp"
#include "tensor.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace ckhopf::io {

using json = nlohmann::json;

inline json to_json(const Graph& g)
{
  json edges = json::array();
  for (const Edge& e : g.edges())
    edges.push_back({e.a, e.b});
  json half_edges = json::array();
  for (int h = 0; h < g.half_edge_count(); ++h)
    half_edges.push_back(h);
  json vertices = json::array();
  for (const auto& v : g.vertices())
    vertices.push_back(v);
  return {{"edges", edges}, {"external", g.external_vertices()}, {"half_edges", half_edges}, {"vertices", vertices}};
}

namespace detail {

template <class T>
T get_field(const json& j, const char* name)
{
  if (!j.is_object() || !j.contains(name))
    throw Error(ErrorCode::ParseError, std::string("missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad field '") + name + "': " + e.what());
  }
}

inline json parse_text(const std::string& text)
{
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

} // namespace detail

inline Graph graph_from_json(const json& j)
{
  RawGraph raw;
  raw.half_edges = detail::get_field<std::vector<long long>>(j, "half_edges");
  for (const auto& e : detail::get_field<std::vector<std::vector<long long>>>(j, "edges")) {
    if (e.size() != 2)
      throw Error(ErrorCode::NonPairEdge, "edge with " + std::to_string(e.size()) + " half-edges");
    raw.edges.push_back({e[0], e[1]});
  }
  raw.vertices = detail::get_field<std::vector<std::vector<long long>>>(j, "vertices");
  raw.external = detail::get_field<std::vector<long long>>(j, "external");
  return Graph::validate(raw);
}

inline json to_json(const GraphPoly& p)
{
  json out = json::array();
  for (const auto& [k, e] : p.terms())
    out.push_back({{"coefficient", to_string(e.coeff)}, {"graph", to_json(e.graphs[0])}});
  return out;
}

inline Rational rational_field(const json& j, const char* name)
{
  const std::string s = detail::get_field<std::string>(j, name);
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

inline GraphPoly graph_poly_from_json(const json& j)
{
  if (!j.is_array())
    throw Error(ErrorCode::ParseError, "graph polynomial must be an array");
  GraphPoly p;
  for (const json& term : j)
    p.add(graph_from_json(term.at("graph")), rational_field(term, "coefficient"));
  return p;
}

inline json to_json(const GraphTensorPoly& p)
{
  json out = json::array();
  for (const auto& [k, e] : p.terms())
    out.push_back({{"coefficient", to_string(e.coeff)},
                   {"left", to_json(e.graphs[0])},
                   {"right", to_json(e.graphs[1])}});
  return out;
}

inline GraphTensorPoly graph_tensor_poly_from_json(const json& j)
{
  if (!j.is_array())
    throw Error(ErrorCode::ParseError, "graph tensor polynomial must be an array");
  GraphTensorPoly p;
  for (const json& term : j) {
    if (!term.contains("left") || !term.contains("right"))
      throw Error(ErrorCode::ParseError, "tensor term needs 'left' and 'right'");
    p.add({graph_from_json(term["left"]), graph_from_json(term["right"])}, rational_field(term, "coefficient"));
  }
  return p;
}

inline json to_json(const TensorTerm& t) { return {{"blocks", t.blocks}, {"external", t.external}}; }

inline TensorTerm tensor_term_from_json(const json& j)
{
  TensorTerm t;
  t.blocks = detail::get_field<std::vector<std::vector<int>>>(j, "blocks");
  t.external = detail::get_field<std::vector<int>>(j, "external");
  return t;
}

inline json to_json(const InvariantTensor& t)
{
  json terms = json::array();
  for (const auto& [term, c] : t.terms()) {
    json j = to_json(term);
    j["coeff"] = to_string(c);
    terms.push_back(j);
  }
  return {{"dimension", t.dimension()}, {"terms", terms}};
}

inline InvariantTensor invariant_tensor_from_json(const json& j)
{
  InvariantTensor t(detail::get_field<int>(j, "dimension"));
  for (const json& term : detail::get_field<json>(j, "terms"))
    t.add(tensor_term_from_json(term), rational_field(term, "coeff"));
  return t;
}

inline json to_json(const InvariantTensorPair& p)
{
  json terms = json::array();
  for (const auto& [k, c] : p.terms)
    terms.push_back({{"coeff", to_string(c)}, {"left", to_json(k.first)}, {"right", to_json(k.second)}});
  return {{"left_dimension", p.left_dimension}, {"right_dimension", p.right_dimension}, {"terms", terms}};
}

inline InvariantTensorPair invariant_tensor_pair_from_json(const json& j)
{
  InvariantTensorPair p{detail::get_field<int>(j, "left_dimension"), detail::get_field<int>(j, "right_dimension"), {}};
  for (const json& term : detail::get_field<json>(j, "terms")) {
    if (!term.contains("left") || !term.contains("right"))
      throw Error(ErrorCode::ParseError, "tensor pair term needs 'left' and 'right'");
    p.add(tensor_term_from_json(term["left"]), tensor_term_from_json(term["right"]), rational_field(term, "coeff"));
  }
  return p;
}

inline json to_json(const ChordDiagram& c)
{
  json out = json::array();
  for (auto [a, b] : c.chords())
    out.push_back({a, b});
  return out;
}

// Text forms.

// Corpus name when there is one, otherwise the canonical JSON; disjoint unions
// of named graphs print as "(a ⊔ b)".
inline std::string graph_name(const Graph& g)
{
  if (auto name = corpus::name_of(canonical_key(g)))
    return *name;
  const auto parts = connected_components(g);
  if (parts.size() > 1) {
    std::string s;
    for (const Graph& c : parts) {
      auto name = corpus::name_of(canonical_key(c));
      if (!name)
        return graph_json_string(canonical_form(g).graph);
      if (!s.empty())
        s += " ⊔ ";
      s += *name;
    }
    return "(" + s + ")";
  }
  return graph_json_string(canonical_form(g).graph);
}

namespace detail {

inline void append_term(std::string& s, const Rational& c, const std::string& body)
{
  if (s.empty())
    s = c < 0 ? "-" + to_string(-c) : to_string(c);
  else
    s += (c < 0 ? " - " : " + ") + to_string(c < 0 ? Rational(-c) : c);
  s += " * " + body;
}

inline std::string monomial_text(const std::vector<int>& mono)
{
  std::string s;
  for (int i : mono) {
    if (!s.empty())
      s += '*';
    s += 'x' + std::to_string(i);
  }
  return s.empty() ? "1" : s;
}

inline std::string term_text(const TensorTerm& t)
{
  std::string s = "[";
  for (std::size_t i = 0; i < t.blocks.size(); ++i) {
    if (i)
      s += ", ";
    s += monomial_text(t.blocks[i]);
  }
  return s + "; " + monomial_text(t.external) + "]";
}

} // namespace detail

inline std::string to_text(const GraphPoly& p)
{
  std::string s;
  for (const auto& [k, e] : p.terms())
    detail::append_term(s, e.coeff, graph_name(e.graphs[0]));
  return s.empty() ? "0" : s;
}

inline std::string to_text(const GraphTensorPoly& p)
{
  std::string s;
  for (const auto& [k, e] : p.terms()) {
    const std::string l = e.graphs[0].empty() ? "1" : graph_name(e.graphs[0]);
    const std::string r = e.graphs[1].empty() ? "1" : graph_name(e.graphs[1]);
    detail::append_term(s, e.coeff, l + " (x) " + r);
  }
  return s.empty() ? "0" : s;
}

inline std::string to_text(const InvariantTensor& t)
{
  std::string s;
  for (const auto& [term, c] : t.terms())
    detail::append_term(s, c, detail::term_text(term));
  return s.empty() ? "0" : s;
}

inline std::string to_text(const InvariantTensorPair& p)
{
  std::string s;
  for (const auto& [k, c] : p.terms)
    detail::append_term(s, c, detail::term_text(k.first) + " (x) " + detail::term_text(k.second));
  return s.empty() ? "0" : s;
}

inline std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace ckhopf::io
