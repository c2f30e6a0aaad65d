#pragma once

// Finite linear combinations of isomorphism classes of graphs (elements of H)
// and of their tensor powers, with exact rational coefficients.

#include "canonical.hpp"
#include "graph.hpp"
#include "rational.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <utility>

namespace ckhopf {

template <std::size_t Arity>
class GraphTensor {
public:
  using Keys = std::array<CanonicalKey, Arity>;
  using Graphs = std::array<Graph, Arity>;

  struct Entry {
    Graphs graphs; // canonical representatives
    Rational coeff;
  };

  GraphTensor() = default;

  // Adds c * (g_1 ⊗ ... ⊗ g_Arity), canonicalizing each factor.
  void add(const Graphs& gs, const Rational& c)
  {
    if (c == 0)
      return;
    std::array<CanonicalForm, Arity> forms;
    for (std::size_t i = 0; i < Arity; ++i)
      forms[i] = canonical_form(gs[i]);
    add_canonical(forms, c);
  }

  void add_canonical(const std::array<CanonicalForm, Arity>& forms, const Rational& c)
  {
    if (c == 0)
      return;
    Keys keys;
    for (std::size_t i = 0; i < Arity; ++i)
      keys[i] = forms[i].key;
    auto it = terms_.find(keys);
    if (it == terms_.end()) {
      Graphs gs;
      for (std::size_t i = 0; i < Arity; ++i)
        gs[i] = forms[i].graph;
      terms_.emplace(std::move(keys), Entry{std::move(gs), c});
      return;
    }
    it->second.coeff += c;
    if (it->second.coeff == 0)
      terms_.erase(it);
  }

  void add_entry(const Keys& keys, const Entry& e, const Rational& scale = 1)
  {
    Rational c = e.coeff * scale;
    if (c == 0)
      return;
    auto it = terms_.find(keys);
    if (it == terms_.end()) {
      terms_.emplace(keys, Entry{e.graphs, c});
      return;
    }
    it->second.coeff += c;
    if (it->second.coeff == 0)
      terms_.erase(it);
  }

  Rational coefficient(const Keys& keys) const
  {
    auto it = terms_.find(keys);
    return it == terms_.end() ? Rational(0) : it->second.coeff;
  }

  const std::map<Keys, Entry>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  GraphTensor& operator+=(const GraphTensor& o)
  {
    for (const auto& [k, e] : o.terms_)
      add_entry(k, e);
    return *this;
  }
  GraphTensor& operator-=(const GraphTensor& o)
  {
    for (const auto& [k, e] : o.terms_)
      add_entry(k, e, -1);
    return *this;
  }
  GraphTensor& operator*=(const Rational& s)
  {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, e] : terms_)
      e.coeff *= s;
    return *this;
  }
  friend GraphTensor operator+(GraphTensor a, const GraphTensor& b) { return a += b; }
  friend GraphTensor operator-(GraphTensor a, const GraphTensor& b) { return a -= b; }
  friend GraphTensor operator*(const Rational& s, GraphTensor a) { return a *= s; }
  friend GraphTensor operator-(GraphTensor a) { return a *= Rational(-1); }

  bool operator==(const GraphTensor& o) const
  {
    if (terms_.size() != o.terms_.size())
      return false;
    auto it = o.terms_.begin();
    for (const auto& [k, e] : terms_) {
      if (k != it->first || e.coeff != it->second.coeff)
        return false;
      ++it;
    }
    return true;
  }

private:
  std::map<Keys, Entry> terms_;
};

using GraphTensorPoly = GraphTensor<2>;
using GraphTriplePoly = GraphTensor<3>;

// An element of H.
class GraphPoly : public GraphTensor<1> {
public:
  using GraphTensor<1>::GraphTensor;
  GraphPoly(const GraphTensor<1>& base) : GraphTensor<1>(base) {}

  static GraphPoly basis(const Graph& g, const Rational& c = 1)
  {
    GraphPoly p;
    p.add(g, c);
    return p;
  }

  static GraphPoly from_canonical(const CanonicalForm& cf, const Rational& c = 1)
  {
    GraphPoly p;
    p.add_canonical({cf}, c);
    return p;
  }

  using GraphTensor<1>::add;
  void add(const Graph& g, const Rational& c) { GraphTensor<1>::add({g}, c); }

  Rational coefficient(const CanonicalKey& key) const { return GraphTensor<1>::coefficient({key}); }
  Rational coefficient_of(const Graph& g) const { return coefficient(canonical_key(g)); }

  // Terms whose grade satisfies `pred`.
  template <class Pred>
  GraphPoly project(Pred&& pred) const
  {
    GraphPoly out;
    for (const auto& [k, e] : terms())
      if (pred(e.graphs[0].grade()))
        out.add_entry(k, e);
    return out;
  }

  GraphPoly& operator+=(const GraphPoly& o)
  {
    GraphTensor<1>::operator+=(o);
    return *this;
  }
  GraphPoly& operator-=(const GraphPoly& o)
  {
    GraphTensor<1>::operator-=(o);
    return *this;
  }
  GraphPoly& operator*=(const Rational& s)
  {
    GraphTensor<1>::operator*=(s);
    return *this;
  }
  friend GraphPoly operator+(GraphPoly a, const GraphPoly& b) { return a += b; }
  friend GraphPoly operator-(GraphPoly a, const GraphPoly& b) { return a -= b; }
  friend GraphPoly operator*(const Rational& s, GraphPoly a) { return a *= s; }
  friend GraphPoly operator-(GraphPoly a) { return a *= Rational(-1); }
};

} // namespace ckhopf
