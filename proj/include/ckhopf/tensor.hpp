#pragma once

// O(n)-invariant tensors in block-monomial form: a multiset of internal
// monomials (blocks) times an external monomial, over the orthonormal basis
// x_1..x_n. Includes the product, the splitting coproduct, the contraction
// pre-Lie product, and the maps between graphs and tensors.

#include "chord.hpp"
#include "graph.hpp"
#include "graph_poly.hpp"
#include "rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace ckhopf {

struct TensorTerm {
  std::vector<std::vector<int>> blocks; // each sorted, list sorted
  std::vector<int> external;            // sorted

  void normalize()
  {
    for (auto& b : blocks)
      std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    std::sort(external.begin(), external.end());
  }

  int degree() const
  {
    int d = static_cast<int>(external.size());
    for (const auto& b : blocks)
      d += static_cast<int>(b.size());
    return d;
  }

  // (N, k): half the total degree and the external degree.
  std::pair<int, int> bigrade() const { return {degree() / 2, static_cast<int>(external.size())}; }

  int max_index() const
  {
    int m = 0;
    for (const auto& b : blocks)
      for (int i : b)
        m = std::max(m, i);
    for (int i : external)
      m = std::max(m, i);
    return m;
  }

  auto operator<=>(const TensorTerm&) const = default;
  bool operator==(const TensorTerm&) const = default;
};

class InvariantTensor {
public:
  InvariantTensor() = default;
  explicit InvariantTensor(int dimension) : dimension_(dimension) {}

  // The unit: one empty term with coefficient 1.
  static InvariantTensor one(int dimension)
  {
    InvariantTensor t(dimension);
    t.add(TensorTerm{}, 1);
    return t;
  }

  int dimension() const { return dimension_; }
  const std::map<TensorTerm, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(TensorTerm term, const Rational& c)
  {
    if (c == 0)
      return;
    term.normalize();
    for (const auto& b : term.blocks)
      if (b.empty())
        throw Error(ErrorCode::PreconditionViolated, "internal blocks must have degree at least 1");
    if (term.max_index() > dimension_)
      throw Error(ErrorCode::DimensionMismatch, "index exceeds dimension " + std::to_string(dimension_));
    for (const auto& b : term.blocks)
      for (int i : b)
        if (i < 1)
          throw Error(ErrorCode::PreconditionViolated, "indices start at 1");
    for (int i : term.external)
      if (i < 1)
        throw Error(ErrorCode::PreconditionViolated, "indices start at 1");
    auto [it, inserted] = terms_.try_emplace(std::move(term), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  Rational coefficient(TensorTerm term) const
  {
    term.normalize();
    auto it = terms_.find(term);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  std::set<std::pair<int, int>> bigrades() const
  {
    std::set<std::pair<int, int>> out;
    for (const auto& [t, c] : terms_)
      out.insert(t.bigrade());
    return out;
  }

  InvariantTensor& operator+=(const InvariantTensor& o)
  {
    require_same_dimension(o);
    for (const auto& [t, c] : o.terms_)
      add(t, c);
    return *this;
  }
  InvariantTensor& operator-=(const InvariantTensor& o)
  {
    require_same_dimension(o);
    for (const auto& [t, c] : o.terms_)
      add(t, -c);
    return *this;
  }
  InvariantTensor& operator*=(const Rational& s)
  {
    if (s == 0)
      terms_.clear();
    for (auto& [t, c] : terms_)
      c *= s;
    return *this;
  }
  friend InvariantTensor operator+(InvariantTensor a, const InvariantTensor& b) { return a += b; }
  friend InvariantTensor operator-(InvariantTensor a, const InvariantTensor& b) { return a -= b; }
  friend InvariantTensor operator*(const Rational& s, InvariantTensor a) { return a *= s; }

  bool operator==(const InvariantTensor& o) const { return dimension_ == o.dimension_ && terms_ == o.terms_; }

  void require_same_dimension(const InvariantTensor& o) const
  {
    if (dimension_ != o.dimension_)
      throw Error(ErrorCode::DimensionMismatch, "dimensions " + std::to_string(dimension_) + " and " +
                                                    std::to_string(o.dimension_) + " differ");
  }

private:
  int dimension_ = 0;
  std::map<TensorTerm, Rational> terms_;
};

// An element of l^m ⊗ l^n.
struct InvariantTensorPair {
  int left_dimension = 0;
  int right_dimension = 0;
  std::map<std::pair<TensorTerm, TensorTerm>, Rational> terms;

  void add(TensorTerm l, TensorTerm r, const Rational& c)
  {
    if (c == 0)
      return;
    l.normalize();
    r.normalize();
    auto [it, inserted] = terms.try_emplace({std::move(l), std::move(r)}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms.erase(it);
    }
  }

  bool operator==(const InvariantTensorPair&) const = default;
};

inline InvariantTensorPair outer(const InvariantTensor& a, const InvariantTensor& b)
{
  InvariantTensorPair out{a.dimension(), b.dimension(), {}};
  for (const auto& [ta, ca] : a.terms())
    for (const auto& [tb, cb] : b.terms())
      out.add(ta, tb, ca * cb);
  return out;
}

inline InvariantTensorPair operator+(InvariantTensorPair a, const InvariantTensorPair& b)
{
  if (a.left_dimension != b.left_dimension || a.right_dimension != b.right_dimension)
    throw Error(ErrorCode::DimensionMismatch, "tensor pair dimensions differ");
  for (const auto& [k, c] : b.terms)
    a.add(k.first, k.second, c);
  return a;
}

// Words to block monomials: positions are cut according to `shape`.
inline InvariantTensor block_symmetrize(const RawTensor& f, const BlockShape& shape)
{
  shape.check();
  if (shape.total() != f.length)
    throw Error(ErrorCode::ShapeMismatch, "shape covers " + std::to_string(shape.total()) +
                                              " positions but the tensor has length " + std::to_string(f.length));
  InvariantTensor out(f.dimension);
  for (const auto& [word, c] : f.coeffs) {
    TensorTerm t;
    std::size_t pos = 0;
    for (int k : shape.internal) {
      t.blocks.emplace_back(word.begin() + pos, word.begin() + pos + k);
      pos += k;
    }
    t.external.assign(word.begin() + pos, word.end());
    out.add(std::move(t), c);
  }
  return out;
}

inline InvariantTensor phi(const Graph& g, int n)
{
  const ChordPresentation p = chord_from_graph(g);
  return block_symmetrize(beta(p.chords, n), p.shape);
}

inline InvariantTensor phi(const GraphPoly& p, int n)
{
  InvariantTensor out(n);
  for (const auto& [k, e] : p.terms())
    out += e.coeff * phi(e.graphs[0], n);
  return out;
}

namespace detail {

// Number of index words whose block symmetrization is `t` when the blocks are
// laid out in order of increasing degree.
inline Integer orbit_size(const TensorTerm& t)
{
  auto multinomial = [](const std::vector<int>& mono) {
    Integer r = factorial(static_cast<int>(mono.size()));
    for (std::size_t i = 0; i < mono.size();) {
      std::size_t j = i;
      while (j < mono.size() && mono[j] == mono[i])
        ++j;
      r /= factorial(static_cast<int>(j - i));
      i = j;
    }
    return r;
  };
  Integer r = multinomial(t.external);
  for (const auto& b : t.blocks)
    r *= multinomial(b);
  std::map<int, int> per_degree;
  std::map<std::vector<int>, int> identical;
  for (const auto& b : t.blocks) {
    ++per_degree[static_cast<int>(b.size())];
    ++identical[b];
  }
  for (const auto& [d, count] : per_degree)
    r *= factorial(count);
  for (const auto& [b, count] : identical)
    r /= factorial(count);
  return r;
}

inline BlockShape sorted_shape(const TensorTerm& t)
{
  BlockShape s;
  for (const auto& b : t.blocks)
    s.internal.push_back(static_cast<int>(b.size()));
  std::sort(s.internal.begin(), s.internal.end());
  s.external = static_cast<int>(t.external.size());
  return s;
}

} // namespace detail

// Evaluates the averaged lift of t on every coinvariant z_c and reassembles
// graphs. Zero when the tensor degree exceeds the dimension.
inline GraphPoly psi(const InvariantTensor& t, int n)
{
  if (t.dimension() != n)
    throw Error(ErrorCode::DimensionMismatch, "tensor dimension " + std::to_string(t.dimension()) +
                                                  " differs from " + std::to_string(n));
  const auto grades = t.bigrades();
  if (grades.size() > 1)
    throw Error(ErrorCode::InhomogeneousInput, "psi needs a tensor of a single bigrade");
  GraphPoly out;
  if (grades.empty())
    return out;
  const int chords = grades.begin()->first;
  if (chords > n)
    return out;
  std::set<BlockShape> shapes;
  for (const auto& [term, c] : t.terms())
    shapes.insert(detail::sorted_shape(term));
  const std::vector<ChordDiagram> diagrams = enumerate_chords(chords);
  for (const BlockShape& shape : shapes)
    for (const ChordDiagram& c : diagrams) {
      const InvariantTensor image = block_symmetrize(z_coinv(c, n), shape);
      const auto& [term, one] = *image.terms().begin();
      const Rational a = t.coefficient(term);
      if (a == 0)
        continue;
      out.add(graph_from_chord(shape, c), a / Rational(detail::orbit_size(term)));
    }
  return out;
}

inline InvariantTensor tensor_mul(const InvariantTensor& a, const InvariantTensor& b)
{
  a.require_same_dimension(b);
  InvariantTensor out(a.dimension());
  for (const auto& [ta, ca] : a.terms())
    for (const auto& [tb, cb] : b.terms()) {
      TensorTerm t = ta;
      t.blocks.insert(t.blocks.end(), tb.blocks.begin(), tb.blocks.end());
      t.external.insert(t.external.end(), tb.external.begin(), tb.external.end());
      out.add(std::move(t), ca * cb);
    }
  return out;
}

// Splits V_{m+n} = V_m ⊕ V_n: blocks are distributed between the legs, the
// external monomial is deconcatenated, and a variable survives only on the
// leg that owns its index (indices above m are shifted down on the right).
inline InvariantTensorPair tensor_delta(const InvariantTensor& t, int m, int n)
{
  if (m < 0 || n < 0 || t.dimension() != m + n)
    throw Error(ErrorCode::DimensionMismatch, "tensor dimension " + std::to_string(t.dimension()) +
                                                  " is not " + std::to_string(m) + " + " + std::to_string(n));
  InvariantTensorPair out{m, n, {}};
  auto side = [m](const std::vector<int>& mono) {
    // 0: all indices <= m, 1: all > m, -1: mixed; empty monomials never occur here
    bool low = false, high = false;
    for (int i : mono)
      (i <= m ? low : high) = true;
    return low && high ? -1 : (low ? 0 : 1);
  };
  auto shifted = [m](std::vector<int> mono) {
    for (int& i : mono)
      i -= m;
    return mono;
  };
  for (const auto& [term, c] : t.terms()) {
    // Each block and each external variable can only go to the leg owning its indices.
    TensorTerm left, right;
    bool dead = false;
    for (const auto& b : term.blocks) {
      const int s = side(b);
      if (s < 0) {
        dead = true;
        break;
      }
      (s == 0 ? left : right).blocks.push_back(s == 0 ? b : shifted(b));
    }
    if (dead)
      continue;
    for (int i : term.external)
      (i <= m ? left.external : right.external).push_back(i <= m ? i : i - m);
    out.add(std::move(left), std::move(right), c);
  }
  return out;
}

namespace detail {

inline void require_l_plus(const InvariantTensor& t)
{
  for (const auto& [term, c] : t.terms()) {
    const auto [big_n, k] = term.bigrade();
    if (big_n <= k)
      throw Error(ErrorCode::NotInLPlus, "term of bigrade (" + std::to_string(big_n) + "," + std::to_string(k) +
                                             ") is outside N > k");
  }
}

// Number of bijections between the slots of `block` and of `ext` matching
// equal indices: a product of factorials of shared multiplicities.
inline Integer matching_count(const std::vector<int>& block, const std::vector<int>& ext)
{
  if (block != ext)
    return 0;
  Integer r = 1;
  for (std::size_t i = 0; i < block.size();) {
    std::size_t j = i;
    while (j < block.size() && block[j] == block[i])
      ++j;
    r *= factorial(static_cast<int>(j - i));
    i = j;
  }
  return r;
}

} // namespace detail

// Contracts the external monomial of t2 against one internal block of t1 in
// every possible way.
inline InvariantTensor tensor_prelie(const InvariantTensor& t1, const InvariantTensor& t2)
{
  t1.require_same_dimension(t2);
  detail::require_l_plus(t1);
  detail::require_l_plus(t2);
  InvariantTensor out(t1.dimension());
  for (const auto& [a, ca] : t1.terms())
    for (const auto& [b, cb] : t2.terms())
      for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        const Integer count = detail::matching_count(a.blocks[i], b.external);
        if (count == 0)
          continue;
        TensorTerm t;
        for (std::size_t j = 0; j < a.blocks.size(); ++j)
          if (j != i)
            t.blocks.push_back(a.blocks[j]);
        t.blocks.insert(t.blocks.end(), b.blocks.begin(), b.blocks.end());
        t.external = a.external;
        out.add(std::move(t), ca * cb * Rational(count));
      }
  return out;
}

// Restriction from dimension n+1 to n: terms using x_{n+1} are dropped.
inline InvariantTensor project(const InvariantTensor& t)
{
  if (t.dimension() < 1)
    throw Error(ErrorCode::DimensionMismatch, "cannot project a tensor of dimension 0");
  InvariantTensor out(t.dimension() - 1);
  for (const auto& [term, c] : t.terms())
    if (term.max_index() < t.dimension())
      out.add(term, c);
  return out;
}

// Applies x_i -> sign[i] * x_{perm[i]} (1-based, index 0 unused).
inline InvariantTensor signed_permute(const InvariantTensor& t, const std::vector<int>& perm,
                                      const std::vector<int>& sign)
{
  InvariantTensor out(t.dimension());
  for (const auto& [term, c] : t.terms()) {
    TensorTerm moved = term;
    int s = 1;
    for (auto& b : moved.blocks)
      for (int& i : b) {
        s *= sign[i];
        i = perm[i];
      }
    for (int& i : moved.external) {
      s *= sign[i];
      i = perm[i];
    }
    out.add(std::move(moved), c * s);
  }
  return out;
}

} // namespace ckhopf
