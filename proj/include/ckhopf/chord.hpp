#pragma once

// Chord diagrams, the invariant tensors attached to them and the graphs they
// describe once their endpoints are grouped into blocks.

#include "canonical.hpp"
#include "graph.hpp"
#include "rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace ckhopf {

// A perfect matching on {1, ..., 2N}, stored as sorted pairs in sorted order.
class ChordDiagram {
public:
  ChordDiagram() = default;

  explicit ChordDiagram(std::vector<std::pair<int, int>> chords) : chords_(std::move(chords))
  {
    const int points = 2 * static_cast<int>(chords_.size());
    std::vector<bool> seen(points + 1, false);
    for (auto& [a, b] : chords_) {
      if (a > b)
        std::swap(a, b);
      if (a < 1 || b > points || a == b || seen[a] || seen[b])
        throw Error(ErrorCode::PreconditionViolated, "chords must partition {1..2N} into pairs");
      seen[a] = seen[b] = true;
    }
    std::sort(chords_.begin(), chords_.end());
  }

  int size() const { return static_cast<int>(chords_.size()); }
  int points() const { return 2 * size(); }
  const std::vector<std::pair<int, int>>& chords() const { return chords_; }

  // partner[p] for p in 1..2N (index 0 unused)
  std::vector<int> partners() const
  {
    std::vector<int> out(points() + 1, 0);
    for (auto [a, b] : chords_) {
      out[a] = b;
      out[b] = a;
    }
    return out;
  }

  auto operator<=>(const ChordDiagram&) const = default;
  bool operator==(const ChordDiagram&) const = default;

private:
  std::vector<std::pair<int, int>> chords_;
};

inline std::uint64_t double_factorial_odd(int n)
{
  std::uint64_t r = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2)
    r *= static_cast<std::uint64_t>(k);
  return r;
}

// All (2N-1)!! diagrams, in lexicographic order of their chord lists.
inline std::vector<ChordDiagram> enumerate_chords(int n_chords, std::uint64_t budget = 5'000'000)
{
  if (n_chords < 0)
    throw Error(ErrorCode::PreconditionViolated, "chord count must be nonnegative");
  if (n_chords > 12 || double_factorial_odd(n_chords) > budget)
    throw Error(ErrorCode::ResourceBound, "too many chord diagrams for N = " + std::to_string(n_chords));
  std::vector<ChordDiagram> out;
  std::vector<std::pair<int, int>> current;
  std::vector<bool> used(2 * n_chords + 1, false);
  auto rec = [&](auto&& self) -> void {
    int first = 1;
    while (first <= 2 * n_chords && used[first])
      ++first;
    if (first > 2 * n_chords) {
      out.emplace_back(current);
      return;
    }
    used[first] = true;
    for (int other = first + 1; other <= 2 * n_chords; ++other) {
      if (used[other])
        continue;
      used[other] = true;
      current.emplace_back(first, other);
      self(self);
      current.pop_back();
      used[other] = false;
    }
    used[first] = false;
  };
  rec(rec);
  return out;
}

// Element of (V_n^*)^{⊗L} in the orthonormal dual basis: index words over
// {1..n} with rational coefficients.
struct RawTensor {
  int dimension = 0;
  int length = 0;
  std::map<std::vector<int>, Rational> coeffs;

  void add(const std::vector<int>& word, const Rational& c)
  {
    if (c == 0)
      return;
    auto [it, inserted] = coeffs.try_emplace(word, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        coeffs.erase(it);
    }
  }

  bool operator==(const RawTensor& o) const
  {
    return dimension == o.dimension && length == o.length && coeffs == o.coeffs;
  }
};

// Sum over all ways of giving each chord an index, the index appearing at both
// of its endpoints.
inline RawTensor beta(const ChordDiagram& c, int n)
{
  if (n < 0)
    throw Error(ErrorCode::PreconditionViolated, "dimension must be nonnegative");
  RawTensor t{n, c.points(), {}};
  const int chords = c.size();
  std::vector<int> assign(chords, 1);
  std::vector<int> word(c.points());
  if (chords > 0 && n == 0)
    return t;
  while (true) {
    for (int r = 0; r < chords; ++r) {
      word[c.chords()[r].first - 1] = assign[r];
      word[c.chords()[r].second - 1] = assign[r];
    }
    t.add(word, 1);
    int r = chords - 1;
    while (r >= 0 && assign[r] == n)
      assign[r--] = 1;
    if (r < 0)
      break;
    ++assign[r];
  }
  return t;
}

// The single word with index r at both ends of the r-th chord.
inline RawTensor z_coinv(const ChordDiagram& c, int n)
{
  if (n < c.size())
    throw Error(ErrorCode::DimensionTooSmall,
                "dimension " + std::to_string(n) + " is below chord count " + std::to_string(c.size()));
  std::vector<int> word(c.points());
  for (int r = 0; r < c.size(); ++r) {
    word[c.chords()[r].first - 1] = r + 1;
    word[c.chords()[r].second - 1] = r + 1;
  }
  RawTensor t{n, c.points(), {}};
  t.add(word, 1);
  return t;
}

inline Rational pair_raw(const RawTensor& f, const RawTensor& g)
{
  if (f.length != g.length)
    throw Error(ErrorCode::LengthMismatch,
                "tensor lengths " + std::to_string(f.length) + " and " + std::to_string(g.length) + " differ");
  const RawTensor& small = f.coeffs.size() <= g.coeffs.size() ? f : g;
  const RawTensor& large = &small == &f ? g : f;
  Rational s = 0;
  for (const auto& [w, c] : small.coeffs) {
    auto it = large.coeffs.find(w);
    if (it != large.coeffs.end())
      s += c * it->second;
  }
  return s;
}

// Rank over Q of a family of tensors, by Gaussian elimination on their words.
inline int rank(const std::vector<RawTensor>& family)
{
  std::map<std::vector<int>, int> column;
  for (const RawTensor& t : family)
    for (const auto& [w, c] : t.coeffs)
      column.try_emplace(w, 0);
  int next = 0;
  for (auto& [w, idx] : column)
    idx = next++;
  std::vector<std::vector<Rational>> rows;
  for (const RawTensor& t : family) {
    std::vector<Rational> row(next, 0);
    for (const auto& [w, c] : t.coeffs)
      row[column[w]] = c;
    rows.push_back(std::move(row));
  }
  int r = 0;
  for (int col = 0; col < next && r < static_cast<int>(rows.size()); ++col) {
    int pivot = r;
    while (pivot < static_cast<int>(rows.size()) && rows[pivot][col] == 0)
      ++pivot;
    if (pivot == static_cast<int>(rows.size()))
      continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0)
        continue;
      const Rational f = rows[i][col] / rows[r][col];
      for (int j = col; j < next; ++j)
        rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

// Sizes of the internal blocks (each >= 1) followed by the size of the
// external block.
struct BlockShape {
  std::vector<int> internal;
  int external = 0;

  int total() const { return std::accumulate(internal.begin(), internal.end(), 0) + external; }

  void check() const
  {
    for (int k : internal)
      if (k < 1)
        throw Error(ErrorCode::ShapeMismatch, "internal blocks must have size at least 1");
    if (external < 0)
      throw Error(ErrorCode::ShapeMismatch, "external block size must be nonnegative");
    if (total() % 2 != 0)
      throw Error(ErrorCode::ShapeMismatch, "block sizes must add up to an even number");
  }

  auto operator<=>(const BlockShape&) const = default;
  bool operator==(const BlockShape&) const = default;
};

// Endpoints 1..2N are laid out left to right in the blocks; each internal
// block is a vertex, each endpoint of the external block its own external
// vertex, and each chord an edge.
inline Graph graph_from_chord(const BlockShape& shape, const ChordDiagram& c)
{
  shape.check();
  if (shape.total() != c.points())
    throw Error(ErrorCode::ShapeMismatch, "shape covers " + std::to_string(shape.total()) + " endpoints but the diagram has " +
                                              std::to_string(c.points()));
  std::vector<int> mate(c.points());
  for (auto [a, b] : c.chords()) {
    mate[a - 1] = b - 1;
    mate[b - 1] = a - 1;
  }
  std::vector<std::vector<int>> vertices;
  std::vector<bool> external;
  int pos = 0;
  for (int k : shape.internal) {
    std::vector<int> block(k);
    std::iota(block.begin(), block.end(), pos);
    pos += k;
    vertices.push_back(std::move(block));
    external.push_back(false);
  }
  for (int i = 0; i < shape.external; ++i) {
    vertices.push_back({pos++});
    external.push_back(true);
  }
  return Graph(std::move(mate), std::move(vertices), std::move(external));
}

struct ChordPresentation {
  BlockShape shape;
  ChordDiagram chords;
};

// A presentation of the canonical representative of g: internal vertices in
// order, then external vertices.
inline ChordPresentation chord_from_graph(const Graph& g)
{
  if (g.has_empty_vertex())
    throw Error(ErrorCode::EmptyVertexUnsupported, "graphs with empty vertices have no chord presentation");
  const Graph canon = canonical_form(g).graph;
  std::vector<int> position(canon.half_edge_count(), 0);
  BlockShape shape;
  int pos = 1;
  for (int v : canon.internal_vertices()) {
    shape.internal.push_back(canon.valency(v));
    for (int h : canon.vertex(v))
      position[h] = pos++;
  }
  for (int v : canon.external_vertices()) {
    ++shape.external;
    position[canon.vertex(v)[0]] = pos++;
  }
  std::vector<std::pair<int, int>> chords;
  for (const Edge& e : canon.edges())
    chords.emplace_back(position[e.a], position[e.b]);
  return {shape, ChordDiagram(std::move(chords))};
}

} // namespace ckhopf
