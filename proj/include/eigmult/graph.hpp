#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace eigmult {

using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr Mask bit(int v) { return Mask{1} << v; }

// All vertices 0..n-1.
inline constexpr Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

// Lowest set bit as a vertex index; mask must be nonzero.
inline int lowest(Mask m) { return std::countr_zero(m); }

inline int popcount(Mask m) { return std::popcount(m); }

// A subset of 0..63 with bitset semantics.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> members);
  static VertexSet from_list(const std::vector<int>& members);

  constexpr Mask bits() const { return bits_; }
  int size() const { return popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int v) const { return v >= 0 && v < kMaxVertices && (bits_ >> v) & 1; }
  bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  void insert(int v);
  void erase(int v);

  // Members in ascending order.
  std::vector<int> members() const;

  VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }

  friend bool operator==(VertexSet, VertexSet) = default;

 private:
  Mask bits_ = 0;
};

// Lexicographic comparison of the sorted member lists.
bool lex_less(VertexSet a, VertexSet b);

// Size first, then lexicographic. This is the canonical witness order.
bool canonical_less(VertexSet a, VertexSet b);

std::string to_string(VertexSet s);

struct Edge {
  int u;
  int v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1, n <= 64. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);
  // Adjacency rows must be symmetric and loop-free.
  static Graph from_adjacency(std::vector<Mask> rows);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edge_count_; }
  Mask vertices() const { return full_mask(order()); }

  Mask neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  int max_degree() const;
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }

  // Edges {u,v} with u < v, ordered by v then u (graph6 column order).
  std::vector<Edge> edges() const;

  // Number of edges with both endpoints in `within`.
  int edges_within(Mask within) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Mask> adj_;
  int edge_count_ = 0;
};

// Disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace eigmult
