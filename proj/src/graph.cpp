#include "eigmult/graph.hpp"

#include <algorithm>
#include <sstream>

#include "eigmult/errors.hpp"

namespace eigmult {

namespace {

void check_vertex(int v, int n) {
  if (v < 0 || v >= n) {
    throw DomainError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> members) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::from_list(const std::vector<int>& members) {
  VertexSet s;
  for (int v : members) s.insert(v);
  return s;
}

void VertexSet::insert(int v) {
  check_vertex(v, kMaxVertices);
  bits_ |= bit(v);
}

void VertexSet::erase(int v) {
  check_vertex(v, kMaxVertices);
  bits_ &= ~bit(v);
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (Mask m = bits_; m; m &= m - 1) out.push_back(lowest(m));
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  Mask x = a.bits(), y = b.bits();
  while (x && y) {
    int i = lowest(x), j = lowest(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return !x && y;
}

bool canonical_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

std::string to_string(VertexSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : s.members()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw DomainError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
  }
  adj_.assign(n, 0);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const Edge& e : edges) {
    check_vertex(e.u, n);
    check_vertex(e.v, n);
    if (e.u == e.v) throw DomainError("loop at vertex " + std::to_string(e.u));
    if (!adjacent(e.u, e.v)) ++edge_count_;
    adj_[e.u] |= bit(e.v);
    adj_[e.v] |= bit(e.u);
  }
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.push_back({u, v});
  *this = Graph(n, list);
}

Graph Graph::from_adjacency(std::vector<Mask> rows) {
  Graph g(static_cast<int>(rows.size()));
  const int n = g.order();
  int twice = 0;
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~full_mask(n)) throw DomainError("adjacency row references a vertex outside the graph");
    if (rows[v] & bit(v)) throw DomainError("loop at vertex " + std::to_string(v));
    for (Mask m = rows[v]; m; m &= m - 1) {
      if (!((rows[lowest(m)] >> v) & 1)) throw DomainError("adjacency is not symmetric");
    }
    twice += popcount(rows[v]);
  }
  g.adj_ = std::move(rows);
  g.edge_count_ = twice / 2;
  return g;
}

int Graph::max_degree() const {
  int d = 0;
  for (Mask row : adj_) d = std::max(d, popcount(row));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int v = 0; v < order(); ++v) {
    for (Mask m = adj_[v] & (bit(v) - 1); m; m &= m - 1) out.push_back({lowest(m), v});
  }
  return out;
}

int Graph::edges_within(Mask within) const {
  int twice = 0;
  for (Mask m = within; m; m &= m - 1) twice += popcount(adj_[lowest(m)] & within);
  return twice / 2;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int shift = a.order();
  if (shift + b.order() > kMaxVertices) throw DomainError("disjoint union exceeds 64 vertices");
  std::vector<Mask> rows;
  rows.reserve(shift + b.order());
  for (int v = 0; v < a.order(); ++v) rows.push_back(a.neighbors(v));
  for (int v = 0; v < b.order(); ++v) rows.push_back(b.neighbors(v) << shift);
  return Graph::from_adjacency(std::move(rows));
}

}  // namespace eigmult
