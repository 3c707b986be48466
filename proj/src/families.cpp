#include "eigmult/families.hpp"

#include <array>

#include "eigmult/errors.hpp"

namespace eigmult {

namespace {

struct NamedFamily {
  std::string_view name;
  Family family;
};

constexpr std::array kNames = {
    NamedFamily{"path", Family::kPath},
    NamedFamily{"cycle", Family::kCycle},
    NamedFamily{"star", Family::kStar},
    NamedFamily{"wheel", Family::kWheel},
    NamedFamily{"sun", Family::kSun},
    NamedFamily{"complete", Family::kComplete},
    NamedFamily{"genstar", Family::kGeneralizedStar},
    NamedFamily{"unicyclic", Family::kUnicyclic},
    NamedFamily{"fig1", Family::kFig1},
    NamedFamily{"fig3", Family::kFig3},
    NamedFamily{"fig4", Family::kFig4},
    NamedFamily{"generalized_star", Family::kGeneralizedStar},
    NamedFamily{"unicyclic_family", Family::kUnicyclic},
};

void require(bool ok, Family kind, const std::string& why) {
  if (!ok) throw DomainError(family_name(kind) + ": " + why);
}

int param(const FamilyParams& extra, const std::string& key, int fallback) {
  auto it = extra.find(key);
  return it == extra.end() ? fallback : it->second;
}

// 1-based edge list to a 0-based graph.
Graph from_one_based(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.push_back({u - 1, v - 1});
  return Graph(n, list);
}

}  // namespace

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& entry : kNames) {
    if (entry.name == name) return entry.family;
  }
  return std::nullopt;
}

std::string family_name(Family f) {
  for (const auto& entry : kNames) {
    if (entry.family == f) return std::string(entry.name);
  }
  return "unknown";
}

Graph generate_family(Family kind, int n, const FamilyParams& extra) {
  std::vector<Edge> edges;
  switch (kind) {
    case Family::kPath: {
      require(n >= 0 && n <= kMaxVertices, kind, "n must be in 0..64");
      for (int v = 1; v < n; ++v) edges.push_back({v - 1, v});
      return Graph(n, edges);
    }
    case Family::kCycle: {
      require(n >= 3 && n <= kMaxVertices, kind, "n must be in 3..64");
      for (int v = 1; v < n; ++v) edges.push_back({v - 1, v});
      edges.push_back({n - 1, 0});
      return Graph(n, edges);
    }
    case Family::kStar: {
      require(n >= 2 && n <= kMaxVertices, kind, "n must be in 2..64");
      for (int v = 1; v < n; ++v) edges.push_back({0, v});
      return Graph(n, edges);
    }
    case Family::kWheel: {
      require(n >= 4 && n <= kMaxVertices, kind, "n must be in 4..64");
      const int rim = n - 1;
      for (int v = 0; v < rim; ++v) {
        edges.push_back({v, (v + 1) % rim});
        edges.push_back({v, rim});
      }
      return Graph(n, edges);
    }
    case Family::kSun: {
      require(n >= 3 && 2 * n <= kMaxVertices, kind, "n must be in 3..32");
      for (int v = 0; v < n; ++v) {
        edges.push_back({v, (v + 1) % n});
        edges.push_back({v, n + v});
      }
      return Graph(2 * n, edges);
    }
    case Family::kComplete: {
      require(n >= 0 && n <= kMaxVertices, kind, "n must be in 0..64");
      for (int v = 0; v < n; ++v) {
        for (int u = 0; u < v; ++u) edges.push_back({u, v});
      }
      return Graph(n, edges);
    }
    case Family::kGeneralizedStar: {
      const int legs = n;
      const int len = param(extra, "leg_length", 2);
      require(legs >= 0 && len >= 1, kind, "need legs >= 0 and leg_length >= 1");
      require(1 + legs * len <= kMaxVertices, kind, "more than 64 vertices");
      for (int i = 0; i < legs; ++i) {
        int prev = 0;
        for (int k = 1; k <= len; ++k) {
          const int v = i * len + k;
          edges.push_back({prev, v});
          prev = v;
        }
      }
      return Graph(1 + legs * len, edges);
    }
    case Family::kUnicyclic: {
      const int chord = param(extra, "chord_path_length", 2);
      const int u = param(extra, "offset", 1);
      const int w = u + 2;
      require(n >= 5, kind, "path order must be >= 5");
      require(chord >= 2, kind, "chord_path_length must be >= 2");
      require(u >= 1 && w <= n - 2, kind, "u, v, w must be non-pendant path vertices");
      const int order = n + chord - 1;
      require(order <= kMaxVertices, kind, "more than 64 vertices");
      for (int v = 1; v < n; ++v) edges.push_back({v - 1, v});
      int prev = u;
      for (int k = 0; k < chord - 1; ++k) {
        edges.push_back({prev, n + k});
        prev = n + k;
      }
      edges.push_back({prev, w});
      return Graph(order, edges);
    }
    case Family::kFig1:
      return from_one_based(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {2, 6}});
    case Family::kFig3:
      return from_one_based(6, {{1, 2}, {2, 3}, {2, 5}, {4, 5}, {5, 6}});
    case Family::kFig4:
      return from_one_based(8, {{1, 2}, {2, 3}, {3, 7}, {2, 5}, {3, 6}, {4, 5}, {5, 6}, {6, 8}});
  }
  throw DomainError("unknown family");
}

}  // namespace eigmult
