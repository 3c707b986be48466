#include <doctest.h>

#include <random>

#include "eigmult/errors.hpp"
#include "eigmult/families.hpp"
#include "eigmult/path_cover.hpp"
#include "eigmult/structure.hpp"
#include "oracles.hpp"

using namespace eigmult;

namespace {

// Paths are vertex-disjoint, cover V, and each is an induced path of f.
bool valid_cover(const Graph& f, const PathCover& cover) {
  Mask seen = 0;
  for (const auto& path : cover.paths) {
    if (path.empty() || path.front() > path.back()) return false;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (seen & bit(path[i])) return false;
      seen |= bit(path[i]);
      if (i > 0 && !f.adjacent(path[i - 1], path[i])) return false;
    }
    const Mask on = VertexSet::from_list(path).bits();
    if (f.edges_within(on) != static_cast<int>(path.size()) - 1) return false;
  }
  return seen == f.vertices();
}

}  // namespace

TEST_CASE("min path cover values") {
  CHECK(min_path_cover(Graph(1)).size() == 1);
  for (int n = 1; n <= 9; ++n) CHECK(min_path_cover(generate_family(Family::kPath, n)).size() == 1);
  CHECK(min_path_cover(generate_family(Family::kStar, 5)).size() == 3);

  const PathCover fig3 = min_path_cover(generate_family(Family::kFig3, 0));
  CHECK(fig3.size() == 2);
  CHECK(fig3.paths == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}});

  CHECK(min_path_cover(generate_family(Family::kGeneralizedStar, 3)).size() == 2);
  CHECK(min_path_cover(Graph(4)).size() == 4);
  CHECK_THROWS_AS(min_path_cover(generate_family(Family::kCycle, 4)), PreconditionError);
}

TEST_CASE("oracles agree on small values") {
  CHECK(path_cover_bruteforce(Graph(1)) == 1);
  CHECK(path_cover_bruteforce(generate_family(Family::kPath, 4)) == 1);
  CHECK(path_cover_bruteforce(generate_family(Family::kStar, 5)) == 3);
  CHECK_THROWS_AS(path_cover_bruteforce(generate_family(Family::kPath, 13)), CapExceededError);

  CHECK(induced_path_cover_exact(generate_family(Family::kCycle, 5)) == 2);
  CHECK(induced_path_cover_exact(generate_family(Family::kComplete, 4)) == 2);
  CHECK(induced_path_cover_exact(generate_family(Family::kSun, 5)) == 3);
}

TEST_CASE("greedy matches the oracles on random forests") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 11;
    Graph f = oracle::random_tree(n, rng);
    if (trial % 3 == 0) {
      // drop a few edges to get a forest
      std::vector<Edge> kept;
      for (const auto& e : f.edges()) {
        if (rng() % 4) kept.push_back(e);
      }
      f = Graph(n, kept);
    }
    const PathCover cover = min_path_cover(f);
    CHECK(valid_cover(f, cover));
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    const int expected = oracle::forest_path_cover(f, all);
    CHECK(cover.size() == expected);
    CHECK(path_cover_number(f, f.vertices()) == expected);
    CHECK(path_cover_bruteforce(f) == expected);
    CHECK(induced_path_cover_exact(f) == expected);

    const Mask joins = greedy_join_vertices(f, f.vertices());
    const Mask rest = f.vertices() & ~joins;
    CHECK(is_linear_forest(f, rest));
    CHECK(count_components(f, rest) - popcount(joins) == expected);
  }
}

TEST_CASE("path cover number on induced subforests") {
  const Graph g = generate_family(Family::kSun, 4);
  // Removing two opposite cycle vertices leaves two edges and two isolated pendants.
  CHECK(path_cover_number(g, g.vertices() & ~(bit(0) | bit(2))) == 4);
}
