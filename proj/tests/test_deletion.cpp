#include <doctest.h>

#include <random>

#include "eigmult/deletion.hpp"
#include "eigmult/errors.hpp"
#include "eigmult/families.hpp"
#include "eigmult/path_cover.hpp"
#include "oracles.hpp"

using namespace eigmult;

TEST_CASE("feedback sets") {
  const Graph tree = generate_family(Family::kFig3, 0);
  CHECK(enumerate_feedback_sets(tree, 0) == std::vector<VertexSet>{VertexSet{}});

  const auto c5 = enumerate_feedback_sets(generate_family(Family::kCycle, 5), 1);
  CHECK(c5 == std::vector<VertexSet>{{0}, {1}, {2}, {3}, {4}});

  const auto fig4 = enumerate_feedback_sets(generate_family(Family::kFig4, 0), 1);
  CHECK(fig4 == std::vector<VertexSet>{{1}, {2}, {4}, {5}});

  int visited = 0;
  for_each_feedback_set(generate_family(Family::kComplete, 5), 5, [&](VertexSet) { return ++visited < 3; });
  CHECK(visited == 3);
  CHECK_THROWS_AS(enumerate_feedback_sets(tree, -1), DomainError);
}

TEST_CASE("cycles") {
  for (int n = 3; n <= 12; ++n) {
    const Graph c = generate_family(Family::kCycle, n);
    CAPTURE(n);
    CHECK(t_minus(c).value == 0);
    CHECK(t_plus(c).value == 2);
    CHECK(t_plus(c).removed == VertexSet{0});
    CHECK(delta(c).value == 0);
    CHECK(delta_plus(c).value == 2);
  }
}

TEST_CASE("wheels") {
  for (int n = 4; n <= 10; ++n) {
    const Graph w = generate_family(Family::kWheel, n);
    CAPTURE(n);
    CHECK(t_minus(w).value == -1);
    CHECK(t_plus(w).value == 3);
    CHECK(delta_plus(w).value == 3);
  }
}

TEST_CASE("stars and suns") {
  for (int n = 4; n <= 9; ++n) CHECK(delta_plus(generate_family(Family::kStar, n)).value == n - 2);

  const Graph h3 = generate_family(Family::kSun, 3);
  CHECK(t_minus(h3).value == 1);
  CHECK(t_plus(h3).value == 3);
  for (int n = 4; n <= 8; ++n) {
    const Graph h = generate_family(Family::kSun, n);
    CAPTURE(n);
    CHECK(t_minus(h).value == n / 2);
    CHECK(t_plus(h).value == n / 2 + 2);
    CHECK(delta_plus(h).value <= 2 * n);
  }
}

TEST_CASE("fixed example graphs") {
  const Graph fig1 = generate_family(Family::kFig1, 0);
  const DeletionWitness d = delta(fig1, DeltaMode::kBruteForce);
  CHECK(d.value == 2);
  CHECK(d.removed == VertexSet{1, 3});
  CHECK(d.p_or_P == 4);
  CHECK(delta(fig1).value == 2);
  CHECK(t_minus(fig1).value == 2);
  CHECK(t_plus(fig1).value == 2);
  CHECK(delta(generate_family(Family::kComplete, 3), DeltaMode::kBruteForce).value == 0);

  CHECK(delta_plus(generate_family(Family::kGeneralizedStar, 3)).value == 3);
  CHECK(t_plus(generate_family(Family::kGeneralizedStar, 3)).value == 2);

  const Graph fig3 = generate_family(Family::kFig3, 0);
  CHECK(t_plus(fig3).value == 2);
  CHECK(t_plus(fig3).removed.empty());
  // Deleting 0 and 3 leaves the single path 2-1-4-5.
  CHECK(delta_plus(fig3).value == 3);
  CHECK(delta_plus(fig3).removed == VertexSet{0, 3});
  CHECK(deletion_objective(fig3, Parameter::kDeltaPlus, {1}) == 4);
  CHECK(t_plus(generate_family(Family::kFig4, 0)).value == 4);
}

TEST_CASE("witness records") {
  const DeletionWitness w = t_plus(generate_family(Family::kWheel, 5));
  CHECK(w.parameter == Parameter::kTPlus);
  CHECK(w.removed == VertexSet{0, 2});
  CHECK(w.value == 3);
  CHECK(w.p_or_P == 1);
  CHECK(w.decomposition.components == std::vector<std::vector<int>>{{1, 3, 4}});

  CHECK(deletion_objective(generate_family(Family::kCycle, 4), Parameter::kTPlus, {}) == std::nullopt);
  CHECK_THROWS_AS(make_witness(generate_family(Family::kCycle, 4), Parameter::kTMinus, {}), PreconditionError);
  CHECK(to_string(Parameter::kDeltaPlus) == "delta_plus");
}

TEST_CASE("componentwise optimum on disjoint unions") {
  const Graph g = disjoint_union(generate_family(Family::kCycle, 4), generate_family(Family::kWheel, 5));
  CHECK(t_plus(g).value == 5);
  CHECK(t_minus(g).value == -1);
  CHECK(t_plus(g).removed == VertexSet{0, 4, 6});
}

TEST_CASE("exhaustive oracle on random graphs") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 8, 0.2 + 0.1 * (trial % 5), rng);
    const oracle::Parameters want = oracle::deletion_parameters(g);
    CAPTURE(g.order());
    CHECK(t_minus(g).value == want.t_minus);
    CHECK(t_plus(g).value == want.t_plus);
    CHECK(t_minus(g, SearchBound::kUnbounded).value == want.t_minus);
    CHECK(t_plus(g, SearchBound::kUnbounded).value == want.t_plus);
    CHECK(delta(g, DeltaMode::kBruteForce).value == want.delta);
    CHECK(delta(g).value == want.delta);
    CHECK(delta_plus(g).value == want.delta_plus);
  }
  CHECK_THROWS_AS(delta_plus(Graph(17)), CapExceededError);
  CHECK_THROWS_AS(delta(Graph(17), DeltaMode::kBruteForce), CapExceededError);
}

TEST_CASE("bounded search on two-cycle graphs") {
  // K_4: cycle rank 3, every optimum needs two deletions.
  const Graph k4 = generate_family(Family::kComplete, 4);
  CHECK(t_plus(k4).value == 3);
  CHECK(t_plus(k4).removed == VertexSet{0, 1});
  CHECK(t_minus(k4).value == -1);
}

TEST_CASE("reduce optimal set") {
  const Graph c5 = generate_family(Family::kCycle, 5);
  const VertexSet r = reduce_optimal_set(c5, {0, 2});
  CHECK(r.size() == 1);
  CHECK(r.subset_of({0, 2}));

  const Graph tree = generate_family(Family::kFig3, 0);
  CHECK(reduce_optimal_set(tree, {0, 3, 5}).empty());

  const Graph fig4 = generate_family(Family::kFig4, 0);
  const VertexSet s = reduce_optimal_set(fig4, {1, 4, 5});
  CHECK(s.size() == 1);
  CHECK(s.subset_of({1, 4, 5}));
  CHECK(is_forest(fig4, fig4.vertices() & ~s.bits()));

  CHECK_THROWS_AS(reduce_optimal_set(c5, {}), PreconditionError);
}
