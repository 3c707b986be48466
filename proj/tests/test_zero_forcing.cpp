#include <doctest.h>

#include <random>

#include "eigmult/errors.hpp"
#include "eigmult/families.hpp"
#include "eigmult/path_cover.hpp"
#include "eigmult/zero_forcing.hpp"
#include "oracles.hpp"

using namespace eigmult;

TEST_CASE("closure") {
  const Graph p5 = generate_family(Family::kPath, 5);
  const ForcingTrace chain = forcing_closure(p5, {0});
  CHECK(chain.forces_all(p5));
  CHECK(chain.forces == std::vector<Force>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});

  const Graph c4 = generate_family(Family::kCycle, 4);
  const ForcingTrace stuck = forcing_closure(c4, {0});
  CHECK(stuck.final_set == VertexSet{0});
  CHECK(stuck.forces.empty());

  // Pendant vertices 1 and 4 (1-based) are at distance 3.
  const Graph fig4 = generate_family(Family::kFig4, 0);
  CHECK(forcing_closure(fig4, {0, 3}).forces_all(fig4));
  CHECK(closure_mask(fig4, bit(0) | bit(3)) == fig4.vertices());

  CHECK_THROWS_AS(forcing_closure(c4, {4}), DomainError);
}

TEST_CASE("zero forcing number") {
  const Graph fig4 = generate_family(Family::kFig4, 0);
  const ZeroForcingResult z = zero_forcing_number(fig4);
  CHECK(z.z == 2);
  CHECK(closure_mask(fig4, z.witness.bits()) == fig4.vertices());

  for (int n = 3; n <= 10; ++n) CHECK(zero_forcing_number(generate_family(Family::kCycle, n)).z == 2);
  CHECK(zero_forcing_number(generate_family(Family::kComplete, 3)).z == 2);
  CHECK(zero_forcing_number(generate_family(Family::kComplete, 5)).z == 4);
  CHECK(zero_forcing_number(generate_family(Family::kStar, 6)).z == 4);
  CHECK(zero_forcing_number(generate_family(Family::kPath, 7)).witness == VertexSet{0});
  CHECK_THROWS_AS(zero_forcing_number(Graph(17)), CapExceededError);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 9, 0.35, rng);
    CHECK(zero_forcing_number(g).z == oracle::zero_forcing_number(g));
  }
}

TEST_CASE("forcing sets built from T+ witnesses") {
  const Graph c6 = generate_family(Family::kCycle, 6);
  const VertexSet c = forcing_set_from_tplus(c6, t_plus(c6));
  CHECK(c.size() == 2);
  CHECK(c.contains(0));

  const Graph w5 = generate_family(Family::kWheel, 5);
  const VertexSet w = forcing_set_from_tplus(w5, t_plus(w5));
  CHECK(w.size() == 3);
  CHECK(closure_mask(w5, w.bits()) == w5.vertices());

  const Graph tree = generate_family(Family::kFig3, 0);
  const VertexSet t = forcing_set_from_tplus(tree, t_plus(tree));
  CHECK(t.size() == min_path_cover(tree).size());
  CHECK(closure_mask(tree, t.bits()) == tree.vertices());

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(2 + trial % 8, 0.35, rng);
    const DeletionWitness tp = t_plus(g);
    const VertexSet f = forcing_set_from_tplus(g, tp);
    CHECK(closure_mask(g, f.bits()) == g.vertices());
    CHECK(f.size() <= tp.value);
  }
}
