#include "bds/distsim.hpp"

#include <numeric>
#include <random>

#include "bds/rng.hpp"
#include "bds/sparsify.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bds;
using namespace bds::testing;

TEST_CASE("matching round on a star") {
  Graph star = star_graph(10);
  auto run = run_one_round_matching_sparsifier(star, 4);
  CHECK(run.log.rounds == 1);
  CHECK(run.edges.size() == 4);
  CHECK(run.log.sent[0] == 4);
  for (Vertex leaf = 1; leaf <= 10; ++leaf) CHECK(run.log.sent[leaf] == 1);
  auto summary = load_report(run.log);
  CHECK(summary.max_sent == 4);
}

TEST_CASE("matching round on a triangle") {
  auto run = run_one_round_matching_sparsifier(triangle(), 3);
  CHECK(run.edges.size() == 3);
  for (Vertex v = 0; v < 3; ++v) CHECK(run.log.sent[v] == 2);
  CHECK(load_report(run.log).max_sent == 2);
}

TEST_CASE("high-low round on a star") {
  Graph star = star_graph(10);
  auto run = run_one_round_high_low(star, 4);
  CHECK(run.log.rounds == 1);
  for (Vertex leaf = 1; leaf <= 10; ++leaf) {
    REQUIRE(run.neighbor_is_low[leaf].size() == 1);
    CHECK(run.neighbor_is_low[leaf][0] == 0);  // every leaf learns the center is high
  }
  for (size_t slot = 0; slot < 4; ++slot) CHECK(run.neighbor_is_low[0][slot] == 1);
}

TEST_CASE("edgeless graph sends nothing") {
  Graph g(5);
  auto run = run_one_round_high_low(g, 2);
  CHECK(load_report(run.log).max_sent == 0);
  auto mrun = run_one_round_matching_sparsifier(g, 2);
  CHECK(mrun.edges.empty());
  CHECK(load_report(mrun.log).max_sent == 0);
}

TEST_CASE("simulated output equals the centralized builds over a corpus") {
  std::mt19937_64 seeds(321);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = trial % 4 == 0 ? star_graph(25)
                             : generate_random_graph(24, 4 + bounded_uniform(seeds, 70), seeds());
    int delta = 1 + static_cast<int>(bounded_uniform(seeds, 9));
    auto run = run_one_round_matching_sparsifier(g, delta);
    CHECK(run.edges == build_matching_sparsifier(g, delta).graph.edges());
    CHECK(run.log.rounds == 1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      CHECK(run.log.sent[v] <= delta);
      CHECK(run.log.received[v] <= g.degree(v));
    }
    long long sent_total = std::accumulate(run.log.sent.begin(), run.log.sent.end(), 0ll);
    long long recv_total =
        std::accumulate(run.log.received.begin(), run.log.received.end(), 0ll);
    CHECK(sent_total == recv_total);

    auto hl = run_one_round_high_low(g, delta);
    auto split = split_high_low(g, delta);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      CHECK(hl.log.sent[v] == g.degree(v));
      auto nbrs = g.neighbors(v);
      for (size_t slot = 0; slot < nbrs.size(); ++slot)
        CHECK((hl.neighbor_is_low[v][slot] != 0) == !split.is_high(nbrs[slot]));
    }
  }
}

TEST_CASE("vertex handler order cannot affect the outcome") {
  std::mt19937_64 seeds(777);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = generate_random_graph(20, 5 + bounded_uniform(seeds, 50), seeds());
    int delta = 1 + static_cast<int>(bounded_uniform(seeds, 6));

    std::vector<Vertex> shuffled(static_cast<size_t>(g.vertex_count()));
    std::iota(shuffled.begin(), shuffled.end(), 0);
    for (size_t i = shuffled.size(); i > 1; --i)
      std::swap(shuffled[i - 1], shuffled[bounded_uniform(seeds, i)]);

    auto a = run_one_round_matching_sparsifier(g, delta);
    auto b = run_one_round_matching_sparsifier(g, delta, shuffled);
    CHECK(a.edges == b.edges);
    CHECK(a.log.sent == b.log.sent);
    CHECK(a.log.received == b.log.received);

    auto ha = run_one_round_high_low(g, delta);
    auto hb = run_one_round_high_low(g, delta, shuffled);
    CHECK(ha.neighbor_is_low == hb.neighbor_is_low);
    CHECK(ha.log.sent == hb.log.sent);
  }
  Graph g = generate_random_graph(6, 5, 1);
  CHECK_THROWS_AS(run_one_round_matching_sparsifier(g, 2, std::vector<Vertex>{0, 1}),
                  input_error);
  CHECK_THROWS_AS(run_one_round_matching_sparsifier(g, 2, std::vector<Vertex>{0, 0, 1, 2, 3, 4}),
                  input_error);
}
