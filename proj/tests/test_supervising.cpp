#include <doctest.h>

#include <set>

#include "ldsets/error.hpp"
#include "ldsets/generators.hpp"
#include "ldsets/structure.hpp"
#include "ldsets/supervising.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace ldsets;
using fixtures::make;

namespace {

std::size_t parts(const Digraph& d, const VertexList& set) { return s_partition(d, set).part_count(); }

VertexList in_signature(const Digraph& d, Vertex v, const VertexList& set) {
  VertexList sig;
  for (Vertex u : d.in(v)) {
    if (std::binary_search(set.begin(), set.end(), u)) sig.push_back(u);
  }
  return sig;
}

}  // namespace

TEST_CASE("supervising vertex") {
  CHECK(find_supervising_vertex(fixtures::cycle(3)) == Vertex{0});
  CHECK(find_supervising_vertex(fixtures::path(3)) == Vertex{0});
  CHECK_FALSE(find_supervising_vertex(make(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
  CHECK(find_supervising_vertex(gen_fig4(2)) == Vertex{0});
  CHECK_FALSE(find_supervising_vertex(reverse(gen_fig4(2))));
  CHECK_FALSE(find_supervising_vertex(Digraph(0)));
}

TEST_CASE("layered dominating set") {
  const auto c3 = layered_dominating_set(fixtures::cycle(3), 0);
  CHECK(c3.set == VertexList{0, 1});
  CHECK(c3.source_added);
  CHECK(parts(fixtures::cycle(3), c3.set) == 1);

  const auto hub = layered_dominating_set(gen_fig4(1), 0);
  CHECK(hub.set == VertexList{0});
  CHECK(parts(gen_fig4(1), hub.set) == 1);

  CHECK(layered_dominating_set(make(1, {}), 0).set == VertexList{0});
  CHECK_THROWS_AS(layered_dominating_set(fixtures::path(3), 1), InputError);
}

TEST_CASE("maximal augmentation") {
  CHECK(maximal_augment(gen_fig4(1), VertexList{0}) == VertexList{0, 1});
  CHECK(maximal_augment(fixtures::cycle(3), VertexList{0, 1}) == VertexList{0, 1});
  CHECK(maximal_augment(fixtures::cycle(4), VertexList{0, 2}) == VertexList{0, 2});
  CHECK_THROWS_AS(maximal_augment(fixtures::cycle(3), VertexList{0}), InputError);
}

TEST_CASE("final set selection") {
  const auto hub = lemma8_ld(gen_fig4(1), VertexList{0, 1});
  CHECK(hub.trace.chosen == "S");
  CHECK(hub.set.vertices == VertexList{0, 1});
  CHECK(hub.set.size() <= 2);

  const auto c3 = lemma8_ld(fixtures::cycle(3), VertexList{0, 1});
  CHECK(c3.trace.chosen == "S");
  CHECK(c3.set.vertices == VertexList{0, 1});

  CHECK_THROWS_AS(lemma8_ld(make(3, {{0, 1}, {0, 2}}), VertexList{0}), HypothesisError);
}

TEST_CASE("supervising pipeline on the tight families") {
  const auto fig4 = solve_supervising(gen_fig4(3));
  CHECK(fig4.verified);
  CHECK(fig4.size() <= 6);
  const auto fig1 = solve_supervising(gen_fig1(3));
  CHECK(fig1.verified);
  CHECK(fig1.size() <= 7);
  CHECK_THROWS_AS(solve_supervising(make(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})), DomainError);
  CHECK_THROWS_AS(solve_supervising(make(3, {{0, 1}, {0, 2}})), HypothesisError);
}

TEST_CASE("property: pipeline invariants on random twin-free digraphs") {
  std::size_t runs = 0;
  for (std::uint64_t seed = 0; runs < 250; ++seed) {
    const std::size_t n = 3 + seed % 10;
    const auto d = gen_random_digraph(n, 0.3, seed, DigraphFilter::parse("strong+twin-free"));
    ++runs;
    const auto sol = solve_supervising_traced(d);
    const auto& layered = sol.layered;
    const auto& set = layered.set;
    CHECK(evaluate_set(d, set).dominating);
    CHECK(parts(d, set) + 1 >= set.size());

    // Witnesses: outside S, uniquely dominated within the chooser's layer,
    // and pairwise distinguishable by S.
    std::set<VertexList> witness_signatures;
    for (const auto& [v, w] : layered.witnesses) {
      CHECK_FALSE(std::binary_search(set.begin(), set.end(), w));
      CHECK(layered.layering.layer_of[w] == layered.layering.layer_of[v] + 1);
      std::size_t same_layer = 0;
      for (Vertex u : d.in(w)) {
        if (std::binary_search(set.begin(), set.end(), u) && layered.layering.layer_of[u] == layered.layering.layer_of[v]) {
          ++same_layer;
          CHECK(u == v);
        }
      }
      CHECK(same_layer == 1);
      witness_signatures.insert(in_signature(d, w, set));
    }
    CHECK(witness_signatures.size() == layered.witnesses.size());

    const auto& trace = sol.result.trace;
    const auto& augmented = trace.augmented;
    for (Vertex v = 0; v < n; ++v) {
      if (std::binary_search(augmented.begin(), augmented.end(), v)) continue;
      const auto bigger = set_union(augmented, VertexList{v});
      CHECK(parts(d, bigger) + 1 < bigger.size());
    }

    if (trace.chosen != "S") {
      CHECK(is_locating_dominating(d, trace.x2));
      CHECK(trace.x2.size() == n - trace.partition.singleton_parts - trace.partition.large_parts);
      CHECK(2 * trace.x1_prime.size() <= n + augmented.size() + trace.partition.singleton_parts);
      VertexList seen;
      for (const auto& [x, y] : trace.quasi_pairs) {
        CHECK(are_quasi_twins(d, x, y));
        CHECK_FALSE(std::binary_search(seen.begin(), seen.end(), x));
        CHECK_FALSE(std::binary_search(seen.begin(), seen.end(), y));
        seen = set_union(seen, VertexList{x, y});
      }
      CHECK(sol.result.set.size() == std::min(trace.x1_prime.size(), trace.x2.size()));
    }
    CHECK(sol.result.set.verified);
    CHECK(sol.result.set.size() <= supervising_bound(d));
    if (n <= 10) CHECK(sol.result.set.size() >= oracle::min_size(oracle::matrix_of(d), oracle::Kind::LD));
  }
}

TEST_CASE("property: connected locally in-semicomplete digraphs have a supervising vertex") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto d = gen_random_in_semicomplete(3 + seed % 14, seed);
    REQUIRE(classify(d).locally_in_semicomplete);
    REQUIRE(is_connected(d));
    const auto s = find_supervising_vertex(d);
    REQUIRE(s);
    CHECK(bfs_layers(d, *s).unreachable.empty());
  }
}
