#include <doctest.h>

#include <set>

#include "instances.hpp"
#include "ldsets/error.hpp"
#include "ldsets/nonroundable.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace ldsets;

namespace {

// Every structural requirement, re-derived from the raw digraph.
void check_bullets(const Digraph& d, const SeparatorDecomposition& s) {
  const auto& x = s.separator;
  CHECK(separates(d, x));
  for (Vertex v : x) CHECK_FALSE(separates(d, set_difference(x, VertexList{v})));
  const auto y = induced(d, s.rest);
  CHECK(is_connected(y.graph));
  CHECK(classify(y.graph).local_tournament);
  CHECK_FALSE(classify(y.graph).tournament);
  CHECK(is_tournament(induced(d, x).graph));
  CHECK(s.blocks.size() >= 3);
  for (Vertex t : s.last_block()) {
    for (Vertex v : x) CHECK(d.has_arc(t, v));
  }
  for (Vertex v : x) {
    for (Vertex t : s.blocks.front()) CHECK(d.has_arc(v, t));
  }
  CHECK(s.front == set_difference(s.rest, s.last_block()));
  const bool single_last = s.last_block().size() == 1;
  const bool single_x = x.size() == 1;
  CHECK(s.case_id == (single_last ? (single_x ? 1 : 2) : (single_x ? 3 : 4)));
}

}  // namespace

TEST_CASE("C5 with separator {4}") {
  const auto c5 = fixtures::cycle(5);
  const auto s = separator_decomposition_with(c5, VertexList{4});
  CHECK(s.rest == VertexList{0, 1, 2, 3});
  CHECK(s.blocks == std::vector<VertexList>{{0}, {1}, {2}, {3}});
  CHECK(s.front == VertexList{0, 1, 2});
  CHECK(s.case_id == 1);
  check_bullets(c5, s);

  const auto set = combine_cases(c5, s);
  CHECK(set.vertices == VertexList{0, 1, 3});
  CHECK(set.claimed_bound == 3);
  CHECK(set.verified);
  CHECK(set.trace_tag == "nonroundable-case-1");
}

TEST_CASE("separator guards") {
  CHECK_THROWS_AS(separator_decomposition(fixtures::cycle(4)), InputError);
  CHECK_THROWS_AS(separator_decomposition(fixtures::cycle(3)), InputError);
  CHECK_THROWS_AS(separator_decomposition(fixtures::path(3)), InputError);
  CHECK_THROWS_AS(separator_decomposition_with(fixtures::cycle(5), VertexList{3, 4}), StructuralError);
  CHECK_THROWS_AS(separator_decomposition_with(fixtures::cycle(4), VertexList{0, 2}), StructuralError);
  CHECK(separator_decomposition_with(fixtures::cycle(4), VertexList{3}).case_id == 1);
}

TEST_CASE("dispatcher") {
  const auto c3 = solve_local_tournament(fixtures::cycle(3));
  CHECK(c3.size() == 2);
  CHECK(c3.trace_tag == "tournament");
  const auto p3 = solve_local_tournament(fixtures::path(3));
  CHECK(p3.vertices == VertexList{0, 1});
  CHECK(p3.trace_tag == "roundable");
  CHECK(solve_local_tournament(fixtures::make(1, {})).vertices == VertexList{0});
  CHECK_THROWS_WITH_AS(solve_local_tournament(fixtures::make(3, {})), "input is not connected", InputError);
  CHECK_THROWS_WITH_AS(solve_local_tournament(fixtures::make(3, {{0, 1}, {0, 2}})), "input is not a local tournament",
                       InputError);
}

TEST_CASE("synthetic separators cover all four cases") {
  const std::vector<std::pair<std::vector<std::size_t>, std::size_t>> shapes = {
      {{1, 1, 1, 1}, 1}, {{3, 1, 1}, 1}, {{1, 3, 1, 1}, 2}, {{1, 1, 1}, 3},
      {{1, 1, 3}, 1},    {{3, 1, 4}, 1}, {{1, 1, 3}, 2},    {{3, 3, 3}, 4}};
  std::set<int> cases;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (const auto& [sizes, x_size] : shapes) {
      const auto inst = instances::chain_with_separator(sizes, x_size, seed);
      const auto s = separator_decomposition_with(inst.graph, inst.separator);
      check_bullets(inst.graph, s);
      const auto set = combine_cases(inst.graph, s);
      CHECK(set.verified);
      CHECK(set.size() <= ceil_half(inst.graph.order()));
      CHECK(set.size() >= oracle::min_size(oracle::matrix_of(inst.graph), oracle::Kind::LD));
      cases.insert(s.case_id);

      if (s.case_id == 2) {
        const auto in_set = membership(inst.graph.order(), set.vertices);
        for (Vertex xv : s.separator) {
          for (Vertex zv : s.front) {
            if (in_set[xv] || in_set[zv]) continue;
            VertexList sx;
            VertexList sz;
            for (Vertex u : inst.graph.in(xv)) {
              if (in_set[u]) sx.push_back(u);
            }
            for (Vertex u : inst.graph.in(zv)) {
              if (in_set[u]) sz.push_back(u);
            }
            CHECK(sx != sz);
          }
        }
      }
    }
  }
  CHECK(cases == std::set<int>{1, 2, 3, 4});
}

TEST_CASE("property: random non-roundable local tournaments") {
  std::size_t found = 0;
  std::set<int> cases;
  for (std::uint64_t seed = 0; found < 60 && seed < 200000; ++seed) {
    const std::size_t n = 5 + seed % 12;
    const auto d = instances::perturbed_non_roundable(n, seed);
    if (!d) continue;
    ++found;
    const auto s = separator_decomposition(*d);
    check_bullets(*d, s);
    cases.insert(s.case_id);
    const auto set = solve_local_tournament(*d);
    CHECK(set.verified);
    CHECK(set.trace_tag == "nonroundable-case-" + std::to_string(s.case_id));
    CHECK(set.size() <= ceil_half(n));
    if (n <= 12) CHECK(set.size() >= oracle::min_size(oracle::matrix_of(*d), oracle::Kind::LD));
  }
  CHECK(found == 60);
  CHECK(cases.size() >= 2);
}
