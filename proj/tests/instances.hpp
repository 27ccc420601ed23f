#pragma once

// Instance builders shared by the unit tests and the acceptance harness.

#include <optional>
#include <random>
#include <vector>

#include "ldsets/digraph.hpp"
#include "ldsets/generators.hpp"
#include "ldsets/structure.hpp"

namespace instances {

// A random round blow-up with one to three arcs reversed, dropped or added.
// Returned only when the result is a strong local tournament that is neither
// a tournament nor roundable.
inline std::optional<ldsets::Digraph> perturbed_non_roundable(std::size_t n, std::uint64_t seed) {
  using namespace ldsets;
  std::mt19937_64 rng(seed);
  auto arcs = gen_random_local_tournament(n, rng()).graph.arcs();
  const auto moves = 1 + rng() % 3;
  for (std::uint64_t m = 0; m < moves; ++m) {
    const auto op = rng() % 3;
    if (op == 0 && !arcs.empty()) {
      auto& arc = arcs[rng() % arcs.size()];
      std::swap(arc.first, arc.second);
    } else if (op == 1 && !arcs.empty()) {
      arcs.erase(arcs.begin() + static_cast<std::ptrdiff_t>(rng() % arcs.size()));
    } else {
      const auto u = static_cast<Vertex>(rng() % n);
      const auto v = static_cast<Vertex>(rng() % n);
      if (u != v) arcs.emplace_back(u, v);
    }
  }
  const auto d = Digraph::build(n, arcs);
  const auto c = classify(d);
  if (!c.local_tournament || c.tournament || !is_strong(d)) return std::nullopt;
  if (round_decomposition(d)) return std::nullopt;
  return d;
}

struct SeparatedInstance {
  ldsets::Digraph graph;
  ldsets::VertexList separator;
};

// Chain T_1 => T_2 => ... => T_r of random strong tournaments with the given
// sizes, then a random tournament X on `x_size` vertices with T_r => X => T_1.
// Block vertices come first in order, X takes the last ids.
inline SeparatedInstance chain_with_separator(const std::vector<std::size_t>& sizes, std::size_t x_size,
                                              std::uint64_t seed) {
  using namespace ldsets;
  std::vector<Arc> arcs;
  std::vector<VertexList> blocks;
  Vertex next = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const auto t = gen_random_strong_tournament(sizes[i], seed + 31 * i);
    VertexList block;
    for (std::size_t j = 0; j < sizes[i]; ++j) block.push_back(next + static_cast<Vertex>(j));
    for (const auto& [u, v] : t.arcs()) arcs.emplace_back(next + u, next + v);
    next += static_cast<Vertex>(sizes[i]);
    blocks.push_back(block);
  }
  const auto x = gen_random_tournament(x_size, seed + 7);
  VertexList separator;
  for (std::size_t j = 0; j < x_size; ++j) separator.push_back(next + static_cast<Vertex>(j));
  for (const auto& [u, v] : x.arcs()) arcs.emplace_back(next + u, next + v);
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    for (Vertex u : blocks[i]) {
      for (Vertex v : blocks[i + 1]) arcs.emplace_back(u, v);
    }
  }
  for (Vertex t : blocks.back()) {
    for (Vertex s : separator) arcs.emplace_back(t, s);
  }
  for (Vertex s : separator) {
    for (Vertex t : blocks.front()) arcs.emplace_back(s, t);
  }
  return {Digraph::build(next + x_size, arcs), separator};
}

}  // namespace instances
