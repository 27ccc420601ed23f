#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ldsets/digraph.hpp"

namespace ldsets {

// s = 0, t = 1, triangle j on 2+3j -> 3+3j -> 4+3j -> 2+3j. Triangle vertices
// point to s, t points to every triangle vertex, and s -> t. n = 3k + 2.
Digraph gen_fig1(std::size_t k);

// Hub 0 pointing to k disjoint directed triangles 1+3j -> 2+3j -> 3+3j -> 1+3j.
// n = 3k + 1.
Digraph gen_fig4(std::size_t k);

// Disjoint copies of `blocks` (numbered consecutively in order) plus all arcs
// from block i to block j for every arc (i, j) of r.
Digraph blowup(const Digraph& r, const std::vector<Digraph>& blocks);

Digraph gen_random_tournament(std::size_t n, std::uint64_t seed);

// Tournament on m vertices that is strongly connected (m = 1 or m >= 3).
Digraph gen_random_strong_tournament(std::size_t m, std::uint64_t seed);

struct GeneratedLocalTournament {
  Digraph graph;
  Digraph quotient;                // round, simple, in generation order
  std::vector<VertexList> blocks;  // vertex sets of the blocks, in quotient order
  bool canonical = false;          // quotient is acyclic with forward arcs only
};

// Blow-up of a random round quotient by random strong tournaments with
// sizes 1 or 3..5 summing to n_target, under a random relabelling. The
// quotient has at least two blocks and the result is a connected local
// tournament.
GeneratedLocalTournament gen_random_local_tournament(std::size_t n_target, std::uint64_t seed);

// A random local tournament with extra arcs added one at a time whenever
// every in-neighbourhood stays semicomplete. Connected.
Digraph gen_random_in_semicomplete(std::size_t n_target, std::uint64_t seed);

struct DigraphFilter {
  bool connected = false;
  bool strong = false;
  bool twin_free = false;
  bool quasi_twin_free = false;

  // "none" or '+'-joined names from connected, strong, twin-free,
  // quasi-twin-free.
  static DigraphFilter parse(const std::string& text);
  bool accepts(const Digraph& d) const;
};

inline constexpr std::size_t kGenerationRetries = 100000;

// Each ordered pair becomes an arc with probability p; resampled until the
// filter accepts. Throws GenerationError when retries run out.
Digraph gen_random_digraph(std::size_t n, double p, std::uint64_t seed, const DigraphFilter& filter = {},
                           std::size_t retries = kGenerationRetries);

}  // namespace ldsets
