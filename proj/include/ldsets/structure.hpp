#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ldsets/digraph.hpp"

namespace ldsets {

struct Classification {
  bool simple = false;
  bool tournament = false;
  bool local_tournament = false;
  bool locally_in_semicomplete = false;
  bool locally_out_semicomplete = false;
};

Classification classify(const Digraph& d);

// Every pair of distinct vertices joined by exactly one arc.
bool is_tournament(const Digraph& d);

struct TwinReport {
  std::vector<Arc> open_twins;    // N-(x) = N-(y)
  std::vector<Arc> closed_twins;  // N-[x] = N-[y]
  std::vector<Arc> quasi_twins;   // N-(x) = N-[y] or N-(y) = N-[x]

  bool twin_free() const { return open_twins.empty() && closed_twins.empty(); }
  bool quasi_twin_free() const { return twin_free() && quasi_twins.empty(); }
};

// Pairs are reported as (x, y) with x < y, lexicographically sorted.
TwinReport twin_report(const Digraph& d);

bool are_quasi_twins(const Digraph& d, Vertex x, Vertex y);

// True iff `order` is a circular labelling in which every in- and
// out-neighbourhood is a run of consecutive positions ending just before /
// starting just after the vertex. Throws InputError if `order` is not a
// permutation of the vertices.
bool is_round_labelling(const Digraph& d, std::span<const Vertex> order);

struct RoundDecomposition {
  std::vector<VertexList> blocks;  // T_1..T_r, each sorted
  Digraph quotient;                // arc (i, j) iff T_i => T_j
  bool canonical = false;          // non-strong input, arcs only go forward
  Vertex rotation_anchor = 0;      // block 0 contains this vertex

  std::size_t size() const { return blocks.size(); }
  // block_of[v] = index of the block holding v.
  std::vector<std::size_t> block_index(std::size_t n) const;
};

// Round decomposition of a connected local tournament that is not a
// tournament. Non-strong inputs get the canonical decomposition; strong
// inputs get one fixed up to rotation by putting the block of vertex 0
// first. Returns nullopt when the input is not roundable.
std::optional<RoundDecomposition> round_decomposition(const Digraph& d);

// Checks the structural invariants of a decomposition against `d`: blocks
// partition V and induce strong tournaments, inter-block arcs are all or
// none and match the quotient, the quotient is simple and round in block
// order, and a canonical decomposition only has forward arcs.
bool is_valid_round_decomposition(const Digraph& d, const RoundDecomposition& dec);

// Decomposition with the given block order; the quotient is read off `d`.
// Does not validate; pair with is_valid_round_decomposition.
RoundDecomposition decomposition_from_blocks(const Digraph& d, std::vector<VertexList> blocks, bool canonical);

// The smallest inclusion-minimal vertex set whose removal leaves a
// non-strong digraph, lexicographically first among those of minimum size.
// Requires d strong with n >= 3.
VertexList minimal_separator(const Digraph& d);

// All inclusion-minimal separators in (size, lexicographic) order, stopping
// after `limit` results or once sets larger than `max_size` would be needed.
std::vector<VertexList> minimal_separators(const Digraph& d, std::size_t limit,
                                           std::size_t max_size);

// `removed` separates d and no proper subset of it does.
bool is_minimal_separator(const Digraph& d, std::span<const Vertex> removed);

// d minus `removed` is not strongly connected (an empty remainder counts as
// strong, so nothing separates a complete digraph).
bool separates(const Digraph& d, std::span<const Vertex> removed);

// Visits every k-subset of 0..n-1 in lexicographic order. The visitor
// returns false to stop early; the function returns false if stopped.
template <typename Visitor>
bool for_each_combination(std::size_t n, std::size_t k, Visitor&& visit) {
  if (k > n) return true;
  VertexList combo(k);
  for (std::size_t i = 0; i < k; ++i) combo[i] = static_cast<Vertex>(i);
  while (true) {
    if (!visit(static_cast<const VertexList&>(combo))) return false;
    std::size_t i = k;
    while (i > 0 && combo[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++combo[i - 1];
    for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
}

}  // namespace ldsets
