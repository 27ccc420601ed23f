#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ldsets/digraph.hpp"
#include "ldsets/ld_core.hpp"

namespace ldsets {

// Smallest id of the unique source strong component, provided that
// component reaches every vertex. nullopt otherwise (including n = 0).
std::optional<Vertex> find_supervising_vertex(const Digraph& d);

struct LayeredSet {
  Layering layering;
  VertexList set;
  // Each vertex chosen at some layer step -> a vertex of the next layer whose
  // only in-neighbour among that step's choices is the key.
  std::map<Vertex, Vertex> witnesses;
  bool source_added = false;
};

// Dominating set S built backwards over the BFS layers from `s`, with
// |P_S| >= |S| - 1. A single vertex yields {s}.
LayeredSet layered_dominating_set(const Digraph& d, Vertex s);

// Grows a dominating S (with |P_S| >= |S| - 1) by trying vertices in
// ascending id, restarting after each addition, until no vertex can be
// added without breaking the inequality.
VertexList maximal_augment(const Digraph& d, const VertexList& set);

struct LemmaEightTrace {
  VertexList augmented;
  SPartition partition;
  VertexList x1;                  // S plus all singleton parts
  std::vector<Arc> quasi_pairs;   // unlocated pairs outside x1
  VertexList x1_prime;            // x1 plus the smaller id of each pair
  VertexList x2;                  // V minus the smallest id of each part
  std::string chosen;             // "S", "X1'" or "X2"
};

struct LemmaEightResult {
  CertifiedSet set;
  LemmaEightTrace trace;
};

// floor(2n/3) for quasi-twin-free d, floor(3n/4) for twin-free d, 1 when
// n = 1. Throws HypothesisError if d has twins.
std::size_t supervising_bound(const Digraph& d);

// LD set derived from a maximal S. Requires d twin-free.
LemmaEightResult lemma8_ld(const Digraph& d, const VertexList& set);

struct SupervisingSolution {
  Vertex source = 0;
  LayeredSet layered;
  LemmaEightResult result;
};

SupervisingSolution solve_supervising_traced(const Digraph& d);

// Twin-free digraph with a supervising vertex.
CertifiedSet solve_supervising(const Digraph& d);

}  // namespace ldsets
