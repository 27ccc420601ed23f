#pragma once

#include <initializer_list>
#include <vector>

#include "ldsets/digraph.hpp"

namespace fixtures {

inline ldsets::Digraph make(std::size_t n, std::initializer_list<ldsets::Arc> arcs) {
  std::vector<ldsets::Arc> list(arcs);
  return ldsets::Digraph::build(n, list);
}

inline ldsets::Digraph cycle(std::size_t n) {
  std::vector<ldsets::Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    arcs.emplace_back(static_cast<ldsets::Vertex>(i), static_cast<ldsets::Vertex>((i + 1) % n));
  }
  return ldsets::Digraph::build(n, arcs);
}

inline ldsets::Digraph path(std::size_t n) {
  std::vector<ldsets::Arc> arcs;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    arcs.emplace_back(static_cast<ldsets::Vertex>(i), static_cast<ldsets::Vertex>(i + 1));
  }
  return ldsets::Digraph::build(n, arcs);
}

inline ldsets::Digraph transitive(std::size_t n) {
  std::vector<ldsets::Arc> arcs;
  for (ldsets::Vertex i = 0; i < n; ++i) {
    for (ldsets::Vertex j = i + 1; j < n; ++j) arcs.emplace_back(i, j);
  }
  return ldsets::Digraph::build(n, arcs);
}

inline ldsets::Digraph complete_symmetric(std::size_t n) {
  std::vector<ldsets::Arc> arcs;
  for (ldsets::Vertex i = 0; i < n; ++i) {
    for (ldsets::Vertex j = 0; j < n; ++j) {
      if (i != j) arcs.emplace_back(i, j);
    }
  }
  return ldsets::Digraph::build(n, arcs);
}

// Labelled tournament on n vertices from the bits of `code`, one per pair
// (i < j) in lexicographic order: bit set means i -> j.
inline ldsets::Digraph tournament_from_code(std::size_t n, std::uint64_t code) {
  std::vector<ldsets::Arc> arcs;
  std::size_t bit = 0;
  for (ldsets::Vertex i = 0; i < n; ++i) {
    for (ldsets::Vertex j = i + 1; j < n; ++j, ++bit) {
      arcs.push_back((code >> bit & 1) ? ldsets::Arc{i, j} : ldsets::Arc{j, i});
    }
  }
  return ldsets::Digraph::build(n, arcs);
}

}  // namespace fixtures
