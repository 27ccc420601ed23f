#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ldsets/digraph.hpp"

namespace ldsets {

struct SetReport {
  VertexList undominated;        // outside S with no in-neighbour in S
  std::vector<Arc> unlocated_pairs;  // (x, y), x < y, equal S-in-neighbourhoods
  bool dominating = false;
  bool locating = false;
  bool ld = false;
};

SetReport evaluate_set(const Digraph& d, std::span<const Vertex> set);

bool is_locating_dominating(const Digraph& d, std::span<const Vertex> set);

// Partition of V \ S by S-in-neighbourhood signature.
struct SPartition {
  std::map<VertexList, VertexList> parts;  // signature -> members
  std::size_t singleton_parts = 0;         // parts of size 1
  std::size_t large_parts = 0;             // parts of size >= 2

  std::size_t part_count() const { return parts.size(); }
};

SPartition s_partition(const Digraph& d, std::span<const Vertex> set);

enum class SetKind { Locating, LocatingDominating, Dominating };

const char* to_string(SetKind kind);

struct CertifiedSet {
  VertexList vertices;
  SetKind kind = SetKind::LocatingDominating;
  std::size_t claimed_bound = 0;
  bool verified = false;
  std::string trace_tag;

  std::size_t size() const { return vertices.size(); }
};

// Re-checks `set` against its kind and bound and records the outcome.
bool verify(const Digraph& d, CertifiedSet& set);

inline constexpr std::size_t kDefaultCutoff = 20;
// Exhaustive search works on 64-bit vertex masks.
inline constexpr std::size_t kMaxCutoff = 64;

// Minimum set of the given kind, smallest-cardinality first and
// lexicographically first within a cardinality. Throws InfeasibleSize if
// the order exceeds `cutoff`.
CertifiedSet exact_min_set(const Digraph& d, SetKind kind, std::size_t cutoff = kDefaultCutoff);

// Locating set of a tournament with at most floor(n/2) vertices.
CertifiedSet tournament_locating_set(const Digraph& t, std::size_t cutoff = kDefaultCutoff);

// Locating-dominating set of a tournament with at most ceil(n/2) vertices.
CertifiedSet tournament_ld_set(const Digraph& t, std::size_t cutoff = kDefaultCutoff);

// Knobs shared by the constructive solvers.
struct SolveOptions {
  // Order cutoff for the exhaustive tournament subroutines.
  std::size_t exact_cutoff = kDefaultCutoff;
};

inline std::size_t floor_half(std::size_t n) { return n / 2; }
inline std::size_t ceil_half(std::size_t n) { return (n + 1) / 2; }

}  // namespace ldsets
