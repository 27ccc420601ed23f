#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ldsets/digraph.hpp"
#include "ldsets/ld_core.hpp"
#include "ldsets/structure.hpp"

namespace ldsets {

// Split of the block sequence T_1..T_r into consecutive runs D_1..D_t, each
// inducing a tournament. Block and segment numbers are 1-based as in the
// usual notation; vectors are 0-based.
struct Segmentation {
  std::vector<std::size_t> indices;       // i_0 = 0 < i_1 < ... < i_t = r
  std::vector<VertexList> segments;       // segments[k-1] = V(D_k), sorted
  std::vector<std::size_t> suffix_sizes;  // suffix_sizes[k-1] = |D_k| + ... + |D_t|

  std::size_t count() const { return segments.size(); }
  // 1-based numbers of the first and last block of D_k.
  std::size_t first_block(std::size_t k) const { return indices[k - 1] + 1; }
  std::size_t last_block(std::size_t k) const { return indices[k]; }
};

// Throws InternalInconsistency if some T_i => T_{i+1} is missing.
Segmentation segment(const RoundDecomposition& dec);

struct ConstructionStep {
  std::size_t k = 0;
  int case_id = 0;                 // 1, 2 or 3
  VertexList added;                // original ids
  bool assumed_dominating = false;
  std::optional<Vertex> pivot;     // case 2 only
  // Case 2 with |D'_k| odd: whether the added set dominated D_k anyway.
  std::optional<bool> odd_remainder_dominated;
};

struct ConstructionTrace {
  std::vector<ConstructionStep> steps;  // execution order, k = t down to 1
  VertexList set;                       // S
  std::optional<Vertex> augmentation;   // z
  VertexList augmented;                 // S+

  const ConstructionStep& step(std::size_t k) const { return steps[steps.size() - k]; }
};

// Backwards case-driven assembly of S over the segments.
ConstructionTrace construct_set(const Digraph& d, const RoundDecomposition& dec, const Segmentation& seg,
                                const SolveOptions& options = {});

// Adds the unique vertex of D_1 left undominated by S, if any. Fills in
// trace.augmentation / trace.augmented and returns the certified S+.
CertifiedSet augment_set(const Digraph& d, const RoundDecomposition& dec, const Segmentation& seg,
                         ConstructionTrace& trace);

struct RoundableSolution {
  RoundDecomposition decomposition;
  Segmentation segmentation;
  ConstructionTrace trace;
  CertifiedSet ld_set;                       // S+, at most ceil(n/2)
  std::optional<CertifiedSet> locating_set;  // S, only for non-strong input
};

// Same pipeline against a decomposition the caller already has.
RoundableSolution solve_roundable_with(const Digraph& d, const RoundDecomposition& dec,
                                       const SolveOptions& options = {});

// Connected roundable local tournament that is not a tournament.
RoundableSolution solve_roundable(const Digraph& d, const SolveOptions& options = {});

// Re-derives every intermediate guarantee of the construction from the raw
// digraph and lists the ones that fail. Empty means all held.
std::vector<std::string> audit_construction(const Digraph& d, const RoundableSolution& solution);

}  // namespace ldsets
