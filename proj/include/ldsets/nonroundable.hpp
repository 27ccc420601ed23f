#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ldsets/digraph.hpp"
#include "ldsets/ld_core.hpp"
#include "ldsets/structure.hpp"

namespace ldsets {

// Split of a strong non-roundable local tournament around a minimal
// separator X. All vertex ids are original ids.
struct SeparatorDecomposition {
  VertexList separator;             // X
  VertexList rest;                  // Y = V \ X
  VertexList front;                 // Z = Y \ T_r
  std::vector<VertexList> blocks;   // canonical blocks T_1..T_r of D[Y]
  int case_id = 0;                  // 1..4 from |T_r| == 1 and |X| == 1

  const VertexList& last_block() const { return blocks.back(); }
};

// Checks every structural requirement on X and returns the reason for the
// first failure, or the decomposition when all hold:
//  - D - X is not strong, and X is inclusion-minimal for that;
//  - D - X is a connected local tournament that is not a tournament;
//  - D[X] is a tournament;
//  - the canonical decomposition T_1..T_r of D - X has r >= 3, with every
//    arc from V(T_r) to X and from X to V(T_1).
struct SeparatorCheck {
  std::optional<SeparatorDecomposition> decomposition;
  std::string failure;
};
SeparatorCheck check_separator(const Digraph& d, const VertexList& separator);

// First minimal separator, by size then lexicographically, that passes
// check_separator. Requires a strong connected local tournament that is
// neither a tournament nor roundable.
SeparatorDecomposition separator_decomposition(const Digraph& d);

// Uses the given X and skips the non-roundability guard. Throws
// StructuralError when X fails a requirement.
SeparatorDecomposition separator_decomposition_with(const Digraph& d, const VertexList& separator);

// Assembles the locating-dominating set for the decomposition's case.
CertifiedSet combine_cases(const Digraph& d, const SeparatorDecomposition& sdec,
                           const SolveOptions& options = {});

// Any connected local tournament: tournament, roundable or neither.
CertifiedSet solve_local_tournament(const Digraph& d, const SolveOptions& options = {});

}  // namespace ldsets
