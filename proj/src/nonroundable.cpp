#include "ldsets/nonroundable.hpp"

#include <algorithm>
#include <string>

#include "ldsets/error.hpp"
#include "ldsets/roundable.hpp"

namespace ldsets {

namespace {

// Blocks in original ids -> blocks in the local ids of `sub`.
std::vector<VertexList> localize(const InducedSubgraph& sub, const std::vector<VertexList>& blocks) {
  std::vector<VertexList> local;
  for (const auto& block : blocks) {
    VertexList mapped;
    for (Vertex v : block) {
      mapped.push_back(static_cast<Vertex>(std::lower_bound(sub.ids.begin(), sub.ids.end(), v) - sub.ids.begin()));
    }
    local.push_back(std::move(mapped));
  }
  return local;
}

// The set S built by the roundable construction on D[union of blocks], with
// the given canonical block order, in original ids.
VertexList roundable_set_on(const Digraph& d, const std::vector<VertexList>& blocks,
                            const SolveOptions& options) {
  VertexList vertices;
  for (const auto& block : blocks) vertices.insert(vertices.end(), block.begin(), block.end());
  const auto sub = induced(d, vertices);
  const auto dec = decomposition_from_blocks(sub.graph, localize(sub, blocks), true);
  if (dec.size() < 2 || is_strong(sub.graph) || !is_valid_round_decomposition(sub.graph, dec)) {
    throw InternalInconsistency("sub-instance lacks a non-strong canonical decomposition with two or more blocks");
  }
  const auto seg = segment(dec);
  const auto trace = construct_set(sub.graph, dec, seg, options);
  return map_ids(trace.set, sub.ids);
}

void require_connected_local_tournament(const Digraph& d) {
  if (d.order() == 0) throw InputError("input is empty");
  if (!classify(d).local_tournament) throw InputError("input is not a local tournament");
  if (!is_connected(d)) throw InputError("input is not connected");
}

}  // namespace

SeparatorCheck check_separator(const Digraph& d, const VertexList& separator) {
  SeparatorCheck check;
  auto reject = [&](std::string why) {
    check.failure = std::move(why);
    return check;
  };
  if (separator.empty()) return reject("separator is empty");
  if (!separates(d, separator)) return reject("removing X leaves a strong digraph");
  if (!is_minimal_separator(d, separator)) return reject("X is not inclusion-minimal");

  const auto rest = complement(d.order(), separator);
  const auto y = induced(d, rest);
  const auto y_class = classify(y.graph);
  if (!is_connected(y.graph)) return reject("D - X is not connected");
  if (!y_class.local_tournament) return reject("D - X is not a local tournament");
  if (y_class.tournament) return reject("D - X is a tournament");
  if (!is_tournament(induced(d, separator).graph)) return reject("D[X] is not a tournament");

  const auto dec = round_decomposition(y.graph);
  if (!dec || !dec->canonical) return reject("D - X has no canonical round decomposition");
  if (dec->size() < 3) return reject("canonical decomposition of D - X has fewer than 3 blocks");

  SeparatorDecomposition sdec;
  sdec.separator = separator;
  sdec.rest = rest;
  for (const auto& block : dec->blocks) sdec.blocks.push_back(map_ids(block, y.ids));
  for (Vertex t : sdec.last_block()) {
    for (Vertex x : separator) {
      if (!d.has_arc(t, x)) return reject("missing arc from the last block into X");
    }
  }
  for (Vertex x : separator) {
    for (Vertex t : sdec.blocks.front()) {
      if (!d.has_arc(x, t)) return reject("missing arc from X into the first block");
    }
  }
  sdec.front = set_difference(rest, sdec.last_block());
  const bool single_last = sdec.last_block().size() == 1;
  const bool single_separator = separator.size() == 1;
  sdec.case_id = single_last ? (single_separator ? 1 : 2) : (single_separator ? 3 : 4);
  check.decomposition = std::move(sdec);
  return check;
}

SeparatorDecomposition separator_decomposition_with(const Digraph& d, const VertexList& separator) {
  VertexList sorted = separator;
  std::sort(sorted.begin(), sorted.end());
  auto check = check_separator(d, sorted);
  if (!check.decomposition) throw StructuralError("separator rejected: " + check.failure);
  return std::move(*check.decomposition);
}

SeparatorDecomposition separator_decomposition(const Digraph& d) {
  require_connected_local_tournament(d);
  if (is_tournament(d)) throw InputError("input is a tournament");
  if (!is_strong(d)) throw InputError("input is not strong, hence roundable");
  if (round_decomposition(d)) throw InputError("input is roundable");

  const std::size_t n = d.order();
  std::optional<SeparatorDecomposition> found;
  std::string last_failure = "no minimal separator exists";
  for (std::size_t k = 1; k + 2 <= n && !found; ++k) {
    for_each_combination(n, k, [&](const VertexList& candidate) {
      if (!is_minimal_separator(d, candidate)) return true;
      auto check = check_separator(d, candidate);
      if (!check.decomposition) {
        last_failure = check.failure;
        return true;
      }
      found = std::move(check.decomposition);
      return false;
    });
  }
  if (!found) throw StructuralError("no separator with the required structure: " + last_failure);
  return std::move(*found);
}

CertifiedSet combine_cases(const Digraph& d, const SeparatorDecomposition& sdec, const SolveOptions& options) {
  const auto& x = sdec.separator;
  const auto& last = sdec.last_block();
  VertexList result;
  switch (sdec.case_id) {
    case 1: {
      const auto z = induced(d, sdec.front);
      const auto front_set = solve_local_tournament(z.graph, options);
      result = set_union(last, map_ids(front_set.vertices, z.ids));
      break;
    }
    case 2: {
      const std::vector<VertexList> front_blocks(sdec.blocks.begin(), sdec.blocks.end() - 1);
      const auto s2 = roundable_set_on(d, front_blocks, options);
      const auto xs = induced(d, x);
      const auto locating = tournament_locating_set(xs.graph, options.exact_cutoff);
      result = set_union(set_union(last, s2), map_ids(locating.vertices, xs.ids));
      break;
    }
    case 3: {
      result = set_union(roundable_set_on(d, sdec.blocks, options), x);
      break;
    }
    case 4: {
      const auto s1 = roundable_set_on(d, sdec.blocks, options);
      const auto xs = induced(d, x);
      const auto ld = tournament_ld_set(xs.graph, options.exact_cutoff);
      result = set_union(s1, map_ids(ld.vertices, xs.ids));
      break;
    }
    default:
      throw InputError("separator decomposition has no valid case");
  }
  CertifiedSet certified;
  certified.vertices = std::move(result);
  certified.kind = SetKind::LocatingDominating;
  certified.claimed_bound = ceil_half(d.order());
  certified.trace_tag = "nonroundable-case-" + std::to_string(sdec.case_id);
  if (!verify(d, certified)) {
    throw InternalInconsistency("case " + std::to_string(sdec.case_id) + " set failed verification");
  }
  return certified;
}

CertifiedSet solve_local_tournament(const Digraph& d, const SolveOptions& options) {
  require_connected_local_tournament(d);
  if (is_tournament(d)) return tournament_ld_set(d, options.exact_cutoff);
  if (auto dec = round_decomposition(d)) return solve_roundable_with(d, *dec, options).ld_set;
  return combine_cases(d, separator_decomposition(d), options);
}

}  // namespace ldsets
