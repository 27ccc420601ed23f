#include "ldsets/roundable.hpp"

#include <algorithm>
#include <sstream>

#include "ldsets/error.hpp"

namespace ldsets {

namespace {

// Vertices of D_k (given as `segment`) not in `set` and without an
// in-neighbour in set ∩ segment.
VertexList undominated_within(const Digraph& d, const VertexList& segment, const VertexList& set) {
  const auto in_segment = membership(d.order(), segment);
  const auto in_set = membership(d.order(), set);
  VertexList result;
  for (Vertex v : segment) {
    if (in_set[v]) continue;
    const bool dominated = std::any_of(d.in(v).begin(), d.in(v).end(),
                                       [&](Vertex u) { return in_segment[u] && in_set[u]; });
    if (!dominated) result.push_back(v);
  }
  return result;
}

VertexList restrict_to(const VertexList& set, const VertexList& within) {
  VertexList result;
  std::set_intersection(set.begin(), set.end(), within.begin(), within.end(), std::back_inserter(result));
  return result;
}

// A locating (or locating-dominating) set of the tournament induced by
// `vertices`, in original ids.
VertexList tournament_part(const Digraph& d, const VertexList& vertices, bool dominating,
                           const SolveOptions& options) {
  const auto sub = induced(d, vertices);
  const auto part = dominating ? tournament_ld_set(sub.graph, options.exact_cutoff)
                               : tournament_locating_set(sub.graph, options.exact_cutoff);
  return map_ids(part.vertices, sub.ids);
}

}  // namespace

Segmentation segment(const RoundDecomposition& dec) {
  const std::size_t r = dec.size();
  if (r < 2) throw InputError("round decomposition needs at least two blocks");
  const auto& q = dec.quotient;
  for (std::size_t i = 0; i + 1 < r; ++i) {
    if (!q.has_arc(static_cast<Vertex>(i), static_cast<Vertex>(i + 1))) {
      throw InternalInconsistency("consecutive blocks " + std::to_string(i + 1) + " and " +
                                  std::to_string(i + 2) + " are not joined forwards");
    }
  }
  Segmentation seg;
  seg.indices.push_back(0);
  while (seg.indices.back() < r) {
    const std::size_t first = seg.indices.back() + 1;  // 1-based block opening the segment
    std::size_t last = first;
    for (std::size_t j = first + 1; j <= r; ++j) {
      if (q.has_arc(static_cast<Vertex>(first - 1), static_cast<Vertex>(j - 1))) last = j;
    }
    seg.indices.push_back(last);
    VertexList members;
    for (std::size_t b = first; b <= last; ++b) {
      members.insert(members.end(), dec.blocks[b - 1].begin(), dec.blocks[b - 1].end());
    }
    std::sort(members.begin(), members.end());
    seg.segments.push_back(std::move(members));
  }
  seg.suffix_sizes.assign(seg.count(), 0);
  std::size_t running = 0;
  for (std::size_t k = seg.count(); k >= 1; --k) {
    running += seg.segments[k - 1].size();
    seg.suffix_sizes[k - 1] = running;
  }
  return seg;
}

ConstructionTrace construct_set(const Digraph& d, const RoundDecomposition& dec, const Segmentation& seg,
                                const SolveOptions& options) {
  const std::size_t t = seg.count();
  ConstructionTrace trace;
  bool next_dominating = false;  // assumed-dominating flag of step k+1
  for (std::size_t k = t; k >= 1; --k) {
    const auto& segment_k = seg.segments[k - 1];
    const auto& closing_block = dec.blocks[seg.last_block(k) - 1];
    ConstructionStep step;
    step.k = k;
    if (k == t || next_dominating) {
      step.case_id = 1;
      const bool even = segment_k.size() % 2 == 0;
      step.added = tournament_part(d, segment_k, even, options);
      step.assumed_dominating = even;
    } else if (closing_block.size() == 1) {
      step.case_id = 2;
      const Vertex pivot = closing_block.front();
      step.pivot = pivot;
      const VertexList rest = set_difference(segment_k, VertexList{pivot});
      const bool even = rest.size() % 2 == 0;
      step.added = set_union(tournament_part(d, rest, even, options), VertexList{pivot});
      step.assumed_dominating = even;
      if (!even) step.odd_remainder_dominated = undominated_within(d, segment_k, step.added).empty();
    } else {
      step.case_id = 3;
      step.added = tournament_part(d, segment_k, true, options);
      step.assumed_dominating = true;
    }
    next_dominating = step.assumed_dominating;
    trace.set = set_union(trace.set, step.added);
    trace.steps.push_back(std::move(step));
  }
  trace.augmented = trace.set;
  return trace;
}

CertifiedSet augment_set(const Digraph& d, const RoundDecomposition& dec, const Segmentation& seg,
                         ConstructionTrace& trace) {
  const auto& first_segment = seg.segments.front();
  const auto missing = undominated_within(d, first_segment, restrict_to(trace.set, first_segment));
  trace.augmentation.reset();
  trace.augmented = trace.set;
  if (missing.size() > 1) {
    throw InternalInconsistency(std::to_string(missing.size()) +
                                " vertices of the first segment are undominated; at most one expected");
  }
  if (missing.size() == 1) {
    const Vertex z = missing.front();
    const auto& first_block = dec.blocks.front();
    if (!std::binary_search(first_block.begin(), first_block.end(), z)) {
      throw InternalInconsistency("undominated vertex " + std::to_string(z) + " is not in the first block");
    }
    trace.augmentation = z;
    trace.augmented = set_union(trace.set, VertexList{z});
  }
  CertifiedSet result;
  result.vertices = trace.augmented;
  result.kind = SetKind::LocatingDominating;
  result.claimed_bound = ceil_half(d.order());
  result.trace_tag = "roundable";
  if (!verify(d, result)) {
    throw InternalInconsistency("augmented set failed verification on a roundable instance");
  }
  return result;
}

RoundableSolution solve_roundable_with(const Digraph& d, const RoundDecomposition& dec,
                                       const SolveOptions& options) {
  RoundableSolution solution;
  solution.decomposition = dec;
  solution.segmentation = segment(dec);
  solution.trace = construct_set(d, dec, solution.segmentation, options);
  solution.ld_set = augment_set(d, dec, solution.segmentation, solution.trace);
  if (dec.canonical) {
    CertifiedSet locating;
    locating.vertices = solution.trace.set;
    locating.kind = SetKind::Locating;
    locating.claimed_bound = floor_half(d.order());
    locating.trace_tag = "roundable-locating";
    if (!verify(d, locating)) {
      throw InternalInconsistency("S failed to be a locating set of a non-strong roundable instance");
    }
    solution.locating_set = std::move(locating);
  }
  return solution;
}

RoundableSolution solve_roundable(const Digraph& d, const SolveOptions& options) {
  auto dec = round_decomposition(d);
  if (!dec) throw InputError("input is not roundable");
  return solve_roundable_with(d, *dec, options);
}

std::vector<std::string> audit_construction(const Digraph& d, const RoundableSolution& solution) {
  std::vector<std::string> violations;
  auto fail = [&](auto&&... parts) {
    std::ostringstream out;
    (out << ... << parts);
    violations.push_back(out.str());
  };
  const auto& dec = solution.decomposition;
  const auto& seg = solution.segmentation;
  const auto& trace = solution.trace;
  const auto& set = trace.set;
  const std::size_t t = seg.count();

  for (std::size_t i = 0; i + 1 < dec.size(); ++i) {
    if (!dec.quotient.has_arc(static_cast<Vertex>(i), static_cast<Vertex>(i + 1))) {
      fail("block ", i + 1, " does not dominate block ", i + 2);
    }
  }

  for (std::size_t k = 1; k <= t; ++k) {
    const auto& segment_k = seg.segments[k - 1];
    const auto sub = induced(d, segment_k);
    if (!is_tournament(sub.graph)) fail("segment ", k, " is not a tournament");

    const auto& step = trace.step(k);
    VertexList local_added;
    for (Vertex v : step.added) {
      local_added.push_back(static_cast<Vertex>(
          std::lower_bound(sub.ids.begin(), sub.ids.end(), v) - sub.ids.begin()));
    }
    if (!evaluate_set(sub.graph, local_added).locating) fail("step ", k, " added a non-locating set");

    std::size_t suffix_count = 0;
    for (std::size_t j = k; j <= t; ++j) suffix_count += restrict_to(set, seg.segments[j - 1]).size();
    if (suffix_count > floor_half(seg.suffix_sizes[k - 1])) {
      fail("suffix from segment ", k, " holds ", suffix_count, " > floor(", seg.suffix_sizes[k - 1], "/2)");
    }

    const auto missing = undominated_within(d, segment_k, restrict_to(set, segment_k));
    if (step.assumed_dominating && !missing.empty()) fail("segment ", k, " assumed dominated but is not");
    if (!missing.empty()) {
      const auto& opening = dec.blocks[seg.first_block(k) - 1];
      if (missing.size() != 1 || !std::binary_search(opening.begin(), opening.end(), missing.front())) {
        fail("segment ", k, " leaves undominated vertices outside its opening block");
      }
    }
  }

  for (std::size_t i = 0; i < dec.size(); ++i) {
    const auto& block = dec.blocks[i];
    const auto inside = restrict_to(set, block);
    const auto sub = induced(d, block);
    VertexList local;
    for (Vertex v : inside) {
      local.push_back(static_cast<Vertex>(std::lower_bound(sub.ids.begin(), sub.ids.end(), v) - sub.ids.begin()));
    }
    if (!evaluate_set(sub.graph, local).locating) fail("S does not locate block ", i + 1);
    if (block.size() >= 2 && inside.empty()) fail("S misses block ", i + 1, " of size ", block.size());
  }

  const auto report = evaluate_set(d, set);
  if (report.undominated.size() > 1) fail(report.undominated.size(), " vertices undominated by S");
  if (report.undominated.size() == 1 &&
      !std::binary_search(dec.blocks.front().begin(), dec.blocks.front().end(), report.undominated.front())) {
    fail("vertex undominated by S lies outside the first block");
  }
  if (set.size() > floor_half(d.order())) fail("|S| exceeds floor(n/2)");

  const auto& plus = trace.augmented;
  if (!is_locating_dominating(d, plus)) fail("S+ is not locating-dominating");
  if (plus.size() > ceil_half(d.order())) fail("|S+| exceeds ceil(n/2)");
  if (dec.canonical && !report.locating) fail("S is not locating on a non-strong instance");
  return violations;
}

}  // namespace ldsets
