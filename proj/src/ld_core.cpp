#include "ldsets/ld_core.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "ldsets/error.hpp"
#include "ldsets/structure.hpp"

namespace ldsets {

namespace {

VertexList signature(const Digraph& d, Vertex v, const std::vector<char>& inside) {
  VertexList sig;
  for (Vertex u : d.in(v)) {
    if (inside[u]) sig.push_back(u);
  }
  return sig;
}

bool mask_satisfies(std::span<const std::uint64_t> in_mask, std::uint64_t set, SetKind kind,
                    std::vector<std::uint64_t>& scratch) {
  const bool need_domination = kind != SetKind::Locating;
  const bool need_location = kind != SetKind::Dominating;
  scratch.clear();
  for (std::size_t v = 0; v < in_mask.size(); ++v) {
    if ((set >> v) & 1U) continue;
    const std::uint64_t sig = in_mask[v] & set;
    if (need_domination && sig == 0) return false;
    if (need_location) scratch.push_back(sig);
  }
  if (!need_location) return true;
  std::sort(scratch.begin(), scratch.end());
  return std::adjacent_find(scratch.begin(), scratch.end()) == scratch.end();
}

}  // namespace

const char* to_string(SetKind kind) {
  switch (kind) {
    case SetKind::Locating: return "locating";
    case SetKind::LocatingDominating: return "locating-dominating";
    case SetKind::Dominating: return "dominating";
  }
  return "unknown";
}

SetReport evaluate_set(const Digraph& d, std::span<const Vertex> set) {
  const auto inside = membership(d.order(), set);
  SetReport report;
  std::map<VertexList, VertexList> groups;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (inside[v]) continue;
    auto sig = signature(d, v, inside);
    if (sig.empty()) report.undominated.push_back(v);
    groups[std::move(sig)].push_back(v);
  }
  for (const auto& [sig, members] : groups) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        report.unlocated_pairs.emplace_back(members[i], members[j]);
      }
    }
  }
  std::sort(report.unlocated_pairs.begin(), report.unlocated_pairs.end());
  report.dominating = report.undominated.empty();
  report.locating = report.unlocated_pairs.empty();
  report.ld = report.dominating && report.locating;
  return report;
}

bool is_locating_dominating(const Digraph& d, std::span<const Vertex> set) {
  return evaluate_set(d, set).ld;
}

SPartition s_partition(const Digraph& d, std::span<const Vertex> set) {
  const auto inside = membership(d.order(), set);
  SPartition partition;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (!inside[v]) partition.parts[signature(d, v, inside)].push_back(v);
  }
  for (const auto& [sig, members] : partition.parts) {
    if (members.size() == 1) {
      ++partition.singleton_parts;
    } else {
      ++partition.large_parts;
    }
  }
  return partition;
}

bool verify(const Digraph& d, CertifiedSet& set) {
  const auto report = evaluate_set(d, set.vertices);
  bool ok = set.vertices.size() <= set.claimed_bound;
  switch (set.kind) {
    case SetKind::Locating: ok = ok && report.locating; break;
    case SetKind::LocatingDominating: ok = ok && report.ld; break;
    case SetKind::Dominating: ok = ok && report.dominating; break;
  }
  set.verified = ok;
  return ok;
}

CertifiedSet exact_min_set(const Digraph& d, SetKind kind, std::size_t cutoff) {
  const std::size_t n = d.order();
  cutoff = std::min(cutoff, kMaxCutoff);
  if (n > cutoff) {
    throw InfeasibleSize("exhaustive search limited to order " + std::to_string(cutoff) +
                         ", got " + std::to_string(n));
  }
  std::vector<std::uint64_t> in_mask(n, 0);
  for (const auto& [u, v] : d.arcs()) in_mask[v] |= std::uint64_t{1} << u;

  std::vector<std::uint64_t> scratch;
  scratch.reserve(n);
  VertexList best;
  bool found = false;
  for (std::size_t k = 0; k <= n && !found; ++k) {
    for_each_combination(n, k, [&](const VertexList& combo) {
      std::uint64_t set = 0;
      for (Vertex v : combo) set |= std::uint64_t{1} << v;
      if (!mask_satisfies(in_mask, set, kind, scratch)) return true;
      best = combo;
      found = true;
      return false;
    });
  }
  CertifiedSet result;
  result.vertices = std::move(best);
  result.kind = kind;
  result.claimed_bound = result.vertices.size();
  result.trace_tag = std::string("exact-") + to_string(kind);
  verify(d, result);
  return result;
}

namespace {

CertifiedSet tournament_set(const Digraph& t, SetKind kind, std::size_t bound, std::size_t cutoff,
                            const char* tag) {
  if (!is_tournament(t)) throw InputError("input is not a tournament");
  auto result = exact_min_set(t, kind, cutoff);
  result.claimed_bound = bound;
  result.trace_tag = tag;
  if (!verify(t, result)) {
    throw InternalInconsistency(std::string("tournament ") + to_string(kind) + " set of size " +
                                std::to_string(result.size()) + " exceeds bound " + std::to_string(bound));
  }
  return result;
}

}  // namespace

CertifiedSet tournament_locating_set(const Digraph& t, std::size_t cutoff) {
  return tournament_set(t, SetKind::Locating, floor_half(t.order()), cutoff, "tournament-locating");
}

CertifiedSet tournament_ld_set(const Digraph& t, std::size_t cutoff) {
  return tournament_set(t, SetKind::LocatingDominating, ceil_half(t.order()), cutoff, "tournament");
}

}  // namespace ldsets
