#include "ldsets/supervising.hpp"

#include <algorithm>

#include "ldsets/error.hpp"
#include "ldsets/structure.hpp"

namespace ldsets {

namespace {

bool partition_inequality(const Digraph& d, const VertexList& set) {
  return s_partition(d, set).part_count() + 1 >= set.size();
}

// Inclusion-minimal subset of `layer` dominating `target`, plus one witness
// per chosen vertex.
std::pair<VertexList, std::map<Vertex, Vertex>> minimal_layer_cover(const Digraph& d, const VertexList& layer,
                                                                    const VertexList& target) {
  const auto in_target = membership(d.order(), target);
  VertexList chosen;
  for (Vertex v : layer) {
    if (std::any_of(d.out(v).begin(), d.out(v).end(), [&](Vertex w) { return in_target[w]; })) {
      chosen.push_back(v);
    }
  }
  std::vector<std::size_t> cover(d.order(), 0);
  for (Vertex v : chosen) {
    for (Vertex w : d.out(v)) {
      if (in_target[w]) ++cover[w];
    }
  }
  for (Vertex t : target) {
    if (cover[t] == 0) throw InternalInconsistency("vertex " + std::to_string(t) + " has no in-neighbour in the previous layer");
  }
  VertexList kept;
  for (Vertex v : chosen) {
    const bool needed = std::any_of(d.out(v).begin(), d.out(v).end(),
                                    [&](Vertex w) { return in_target[w] && cover[w] == 1; });
    if (needed) {
      kept.push_back(v);
      continue;
    }
    for (Vertex w : d.out(v)) {
      if (in_target[w]) --cover[w];
    }
  }
  std::map<Vertex, Vertex> witnesses;
  for (Vertex v : kept) {
    for (Vertex w : d.out(v)) {
      if (in_target[w] && cover[w] == 1) {
        witnesses.emplace(v, w);
        break;
      }
    }
  }
  return {kept, witnesses};
}

}  // namespace

std::optional<Vertex> find_supervising_vertex(const Digraph& d) {
  if (d.order() == 0) return std::nullopt;
  const auto sc = strong_components(d);
  std::optional<std::size_t> source;
  for (std::size_t c = 0; c < sc.components.size(); ++c) {
    if (sc.condensation.in_degree(static_cast<Vertex>(c)) != 0) continue;
    if (source) return std::nullopt;
    source = c;
  }
  const Vertex candidate = sc.components[*source].front();
  const auto reach = reachable_from(d, candidate);
  if (std::find(reach.begin(), reach.end(), 0) != reach.end()) return std::nullopt;
  return candidate;
}

LayeredSet layered_dominating_set(const Digraph& d, Vertex s) {
  if (s >= d.order()) throw InputError("vertex " + std::to_string(s) + " out of range");
  LayeredSet result;
  result.layering = bfs_layers(d, s);
  const auto& layers = result.layering.layers;
  if (!result.layering.unreachable.empty()) {
    throw InputError("vertex " + std::to_string(s) + " is not supervising");
  }
  VertexList set;
  for (std::size_t j = result.layering.last(); j >= 1; --j) {
    const auto target = set_difference(layers[j], set);
    auto [cover, witnesses] = minimal_layer_cover(d, layers[j - 1], target);
    set = set_union(set, cover);
    result.witnesses.insert(witnesses.begin(), witnesses.end());
  }
  const auto in_set = membership(d.order(), set);
  const bool s_dominated = in_set[s] || std::any_of(d.in(s).begin(), d.in(s).end(), [&](Vertex u) { return in_set[u]; });
  if (!s_dominated) {
    set = set_union(set, VertexList{s});
    result.source_added = true;
  }
  if (!evaluate_set(d, set).dominating) throw InternalInconsistency("layered set is not dominating");
  if (!partition_inequality(d, set)) throw InternalInconsistency("layered set violates |P_S| >= |S| - 1");
  result.set = std::move(set);
  return result;
}

VertexList maximal_augment(const Digraph& d, const VertexList& set) {
  if (!evaluate_set(d, set).dominating) throw InputError("set to augment is not dominating");
  if (!partition_inequality(d, set)) throw InputError("set to augment violates |P_S| >= |S| - 1");
  VertexList current = set;
  bool grew = true;
  while (grew) {
    grew = false;
    const auto in_set = membership(d.order(), current);
    for (Vertex v = 0; v < d.order(); ++v) {
      if (in_set[v]) continue;
      auto candidate = set_union(current, VertexList{v});
      if (partition_inequality(d, candidate)) {
        current = std::move(candidate);
        grew = true;
        break;
      }
    }
  }
  return current;
}

std::size_t supervising_bound(const Digraph& d) {
  const std::size_t n = d.order();
  const auto twins = twin_report(d);
  if (!twins.twin_free()) {
    const auto& pair = twins.open_twins.empty() ? twins.closed_twins.front() : twins.open_twins.front();
    throw HypothesisError("vertices " + std::to_string(pair.first) + " and " + std::to_string(pair.second) +
                          " are twins");
  }
  if (n == 1) return 1;
  return twins.quasi_twin_free() ? 2 * n / 3 : 3 * n / 4;
}

LemmaEightResult lemma8_ld(const Digraph& d, const VertexList& set) {
  const std::size_t bound = supervising_bound(d);
  LemmaEightResult result;
  auto& trace = result.trace;
  trace.augmented = set;
  trace.partition = s_partition(d, set);
  if (!evaluate_set(d, set).dominating) throw InputError("input set is not dominating");

  VertexList chosen;
  if (trace.partition.large_parts == 0) {
    chosen = set;
    trace.chosen = "S";
  } else {
    trace.x1 = set;
    for (const auto& [signature, members] : trace.partition.parts) {
      if (members.size() == 1) trace.x1 = set_union(trace.x1, members);
    }
    trace.quasi_pairs = evaluate_set(d, trace.x1).unlocated_pairs;
    VertexList touched;
    VertexList additions;
    for (const auto& [x, y] : trace.quasi_pairs) {
      if (!are_quasi_twins(d, x, y)) {
        throw HypothesisError("vertices " + std::to_string(x) + " and " + std::to_string(y) +
                              " are unlocated outside X1 but not quasi-twins");
      }
      if (std::binary_search(touched.begin(), touched.end(), x) ||
          std::binary_search(touched.begin(), touched.end(), y)) {
        throw HypothesisError("unlocated quasi-twin pairs outside X1 overlap");
      }
      touched = set_union(touched, VertexList{x, y});
      additions.push_back(x);
    }
    std::sort(additions.begin(), additions.end());
    trace.x1_prime = set_union(trace.x1, additions);

    VertexList dropped;
    for (const auto& [signature, members] : trace.partition.parts) dropped.push_back(members.front());
    std::sort(dropped.begin(), dropped.end());
    trace.x2 = complement(d.order(), dropped);

    const bool x1_ok = is_locating_dominating(d, trace.x1_prime);
    const bool x2_ok = is_locating_dominating(d, trace.x2);
    if (x1_ok && (!x2_ok || trace.x1_prime.size() <= trace.x2.size())) {
      chosen = trace.x1_prime;
      trace.chosen = "X1'";
    } else if (x2_ok) {
      chosen = trace.x2;
      trace.chosen = "X2";
    } else {
      throw InternalInconsistency("neither X1' nor X2 is locating-dominating");
    }
  }
  result.set.vertices = std::move(chosen);
  result.set.kind = SetKind::LocatingDominating;
  result.set.claimed_bound = bound;
  result.set.trace_tag = "supervising";
  if (!verify(d, result.set)) {
    throw InternalInconsistency("supervising set of size " + std::to_string(result.set.size()) +
                                " failed verification against bound " + std::to_string(bound));
  }
  return result;
}

SupervisingSolution solve_supervising_traced(const Digraph& d) {
  if (d.order() == 0) throw InputError("input is empty");
  const auto source = find_supervising_vertex(d);
  if (!source) throw DomainError("no supervising vertex");
  supervising_bound(d);
  SupervisingSolution solution;
  solution.source = *source;
  solution.layered = layered_dominating_set(d, *source);
  solution.result = lemma8_ld(d, maximal_augment(d, solution.layered.set));
  return solution;
}

CertifiedSet solve_supervising(const Digraph& d) { return solve_supervising_traced(d).result.set; }

}  // namespace ldsets
