#include "ldsets/digraph.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <string>

#include "ldsets/error.hpp"

namespace ldsets {

namespace {

std::uint64_t arc_key(Vertex u, Vertex v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

void require_vertex(const Digraph& d, Vertex v) {
  if (v >= d.order()) {
    throw InputError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(d.order()));
  }
}

}  // namespace

Digraph::Digraph(std::size_t n) : out_(n), in_(n) { index_arcs(); }

Digraph Digraph::build(std::size_t n, std::span<const Arc> arcs) {
  Digraph d(n);
  for (const auto& [u, v] : arcs) {
    if (u >= n || v >= n) {
      throw InputError("arc (" + std::to_string(u) + "," + std::to_string(v) +
                       ") references a vertex outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    d.out_[u].push_back(v);
    d.in_[v].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (auto* list : {&d.out_[v], &d.in_[v]}) {
      std::sort(list->begin(), list->end());
      list->erase(std::unique(list->begin(), list->end()), list->end());
    }
  }
  d.index_arcs();
  return d;
}

void Digraph::index_arcs() {
  const std::size_t n = order();
  arc_count_ = 0;
  dense_.clear();
  sparse_.clear();
  if (n <= kDenseLimit) {
    const std::size_t words = (n * n + 63) / 64;
    dense_.assign(words, 0);
  }
  for (Vertex u = 0; u < n; ++u) {
    arc_count_ += out_[u].size();
    for (Vertex v : out_[u]) {
      if (n <= kDenseLimit) {
        const std::size_t bit = static_cast<std::size_t>(u) * n + v;
        dense_[bit / 64] |= std::uint64_t{1} << (bit % 64);
      } else {
        sparse_.insert(arc_key(u, v));
      }
    }
  }
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  const std::size_t n = order();
  if (u >= n || v >= n) return false;
  if (n <= kDenseLimit) {
    const std::size_t bit = static_cast<std::size_t>(u) * n + v;
    return (dense_[bit / 64] >> (bit % 64)) & 1U;
  }
  return sparse_.count(arc_key(u, v)) != 0;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : out_[u]) result.emplace_back(u, v);
  }
  return result;
}

VertexList neighbourhood(const Digraph& d, Vertex v, Direction dir, bool closed) {
  require_vertex(d, v);
  VertexList result = dir == Direction::In ? d.in(v) : d.out(v);
  if (closed) result.insert(std::lower_bound(result.begin(), result.end(), v), v);
  return result;
}

InducedSubgraph induced(const Digraph& d, std::span<const Vertex> vertices) {
  VertexList ids(vertices.begin(), vertices.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<std::int64_t> local(d.order(), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    require_vertex(d, ids[i]);
    local[ids[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (Vertex w : d.out(ids[i])) {
      if (local[w] >= 0) arcs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(local[w]));
    }
  }
  return {Digraph::build(ids.size(), arcs), std::move(ids)};
}

Digraph reverse(const Digraph& d) {
  std::vector<Arc> arcs;
  arcs.reserve(d.arc_count());
  for (const auto& [u, v] : d.arcs()) arcs.emplace_back(v, u);
  return Digraph::build(d.order(), arcs);
}

std::vector<char> reachable_from(const Digraph& d, Vertex s) {
  require_vertex(d, s);
  std::vector<char> seen(d.order(), 0);
  std::vector<Vertex> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : d.out(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

bool is_connected(const Digraph& d) {
  const std::size_t n = d.order();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (const auto* list : {&d.out(u), &d.in(u)}) {
      for (Vertex w : *list) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
  }
  return count == n;
}

bool is_strong(const Digraph& d) {
  const std::size_t n = d.order();
  if (n == 0) return false;
  const auto forward = reachable_from(d, 0);
  if (std::find(forward.begin(), forward.end(), 0) != forward.end()) return false;
  const auto backward = reachable_from(reverse(d), 0);
  return std::find(backward.begin(), backward.end(), 0) == backward.end();
}

Connectivity connectivity(const Digraph& d) {
  return {is_connected(d), is_strong(d)};
}

StrongComponents strong_components(const Digraph& d) {
  const std::size_t n = d.order();
  // Iterative Tarjan.
  constexpr std::int64_t kUnvisited = -1;
  std::vector<std::int64_t> index(n, kUnvisited), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::size_t> raw_component(n, 0);
  std::size_t raw_count = 0;
  std::int64_t counter = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<std::pair<Vertex, std::size_t>> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [u, next] = frames.back();
      if (next < d.out(u).size()) {
        const Vertex w = d.out(u)[next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[u] = std::min(low[u], index[w]);
        }
        continue;
      }
      const Vertex done = u;
      frames.pop_back();
      if (!frames.empty()) {
        const Vertex parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          raw_component[w] = raw_count;
        } while (w != done);
        ++raw_count;
      }
    }
  }

  std::vector<VertexList> raw_members(raw_count);
  for (Vertex v = 0; v < n; ++v) raw_members[raw_component[v]].push_back(v);

  // Kahn's algorithm on the condensation, smallest member id first.
  std::vector<std::unordered_set<std::size_t>> succ(raw_count);
  std::vector<std::size_t> indeg(raw_count, 0);
  for (const auto& [u, v] : d.arcs()) {
    const auto a = raw_component[u], b = raw_component[v];
    if (a != b && succ[a].insert(b).second) ++indeg[b];
  }
  using Entry = std::pair<Vertex, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (std::size_t c = 0; c < raw_count; ++c) {
    if (indeg[c] == 0) ready.emplace(raw_members[c].front(), c);
  }
  std::vector<std::size_t> renumber(raw_count);
  std::size_t next_id = 0;
  while (!ready.empty()) {
    const auto c = ready.top().second;
    ready.pop();
    renumber[c] = next_id++;
    for (auto s : succ[c]) {
      if (--indeg[s] == 0) ready.emplace(raw_members[s].front(), s);
    }
  }

  StrongComponents result;
  result.components.resize(raw_count);
  result.component_of.resize(n);
  for (std::size_t c = 0; c < raw_count; ++c) result.components[renumber[c]] = raw_members[c];
  for (Vertex v = 0; v < n; ++v) result.component_of[v] = renumber[raw_component[v]];
  std::vector<Arc> quotient_arcs;
  for (std::size_t c = 0; c < raw_count; ++c) {
    for (auto s : succ[c]) {
      quotient_arcs.emplace_back(static_cast<Vertex>(renumber[c]), static_cast<Vertex>(renumber[s]));
    }
  }
  result.condensation = Digraph::build(raw_count, quotient_arcs);
  result.topological_order.resize(raw_count);
  for (std::size_t c = 0; c < raw_count; ++c) result.topological_order[c] = c;
  return result;
}

Layering bfs_layers(const Digraph& d, Vertex s) {
  require_vertex(d, s);
  Layering result;
  result.source = s;
  result.layer_of.assign(d.order(), -1);
  result.layer_of[s] = 0;
  std::deque<Vertex> queue{s};
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : d.out(u)) {
      if (result.layer_of[w] < 0) {
        result.layer_of[w] = result.layer_of[u] + 1;
        queue.push_back(w);
      }
    }
  }
  for (Vertex v = 0; v < d.order(); ++v) {
    const int layer = result.layer_of[v];
    if (layer < 0) {
      result.unreachable.push_back(v);
      continue;
    }
    if (static_cast<std::size_t>(layer) >= result.layers.size()) result.layers.resize(layer + 1);
    result.layers[layer].push_back(v);
  }
  return result;
}

VertexList complement(std::size_t n, std::span<const Vertex> set) {
  const auto member = membership(n, set);
  VertexList result;
  for (Vertex v = 0; v < n; ++v) {
    if (!member[v]) result.push_back(v);
  }
  return result;
}

std::vector<char> membership(std::size_t n, std::span<const Vertex> set) {
  std::vector<char> member(n, 0);
  for (Vertex v : set) {
    if (v >= n) throw InputError("vertex " + std::to_string(v) + " out of range");
    member[v] = 1;
  }
  return member;
}

VertexList set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexList result;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(result));
  return result;
}

VertexList set_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexList result;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(result));
  return result;
}

VertexList map_ids(std::span<const Vertex> local, std::span<const Vertex> ids) {
  VertexList result;
  result.reserve(local.size());
  for (Vertex v : local) result.push_back(ids[v]);
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace ldsets
