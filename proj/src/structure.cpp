#include "ldsets/structure.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ldsets/error.hpp"

namespace ldsets {

namespace {

// Every pair in `vertices` is joined by at least one arc (semicomplete) and,
// if `exactly_one`, by exactly one.
bool pairwise_joined(const Digraph& d, const VertexList& vertices, bool exactly_one) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const bool forward = d.has_arc(vertices[i], vertices[j]);
      const bool backward = d.has_arc(vertices[j], vertices[i]);
      if (!forward && !backward) return false;
      if (exactly_one && forward && backward) return false;
    }
  }
  return true;
}

bool is_simple(const Digraph& d) {
  for (const auto& [u, v] : d.arcs()) {
    if (u < v && d.has_arc(v, u)) return false;
  }
  return true;
}

// How w relates to a: bit 0 for w->a, bit 1 for a->w.
int relation(const Digraph& d, Vertex w, Vertex a) {
  return (d.has_arc(w, a) ? 1 : 0) | (d.has_arc(a, w) ? 2 : 0);
}

// Smallest vertex set containing u and v that no outside vertex tells apart.
VertexList module_closure(const Digraph& d, Vertex u, Vertex v) {
  const std::size_t n = d.order();
  std::vector<char> inside(n, 0);
  VertexList members{u, v};
  inside[u] = inside[v] = 1;
  std::vector<Vertex> pending{v};
  while (!pending.empty()) {
    const Vertex added = pending.back();
    pending.pop_back();
    for (Vertex w = 0; w < n; ++w) {
      if (inside[w]) continue;
      if (relation(d, w, added) != relation(d, w, u)) {
        inside[w] = 1;
        members.push_back(w);
        pending.push_back(w);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_module(const Digraph& d, const VertexList& block) {
  const auto inside = membership(d.order(), block);
  for (Vertex w = 0; w < d.order(); ++w) {
    if (inside[w]) continue;
    const int first = relation(d, w, block.front());
    for (Vertex a : block) {
      if (relation(d, w, a) != first) return false;
    }
  }
  return true;
}

bool induces_strong_tournament(const Digraph& d, const VertexList& block) {
  if (!pairwise_joined(d, block, true)) return false;
  return block.size() == 1 || is_strong(induced(d, block).graph);
}

Digraph quotient_of(const Digraph& d, const std::vector<VertexList>& blocks) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (i != j && d.has_arc(blocks[i].front(), blocks[j].front())) {
        arcs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Digraph::build(blocks.size(), arcs);
}

// Positions i < k (distance k - i) of a candidate circular labelling of size
// r are compatible with the round property.
bool round_pair_consistent(const Digraph& q, Vertex a, Vertex b, std::size_t offset, std::size_t r) {
  const bool ab = q.has_arc(a, b);
  const bool ba = q.has_arc(b, a);
  const std::size_t back = r - offset;
  return ab == (offset <= q.out_degree(a)) && ab == (offset <= q.in_degree(b)) &&
         ba == (back <= q.out_degree(b)) && ba == (back <= q.in_degree(a));
}

// Backtracking search for a round circular order of q starting at vertex 0.
std::optional<VertexList> find_round_order(const Digraph& q) {
  const std::size_t r = q.order();
  VertexList order{0};
  std::vector<char> used(r, 0);
  used[0] = 1;

  auto extend = [&](auto&& self) -> bool {
    const std::size_t position = order.size();
    if (position == r) return true;
    for (Vertex c = 0; c < r; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < position && ok; ++j) {
        ok = round_pair_consistent(q, order[j], c, position - j, r);
      }
      if (!ok) continue;
      used[c] = 1;
      order.push_back(c);
      if (self(self)) return true;
      order.pop_back();
      used[c] = 0;
    }
    return false;
  };
  if (!extend(extend)) return std::nullopt;
  return order;
}

void require_decomposable_input(const Digraph& d) {
  const auto cls = classify(d);
  if (!cls.local_tournament) throw InputError("input is not a local tournament");
  if (!is_connected(d)) throw InputError("input is not connected");
  if (cls.tournament) throw InputError("input is a tournament");
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

bool is_tournament(const Digraph& d) {
  VertexList all(d.order());
  std::iota(all.begin(), all.end(), 0);
  return pairwise_joined(d, all, true);
}

Classification classify(const Digraph& d) {
  Classification c;
  c.simple = is_simple(d);
  c.locally_in_semicomplete = true;
  c.locally_out_semicomplete = true;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (c.locally_in_semicomplete && !pairwise_joined(d, d.in(v), false)) c.locally_in_semicomplete = false;
    if (c.locally_out_semicomplete && !pairwise_joined(d, d.out(v), false)) c.locally_out_semicomplete = false;
  }
  c.local_tournament = c.simple && c.locally_in_semicomplete && c.locally_out_semicomplete;
  c.tournament = c.simple && is_tournament(d);
  return c;
}

bool are_quasi_twins(const Digraph& d, Vertex x, Vertex y) {
  if (x == y) return false;
  return neighbourhood(d, x, Direction::In) == neighbourhood(d, y, Direction::In, true) ||
         neighbourhood(d, y, Direction::In) == neighbourhood(d, x, Direction::In, true);
}

TwinReport twin_report(const Digraph& d) {
  const std::size_t n = d.order();
  std::vector<VertexList> open(n), closed(n);
  for (Vertex v = 0; v < n; ++v) {
    open[v] = d.in(v);
    closed[v] = neighbourhood(d, v, Direction::In, true);
  }
  TwinReport report;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (open[x] == open[y]) report.open_twins.emplace_back(x, y);
      if (closed[x] == closed[y]) report.closed_twins.emplace_back(x, y);
      if (open[x] == closed[y] || open[y] == closed[x]) report.quasi_twins.emplace_back(x, y);
    }
  }
  return report;
}

bool is_round_labelling(const Digraph& d, std::span<const Vertex> order) {
  const std::size_t r = d.order();
  if (order.size() != r) throw InputError("labelling is not a permutation of the vertices");
  std::vector<std::size_t> position(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    if (order[i] >= r || position[order[i]] != r) {
      throw InputError("labelling is not a permutation of the vertices");
    }
    position[order[i]] = i;
  }
  for (Vertex v = 0; v < r; ++v) {
    const std::size_t i = position[v];
    for (Vertex u : d.in(v)) {
      const std::size_t offset = (i + r - position[u]) % r;
      if (offset < 1 || offset > d.in_degree(v)) return false;
    }
    for (Vertex w : d.out(v)) {
      const std::size_t offset = (position[w] + r - i) % r;
      if (offset < 1 || offset > d.out_degree(v)) return false;
    }
  }
  return true;
}

std::vector<std::size_t> RoundDecomposition::block_index(std::size_t n) const {
  std::vector<std::size_t> index(n, blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (Vertex v : blocks[i]) index[v] = i;
  }
  return index;
}

bool is_valid_round_decomposition(const Digraph& d, const RoundDecomposition& dec) {
  const std::size_t r = dec.blocks.size();
  if (r < 2 || dec.quotient.order() != r) return false;
  std::vector<char> seen(d.order(), 0);
  std::size_t covered = 0;
  for (const auto& block : dec.blocks) {
    if (block.empty() || !std::is_sorted(block.begin(), block.end())) return false;
    for (Vertex v : block) {
      if (v >= d.order() || seen[v]) return false;
      seen[v] = 1;
      ++covered;
    }
    if (!induces_strong_tournament(d, block)) return false;
  }
  if (covered != d.order()) return false;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      const bool expected = dec.quotient.has_arc(static_cast<Vertex>(i), static_cast<Vertex>(j));
      for (Vertex a : dec.blocks[i]) {
        for (Vertex b : dec.blocks[j]) {
          if (d.has_arc(a, b) != expected) return false;
        }
      }
      if (dec.canonical && expected && j < i) return false;
    }
  }
  if (!classify(dec.quotient).simple) return false;
  VertexList identity(r);
  std::iota(identity.begin(), identity.end(), 0);
  return is_round_labelling(dec.quotient, identity);
}

std::optional<RoundDecomposition> round_decomposition(const Digraph& d) {
  require_decomposable_input(d);
  const std::size_t n = d.order();

  if (!is_strong(d)) {
    const auto sc = strong_components(d);
    RoundDecomposition dec;
    dec.blocks = sc.components;
    dec.quotient = quotient_of(d, dec.blocks);
    dec.canonical = true;
    dec.rotation_anchor = dec.blocks.front().front();
    if (!is_valid_round_decomposition(d, dec)) {
      throw InternalInconsistency(
          "strong components of a non-strong connected local tournament do not form a round decomposition");
    }
    return dec;
  }

  // Strong case: two vertices share a block when the smallest module holding
  // both induces a strong tournament.
  UnionFind groups(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!d.adjacent(u, v) || groups.find(u) == groups.find(v)) continue;
      const auto closure = module_closure(d, u, v);
      if (closure.size() < n && induces_strong_tournament(d, closure)) {
        for (Vertex w : closure) groups.unite(u, w);
      }
    }
  }
  std::vector<VertexList> blocks;
  {
    std::vector<std::size_t> slot(n, n);
    for (Vertex v = 0; v < n; ++v) {
      const auto root = groups.find(v);
      if (slot[root] == n) {
        slot[root] = blocks.size();
        blocks.emplace_back();
      }
      blocks[slot[root]].push_back(v);
    }
  }
  if (blocks.size() < 2) return std::nullopt;
  for (const auto& block : blocks) {
    if (!is_module(d, block) || !induces_strong_tournament(d, block)) return std::nullopt;
  }
  const Digraph quotient = quotient_of(d, blocks);
  if (!classify(quotient).simple) return std::nullopt;
  const auto order = find_round_order(quotient);
  if (!order) return std::nullopt;

  RoundDecomposition dec;
  for (Vertex b : *order) dec.blocks.push_back(blocks[b]);
  dec.quotient = quotient_of(d, dec.blocks);
  dec.canonical = false;
  dec.rotation_anchor = 0;
  if (!is_valid_round_decomposition(d, dec)) {
    throw InternalInconsistency("round order search produced an invalid decomposition");
  }
  return dec;
}

bool separates(const Digraph& d, std::span<const Vertex> removed) {
  const auto rest = complement(d.order(), removed);
  if (rest.size() < 2) return false;
  return !is_strong(induced(d, rest).graph);
}

bool is_minimal_separator(const Digraph& d, std::span<const Vertex> removed) {
  if (!separates(d, removed)) return false;
  if (removed.size() >= 63) throw InputError("separator too large for the minimality check");
  // Removing vertices can restore strong connectivity, so every proper subset
  // is checked, not only those one vertex smaller.
  const std::uint64_t full = (std::uint64_t{1} << removed.size()) - 1;
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    VertexList smaller;
    for (std::size_t j = 0; j < removed.size(); ++j) {
      if (mask >> j & 1) smaller.push_back(removed[j]);
    }
    if (separates(d, smaller)) return false;
  }
  return true;
}

RoundDecomposition decomposition_from_blocks(const Digraph& d, std::vector<VertexList> blocks, bool canonical) {
  RoundDecomposition dec;
  for (auto& block : blocks) std::sort(block.begin(), block.end());
  dec.quotient = quotient_of(d, blocks);
  dec.blocks = std::move(blocks);
  dec.canonical = canonical;
  dec.rotation_anchor = dec.blocks.empty() ? 0 : dec.blocks.front().front();
  return dec;
}

std::vector<VertexList> minimal_separators(const Digraph& d, std::size_t limit, std::size_t max_size) {
  std::vector<VertexList> found;
  const std::size_t n = d.order();
  if (n < 3 || limit == 0) return found;
  const std::size_t largest = std::min(max_size, n - 2);
  for (std::size_t k = 1; k <= largest && found.size() < limit; ++k) {
    for_each_combination(n, k, [&](const VertexList& candidate) {
      if (!is_minimal_separator(d, candidate)) return true;
      found.push_back(candidate);
      return found.size() < limit;
    });
  }
  return found;
}

VertexList minimal_separator(const Digraph& d) {
  if (d.order() < 3) throw InputError("separator search needs at least 3 vertices");
  if (!is_strong(d)) throw InputError("input is not strongly connected");
  auto found = minimal_separators(d, 1, d.order());
  if (found.empty()) throw InputError("no vertex set separates this digraph");
  return found.front();
}

}  // namespace ldsets
