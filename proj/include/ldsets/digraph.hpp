#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

namespace ldsets {

using Vertex = std::uint32_t;
using VertexList = std::vector<Vertex>;  // kept sorted ascending unless noted
using Arc = std::pair<Vertex, Vertex>;

// Loopless finite digraph on vertices 0..n-1. Parallel arcs collapse to one.
// Immutable after construction.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n);

  // Validates ids and rejects loops; duplicate arcs are dropped.
  static Digraph build(std::size_t n, std::span<const Arc> arcs);

  std::size_t order() const { return out_.size(); }
  std::size_t arc_count() const { return arc_count_; }

  bool has_arc(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

  const VertexList& out(Vertex v) const { return out_[v]; }
  const VertexList& in(Vertex v) const { return in_[v]; }
  std::size_t out_degree(Vertex v) const { return out_[v].size(); }
  std::size_t in_degree(Vertex v) const { return in_[v].size(); }

  // All arcs, lexicographically sorted.
  std::vector<Arc> arcs() const;

  bool operator==(const Digraph& other) const { return out_ == other.out_; }

 private:
  void index_arcs();

  std::vector<VertexList> out_;
  std::vector<VertexList> in_;
  std::size_t arc_count_ = 0;
  // Bit matrix for small orders, hashed pairs above kDenseLimit.
  std::vector<std::uint64_t> dense_;
  std::unordered_set<std::uint64_t> sparse_;

  static constexpr std::size_t kDenseLimit = 8192;
};

enum class Direction { In, Out };

// N-(v), N+(v), N-[v] or N+[v], sorted.
VertexList neighbourhood(const Digraph& d, Vertex v, Direction dir, bool closed = false);

struct InducedSubgraph {
  Digraph graph;
  VertexList ids;  // ids[i] is the original id of local vertex i
};

// Subgraph induced by `vertices` with dense renumbering in ascending id order.
InducedSubgraph induced(const Digraph& d, std::span<const Vertex> vertices);

Digraph reverse(const Digraph& d);

struct Connectivity {
  bool connected = false;
  bool strong = false;
};

Connectivity connectivity(const Digraph& d);
bool is_strong(const Digraph& d);
bool is_connected(const Digraph& d);

struct StrongComponents {
  // Components numbered in a topological order of the condensation; ties are
  // broken by smallest member id.
  std::vector<VertexList> components;
  std::vector<std::size_t> component_of;
  Digraph condensation;
  std::vector<std::size_t> topological_order;
};

StrongComponents strong_components(const Digraph& d);

struct Layering {
  Vertex source = 0;
  std::vector<VertexList> layers;   // layers[i] = vertices at distance i
  VertexList unreachable;
  std::vector<int> layer_of;        // -1 for unreachable vertices

  std::size_t last() const { return layers.empty() ? 0 : layers.size() - 1; }
};

Layering bfs_layers(const Digraph& d, Vertex s);

// Vertices reachable from s by directed paths, as a membership mask.
std::vector<char> reachable_from(const Digraph& d, Vertex s);

// Helpers for sorted vertex lists.
VertexList complement(std::size_t n, std::span<const Vertex> set);
std::vector<char> membership(std::size_t n, std::span<const Vertex> set);
VertexList set_union(std::span<const Vertex> a, std::span<const Vertex> b);
VertexList set_difference(std::span<const Vertex> a, std::span<const Vertex> b);
VertexList map_ids(std::span<const Vertex> local, std::span<const Vertex> ids);

}  // namespace ldsets
