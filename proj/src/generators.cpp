#include "ldsets/generators.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ldsets/error.hpp"
#include "ldsets/structure.hpp"

namespace ldsets {

namespace {

// Raw mt19937_64 output only, so sequences match across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }
  bool flip() { return (engine_() & 1) != 0; }

  std::vector<Vertex> permutation(std::size_t n) {
    std::vector<Vertex> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[below(i)]);
    return perm;
  }

 private:
  std::mt19937_64 engine_;
};

Digraph random_tournament(std::size_t n, Rng& rng) {
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) arcs.push_back(rng.flip() ? Arc{i, j} : Arc{j, i});
  }
  return Digraph::build(n, arcs);
}

Digraph random_strong_tournament(std::size_t m, Rng& rng) {
  if (m == 2) throw InputError("no strong tournament has 2 vertices");
  while (true) {
    auto t = random_tournament(m, rng);
    if (is_strong(t)) return t;
  }
}

std::vector<std::size_t> block_sizes(std::size_t n_target, Rng& rng) {
  std::vector<std::size_t> sizes;
  std::size_t remaining = n_target;
  while (remaining > 0) {
    std::vector<std::size_t> large;
    for (std::size_t s = 3; s <= 5; ++s) {
      if (s <= remaining && s < n_target) large.push_back(s);
    }
    std::size_t size = 1;
    if (!large.empty() && rng.flip()) size = large[rng.below(large.size())];
    sizes.push_back(size);
    remaining -= size;
  }
  return sizes;
}

// Round quotient with forward arcs i -> i+1..e_i and nondecreasing ends.
Digraph linear_round_quotient(std::size_t r, Rng& rng) {
  std::vector<Arc> arcs;
  std::size_t end = 0;
  for (std::size_t i = 0; i + 1 < r; ++i) {
    end = rng.between(std::max(end, i + 1), r - 1);
    for (std::size_t j = i + 1; j <= end; ++j) arcs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return Digraph::build(r, arcs);
}

// Round quotient on a cycle; out-degrees drift by at most one step down.
Digraph circular_round_quotient(std::size_t r, Rng& rng) {
  const std::size_t cap = (r - 1) / 2;
  std::vector<Arc> arcs;
  std::size_t degree = rng.between(1, cap);
  for (std::size_t i = 0; i < r; ++i) {
    if (i > 0) degree = rng.between(std::max<std::size_t>(1, degree - 1), cap);
    for (std::size_t step = 1; step <= degree; ++step) {
      arcs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + step) % r));
    }
  }
  return Digraph::build(r, arcs);
}

bool acceptable_quotient(const Digraph& q, bool want_strong) {
  VertexList identity(q.order());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<Vertex>(i);
  if (!is_round_labelling(q, identity)) return false;
  const auto c = classify(q);
  if (!c.simple || !is_connected(q)) return false;
  if (q.order() >= 3 && c.tournament) return false;
  return is_strong(q) == want_strong;
}

}  // namespace

Digraph gen_fig1(std::size_t k) {
  if (k < 1) throw InputError("figure-1 family needs k >= 1");
  const std::size_t n = 3 * k + 2;
  std::vector<Arc> arcs{{0, 1}};
  for (std::size_t j = 0; j < k; ++j) {
    const Vertex a = static_cast<Vertex>(2 + 3 * j);
    const Vertex tri[3] = {a, a + 1, a + 2};
    for (int i = 0; i < 3; ++i) {
      arcs.emplace_back(tri[i], tri[(i + 1) % 3]);
      arcs.emplace_back(tri[i], 0);
      arcs.emplace_back(1, tri[i]);
    }
  }
  auto d = Digraph::build(n, arcs);
  if (!is_strong(d) || !twin_report(d).quasi_twin_free()) {
    throw InternalInconsistency("figure-1 instance is not strong and quasi-twin-free");
  }
  return d;
}

Digraph gen_fig4(std::size_t k) {
  if (k < 1) throw InputError("figure-4 family needs k >= 1");
  const std::size_t n = 3 * k + 1;
  std::vector<Arc> arcs;
  for (std::size_t j = 0; j < k; ++j) {
    const Vertex a = static_cast<Vertex>(1 + 3 * j);
    const Vertex tri[3] = {a, a + 1, a + 2};
    for (int i = 0; i < 3; ++i) {
      arcs.emplace_back(tri[i], tri[(i + 1) % 3]);
      arcs.emplace_back(0, tri[i]);
    }
  }
  auto d = Digraph::build(n, arcs);
  if (!classify(d).locally_in_semicomplete || !twin_report(d).quasi_twin_free()) {
    throw InternalInconsistency("figure-4 instance is not locally in-semicomplete and quasi-twin-free");
  }
  return d;
}

Digraph blowup(const Digraph& r, const std::vector<Digraph>& blocks) {
  if (blocks.size() != r.order()) throw InputError("blow-up needs one block per quotient vertex");
  std::vector<Vertex> offset(blocks.size() + 1, 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) offset[i + 1] = offset[i] + static_cast<Vertex>(blocks[i].order());
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (const auto& [u, v] : blocks[i].arcs()) arcs.emplace_back(offset[i] + u, offset[i] + v);
  }
  for (const auto& [i, j] : r.arcs()) {
    for (Vertex u = offset[i]; u < offset[i + 1]; ++u) {
      for (Vertex v = offset[j]; v < offset[j + 1]; ++v) arcs.emplace_back(u, v);
    }
  }
  return Digraph::build(offset.back(), arcs);
}

Digraph gen_random_tournament(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw InputError("tournament needs n >= 1");
  Rng rng(seed);
  return random_tournament(n, rng);
}

Digraph gen_random_strong_tournament(std::size_t m, std::uint64_t seed) {
  if (m < 1) throw InputError("tournament needs n >= 1");
  Rng rng(seed);
  return random_strong_tournament(m, rng);
}

GeneratedLocalTournament gen_random_local_tournament(std::size_t n_target, std::uint64_t seed) {
  if (n_target < 2) throw InputError("local tournament generator needs n >= 2");
  Rng rng(seed);
  const auto sizes = block_sizes(n_target, rng);
  const std::size_t r = sizes.size();

  GeneratedLocalTournament result;
  const bool try_strong = r >= 4 && rng.flip();
  bool found = false;
  for (int attempt = 0; attempt < 1000 && try_strong && !found; ++attempt) {
    result.quotient = circular_round_quotient(r, rng);
    found = acceptable_quotient(result.quotient, true);
  }
  for (int attempt = 0; attempt < 1000 && !found; ++attempt) {
    result.quotient = linear_round_quotient(r, rng);
    found = acceptable_quotient(result.quotient, false);
  }
  if (!found) throw GenerationError("no round quotient found for " + std::to_string(r) + " blocks");
  result.canonical = !is_strong(result.quotient);

  std::vector<Digraph> blocks;
  for (std::size_t size : sizes) blocks.push_back(random_strong_tournament(size, rng));
  const auto composed = blowup(result.quotient, blocks);

  const auto perm = rng.permutation(composed.order());
  std::vector<Arc> arcs;
  for (const auto& [u, v] : composed.arcs()) arcs.emplace_back(perm[u], perm[v]);
  result.graph = Digraph::build(composed.order(), arcs);

  Vertex next = 0;
  for (std::size_t size : sizes) {
    VertexList block;
    for (std::size_t i = 0; i < size; ++i) block.push_back(perm[next++]);
    std::sort(block.begin(), block.end());
    result.blocks.push_back(std::move(block));
  }
  if (!classify(result.graph).local_tournament || !is_connected(result.graph)) {
    throw InternalInconsistency("blow-up of a round quotient is not a connected local tournament");
  }
  return result;
}

Digraph gen_random_in_semicomplete(std::size_t n_target, std::uint64_t seed) {
  auto d = gen_random_local_tournament(n_target, seed).graph;
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t n = d.order();
  for (std::size_t attempt = 0; attempt < 2 * n; ++attempt) {
    const auto u = static_cast<Vertex>(rng.below(n));
    const auto v = static_cast<Vertex>(rng.below(n));
    if (u == v || d.has_arc(u, v)) continue;
    auto arcs = d.arcs();
    arcs.emplace_back(u, v);
    auto candidate = Digraph::build(n, arcs);
    if (classify(candidate).locally_in_semicomplete) d = std::move(candidate);
  }
  return d;
}

DigraphFilter DigraphFilter::parse(const std::string& text) {
  DigraphFilter filter;
  if (text == "none" || text.empty()) return filter;
  std::istringstream in(text);
  std::string name;
  while (std::getline(in, name, '+')) {
    if (name == "connected") {
      filter.connected = true;
    } else if (name == "strong") {
      filter.strong = true;
    } else if (name == "twin-free") {
      filter.twin_free = true;
    } else if (name == "quasi-twin-free") {
      filter.quasi_twin_free = true;
    } else {
      throw InputError("unknown filter '" + name + "'");
    }
  }
  return filter;
}

bool DigraphFilter::accepts(const Digraph& d) const {
  if (strong && !is_strong(d)) return false;
  if (connected && !is_connected(d)) return false;
  if (twin_free || quasi_twin_free) {
    const auto report = twin_report(d);
    if (!report.twin_free()) return false;
    if (quasi_twin_free && !report.quasi_twin_free()) return false;
  }
  return true;
}

Digraph gen_random_digraph(std::size_t n, double p, std::uint64_t seed, const DigraphFilter& filter,
                           std::size_t retries) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("arc probability must lie in [0, 1]");
  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < retries; ++attempt) {
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u != v && rng.coin(p)) arcs.emplace_back(u, v);
      }
    }
    auto d = Digraph::build(n, arcs);
    if (filter.accepts(d)) return d;
  }
  throw GenerationError("no digraph passed the filter within " + std::to_string(retries) + " attempts");
}

}  // namespace ldsets
