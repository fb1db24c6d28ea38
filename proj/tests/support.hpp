#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "cfc/types.hpp"

namespace cfc::testing {

// Independent checker: counts colors per edge with a map, no shared code
// with the library verifier.
inline bool edge_ok(const std::vector<Vertex>& e, const std::vector<int>& col) {
  std::map<int, int> count;
  for (Vertex v : e)
    if (col[v] >= 0) ++count[col[v]];
  for (auto [c, k] : count)
    if (k == 1) return true;
  return false;
}

inline bool all_edges_ok(const Hypergraph& h, const std::vector<int>& col) {
  for (const auto& e : h.edges())
    if (!edge_ok(e, col)) return false;
  return true;
}

// Exhaustive chi over {-1 (partial only), 0..k-1}^n.
inline std::size_t brute_chi(const Hypergraph& h, Mode mode, std::size_t max_k = 6) {
  const std::size_t n = h.num_vertices();
  const int low = mode == Mode::Partial ? -1 : 0;
  for (std::size_t k = 0; k <= max_k; ++k) {
    if (k == 0 && (mode == Mode::Full ? n > 0 : h.num_edges() > 0)) continue;
    if (k == 0) return 0;
    std::vector<int> col(n, low);
    while (true) {
      if (all_edges_ok(h, col)) return k;
      std::size_t i = 0;
      while (i < n && col[i] == static_cast<int>(k) - 1) col[i++] = low;
      if (i == n) break;
      ++col[i];
    }
  }
  return SIZE_MAX;
}

// Exhaustive list colorability: every vertex takes a list color or (partial) nothing.
inline bool brute_list_colorable(const Hypergraph& h, const ListAssignment& lists, Mode mode) {
  const std::size_t n = h.num_vertices();
  const int low = mode == Mode::Partial ? -1 : 0;
  std::vector<int> idx(n, low);
  std::vector<int> col(n);
  while (true) {
    for (Vertex v = 0; v < n; ++v) col[v] = idx[v] < 0 ? -1 : static_cast<int>(lists[v][idx[v]]);
    if (all_edges_ok(h, col)) return true;
    std::size_t i = 0;
    while (i < n && idx[i] == static_cast<int>(lists[i].size()) - 1) idx[i++] = low;
    if (i == n) return false;
    ++idx[i];
  }
}

inline std::vector<int> as_ints(const PartialColoring& c) {
  std::vector<int> out(c.size(), -1);
  for (Vertex v = 0; v < c.size(); ++v)
    if (auto x = c[v]) out[v] = static_cast<int>(*x);
  return out;
}

// Hand-rolled instance generators for the property suites.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }

  Hypergraph hypergraph(std::size_t n, std::size_t m, std::size_t max_size) {
    std::vector<std::vector<Vertex>> edges;
    for (std::size_t e = 0; e < m; ++e) {
      std::size_t size = uniform(1, std::min(max_size, n));
      std::vector<Vertex> all(n);
      for (Vertex v = 0; v < n; ++v) all[v] = v;
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(size);
      edges.push_back(all);
    }
    return Hypergraph(n, edges);
  }

  Graph graph(std::size_t n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    return g;
  }

  // Per-vertex list sizes given by `sizes`, colors from {0..palette-1}.
  ListAssignment lists(const std::vector<std::size_t>& sizes, std::size_t palette) {
    std::vector<std::vector<Color>> out;
    for (auto k : sizes) {
      std::vector<Color> all(palette);
      for (Color c = 0; c < palette; ++c) all[c] = c;
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(k);
      out.push_back(all);
    }
    return ListAssignment(out);
  }
};

}  // namespace cfc::testing
