#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cfc/types.hpp"

namespace cfc {

/// One hyperedge N_G(v) per vertex, in vertex order. Rejects graphs with an
/// isolated vertex (its open neighborhood would be empty).
Hypergraph open_neighborhood_hypergraph(const Graph& g);

/// One hyperedge N_G[v] per vertex, in vertex order.
Hypergraph closed_neighborhood_hypergraph(const Graph& g);

/// Outcome of checking a coloring against a hypergraph.
///
/// `witness[e]` is the first vertex of edge e (in edge order) whose color
/// occurs exactly once in e. Uncolored vertices never witness and never
/// block a witness.
struct VerifyReport {
  bool ok = false;
  Mode mode = Mode::Full;
  std::vector<std::optional<Vertex>> witness;
  std::vector<std::size_t> violated_edges;
  /// Only populated in full mode.
  std::vector<Vertex> uncolored;
  /// Set when a list assignment was supplied.
  std::optional<bool> list_ok;
  std::vector<Vertex> list_violations;
};

VerifyReport verify(const Hypergraph& h, const PartialColoring& c, Mode mode);
VerifyReport verify(const Hypergraph& h, const PartialColoring& c, Mode mode,
                    const ListAssignment& lists);

/// Gives every uncolored vertex one fresh color (max used + 1). The input
/// must already be a partial CF coloring of h.
PartialColoring lift_partial_to_full(const Hypergraph& h, const PartialColoring& c);

/// Random partition of a palette into t parts with per-vertex target parts.
struct PalettePartition {
  std::size_t z = 0;
  std::size_t t = 0;
  /// parts[j] holds the palette colors of part j (0-based), ascending.
  std::vector<std::vector<Color>> parts;
  /// targets[v] in 0..t-1.
  std::vector<std::size_t> targets;
  /// sublists[v] = L_v ∩ parts[targets[v]].
  std::vector<std::vector<Color>> sublists;
  std::size_t attempts = 0;

  /// z + ceil(ln n).
  std::size_t window_low() const;
  /// 9 (z + ceil(ln n)).
  std::size_t window_high() const;
  std::size_t n() const { return targets.size(); }

  /// L_v ∩ parts[j] for an arbitrary part j.
  std::vector<Color> sublist(const ListAssignment& lists, Vertex v, std::size_t j) const;
  ListAssignment target_assignment() const { return ListAssignment(sublists); }
};

/// List size r = 5 t (z + ceil(ln n)) required by `palette_partition`.
std::size_t partition_list_size(std::size_t n, std::size_t z, std::size_t t);

/// Assigns each palette color to a uniformly random part and resamples the
/// whole partition until every vertex v has
/// z + ceil(ln n) <= |L_v ∩ P_{targets[v]}| <= 9 (z + ceil(ln n)).
///
/// `lists` must be an r-assignment with r = partition_list_size(n, z, t);
/// throws InvalidInput otherwise and BudgetExhausted after `max_attempts`.
PalettePartition palette_partition(const ListAssignment& lists, std::size_t z, std::size_t t,
                                   const std::vector<std::size_t>& targets, std::uint64_t seed,
                                   std::size_t max_attempts = 1000);

struct HypergraphStats {
  std::size_t m = 0;
  /// Max number of edges containing one vertex.
  std::size_t max_degree = 0;
  /// Max number of other edges a single edge intersects.
  std::size_t overlap = 0;
  std::size_t min_edge = 0;
  std::size_t max_edge = 0;
};

HypergraphStats stats(const Hypergraph& h);

/// Largest k such that K_{1,k} is an induced subgraph (0 for edgeless graphs).
std::size_t claw_number(const Graph& g);

/// Largest independent set of g restricted to `vertices`, by exhaustive
/// branch and bound. Intended for small neighborhoods.
std::vector<Vertex> maximum_independent_subset(const Graph& g, std::span<const Vertex> vertices);

/// Greedy maximal independent set over a seeded random vertex order.
std::vector<Vertex> maximal_independent_set(const Graph& g, std::uint64_t seed);

/// Colors the vertices of `order`, one by one, with the smallest color unused
/// by their already-colored neighbors; vertices outside `order` are ignored.
/// Returns the color classes S_1, S_2, ... (index 0 is S_1).
std::vector<std::vector<Vertex>> greedy_proper_color(const Graph& g, std::span<const Vertex> order);

}  // namespace cfc
