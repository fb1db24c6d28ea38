#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cfc/types.hpp"

namespace cfc {

/// K_n with every edge subdivided once. Branch vertices 0..n-1, then one
/// vertex per pair i<j in lexicographic order.
Graph subdivided_complete(std::size_t n);

/// K_{d,m} with every edge subdivided once. a_i = i, b_j = d + j and
/// v_{i,j} = d + m + i*m + j.
Graph subdivided_biclique(std::size_t d, std::size_t m);

/// Total 3-coloring of subdivided_biclique(d, m) valid on its open
/// neighborhoods. Needs m >= d.
PartialColoring prop3_cfon3_coloring(std::size_t d, std::size_t m);

/// Partial coloring of subdivided_biclique(d, m) from a 2-assignment, valid
/// on its open neighborhoods. Needs m >= d. Choices take the smallest
/// admissible color.
PartialColoring prop3_cfonstar_coloring(std::size_t d, std::size_t m, const ListAssignment& lists);

/// K_{1,k}, center 0.
Graph star(std::size_t k);
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Vertex i is the i-th edge of g.edge_list().
Graph line_graph(const Graph& g);

/// Vertices 0..n-1, one edge per interval [i, j] (i <= j), ordered by i then j.
Hypergraph discrete_interval_hypergraph(std::size_t n);

/// G(n, p).
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

/// Random graph with min degree >= min_deg and max degree <= max_deg:
/// random degree targets paired configuration-style, then topped up.
/// Throws BudgetExhausted after `attempts` rejected tries.
Graph random_graph_min_degree(std::size_t n, std::size_t max_deg, std::size_t min_deg,
                              std::uint64_t seed, std::size_t attempts = 200);

/// m edges with sizes uniform in [min_size, max_size].
Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t min_size,
                             std::size_t max_size, std::uint64_t seed);

/// Every vertex gets k distinct colors drawn from {0..palette-1}.
ListAssignment random_lists(std::size_t n, std::size_t k, std::size_t palette, std::uint64_t seed);

struct Point {
  double x = 0;
  double y = 0;
};

struct ScenarioSpec {
  std::vector<Point> stations;
  std::vector<Point> clients;
  double radius = 1;
};

/// Rows `x,y,kind` with kind station or client; an optional header row
/// starting with `x` is skipped.
ScenarioSpec read_scenario_csv(std::istream& in, double radius);

/// Vertices are stations; one edge per client holding the stations within
/// distance radius. Rejects a client out of range of every station.
Hypergraph scenario_hypergraph(const ScenarioSpec& s);

/// One representative of every isomorphism class of connected graphs on n
/// vertices (n <= 8).
std::vector<Graph> connected_graphs(std::size_t n);

}  // namespace cfc
