#include <doctest.h>

#include <sstream>

#include "cfc/core.hpp"
#include "cfc/generators.hpp"
#include "cfc/oracle.hpp"
#include "support.hpp"

using namespace cfc;
using cfc::testing::Gen;

namespace {

bool triangle_free(const Graph& g) {
  for (auto [u, v] : g.edge_list())
    for (Vertex w : g.neighbors(u))
      if (w != v && g.has_edge(v, w)) return false;
  return true;
}

bool symmetric(const Graph& g) {
  for (Vertex u = 0; u < g.num_vertices(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u == v || !g.has_edge(v, u)) return false;
  return true;
}

}  // namespace

TEST_CASE("subdivided complete graph") {
  auto p3 = subdivided_complete(2);
  CHECK(p3.num_vertices() == 3);
  CHECK(p3.edge_list() == std::vector<std::pair<Vertex, Vertex>>{{0, 2}, {1, 2}});

  for (std::size_t n = 2; n <= 7; ++n) {
    auto g = subdivided_complete(n);
    CHECK(g.num_vertices() == n + n * (n - 1) / 2);
    CHECK(g.num_edges() == n * (n - 1));
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j) CHECK_FALSE(g.has_edge(i, j));
    for (Vertex s = n; s < g.num_vertices(); ++s) CHECK(g.degree(s) == 2);
    CHECK(triangle_free(g));
    CHECK(symmetric(g));
  }
  CHECK_THROWS_AS(subdivided_complete(1), InvalidInput);
}

TEST_CASE("subdivided biclique") {
  auto p3 = subdivided_biclique(1, 1);
  CHECK(p3.edge_list() == std::vector<std::pair<Vertex, Vertex>>{{0, 2}, {1, 2}});

  auto g = subdivided_biclique(2, 4);
  CHECK(g.num_vertices() == 14);
  CHECK(g.num_edges() == 16);
  for (Vertex i = 0; i < 2; ++i)
    for (Vertex j = 0; j < 4; ++j) {
      Vertex s = 6 + i * 4 + j;
      CHECK(g.neighbors(s).size() == 2);
      CHECK(g.has_edge(s, i));
      CHECK(g.has_edge(s, 2 + j));
    }
  CHECK(triangle_free(g));
}

TEST_CASE("reference colorings of the subdivided biclique") {
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::size_t m = d; m <= 9; ++m) {
      auto h = open_neighborhood_hypergraph(subdivided_biclique(d, m));
      auto c = prop3_cfon3_coloring(d, m);
      CHECK(verify(h, c, Mode::Full).ok);
      CHECK(c.num_distinct_colors() <= 3);
    }

  auto h = open_neighborhood_hypergraph(subdivided_biclique(2, 4));
  auto c = prop3_cfonstar_coloring(2, 4, ListAssignment::uniform(14, 2));
  CHECK(verify(h, c, Mode::Partial, ListAssignment::uniform(14, 2)).ok);
  CHECK(c.num_distinct_colors() <= 2);

  ListAssignment odd({{5, 7}, {5, 7}, {5, 7}});
  auto small = prop3_cfonstar_coloring(1, 1, odd);
  for (Vertex v = 0; v < 3; ++v)
    if (small[v]) CHECK(odd.contains(v, *small[v]));
  CHECK(verify(open_neighborhood_hypergraph(subdivided_biclique(1, 1)), small, Mode::Partial, odd).ok);

  CHECK_THROWS_AS(prop3_cfon3_coloring(3, 2), InvalidInput);
  CHECK_THROWS_AS(prop3_cfonstar_coloring(2, 4, ListAssignment::uniform(14, 3)), InvalidInput);
}

TEST_CASE("star, interval and small families") {
  auto s = star(4);
  CHECK(s.degree(0) == 4);
  CHECK(s.num_edges() == 4);

  auto h = discrete_interval_hypergraph(2);
  CHECK(h.edges() == std::vector<std::vector<Vertex>>{{0}, {0, 1}, {1}});
  CHECK(discrete_interval_hypergraph(5).num_edges() == 15);

  CHECK(cycle_graph(5).num_edges() == 5);
  CHECK(complete_bipartite(2, 3).num_edges() == 6);
  CHECK(line_graph(complete_graph(4)).num_vertices() == 6);
  CHECK(line_graph(complete_graph(4)).num_edges() == 12);
  CHECK(claw_number(line_graph(complete_graph(6))) == 2);
}

TEST_CASE("line graphs are claw-free") {
  Gen gen(61);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_graph(gen.uniform(2, 10), 0.4, trial);
    CHECK(claw_number(line_graph(g)) <= 2);
  }
}

TEST_CASE("random generators") {
  auto g = random_graph(30, 0.2, 5);
  CHECK(g == random_graph(30, 0.2, 5));
  CHECK(symmetric(g));
  CHECK(random_graph(10, 0, 1).num_edges() == 0);
  CHECK(random_graph(10, 1, 1).num_edges() == 45);
  CHECK_THROWS_AS(random_graph(3, 1.5, 1), InvalidInput);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto d = random_graph_min_degree(40, 10, 4, seed);
    CHECK(d.min_degree() >= 4);
    CHECK(d.max_degree() <= 10);
    CHECK(symmetric(d));
  }
  CHECK_THROWS_AS(random_graph_min_degree(5, 3, 4, 1), InvalidInput);
  CHECK_THROWS_AS(random_graph_min_degree(5, 5, 1, 1), InvalidInput);

  auto h = random_hypergraph(12, 20, 2, 5, 3);
  CHECK(h == random_hypergraph(12, 20, 2, 5, 3));
  for (const auto& e : h.edges()) {
    CHECK(e.size() >= 2);
    CHECK(e.size() <= 5);
  }

  auto lists = random_lists(10, 4, 9, 2);
  CHECK(lists.uniform_size() == 4);
  for (Color c : lists.palette()) CHECK(c < 9);
}

TEST_CASE("scenario hypergraph") {
  std::istringstream csv("x,y,kind\n0,0,station\n1,0,station\n5,5,station\n0.5,0,client\n");
  auto spec = read_scenario_csv(csv, 1.0);
  CHECK(spec.stations.size() == 3);
  CHECK(spec.clients.size() == 1);
  auto h = scenario_hypergraph(spec);
  CHECK(h.num_vertices() == 3);
  CHECK(h.edges() == std::vector<std::vector<Vertex>>{{0, 1}});

  SUBCASE("moving one client changes only its edge") {
    Gen gen(71);
    ScenarioSpec s;
    s.radius = 2;
    std::uniform_real_distribution<double> coord(0, 6);
    for (int i = 0; i < 12; ++i) s.stations.push_back({coord(gen.rng), coord(gen.rng)});
    for (int i = 0; i < 10; ++i) s.clients.push_back(s.stations[i]);
    auto before = scenario_hypergraph(s);
    s.clients[3] = s.stations[11];
    auto after = scenario_hypergraph(s);
    for (std::size_t e = 0; e < 10; ++e)
      if (e != 3) CHECK(before.edge(e).size() == after.edge(e).size());
    CHECK(std::find(after.edge(3).begin(), after.edge(3).end(), Vertex{11}) != after.edge(3).end());
  }

  ScenarioSpec lonely{{{0, 0}}, {{9, 9}}, 1};
  CHECK_THROWS_WITH_AS(scenario_hypergraph(lonely), doctest::Contains("client 0"), InvalidInput);
  std::istringstream bad("0,0,tower\n");
  CHECK_THROWS_WITH_AS(read_scenario_csv(bad, 1), doctest::Contains("line 1"), InvalidInput);
}

TEST_CASE("connected graph enumeration") {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= 7; ++n) {
    auto graphs = connected_graphs(n);
    CHECK(graphs.size() == expected[n - 1]);
    if (n >= 2)
      for (const auto& g : graphs) CHECK(g.min_degree() >= 1);
  }
}
