#include <doctest.h>

#include <set>

#include "cfc/core.hpp"
#include "cfc/generators.hpp"
#include "cfc/oracle.hpp"
#include "support.hpp"

using namespace cfc;
using cfc::testing::Gen;

namespace {

std::vector<std::vector<Vertex>> edges_of(const Hypergraph& h) { return h.edges(); }

PartialColoring coloring(std::initializer_list<int> colors) {
  PartialColoring c(colors.size());
  Vertex v = 0;
  for (int x : colors) {
    if (x >= 0) c.set(v, x);
    ++v;
  }
  return c;
}

}  // namespace

TEST_CASE("open neighborhoods") {
  CHECK(edges_of(open_neighborhood_hypergraph(star(3))) ==
        std::vector<std::vector<Vertex>>{{1, 2, 3}, {0}, {0}, {0}});
  CHECK(edges_of(open_neighborhood_hypergraph(complete_graph(3))) ==
        std::vector<std::vector<Vertex>>{{1, 2}, {0, 2}, {0, 1}});

  auto h = open_neighborhood_hypergraph(subdivided_complete(4));
  CHECK(h.num_vertices() == 10);
  CHECK(h.num_edges() == 10);
  for (Vertex v = 0; v < 10; ++v) CHECK(h.edge(v).size() == (v < 4 ? 3u : 2u));

  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_WITH_AS(open_neighborhood_hypergraph(g), doctest::Contains("vertex 2"), InvalidInput);
}

TEST_CASE("closed neighborhoods") {
  CHECK(edges_of(closed_neighborhood_hypergraph(star(3))) ==
        std::vector<std::vector<Vertex>>{{0, 1, 2, 3}, {0, 1}, {0, 2}, {0, 3}});
  CHECK(edges_of(closed_neighborhood_hypergraph(path_graph(2))) ==
        std::vector<std::vector<Vertex>>{{0, 1}, {0, 1}});
  CHECK(edges_of(closed_neighborhood_hypergraph(path_graph(3))) ==
        std::vector<std::vector<Vertex>>{{0, 1}, {0, 1, 2}, {1, 2}});
}

TEST_CASE("verify") {
  Hypergraph pair(2, {{0, 1}});
  auto r = verify(pair, coloring({1, 1}), Mode::Full);
  CHECK_FALSE(r.ok);
  CHECK(r.violated_edges == std::vector<std::size_t>{0});

  CHECK(verify(closed_neighborhood_hypergraph(star(3)), coloring({1, 2, 2, 2}), Mode::Full).ok);
  CHECK(verify(open_neighborhood_hypergraph(subdivided_biclique(2, 4)), prop3_cfon3_coloring(2, 4), Mode::Full).ok);

  SUBCASE("uncolored vertices neither witness nor block") {
    Hypergraph h(3, {{0, 1, 2}});
    auto c = coloring({5, -1, -1});
    CHECK(verify(h, c, Mode::Partial).ok);
    CHECK(verify(h, c, Mode::Partial).witness[0] == Vertex{0});
    auto full = verify(h, c, Mode::Full);
    CHECK_FALSE(full.ok);
    CHECK(full.uncolored == std::vector<Vertex>{1, 2});
    CHECK_FALSE(verify(h, coloring({-1, -1, -1}), Mode::Partial).ok);
  }

  SUBCASE("list compliance") {
    Hypergraph h(2, {{0, 1}});
    ListAssignment lists({{1, 2}, {3}});
    auto r2 = verify(h, coloring({1, 4}), Mode::Full, lists);
    CHECK_FALSE(r2.ok);
    CHECK(r2.list_ok == false);
    CHECK(r2.list_violations == std::vector<Vertex>{1});
    CHECK(verify(h, coloring({2, 3}), Mode::Full, lists).ok);
  }

  SUBCASE("agrees with an independent checker and is pure") {
    Gen gen(11);
    for (int trial = 0; trial < 300; ++trial) {
      auto h = gen.hypergraph(gen.uniform(1, 8), gen.uniform(1, 8), 5);
      PartialColoring c(h.num_vertices());
      for (Vertex v = 0; v < h.num_vertices(); ++v)
        if (gen.uniform(0, 3)) c.set(v, gen.uniform(0, 2));
      auto a = verify(h, c, Mode::Partial);
      CHECK(a.ok == cfc::testing::all_edges_ok(h, cfc::testing::as_ints(c)));
      auto b = verify(h, c, Mode::Partial);
      CHECK(a.witness == b.witness);
      CHECK(a.violated_edges == b.violated_edges);
    }
  }
}

TEST_CASE("lift partial to full") {
  Hypergraph h(3, {{0, 1, 2}});
  auto total = coloring({1, 2, 1});
  CHECK(lift_partial_to_full(h, total) == total);
  auto lifted = lift_partial_to_full(h, coloring({1, -1, -1}));
  CHECK(lifted == coloring({1, 2, 2}));
  CHECK(verify(h, lifted, Mode::Full).witness[0] == Vertex{0});
  CHECK_THROWS_AS(lift_partial_to_full(Hypergraph(2, {{0, 1}}), coloring({1, 1})), InvalidInput);

  Gen gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto h2 = gen.hypergraph(gen.uniform(1, 10), gen.uniform(1, 10), 6);
    auto lists = ListAssignment::uniform(h2.num_vertices(), stats(h2).max_degree + 1);
    auto partial = unique_max_list_color(h2, lists, Mode::Partial);
    REQUIRE(verify(h2, partial, Mode::Partial).ok);
    auto full = lift_partial_to_full(h2, partial);
    CHECK(verify(h2, full, Mode::Full).ok);
    std::set<Color> fresh;
    for (Vertex v = 0; v < full.size(); ++v) {
      if (partial.is_colored(v))
        CHECK(full[v] == partial[v]);
      else
        fresh.insert(*full[v]);
    }
    CHECK(fresh.size() <= 1);
    if (!fresh.empty() && partial.max_color()) CHECK(*fresh.begin() > *partial.max_color());
  }
}

TEST_CASE("palette partition") {
  const std::size_t n = 16;
  CHECK(partition_list_size(n, 2, 2) == 50);
  auto lists = cfc::random_lists(n, 50, 120, 3);
  std::vector<std::size_t> targets(n);
  for (Vertex v = 0; v < n; ++v) targets[v] = v % 2;
  auto p = palette_partition(lists, 2, 2, targets, 9);
  CHECK(p.window_low() == 5);
  CHECK(p.window_high() == 45);
  for (Vertex v = 0; v < n; ++v) {
    CHECK(p.sublists[v].size() >= 5);
    CHECK(p.sublists[v].size() <= 45);
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (targets[u] != targets[v])
        for (Color c : p.sublists[u])
          CHECK_FALSE(std::binary_search(p.sublists[v].begin(), p.sublists[v].end(), c));

  auto again = palette_partition(lists, 2, 2, targets, 9);
  CHECK(again.parts == p.parts);
  CHECK(again.sublists == p.sublists);

  SUBCASE("identical lists with one target give identical sublists") {
    std::vector<Color> l(partition_list_size(2, 1, 2));
    for (std::size_t i = 0; i < l.size(); ++i) l[i] = 3 * i;
    auto q = palette_partition(ListAssignment({l, l}), 1, 2, {1, 1}, 4);
    CHECK(q.sublists[0] == q.sublists[1]);
  }

  SUBCASE("rejections") {
    CHECK_THROWS_WITH_AS(palette_partition(ListAssignment::uniform(16, 49), 2, 2, targets, 1),
                         doctest::Contains("50"), InvalidInput);
    CHECK_THROWS_AS(palette_partition(lists, 2, 1, targets, 1), InvalidInput);
    std::vector<std::size_t> bad(n, 2);
    CHECK_THROWS_AS(palette_partition(lists, 2, 2, bad, 1), InvalidInput);
    CHECK_THROWS_AS(palette_partition(lists, 2, 2, targets, 1, 0), BudgetExhausted);
  }
}

TEST_CASE("stats") {
  auto s = stats(open_neighborhood_hypergraph(star(3)));
  CHECK(s.m == 4);
  CHECK(s.max_degree == 3);
  // {0} meets the two other {0} edges; {1,2,3} meets none.
  CHECK(s.overlap == 2);
  CHECK(s.min_edge == 1);
  CHECK(s.max_edge == 3);

  Gen gen(8);
  for (int trial = 0; trial < 100; ++trial) {
    auto h = gen.hypergraph(gen.uniform(1, 12), gen.uniform(1, 10), 5);
    std::size_t overlap = 0;
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      std::size_t k = 0;
      for (std::size_t f = 0; f < h.num_edges(); ++f) {
        if (f == e) continue;
        std::vector<Vertex> common;
        std::set_intersection(h.edge(e).begin(), h.edge(e).end(), h.edge(f).begin(), h.edge(f).end(),
                              std::back_inserter(common));
        k += !common.empty();
      }
      overlap = std::max(overlap, k);
    }
    CHECK(stats(h).overlap == overlap);
  }
}

TEST_CASE("claw number") {
  CHECK(claw_number(complete_graph(3)) == 1);
  CHECK(claw_number(star(3)) == 3);
  CHECK(claw_number(Graph(4)) == 0);
  CHECK(claw_number(cycle_graph(5)) == 2);

  // Brute force: largest independent subset of some neighborhood.
  Gen gen(21);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = gen.graph(gen.uniform(1, 9), 0.4);
    std::size_t best = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      auto nb = g.neighbors(v);
      for (std::uint32_t mask = 0; mask < (1u << nb.size()); ++mask) {
        bool independent = true;
        for (std::size_t i = 0; i < nb.size() && independent; ++i)
          for (std::size_t j = i + 1; j < nb.size() && independent; ++j)
            if ((mask >> i & 1) && (mask >> j & 1) && g.has_edge(nb[i], nb[j])) independent = false;
        if (independent) best = std::max<std::size_t>(best, __builtin_popcount(mask));
      }
    }
    CHECK(claw_number(g) == best);
  }
}

TEST_CASE("maximal independent set") {
  Gen gen(31);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = gen.graph(gen.uniform(1, 30), 0.2);
    auto a = maximal_independent_set(g, trial);
    CHECK(a == maximal_independent_set(g, trial));
    std::vector<char> in(g.num_vertices(), 0);
    for (Vertex v : a) in[v] = 1;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      bool touches = in[v];
      for (Vertex w : g.neighbors(v)) {
        CHECK_FALSE((in[v] && in[w]));
        touches = touches || in[w];
      }
      CHECK(touches);
    }
  }
}

TEST_CASE("greedy classes") {
  Gen gen(41);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = gen.graph(gen.uniform(1, 25), 0.3);
    std::vector<Vertex> order(g.num_vertices());
    for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), gen.rng);
    auto classes = greedy_proper_color(g, order);
    std::vector<std::size_t> cls(g.num_vertices());
    std::size_t total = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      total += classes[i].size();
      for (Vertex v : classes[i]) cls[v] = i;
    }
    CHECK(total == g.num_vertices());
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (Vertex v : classes[i]) {
        std::set<std::size_t> seen;
        for (Vertex w : g.neighbors(v)) {
          CHECK(cls[w] != i);
          seen.insert(cls[w]);
        }
        for (std::size_t j = 0; j < i; ++j) CHECK(seen.count(j));
      }
  }
}

TEST_CASE("proper list colorings are closed-neighborhood valid") {
  Gen gen(51);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = gen.graph(gen.uniform(2, 9), 0.4);
    std::vector<std::size_t> sizes(g.num_vertices(), 3);
    auto lists = gen.lists(sizes, 5);
    auto c = graph_list_color(g, lists);
    if (!c) continue;
    CHECK(verify(closed_neighborhood_hypergraph(g), *c, Mode::Full, lists).ok);
  }
}
