#include <doctest.h>

#include <cmath>

#include "cfc/core.hpp"
#include "cfc/generators.hpp"
#include "cfc/oracle.hpp"
#include "support.hpp"

using namespace cfc;
using cfc::testing::Gen;

TEST_CASE("chi on small examples") {
  Hypergraph h(3, {{0, 1, 2}});
  CHECK(*chi_cf(h, Mode::Full).value == 2);
  CHECK(*chi_cf(h, Mode::Partial).value == 1);
  CHECK(*chi_on(subdivided_complete(4), Mode::Full).value == 4);
  CHECK(*chi_cn(subdivided_complete(4), Mode::Full).value == 2);
  CHECK(*chi_cf(Hypergraph(0, {}), Mode::Full).value == 0);
  CHECK(*chi_cf(Hypergraph(2, {}), Mode::Partial).value == 0);

  auto r = chi_cf(h, Mode::Full);
  REQUIRE(r.witness);
  CHECK(verify(h, *r.witness, Mode::Full).ok);
}

TEST_CASE("interval hypergraph chi, frozen from brute force") {
  // Brute force gives 2, 3, 4 for n = 2, 4, 8.
  const std::size_t frozen[] = {2, 3, 4};
  std::size_t i = 0;
  for (std::size_t n : {2, 4, 8}) {
    auto h = discrete_interval_hypergraph(n);
    CHECK(*chi_cf(h, Mode::Full).value == frozen[i]);
    if (n <= 4) CHECK(cfc::testing::brute_chi(h, Mode::Full) == frozen[i]);
    CHECK(frozen[i] == static_cast<std::size_t>(std::floor(std::log2(n))) + 1);
    ++i;
  }
}

TEST_CASE("chi agrees with brute force") {
  Gen gen(101);
  for (int trial = 0; trial < 120; ++trial) {
    auto h = gen.hypergraph(gen.uniform(1, 7), gen.uniform(1, 9), 5);
    for (Mode mode : {Mode::Full, Mode::Partial}) {
      auto r = chi_cf(h, mode);
      REQUIRE(r.value);
      CHECK(*r.value == cfc::testing::brute_chi(h, mode));
      CHECK(verify(h, *r.witness, mode).ok);
    }
  }
}

TEST_CASE("symmetry breaking never changes the answer") {
  Gen gen(102);
  for (int trial = 0; trial < 80; ++trial) {
    auto h = gen.hypergraph(gen.uniform(1, 6), gen.uniform(1, 8), 4);
    for (Mode mode : {Mode::Full, Mode::Partial})
      CHECK(*chi_cf(h, mode).value == *chi_cf(h, mode, {}, false).value);
  }
}

TEST_CASE("partial and full chi differ by at most one") {
  Gen gen(103);
  for (int trial = 0; trial < 80; ++trial) {
    auto h = gen.hypergraph(gen.uniform(1, 10), gen.uniform(1, 10), 6);
    auto p = *chi_cf(h, Mode::Partial).value;
    auto f = *chi_cf(h, Mode::Full).value;
    CHECK(p <= f);
    CHECK(f <= p + 1);
  }
}

TEST_CASE("budgets yield indeterminate, never a wrong number") {
  auto h = open_neighborhood_hypergraph(subdivided_complete(5));
  auto r = chi_cf(h, Mode::Full, {3, 0, 0});
  CHECK_FALSE(r.value);
  CHECK(r.lower_bound <= 5);

  auto l = list_cf_color(h, ListAssignment::uniform(h.num_vertices(), 2), Mode::Full, {1, 0, 0}, false);
  CHECK(l.verdict == Verdict::Indeterminate);
  CHECK_FALSE(l.coloring);
}

TEST_CASE("list coloring") {
  Hypergraph pair(2, {{0, 1}});
  ListAssignment same({{1}, {1}});
  CHECK(list_cf_color(pair, same, Mode::Full).verdict == Verdict::Unsat);
  auto p = list_cf_color(pair, same, Mode::Partial);
  REQUIRE(p.verdict == Verdict::Sat);
  CHECK(p.coloring->num_colored() == 1);

  SUBCASE("agrees with brute force") {
    Gen gen(104);
    int sat = 0, unsat = 0;
    for (int trial = 0; trial < 200; ++trial) {
      auto h = gen.hypergraph(gen.uniform(1, 6), gen.uniform(1, 7), 4);
      std::vector<std::size_t> sizes(h.num_vertices());
      for (auto& s : sizes) s = gen.uniform(1, 2);
      auto lists = gen.lists(sizes, 3);
      for (Mode mode : {Mode::Full, Mode::Partial}) {
        auto r = list_cf_color(h, lists, mode);
        REQUIRE(r.verdict != Verdict::Indeterminate);
        bool expected = cfc::testing::brute_list_colorable(h, lists, mode);
        CHECK((r.verdict == Verdict::Sat) == expected);
        (expected ? sat : unsat)++;
        if (r.coloring) CHECK(verify(h, *r.coloring, mode, lists).ok);
      }
    }
    CHECK(sat > 20);
    CHECK(unsat > 20);
  }

  SUBCASE("lists of size degree+1 always succeed") {
    Gen gen(105);
    for (int trial = 0; trial < 100; ++trial) {
      auto h = gen.hypergraph(gen.uniform(3, 14), gen.uniform(3, 12), 6);
      auto d = stats(h).max_degree;
      auto lists = gen.lists(std::vector<std::size_t>(h.num_vertices(), d + 1), 3 * d + 3);
      for (Mode mode : {Mode::Full, Mode::Partial}) {
        auto r = list_cf_color(h, lists, mode);
        REQUIRE(r.verdict == Verdict::Sat);
        CHECK(verify(h, *r.coloring, mode, lists).ok);
        auto search = list_cf_color(h, lists, mode, {}, false);
        CHECK(search.verdict == Verdict::Sat);
      }
    }
  }
}

TEST_CASE("unique-maximum colorings") {
  Gen gen(106);
  for (int trial = 0; trial < 100; ++trial) {
    auto h = gen.hypergraph(gen.uniform(2, 12), gen.uniform(1, 10), 5);
    auto degrees = h.degrees();
    std::vector<std::size_t> sizes(h.num_vertices());
    for (Vertex v = 0; v < sizes.size(); ++v) sizes[v] = degrees[v] + 1;
    auto lists = gen.lists(sizes, 20);
    auto c = unique_max_list_color(h, lists, Mode::Full);
    CHECK(verify(h, c, Mode::Full, lists).ok);
    for (const auto& e : h.edges()) {
      Color top = 0;
      int count = 0;
      for (Vertex v : e) top = std::max(top, *c[v]);
      for (Vertex v : e) count += *c[v] == top;
      CHECK(count == 1);
    }
  }
  CHECK_THROWS_AS(unique_max_list_color(Hypergraph(2, {{0, 1}}), ListAssignment({{1}, {2}}), Mode::Full),
                  InvalidInput);
}

TEST_CASE("choice probes") {
  auto star_cn = closed_neighborhood_hypergraph(star(3));
  CHECK(choice_probe(star_cn, 2, Mode::Full).verdict == ProbeVerdict::Choosable);
  auto one = choice_probe(star_cn, 1, Mode::Full);
  REQUIRE(one.verdict == ProbeVerdict::Counterexample);
  CHECK(list_cf_color(star_cn, *one.counterexample, Mode::Full).verdict == Verdict::Unsat);
  CHECK(one.counterexample->uniform_size() == 1);

  auto capped = choice_probe(star_cn, 2, Mode::Full, {0, 3, 0});
  CHECK(capped.verdict == ProbeVerdict::Indeterminate);
  CHECK(capped.palette == 3);
  CHECK(choice_probe(star_cn, 2, Mode::Full, {5, 0, 0}).verdict == ProbeVerdict::Indeterminate);
}

TEST_CASE("graph choice probes") {
  auto k2 = graph_choice_probe(complete_graph(2), 1);
  REQUIRE(k2.verdict == ProbeVerdict::Counterexample);
  CHECK((*k2.counterexample)[0][0] == (*k2.counterexample)[1][0]);
  CHECK(graph_choice_probe(cycle_graph(4), 2).verdict == ProbeVerdict::Choosable);
  auto k24 = graph_choice_probe(complete_bipartite(2, 4), 2);
  REQUIRE(k24.verdict == ProbeVerdict::Counterexample);
  CHECK_FALSE(graph_list_color(complete_bipartite(2, 4), *k24.counterexample));
  CHECK(graph_choice_probe(complete_graph(3), 2).verdict == ProbeVerdict::Counterexample);
  CHECK(chromatic_number(cycle_graph(5)) == 3);
  CHECK(chromatic_number(complete_graph(4)) == 4);
}

TEST_CASE("chi <= ch <= chi ln n + 1 where probes finish") {
  Gen gen(107);
  int checked = 0;
  for (int trial = 0; trial < 25; ++trial) {
    auto h = gen.hypergraph(gen.uniform(2, 5), gen.uniform(1, 4), 3);
    for (Mode mode : {Mode::Partial, Mode::Full}) {
      auto chi = *chi_cf(h, mode).value;
      std::optional<std::size_t> ch;
      for (std::size_t k = 1; k <= 3 && !ch; ++k) {
        auto r = choice_probe(h, k, mode, {200000, 0, 5});
        if (r.verdict == ProbeVerdict::Indeterminate) break;
        if (r.verdict == ProbeVerdict::Choosable) ch = k;
      }
      if (!ch) continue;
      ++checked;
      CHECK(chi <= *ch);
      CHECK(static_cast<double>(*ch) <= chi * std::log(static_cast<double>(h.num_vertices())) + 1 + 1e-9);
    }
  }
  CHECK(checked > 10);
}
