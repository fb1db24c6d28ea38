#include "cfc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cf_search.hpp"
#include "cfc/core.hpp"

namespace cfc {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Sat:
      return "SAT";
    case Verdict::Unsat:
      return "UNSAT";
    case Verdict::Indeterminate:
      break;
  }
  return "INDETERMINATE";
}

const char* to_string(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::Choosable:
      return "CHOOSABLE";
    case ProbeVerdict::Counterexample:
      return "COUNTEREXAMPLE";
    case ProbeVerdict::Indeterminate:
      break;
  }
  return "INDETERMINATE";
}

namespace {

using Clock = std::chrono::steady_clock;

// Node and wall-clock allowance shared by the searches of one oracle call.
class Allowance {
 public:
  explicit Allowance(const OracleBudget& b) : max_nodes_(b.max_nodes) {
    if (b.max_seconds > 0)
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(b.max_seconds));
  }

  void fill(detail::SearchSpec& spec) const {
    spec.deadline = deadline_;
    spec.max_nodes = remaining();
  }
  void charge(std::uint64_t nodes) { used_ += nodes; }
  bool exhausted() const {
    return (max_nodes_ && used_ >= max_nodes_) || (deadline_ && Clock::now() > *deadline_);
  }
  std::uint64_t used() const { return used_; }
  /// Node cap for the next search; 0 = uncapped.
  std::uint64_t remaining() const {
    return max_nodes_ ? std::max<std::uint64_t>(1, max_nodes_ - std::min(used_, max_nodes_)) : 0;
  }
  std::optional<Clock::time_point> deadline() const { return deadline_; }

 private:
  std::uint64_t max_nodes_;
  std::uint64_t used_ = 0;
  std::optional<Clock::time_point> deadline_;
};

PartialColoring to_coloring(const std::vector<std::optional<std::size_t>>& assignment,
                            const std::vector<Color>* palette = nullptr) {
  PartialColoring c(assignment.size());
  for (Vertex v = 0; v < assignment.size(); ++v)
    if (assignment[v]) c.set(v, palette ? (*palette)[*assignment[v]] : *assignment[v]);
  return c;
}

}  // namespace

ChiResult chi_cf(const Hypergraph& h, Mode mode, const OracleBudget& budget, bool symmetry) {
  ChiResult result;
  const std::size_t n = h.num_vertices();
  std::size_t k = 1;
  if (mode == Mode::Partial && h.num_edges() == 0) k = 0;
  if (mode == Mode::Full && n == 0) k = 0;
  if (k == 0) {
    result.value = 0;
    result.witness = PartialColoring(n);
    return result;
  }
  Allowance allowance(budget);
  for (;; ++k) {
    result.lower_bound = k;
    detail::SearchSpec spec;
    spec.h = &h;
    spec.num_colors = k;
    spec.mode = mode;
    spec.symmetric = symmetry;
    allowance.fill(spec);
    auto out = detail::cf_search(spec);
    allowance.charge(out.nodes);
    result.nodes = allowance.used();
    if (out.verdict == Verdict::Indeterminate) return result;
    if (out.verdict == Verdict::Sat) {
      result.value = k;
      result.witness = to_coloring(out.assignment);
      return result;
    }
  }
}

ChiResult chi_on(const Graph& g, Mode mode, const OracleBudget& budget) {
  return chi_cf(open_neighborhood_hypergraph(g), mode, budget);
}

ChiResult chi_cn(const Graph& g, Mode mode, const OracleBudget& budget) {
  return chi_cf(closed_neighborhood_hypergraph(g), mode, budget);
}

PartialColoring unique_max_list_color(const Hypergraph& h, const ListAssignment& lists, Mode mode) {
  const std::size_t n = h.num_vertices();
  if (lists.size() != n) throw InvalidInput("list assignment size does not match hypergraph");
  auto inc = h.incidence();
  for (Vertex v = 0; v < n; ++v) {
    if (mode == Mode::Partial && inc[v].empty()) continue;
    if (lists[v].size() < inc[v].size() + 1) {
      throw InvalidInput("vertex " + std::to_string(v) + " has " + std::to_string(lists[v].size()) +
                         " colors but degree " + std::to_string(inc[v].size()));
    }
  }

  std::vector<std::pair<Color, Vertex>> by_color;
  for (Vertex v = 0; v < n; ++v)
    for (Color c : lists[v]) by_color.emplace_back(c, v);
  std::sort(by_color.begin(), by_color.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });

  PartialColoring out(n);
  std::vector<char> alive(h.num_edges(), 1);
  std::vector<std::size_t> live_degree(n);
  for (Vertex v = 0; v < n; ++v) live_degree[v] = inc[v].size();
  std::vector<char> hit(h.num_edges(), 0);
  std::vector<Vertex> chosen;

  for (std::size_t i = 0; i < by_color.size();) {
    const Color c = by_color[i].first;
    chosen.clear();
    for (; i < by_color.size() && by_color[i].first == c; ++i) {
      Vertex v = by_color[i].second;
      if (out.is_colored(v)) continue;
      if (mode == Mode::Partial && live_degree[v] == 0) continue;
      bool free = true;
      for (std::size_t e : inc[v])
        if (alive[e] && hit[e]) free = false;
      if (!free) continue;
      chosen.push_back(v);
      for (std::size_t e : inc[v])
        if (alive[e]) hit[e] = 1;
    }
    for (Vertex v : chosen) {
      out.set(v, c);
      for (std::size_t e : inc[v]) {
        if (!alive[e]) continue;
        alive[e] = 0;
        hit[e] = 0;
        for (Vertex u : h.edge(e)) --live_degree[u];
      }
    }
  }
  return out;
}

ListColorResult list_cf_color(const Hypergraph& h, const ListAssignment& lists, Mode mode,
                              const OracleBudget& budget, bool use_greedy) {
  const std::size_t n = h.num_vertices();
  if (lists.size() != n) throw InvalidInput("list assignment size does not match hypergraph");
  ListColorResult result;

  if (use_greedy) {
    auto deg = h.degrees();
    bool roomy = true;
    for (Vertex v = 0; v < n; ++v)
      if (lists[v].size() < deg[v] + 1) roomy = false;
    if (roomy) {
      auto coloring = unique_max_list_color(h, lists, mode);
      if (!verify(h, coloring, mode, lists).ok)
        throw std::logic_error("unique-maximum greedy produced an invalid coloring");
      result.verdict = Verdict::Sat;
      result.coloring = std::move(coloring);
      result.greedy = true;
      return result;
    }
  }

  const auto palette = lists.palette();
  detail::SearchSpec spec;
  spec.h = &h;
  spec.num_colors = palette.size();
  spec.mode = mode;
  spec.domains.resize(n);
  for (Vertex v = 0; v < n; ++v)
    for (Color c : lists[v])
      spec.domains[v].push_back(static_cast<std::size_t>(
          std::lower_bound(palette.begin(), palette.end(), c) - palette.begin()));
  Allowance(budget).fill(spec);
  auto out = detail::cf_search(spec);
  result.verdict = out.verdict;
  result.nodes = out.nodes;
  if (out.verdict == Verdict::Sat) result.coloring = to_coloring(out.assignment, &palette);
  return result;
}

namespace {

using Labels = std::vector<std::vector<std::size_t>>;

// Enumerates k-assignments up to color relabeling along a fixed vertex
// order: the i-th vertex takes j fresh labels plus k-j labels already seen.
// Hooks judge each prefix (unlisted vertices have empty label lists).
struct ProbeHooks {
  /// All vertices listed: is there a valid coloring?
  std::function<Verdict(const Labels&, std::size_t seen)> exact;
  /// Unsat means the prefix completed by private fresh lists is a
  /// counterexample.
  std::function<Verdict(const Labels&, std::size_t seen)> relaxed;
  /// Sat means every completion of the prefix is colorable.
  std::function<Verdict(const Labels&, std::size_t seen)> robust;
};

class ProbeEnumerator {
 public:
  ProbeEnumerator(std::vector<Vertex> order, std::size_t k, std::size_t palette, ProbeHooks hooks,
                  Allowance& allowance)
      : order_(std::move(order)),
        k_(k),
        palette_(palette),
        hooks_(std::move(hooks)),
        allowance_(allowance),
        labels_(order_.size()) {}

  enum class Outcome { Exhausted, Found, Aborted };

  // Iterative deepening over the prefix length: every prefix of length
  // `limit` gets the relaxation test before any longer prefix is built, so
  // shallow counterexamples surface without exhausting deep subtrees.
  Outcome run() {
    for (std::size_t limit = 0; limit <= order_.size(); ++limit) {
      bool open = false;
      Outcome outcome = visit(0, 0, limit, open);
      if (outcome != Outcome::Exhausted || !open) return outcome;
    }
    return Outcome::Exhausted;
  }
  const Labels& found() const { return found_; }
  std::size_t found_seen() const { return found_seen_; }
  std::uint64_t explored() const { return explored_; }

 private:
  Outcome visit(std::size_t depth, std::size_t seen, std::size_t limit, bool& open) {
    ++explored_;
    if (allowance_.exhausted()) return Outcome::Aborted;
    if (depth == order_.size()) {
      Verdict v = hooks_.exact(labels_, seen);
      if (v == Verdict::Unsat) return record(seen);
      return v == Verdict::Sat ? Outcome::Exhausted : Outcome::Aborted;
    }
    if (depth == limit) {
      Verdict relaxed = hooks_.relaxed(labels_, seen);
      if (relaxed == Verdict::Unsat) return record(seen);
      if (relaxed == Verdict::Indeterminate) return Outcome::Aborted;
    }
    Verdict robust = hooks_.robust(labels_, seen);
    if (robust == Verdict::Sat) return Outcome::Exhausted;
    if (robust == Verdict::Indeterminate) return Outcome::Aborted;
    if (depth == limit) {
      open = true;
      return Outcome::Exhausted;
    }

    auto& list = labels_[order_[depth]];
    for (std::size_t fresh = 0; fresh <= k_; ++fresh) {
      std::size_t old = k_ - fresh;
      if (old > seen || seen + fresh > palette_) continue;
      // Lexicographic walk over old-label subsets of size `old`.
      std::vector<std::size_t> pick(old);
      std::iota(pick.begin(), pick.end(), std::size_t{0});
      while (true) {
        list = pick;
        for (std::size_t j = 0; j < fresh; ++j) list.push_back(seen + j);
        Outcome sub = visit(depth + 1, seen + fresh, limit, open);
        if (sub != Outcome::Exhausted) return sub;
        std::size_t i = old;
        while (i > 0 && pick[i - 1] == seen - old + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < old; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    list.clear();
    return Outcome::Exhausted;
  }

  Outcome record(std::size_t seen) {
    found_ = labels_;
    found_seen_ = seen;
    return Outcome::Found;
  }

  std::vector<Vertex> order_;
  std::size_t k_, palette_;
  ProbeHooks hooks_;
  Allowance& allowance_;
  Labels labels_;
  Labels found_;
  std::size_t found_seen_ = 0;
  std::uint64_t explored_ = 0;
};

// Unlisted vertices receive k private colors each.
ListAssignment complete_with_fresh(const Labels& labels, std::size_t seen, std::size_t k) {
  std::vector<std::vector<Color>> lists(labels.size());
  Color next = seen;
  for (Vertex v = 0; v < labels.size(); ++v) {
    if (!labels[v].empty()) {
      lists[v].assign(labels[v].begin(), labels[v].end());
    } else {
      for (std::size_t j = 0; j < k; ++j) lists[v].push_back(next++);
    }
  }
  return ListAssignment(std::move(lists));
}

std::vector<Vertex> hitting_first_order(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  auto inc = h.incidence();
  std::vector<char> covered(h.num_edges(), 0), placed(n, 0);
  std::vector<Vertex> order;
  while (true) {
    std::size_t best = SIZE_MAX, best_gain = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      std::size_t gain = 0;
      for (std::size_t e : inc[v]) gain += !covered[e];
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    if (best == SIZE_MAX) break;
    placed[best] = 1;
    order.push_back(best);
    for (std::size_t e : inc[best]) covered[e] = 1;
  }
  for (Vertex v = 0; v < n; ++v)
    if (!placed[v]) order.push_back(v);
  return order;
}

std::vector<Vertex> degree_order(const std::vector<std::size_t>& deg) {
  std::vector<Vertex> order(deg.size());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
  return order;
}

ProbeResult finish_probe(ProbeEnumerator::Outcome outcome, const ProbeEnumerator& enumerator,
                         bool capped, std::size_t k, std::size_t palette) {
  ProbeResult result;
  result.explored = enumerator.explored();
  result.palette = palette;
  switch (outcome) {
    case ProbeEnumerator::Outcome::Found:
      result.verdict = ProbeVerdict::Counterexample;
      result.counterexample = complete_with_fresh(enumerator.found(), enumerator.found_seen(), k);
      break;
    case ProbeEnumerator::Outcome::Exhausted:
      result.verdict = capped ? ProbeVerdict::Indeterminate : ProbeVerdict::Choosable;
      break;
    case ProbeEnumerator::Outcome::Aborted:
      result.verdict = ProbeVerdict::Indeterminate;
      break;
  }
  return result;
}

std::size_t probe_palette(std::size_t k, std::size_t n, const OracleBudget& budget, bool& capped) {
  std::size_t full = k * n;
  std::size_t palette = budget.max_palette ? std::min(full, budget.max_palette) : full;
  capped = palette < full;
  return palette;
}

}  // namespace

ProbeResult choice_probe(const Hypergraph& h, std::size_t k, Mode mode, const OracleBudget& budget) {
  if (k == 0) throw InvalidInput("choice_probe needs k >= 1");
  const std::size_t n = h.num_vertices();
  bool capped = false;
  const std::size_t palette = probe_palette(k, n, budget, capped);
  Allowance allowance(budget);

  // Labels 0..seen-1 are real colors; index seen + v is the private color
  // of unlisted vertex v in the relaxation.
  auto run = [&](const Labels& labels, std::size_t seen, bool relax) {
    detail::SearchSpec spec;
    spec.h = &h;
    spec.mode = mode;
    spec.num_colors = seen + (relax ? n : 0);
    spec.domains.resize(n);
    if (!relax) spec.roles.assign(n, detail::Role::Listed);
    for (Vertex v = 0; v < n; ++v) {
      if (!labels[v].empty()) {
        spec.domains[v] = labels[v];
      } else if (relax) {
        spec.domains[v] = {seen + v};
      } else {
        spec.roles[v] = mode == Mode::Partial ? detail::Role::Absent : detail::Role::Adversarial;
      }
    }
    spec.adversary_budget = k - 1;
    allowance.fill(spec);
    auto out = detail::cf_search(spec);
    allowance.charge(out.nodes);
    return out.verdict;
  };

  ProbeHooks hooks;
  hooks.exact = [&](const Labels& labels, std::size_t seen) { return run(labels, seen, false); };
  hooks.relaxed = [&](const Labels& labels, std::size_t seen) { return run(labels, seen, true); };
  hooks.robust = [&](const Labels& labels, std::size_t seen) { return run(labels, seen, false); };

  auto order = mode == Mode::Partial ? hitting_first_order(h) : degree_order(h.degrees());
  ProbeEnumerator enumerator(order, k, palette, hooks, allowance);
  auto outcome = enumerator.run();
  auto result = finish_probe(outcome, enumerator, capped, k, palette);
  if (result.counterexample) {
    OracleBudget recheck;
    recheck.max_nodes = 1'000'000;
    auto check = list_cf_color(h, *result.counterexample, mode, recheck, false);
    if (check.verdict == Verdict::Sat)
      throw std::logic_error("choice_probe counterexample admits a coloring");
  }
  return result;
}

namespace {

// Backtracking proper list coloring over color indices; fewest remaining
// options first.
class ProperSearch {
 public:
  ProperSearch(const Graph& g, std::vector<std::vector<std::size_t>> domains, std::size_t colors,
               bool symmetric, std::uint64_t max_nodes, std::optional<Clock::time_point> deadline)
      : g_(g),
        domains_(std::move(domains)),
        colors_(colors),
        symmetric_(symmetric),
        max_nodes_(max_nodes),
        deadline_(deadline),
        color_(g.num_vertices(), SIZE_MAX) {}

  Verdict run() {
    Verdict v = solve(0, 0);
    return aborted_ ? Verdict::Indeterminate : v;
  }
  const std::vector<std::size_t>& colors() const { return color_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool available(Vertex v, std::size_t c) const {
    for (Vertex w : g_.neighbors(v))
      if (color_[w] == c) return false;
    return true;
  }

  Verdict solve(std::size_t done, std::size_t used) {
    ++nodes_;
    if ((max_nodes_ && nodes_ > max_nodes_) ||
        (deadline_ && (nodes_ & 1023) == 0 && Clock::now() > *deadline_))
      aborted_ = true;
    if (aborted_) return Verdict::Indeterminate;
    if (done == g_.num_vertices()) return Verdict::Sat;
    Vertex pick = SIZE_MAX;
    std::size_t fewest = SIZE_MAX;
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      if (color_[v] != SIZE_MAX) continue;
      std::size_t options = 0;
      for (std::size_t c : domains_[v]) options += available(v, c);
      if (options < fewest || (options == fewest && g_.degree(v) > g_.degree(pick))) {
        fewest = options;
        pick = v;
      }
    }
    if (fewest == 0) return Verdict::Unsat;
    for (std::size_t c : domains_[pick]) {
      if (!available(pick, c)) continue;
      if (symmetric_ && c > used) break;
      color_[pick] = c;
      Verdict v = solve(done + 1, std::max(used, c + 1));
      if (v != Verdict::Unsat) return v;
      color_[pick] = SIZE_MAX;
    }
    return Verdict::Unsat;
  }

  const Graph& g_;
  std::vector<std::vector<std::size_t>> domains_;
  std::size_t colors_;
  bool symmetric_;
  std::uint64_t max_nodes_;
  std::optional<Clock::time_point> deadline_;
  std::vector<std::size_t> color_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

std::optional<PartialColoring> graph_list_color(const Graph& g, const ListAssignment& lists,
                                                std::uint64_t max_nodes) {
  const std::size_t n = g.num_vertices();
  if (lists.size() != n) throw InvalidInput("list assignment size does not match graph");
  const auto palette = lists.palette();
  std::vector<std::vector<std::size_t>> domains(n);
  for (Vertex v = 0; v < n; ++v)
    for (Color c : lists[v])
      domains[v].push_back(static_cast<std::size_t>(
          std::lower_bound(palette.begin(), palette.end(), c) - palette.begin()));
  ProperSearch search(g, std::move(domains), palette.size(), false, max_nodes, std::nullopt);
  Verdict v = search.run();
  if (v == Verdict::Indeterminate)
    throw BudgetExhausted("graph_list_color: node budget exhausted", search.nodes());
  if (v == Verdict::Unsat) return std::nullopt;
  PartialColoring out(n);
  for (Vertex u = 0; u < n; ++u) out.set(u, palette[search.colors()[u]]);
  return out;
}

std::size_t chromatic_number(const Graph& g) {
  const std::size_t n = g.num_vertices();
  for (std::size_t k = n == 0 ? 0 : 1;; ++k) {
    std::vector<std::size_t> all(k);
    std::iota(all.begin(), all.end(), std::size_t{0});
    ProperSearch search(g, std::vector<std::vector<std::size_t>>(n, all), k, true, 0, std::nullopt);
    if (search.run() == Verdict::Sat) return k;
  }
}

ProbeResult graph_choice_probe(const Graph& g, std::size_t k, const OracleBudget& budget) {
  if (k == 0) throw InvalidInput("graph_choice_probe needs k >= 1");
  const std::size_t n = g.num_vertices();
  bool capped = false;
  const std::size_t palette = probe_palette(k, n, budget, capped);
  Allowance allowance(budget);

  // Listed vertices alone; unlisted ones never matter for the relaxation
  // (private colors) and are peeled for the robust check.
  auto listed_colorable = [&](const Labels& labels, std::size_t seen) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
      if (!labels[v].empty()) keep.push_back(v);
    Graph sub = g.induced(keep);
    std::vector<std::vector<std::size_t>> domains;
    for (Vertex v : keep) domains.push_back(labels[v]);
    ProperSearch search(sub, std::move(domains), seen, false, allowance.remaining(),
                        allowance.deadline());
    Verdict v = search.run();
    allowance.charge(search.nodes());
    return v;
  };

  ProbeHooks hooks;
  hooks.exact = listed_colorable;
  hooks.relaxed = listed_colorable;
  hooks.robust = [&](const Labels& labels, std::size_t seen) {
    std::vector<std::size_t> degree(n);
    std::vector<char> gone(n, 0);
    std::vector<Vertex> stack;
    for (Vertex v = 0; v < n; ++v) {
      degree[v] = g.degree(v);
      if (labels[v].empty() && degree[v] <= k - 1) {
        gone[v] = 1;
        stack.push_back(v);
      }
    }
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (--degree[w] <= k - 1 && labels[w].empty() && !gone[w]) {
          gone[w] = 1;
          stack.push_back(w);
        }
      }
    }
    for (Vertex v = 0; v < n; ++v)
      if (labels[v].empty() && !gone[v]) return Verdict::Unsat;
    return listed_colorable(labels, seen);
  };

  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  ProbeEnumerator enumerator(degree_order(deg), k, palette, hooks, allowance);
  auto outcome = enumerator.run();
  auto result = finish_probe(outcome, enumerator, capped, k, palette);
  if (result.counterexample && graph_list_color(g, *result.counterexample))
    throw std::logic_error("graph_choice_probe counterexample admits a coloring");
  return result;
}

}  // namespace cfc
