#include "cfc/types.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace cfc {

const char* to_string(Mode mode) { return mode == Mode::Partial ? "partial" : "full"; }

Mode mode_from_string(const std::string& text) {
  if (text == "partial") return Mode::Partial;
  if (text == "full") return Mode::Full;
  throw InvalidInput("unknown mode '" + text + "' (expected partial|full)");
}

Hypergraph::Hypergraph(std::size_t n, std::vector<std::vector<Vertex>> edges)
    : n_(n), edges_(std::move(edges)) {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto& edge = edges_[e];
    if (edge.empty()) throw InvalidInput("hyperedge " + std::to_string(e) + " is empty");
    std::sort(edge.begin(), edge.end());
    edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
    if (edge.back() >= n_) {
      throw InvalidInput("hyperedge " + std::to_string(e) + " contains vertex " +
                         std::to_string(edge.back()) + " >= n=" + std::to_string(n_));
    }
  }
}

std::vector<std::vector<std::size_t>> Hypergraph::incidence() const {
  std::vector<std::vector<std::size_t>> inc(n_);
  for (std::size_t e = 0; e < edges_.size(); ++e)
    for (Vertex v : edges_[e]) inc[v].push_back(e);
  return inc;
}

std::vector<std::size_t> Hypergraph::degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& edge : edges_)
    for (Vertex v : edge) ++deg[v];
  return deg;
}

Graph::Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) : adj_(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= adj_.size() || v >= adj_.size()) {
    throw InvalidInput("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} out of range for n=" + std::to_string(adj_.size()));
  }
  if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
  auto insert = [](std::vector<Vertex>& list, Vertex x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it == list.end() || *it != x) list.insert(it, x);
  };
  insert(adj_[u], v);
  insert(adj_[v], u);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::size_t Graph::num_edges() const {
  std::size_t total = 0;
  for (const auto& list : adj_) total += list.size();
  return total / 2;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& list : adj_) d = std::max(d, list.size());
  return d;
}

std::size_t Graph::min_degree() const {
  if (adj_.empty()) return 0;
  std::size_t d = adj_[0].size();
  for (const auto& list : adj_) d = std::min(d, list.size());
  return d;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edge_list() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<std::size_t> index(adj_.size(), SIZE_MAX);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = i;
  Graph sub(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (Vertex w : adj_[keep[i]])
      if (index[w] != SIZE_MAX && index[w] > i) sub.add_edge(i, index[w]);
  return sub;
}

ListAssignment::ListAssignment(std::vector<std::vector<Color>> lists) : lists_(std::move(lists)) {
  for (std::size_t v = 0; v < lists_.size(); ++v) {
    auto& list = lists_[v];
    if (list.empty()) throw InvalidInput("list of vertex " + std::to_string(v) + " is empty");
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

ListAssignment ListAssignment::uniform(std::size_t n, std::size_t k) {
  std::vector<Color> list(k);
  for (std::size_t i = 0; i < k; ++i) list[i] = i;
  return ListAssignment(std::vector<std::vector<Color>>(n, list));
}

bool ListAssignment::contains(Vertex v, Color c) const {
  return std::binary_search(lists_[v].begin(), lists_[v].end(), c);
}

std::vector<Color> ListAssignment::palette() const {
  std::vector<Color> all;
  for (const auto& list : lists_) all.insert(all.end(), list.begin(), list.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::size_t ListAssignment::min_size() const {
  std::size_t k = lists_.empty() ? 0 : SIZE_MAX;
  for (const auto& list : lists_) k = std::min(k, list.size());
  return k;
}

std::size_t ListAssignment::max_size() const {
  std::size_t k = 0;
  for (const auto& list : lists_) k = std::max(k, list.size());
  return k;
}

std::optional<std::size_t> ListAssignment::uniform_size() const {
  if (lists_.empty() || min_size() != max_size()) return std::nullopt;
  return min_size();
}

std::size_t PartialColoring::num_colored() const {
  return static_cast<std::size_t>(
      std::count_if(colors_.begin(), colors_.end(), [](const auto& c) { return c.has_value(); }));
}

std::size_t PartialColoring::num_distinct_colors() const {
  std::set<Color> seen;
  for (const auto& c : colors_)
    if (c) seen.insert(*c);
  return seen.size();
}

std::optional<Color> PartialColoring::max_color() const {
  std::optional<Color> best;
  for (const auto& c : colors_)
    if (c && (!best || *c > *best)) best = c;
  return best;
}

std::size_t ceil_ln(std::size_t n) {
  if (n <= 1) return 0;
  // ln n is irrational for n >= 2, so the floating ceiling is exact.
  return static_cast<std::size_t>(std::ceil(std::log(static_cast<double>(n))));
}

}  // namespace cfc
