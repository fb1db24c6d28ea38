#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cfc {

using Vertex = std::size_t;
using Color = std::uint64_t;

/// Whether uncolored vertices are allowed (CF* colorings) or every vertex
/// must receive a color.
enum class Mode { Partial, Full };

const char* to_string(Mode mode);
Mode mode_from_string(const std::string& text);

/// Rejected input: violated precondition or malformed data.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A randomized procedure ran out of its retry/resample budget.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(const std::string& what, std::size_t attempts)
      : std::runtime_error(what), attempts_(attempts) {}
  std::size_t attempts() const { return attempts_; }

 private:
  std::size_t attempts_;
};

/// Failure inside one stage of a composite colorer; `stage()` is the tag
/// ("H1", "H2", ...).
class StageFailure : public std::runtime_error {
 public:
  StageFailure(std::string stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

/// Vertices 0..n-1 and a sequence of non-empty hyperedges. Each hyperedge is
/// stored sorted and without duplicates; hyperedges may repeat.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::size_t n, std::vector<std::vector<Vertex>> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Vertex> edge(std::size_t e) const { return edges_[e]; }
  const std::vector<std::vector<Vertex>>& edges() const { return edges_; }

  /// For each vertex, the indices of the hyperedges containing it.
  std::vector<std::vector<std::size_t>> incidence() const;
  std::vector<std::size_t> degrees() const;

  bool operator==(const Hypergraph&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Vertex>> edges_;
};

/// Simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  explicit Graph(std::size_t n = 0) : adj_(n) {}
  Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  /// Adds {u,v}; duplicates are ignored, loops and out-of-range are rejected.
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const;
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::size_t max_degree() const;
  std::size_t min_degree() const;

  /// Edges {u,v} with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edge_list() const;

  /// Subgraph induced by `keep`; vertex keep[i] becomes i.
  Graph induced(std::span<const Vertex> keep) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
};

/// Per-vertex sets of admissible colors; each list is sorted, duplicate-free
/// and non-empty.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(std::vector<std::vector<Color>> lists);

  /// Every vertex receives {0, ..., k-1}.
  static ListAssignment uniform(std::size_t n, std::size_t k);

  std::size_t size() const { return lists_.size(); }
  std::span<const Color> operator[](Vertex v) const { return lists_[v]; }
  const std::vector<std::vector<Color>>& lists() const { return lists_; }
  bool contains(Vertex v, Color c) const;

  /// Union of all lists, ascending.
  std::vector<Color> palette() const;
  std::size_t min_size() const;
  std::size_t max_size() const;
  /// k when every list has exactly k colors.
  std::optional<std::size_t> uniform_size() const;

  bool operator==(const ListAssignment&) const = default;

 private:
  std::vector<std::vector<Color>> lists_;
};

/// Partial map vertex -> color; uncolored is a first-class state.
class PartialColoring {
 public:
  explicit PartialColoring(std::size_t n = 0) : colors_(n) {}

  std::size_t size() const { return colors_.size(); }
  std::optional<Color> operator[](Vertex v) const { return colors_[v]; }
  bool is_colored(Vertex v) const { return colors_[v].has_value(); }
  void set(Vertex v, Color c) { colors_[v] = c; }
  void clear(Vertex v) { colors_[v].reset(); }

  std::size_t num_colored() const;
  bool is_total() const { return num_colored() == colors_.size(); }
  std::size_t num_distinct_colors() const;
  std::optional<Color> max_color() const;

  bool operator==(const PartialColoring&) const = default;

 private:
  std::vector<std::optional<Color>> colors_;
};

/// Natural-log ceiling used throughout: ceil(ln n) for n >= 2, 0 for n <= 1.
std::size_t ceil_ln(std::size_t n);

}  // namespace cfc
