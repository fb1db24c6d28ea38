#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cfc/composite.hpp"
#include "cfc/lll.hpp"
#include "cfc/types.hpp"

namespace cfc {

// Algorithm names:
//   graph:      cfcn-general cfon-claw min-degree-on min-degree-cn dense-on dense-cn
//   hypergraph: pach-tardos near-uniform list-cf

struct RunConfig {
  ParamMode mode = ParamMode::Desk;
  std::uint64_t seed = 0;
  /// cfcn-general list constant; defaults to the instance minimum.
  std::optional<std::size_t> K;
  /// pach-tardos t; defaults to 2 when every edge has 3+ vertices, else 1.
  std::optional<std::size_t> t;
  RoundOptions rounds;
  ClawOptions claw;
  DenseOptions dense;
  /// near-uniform desk list size = list_factor * largest edge.
  std::size_t list_factor = 32;
};

struct RunOutput {
  PartialColoring coloring;
  /// What the coloring must verify against, and in which mode.
  Hypergraph target;
  Mode mode = Mode::Partial;
  std::size_t restarts = 0;
  std::size_t resamples = 0;
  /// Named counts (part sizes, stage color counts).
  std::vector<std::pair<std::string, std::size_t>> summary;
  std::vector<std::string> warnings;
  /// Per-attempt defects of the randomized stage, when there is one.
  std::vector<AttemptDiagnostics> diagnostics;
};

bool is_graph_algorithm(const std::string& algo);
bool is_hypergraph_algorithm(const std::string& algo);

/// List length the algorithm needs on this instance.
std::size_t required_list_size(const std::string& algo, const Graph& g, const RunConfig& cfg);
std::size_t required_list_size(const std::string& algo, const Hypergraph& h, const RunConfig& cfg);

RunOutput run_algorithm(const std::string& algo, const Graph& g, const ListAssignment& lists,
                        const RunConfig& cfg);
RunOutput run_algorithm(const std::string& algo, const Hypergraph& h, const ListAssignment& lists,
                        const RunConfig& cfg);

struct RunRecord {
  std::string instance;
  std::string algorithm;
  std::string mode;
  std::uint64_t seed = 0;
  std::string params;
  /// ok, fail or indeterminate.
  std::string outcome;
  std::size_t colors = 0;
  std::size_t restarts = 0;
  std::size_t resamples = 0;
  bool verified = false;
  double wall_ms = 0;
  std::string note;
};

/// One `key=value` block of a plan file.
struct PlanBlock {
  std::size_t line = 0;
  std::map<std::string, std::string> values;
};

/// Blocks are separated by blank lines; `#` starts a comment line.
std::vector<PlanBlock> parse_plan(std::istream& in);

/// Rows in plan order: block, size, algorithm, seed. `jobs` > 1 runs rows on
/// worker threads without changing the order.
std::vector<RunRecord> run_plan(const std::vector<PlanBlock>& plan, std::size_t jobs = 1);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const RunRecord& r);

}  // namespace cfc
