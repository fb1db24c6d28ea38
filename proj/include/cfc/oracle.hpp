#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "cfc/types.hpp"

namespace cfc {

/// Caps for the exact searches. Zero means "no cap" for every field.
struct OracleBudget {
  std::uint64_t max_nodes = 0;
  /// Largest palette a choice probe may enumerate over.
  std::size_t max_palette = 0;
  double max_seconds = 0;
};

/// Three-valued answer; never convert Indeterminate to a boolean.
enum class Verdict { Sat, Unsat, Indeterminate };
const char* to_string(Verdict v);

struct ChiResult {
  /// Exact value, or nothing when the budget ran out.
  std::optional<std::size_t> value;
  /// Proven lower bound (equals *value when known).
  std::size_t lower_bound = 0;
  /// Optimal coloring (colors 0..value-1) when known.
  std::optional<PartialColoring> witness;
  std::uint64_t nodes = 0;
};

/// Minimum number of colors of a CF coloring (mode Full) or CF* coloring
/// (mode Partial) of h. `symmetry` disables color-symmetry breaking when
/// false (reference mode for tests).
ChiResult chi_cf(const Hypergraph& h, Mode mode, const OracleBudget& budget = {},
                 bool symmetry = true);
ChiResult chi_on(const Graph& g, Mode mode, const OracleBudget& budget = {});
ChiResult chi_cn(const Graph& g, Mode mode, const OracleBudget& budget = {});

struct ListColorResult {
  Verdict verdict = Verdict::Indeterminate;
  std::optional<PartialColoring> coloring;
  std::uint64_t nodes = 0;
  /// True when the unique-maximum greedy produced the coloring.
  bool greedy = false;
};

/// Decides whether h has a list-compliant CF (Full) / CF* (Partial)
/// coloring. When every list has at least d_H(v)+1 colors a unique-maximum
/// greedy answers directly; otherwise (or with `use_greedy` off) the exact
/// search runs.
ListColorResult list_cf_color(const Hypergraph& h, const ListAssignment& lists, Mode mode,
                              const OracleBudget& budget = {}, bool use_greedy = true);

/// Unique-maximum list coloring for lists with |L_v| >= d_H(v) + 1:
/// in every edge the largest color present occurs exactly once. In partial
/// mode vertices outside every edge stay uncolored. Throws InvalidInput if
/// a list is too short.
PartialColoring unique_max_list_color(const Hypergraph& h, const ListAssignment& lists, Mode mode);

enum class ProbeVerdict { Choosable, Counterexample, Indeterminate };
const char* to_string(ProbeVerdict v);

struct ProbeResult {
  ProbeVerdict verdict = ProbeVerdict::Indeterminate;
  /// A k-assignment with no valid coloring, when verdict is Counterexample.
  std::optional<ListAssignment> counterexample;
  /// Search nodes spent in the enumeration (list choices).
  std::uint64_t explored = 0;
  /// Palette the enumeration ran over: min(k n, max_palette).
  std::size_t palette = 0;
};

/// Is h k-CF-choosable (Full) / k-CF*-choosable (Partial)? Enumerates
/// k-assignments over a palette of k n colors up to relabeling; answers
/// Choosable only when the enumeration over the uncapped palette finished.
ProbeResult choice_probe(const Hypergraph& h, std::size_t k, Mode mode,
                         const OracleBudget& budget = {});

/// Proper list coloring of g from `lists`, or nothing if none exists.
/// Throws BudgetExhausted when the node cap is hit.
std::optional<PartialColoring> graph_list_color(const Graph& g, const ListAssignment& lists,
                                                std::uint64_t max_nodes = 0);

/// Chromatic number of g (exact, small graphs).
std::size_t chromatic_number(const Graph& g);

/// Is g k-choosable for proper coloring? Same verdict shape as choice_probe.
ProbeResult graph_choice_probe(const Graph& g, std::size_t k, const OracleBudget& budget = {});

}  // namespace cfc
