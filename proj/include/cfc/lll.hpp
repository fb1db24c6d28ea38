#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cfc/types.hpp"

namespace cfc {

/// Paper mode keeps the proof constants verbatim; desk mode exposes them so
/// small instances can run.
enum class ParamMode { Paper, Desk };
const char* to_string(ParamMode mode);
ParamMode param_mode_from_string(const std::string& text);

/// Defects of one failed attempt.
struct AttemptDiagnostics {
  /// Edges with no uniquely colored vertex.
  std::size_t unwitnessed = 0;
  /// Edges (restricted to the colored core) still holding an uncolored vertex.
  std::size_t incomplete = 0;
  std::size_t resamples = 0;
};

/// Budget ran out; carries what every attempt left behind.
class ColoringFailure : public BudgetExhausted {
 public:
  ColoringFailure(const std::string& what, std::size_t attempts,
                  std::vector<AttemptDiagnostics> diagnostics, std::vector<std::size_t> violated)
      : BudgetExhausted(what, attempts),
        diagnostics_(std::move(diagnostics)),
        violated_(std::move(violated)) {}
  const std::vector<AttemptDiagnostics>& diagnostics() const { return diagnostics_; }
  /// Edges still violated by the last attempt.
  const std::vector<std::size_t>& violated_edges() const { return violated_; }

 private:
  std::vector<AttemptDiagnostics> diagnostics_;
  std::vector<std::size_t> violated_;
};

struct ColoringRun {
  PartialColoring coloring;
  /// Attempts used, counting the successful one.
  std::size_t attempts = 0;
  std::size_t resamples = 0;
  /// One entry per failed attempt, then the successful one.
  std::vector<AttemptDiagnostics> diagnostics;
  std::vector<std::string> warnings;
};

struct Trimmed {
  /// Edges f ∩ V' on the original vertex range.
  Hypergraph hypergraph;
  /// V': the union of the designated points, ascending.
  std::vector<Vertex> core;
};

/// Designates the 2t-1 smallest vertices of every edge and keeps their union.
/// Throws InvalidInput naming the first edge smaller than 2t-1.
Trimmed trim(const Hypergraph& h, std::size_t t);

struct PachTardosParams {
  std::size_t t = 1;
  /// Overlap bound; the hypergraph must satisfy stats(h).overlap <= gamma.
  std::size_t gamma = 0;
  double q = 0;
  /// Round cap T; also the list length the rounds index into.
  std::size_t rounds = 0;
  std::size_t restarts = 1000;
  ParamMode mode = ParamMode::Paper;

  /// q = 1/(30 t G^{1/t}), T = ceil(c_T t G^{1/t} ln(G+2)) with G = max(gamma,1).
  ///
  /// Uncolored-at-the-end bound: (1-q)^T <= exp(-qT) = (G+2)^{-c_T/30}, and
  /// this is <= 1/(20 G^3) iff c_T >= 30 (ln 20 + 3 ln G) / ln(G+2). The
  /// right side peaks at about 120.8 (G = 6) and tends to 90, so 121 works
  /// for every G >= 1.
  static PachTardosParams paper(std::size_t t, std::size_t gamma, double c_T = 121);
  /// Same shape with q multiplied by q_scale (capped at 1/2) and a free c_T.
  static PachTardosParams desk(std::size_t t, std::size_t gamma, double q_scale = 3,
                               double c_T = 10);
};

/// Round process on the trimmed hypergraph: in round i every uncolored core
/// vertex takes the i-th smallest color of its list with probability q.
/// Attempts that do not verify as a partial CF coloring of h are restarted
/// with a derived seed. Lists shorter than T cap T (with a warning).
ColoringRun pach_tardos_color(const Hypergraph& h, const ListAssignment& lists,
                              const PachTardosParams& p, std::uint64_t seed);

struct NearUniformParams {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::size_t gamma = 0;
  std::size_t list_size = 0;
  ParamMode mode = ParamMode::Paper;
  std::size_t resample_budget = 100000;
  /// Reject edges outside [alpha, beta].
  bool enforce_size_window = true;

  /// alpha = max(2^12, ceil(136 ln(16 gamma))), list_size = 32 beta.
  static NearUniformParams paper(std::size_t beta, std::size_t gamma);
  /// list_size = list_factor * beta.
  static NearUniformParams desk(std::size_t alpha, std::size_t beta, std::size_t gamma,
                                std::size_t list_factor = 32);
};

/// Every vertex draws a uniform color from its list; while some edge has no
/// unique color, the lowest-index such edge has all its vertices redrawn.
ColoringRun near_uniform_color(const Hypergraph& h, const ListAssignment& lists,
                               const NearUniformParams& p, std::uint64_t seed);

struct CoreSubsetParams {
  ParamMode mode = ParamMode::Desk;
  /// Paper mode: degree constant c and exponent epsilon.
  double c = 1;
  double epsilon = 0;
  /// Desk mode: mean of |N(v) ∩ V'| for a degree-Delta vertex, and the
  /// inclusive window every vertex must meet.
  double target_mean = 12;
  double window_low = 6;
  double window_high = 24;
  std::size_t retries = 1000;

  static CoreSubsetParams paper(double c, double epsilon);
  /// Window [target/2, 2 target].
  static CoreSubsetParams desk(double target_mean);
  static CoreSubsetParams desk(double target_mean, double low, double high);
};

struct CoreSubset {
  std::vector<Vertex> vertices;
  std::size_t attempts = 0;
  double pick_prob = 0;
  double window_low = 0;
  double window_high = 0;
  /// Paper windows are open intervals, desk windows closed.
  bool strict = false;
};

/// Bernoulli subset resampled until every vertex has a neighbor count in
/// the window. Paper mode: pick probability 350 ln^{1+eps}(4D)/(cD) and the
/// open window (291 ln(4D), (409/c) ln^{1+eps}(4D)); rejects instances
/// where that probability exceeds 1.
CoreSubset sample_core_subset(const Graph& g, const CoreSubsetParams& p, std::uint64_t seed);

}  // namespace cfc
