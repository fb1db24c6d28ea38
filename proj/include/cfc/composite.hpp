#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "cfc/core.hpp"
#include "cfc/lll.hpp"
#include "cfc/types.hpp"

namespace cfc {

/// Any CF* colorer usable as the first stage of the partial-to-full lift.
using PartialColorer =
    std::function<PartialColoring(const Hypergraph&, const ListAssignment&, std::uint64_t seed)>;

struct FullFromPartial {
  PartialColoring coloring;
  PalettePartition partition;
  /// Vertices the partial stage left uncolored.
  std::size_t lifted = 0;
};

/// Splits the palette in two (all targets part 0), CF*-colors h from the
/// part-0 sublists and gives every still uncolored vertex the smallest color
/// of its part-1 sublist. `lists` must be an r-assignment with
/// r = 10 (z + ceil(ln n)), z being the colorer's list requirement.
FullFromPartial cf_full_from_partial_list(const Hypergraph& h, const ListAssignment& lists,
                                          std::size_t z, const PartialColorer& colorer,
                                          std::uint64_t seed);

/// Round-process knobs shared by the composites that call pach_tardos_color.
struct RoundOptions {
  ParamMode mode = ParamMode::Desk;
  double q_scale = 3;
  double c_T = 10;
  std::size_t restarts = 1000;

  PachTardosParams params(std::size_t t, std::size_t gamma) const;
};

struct CfcnDecomposition {
  std::size_t delta = 0;
  /// max(1, ceil(ln Delta)).
  std::size_t theta = 0;
  /// max(1, ceil(ln^2 Delta)).
  std::size_t ln2 = 0;
  std::vector<Vertex> A, B, A1, A2;
  /// Edges N[v] ∩ A (v in A1) and N[v] ∩ B (v in A2 ∪ B), global ids.
  Hypergraph H1, H2;
  std::size_t t = 0;
  std::size_t gamma = 0;
  std::size_t rounds = 0;
  /// Per vertex; only meaningful on B.
  std::vector<std::vector<Color>> S, T, L2;
  /// Witness color c_v of every v in A1, parallel to A1.
  std::vector<Color> witness_color;
  std::size_t K = 0;
  std::size_t K_min = 0;
};

struct CfcnResult {
  PartialColoring coloring;
  CfcnDecomposition decomposition;
  ColoringRun h1_run;
  std::size_t h1_colors = 0;
  std::size_t h2_colors = 0;
};

/// Smallest K with K ceil(ln^2 Delta) >= L_H1 + (theta-1) + theta^2 + (theta+1),
/// where L_H1 is the round cap of the H1 stage (0 when A1 is empty).
std::size_t cfcn_min_K(const Graph& g, const RoundOptions& opt = {});

/// K ceil(ln^2 Delta) (at least K).
std::size_t cfcn_list_size(const Graph& g, std::size_t K);

/// CFCN* list coloring through the high/low degree split. Every list must
/// hold at least K ceil(ln^2 Delta) colors (exactly that many in paper mode)
/// and K must be at least cfcn_min_K.
CfcnResult cfcn_general(const Graph& g, const ListAssignment& lists, std::size_t K,
                        const RoundOptions& opt, std::uint64_t seed);

struct ClawOptions {
  ParamMode mode = ParamMode::Desk;
  /// Desk: b = max(2, ceil(sigma * b_paper)).
  double sigma = 1.0 / 2048;
  /// Desk: stage-1 lists hold nu_list_factor * beta colors (paper: 32).
  std::size_t nu_list_factor = 4;
  std::size_t resample_budget = 100000;
  std::size_t partition_attempts = 1000;
};

struct ClawPlan {
  /// Claw number + 1: g is K_{1,k}-free.
  std::size_t k = 0;
  std::size_t delta = 0;
  std::size_t b = 0;
  std::size_t z = 0;
  /// Required list size 25 (z + ceil(ln n)).
  std::size_t r = 0;
  std::size_t nu_factor = 0;
};

ClawPlan cfon_claw_plan(const Graph& g, const ClawOptions& opt = {});

struct ClawDecomposition {
  ClawPlan plan;
  std::vector<Vertex> A, A_L, A_H, X;
  /// Greedy classes S_1..S_s of G - (A ∪ X).
  std::vector<std::vector<Vertex>> classes;
  std::vector<Vertex> B, C, A_X, A_Xbar;
  /// A_Xbar vertices with no neighbor in C; their edges N(v) ∩ B join stage 1.
  std::vector<Vertex> stage1_extra;
  /// V1..V5 = B, A_H, A_L, X, C.
  std::array<std::vector<Vertex>, 5> parts;
  std::array<Hypergraph, 5> stages;
  PalettePartition partition;
};

struct ClawResult {
  PartialColoring coloring;
  ClawDecomposition decomposition;
  std::array<std::size_t, 5> stage_colors{};
  std::size_t resamples = 0;
};

/// CFON* (and CFCN*) list coloring of a K_{1,k}-free graph via five
/// stage hypergraphs on disjoint palette parts. `lists` must be an
/// r-assignment with r = cfon_claw_plan(g, opt).r.
ClawResult cfon_claw(const Graph& g, const ListAssignment& lists, const ClawOptions& opt,
                     std::uint64_t seed);

struct MinDegreeResult {
  PartialColoring coloring;
  PachTardosParams params;
  ColoringRun run;
};

/// t = max(1, ceil((ln Delta + 1)/2)); the round cap of the resulting
/// parameters is the list length these colorers need.
PachTardosParams min_degree_params(const Graph& g, bool closed, const RoundOptions& opt = {});

MinDegreeResult cfon_min_degree(const Graph& g, const ListAssignment& lists, const RoundOptions& opt,
                                std::uint64_t seed);
MinDegreeResult cfcn_min_degree(const Graph& g, const ListAssignment& lists, const RoundOptions& opt,
                                std::uint64_t seed);

struct DenseOptions {
  ParamMode mode = ParamMode::Desk;
  double c = 1;
  double epsilon = 0;
  /// Desk core subset.
  double target_mean = 12;
  double window_low = 6;
  double window_high = 24;
  std::size_t nu_list_factor = 4;
  std::size_t retries = 1000;
  std::size_t resample_budget = 100000;
};

struct DenseResult {
  PartialColoring coloring;
  /// Paper mode below the size threshold: plain list coloring of the
  /// neighborhood hypergraph.
  bool fallback = false;
  CoreSubset core;
  NearUniformParams params;
  std::size_t resamples = 0;
};

/// List size the dense colorer needs on g (fallback: Delta+1 open,
/// Delta+2 closed; otherwise the near-uniform list size).
std::size_t dense_list_size(const Graph& g, bool closed, const DenseOptions& opt = {});

DenseResult cfon_dense_min_degree(const Graph& g, const ListAssignment& lists,
                                  const DenseOptions& opt, std::uint64_t seed);
DenseResult cfcn_dense_min_degree(const Graph& g, const ListAssignment& lists,
                                  const DenseOptions& opt, std::uint64_t seed);

}  // namespace cfc
