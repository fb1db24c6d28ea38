#pragma once

// Witness-commit backtracking for (partial) CF colorings with per-vertex
// color domains. Internal to the oracle.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "cfc/oracle.hpp"
#include "cfc/types.hpp"

namespace cfc::detail {

enum class Role : std::uint8_t {
  Listed,
  /// Stays uncolored: never witnesses, never blocks (partial mode only).
  Absent,
  /// Colored later by a color outside every witness color of its edges;
  /// never witnesses. Fails once more than `adversary_budget` witness colors
  /// meet at it.
  Adversarial,
};

struct SearchSpec {
  const Hypergraph* h = nullptr;
  std::size_t num_colors = 0;
  Mode mode = Mode::Full;
  /// Allowed color indices per vertex; empty outer vector = all colors.
  std::vector<std::vector<std::size_t>> domains;
  /// Empty = every vertex Listed.
  std::vector<Role> roles;
  std::size_t adversary_budget = 0;
  /// Colors are interchangeable (all domains full): use symmetry breaking.
  bool symmetric = false;
  std::uint64_t max_nodes = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct SearchOutcome {
  Verdict verdict = Verdict::Indeterminate;
  /// Color index per vertex (nullopt = uncolored) when Sat. Adversarial
  /// and Absent vertices are left uncolored.
  std::vector<std::optional<std::size_t>> assignment;
  std::uint64_t nodes = 0;
};

SearchOutcome cf_search(const SearchSpec& spec);

}  // namespace cfc::detail
