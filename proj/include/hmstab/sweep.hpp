#pragma once

// Grid kernels over (g, nu, m). Each cell is independent; the parallel
// variants use OpenMP over a flattened index and return cells in the same
// order as the serial ones.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hmstab/exact_algebra.hpp"
#include "hmstab/monomial_engine.hpp"

namespace hmstab {

struct GridCell {
  std::int64_t g = 0;
  std::int64_t nu = 0;
  std::int64_t m = 0;
  BigInt w = 0;
  Rational expected_w;
  Rational mu;
  std::optional<Rational> expected_mu;
  bool passed = false;
  /// Set when the cell threw; passed is then false.
  std::string error;
  friend bool operator==(const GridCell&, const GridCell&) = default;
};

/// Inclusive integer range "lo..hi".
std::vector<std::int64_t> inclusive_range(std::int64_t lo, std::int64_t hi);

/// Filtration weight of the elliptic tail against its closed form; on the
/// 4-canonical model mu is also expected to be -(m - 1).
std::vector<GridCell> elliptic_sweep(const std::vector<std::int64_t>& gs, const std::vector<std::int64_t>& nus,
                                     const std::vector<std::int64_t>& ms, Execution exec = Execution::serial);

/// Cusp filtration weight against 8m^2 - 2m + 1 with mu = m - 1 (nu = 4).
std::vector<GridCell> cusp_sweep(const std::vector<std::int64_t>& gs, const std::vector<std::int64_t>& ms,
                                 Execution exec = Execution::serial);

/// Assembled weight of C ∪ (cuspidal tail) against (32g - 40)m^2 + (6 - 4g)m - 1
/// with mu = -(m - 1) (nu = 4).
std::vector<GridCell> cuspidal_tail_sweep(const std::vector<std::int64_t>& gs, const std::vector<std::int64_t>& ms,
                                          Execution exec = Execution::serial);

bool all_passed(const std::vector<GridCell>& cells);

}  // namespace hmstab
