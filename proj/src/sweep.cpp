#include "hmstab/sweep.hpp"

#include <algorithm>
#include <functional>

#include "hmstab/error.hpp"
#include "hmstab/filtration_engine.hpp"
#include "hmstab/linear_series.hpp"
#include "hmstab/stability_engine.hpp"

namespace hmstab {

namespace {

struct Key {
  std::int64_t g, nu, m;
};

using CellFn = std::function<void(GridCell&)>;

std::vector<GridCell> run_grid(const std::vector<Key>& keys, const CellFn& fn, Execution exec) {
  std::vector<GridCell> cells(keys.size());
  const auto count = static_cast<std::int64_t>(keys.size());
  auto one = [&](std::int64_t i) {
    GridCell& cell = cells[static_cast<std::size_t>(i)];
    const Key& k = keys[static_cast<std::size_t>(i)];
    cell.g = k.g;
    cell.nu = k.nu;
    cell.m = k.m;
    try {
      fn(cell);
      cell.passed = Rational(cell.w) == cell.expected_w && (!cell.expected_mu || cell.mu == *cell.expected_mu);
    } catch (const std::exception& e) {
      cell.passed = false;
      cell.error = e.what();
    }
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) one(i);
  } else {
    for (std::int64_t i = 0; i < count; ++i) one(i);
  }
  return cells;
}

std::vector<Key> keys_for(const std::vector<std::int64_t>& gs, const std::vector<std::int64_t>& nus,
                          const std::vector<std::int64_t>& ms) {
  std::vector<Key> keys;
  for (auto g : gs)
    for (auto nu : nus)
      for (auto m : ms) keys.push_back({g, nu, m});
  return keys;
}

}  // namespace

std::vector<std::int64_t> inclusive_range(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(ErrorCode::ParseError, "empty range " + std::to_string(lo) + ".." + std::to_string(hi));
  std::vector<std::int64_t> out;
  for (auto v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

std::vector<GridCell> elliptic_sweep(const std::vector<std::int64_t>& gs, const std::vector<std::int64_t>& nus,
                                     const std::vector<std::int64_t>& ms, Execution exec) {
  return run_grid(
      keys_for(gs, nus, ms),
      [](GridCell& cell) {
        const auto config = EmbeddingConfig::canonical(cell.g, cell.nu);
        cell.expected_w = elliptic_tail_closed_form(config, cell.m);
        cell.w = basis_weight(elliptic_tail_filtration(config, cell.m));
        cell.mu = hilbert_index(cell.w, mpm_alpha(config, build_rho(config), cell.m));
        if (cell.nu == 4) cell.expected_mu = Rational(-(cell.m - 1));
      },
      exec);
}

std::vector<GridCell> cusp_sweep(const std::vector<std::int64_t>& gs, const std::vector<std::int64_t>& ms,
                                 Execution exec) {
  return run_grid(
      keys_for(gs, {4}, ms),
      [](GridCell& cell) {
        const auto config = EmbeddingConfig::canonical(cell.g, 4);
        const std::int64_t m = cell.m;
        cell.expected_w = Rational(8 * m * m - 2 * m + 1);
        cell.w = basis_weight(cusp_filtration(config, m));
        cell.mu = hilbert_index(cell.w, mpm_alpha(config, build_cusp_ps(config), m));
        cell.expected_mu = Rational(m - 1);
      },
      exec);
}

std::vector<GridCell> cuspidal_tail_sweep(const std::vector<std::int64_t>& gs, const std::vector<std::int64_t>& ms,
                                          Execution exec) {
  const ParamTail tail = cuspidal_tail();
  return run_grid(
      keys_for(gs, {4}, ms),
      [&tail](GridCell& cell) {
        const auto config = EmbeddingConfig::canonical(cell.g, 4);
        const std::int64_t g = cell.g;
        const std::int64_t m = cell.m;
        cell.expected_w = Rational((32 * g - 40) * m * m + (6 - 4 * g) * m - 1);
        cell.w = assemble_two_component_weight(config, tail, m).total;
        cell.mu = hilbert_index(cell.w, mpm_alpha(config, build_rho(config), m));
        cell.expected_mu = Rational(-(m - 1));
      },
      exec);
}

bool all_passed(const std::vector<GridCell>& cells) {
  return std::all_of(cells.begin(), cells.end(), [](const GridCell& c) { return c.passed; });
}

}  // namespace hmstab
