#pragma once

// Weight filtrations W_0 ⊆ W_1 ⊆ ... ⊆ W_max of the degree-m section space,
// where W_r is spanned by degree-m monomials of weight at most r.

#include <cstdint>
#include <vector>

#include "hmstab/linear_series.hpp"

namespace hmstab {

struct WeightFiltration {
  std::int64_t m = 0;
  std::int64_t max_weight = 0;
  /// dims[r] = dim W_r for 0 <= r <= max_weight.
  std::vector<std::int64_t> dims;

  std::int64_t dim(std::int64_t r) const { return dims.at(static_cast<std::size_t>(r)); }
};

/// Throws MalformedFiltration if dims is empty, negative, decreasing, or the
/// wrong length.
void validate(const WeightFiltration& f);

/// Least weight of a monomial basis: sum over r >= 1 of r (dim W_r - dim W_{r-1}).
BigInt basis_weight(const WeightFiltration& f);

/// Filtration of H^0(X, L^m) under rho for a curve with an elliptic tail.
///
/// For 2 <= r < m nu, W_r is the space of sections on E vanishing to order
/// s = m nu - r at the node, which has dimension r by Riemann-Roch on E;
/// W_0 = W_1 is spanned by x_n^m; W_{m nu} is everything. Every interior
/// dimension is recomputed from Riemann-Roch and compared against that table.
WeightFiltration elliptic_tail_filtration(const EmbeddingConfig& config, std::int64_t m);

/// m^2 (d - nu/2) nu + m (3/2 - g) nu - 1.
Rational elliptic_tail_closed_form(const EmbeddingConfig& config, std::int64_t m);

/// Basis weight of the elliptic filtration, cross-checked against the closed form.
BigInt elliptic_tail_weight(const EmbeddingConfig& config, std::int64_t m);

/// Filtration of H^0(Z, omega^{4m}) under the normalized inverse 1-ps at a
/// cusp q. W_{4m-s} is the space of sections vanishing to order s at q; orders
/// at a cusp skip 1, so there is no jump at r = 4m - 1. W_0 has codimension
/// 4m - 1 (one condition per attainable order below 4m).
WeightFiltration cusp_filtration(const EmbeddingConfig& config, std::int64_t m);

/// Basis weight of the cusp filtration, cross-checked against 8m^2 - 2m + 1.
BigInt cusp_weight(const EmbeddingConfig& config, std::int64_t m);

}  // namespace hmstab
