#include "hmstab/filtration_engine.hpp"

#include "hmstab/error.hpp"

namespace hmstab {

void validate(const WeightFiltration& f) {
  if (f.dims.empty() || f.max_weight < 0 || static_cast<std::int64_t>(f.dims.size()) != f.max_weight + 1)
    throw Error(ErrorCode::MalformedFiltration, "dims must have max_weight + 1 entries");
  if (f.dims.front() < 0) throw Error(ErrorCode::MalformedFiltration, "negative dimension");
  for (std::size_t r = 1; r < f.dims.size(); ++r)
    if (f.dims[r] < f.dims[r - 1])
      throw Error(ErrorCode::MalformedFiltration, "dims decrease at r = " + std::to_string(r));
}

BigInt basis_weight(const WeightFiltration& f) {
  validate(f);
  BigInt total = 0;
  for (std::size_t r = 1; r < f.dims.size(); ++r) {
    const BigInt jump = f.dims[r] - f.dims[r - 1];
    total += BigInt(static_cast<long>(r)) * jump;
  }
  return total;
}

namespace {

// Piecewise table for the elliptic filtration: md-g+1 at the top, r in the
// middle, 1 at r = 0, 1.
std::int64_t elliptic_table(const EmbeddingConfig& config, std::int64_t m, std::int64_t r) {
  const std::int64_t top = m * config.nu();
  if (r == top) return hilbert_poly(config, m);
  if (r >= 2) return r;
  return 1;
}

}  // namespace

WeightFiltration elliptic_tail_filtration(const EmbeddingConfig& config, std::int64_t m) {
  if (m < 2) throw Error(ErrorCode::DegreeTooSmall, "elliptic filtration needs m >= 2");
  const std::int64_t top = m * config.nu();
  WeightFiltration f{m, top, std::vector<std::int64_t>(static_cast<std::size_t>(top + 1))};

  // L^m restricted to E is omega_E(m nu p) = O_E(m nu p); twisting down by s p
  // leaves degree r = m nu - s on the genus 1 tail.
  f.dims[0] = 1;  // h^0(E, omega_E)
  f.dims[1] = f.dims[0];
  for (std::int64_t r = 2; r < top; ++r) f.dims[static_cast<std::size_t>(r)] = h0_nonspecial(1, top, top - r);
  f.dims[static_cast<std::size_t>(top)] = hilbert_poly(config, m);

  for (std::int64_t r = 0; r <= top; ++r)
    if (f.dim(r) != elliptic_table(config, m, r))
      throw Error(ErrorCode::VerificationFailure, "elliptic filtration disagrees with table at r = " + std::to_string(r));
  validate(f);
  return f;
}

Rational elliptic_tail_closed_form(const EmbeddingConfig& config, std::int64_t m) {
  const Rational nu(config.nu());
  const Rational mm(m);
  return mm * mm * (Rational(config.d()) - nu / Rational(2)) * nu +
         mm * (Rational(3, 2) - Rational(config.g())) * nu - Rational(1);
}

BigInt elliptic_tail_weight(const EmbeddingConfig& config, std::int64_t m) {
  const BigInt w = basis_weight(elliptic_tail_filtration(config, m));
  const Rational closed = elliptic_tail_closed_form(config, m);
  if (Rational(w) != closed)
    throw Error(ErrorCode::VerificationFailure,
                "elliptic weight " + w.get_str() + " != closed form " + closed.to_string());
  if (config.is_four_canonical()) {
    const std::int64_t g = config.g();
    const Rational expected = Rational((32 * g - 40) * m * m + (6 - 4 * g) * m - 1);
    if (Rational(w) != expected)
      throw Error(ErrorCode::VerificationFailure, "4-canonical elliptic weight mismatch");
  }
  return w;
}

WeightFiltration cusp_filtration(const EmbeddingConfig& config, std::int64_t m) {
  if (config.nu() != 4) throw Error(ErrorCode::UnsupportedNu, "cusp filtration needs nu = 4");
  if (m < 2) throw Error(ErrorCode::DegreeTooSmall, "cusp filtration needs m >= 2");
  const std::int64_t top = 4 * m;
  const std::int64_t full = hilbert_poly(config, m);
  WeightFiltration f{m, top, std::vector<std::int64_t>(static_cast<std::size_t>(top + 1))};

  // Vanishing order s = top - r. Attainable orders at a cusp form the
  // semigroup {0, 2, 3, ...}; W_r gains a section exactly when s is attainable.
  auto attainable = [](std::int64_t s) { return s != 1; };
  f.dims[0] = full - (top - 1);
  for (std::int64_t r = 1; r <= top; ++r) {
    const auto jump = attainable(top - r) ? 1 : 0;
    f.dims[static_cast<std::size_t>(r)] = f.dims[static_cast<std::size_t>(r - 1)] + jump;
  }
  if (f.dims.back() != full) throw Error(ErrorCode::VerificationFailure, "cusp filtration does not end at P(m)");
  validate(f);
  return f;
}

BigInt cusp_weight(const EmbeddingConfig& config, std::int64_t m) {
  const BigInt w = basis_weight(cusp_filtration(config, m));
  // (sum_{r=1}^{4m} r) - (4m - 1)
  const BigInt expected = BigInt(8 * m * m - 2 * m + 1);
  if (w != expected) throw Error(ErrorCode::VerificationFailure, "cusp weight " + w.get_str() + " != 8m^2-2m+1");
  return w;
}

}  // namespace hmstab
