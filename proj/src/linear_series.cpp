#include "hmstab/linear_series.hpp"

#include <algorithm>
#include <numeric>

#include "hmstab/error.hpp"

namespace hmstab {

EmbeddingConfig::EmbeddingConfig(std::int64_t g, std::int64_t nu, std::int64_t d, EmbeddingMode mode)
    : g_(g), nu_(nu), d_(d), mode_(mode) {
  if (g < 3) throw Error(ErrorCode::GenusTooSmall, "genus must be >= 3, got " + std::to_string(g));
  if (nu < 3) throw Error(ErrorCode::InvalidConfig, "tail twist must be >= 3, got " + std::to_string(nu));
  // deg_C(L) must make every count on the genus g-1 complement non-special.
  if (c() < 2 * (g - 1) + 1)
    throw Error(ErrorCode::PossiblySpecial,
                "degree on complement " + std::to_string(c()) + " < 2(g-1)+1 = " + std::to_string(2 * g - 1));
  if (l() < 1) throw Error(ErrorCode::InvalidConfig, "split index l must be positive");
}

EmbeddingConfig EmbeddingConfig::canonical(std::int64_t g, std::int64_t nu) {
  return EmbeddingConfig(g, nu, 2 * nu * (g - 1), EmbeddingMode::canonical);
}

EmbeddingConfig EmbeddingConfig::general(std::int64_t g, std::int64_t nu, std::int64_t d) {
  return EmbeddingConfig(g, nu, d, EmbeddingMode::general);
}

EmbeddingConfig EmbeddingConfig::from_parts(std::int64_t g, std::int64_t nu, std::int64_t d, EmbeddingMode mode) {
  if (mode == EmbeddingMode::canonical && d != 2 * nu * (g - 1))
    throw Error(ErrorCode::InvalidConfig, "canonical mode needs d = 2 nu (g-1)");
  return EmbeddingConfig(g, nu, d, mode);
}

std::string to_string(EmbeddingMode mode) { return mode == EmbeddingMode::canonical ? "canonical" : "general"; }

EmbeddingMode mode_from_string(const std::string& name) {
  if (name == "canonical") return EmbeddingMode::canonical;
  if (name == "general") return EmbeddingMode::general;
  throw Error(ErrorCode::ParseError, "unknown embedding mode '" + name + "'");
}

std::int64_t WeightVector::sum() const { return std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0}); }

WeightVector WeightVector::inverse() const {
  if (weights_.empty()) return {};
  const std::int64_t top = *std::max_element(weights_.begin(), weights_.end());
  std::vector<std::int64_t> out(weights_.size());
  std::transform(weights_.begin(), weights_.end(), out.begin(), [top](std::int64_t w) { return top - w; });
  return WeightVector(std::move(out));
}

WeightVector build_rho(const EmbeddingConfig& config) {
  const auto n = static_cast<std::size_t>(config.n());
  const auto l = static_cast<std::size_t>(config.l());
  const std::int64_t nu = config.nu();
  std::vector<std::int64_t> weights(n, nu);
  VanishingProfile profile;
  profile[static_cast<std::int64_t>(l) - 1] = 0;
  for (std::int64_t j = 1; j <= nu - 2; ++j) {
    const auto index = static_cast<std::int64_t>(l) - 1 + j;
    profile[index] = j;
  }
  profile[static_cast<std::int64_t>(n) - 1] = nu;
  for (const auto& [index, order] : profile) weights[static_cast<std::size_t>(index)] = nu - order;
  return WeightVector(std::move(weights), std::move(profile));
}

WeightVector build_cusp_ps(const EmbeddingConfig& config) {
  if (config.nu() != 4) throw Error(ErrorCode::UnsupportedNu, "cusp 1-ps needs nu = 4, got " + std::to_string(config.nu()));
  const std::int64_t n = config.n();
  // Orders at the cusp along the normalization parameter: x_n, x_{n-1},
  // x_{n-2}, x_{n-3} vanish to 0, 2, 3, 4; weight = 4 - order.
  VanishingProfile profile{{n - 1, 0}, {n - 2, 2}, {n - 3, 3}, {n - 4, 4}};
  std::vector<std::int64_t> weights(static_cast<std::size_t>(n), 0);
  for (const auto& [index, order] : profile) weights[static_cast<std::size_t>(index)] = 4 - order;
  return WeightVector(std::move(weights), std::move(profile));
}

Rational average_weight(const WeightVector& wv) {
  if (wv.size() == 0) return Rational(0);
  return Rational(wv.sum(), static_cast<long>(wv.size()));
}

Rational rho_average_closed_form(const EmbeddingConfig& config) {
  const std::int64_t nu = config.nu();
  return Rational(nu) - Rational(nu * nu - nu + 2, 2 * config.n());
}

std::int64_t h0_nonspecial(std::int64_t genus, std::int64_t degree, std::int64_t vanishing) {
  if (genus < 0 || vanishing < 0) throw Error(ErrorCode::InvalidConfig, "negative genus or vanishing order");
  if (degree - vanishing < 2 * genus - 1)
    throw Error(ErrorCode::PossiblySpecial, "degree " + std::to_string(degree - vanishing) + " on genus " +
                                                std::to_string(genus) + " is not guaranteed non-special");
  return degree - vanishing - genus + 1;
}

std::int64_t hilbert_poly(const EmbeddingConfig& config, std::int64_t m) {
  if (m < 1) throw Error(ErrorCode::DegreeTooSmall, "m must be >= 1");
  return m * config.d() - config.g() + 1;
}

Rational mpm_alpha(const EmbeddingConfig& config, const WeightVector& wv, std::int64_t m) {
  return Rational(m) * Rational(hilbert_poly(config, m)) * average_weight(wv);
}

UniPoly mpm_alpha_poly(const EmbeddingConfig& config, const WeightVector& wv) {
  const Rational alpha = average_weight(wv);
  return UniPoly({Rational(0), alpha * Rational(1 - config.g()), alpha * Rational(config.d())});
}

EmbeddingConfig generalized_tail_config(std::int64_t nu, std::int64_t g) {
  if (nu < 3) throw Error(ErrorCode::InvalidConfig, "tail twist must be >= 3");
  if ((g - 1) % (nu - 2) != 0)
    throw Error(ErrorCode::Divisibility, std::to_string(nu - 2) + " does not divide g - 1 = " + std::to_string(g - 1));
  const std::int64_t numerator = nu * nu * (g - 1);
  if (numerator % (nu - 2) != 0) throw Error(ErrorCode::Divisibility, "degree nu^2 (g-1)/(nu-2) is not integral");
  return EmbeddingConfig::general(g, nu, numerator / (nu - 2));
}

}  // namespace hmstab
