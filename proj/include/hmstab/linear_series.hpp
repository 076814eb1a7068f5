#pragma once

// Numerical data of an embedded curve with a tail, and the diagonal
// one-parameter subgroups acting on its homogeneous coordinates.
//
// Coordinates are 1-based in the docs (x_1 .. x_n) and 0-based in storage.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hmstab/exact_algebra.hpp"

namespace hmstab {

enum class EmbeddingMode { canonical, general };

/// Degree/section data of (X, L) where L restricts to omega_E(nu p) on the tail.
///
/// n = d - g + 1 sections, split index l = n - nu + 1, and c = d - nu is the
/// degree on the genus g-1 complement C. Construction checks c >= 2(g-1) + 1
/// so every Riemann-Roch count taken on C is non-special.
class EmbeddingConfig {
 public:
  /// nu-canonical model: d = 2 nu (g-1), n = (2 nu - 1)(g-1).
  static EmbeddingConfig canonical(std::int64_t g, std::int64_t nu);
  /// Arbitrary degree d with the same tail twist.
  static EmbeddingConfig general(std::int64_t g, std::int64_t nu, std::int64_t d);
  /// Rebuilds a config from its stored fields; canonical mode requires
  /// d = 2 nu (g-1).
  static EmbeddingConfig from_parts(std::int64_t g, std::int64_t nu, std::int64_t d, EmbeddingMode mode);

  std::int64_t g() const { return g_; }
  std::int64_t nu() const { return nu_; }
  std::int64_t d() const { return d_; }
  std::int64_t n() const { return d_ - g_ + 1; }
  std::int64_t l() const { return n() - nu_ + 1; }
  std::int64_t c() const { return d_ - nu_; }
  EmbeddingMode mode() const { return mode_; }
  /// True for the 4-canonical model, where the cusp 1-ps and the
  /// closed-form cross-checks apply.
  bool is_four_canonical() const { return nu_ == 4 && d_ == 8 * (g_ - 1); }

  friend bool operator==(const EmbeddingConfig&, const EmbeddingConfig&) = default;

 private:
  EmbeddingConfig(std::int64_t g, std::int64_t nu, std::int64_t d, EmbeddingMode mode);
  std::int64_t g_ = 0;
  std::int64_t nu_ = 0;
  std::int64_t d_ = 0;
  EmbeddingMode mode_ = EmbeddingMode::canonical;
};

/// Order of vanishing at the marked point, keyed by 0-based coordinate index.
/// Coordinates not listed are treated as vanishing to at least the largest
/// listed order (they cut out the complementary span).
using VanishingProfile = std::map<std::int64_t, std::int64_t>;

/// Integer weights r_1..r_n of a diagonal 1-ps diag(t^{r_1}, ..., t^{r_n}).
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<std::int64_t> weights, VanishingProfile profile = {})
      : weights_(std::move(weights)), profile_(std::move(profile)) {}

  std::size_t size() const { return weights_.size(); }
  std::int64_t operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  const VanishingProfile& profile() const { return profile_; }
  std::int64_t sum() const;

  /// Negate, then shift so the minimum weight is 0.
  WeightVector inverse() const;

  friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.weights_ == b.weights_; }

 private:
  std::vector<std::int64_t> weights_;
  VanishingProfile profile_;
};

/// The tail-adapted 1-ps: weight nu on x_1..x_l, nu - j on x_{l+j} for
/// 1 <= j <= nu - 2, and 0 on x_n. Each tail coordinate's weight is nu minus
/// its vanishing order at the attaching node.
WeightVector build_rho(const EmbeddingConfig& config);

/// Normalized inverse of rho for the 4-canonical model: [0, ..., 0, 1, 2, 4].
/// Throws UnsupportedNu unless nu == 4.
WeightVector build_cusp_ps(const EmbeddingConfig& config);

Rational average_weight(const WeightVector& wv);

/// nu - (nu^2 - nu + 2) / (2n), the average rho-weight in closed form.
Rational rho_average_closed_form(const EmbeddingConfig& config);

/// Riemann-Roch on a curve of the given genus for a bundle of the given
/// degree twisted down by `vanishing` points. Throws PossiblySpecial unless
/// degree - vanishing >= 2 genus - 1.
std::int64_t h0_nonspecial(std::int64_t genus, std::int64_t degree, std::int64_t vanishing);

/// P(m) = m d - g + 1.
std::int64_t hilbert_poly(const EmbeddingConfig& config, std::int64_t m);

/// m P(m) times the average weight of `wv`, exact.
Rational mpm_alpha(const EmbeddingConfig& config, const WeightVector& wv, std::int64_t m);

/// m P(m) alpha as a polynomial in m.
UniPoly mpm_alpha_poly(const EmbeddingConfig& config, const WeightVector& wv);

/// The Chow-critical family: alpha = nu^2/(nu-2), d = alpha (g-1), n = (alpha-1)(g-1).
/// Requires (nu - 2) | (g - 1) and integral d.
EmbeddingConfig generalized_tail_config(std::int64_t nu, std::int64_t g);

std::string to_string(EmbeddingMode mode);
EmbeddingMode mode_from_string(const std::string& name);

}  // namespace hmstab
