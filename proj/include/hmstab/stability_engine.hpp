#pragma once

/**
 * @file stability_engine.hpp
 * @brief Hilbert-Mumford indices and verdicts with respect to one 1-ps.
 *
 * Sign convention: mu([X]_m, rho) = -(w(m) - m P(m) alpha), where w(m) is the
 * least weight of a monomial basis of H^0(X, L^m) and alpha is the average
 * coordinate weight. A positive difference w - mPalpha means the 1-ps
 * destabilizes the m-th Hilbert point, zero is borderline, and negative means
 * this particular 1-ps does not destabilize it. The same reading applied to
 * the m^2 coefficient of the difference gives the Chow verdict.
 *
 * Verdicts are always relative to the given 1-ps and never claim global GIT
 * stability.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hmstab/exact_algebra.hpp"
#include "hmstab/linear_series.hpp"

namespace hmstab {

enum class Scenario { elliptic_tail, cuspidal_tail, cusp, generalized };
enum class Verdict { unstable, borderline, not_destabilized };

std::string to_string(Scenario s);
std::string to_string(Verdict v);
Scenario scenario_from_string(const std::string& name);
Verdict verdict_from_string(const std::string& name);

/// Verdict from the sign of w - mPalpha.
Verdict verdict_from_difference(const Rational& difference);
/// Verdict from the sign of mu (opposite sign to the difference).
Verdict verdict_from_index(const Rational& mu);

struct StabilityRow {
  std::int64_t m = 0;
  BigInt w = 0;
  Rational mpa;
  Rational mu;
  Verdict hilbert = Verdict::borderline;
  /// How w was obtained: "filtration", "assembled" or "interpolated".
  std::string source;
  friend bool operator==(const StabilityRow&, const StabilityRow&) = default;
};

/// A named internal cross-check (computed value against its closed form).
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
  friend bool operator==(const Check&, const Check&) = default;
};

struct Interpolation {
  Rational a;
  Rational b;
  friend bool operator==(const Interpolation&, const Interpolation&) = default;
};

struct StabilityReport {
  Scenario scenario = Scenario::elliptic_tail;
  std::int64_t g = 0;
  std::int64_t nu = 0;
  std::int64_t d = 0;
  std::int64_t n = 0;
  /// "rho" or "rho_inverse".
  std::string one_ps;
  Rational average_weight;
  std::vector<StabilityRow> rows;
  UniPoly w_poly;
  UniPoly mpa_poly;
  Rational chow_quadratic_coefficient;
  Verdict chow_verdict = Verdict::borderline;
  /// mu(m) = -(m - 1)(a m + b) when the interpolation law was applied.
  std::optional<Interpolation> interpolation;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool all_checks_pass() const;
  friend bool operator==(const StabilityReport&, const StabilityReport&) = default;
};

/// -(w - mPalpha).
Rational hilbert_index(const BigInt& w, const Rational& mpa);

/// Solves v(m) = (m - 1)(a m + b) from the normalized indices v = w - mPalpha
/// at m = 2 and m = 3.
Interpolation interpolate_index(const Rational& v2, const Rational& v3);

/// Every mu is an integer divisible by m - 1, and a single (m - 1)(a m + b)
/// fitted to the rows reproduces all of them. False with fewer than 3 rows.
bool divisibility_check(const StabilityReport& report);

/// m^2 coefficient of w minus d times the average weight of wv.
Rational chow_coefficient(const UniPoly& w_poly, const EmbeddingConfig& config, const WeightVector& wv);
Rational chow_coefficient(const GLinearPoly& w_poly, const EmbeddingConfig& config, const WeightVector& wv);

/// Elliptic tail under rho, weights from the filtration. Any nu and degree.
StabilityReport elliptic_tail_report(const EmbeddingConfig& config, const std::vector<std::int64_t>& m_range);
/// Elliptic tail report labeled as the generalized family; when d/n hits the
/// Chow-critical ratio nu^2/(nu^2 - nu + 2) the index must be -(m - 1).
StabilityReport generalized_report(const EmbeddingConfig& config, const std::vector<std::int64_t>& m_range);
/// Rational cuspidal tail under rho on the 4-canonical model: direct
/// assembly at m = 2, 3, then the (m - 1)(a m + b) law for the rest.
StabilityReport cuspidal_tail_report(const EmbeddingConfig& config, const std::vector<std::int64_t>& m_range);
/// Cuspidal curve under the normalized inverse 1-ps on the 4-canonical model.
StabilityReport cusp_report(const EmbeddingConfig& config, const std::vector<std::int64_t>& m_range);

/// d/n == nu^2 / (nu^2 - nu + 2).
bool is_chow_critical(const EmbeddingConfig& config);

enum class Singularity { cusp, node };

struct DeformationWeights {
  Singularity singularity = Singularity::cusp;
  /// Cusp: weight of x. Node: the two branch tangent weights.
  std::vector<std::int64_t> local_weights;
  /// Cusp: weights of a, b in y^2 = x^3 + a x + b. Node: smoothing parameter.
  std::vector<std::int64_t> parameter_weights;
};

DeformationWeights cusp_deformation_weights(std::int64_t x_weight);
/// The smoothing parameter of xy = t has the sum of the tangent weights.
DeformationWeights node_deformation_weights(std::int64_t tangent_a, std::int64_t tangent_b);

/// Local weights read off a 1-ps: x = x_{n-1}/x_n at the cusp of the tail;
/// x_{l+1}/x_l along the tail and x_{l-1}/x_l along C at the node.
std::int64_t cusp_local_weight(const EmbeddingConfig& config, const WeightVector& wv);
std::pair<std::int64_t, std::int64_t> node_tangent_weights(const EmbeddingConfig& config, const WeightVector& wv);

enum class BasinMembership { in_basin, not_in_basin, boundary };
std::string to_string(BasinMembership b);

/// A deformation parameter flows to the fixed point as t -> 0 iff its weight
/// (negated for the inverse 1-ps) is positive. The family contains a
/// smoothing in the basin when some parameter does; boundary when the best
/// weight is exactly 0.
BasinMembership basin_membership(const DeformationWeights& dw, bool invert);
BasinMembership parameter_membership(std::int64_t weight, bool invert);

}  // namespace hmstab
