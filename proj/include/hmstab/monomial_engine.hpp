#pragma once

/**
 * @file monomial_engine.hpp
 * @brief Minimal-weight monomial bases on parameterized rational tails.
 *
 * A rational tail R is given by the pullbacks of its coordinates to P^1 with
 * homogeneous coordinates [s : t]; the attaching node is [0 : 1]. The degree-m
 * monomials in the tail coordinates pull back to binary forms of degree
 * m * delta, and a minimal-weight basis of their span is selected greedily by
 * weight with an exact rank test.
 *
 * The complementary component C is never enumerated; its contribution is a
 * Riemann-Roch count times its constant weight.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "hmstab/exact_algebra.hpp"
#include "hmstab/linear_series.hpp"

namespace hmstab {

/// Homogeneous binary form; coeffs[i] multiplies s^{degree - i} t^i.
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(std::int64_t degree, std::vector<Rational> coeffs);
  /// The monomial s^{s_degree} t^{t_degree}.
  static BinaryForm monomial(std::int64_t s_degree, std::int64_t t_degree);

  std::int64_t degree() const { return degree_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Exactly one nonzero coefficient.
  bool is_monomial() const;
  /// t-degree of the single term; only meaningful when is_monomial().
  std::int64_t t_degree() const;
  /// Order of vanishing at the attaching node [0 : 1], i.e. the least
  /// s-degree present; -1 for the zero form.
  std::int64_t order_at_attachment() const;

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  std::int64_t degree_ = 0;
  std::vector<Rational> coeffs_{Rational(1)};
};

struct TailCoordinate {
  std::int64_t weight = 0;
  BinaryForm pullback;
  friend bool operator==(const TailCoordinate&, const TailCoordinate&) = default;
};

/// Coordinates of a rational tail with their 1-ps weights and pullbacks.
class ParamTail {
 public:
  explicit ParamTail(std::vector<TailCoordinate> coords);

  const std::vector<TailCoordinate>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  std::int64_t pullback_degree() const { return coords_.front().pullback.degree(); }
  bool is_monomial() const;

  friend bool operator==(const ParamTail&, const ParamTail&) = default;

 private:
  std::vector<TailCoordinate> coords_;
};

/// Rational cuspidal quartic [t^4, s t^3, s^2 t^2, s^4] in coordinates
/// x_l, x_{l+1}, x_{l+2}, x_n with rho-weights 4, 3, 2, 0. The node is at
/// [0 : 1] where only x_l survives; the cusp is at [1 : 0].
ParamTail cuspidal_tail();

using ExponentVector = std::vector<std::int64_t>;

/// All degree-m exponent vectors in k variables, lexicographically descending
/// (so (m, 0, ..., 0) first). Throws TooLarge past 10^6 vectors.
std::vector<ExponentVector> enumerate_monomials(std::int64_t k, std::int64_t m);

/// Binomial C(m + k - 1, k - 1), saturating at max int64.
std::int64_t monomial_count(std::int64_t k, std::int64_t m);

BinaryForm pullback(const ExponentVector& mono, const ParamTail& tail);

std::int64_t monomial_weight(const ExponentVector& mono, const ParamTail& tail);

enum class Execution { serial, parallel };

struct TailMonomial {
  ExponentVector exponents;
  std::int64_t weight = 0;
  BinaryForm image;
};

/// Weight and pullback of every degree-m monomial, in enumeration order.
/// The parallel path fills the same slots as the serial one.
std::vector<TailMonomial> tail_monomials(const ParamTail& tail, std::int64_t m, Execution exec = Execution::serial);

struct SpanningSet {
  std::vector<ExponentVector> basis;
  std::vector<std::int64_t> weights;
  BigInt total_weight = 0;
};

/// Minimal-weight basis of the span of the degree-m pullbacks: monomials are
/// taken in (weight, enumeration order) and kept when they raise the rank.
SpanningSet min_weight_spanning_set(const ParamTail& tail, std::int64_t m, Execution exec = Execution::serial);

struct Bidegree {
  std::int64_t s = 0;
  std::int64_t t = 0;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// Distinct pullback bidegrees of degree-m monomials, ascending in t.
/// Throws NotMonomialTail when some pullback has more than one term.
std::vector<Bidegree> initial_ideal_complement(const ParamTail& tail, std::int64_t m);

struct AssembledWeight {
  BigInt component_part = 0;
  BigInt tail_part = 0;
  BigInt total = 0;
  /// m in {2, 3}: the component/tail split is the direct count. For larger m
  /// the total is an upper bound until checked against interpolation.
  bool direct = true;
};

/// Weight of a monomial basis of H^0(Y, L^m) for Y = C ∪ R: m nu times
/// h^0(C, L_C^m(-p)) plus the tail's minimal spanning weight.
AssembledWeight assemble_two_component_weight(const EmbeddingConfig& config, const ParamTail& tail, std::int64_t m);

}  // namespace hmstab
