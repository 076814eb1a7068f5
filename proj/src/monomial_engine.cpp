#include "hmstab/monomial_engine.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "hmstab/error.hpp"

namespace hmstab {

namespace {

constexpr std::int64_t kEnumerationLimit = 1'000'000;

}  // namespace

BinaryForm::BinaryForm(std::int64_t degree, std::vector<Rational> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree_ < 0 || static_cast<std::int64_t>(coeffs_.size()) != degree_ + 1)
    throw Error(ErrorCode::InvalidConfig, "binary form of degree " + std::to_string(degree_) + " needs " +
                                              std::to_string(degree_ + 1) + " coefficients");
}

BinaryForm BinaryForm::monomial(std::int64_t s_degree, std::int64_t t_degree) {
  if (s_degree < 0 || t_degree < 0) throw Error(ErrorCode::InvalidConfig, "negative exponent in pullback");
  std::vector<Rational> coeffs(static_cast<std::size_t>(s_degree + t_degree + 1));
  coeffs[static_cast<std::size_t>(t_degree)] = Rational(1);
  return BinaryForm(s_degree + t_degree, std::move(coeffs));
}

bool BinaryForm::is_monomial() const {
  return std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.sign() != 0; }) == 1;
}

std::int64_t BinaryForm::t_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i].sign() != 0) return static_cast<std::int64_t>(i);
  return -1;
}

std::int64_t BinaryForm::order_at_attachment() const {
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    if (coeffs_[i].sign() != 0) return degree_ - static_cast<std::int64_t>(i);
  return -1;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  std::vector<Rational> out(static_cast<std::size_t>(a.degree_ + b.degree_ + 1));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].sign() == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (b.coeffs_[j].sign() != 0) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return BinaryForm(a.degree_ + b.degree_, std::move(out));
}

ParamTail::ParamTail(std::vector<TailCoordinate> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw Error(ErrorCode::InvalidConfig, "tail needs at least one coordinate");
  const std::int64_t delta = coords_.front().pullback.degree();
  bool attaches = false;
  for (const auto& c : coords_) {
    if (c.pullback.degree() != delta) throw Error(ErrorCode::InvalidConfig, "tail pullbacks must share one degree");
    if (c.pullback.order_at_attachment() < 0) throw Error(ErrorCode::InvalidConfig, "zero pullback");
    attaches = attaches || c.pullback.order_at_attachment() == 0;
  }
  if (!attaches) throw Error(ErrorCode::InvalidConfig, "no tail coordinate is nonzero at the attaching node [0:1]");
}

bool ParamTail::is_monomial() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const TailCoordinate& c) { return c.pullback.is_monomial(); });
}

ParamTail cuspidal_tail() {
  // Orders at the node [0:1] are the s-degrees 0, 1, 2, 4; weight = 4 - order.
  return ParamTail({
      {4, BinaryForm::monomial(0, 4)},
      {3, BinaryForm::monomial(1, 3)},
      {2, BinaryForm::monomial(2, 2)},
      {0, BinaryForm::monomial(4, 0)},
  });
}

std::int64_t monomial_count(std::int64_t k, std::int64_t m) {
  if (k <= 0 || m < 0) return k == 0 && m == 0 ? 1 : 0;
  // C(m + k - 1, k - 1) computed incrementally; each prefix is an integer.
  __int128 acc = 1;
  const std::int64_t r = std::min(k - 1, m);
  for (std::int64_t i = 1; i <= r; ++i) {
    acc = acc * (m + k - 1 - r + i) / i;
    if (acc > std::numeric_limits<std::int64_t>::max()) return std::numeric_limits<std::int64_t>::max();
  }
  return static_cast<std::int64_t>(acc);
}

namespace {

void enumerate_into(std::int64_t remaining, std::size_t index, ExponentVector& current,
                    std::vector<ExponentVector>& out) {
  if (index + 1 == current.size()) {
    current[index] = remaining;
    out.push_back(current);
    return;
  }
  for (std::int64_t e = remaining; e >= 0; --e) {
    current[index] = e;
    enumerate_into(remaining - e, index + 1, current, out);
  }
}

}  // namespace

std::vector<ExponentVector> enumerate_monomials(std::int64_t k, std::int64_t m) {
  if (k < 1 || m < 0) throw Error(ErrorCode::InvalidConfig, "need k >= 1 and m >= 0");
  const std::int64_t count = monomial_count(k, m);
  if (count > kEnumerationLimit)
    throw Error(ErrorCode::TooLarge, std::to_string(count) + " monomials exceed the enumeration limit");
  std::vector<ExponentVector> out;
  out.reserve(static_cast<std::size_t>(count));
  ExponentVector current(static_cast<std::size_t>(k), 0);
  enumerate_into(m, 0, current, out);
  return out;
}

BinaryForm pullback(const ExponentVector& mono, const ParamTail& tail) {
  if (mono.size() != tail.size()) throw Error(ErrorCode::InvalidConfig, "exponent vector does not match tail");
  BinaryForm out;  // the constant 1
  for (std::size_t i = 0; i < mono.size(); ++i)
    for (std::int64_t e = 0; e < mono[i]; ++e) out = out * tail.coords()[i].pullback;
  return out;
}

std::int64_t monomial_weight(const ExponentVector& mono, const ParamTail& tail) {
  std::int64_t w = 0;
  for (std::size_t i = 0; i < mono.size(); ++i) w += mono[i] * tail.coords()[i].weight;
  return w;
}

std::vector<TailMonomial> tail_monomials(const ParamTail& tail, std::int64_t m, Execution exec) {
  const auto monos = enumerate_monomials(static_cast<std::int64_t>(tail.size()), m);
  std::vector<TailMonomial> out(monos.size());
  const auto count = static_cast<std::int64_t>(monos.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      const auto& mono = monos[static_cast<std::size_t>(i)];
      out[static_cast<std::size_t>(i)] = {mono, monomial_weight(mono, tail), pullback(mono, tail)};
    }
  } else {
    for (std::int64_t i = 0; i < count; ++i) {
      const auto& mono = monos[static_cast<std::size_t>(i)];
      out[static_cast<std::size_t>(i)] = {mono, monomial_weight(mono, tail), pullback(mono, tail)};
    }
  }
  return out;
}

namespace {

// Incremental row echelon form over Q.
class EchelonBasis {
 public:
  /// Reduces v against the stored rows; stores it and returns true if it is
  /// independent of them.
  bool insert(std::vector<Rational> v) {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot].sign() == 0) continue;
      const Rational factor = v[pivot] / row[pivot];
      for (std::size_t k = pivot; k < v.size(); ++k)
        if (row[k].sign() != 0) v[k] -= factor * row[k];
    }
    const auto it = std::find_if(v.begin(), v.end(), [](const Rational& c) { return c.sign() != 0; });
    if (it == v.end()) return false;
    rows_.emplace_back(static_cast<std::size_t>(it - v.begin()), std::move(v));
    return true;
  }

 private:
  std::vector<std::pair<std::size_t, std::vector<Rational>>> rows_;
};

}  // namespace

SpanningSet min_weight_spanning_set(const ParamTail& tail, std::int64_t m, Execution exec) {
  auto monos = tail_monomials(tail, m, exec);
  std::stable_sort(monos.begin(), monos.end(),
                   [](const TailMonomial& a, const TailMonomial& b) { return a.weight < b.weight; });
  EchelonBasis echelon;
  SpanningSet out;
  for (auto& mono : monos) {
    if (!echelon.insert(mono.image.coeffs())) continue;
    out.total_weight += BigInt(static_cast<long>(mono.weight));
    out.weights.push_back(mono.weight);
    out.basis.push_back(std::move(mono.exponents));
  }
  return out;
}

std::vector<Bidegree> initial_ideal_complement(const ParamTail& tail, std::int64_t m) {
  if (!tail.is_monomial()) throw Error(ErrorCode::NotMonomialTail, "tail pullbacks are not all monomials");
  std::set<Bidegree> seen;
  const std::int64_t total = m * tail.pullback_degree();
  for (const auto& mono : enumerate_monomials(static_cast<std::int64_t>(tail.size()), m)) {
    const std::int64_t t = pullback(mono, tail).t_degree();
    seen.insert({total - t, t});
  }
  std::vector<Bidegree> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Bidegree& a, const Bidegree& b) { return a.t < b.t; });
  return out;
}

AssembledWeight assemble_two_component_weight(const EmbeddingConfig& config, const ParamTail& tail, std::int64_t m) {
  if (m < 2) throw Error(ErrorCode::DegreeTooSmall, "assembly needs m >= 2");
  AssembledWeight out;
  // Sections on C vanishing at p; every coordinate on the span of C has weight nu.
  const std::int64_t on_component = h0_nonspecial(config.g() - 1, m * config.c(), 1);
  out.component_part = BigInt(static_cast<long>(m * config.nu())) * BigInt(static_cast<long>(on_component));
  out.tail_part = min_weight_spanning_set(tail, m).total_weight;
  out.total = out.component_part + out.tail_part;
  out.direct = m <= 3;

  if (config.is_four_canonical() && tail == cuspidal_tail()) {
    const std::int64_t g = config.g();
    if (m == 2 && out.total != BigInt(120 * g - 149))
      throw Error(ErrorCode::VerificationFailure, "degree-2 assembled weight is not 120g - 149");
    if (m == 3 && out.total != BigInt(276 * g - 343))
      throw Error(ErrorCode::VerificationFailure, "degree-3 assembled weight is not 276g - 343");
  }
  return out;
}

}  // namespace hmstab
