#include "hmstab/exact_algebra.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "hmstab/error.hpp"

namespace hmstab {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw Error(ErrorCode::VerificationFailure, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

UniPoly::UniPoly(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

void UniPoly::trim() {
  while (!coefficients_.empty() && coefficients_.back().sign() == 0) coefficients_.pop_back();
}

Rational UniPoly::coeff(int power) const {
  if (power < 0 || power > degree()) return Rational(0);
  return coefficients_[static_cast<std::size_t>(power)];
}

Rational UniPoly::operator()(const Rational& at) const {
  Rational acc(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coefficients_.size() > coefficients_.size()) coefficients_.resize(o.coefficients_.size());
  for (std::size_t k = 0; k < o.coefficients_.size(); ++k) coefficients_[k] += o.coefficients_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coefficients_.size() > coefficients_.size()) coefficients_.resize(o.coefficients_.size());
  for (std::size_t k = 0; k < o.coefficients_.size(); ++k) coefficients_[k] -= o.coefficients_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) out[i + j] += a.coefficients_[i] * b.coefficients_[j];
  return UniPoly(std::move(out));
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
  std::vector<Rational> out = p.coefficients_;
  for (auto& x : out) x *= c;
  return UniPoly(std::move(out));
}

namespace {

std::string term(const std::string& var, int power) {
  if (power == 0) return "";
  if (power == 1) return var;
  return var + "^" + std::to_string(power);
}

}  // namespace

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeff(k);
    if (c.sign() == 0) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    Rational mag = c.sign() < 0 ? -c : c;
    if (k == 0 || mag != Rational(1)) os << mag;
    os << term(var, k);
    first = false;
  }
  return os.str();
}

std::string GLinearPoly::to_string() const {
  const int top = std::max(base.degree(), g_part.degree());
  if (top < 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = top; k >= 0; --k) {
    const UniPoly coefficient({base.coeff(k), g_part.coeff(k)});
    if (coefficient.is_zero()) continue;
    if (!first) os << " + ";
    if (coefficient.degree() == 0 || k == 0) {
      os << (coefficient.degree() == 0 ? coefficient.coeff(0).to_string() : coefficient.to_string("g"));
    } else {
      os << "(" << coefficient.to_string("g") << ")";
    }
    os << term("m", k);
    first = false;
  }
  std::string out = os.str();
  for (auto pos = out.find(" + -"); pos != std::string::npos; pos = out.find(" + -")) out.replace(pos, 4, " - ");
  return out;
}

UniPoly poly_fit(std::span<const Sample> samples, int degree_bound) {
  if (degree_bound < 0) throw Error(ErrorCode::InsufficientSamples, "negative degree bound");
  const auto needed = static_cast<std::size_t>(degree_bound) + 1;
  if (samples.size() < needed)
    throw Error(ErrorCode::InsufficientSamples,
                "need " + std::to_string(needed) + " samples, got " + std::to_string(samples.size()));
  std::set<std::int64_t> seen;
  for (const auto& s : samples)
    if (!seen.insert(s.at).second) throw Error(ErrorCode::DegenerateSamples, "repeated point " + std::to_string(s.at));

  // Lagrange form over the first degree_bound + 1 points.
  UniPoly result;
  for (std::size_t i = 0; i < needed; ++i) {
    UniPoly basis = UniPoly::constant(samples[i].value);
    for (std::size_t j = 0; j < needed; ++j) {
      if (i == j) continue;
      const Rational denom = Rational(samples[i].at) - Rational(samples[j].at);
      basis = basis * UniPoly({Rational(-samples[j].at) / denom, Rational(1) / denom});
    }
    result += basis;
  }
  for (std::size_t i = needed; i < samples.size(); ++i) {
    const Rational got = result(Rational(samples[i].at));
    if (got != samples[i].value)
      throw Error(ErrorCode::VerificationFailure, "sample at " + std::to_string(samples[i].at) + " is " +
                                                      samples[i].value.to_string() + ", fit gives " + got.to_string());
  }
  return result;
}

Rational poly_eval(const UniPoly& p, std::int64_t at) { return p(Rational(at)); }

GLinearPoly glinear_fit(std::span<const GMSample> samples, int m_degree_bound) {
  std::map<std::int64_t, std::vector<Sample>> by_genus;
  for (const auto& s : samples) by_genus[s.g].push_back({s.m, s.value});
  if (by_genus.size() < 2) throw Error(ErrorCode::InsufficientSamples, "need at least two distinct genera");

  auto it = by_genus.begin();
  const std::int64_t g1 = it->first;
  const UniPoly p1 = poly_fit(it->second, m_degree_bound);
  ++it;
  const std::int64_t g2 = it->first;
  const UniPoly p2 = poly_fit(it->second, m_degree_bound);

  GLinearPoly out;
  out.g_part = Rational(1, 1) / Rational(g2 - g1) * (p2 - p1);
  out.base = p1 - Rational(g1) * out.g_part;

  for (const auto& s : samples) {
    const Rational got = out(Rational(s.g), Rational(s.m));
    if (got != s.value)
      throw Error(ErrorCode::VerificationFailure, "sample (g=" + std::to_string(s.g) + ", m=" + std::to_string(s.m) +
                                                      ") is " + s.value.to_string() + ", fit gives " + got.to_string());
  }
  return out;
}

}  // namespace hmstab
