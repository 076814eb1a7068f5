#pragma once

// Independent oracles and random generators shared by the unit, property and
// acceptance tests. Nothing here calls the engine code it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hmstab/curve_model.hpp"
#include "hmstab/monomial_engine.hpp"

namespace oracle {

using hmstab::BigInt;

// Weight of the elliptic tail filtration summed jump by jump:
// dim W_0 = dim W_1 = 1, dim W_r = r for 2 <= r < m nu, dim W_{m nu} = m d - g + 1.
inline BigInt elliptic_weight(std::int64_t g, std::int64_t nu, std::int64_t d, std::int64_t m) {
  const std::int64_t top = m * nu;
  const std::int64_t total = m * d - g + 1;
  BigInt w = 0;
  std::int64_t previous = 1;
  for (std::int64_t r = 2; r < top; ++r) {
    w += BigInt(r) * (r - previous);
    previous = r;
  }
  w += BigInt(top) * (total - previous);
  return w;
}

// A cusp has value semigroup {0, 2, 3, ...}; one basis section per attainable
// order s < 4m carries weight 4m - s, the rest carry weight 0.
inline BigInt cusp_weight(std::int64_t m) {
  BigInt w = 0;
  for (std::int64_t s = 0; s < 4 * m; ++s)
    if (s != 1) w += 4 * m - s;
  return w;
}

// p_a via the normalization: sum of (genus - 1) over components plus the
// number of singular points plus one, with the cycle rank found by DFS.
inline std::int64_t arithmetic_genus(const hmstab::CurveGraph& curve) {
  const std::size_t n = curve.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : curve.edges()) {
    adj[curve.index_of(e.a)].push_back(curve.index_of(e.b));
    adj[curve.index_of(e.b)].push_back(curve.index_of(e.a));
  }
  std::vector<bool> seen(n, false);
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    seen[v] = true;
    for (auto u : adj[v])
      if (!seen[u]) visit(u);
  };
  if (n > 0) visit(0);
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) return INT64_MIN;
  std::int64_t chi_normalization = 0;
  std::int64_t delta = static_cast<std::int64_t>(curve.edges().size());
  for (const auto& c : curve.components()) {
    chi_normalization += 1 - c.geometric_genus;
    delta += c.internal_nodes + c.internal_cusps;
  }
  return 1 - (chi_normalization - delta);
}

// Rank of integer-coefficient binary forms modulo a large prime.
inline std::size_t modular_rank(std::vector<std::vector<std::int64_t>> rows) {
  constexpr std::int64_t p = 1000000007;
  auto power = [](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    b %= p;
    while (e > 0) {
      if (e & 1) r = static_cast<std::int64_t>((__int128)r * b % p);
      b = static_cast<std::int64_t>((__int128)b * b % p);
      e >>= 1;
    }
    return r;
  };
  for (auto& row : rows)
    for (auto& x : row) x = ((x % p) + p) % p;
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::int64_t inv = power(rows[rank][c], p - 2);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::int64_t f = static_cast<std::int64_t>((__int128)rows[r][c] * inv % p);
      for (std::size_t k = c; k < cols; ++k)
        rows[r][k] = static_cast<std::int64_t>(((__int128)rows[r][k] - (__int128)f * rows[rank][k] % p + p) % p);
    }
    ++rank;
  }
  return rank;
}

struct Candidate {
  std::int64_t weight = 0;
  std::vector<std::int64_t> image;  // coefficient vector in s^{D-i} t^i
};

// Multiplies the integer pullbacks out by hand for every degree-m monomial.
inline std::vector<Candidate> candidates(const hmstab::ParamTail& tail, std::int64_t m) {
  const std::size_t k = tail.size();
  std::vector<std::vector<std::int64_t>> forms;
  for (const auto& c : tail.coords()) {
    std::vector<std::int64_t> f;
    for (const auto& q : c.pullback.coeffs()) f.push_back(std::stoll(q.to_string()));
    forms.push_back(f);
  }
  std::vector<Candidate> out;
  std::vector<std::int64_t> e(k, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i + 1 == k) {
      e[i] = left;
      std::vector<std::int64_t> prod{1};
      std::int64_t weight = 0;
      for (std::size_t j = 0; j < k; ++j) {
        weight += e[j] * tail.coords()[j].weight;
        for (std::int64_t rep = 0; rep < e[j]; ++rep) {
          std::vector<std::int64_t> next(prod.size() + forms[j].size() - 1, 0);
          for (std::size_t a = 0; a < prod.size(); ++a)
            for (std::size_t b = 0; b < forms[j].size(); ++b) next[a + b] += prod[a] * forms[j][b];
          prod = next;
        }
      }
      out.push_back({weight, prod});
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      e[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, m);
  return out;
}

// Least total weight over every subset of rank-many monomials whose images
// span the full image space.
inline BigInt exhaustive_min_weight(const hmstab::ParamTail& tail, std::int64_t m) {
  const auto cands = candidates(tail, m);
  std::vector<std::vector<std::int64_t>> all;
  for (const auto& c : cands) all.push_back(c.image);
  const std::size_t r = modular_rank(all);
  const std::size_t n = cands.size();
  std::vector<std::size_t> pick(r);
  std::iota(pick.begin(), pick.end(), 0);
  std::int64_t best = INT64_MAX;
  while (true) {
    std::int64_t w = 0;
    for (auto i : pick) w += cands[i].weight;
    if (w < best) {
      std::vector<std::vector<std::int64_t>> sub;
      for (auto i : pick) sub.push_back(cands[i].image);
      if (modular_rank(sub) == r) best = w;
    }
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return BigInt(best);
}

}  // namespace oracle

namespace gen {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Connected or not, arbitrary decorations, up to max_components components.
inline hmstab::CurveGraph random_graph(Rng& rng, std::int64_t max_components, bool connected) {
  const auto n = uniform(rng, 1, max_components);
  std::vector<hmstab::ComponentDecl> comps;
  for (std::int64_t i = 0; i < n; ++i)
    comps.push_back({"v" + std::to_string(i), uniform(rng, 0, 3), uniform(rng, 0, 1), uniform(rng, 0, 1)});
  std::vector<hmstab::CurveEdge> edges;
  if (connected)
    for (std::int64_t i = 1; i < n; ++i) edges.push_back({comps[uniform(rng, 0, i - 1)].label, comps[i].label});
  const auto extra = n > 1 ? uniform(rng, 0, 3) : 0;
  for (std::int64_t k = 0; k < extra; ++k) {
    const auto a = uniform(rng, 0, n - 1);
    auto b = uniform(rng, 0, n - 1);
    if (a == b) continue;
    edges.push_back({comps[a].label, comps[b].label});
  }
  return hmstab::CurveGraph(comps, edges);
}

// A weakly pseudostable curve: a connected core of positive-genus components,
// possibly with a few tails of arithmetic genus 1 hanging off it. Tails are a
// smooth elliptic curve, a rational curve with a cusp or one with a node, or a
// chain of an elliptic curve and a rational bridge.
inline hmstab::CurveGraph random_weakly_pseudostable(Rng& rng) {
  std::vector<hmstab::ComponentDecl> comps;
  std::vector<hmstab::CurveEdge> edges;
  const auto core = uniform(rng, 1, 3);
  for (std::int64_t i = 0; i < core; ++i)
    comps.push_back({"c" + std::to_string(i), uniform(rng, 1, 3), uniform(rng, 0, 1), uniform(rng, 0, 1)});
  for (std::int64_t i = 1; i < core; ++i) edges.push_back({comps[uniform(rng, 0, i - 1)].label, comps[i].label});
  if (core > 1 && uniform(rng, 0, 1) == 1) edges.push_back({"c0", comps[core - 1].label});
  const auto tails = uniform(rng, 0, 3);
  for (std::int64_t t = 0; t < tails; ++t) {
    const std::string anchor = comps[uniform(rng, 0, core - 1)].label;
    const std::string label = "t" + std::to_string(t);
    switch (uniform(rng, 0, 2)) {
      case 0:
        comps.push_back({label, 1, 0, 0});
        break;
      case 1:
        comps.push_back({label, 0, 0, 1});
        break;
      default:
        comps.push_back({label, 0, 1, 0});
        break;
    }
    edges.push_back({anchor, label});
  }
  // Keep total arithmetic genus at least 3.
  std::int64_t pa = 1 - static_cast<std::int64_t>(comps.size()) + static_cast<std::int64_t>(edges.size());
  for (const auto& c : comps) pa += c.geometric_genus + c.internal_nodes + c.internal_cusps;
  if (pa < 3) comps[0].geometric_genus += 3 - pa;
  return hmstab::CurveGraph(comps, edges);
}

// Random labels for the same curve.
inline hmstab::CurveGraph relabel(const hmstab::CurveGraph& curve, Rng& rng) {
  std::vector<std::size_t> perm(curve.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::map<std::string, std::string> rename;
  std::vector<hmstab::ComponentDecl> comps;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const auto& c = curve.components()[perm[i]];
    rename[c.label] = "r" + std::to_string(i);
    comps.push_back({rename[c.label], c.geometric_genus, c.internal_nodes, c.internal_cusps});
  }
  std::vector<hmstab::CurveEdge> edges;
  for (const auto& e : curve.edges()) edges.push_back({rename[e.b], rename[e.a]});
  std::shuffle(edges.begin(), edges.end(), rng);
  return hmstab::CurveGraph(comps, edges);
}

// Monomial pullbacks s^{delta-b} t^b of a common degree; the first coordinate
// is t^delta so that one coordinate survives at the node [0 : 1].
inline hmstab::ParamTail random_monomial_tail(Rng& rng, std::int64_t max_coords) {
  const auto k = uniform(rng, 2, max_coords);
  const auto delta = uniform(rng, 1, 4);
  std::vector<hmstab::TailCoordinate> coords;
  coords.push_back({uniform(rng, 0, 5), hmstab::BinaryForm::monomial(0, delta)});
  for (std::int64_t i = 1; i < k; ++i) {
    const auto b = uniform(rng, 0, delta);
    coords.push_back({uniform(rng, 0, 5), hmstab::BinaryForm::monomial(delta - b, b)});
  }
  return hmstab::ParamTail(coords);
}

// Binary forms with small integer coefficients, some with several terms.
inline hmstab::ParamTail random_integer_tail(Rng& rng, std::int64_t max_coords) {
  const auto k = uniform(rng, 2, max_coords);
  const auto delta = uniform(rng, 1, 3);
  std::vector<hmstab::TailCoordinate> coords;
  coords.push_back({uniform(rng, 0, 5), hmstab::BinaryForm::monomial(0, delta)});
  for (std::int64_t i = 1; i < k; ++i) {
    std::vector<hmstab::Rational> c;
    bool any = false;
    for (std::int64_t j = 0; j <= delta; ++j) {
      const auto v = uniform(rng, -2, 2);
      any = any || v != 0;
      c.emplace_back(static_cast<long>(v));
    }
    if (!any) c[0] = hmstab::Rational(1);
    coords.push_back({uniform(rng, 0, 5), hmstab::BinaryForm(delta, c)});
  }
  return hmstab::ParamTail(coords);
}

}  // namespace gen
