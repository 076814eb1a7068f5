#include "hmstab/curve_model.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

#include "hmstab/error.hpp"

namespace hmstab {

CurveGraph::CurveGraph(std::vector<ComponentDecl> components, std::vector<CurveEdge> edges)
    : components_(std::move(components)), edges_(std::move(edges)) {
  std::set<std::string> labels;
  for (const auto& c : components_) {
    if (!labels.insert(c.label).second) throw Error(ErrorCode::InvalidCurve, "duplicate component label '" + c.label + "'");
    if (c.geometric_genus < 0 || c.internal_nodes < 0 || c.internal_cusps < 0)
      throw Error(ErrorCode::InvalidCurve, "negative count on component '" + c.label + "'");
  }
  for (const auto& e : edges_) {
    if (!labels.count(e.a) || !labels.count(e.b))
      throw Error(ErrorCode::InvalidCurve, "edge " + e.a + "-" + e.b + " names an unknown component");
    if (e.a == e.b) throw Error(ErrorCode::InvalidCurve, "self edge on '" + e.a + "'; count it as an internal node");
  }
}

std::size_t CurveGraph::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].label == label) return i;
  throw Error(ErrorCode::InvalidCurve, "no component '" + label + "'");
}

std::int64_t CurveGraph::total_cusps() const {
  return std::accumulate(components_.begin(), components_.end(), std::int64_t{0},
                         [](std::int64_t acc, const ComponentDecl& c) { return acc + c.internal_cusps; });
}

std::int64_t CurveGraph::attachment_points(std::size_t i) const {
  const auto& label = components_[i].label;
  std::int64_t count = 2 * components_[i].internal_nodes;
  for (const auto& e : edges_) count += (e.a == label) + (e.b == label);
  return count;
}

namespace {

// Connectivity of the components selected by `mask` using only edges inside it.
bool induced_connected(const CurveGraph& curve, const std::vector<bool>& mask) {
  const std::size_t n = curve.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& e : curve.edges()) {
    const auto a = curve.index_of(e.a);
    const auto b = curve.index_of(e.b);
    if (mask[a] && mask[b]) parent[find(a)] = find(b);
  }
  std::size_t roots = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (mask[i] && find(i) == i) ++roots;
  return roots == 1;
}

std::vector<bool> mask_of(const CurveGraph& curve, const Subcurve& sub) {
  std::vector<bool> mask(curve.size(), false);
  for (const auto& label : sub.labels) mask[curve.index_of(label)] = true;
  return mask;
}

std::int64_t genus_of_mask(const CurveGraph& curve, const std::vector<bool>& mask) {
  std::int64_t total = 0;
  std::int64_t vertices = 0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (!mask[i]) continue;
    const auto& c = curve.components()[i];
    total += c.geometric_genus + c.internal_nodes + c.internal_cusps;
    ++vertices;
  }
  for (const auto& e : curve.edges())
    if (mask[curve.index_of(e.a)] && mask[curve.index_of(e.b)]) ++total;
  return total - vertices + 1;
}

void require_genus(const CurveGraph& curve, std::int64_t minimum) {
  const auto pa = arithmetic_genus(curve);
  if (pa < minimum)
    throw Error(ErrorCode::GenusTooSmall,
                "arithmetic genus " + std::to_string(pa) + " < " + std::to_string(minimum));
}

bool rational_components_stable(const CurveGraph& curve) {
  for (std::size_t i = 0; i < curve.size(); ++i)
    if (curve.components()[i].is_smooth_rational() && curve.attachment_points(i) < 3) return false;
  return true;
}

}  // namespace

bool CurveGraph::is_connected() const {
  if (components_.empty()) return false;
  return induced_connected(*this, std::vector<bool>(components_.size(), true));
}

std::int64_t arithmetic_genus(const CurveGraph& curve) {
  if (!curve.is_connected()) throw Error(ErrorCode::Disconnected, "curve is not connected");
  return genus_of_mask(curve, std::vector<bool>(curve.size(), true));
}

std::int64_t arithmetic_genus(const CurveGraph& curve, const Subcurve& sub) {
  const auto mask = mask_of(curve, sub);
  if (sub.labels.empty() || !induced_connected(curve, mask))
    throw Error(ErrorCode::Disconnected, "subcurve is not connected");
  return genus_of_mask(curve, mask);
}

std::int64_t boundary_edges(const CurveGraph& curve, const Subcurve& sub) {
  std::int64_t count = 0;
  for (const auto& e : curve.edges()) count += (sub.labels.count(e.a) != 0) != (sub.labels.count(e.b) != 0);
  return count;
}

std::vector<Subcurve> find_genus_one_tails(const CurveGraph& curve) {
  const std::size_t n = curve.size();
  if (n < 2) return {};
  if (n > 20) throw Error(ErrorCode::TooLarge, "tail search is exhaustive; at most 20 components");
  std::vector<Subcurve> out;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t bits = 1; bits < full; ++bits) {
    std::vector<bool> mask(n);
    Subcurve sub;
    for (std::size_t i = 0; i < n; ++i) {
      mask[i] = (bits >> i) & 1U;
      if (mask[i]) sub.labels.insert(curve.components()[i].label);
    }
    if (boundary_edges(curve, sub) != 1 || !induced_connected(curve, mask)) continue;
    if (genus_of_mask(curve, mask) == 1) out.push_back(std::move(sub));
  }
  std::sort(out.begin(), out.end(), [](const Subcurve& a, const Subcurve& b) {
    if (a.labels.size() != b.labels.size()) return a.labels.size() < b.labels.size();
    return a.labels < b.labels;
  });
  return out;
}

bool is_dm_stable(const CurveGraph& curve) {
  require_genus(curve, 2);
  return curve.total_cusps() == 0 && rational_components_stable(curve);
}

bool is_weakly_pseudostable(const CurveGraph& curve) {
  require_genus(curve, 3);
  return rational_components_stable(curve);
}

bool is_pseudostable(const CurveGraph& curve) {
  require_genus(curve, 3);
  return rational_components_stable(curve) && find_genus_one_tails(curve).empty();
}

CurveGraph pseudostabilize(const CurveGraph& curve) {
  if (!is_weakly_pseudostable(curve)) throw Error(ErrorCode::NotWeaklyPseudostable, "input is not weakly pseudostable");
  CurveGraph current = curve;
  for (auto tails = find_genus_one_tails(current); !tails.empty(); tails = find_genus_one_tails(current)) {
    const Subcurve& tail = tails.front();
    std::string attach;
    for (const auto& e : current.edges()) {
      const bool in_a = tail.labels.count(e.a) != 0;
      const bool in_b = tail.labels.count(e.b) != 0;
      if (in_a != in_b) attach = in_a ? e.b : e.a;
    }
    std::vector<ComponentDecl> components;
    for (auto c : current.components()) {
      if (tail.labels.count(c.label)) continue;
      if (c.label == attach) ++c.internal_cusps;
      components.push_back(std::move(c));
    }
    std::vector<CurveEdge> edges;
    for (const auto& e : current.edges())
      if (!tail.labels.count(e.a) && !tail.labels.count(e.b)) edges.push_back(e);
    current = CurveGraph(std::move(components), std::move(edges));
  }
  return current;
}

namespace {

using Decoration = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>;

Decoration decoration(const CurveGraph& curve, std::size_t i) {
  const auto& c = curve.components()[i];
  return {c.geometric_genus, c.internal_nodes, c.internal_cusps, curve.attachment_points(i)};
}

std::vector<std::vector<int>> multiplicities(const CurveGraph& curve) {
  std::vector<std::vector<int>> adj(curve.size(), std::vector<int>(curve.size(), 0));
  for (const auto& e : curve.edges()) {
    const auto a = curve.index_of(e.a);
    const auto b = curve.index_of(e.b);
    ++adj[a][b];
    ++adj[b][a];
  }
  return adj;
}

}  // namespace

bool graphs_isomorphic(const CurveGraph& a, const CurveGraph& b) {
  if (a.size() > 12 || b.size() > 12) throw Error(ErrorCode::TooLarge, "isomorphism search handles at most 12 components");
  if (a.size() != b.size() || a.edges().size() != b.edges().size()) return false;
  const std::size_t n = a.size();
  std::vector<Decoration> da(n), db(n);
  for (std::size_t i = 0; i < n; ++i) {
    da[i] = decoration(a, i);
    db[i] = decoration(b, i);
  }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  const auto adj_a = multiplicities(a);
  const auto adj_b = multiplicities(b);
  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);

  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || da[i] != db[j]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < i && consistent; ++k) consistent = adj_a[i][k] == adj_b[j][image[k]];
      if (!consistent) continue;
      used[j] = true;
      image[i] = j;
      if (extend(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return extend(0);
}

bool chow_identified(const CurveGraph& a, const CurveGraph& b) {
  if (arithmetic_genus(a) != arithmetic_genus(b)) throw Error(ErrorCode::GenusMismatch, "curves have different genus");
  const CurveGraph pa = pseudostabilize(a);
  const CurveGraph pb = pseudostabilize(b);
  if (!graphs_isomorphic(pa, pb)) return false;
  if (graphs_isomorphic(a, b)) return true;
  return pa.total_cusps() > 0 && pb.total_cusps() > 0;
}

CurveGraph elliptic_tail_curve(std::int64_t g) {
  return CurveGraph({{"C", g - 1, 0, 0}, {"E", 1, 0, 0}}, {{"C", "E"}});
}

CurveGraph cuspidal_tail_curve(std::int64_t g) {
  return CurveGraph({{"C", g - 1, 0, 0}, {"R", 0, 0, 1}}, {{"C", "R"}});
}

CurveGraph cuspidal_curve(std::int64_t g) { return CurveGraph({{"C", g - 1, 0, 1}}, {}); }

}  // namespace hmstab
