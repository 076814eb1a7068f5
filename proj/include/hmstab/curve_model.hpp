#pragma once

/**
 * @file curve_model.hpp
 * @brief Decorated dual graphs of reduced connected curves with nodes and cusps.
 *
 * A component carries its geometric genus and counts of internal nodes and
 * cusps; each edge is one node joining two distinct components. Singular
 * points are not individually labeled.
 *
 * The classifiers approximate "finite automorphism group" by requiring every
 * smooth rational component to meet the rest of the curve in at least three
 * points; rational components carrying a cusp or node are only excluded
 * through the genus-one-tail rule. Exotic configurations (for example a
 * rational component with one cusp and one node sitting in a chain) can be
 * misclassified by this surrogate.
 */

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hmstab {

struct ComponentDecl {
  std::string label;
  std::int64_t geometric_genus = 0;
  std::int64_t internal_nodes = 0;
  std::int64_t internal_cusps = 0;

  bool is_smooth_rational() const { return geometric_genus == 0 && internal_nodes == 0 && internal_cusps == 0; }
  friend bool operator==(const ComponentDecl&, const ComponentDecl&) = default;
};

struct CurveEdge {
  std::string a;
  std::string b;
  friend bool operator==(const CurveEdge&, const CurveEdge&) = default;
};

class CurveGraph {
 public:
  CurveGraph() = default;
  /// Throws InvalidCurve on duplicate labels, unknown edge endpoints, self
  /// loops (use internal_nodes) or negative counts. Connectivity is checked
  /// by the operations that need it.
  CurveGraph(std::vector<ComponentDecl> components, std::vector<CurveEdge> edges);

  const std::vector<ComponentDecl>& components() const { return components_; }
  const std::vector<CurveEdge>& edges() const { return edges_; }
  std::size_t size() const { return components_.size(); }

  /// Index of a component label; throws InvalidCurve when absent.
  std::size_t index_of(const std::string& label) const;
  const ComponentDecl& component(const std::string& label) const { return components_[index_of(label)]; }
  std::int64_t total_cusps() const;
  bool is_connected() const;
  /// Edge endpoints on component i plus two per internal node.
  std::int64_t attachment_points(std::size_t i) const;

  friend bool operator==(const CurveGraph&, const CurveGraph&) = default;

 private:
  std::vector<ComponentDecl> components_;
  std::vector<CurveEdge> edges_;
};

/// A connected set of components; edges are induced from the parent curve.
struct Subcurve {
  std::set<std::string> labels;
  friend bool operator==(const Subcurve&, const Subcurve&) = default;
};

/// p_a = sum(g_i + nodes_i + cusps_i) + #edges - #components + 1.
/// Throws Disconnected.
std::int64_t arithmetic_genus(const CurveGraph& curve);
std::int64_t arithmetic_genus(const CurveGraph& curve, const Subcurve& sub);

/// Number of edges with exactly one endpoint in `sub`.
std::int64_t boundary_edges(const CurveGraph& curve, const Subcurve& sub);

/// Connected proper subcurves of arithmetic genus 1 meeting the rest in one
/// node, ordered by (size, labels). Exhaustive over subsets; throws TooLarge
/// above 20 components.
std::vector<Subcurve> find_genus_one_tails(const CurveGraph& curve);

bool is_dm_stable(const CurveGraph& curve);
bool is_pseudostable(const CurveGraph& curve);
bool is_weakly_pseudostable(const CurveGraph& curve);

/// Replaces each genus-one tail by a cusp on the component it attaches to,
/// until none remain. Throws NotWeaklyPseudostable.
CurveGraph pseudostabilize(const CurveGraph& curve);

/// Decoration-preserving multigraph isomorphism, labels ignored. Throws
/// TooLarge above 12 components.
bool graphs_isomorphic(const CurveGraph& a, const CurveGraph& b);

/// Same pseudostabilization, and either isomorphic or carrying a cusp there.
bool chow_identified(const CurveGraph& a, const CurveGraph& b);

/// The three curves of the flow picture for a given total genus g >= 3:
/// X = C ∪ E (smooth elliptic tail), Y = C ∪ R (rational cuspidal tail),
/// Z = C with one cusp, with C smooth of genus g - 1.
CurveGraph elliptic_tail_curve(std::int64_t g);
CurveGraph cuspidal_tail_curve(std::int64_t g);
CurveGraph cuspidal_curve(std::int64_t g);

}  // namespace hmstab
