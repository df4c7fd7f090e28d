#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plumb/intalg.hpp"

namespace plumb {

/// Self-intersection number D_i^2 = -m_i, or INF ("the main relation of this
/// curve is dropped").
class SelfInt {
 public:
  constexpr SelfInt() = default;
  constexpr explicit SelfInt(std::int64_t v) : value_(v) {}
  static constexpr SelfInt inf() {
    SelfInt s;
    s.infinite_ = true;
    return s;
  }

  constexpr bool is_inf() const { return infinite_; }
  /// Throws InfiniteWeight on INF.
  std::int64_t value() const;
  /// m = -self_int.
  std::int64_t m() const { return -value(); }

  std::string to_string() const;
  friend constexpr bool operator==(const SelfInt&, const SelfInt&) = default;

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

struct Vertex {
  int id = 0;
  int genus = 0;
  SelfInt self_int;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Unordered pair; stored with u <= v once inside a PlumbingGraph.
struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Weighted dual graph of a normal crossings divisor. Vertices are kept
/// sorted by id and edges normalized and sorted, so two graphs with the same
/// content compare equal. Construction does not validate; see validate().
class PlumbingGraph {
 public:
  PlumbingGraph() = default;
  PlumbingGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  bool has_vertex(int id) const;
  const Vertex& vertex(int id) const;
  std::size_t index_of(int id) const;
  std::vector<int> ids() const;
  int max_id() const;

  /// Neighbor ids with multiplicity, ascending.
  std::vector<int> neighbors(int id) const;
  /// Number of edge ends at the vertex (multi-edges counted).
  int valency(int id) const;
  int edge_multiplicity(int a, int b) const;

  /// Components as sorted id lists, in order of their smallest id.
  std::vector<std::vector<int>> components() const;
  bool is_connected() const;
  /// |E| - |V| + #components.
  int betti_number() const;
  bool is_tree() const { return is_connected() && betti_number() == 0; }

  /// Induced subgraph on the given ids.
  PlumbingGraph induced(const std::vector<int>& ids) const;

  friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

/// Returns the graph iff every invariant holds (unique ids, existing
/// endpoints, no self-loops, genus >= 0, connected).
PlumbingGraph validate(const PlumbingGraph& raw);

enum class ShapeKind { LinearTree, Comb, GeneralTree, HasCycles };

struct GraphShape {
  ShapeKind kind = ShapeKind::LinearTree;
  std::optional<int> rim;
  std::map<int, int> valency;
};

std::string_view to_string(ShapeKind kind);

GraphShape classify_shape(const PlumbingGraph& g);

/// Symmetric matrix indexed by vertex position (ascending id).
IntMatrix intersection_matrix(const PlumbingGraph& g);

std::map<int, bool> nef_on_genus_zero(const PlumbingGraph& g);

struct MinimalityReport {
  bool minimal = true;
  std::vector<int> violating;
};

/// A vertex violates minimality when it is a rational (-1)-curve meeting at
/// most two other curves, each in exactly one point.
MinimalityReport is_minimal_gnc(const PlumbingGraph& g);

/// Vertices of a linear tree from the end with the smaller id to the other.
std::vector<int> path_order(const PlumbingGraph& g);

/// Canonical string for a weighted tree, equal for isomorphic trees.
std::string canonical_tree_form(const PlumbingGraph& g);

}  // namespace plumb
