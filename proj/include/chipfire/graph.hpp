#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "chipfire/types.hpp"

namespace chipfire {

struct VertexRecord {
  std::string id;
  Int weight = 1;
};

struct EdgeRecord {
  Index u = 0;
  Index v = 0;
  Int weight = 1;
  Int multiplicity = 1;
};

// Input form of a graph: endpoints are given by vertex id.
struct GraphDescription {
  struct Edge {
    std::string u;
    std::string v;
    Int weight = 1;
    Int multiplicity = 1;
  };
  std::vector<VertexRecord> vertices;
  std::vector<Edge> edges;
};

struct Charges {
  IntVector per_vertex;  // c(v) = c(G) / w(v)
  Int graph = 1;         // c(G) = lcm of the vertex weights
};

/// A finite connected loop-free multigraph with positive vertex and edge
/// weights such that every edge weight divides the weights of both of its
/// endpoints.
///
/// Vertices are densely indexed in the order they were listed. The graph is
/// immutable once built; the Laplacian and charges are computed at build time.
class WeightedGraph {
 public:
  /// Validates and builds. Throws Error with kind LoopEdge, DisconnectedGraph,
  /// DivisibilityViolation, NonPositiveWeight or UnknownVertex naming the
  /// offending vertex or edge.
  static WeightedGraph build(const GraphDescription& description);

  Index size() const { return static_cast<Index>(vertices_.size()); }
  const VertexRecord& vertex(Index v) const { return vertices_[static_cast<std::size_t>(v)]; }
  std::span<const VertexRecord> vertices() const { return vertices_; }
  std::span<const EdgeRecord> edges() const { return edges_; }
  Int weight(Index v) const { return vertex(v).weight; }

  std::optional<Index> find(const std::string& id) const;
  /// Like find() but throws UnknownVertex.
  Index index_of(const std::string& id) const;

  const LaplacianMatrix& laplacian() const { return laplacian_; }
  const Charges& charges() const { return charges_; }
  Int charge(Index v) const { return charges_.per_vertex(v); }
  Int valency(Index v) const { return laplacian_(v, v); }

  /// Chips `to` receives when `from` lends once: sum over edges between them
  /// of w(from)/w(e). Zero for non-adjacent pairs.
  Int transfer(Index from, Index to) const { return from == to ? 0 : -laplacian_(to, from); }

  /// Distinct neighbours of v in increasing index order.
  std::span<const Index> neighbors(Index v) const { return adjacency_[static_cast<std::size_t>(v)]; }

  /// Edge records incident to v (indices into edges()).
  std::span<const std::size_t> incident_edges(Index v) const { return incident_[static_cast<std::size_t>(v)]; }

  bool is_unweighted() const;

  GraphDescription description() const;

 private:
  WeightedGraph() = default;

  std::vector<VertexRecord> vertices_;
  std::vector<EdgeRecord> edges_;
  std::unordered_map<std::string, Index> index_;
  std::vector<std::vector<Index>> adjacency_;
  std::vector<std::vector<std::size_t>> incident_;
  LaplacianMatrix laplacian_;
  Charges charges_;
};

inline WeightedGraph build_graph(const GraphDescription& description) {
  return WeightedGraph::build(description);
}

/// Sum over edges at v of w(v)/w(e), counting multiplicity.
Int weighted_valency(const WeightedGraph& g, Index v);

const Charges& charges(const WeightedGraph& g);

const LaplacianMatrix& laplacian(const WeightedGraph& g);

/// D - L*s. Throws DimensionMismatch when sizes disagree with the graph.
Divisor apply_script(const WeightedGraph& g, const Divisor& d, const FiringScript& s);

/// Unit script: one lending move at v.
FiringScript unit_script(const WeightedGraph& g, Index v);

void require_size(const WeightedGraph& g, const IntVector& x, const char* what);

}  // namespace chipfire
