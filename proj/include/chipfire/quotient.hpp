#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chipfire/error.hpp"
#include "chipfire/graph.hpp"

namespace chipfire {

struct HalfEdge {
  std::string id;  // "e{k}a" rooted at the first endpoint of edge k, "e{k}b" at the second
  Index root = 0;
  std::size_t partner = 0;
};

/// Half-edge view of an unweighted base graph. Edge record k contributes
/// half-edges 2k and 2k+1, so parallel edges must be listed as separate
/// records with multiplicity 1.
class HalfEdgeGraph {
 public:
  /// Throws InvalidInput on non-unit weights or multiplicities.
  explicit HalfEdgeGraph(WeightedGraph base);

  const WeightedGraph& base() const { return base_; }
  Index vertex_count() const { return base_.size(); }
  std::size_t half_edge_count() const { return half_edges_.size(); }
  const HalfEdge& half_edge(std::size_t h) const { return half_edges_[h]; }
  std::optional<std::size_t> find_half_edge(const std::string& id) const;

 private:
  WeightedGraph base_;
  std::vector<HalfEdge> half_edges_;
};

/// A graph automorphism given by its action on vertices and half-edges.
struct Permutation {
  std::vector<Index> vertices;
  std::vector<std::size_t> half_edges;

  static Permutation identity(const HalfEdgeGraph& g);
  Permutation after(const Permutation& inner) const;  // this ∘ inner
  bool is_identity() const;
  auto operator<=>(const Permutation&) const = default;
};

struct GroupAction {
  std::vector<Permutation> generators;
};

/// Generator maps keyed by id. Vertices absent from a map are fixed. When
/// half_edges is omitted it is derived from the vertex map, which requires
/// that no two edge records join the same pair of vertices.
struct ActionDescription {
  struct Generator {
    std::map<std::string, std::string> vertices;
    std::optional<std::map<std::string, std::string>> half_edges;
  };
  std::vector<Generator> generators;
};

GroupAction resolve_action(const HalfEdgeGraph& g, const ActionDescription& description);

struct ActionViolation {
  ErrorKind kind = ErrorKind::NotAutomorphism;
  std::string message;
};

struct ActionCheck {
  std::vector<Permutation> group;  // closure of the generators, identity first
  std::optional<ActionViolation> violation;

  bool ok() const { return !violation.has_value(); }
};

inline constexpr std::size_t kDefaultGroupOrderCap = 10'000;

/// Closes the generators and checks that every element is an automorphism
/// that neither swaps the two halves of an edge nor maps a vertex to a
/// neighbour. Throws GroupOrderCapExceeded when the closure grows past cap.
ActionCheck validate_action(const HalfEdgeGraph& g, const GroupAction& action,
                            std::size_t order_cap = kDefaultGroupOrderCap);

struct OrbitData {
  std::size_t group_order = 1;
  std::vector<std::vector<Index>> vertex_orbits;       // sorted, ordered by smallest member
  std::vector<Int> vertex_stabilizers;                 // |Stab(v)| per orbit
  std::vector<std::size_t> vertex_orbit_of;            // per base vertex
  std::vector<std::vector<std::size_t>> edge_orbits;   // edge record indices
  std::vector<Int> edge_stabilizers;                   // |Stab(e)| per orbit
};

/// Throws the violation of validate_action as an Error.
OrbitData orbits_and_stabilizers(const HalfEdgeGraph& g, const GroupAction& action,
                                 std::size_t order_cap = kDefaultGroupOrderCap);

struct QuotientGraph {
  WeightedGraph graph;  // vertex i is orbit i of `orbits`
  OrbitData orbits;
};

/// One vertex per vertex orbit weighted by its stabilizer order, one edge
/// per edge orbit weighted likewise. Quotient vertex ids join the member ids
/// with '+'.
QuotientGraph build_quotient(const HalfEdgeGraph& g, const GroupAction& action,
                             std::size_t order_cap = kDefaultGroupOrderCap);

/// Orbit sums of chip counts.
Divisor pushforward(const QuotientGraph& quotient, const Divisor& d);

/// Orbit sums of a firing script; pushforward(L*s) == L_quotient * this.
FiringScript pushforward_script(const QuotientGraph& quotient, const FiringScript& s);

}  // namespace chipfire
