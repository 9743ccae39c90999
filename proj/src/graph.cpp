#include "chipfire/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "chipfire/error.hpp"
#include "chipfire/integer.hpp"

namespace chipfire {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::HalfEdgeToInvolution: return "HalfEdgeToInvolution";
    case ErrorKind::VertexToNeighbor: return "VertexToNeighbor";
    case ErrorKind::IterationCapExceeded: return "IterationCapExceeded";
    case ErrorKind::GroupOrderCapExceeded: return "GroupOrderCapExceeded";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotQEffective: return "NotQEffective";
    case ErrorKind::NotQReduced: return "NotQReduced";
    case ErrorKind::ChargeAtQNotOne: return "ChargeAtQNotOne";
    case ErrorKind::InvalidWord: return "InvalidWord";
  }
  return "Unknown";
}

namespace {

std::string edge_name(const GraphDescription::Edge& e, std::size_t k) {
  return "edge #" + std::to_string(k) + " (" + e.u + "-" + e.v + ")";
}

}  // namespace

WeightedGraph WeightedGraph::build(const GraphDescription& description) {
  WeightedGraph g;
  if (description.vertices.empty()) {
    throw Error(ErrorKind::InvalidInput, "graph has no vertices");
  }

  g.vertices_ = description.vertices;
  for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
    const auto& vx = g.vertices_[i];
    if (vx.weight < 1) {
      throw Error(ErrorKind::NonPositiveWeight,
                  "vertex " + vx.id + " has non-positive weight " + std::to_string(vx.weight));
    }
    if (!g.index_.emplace(vx.id, static_cast<Index>(i)).second) {
      throw Error(ErrorKind::InvalidInput, "duplicate vertex id " + vx.id);
    }
  }

  const Index n = g.size();
  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  g.incident_.assign(static_cast<std::size_t>(n), {});
  g.laplacian_ = LaplacianMatrix::Zero(n, n);

  for (std::size_t k = 0; k < description.edges.size(); ++k) {
    const auto& e = description.edges[k];
    auto iu = g.find(e.u);
    auto iv = g.find(e.v);
    if (!iu) throw Error(ErrorKind::UnknownVertex, edge_name(e, k) + " references unknown vertex " + e.u);
    if (!iv) throw Error(ErrorKind::UnknownVertex, edge_name(e, k) + " references unknown vertex " + e.v);
    if (*iu == *iv) throw Error(ErrorKind::LoopEdge, edge_name(e, k) + " is a loop");
    if (e.weight < 1) {
      throw Error(ErrorKind::NonPositiveWeight,
                  edge_name(e, k) + " has non-positive weight " + std::to_string(e.weight));
    }
    if (e.multiplicity < 1) {
      throw Error(ErrorKind::NonPositiveWeight,
                  edge_name(e, k) + " has non-positive multiplicity " + std::to_string(e.multiplicity));
    }
    for (Index end : {*iu, *iv}) {
      if (g.weight(end) % e.weight != 0) {
        throw Error(ErrorKind::DivisibilityViolation,
                    edge_name(e, k) + " weight " + std::to_string(e.weight) + " does not divide weight " +
                        std::to_string(g.weight(end)) + " of vertex " + g.vertex(end).id);
      }
    }

    const Index u = *iu, v = *iv;
    g.edges_.push_back(EdgeRecord{u, v, e.weight, e.multiplicity});
    g.incident_[static_cast<std::size_t>(u)].push_back(k);
    g.incident_[static_cast<std::size_t>(v)].push_back(k);
    g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    g.adjacency_[static_cast<std::size_t>(v)].push_back(u);

    const Int from_u = checked_mul(g.weight(u) / e.weight, e.multiplicity);
    const Int from_v = checked_mul(g.weight(v) / e.weight, e.multiplicity);
    g.laplacian_(u, u) = checked_add(g.laplacian_(u, u), from_u);
    g.laplacian_(v, v) = checked_add(g.laplacian_(v, v), from_v);
    g.laplacian_(v, u) = checked_sub(g.laplacian_(v, u), from_u);
    g.laplacian_(u, v) = checked_sub(g.laplacian_(u, v), from_v);
  }

  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }

  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<Index> frontier{0};
  seen[0] = true;
  Index reached = 1;
  while (!frontier.empty()) {
    Index x = frontier.front();
    frontier.pop_front();
    for (Index y : g.neighbors(x)) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        ++reached;
        frontier.push_back(y);
      }
    }
  }
  if (reached != n) {
    for (Index v = 0; v < n; ++v) {
      if (!seen[static_cast<std::size_t>(v)]) {
        throw Error(ErrorKind::DisconnectedGraph,
                    "graph is disconnected: vertex " + g.vertex(v).id + " is unreachable from " + g.vertex(0).id);
      }
    }
  }

  Int total = 1;
  for (const auto& vx : g.vertices_) total = lcm_value(total, vx.weight);
  g.charges_.graph = total;
  g.charges_.per_vertex.resize(n);
  for (Index v = 0; v < n; ++v) g.charges_.per_vertex(v) = total / g.weight(v);

  return g;
}

std::optional<Index> WeightedGraph::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index WeightedGraph::index_of(const std::string& id) const {
  if (auto i = find(id)) return *i;
  throw Error(ErrorKind::UnknownVertex, "unknown vertex " + id);
}

bool WeightedGraph::is_unweighted() const {
  return std::all_of(vertices_.begin(), vertices_.end(), [](const auto& v) { return v.weight == 1; }) &&
         std::all_of(edges_.begin(), edges_.end(), [](const auto& e) { return e.weight == 1; });
}

GraphDescription WeightedGraph::description() const {
  GraphDescription out;
  out.vertices = vertices_;
  for (const auto& e : edges_) {
    out.edges.push_back({vertex(e.u).id, vertex(e.v).id, e.weight, e.multiplicity});
  }
  return out;
}

Int weighted_valency(const WeightedGraph& g, Index v) {
  if (v < 0 || v >= g.size()) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  return g.valency(v);
}

const Charges& charges(const WeightedGraph& g) { return g.charges(); }

const LaplacianMatrix& laplacian(const WeightedGraph& g) { return g.laplacian(); }

void require_size(const WeightedGraph& g, const IntVector& x, const char* what) {
  if (x.size() != g.size()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " has " + std::to_string(x.size()) +
                                                  " entries but the graph has " + std::to_string(g.size()) +
                                                  " vertices");
  }
}

Divisor apply_script(const WeightedGraph& g, const Divisor& d, const FiringScript& s) {
  require_size(g, d, "divisor");
  require_size(g, s, "firing script");
  return d - g.laplacian() * s;
}

FiringScript unit_script(const WeightedGraph& g, Index v) { return FiringScript::Unit(g.size(), v); }

}  // namespace chipfire
