#include "chipfire/quotient.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "chipfire/error.hpp"

namespace chipfire {

HalfEdgeGraph::HalfEdgeGraph(WeightedGraph base) : base_(std::move(base)) {
  for (Index v = 0; v < base_.size(); ++v) {
    if (base_.weight(v) != 1) {
      throw Error(ErrorKind::InvalidInput,
                  "group actions need an unweighted base graph; vertex " + base_.vertex(v).id + " has weight " +
                      std::to_string(base_.weight(v)));
    }
  }
  const auto edges = base_.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    const std::string name = base_.vertex(e.u).id + "-" + base_.vertex(e.v).id;
    if (e.weight != 1) throw Error(ErrorKind::InvalidInput, "group actions need unit edge weights; edge " + name);
    if (e.multiplicity != 1) {
      throw Error(ErrorKind::InvalidInput,
                  "group actions need parallel edges listed separately; edge " + name + " has multiplicity " +
                      std::to_string(e.multiplicity));
    }
    const std::string stem = "e" + std::to_string(k);
    half_edges_.push_back({stem + "a", e.u, 2 * k + 1});
    half_edges_.push_back({stem + "b", e.v, 2 * k});
  }
}

std::optional<std::size_t> HalfEdgeGraph::find_half_edge(const std::string& id) const {
  for (std::size_t h = 0; h < half_edges_.size(); ++h) {
    if (half_edges_[h].id == id) return h;
  }
  return std::nullopt;
}

Permutation Permutation::identity(const HalfEdgeGraph& g) {
  Permutation p;
  p.vertices.resize(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t i = 0; i < p.vertices.size(); ++i) p.vertices[i] = static_cast<Index>(i);
  p.half_edges.resize(g.half_edge_count());
  for (std::size_t i = 0; i < p.half_edges.size(); ++i) p.half_edges[i] = i;
  return p;
}

Permutation Permutation::after(const Permutation& inner) const {
  Permutation out;
  out.vertices.resize(inner.vertices.size());
  for (std::size_t i = 0; i < inner.vertices.size(); ++i) {
    out.vertices[i] = vertices[static_cast<std::size_t>(inner.vertices[i])];
  }
  out.half_edges.resize(inner.half_edges.size());
  for (std::size_t i = 0; i < inner.half_edges.size(); ++i) out.half_edges[i] = half_edges[inner.half_edges[i]];
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] != static_cast<Index>(i)) return false;
  }
  for (std::size_t i = 0; i < half_edges.size(); ++i) {
    if (half_edges[i] != i) return false;
  }
  return true;
}

namespace {

std::string cycles(const HalfEdgeGraph& g, const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.vertices.size(), false);
  for (std::size_t start = 0; start < p.vertices.size(); ++start) {
    if (seen[start] || p.vertices[start] == static_cast<Index>(start)) continue;
    out += "(";
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += " ";
      out += g.base().vertex(static_cast<Index>(x)).id;
      first = false;
      x = static_cast<std::size_t>(p.vertices[x]);
    }
    out += ")";
  }
  return out.empty() ? "identity on vertices" : out;
}

template <typename T>
bool is_bijection(const std::vector<T>& images, std::size_t n) {
  if (images.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (T x : images) {
    const auto i = static_cast<std::size_t>(x);
    if (i >= n || hit[i]) return false;
    hit[i] = true;
  }
  return true;
}

}  // namespace

GroupAction resolve_action(const HalfEdgeGraph& g, const ActionDescription& description) {
  const auto& base = g.base();
  GroupAction action;
  for (std::size_t k = 0; k < description.generators.size(); ++k) {
    const auto& gen = description.generators[k];
    const std::string where = "generator #" + std::to_string(k);
    Permutation p = Permutation::identity(g);
    for (const auto& [from, to] : gen.vertices) {
      auto a = base.find(from);
      auto b = base.find(to);
      if (!a || !b) {
        throw Error(ErrorKind::UnknownVertex, where + " maps unknown vertex " + (a ? to : from));
      }
      p.vertices[static_cast<std::size_t>(*a)] = *b;
    }
    if (gen.half_edges) {
      for (const auto& [from, to] : *gen.half_edges) {
        auto a = g.find_half_edge(from);
        auto b = g.find_half_edge(to);
        if (!a || !b) {
          throw Error(ErrorKind::UnknownVertex, where + " maps unknown half-edge " + (a ? to : from));
        }
        p.half_edges[*a] = *b;
      }
    } else {
      const auto edges = base.edges();
      for (std::size_t e = 0; e < edges.size(); ++e) {
        const Index u = p.vertices[static_cast<std::size_t>(edges[e].u)];
        const Index v = p.vertices[static_cast<std::size_t>(edges[e].v)];
        std::vector<std::size_t> hits;
        for (std::size_t j = 0; j < edges.size(); ++j) {
          if ((edges[j].u == u && edges[j].v == v) || (edges[j].u == v && edges[j].v == u)) hits.push_back(j);
        }
        if (hits.empty()) {
          throw Error(ErrorKind::NotAutomorphism, where + " maps edge e" + std::to_string(e) +
                                                      " onto a pair of non-adjacent vertices");
        }
        if (hits.size() > 1) {
          throw Error(ErrorKind::InvalidInput,
                      where + " needs explicit half_edges: the image of edge e" + std::to_string(e) +
                          " is a parallel edge");
        }
        const std::size_t j = hits.front();
        const bool same = edges[j].u == u;
        p.half_edges[2 * e] = same ? 2 * j : 2 * j + 1;
        p.half_edges[2 * e + 1] = same ? 2 * j + 1 : 2 * j;
      }
    }
    if (!is_bijection(p.vertices, static_cast<std::size_t>(g.vertex_count())) ||
        !is_bijection(p.half_edges, g.half_edge_count())) {
      throw Error(ErrorKind::NotAutomorphism, where + " is not a bijection");
    }
    action.generators.push_back(std::move(p));
  }
  return action;
}

ActionCheck validate_action(const HalfEdgeGraph& g, const GroupAction& action, std::size_t order_cap) {
  ActionCheck out;
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  const std::size_t nh = g.half_edge_count();

  for (std::size_t k = 0; k < action.generators.size(); ++k) {
    const auto& p = action.generators[k];
    if (!is_bijection(p.vertices, n) || !is_bijection(p.half_edges, nh)) {
      throw Error(ErrorKind::DimensionMismatch, "generator #" + std::to_string(k) + " is not a permutation of size " +
                                                    std::to_string(n) + "/" + std::to_string(nh));
    }
    for (std::size_t h = 0; h < nh; ++h) {
      const auto& he = g.half_edge(h);
      const bool root_ok = g.half_edge(p.half_edges[h]).root == p.vertices[static_cast<std::size_t>(he.root)];
      const bool involution_ok = p.half_edges[he.partner] == g.half_edge(p.half_edges[h]).partner;
      if (!root_ok || !involution_ok) {
        out.violation = ActionViolation{
            ErrorKind::NotAutomorphism,
            "generator #" + std::to_string(k) + " " + cycles(g, p) + " does not preserve the " +
                (root_ok ? "involution" : "root") + " of half-edge " + he.id};
        return out;
      }
    }
  }

  std::set<Permutation> seen;
  out.group.push_back(Permutation::identity(g));
  seen.insert(out.group.front());
  for (std::size_t i = 0; i < out.group.size(); ++i) {
    for (const auto& s : action.generators) {
      Permutation next = s.after(out.group[i]);
      if (seen.insert(next).second) {
        if (out.group.size() >= order_cap) {
          throw Error(ErrorKind::GroupOrderCapExceeded,
                      "group generated by the action has more than " + std::to_string(order_cap) + " elements");
        }
        out.group.push_back(std::move(next));
      }
    }
  }

  const auto& base = g.base();
  for (const auto& elem : out.group) {
    for (std::size_t h = 0; h < nh; ++h) {
      if (elem.half_edges[h] == g.half_edge(h).partner) {
        out.violation = ActionViolation{ErrorKind::HalfEdgeToInvolution,
                                        "element " + cycles(g, elem) + " maps half-edge " + g.half_edge(h).id +
                                            " to its involution " + g.half_edge(g.half_edge(h).partner).id};
        return out;
      }
    }
    for (Index v = 0; v < base.size(); ++v) {
      const Index image = elem.vertices[static_cast<std::size_t>(v)];
      const auto nbrs = base.neighbors(v);
      if (std::binary_search(nbrs.begin(), nbrs.end(), image)) {
        out.violation = ActionViolation{ErrorKind::VertexToNeighbor,
                                        "element " + cycles(g, elem) + " maps vertex " + base.vertex(v).id +
                                            " to its neighbour " + base.vertex(image).id};
        return out;
      }
    }
  }
  return out;
}

OrbitData orbits_and_stabilizers(const HalfEdgeGraph& g, const GroupAction& action, std::size_t order_cap) {
  ActionCheck check = validate_action(g, action, order_cap);
  if (!check.ok()) throw Error(check.violation->kind, check.violation->message);

  OrbitData out;
  out.group_order = check.group.size();
  const auto order = static_cast<Int>(out.group_order);
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());

  out.vertex_orbit_of.assign(n, SIZE_MAX);
  for (std::size_t v = 0; v < n; ++v) {
    if (out.vertex_orbit_of[v] != SIZE_MAX) continue;
    std::set<Index> members;
    for (const auto& elem : check.group) members.insert(elem.vertices[v]);
    const std::size_t id = out.vertex_orbits.size();
    out.vertex_orbits.emplace_back(members.begin(), members.end());
    out.vertex_stabilizers.push_back(order / static_cast<Int>(members.size()));
    for (Index m : members) out.vertex_orbit_of[static_cast<std::size_t>(m)] = id;
  }

  const std::size_t edge_count = g.half_edge_count() / 2;
  std::vector<bool> placed(edge_count, false);
  for (std::size_t e = 0; e < edge_count; ++e) {
    if (placed[e]) continue;
    std::set<std::size_t> members;
    for (const auto& elem : check.group) members.insert(elem.half_edges[2 * e] / 2);
    out.edge_orbits.emplace_back(members.begin(), members.end());
    out.edge_stabilizers.push_back(order / static_cast<Int>(members.size()));
    for (std::size_t m : members) placed[m] = true;
  }
  return out;
}

QuotientGraph build_quotient(const HalfEdgeGraph& g, const GroupAction& action, std::size_t order_cap) {
  OrbitData orbits = orbits_and_stabilizers(g, action, order_cap);
  const auto& base = g.base();

  GraphDescription desc;
  for (std::size_t o = 0; o < orbits.vertex_orbits.size(); ++o) {
    std::string id;
    for (Index m : orbits.vertex_orbits[o]) {
      if (!id.empty()) id += "+";
      id += base.vertex(m).id;
    }
    desc.vertices.push_back({id, orbits.vertex_stabilizers[o]});
  }
  for (std::size_t o = 0; o < orbits.edge_orbits.size(); ++o) {
    const auto& rep = base.edges()[orbits.edge_orbits[o].front()];
    std::size_t a = orbits.vertex_orbit_of[static_cast<std::size_t>(rep.u)];
    std::size_t b = orbits.vertex_orbit_of[static_cast<std::size_t>(rep.v)];
    if (a > b) std::swap(a, b);
    const Int w = orbits.edge_stabilizers[o];
    auto same = std::find_if(desc.edges.begin(), desc.edges.end(), [&](const auto& e) {
      return e.u == desc.vertices[a].id && e.v == desc.vertices[b].id && e.weight == w;
    });
    if (same != desc.edges.end()) {
      ++same->multiplicity;
    } else {
      desc.edges.push_back({desc.vertices[a].id, desc.vertices[b].id, w, 1});
    }
  }
  return QuotientGraph{WeightedGraph::build(desc), std::move(orbits)};
}

Divisor pushforward(const QuotientGraph& quotient, const Divisor& d) {
  const auto& of = quotient.orbits.vertex_orbit_of;
  if (static_cast<std::size_t>(d.size()) != of.size()) {
    throw Error(ErrorKind::DimensionMismatch, "divisor has " + std::to_string(d.size()) +
                                                  " entries but the base graph has " + std::to_string(of.size()) +
                                                  " vertices");
  }
  Divisor out = Divisor::Zero(quotient.graph.size());
  for (std::size_t v = 0; v < of.size(); ++v) out(static_cast<Index>(of[v])) += d(static_cast<Index>(v));
  return out;
}

FiringScript pushforward_script(const QuotientGraph& quotient, const FiringScript& s) {
  return pushforward(quotient, s);
}

}  // namespace chipfire
