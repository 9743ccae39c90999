#pragma once

#include <initializer_list>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "chipfire/graph.hpp"

namespace fixtures {

using namespace chipfire;

inline IntVector vec(std::initializer_list<Int> values) {
  IntVector out(static_cast<Index>(values.size()));
  Index i = 0;
  for (Int v : values) out(i++) = v;
  return out;
}

struct E {
  std::string u, v;
  Int weight = 1;
  Int mult = 1;
};

inline GraphDescription describe(std::vector<VertexRecord> vertices, std::vector<E> edges) {
  GraphDescription d;
  d.vertices = std::move(vertices);
  for (auto& e : edges) d.edges.push_back({e.u, e.v, e.weight, e.mult});
  return d;
}

inline WeightedGraph make(std::vector<VertexRecord> vertices, std::vector<E> edges) {
  return build_graph(describe(std::move(vertices), std::move(edges)));
}

inline WeightedGraph star() {
  return make({{"v1", 2}, {"v2", 2}, {"v3", 1}, {"v4", 1}}, {{"v1", "v3"}, {"v2", "v3"}, {"v3", "v4"}});
}

inline WeightedGraph gstar() {
  return make({{"v1", 2}, {"v2", 2}, {"v3", 1}, {"v4", 2}},
              {{"v1", "v2", 2}, {"v2", "v3"}, {"v1", "v3"}, {"v3", "v4"}, {"v2", "v4"}});
}

inline WeightedGraph pent() {
  return make({{"u1", 1}, {"u2", 1}, {"u3", 1}, {"u4", 1}, {"u5", 1}},
              {{"u1", "u2"}, {"u1", "u3"}, {"u1", "u5"}, {"u3", "u2"}, {"u3", "u4"}, {"u5", "u4"}});
}

inline WeightedGraph cyc() {
  return make({{"a", 1}, {"b", 2}, {"c", 1}, {"d", 1}}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
}

inline WeightedGraph triangle() {
  return make({{"v1", 1}, {"v2", 1}, {"v3", 1}}, {{"v1", "v2"}, {"v2", "v3"}, {"v1", "v3"}});
}

inline WeightedGraph path2() { return make({{"v1", 1}, {"v2", 1}}, {{"v1", "v2"}}); }

inline WeightedGraph single() { return make({{"v", 1}}, {}); }

// Orbit graph of the reflected square with a diagonal.
inline WeightedGraph orbit_triangle() {
  return make({{"A", 1}, {"B", 2}, {"C", 2}}, {{"A", "C", 1}, {"A", "B", 1}, {"B", "C", 2}});
}

// Square v1 v2 v4 v3 with the diagonal v2 v3.
inline WeightedGraph square_with_diagonal() {
  return make({{"v1", 1}, {"v2", 1}, {"v3", 1}, {"v4", 1}},
              {{"v1", "v2"}, {"v1", "v3"}, {"v2", "v4"}, {"v3", "v4"}, {"v2", "v3"}});
}

inline WeightedGraph square() {
  return make({{"v1", 1}, {"v2", 1}, {"v3", 1}, {"v4", 1}},
              {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v1"}});
}

// Weights (2, 1) joined by a weight-1 edge.
inline WeightedGraph lopsided_pair() { return make({{"x", 2}, {"y", 1}}, {{"x", "y"}}); }

struct Named {
  const char* name;
  WeightedGraph graph;
};

inline std::vector<Named> core_set() {
  return {{"STAR", star()}, {"GSTAR", gstar()}, {"PENT", pent()}, {"CYC", cyc()}, {"triangle", triangle()}};
}

// Entry-by-entry Laplacian straight from an edge list.
inline IntMatrix reference_laplacian(const GraphDescription& d) {
  const Index n = static_cast<Index>(d.vertices.size());
  auto index = [&](const std::string& id) {
    for (Index i = 0; i < n; ++i) {
      if (d.vertices[static_cast<std::size_t>(i)].id == id) return i;
    }
    return Index(-1);
  };
  IntMatrix L = IntMatrix::Zero(n, n);
  for (const auto& e : d.edges) {
    const Index a = index(e.u), b = index(e.v);
    const Int wa = d.vertices[static_cast<std::size_t>(a)].weight;
    const Int wb = d.vertices[static_cast<std::size_t>(b)].weight;
    L(a, a) += e.multiplicity * wa / e.weight;
    L(b, b) += e.multiplicity * wb / e.weight;
    L(b, a) -= e.multiplicity * wa / e.weight;
    L(a, b) -= e.multiplicity * wb / e.weight;
  }
  return L;
}

inline IntVector reference_charges(const GraphDescription& d) {
  Int l = 1;
  for (const auto& v : d.vertices) l = std::lcm(l, v.weight);
  IntVector c(static_cast<Index>(d.vertices.size()));
  for (std::size_t i = 0; i < d.vertices.size(); ++i) c(static_cast<Index>(i)) = l / d.vertices[i].weight;
  return c;
}

// Random connected weighted graph: a random spanning tree plus extra edges,
// vertex weights from `weights`, edge weights dividing both endpoint weights.
inline GraphDescription random_description(std::mt19937& rng, int n, int extra_edges,
                                           const std::vector<Int>& weights = {1, 2}, int max_mult = 1) {
  GraphDescription d;
  std::uniform_int_distribution<std::size_t> pick_w(0, weights.size() - 1);
  for (int i = 0; i < n; ++i) d.vertices.push_back({"v" + std::to_string(i + 1), weights[pick_w(rng)]});
  std::uniform_int_distribution<int> pick_m(1, max_mult);
  auto add_edge = [&](int a, int b) {
    const Int g = std::gcd(d.vertices[static_cast<std::size_t>(a)].weight, d.vertices[static_cast<std::size_t>(b)].weight);
    std::vector<Int> divisors;
    for (Int k = 1; k <= g; ++k) {
      if (g % k == 0) divisors.push_back(k);
    }
    std::uniform_int_distribution<std::size_t> pick_d(0, divisors.size() - 1);
    d.edges.push_back({d.vertices[static_cast<std::size_t>(a)].id, d.vertices[static_cast<std::size_t>(b)].id,
                       divisors[pick_d(rng)], pick_m(rng)});
  };
  for (int i = 1; i < n; ++i) add_edge(std::uniform_int_distribution<int>(0, i - 1)(rng), i);
  if (n >= 2) {
    std::uniform_int_distribution<int> pick_v(0, n - 1);
    for (int k = 0; k < extra_edges; ++k) {
      const int a = pick_v(rng), b = pick_v(rng);
      if (a != b) add_edge(a, b);
    }
  }
  return d;
}

inline IntVector random_divisor(std::mt19937& rng, Index n, Int lo, Int hi) {
  std::uniform_int_distribution<Int> pick(lo, hi);
  IntVector d(n);
  for (Index i = 0; i < n; ++i) d(i) = pick(rng);
  return d;
}

// Calls f on every vector in [lo, hi]^n.
template <typename F>
void for_each_box(Index n, Int lo, Int hi, F&& f) {
  IntVector d = IntVector::Constant(n, lo);
  for (;;) {
    f(static_cast<const IntVector&>(d));
    Index i = n - 1;
    while (i >= 0 && d(i) == hi) d(i--) = lo;
    if (i < 0) return;
    d(i) += 1;
  }
}

}  // namespace fixtures
