#include <deque>
#include <string>

#include "chipfire/error.hpp"
#include "chipfire/integer.hpp"
#include "chipfire/solvers.hpp"

namespace chipfire {

namespace {

struct SpanningTree {
  std::vector<Index> order;   // BFS order starting at the root
  std::vector<Index> parent;  // -1 for the root
};

SpanningTree bfs_tree(const WeightedGraph& g, Index root) {
  SpanningTree t;
  t.parent.assign(static_cast<std::size_t>(g.size()), -1);
  std::vector<bool> seen(static_cast<std::size_t>(g.size()), false);
  seen[static_cast<std::size_t>(root)] = true;
  t.order.push_back(root);
  for (std::size_t i = 0; i < t.order.size(); ++i) {
    const Index x = t.order[i];
    for (Index y : g.neighbors(x)) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        t.parent[static_cast<std::size_t>(y)] = x;
        t.order.push_back(y);
      }
    }
  }
  return t;
}

void lend(const WeightedGraph& g, Reduction& r, Index v, Int times) {
  r.divisor -= g.laplacian().col(v) * times;
  r.script(v) += times;
}

void check_vertex(const WeightedGraph& g, Index q) {
  if (q < 0 || q >= g.size()) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
}

}  // namespace

Reduction make_q_effective(const WeightedGraph& g, const Divisor& d, Index q) {
  require_size(g, d, "divisor");
  check_vertex(g, q);
  Reduction r{d, FiringScript::Zero(g.size()), 0};
  const SpanningTree tree = bfs_tree(g, q);
  for (auto it = tree.order.rbegin(); it != tree.order.rend(); ++it) {
    const Index v = *it;
    if (v == q || r.divisor(v) >= 0) continue;
    const Index p = tree.parent[static_cast<std::size_t>(v)];
    const Int per_lend = g.transfer(p, v);
    lend(g, r, p, ceil_div(-r.divisor(v), per_lend));
  }
  return r;
}

Reduction q_reduce(const WeightedGraph& g, const Divisor& d, Index q, const SolveOptions& options) {
  Reduction r = make_q_effective(g, d, q);
  for (;;) {
    const BurnReport burn = modified_burning(g, r.divisor, q, options);
    if (burn.is_zero()) return r;
    if (r.rounds >= options.max_burn_rounds) {
      throw Error(ErrorKind::IterationCapExceeded,
                  "q-reduction exceeded " + std::to_string(options.max_burn_rounds) + " burning rounds");
    }
    r.divisor -= g.laplacian() * burn.script;
    r.script += burn.script;
    ++r.rounds;
  }
}

Winnability is_winnable(const WeightedGraph& g, const Divisor& d, const SolveOptions& options) {
  require_size(g, d, "divisor");
  Winnability out;
  if (degree(d) < 0) return out;
  const Reduction r = q_reduce(g, d, 0, options);
  out.reduced = r.divisor;
  if (r.divisor(0) >= 0) {
    out.winnable = true;
    out.witness = r.divisor;
    out.script = r.script;
  }
  return out;
}

Int local_charge(const WeightedGraph& g, Index q) {
  check_vertex(g, q);
  const Int val = g.valency(q);
  if (val == 0) return 1;  // single vertex
  Int received = 0;
  for (Index v : g.neighbors(q)) received = gcd_value(received, g.transfer(v, q));
  return lcm_value(received, val) / val;
}

std::vector<QReducedRepresentative> enumerate_q_reduced(const WeightedGraph& g, const Divisor& d, Index q,
                                                        const SolveOptions& options) {
  require_size(g, d, "divisor");
  check_vertex(g, q);
  const Int cq = g.charge(q);
  const FiringScript kernel = kernel_script(g);
  std::vector<QReducedRepresentative> out;

  for (Int f = 0; f < cq; ++f) {
    const Divisor shifted = d - g.laplacian().col(q) * f;

    // Reach a q-effective divisor of the same q-class: lending at q is
    // allowed in multiples of c(q), which equals borrowing c(v) at every
    // other vertex.
    Reduction r = make_q_effective(g, shifted, q);
    const Int extra = positive_mod(-r.script(q), cq);
    if (extra != 0) lend(g, r, q, extra);
    r.script -= kernel * (r.script(q) / cq);

    std::size_t rounds = 0;
    for (;;) {
      BurnCandidate cand = burn_candidate(g, r.divisor, q, 0);
      if (options.monitor) {
        BurnReport single;
        single.script = cand.script;
        single.iterations = cand.passes;
        single.iteration_bound = static_cast<std::size_t>(kernel.sum() - cq);
        single.candidates.push_back(std::move(cand));
        options.monitor->record(single);
        cand = std::move(single.candidates.front());
      }
      if (cand.script.isZero()) break;
      if (++rounds > options.max_burn_rounds) {
        throw Error(ErrorKind::IterationCapExceeded,
                    "q-class reduction exceeded " + std::to_string(options.max_burn_rounds) + " burning rounds");
      }
      r.divisor -= g.laplacian() * cand.script;
    }
    if (modified_burning(g, r.divisor, q, options).is_zero()) out.push_back({f, r.divisor});
  }
  return out;
}

}  // namespace chipfire
