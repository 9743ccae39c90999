#include "chipfire/error.hpp"
#include "chipfire/solvers.hpp"

namespace chipfire {

FiringScript kernel_script(const WeightedGraph& g) { return g.charges().per_vertex; }

GreedyResult modified_greedy(const WeightedGraph& g, const Divisor& d, const SolveOptions& options) {
  require_size(g, d, "divisor");
  const Index n = g.size();
  const auto& L = g.laplacian();
  const auto& c = g.charges().per_vertex;

  GreedyResult out;
  out.borrows = IntVector::Zero(n);
  Divisor current = d;

  while (!is_effective(current)) {
    if ((out.borrows.array() >= c.array()).all()) {
      out.script = -out.borrows;
      return out;
    }
    Index v = 0;
    while (current(v) >= 0) ++v;
    current += L.col(v);
    out.borrows(v) += 1;
    if (++out.moves > options.max_greedy_moves) {
      throw Error(ErrorKind::IterationCapExceeded,
                  "greedy algorithm exceeded " + std::to_string(options.max_greedy_moves) + " borrowing moves");
    }
  }
  out.winnable = true;
  out.script = -out.borrows;
  out.witness = current;
  return out;
}

}  // namespace chipfire
