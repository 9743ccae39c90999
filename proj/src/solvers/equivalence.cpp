#include "chipfire/error.hpp"
#include "chipfire/integer.hpp"
#include "chipfire/solvers.hpp"

namespace chipfire {

LinearEquivalence::LinearEquivalence(const WeightedGraph& g)
    : graph_(&g), hermite_(hermite_column_form(g.laplacian())) {}

std::optional<FiringScript> LinearEquivalence::solve(const Divisor& d1, const Divisor& d2) const {
  require_size(*graph_, d1, "first divisor");
  require_size(*graph_, d2, "second divisor");
  if (degree(d1) != degree(d2)) return std::nullopt;
  auto sigma = solve_integer(hermite_, IntVector(d1 - d2));
  if (!sigma) return std::nullopt;
  return canonical_script(*graph_, std::move(*sigma));
}

std::optional<FiringScript> linear_equiv(const WeightedGraph& g, const Divisor& d1, const Divisor& d2) {
  return LinearEquivalence(g).solve(d1, d2);
}

FiringScript canonical_script(const WeightedGraph& g, FiringScript sigma) {
  require_size(g, sigma, "firing script");
  const Int c0 = g.charge(0);
  const Int k = floor_div(sigma(0), c0);
  if (k != 0) sigma -= g.charges().per_vertex * k;
  return sigma;
}

JacobianDescription jacobian(const WeightedGraph& g) {
  JacobianDescription out;
  for (Int d : smith_diagonal(g.laplacian())) {
    if (d > 1) {
      out.invariant_factors.push_back(d);
      out.order = checked_mul(out.order, d);
    }
  }
  return out;
}

}  // namespace chipfire
