#include <algorithm>
#include <string>

#include "chipfire/error.hpp"
#include "chipfire/solvers.hpp"

namespace chipfire {

void BurnMonitor::record(const BurnReport& report) {
  ++runs_;
  max_iterations_ = std::max(max_iterations_, report.iterations);
  if (report.iterations > report.iteration_bound) ++violations_;
}

namespace {

void require_vertex(const WeightedGraph& g, Index q) {
  if (q < 0 || q >= g.size()) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
}

void require_q_effective(const WeightedGraph& g, const Divisor& d, Index q) {
  for (Index v = 0; v < d.size(); ++v) {
    if (v != q && d(v) < 0) {
      throw Error(ErrorKind::NotQEffective, "divisor is not q-effective for q = " + g.vertex(q).id + ": vertex " +
                                                g.vertex(v).id + " holds " + std::to_string(d(v)));
    }
  }
}

}  // namespace

BurnCandidate burn_candidate(const WeightedGraph& g, const Divisor& d, Index q, Int f) {
  require_size(g, d, "divisor");
  require_vertex(g, q);
  require_q_effective(g, d, q);
  const Index n = g.size();
  const auto& L = g.laplacian();

  BurnCandidate cand;
  cand.fires_at_q = f;
  cand.script = g.charges().per_vertex;
  cand.script(q) = f;

  auto unburnt = [&] {
    for (Index v = 0; v < n; ++v) {
      if (v != q && cand.script(v) != 0) return true;
    }
    return false;
  };

  std::vector<Index> in_debt;
  while (unburnt()) {
    const Divisor m = d - L * cand.script;
    ++cand.passes;
    in_debt.clear();
    for (Index v = 0; v < n; ++v) {
      if (v != q && m(v) < 0) in_debt.push_back(v);
    }
    if (in_debt.empty()) break;
    for (Index v : in_debt) {
      cand.script(v) -= 1;
      cand.trace.push_back({v, cand.passes});
    }
  }
  cand.q_loss = L.row(q).dot(cand.script);
  return cand;
}

BurnReport modified_burning(const WeightedGraph& g, const Divisor& d, Index q, const SolveOptions& options) {
  require_size(g, d, "divisor");
  require_vertex(g, q);
  require_q_effective(g, d, q);
  const auto& c = g.charges().per_vertex;

  BurnReport report;
  const Int cq = c(q);
  report.iteration_bound = static_cast<std::size_t>(cq * (c.sum() - cq));
  for (Int f = 0; f < cq; ++f) {
    report.candidates.push_back(burn_candidate(g, d, q, f));
    report.iterations += report.candidates.back().passes;
  }

  report.selected = 0;
  for (std::size_t f = 1; f < report.candidates.size(); ++f) {
    if (report.candidates[f].q_loss < report.candidates[report.selected].q_loss) report.selected = f;
  }
  report.script = report.candidates[report.selected].script;
  if (options.monitor) options.monitor->record(report);
  return report;
}

bool is_q_reduced(const WeightedGraph& g, const Divisor& d, Index q) {
  if (!is_q_effective(d, q)) return false;
  return modified_burning(g, d, q).is_zero();
}

}  // namespace chipfire
