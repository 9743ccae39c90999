#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chipfire/graph.hpp"
#include "chipfire/normal_form.hpp"

namespace chipfire {

struct BurnReport;

/// Collects statistics over every burning run it observes.
class BurnMonitor {
 public:
  void record(const BurnReport& report);

  std::size_t runs() const { return runs_; }
  std::size_t bound_violations() const { return violations_; }
  std::size_t max_iterations() const { return max_iterations_; }

 private:
  std::size_t runs_ = 0;
  std::size_t violations_ = 0;
  std::size_t max_iterations_ = 0;
};

struct SolveOptions {
  std::size_t max_burn_rounds = 1'000'000;
  std::size_t max_greedy_moves = 10'000'000;
  BurnMonitor* monitor = nullptr;
};

/// Generator of the Laplacian kernel: the charges vector.
FiringScript kernel_script(const WeightedGraph& g);

struct GreedyResult {
  bool winnable = false;
  /// Net script applied (entries <= 0, borrowing moves); D - L*script is the witness.
  FiringScript script;
  /// Effective divisor reached, present when winnable.
  std::optional<Divisor> witness;
  /// Borrowing count per vertex at termination. When unwinnable every entry is
  /// at least the vertex charge.
  IntVector borrows;
  std::size_t moves = 0;
};

/// Repeatedly borrows at the lowest-indexed vertex in debt until the divisor
/// is effective or every vertex has borrowed at least its charge.
GreedyResult modified_greedy(const WeightedGraph& g, const Divisor& d, const SolveOptions& options = {});

struct BurnStep {
  Index vertex = 0;
  std::size_t pass = 0;  // 1-based pass of the inner loop
};

struct BurnCandidate {
  Int fires_at_q = 0;
  FiringScript script;
  Int q_loss = 0;  // (L*script)(q): chips q loses when the script is fired
  std::vector<BurnStep> trace;
  std::size_t passes = 0;
};

struct BurnReport {
  FiringScript script;
  std::size_t selected = 0;
  std::vector<BurnCandidate> candidates;  // one per f in [0, c(q))
  std::size_t iterations = 0;             // inner-loop passes over all candidates
  std::size_t iteration_bound = 0;        // c(q) * sum_{v != q} c(v)

  bool is_zero() const { return script.isZero(); }
  /// Burn order of the f = 0 run.
  const std::vector<BurnStep>& trace() const { return candidates.front().trace; }
};

/// Inner loop of the burning algorithm with q fired f times: starts from the
/// charges off q and decrements, in simultaneous passes, every vertex that the
/// current script would put into debt. Requires d to be q-effective.
BurnCandidate burn_candidate(const WeightedGraph& g, const Divisor& d, Index q, Int f);

/// Runs burn_candidate for every f in [0, c(q)) and returns the candidate
/// losing the fewest chips at q (smallest f on ties). The returned script is
/// legal and is zero exactly when d is q-reduced. Throws NotQEffective.
BurnReport modified_burning(const WeightedGraph& g, const Divisor& d, Index q, const SolveOptions& options = {});

bool is_q_reduced(const WeightedGraph& g, const Divisor& d, Index q);

struct Reduction {
  Divisor divisor;
  FiringScript script;  // divisor == apply_script(g, input, script)
  std::size_t rounds = 0;
};

/// Lends along a BFS spanning tree rooted at q, leaves first, until every
/// vertex except q is out of debt.
Reduction make_q_effective(const WeightedGraph& g, const Divisor& d, Index q);

/// make_q_effective followed by burning rounds until the burning script is
/// zero. Throws IterationCapExceeded after options.max_burn_rounds rounds.
Reduction q_reduce(const WeightedGraph& g, const Divisor& d, Index q, const SolveOptions& options = {});

struct Winnability {
  bool winnable = false;
  std::optional<Divisor> witness;
  std::optional<FiringScript> script;
  /// q-reduced form at the first vertex; absent for negative degree.
  std::optional<Divisor> reduced;
};

/// Reduces at the first-listed vertex; winnable iff the reduced value there is
/// nonnegative. Negative degree short-circuits to unwinnable.
Winnability is_winnable(const WeightedGraph& g, const Divisor& d, const SolveOptions& options = {});

/// Exact integer solver for L*sigma = d1 - d2, built once per graph.
class LinearEquivalence {
 public:
  explicit LinearEquivalence(const WeightedGraph& g);

  /// Witness with d2 == apply_script(g, d1, sigma), normalised so that
  /// 0 <= sigma(0) < c(v_0); nullopt when not equivalent.
  std::optional<FiringScript> solve(const Divisor& d1, const Divisor& d2) const;
  bool equivalent(const Divisor& d1, const Divisor& d2) const { return solve(d1, d2).has_value(); }

 private:
  const WeightedGraph* graph_;
  HermiteDecomposition<Int> hermite_;
};

std::optional<FiringScript> linear_equiv(const WeightedGraph& g, const Divisor& d1, const Divisor& d2);

/// Reduces sigma modulo the kernel so that 0 <= sigma(0) < c(v_0).
FiringScript canonical_script(const WeightedGraph& g, FiringScript sigma);

struct JacobianDescription {
  std::vector<Int> invariant_factors;  // all > 1, each dividing the next
  Int order = 1;
};

/// Torsion of the cokernel of L via its Smith normal form.
JacobianDescription jacobian(const WeightedGraph& g);

/// lcm(g, val(q)) / val(q) where g is the gcd over neighbours v of the chips
/// q receives when v lends once. Divides c(q).
Int local_charge(const WeightedGraph& g, Index q);

struct QReducedRepresentative {
  Int fires_at_q = 0;  // the q-class of d fired at q this many times
  Divisor divisor;
};

/// All q-reduced divisors linearly equivalent to d, at most one per q-class,
/// ordered by q-class index.
std::vector<QReducedRepresentative> enumerate_q_reduced(const WeightedGraph& g, const Divisor& d, Index q,
                                                        const SolveOptions& options = {});

}  // namespace chipfire
