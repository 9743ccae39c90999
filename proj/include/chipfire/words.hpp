#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "chipfire/graph.hpp"
#include "chipfire/solvers.hpp"

namespace chipfire {

/// A burn order: vertex v appears exactly c(v) times.
using Word = std::vector<Index>;

/// Throws InvalidWord when a letter is out of range or a multiplicity differs
/// from the vertex charge.
void validate_word(const WeightedGraph& g, const Word& w);

/// Occurrences of v strictly before 1-based position n.
Int step_count(const Word& w, Index v, std::size_t n);

/// Net chips v loses to u when the script checked at position n is fired:
/// sum over edges uv of (k_u(n) w(u) - k_v(n) w(v)) / w(e).
Int h_value(const WeightedGraph& g, const Word& w, std::size_t n, Index v, Index u);

/// For each v, the minimum over its positions of the chips it would lose at
/// that stage, minus one. The result is unwinnable when w starts at a vertex
/// of charge 1.
Divisor divisor_of_word(const WeightedGraph& g, const Word& w);

/// Burn order of a q-reduced divisor: q followed by the f = 0 burning trace,
/// same-pass burns by vertex index. Throws ChargeAtQNotOne or NotQReduced.
Word word_of_divisor(const WeightedGraph& g, const Divisor& d, Index q);

/// (sum c(v) - 1)! / prod_v c(v)! with c(q) reduced by the fixed first letter.
std::size_t word_count(const WeightedGraph& g, Index q);

/// Every word starting with q, in lexicographic order of the remaining
/// letters. Throws ChargeAtQNotOne.
std::vector<Word> enumerate_words(const WeightedGraph& g, Index q);

struct CensusEntry {
  Word word;                       // first word producing the divisor
  Divisor divisor;
  Divisor class_representative;    // q-reduced form
  bool q_effective = false;
  bool maximal_verified = false;   // unwinnable, and winnable after adding a chip anywhere
};

struct Census {
  Index q = 0;
  std::size_t words = 0;
  std::size_t distinct_divisors = 0;
  /// q-effective divisors not strictly dominated by any divisor of any word:
  /// the maximally unwinnable divisors in q-reduced form.
  std::vector<CensusEntry> maximal;
  /// Undominated divisors that are not q-effective, flagged separately.
  std::vector<CensusEntry> non_reduced;
};

Census max_unwinnable_census(const WeightedGraph& g, Index q, const SolveOptions& options = {});

struct SumClass {
  Divisor representative;                               // first sum found in the class
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // census indices i <= j
};

struct PairingReport {
  std::vector<SumClass> classes;
  Divisor valency_minus_two;          // v -> val(v) - 2
  Int valency_minus_two_degree = 0;
  std::vector<std::size_t> matching_classes;  // sum classes equivalent to valency_minus_two

  /// Classes reached by more than one pair.
  std::vector<std::size_t> shared_classes() const;
};

/// Groups all sums of pairs of census classes (a class with itself included)
/// into linear-equivalence classes.
PairingReport pairing_exploration(const WeightedGraph& g, const Census& census);

}  // namespace chipfire
