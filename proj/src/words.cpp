#include "chipfire/words.hpp"

#include <algorithm>
#include <string>

#include "chipfire/error.hpp"
#include "chipfire/integer.hpp"

namespace chipfire {

namespace {

void require_charge_one(const WeightedGraph& g, Index q) {
  if (q < 0 || q >= g.size()) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  if (g.charge(q) != 1) {
    throw Error(ErrorKind::ChargeAtQNotOne,
                "vertex " + g.vertex(q).id + " has charge " + std::to_string(g.charge(q)) + ", expected 1");
  }
}

// Chips v loses at a stage where vertex x has burnt burnt(x) times.
Int stage_loss(const WeightedGraph& g, const IntVector& burnt, Index v) {
  Int loss = 0;
  for (std::size_t k : g.incident_edges(v)) {
    const auto& e = g.edges()[k];
    const Index u = e.u == v ? e.v : e.u;
    const Int net = burnt(u) * g.weight(u) - burnt(v) * g.weight(v);
    loss += e.multiplicity * (net / e.weight);
  }
  return loss;
}

}  // namespace

void validate_word(const WeightedGraph& g, const Word& w) {
  IntVector seen = IntVector::Zero(g.size());
  for (Index x : w) {
    if (x < 0 || x >= g.size()) throw Error(ErrorKind::InvalidWord, "word letter out of range");
    seen(x) += 1;
  }
  for (Index v = 0; v < g.size(); ++v) {
    if (seen(v) != g.charge(v)) {
      throw Error(ErrorKind::InvalidWord, "vertex " + g.vertex(v).id + " occurs " + std::to_string(seen(v)) +
                                              " times in the word but has charge " + std::to_string(g.charge(v)));
    }
  }
}

Int step_count(const Word& w, Index v, std::size_t n) {
  const auto end = w.begin() + static_cast<std::ptrdiff_t>(std::min(n == 0 ? 0 : n - 1, w.size()));
  return static_cast<Int>(std::count(w.begin(), end, v));
}

Int h_value(const WeightedGraph& g, const Word& w, std::size_t n, Index v, Index u) {
  Int total = 0;
  const Int ku = step_count(w, u, n), kv = step_count(w, v, n);
  for (std::size_t k : g.incident_edges(v)) {
    const auto& e = g.edges()[k];
    if ((e.u == v && e.v == u) || (e.v == v && e.u == u)) {
      total += e.multiplicity * ((ku * g.weight(u) - kv * g.weight(v)) / e.weight);
    }
  }
  return total;
}

Divisor divisor_of_word(const WeightedGraph& g, const Word& w) {
  validate_word(g, w);
  const Index n = g.size();
  IntVector burnt = IntVector::Zero(n);
  std::vector<std::optional<Int>> best(static_cast<std::size_t>(n));
  for (Index letter : w) {
    const Int loss = stage_loss(g, burnt, letter);
    auto& slot = best[static_cast<std::size_t>(letter)];
    slot = slot ? std::min(*slot, loss) : loss;
    burnt(letter) += 1;
  }
  Divisor d(n);
  for (Index v = 0; v < n; ++v) d(v) = *best[static_cast<std::size_t>(v)] - 1;
  return d;
}

Word word_of_divisor(const WeightedGraph& g, const Divisor& d, Index q) {
  require_size(g, d, "divisor");
  require_charge_one(g, q);
  if (!is_q_effective(d, q)) {
    throw Error(ErrorKind::NotQReduced, "divisor is not q-effective for q = " + g.vertex(q).id);
  }
  const BurnCandidate run = burn_candidate(g, d, q, 0);
  if (!run.script.isZero()) {
    throw Error(ErrorKind::NotQReduced, "divisor is not q-reduced for q = " + g.vertex(q).id);
  }
  Word w{q};
  for (const auto& step : run.trace) w.push_back(step.vertex);
  return w;
}

std::size_t word_count(const WeightedGraph& g, Index q) {
  require_charge_one(g, q);
  // multinomial as a product of binomials
  std::size_t count = 1;
  std::size_t placed = 0;
  for (Index v = 0; v < g.size(); ++v) {
    if (v == q) continue;
    for (Int i = 1; i <= g.charge(v); ++i) {
      ++placed;
      count = checked_mul(count, placed) / static_cast<std::size_t>(i);
    }
  }
  return count;
}

std::vector<Word> enumerate_words(const WeightedGraph& g, Index q) {
  require_charge_one(g, q);
  Word rest;
  for (Index v = 0; v < g.size(); ++v) {
    if (v == q) continue;
    for (Int i = 0; i < g.charge(v); ++i) rest.push_back(v);
  }
  std::vector<Word> out;
  do {
    Word w{q};
    w.insert(w.end(), rest.begin(), rest.end());
    out.push_back(std::move(w));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

Census max_unwinnable_census(const WeightedGraph& g, Index q, const SolveOptions& options) {
  require_charge_one(g, q);
  Census census;
  census.q = q;

  std::vector<std::pair<Word, Divisor>> pool;
  for (auto& w : enumerate_words(g, q)) {
    ++census.words;
    Divisor d = divisor_of_word(g, w);
    const bool dup = std::any_of(pool.begin(), pool.end(), [&](const auto& p) { return p.second == d; });
    if (!dup) pool.emplace_back(std::move(w), std::move(d));
  }
  census.distinct_divisors = pool.size();

  for (const auto& [word, d] : pool) {
    const bool dominated =
        std::any_of(pool.begin(), pool.end(), [&](const auto& other) { return strictly_dominates(other.second, d); });
    if (dominated) continue;

    CensusEntry entry;
    entry.word = word;
    entry.divisor = d;
    entry.q_effective = is_q_effective(d, q);
    entry.class_representative = q_reduce(g, d, q, options).divisor;
    bool maximal = !is_winnable(g, d, options).winnable;
    for (Index v = 0; v < g.size() && maximal; ++v) {
      Divisor bumped = d;
      bumped(v) += 1;
      maximal = is_winnable(g, bumped, options).winnable;
    }
    entry.maximal_verified = maximal;
    (entry.q_effective ? census.maximal : census.non_reduced).push_back(std::move(entry));
  }
  return census;
}

std::vector<std::size_t> PairingReport::shared_classes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].pairs.size() > 1) out.push_back(i);
  }
  return out;
}

PairingReport pairing_exploration(const WeightedGraph& g, const Census& census) {
  const LinearEquivalence equiv(g);
  PairingReport report;
  const auto& entries = census.maximal;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i; j < entries.size(); ++j) {
      const Divisor sum = entries[i].divisor + entries[j].divisor;
      auto it = std::find_if(report.classes.begin(), report.classes.end(),
                             [&](const SumClass& c) { return equiv.equivalent(c.representative, sum); });
      if (it == report.classes.end()) {
        report.classes.push_back({sum, {}});
        it = std::prev(report.classes.end());
      }
      it->pairs.emplace_back(i, j);
    }
  }

  report.valency_minus_two = Divisor(g.size());
  for (Index v = 0; v < g.size(); ++v) report.valency_minus_two(v) = g.valency(v) - 2;
  report.valency_minus_two_degree = degree(report.valency_minus_two);
  for (std::size_t c = 0; c < report.classes.size(); ++c) {
    if (equiv.equivalent(report.classes[c].representative, report.valency_minus_two)) {
      report.matching_classes.push_back(c);
    }
  }
  return report;
}

}  // namespace chipfire
