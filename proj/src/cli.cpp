#include "chipfire/cli.hpp"

#include <functional>
#include <map>
#include <ostream>

#include "chipfire/error.hpp"
#include "chipfire/io.hpp"
#include "chipfire/quotient.hpp"
#include "chipfire/solvers.hpp"
#include "chipfire/words.hpp"

namespace chipfire::cli {

namespace {

using io::Json;

struct Context {
  const CommandRequest& request;
  WeightedGraph graph;
  std::ostream& out;
};

std::string require(const std::optional<std::string>& value, const char* flag) {
  if (!value) throw Error(ErrorKind::InvalidInput, std::string("missing required option ") + flag);
  return *value;
}

Index require_q(const Context& ctx) { return ctx.graph.index_of(require(ctx.request.q, "--q")); }

Divisor require_divisor(const Context& ctx, const std::optional<std::string>& path, const char* flag) {
  return io::load_divisor(ctx.graph, require(path, flag));
}

Json script_or_null(const WeightedGraph& g, const std::optional<IntVector>& s) {
  return s ? io::divisor_to_json(g, *s) : Json(nullptr);
}

Json trace_to_json(const WeightedGraph& g, const std::vector<BurnStep>& trace) {
  Json out = Json::array();
  for (const auto& step : trace) out.push_back({{"vertex", g.vertex(step.vertex).id}, {"pass", step.pass}});
  return out;
}

void emit(Context& ctx, const Json& report, const std::string& dot) {
  if (ctx.request.format == Format::Dot) {
    ctx.out << dot;
  } else {
    ctx.out << report.dump(2) << "\n";
  }
}

void cmd_winnable(Context& ctx) {
  const Divisor d = require_divisor(ctx, ctx.request.divisor, "--divisor");
  const Winnability w = is_winnable(ctx.graph, d);
  Json report;
  report["winnable"] = w.winnable;
  report["witness"] = script_or_null(ctx.graph, w.witness);
  report["script"] = script_or_null(ctx.graph, w.script);
  emit(ctx, report, io::to_dot(ctx.graph, w.witness ? &*w.witness : &d, "winnable"));
}

void cmd_reduce(Context& ctx) {
  const Divisor d = require_divisor(ctx, ctx.request.divisor, "--divisor");
  const Index q = require_q(ctx);
  const Reduction r = q_reduce(ctx.graph, d, q);
  Json report;
  report["q"] = ctx.graph.vertex(q).id;
  report["divisor"] = io::divisor_to_json(ctx.graph, r.divisor);
  report["script"] = io::divisor_to_json(ctx.graph, r.script);
  report["rounds"] = r.rounds;
  emit(ctx, report, io::to_dot(ctx.graph, &r.divisor, "reduced"));
}

void cmd_burn(Context& ctx) {
  const Divisor d = require_divisor(ctx, ctx.request.divisor, "--divisor");
  const Index q = require_q(ctx);
  const BurnReport b = modified_burning(ctx.graph, d, q);
  Json report;
  report["q"] = ctx.graph.vertex(q).id;
  report["script"] = io::divisor_to_json(ctx.graph, b.script);
  report["q_reduced"] = b.is_zero();
  report["selected_f"] = b.selected;
  report["iterations"] = b.iterations;
  report["iteration_bound"] = b.iteration_bound;
  report["trace"] = trace_to_json(ctx.graph, b.trace());
  Json cands = Json::array();
  for (const auto& c : b.candidates) {
    cands.push_back({{"f", c.fires_at_q},
                     {"script", io::divisor_to_json(ctx.graph, c.script)},
                     {"q_loss", c.q_loss},
                     {"passes", c.passes},
                     {"trace", trace_to_json(ctx.graph, c.trace)}});
  }
  report["candidates"] = std::move(cands);
  const Divisor after = apply_script(ctx.graph, d, b.script);
  emit(ctx, report, io::to_dot(ctx.graph, &after, "burn"));
}

void cmd_equiv(Context& ctx) {
  const Divisor d1 = require_divisor(ctx, ctx.request.d1, "--d1");
  const Divisor d2 = require_divisor(ctx, ctx.request.d2, "--d2");
  const auto sigma = linear_equiv(ctx.graph, d1, d2);
  Json report;
  report["equivalent"] = sigma.has_value();
  if (sigma) {
    report["script"] = io::divisor_to_json(ctx.graph, *sigma);
  } else {
    report["result"] = "not-equivalent";
  }
  emit(ctx, report, io::to_dot(ctx.graph, &d1, "equiv"));
}

void cmd_jacobian(Context& ctx) {
  const JacobianDescription jac = jacobian(ctx.graph);
  Json report;
  report["invariant_factors"] = jac.invariant_factors;
  report["order"] = jac.order;
  emit(ctx, report, io::to_dot(ctx.graph, nullptr, "jacobian"));
}

void cmd_laplacian(Context& ctx) {
  const auto& L = ctx.graph.laplacian();
  Json report;
  report["vertices"] = Json::array();
  for (const auto& v : ctx.graph.vertices()) report["vertices"].push_back(v.id);
  report["matrix"] = Json::array();
  for (Index i = 0; i < L.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < L.cols(); ++j) row.push_back(L(i, j));
    report["matrix"].push_back(std::move(row));
  }
  emit(ctx, report, io::to_dot(ctx.graph, nullptr, "laplacian"));
}

void cmd_quotient(Context& ctx) {
  const HalfEdgeGraph base(ctx.graph);
  const GroupAction action = resolve_action(base, io::load_action(require(ctx.request.action, "--action")));
  const QuotientGraph quotient = build_quotient(base, action);
  Json report = io::graph_to_json(quotient.graph);
  report["group_order"] = quotient.orbits.group_order;
  std::optional<Divisor> pushed;
  if (ctx.request.divisor) {
    pushed = pushforward(quotient, io::load_divisor(ctx.graph, *ctx.request.divisor));
    report["pushforward"] = io::divisor_to_json(quotient.graph, *pushed);
  }
  emit(ctx, report, io::to_dot(quotient.graph, pushed ? &*pushed : nullptr, "quotient"));
}

void cmd_words(Context& ctx) {
  const Index q = require_q(ctx);
  Json report;
  report["q"] = ctx.graph.vertex(q).id;
  report["count"] = word_count(ctx.graph, q);
  report["words"] = Json::array();
  std::string dot;
  std::size_t k = 0;
  for (const auto& w : enumerate_words(ctx.graph, q)) {
    const Divisor d = divisor_of_word(ctx.graph, w);
    report["words"].push_back({{"word", io::word_to_json(ctx.graph, w)}, {"divisor", io::divisor_to_json(ctx.graph, d)}});
    dot += io::to_dot(ctx.graph, &d, "word" + std::to_string(k++));
  }
  emit(ctx, report, dot);
}

Json census_entries(const WeightedGraph& g, const std::vector<CensusEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) {
    out.push_back({{"word", io::word_to_json(g, e.word)},
                   {"divisor", io::divisor_to_json(g, e.divisor)},
                   {"class_representative", io::divisor_to_json(g, e.class_representative)}});
  }
  return out;
}

void cmd_maxunwin(Context& ctx) {
  const Index q = require_q(ctx);
  const Census census = max_unwinnable_census(ctx.graph, q);
  const PairingReport pairing = pairing_exploration(ctx.graph, census);
  Json report;
  report["q"] = ctx.graph.vertex(q).id;
  report["words"] = census.words;
  report["distinct_divisors"] = census.distinct_divisors;
  report["census"] = census_entries(ctx.graph, census.maximal);
  report["non_reduced"] = census_entries(ctx.graph, census.non_reduced);

  Json classes = Json::array();
  for (const auto& c : pairing.classes) {
    Json pairs = Json::array();
    for (auto [i, j] : c.pairs) pairs.push_back({i, j});
    classes.push_back({{"representative", io::divisor_to_json(ctx.graph, c.representative)}, {"pairs", pairs}});
  }
  Json p;
  p["sum_classes"] = std::move(classes);
  p["shared_classes"] = pairing.shared_classes();
  p["valency_minus_two"] = io::divisor_to_json(ctx.graph, pairing.valency_minus_two);
  p["valency_minus_two_degree"] = pairing.valency_minus_two_degree;
  p["valency_minus_two_matches"] = pairing.matching_classes;
  report["pairing"] = std::move(p);

  std::string dot;
  for (std::size_t k = 0; k < census.maximal.size(); ++k) {
    dot += io::to_dot(ctx.graph, &census.maximal[k].divisor, "census" + std::to_string(k));
  }
  emit(ctx, report, dot);
}

const std::map<std::string, std::function<void(Context&)>>& commands() {
  static const std::map<std::string, std::function<void(Context&)>> table{
      {"winnable", cmd_winnable}, {"reduce", cmd_reduce},     {"burn", cmd_burn},
      {"equiv", cmd_equiv},       {"jacobian", cmd_jacobian}, {"quotient", cmd_quotient},
      {"words", cmd_words},       {"maxunwin", cmd_maxunwin}, {"laplacian", cmd_laplacian},
  };
  return table;
}

int exit_code(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::Validation: return kValidation;
    case ErrorCategory::Computation: return kComputation;
    case ErrorCategory::Precondition: return kPrecondition;
  }
  return kComputation;
}

}  // namespace

int run(const CommandRequest& request, std::ostream& out, std::ostream& err) {
  const auto it = commands().find(request.command);
  if (it == commands().end()) {
    err << "error: unknown command " << request.command << "\n";
    return kUsage;
  }
  try {
    Context ctx{request, io::load_graph(request.graph), out};
    it->second(ctx);
    return kSuccess;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.category());
  }
}

}  // namespace chipfire::cli
