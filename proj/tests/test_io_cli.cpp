#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "chipfire/cli.hpp"
#include "chipfire/error.hpp"
#include "chipfire/io.hpp"
#include "chipfire/solvers.hpp"
#include "fixtures.hpp"

using namespace chipfire;
using fixtures::vec;
namespace fs = std::filesystem;

namespace {

const fs::path kData = CHIPFIRE_TEST_DATA;

std::string data(const char* name) { return (kData / name).string(); }

struct Outcome {
  int code;
  std::string out, err;
  io::Json json() const { return io::Json::parse(out); }
};

Outcome run(cli::CommandRequest r) {
  std::ostringstream out, err;
  const int code = cli::run(r, out, err);
  return {code, out.str(), err.str()};
}

cli::CommandRequest request(const char* command, const char* graph) {
  cli::CommandRequest r;
  r.command = command;
  r.graph = data(graph);
  return r;
}

fs::path scratch(const std::string& name, const std::string& contents) {
  const fs::path dir = fs::temp_directory_path() / "chipfire_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << contents;
  return p;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::InvalidInput;
}

int shell(const std::string& args) {
  const std::string cmd = std::string(CHIPFIRE_BIN) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("graph files") {
  const auto desc = io::parse_graph(R"({"vertices":[{"id":"a"},{"id":"b","weight":2,"colour":"red"}],
                                        "edges":[{"u":"a","v":"b"}],"comment":"x"})");
  REQUIRE(desc.vertices.size() == 2);
  CHECK(desc.vertices[0].weight == 1);
  CHECK(desc.edges[0].weight == 1);
  CHECK(desc.edges[0].multiplicity == 1);

  CHECK(kind_of([] { io::parse_graph("{not json"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { io::parse_graph(R"({"edges":[]})"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { io::parse_graph(R"({"vertices":[{"id":"a","weight":1.5}]})"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { io::load_graph("/nonexistent/graph.json"); }) == ErrorKind::InvalidInput);

  const auto g = io::load_graph(data("gstar.json"));
  CHECK(g.laplacian() == fixtures::gstar().laplacian());
  const auto again = build_graph(io::parse_graph(io::graph_to_json(g).dump()));
  CHECK(again.laplacian() == g.laplacian());
}

TEST_CASE("divisor files") {
  const auto g = fixtures::star();
  CHECK(io::parse_divisor(g, R"({"v4":-1,"v1":1,"v2":0,"v3":0})") == vec({1, 0, 0, -1}));
  CHECK(kind_of([&] { io::parse_divisor(g, R"({"v1":1,"v1":2,"v2":0,"v3":0,"v4":0})"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([&] { io::parse_divisor(g, R"({"v1":1,"v2":0,"v3":0})"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([&] { io::parse_divisor(g, R"({"v1":1,"v2":0,"v3":0,"v4":0,"v9":0})"); }) == ErrorKind::UnknownVertex);
  CHECK(kind_of([&] { io::parse_divisor(g, R"({"v1":"1","v2":0,"v3":0,"v4":0})"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([&] { io::parse_divisor(g, R"([1,0,0,-1])"); }) == ErrorKind::InvalidInput);
  // values must be integers, not objects
  CHECK(kind_of([&] { io::parse_divisor(g, R"({"v1":{"a":1,"a":2},"v2":0,"v3":0,"v4":0})"); }) ==
        ErrorKind::InvalidInput);
  CHECK(io::divisor_to_json(g, vec({1, 0, 0, -1})).dump() == R"({"v1":1,"v2":0,"v3":0,"v4":-1})");
}

TEST_CASE("action files") {
  const auto a = io::load_action(data("reflection.json"));
  REQUIRE(a.generators.size() == 1);
  CHECK(a.generators[0].vertices.at("v1") == "v4");
  CHECK_FALSE(a.generators[0].half_edges.has_value());
  const auto b = io::parse_action(R"({"generators":[{"half_edges":{"e0a":"e1a"}}]})");
  CHECK(b.generators[0].half_edges->at("e0a") == "e1a");
  CHECK(kind_of([] { io::parse_action(R"({"generators":{}})"); }) == ErrorKind::InvalidInput);
}

TEST_CASE("DOT rendering") {
  const auto g = fixtures::gstar();
  const Divisor d = vec({1, -1, 1, 2});
  const std::string dot = io::to_dot(g, &d, "G");
  CHECK(dot.rfind("graph \"G\" {", 0) == 0);
  CHECK(dot.find("label=\"v2\\n-1\"") != std::string::npos);
  CHECK(dot.find("fillcolor=red") != std::string::npos);
  CHECK(dot.find("\"v1\" -- \"v2\" [penwidth=3") != std::string::npos);
  CHECK(dot.find("\"v2\" -- \"v3\" [penwidth=1.5") != std::string::npos);
  CHECK(dot.find("xlabel=\"w=2\"") != std::string::npos);
  CHECK(dot.find("width=0.8") != std::string::npos);
  CHECK(dot.find("width=0.6") != std::string::npos);

  const auto multi = fixtures::make({{"x", 1}, {"y", 1}}, {{"x", "y", 1, 2}});
  const std::string m = io::to_dot(multi);
  const auto first = m.find("\"x\" -- \"y\"");
  REQUIRE(first != std::string::npos);
  CHECK(m.find("\"x\" -- \"y\"", first + 1) != std::string::npos);
}

TEST_CASE("winnable command") {
  auto r = request("winnable", "star.json");
  r.divisor = data("star_unwinnable.json");
  const auto o = run(r);
  CHECK(o.code == 0);
  CHECK(o.json()["winnable"] == false);
  CHECK(o.json()["witness"].is_null());

  r.divisor = data("star_reducible.json");
  const auto w = run(r);
  CHECK(w.code == 0);
  CHECK(w.json()["winnable"] == true);
  const auto g = fixtures::star();
  const Divisor witness = io::parse_divisor(g, w.json()["witness"].dump());
  const FiringScript script = io::parse_divisor(g, w.json()["script"].dump());
  CHECK(is_effective(witness));
  CHECK(apply_script(g, vec({1, 0, 2, -1}), script) == witness);
}

TEST_CASE("reduce and burn commands") {
  auto r = request("reduce", "star.json");
  r.divisor = data("star_reducible.json");
  r.q = "v4";
  const auto o = run(r);
  REQUIRE(o.code == 0);
  CHECK(o.json()["divisor"].dump() == R"({"v1":1,"v2":0,"v3":0,"v4":1})");
  CHECK(o.json()["script"].dump() == R"({"v1":1,"v2":1,"v3":2,"v4":0})");

  r.q = "missing";
  const auto bad = run(r);
  CHECK(bad.code == 2);
  CHECK(bad.err.find("missing") != std::string::npos);

  r.q.reset();
  CHECK(run(r).code == 2);

  auto b = request("burn", "gstar.json");
  b.divisor = data("gstar_unwinnable.json");
  b.q = "v2";
  const auto burn = run(b);
  REQUIRE(burn.code == 0);
  const auto j = burn.json();
  CHECK(j["q_reduced"] == true);
  CHECK(j["trace"].size() == 4);
  CHECK(j["trace"][1]["vertex"] == "v1");
  CHECK(j["trace"][1]["pass"] == 2);
  CHECK(j["iterations"].get<int>() <= j["iteration_bound"].get<int>());

  b.q = "v1";  // v2 is in debt
  const auto pre = run(b);
  CHECK(pre.code == 4);
  CHECK(pre.err.find("NotQEffective") != std::string::npos);
}

TEST_CASE("equiv, jacobian and laplacian commands") {
  auto e = request("equiv", "star.json");
  e.d1 = data("star_unwinnable.json");
  e.d2 = data("star_shifted.json");
  const auto yes = run(e);
  REQUIRE(yes.code == 0);
  CHECK(yes.json()["equivalent"] == true);
  CHECK(yes.json()["script"].dump() == R"({"v1":0,"v2":-1,"v3":-1,"v4":-1})");

  e.d2 = scratch("zero.json", R"({"v1":0,"v2":0,"v3":0,"v4":0})").string();
  const auto no = run(e);
  CHECK(no.code == 0);
  CHECK(no.json()["result"] == "not-equivalent");

  const auto jac = run(request("jacobian", "star.json"));
  CHECK(jac.json()["invariant_factors"].dump() == "[2]");
  CHECK(jac.json()["order"] == 2);

  const auto lap = run(request("laplacian", "star.json"));
  CHECK(lap.json()["matrix"].dump() == "[[2,0,-1,0],[0,2,-1,0],[-2,-2,3,-1],[0,0,-1,1]]");
}

TEST_CASE("words and maxunwin commands") {
  auto w = request("words", "gstar.json");
  w.q = "v1";
  const auto words = run(w);
  REQUIRE(words.code == 0);
  CHECK(words.json()["count"] == 12);
  CHECK(words.json()["words"].size() == 12);

  w.q = "v3";
  const auto charge = run(w);
  CHECK(charge.code == 4);
  CHECK(charge.err.find("v3") != std::string::npos);

  auto m = request("maxunwin", "gstar.json");
  m.q = "v1";
  const auto census = run(m);
  REQUIRE(census.code == 0);
  const auto j = census.json();
  CHECK(j["census"].size() == 5);
  for (const auto& entry : j["census"]) {
    CHECK(entry.contains("word"));
    CHECK(entry.contains("divisor"));
    CHECK(entry.contains("class_representative"));
  }
  CHECK(j["pairing"]["valency_minus_two_degree"] == 7);
  CHECK(j["pairing"]["valency_minus_two_matches"].empty());
  CHECK(j["pairing"]["shared_classes"].size() == 1);

  // same request, same bytes
  CHECK(run(m).out == census.out);
}

TEST_CASE("quotient output is a graph file for every command") {
  auto q = request("quotient", "square_diagonal.json");
  q.action = data("reflection.json");
  q.divisor = data("square_principal.json");
  const auto o = run(q);
  REQUIRE(o.code == 0);
  const auto j = o.json();
  CHECK(j["group_order"] == 2);
  CHECK(j["pushforward"].dump() == R"({"v1+v4":2,"v2":1,"v3":-3})");

  const auto graph = scratch("quotient.json", o.out);
  const auto pushed = scratch("pushed.json", j["pushforward"].dump());
  const auto zero = scratch("qzero.json", R"({"v1+v4":0,"v2":0,"v3":0})");

  auto lap = request("laplacian", "star.json");
  lap.graph = graph.string();
  CHECK(run(lap).json()["matrix"].dump() == "[[2,-2,-2],[-1,3,-1],[-1,-1,3]]");

  auto e = request("equiv", "star.json");
  e.graph = graph.string();
  e.d1 = zero.string();
  e.d2 = pushed.string();
  const auto eq = run(e);
  CHECK(eq.json()["script"].dump() == R"({"v1+v4":0,"v2":0,"v3":1})");

  for (const char* cmd : {"winnable", "reduce", "burn", "jacobian", "maxunwin", "words"}) {
    auto r = request(cmd, "star.json");
    r.graph = graph.string();
    r.divisor = pushed.string();
    r.q = "v1+v4";
    const auto out = run(r);
    CAPTURE(cmd);
    // v1+v4 has charge 2 so word commands refuse it; burning needs q-effective input
    const bool words = std::string(cmd) == "maxunwin" || std::string(cmd) == "words";
    const bool burn = std::string(cmd) == "burn";
    CHECK(out.code == (words || burn ? 4 : 0));
  }
  auto words = request("maxunwin", "star.json");
  words.graph = graph.string();
  words.q = "v3";
  CHECK(run(words).code == 0);

  q.format = cli::Format::Dot;
  const auto dot = run(q);
  CHECK(dot.out.find("\"v1+v4\" -- \"v3\"") != std::string::npos);
  CHECK(dot.out.find("penwidth=3") != std::string::npos);
}

TEST_CASE("bad action and unknown command") {
  auto q = request("quotient", "square_diagonal.json");
  q.action = scratch("rot.json", R"({"generators":[{"vertices":{"v1":"v2","v2":"v4","v4":"v3","v3":"v1"}}]})").string();
  const auto o = run(q);
  CHECK(o.code == 2);
  CHECK(o.err.find("NotAutomorphism") != std::string::npos);

  CHECK(run(request("dance", "star.json")).code == 1);
  CHECK(run(request("jacobian", "nonexistent.json")).code == 2);
}

TEST_CASE("binary exit codes") {
  const std::string star = data("star.json");
  CHECK(shell("winnable --graph " + star + " --divisor " + data("star_unwinnable.json")) == 0);
  CHECK(shell("reduce --graph " + star + " --divisor " + data("star_unwinnable.json") + " --q missing") == 2);
  CHECK(shell("words --graph " + star + " --q v3") == 4);
  CHECK(shell("reduce --graph " + star + " --divisor " + data("star_unwinnable.json")) == 1);
  CHECK(shell("jacobian --graph " + star + " --format dot") == 0);
  CHECK(shell("jacobian --graph " + star + " --format svg") == 1);
}
