#include "chipfire/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "chipfire/error.hpp"

namespace chipfire::io {

namespace {

Json parse_json(std::string_view text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string(what) + " is not valid JSON: " + e.what());
  }
}

Int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw Error(ErrorKind::InvalidInput, where + " must be an integer");
  return j.get<Int>();
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw Error(ErrorKind::InvalidInput, where + " must be a string");
  return j.get<std::string>();
}

std::map<std::string, std::string> as_string_map(const Json& j, const std::string& where) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, where + " must be an object");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) out[k] = as_string(v, where + "." + k);
  return out;
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GraphDescription parse_graph(std::string_view text) {
  const Json j = parse_json(text, "graph file");
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw Error(ErrorKind::InvalidInput, "graph file needs a \"vertices\" array");
  }
  GraphDescription desc;
  std::size_t k = 0;
  for (const auto& v : j["vertices"]) {
    const std::string where = "vertices[" + std::to_string(k++) + "]";
    if (!v.is_object() || !v.contains("id")) throw Error(ErrorKind::InvalidInput, where + " needs an \"id\"");
    desc.vertices.push_back({as_string(v["id"], where + ".id"), v.contains("weight") ? as_int(v["weight"], where + ".weight") : 1});
  }
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw Error(ErrorKind::InvalidInput, "\"edges\" must be an array");
    k = 0;
    for (const auto& e : j["edges"]) {
      const std::string where = "edges[" + std::to_string(k++) + "]";
      if (!e.is_object() || !e.contains("u") || !e.contains("v")) {
        throw Error(ErrorKind::InvalidInput, where + " needs \"u\" and \"v\"");
      }
      desc.edges.push_back({as_string(e["u"], where + ".u"), as_string(e["v"], where + ".v"),
                            e.contains("weight") ? as_int(e["weight"], where + ".weight") : 1,
                            e.contains("mult") ? as_int(e["mult"], where + ".mult") : 1});
    }
  }
  return desc;
}

WeightedGraph load_graph(const std::filesystem::path& path) {
  return WeightedGraph::build(parse_graph(read_file(path)));
}

Json graph_to_json(const WeightedGraph& g) {
  Json out;
  out["vertices"] = Json::array();
  for (const auto& v : g.vertices()) out["vertices"].push_back({{"id", v.id}, {"weight", v.weight}});
  out["edges"] = Json::array();
  for (const auto& e : g.edges()) {
    out["edges"].push_back(
        {{"u", g.vertex(e.u).id}, {"v", g.vertex(e.v).id}, {"weight", e.weight}, {"mult", e.multiplicity}});
  }
  return out;
}

Divisor parse_divisor(const WeightedGraph& g, std::string_view text) {
  // nlohmann keeps the last of duplicate keys, so count top-level keys while parsing
  std::multiset<std::string> keys;
  Json j;
  try {
    j = Json::parse(text, [&](int depth, Json::parse_event_t event, Json& parsed) {
      if (event == Json::parse_event_t::key && depth == 1) keys.insert(parsed.get<std::string>());
      return true;
    });
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string("divisor file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "divisor file must be an object of vertex id -> chips");
  for (const auto& key : keys) {
    if (keys.count(key) > 1) throw Error(ErrorKind::InvalidInput, "divisor lists vertex " + key + " more than once");
  }
  Divisor d = Divisor::Zero(g.size());
  for (const auto& [id, value] : j.items()) {
    auto v = g.find(id);
    if (!v) throw Error(ErrorKind::UnknownVertex, "divisor names unknown vertex " + id);
    d(*v) = as_int(value, "divisor value for " + id);
  }
  for (const auto& vx : g.vertices()) {
    if (!j.contains(vx.id)) throw Error(ErrorKind::InvalidInput, "divisor is missing vertex " + vx.id);
  }
  return d;
}

Divisor load_divisor(const WeightedGraph& g, const std::filesystem::path& path) {
  return parse_divisor(g, read_file(path));
}

Json divisor_to_json(const WeightedGraph& g, const IntVector& d) {
  require_size(g, d, "divisor");
  Json out = Json::object();
  for (Index v = 0; v < g.size(); ++v) out[g.vertex(v).id] = d(v);
  return out;
}

ActionDescription parse_action(std::string_view text) {
  const Json j = parse_json(text, "action file");
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array()) {
    throw Error(ErrorKind::InvalidInput, "action file needs a \"generators\" array");
  }
  ActionDescription desc;
  std::size_t k = 0;
  for (const auto& gen : j["generators"]) {
    const std::string where = "generators[" + std::to_string(k++) + "]";
    if (!gen.is_object()) throw Error(ErrorKind::InvalidInput, where + " must be an object");
    ActionDescription::Generator out;
    if (gen.contains("vertices")) out.vertices = as_string_map(gen["vertices"], where + ".vertices");
    if (gen.contains("half_edges")) out.half_edges = as_string_map(gen["half_edges"], where + ".half_edges");
    desc.generators.push_back(std::move(out));
  }
  return desc;
}

ActionDescription load_action(const std::filesystem::path& path) { return parse_action(read_file(path)); }

Json word_to_json(const WeightedGraph& g, const Word& w) {
  Json out = Json::array();
  for (Index x : w) out.push_back(g.vertex(x).id);
  return out;
}

std::string to_dot(const WeightedGraph& g, const IntVector* divisor, std::string_view name) {
  std::ostringstream os;
  os << "graph " << dot_quote(name) << " {\n";
  os << "  node [shape=circle, style=filled, fillcolor=black, fontcolor=white, fixedsize=true];\n";
  for (Index v = 0; v < g.size(); ++v) {
    const auto& vx = g.vertex(v);
    std::string label = vx.id;
    if (divisor) label += "\\n" + std::to_string((*divisor)(v));
    const double size = 0.4 + 0.2 * static_cast<double>(vx.weight);
    os << "  " << dot_quote(vx.id) << " [label=\"" << label << "\", xlabel=\"w=" << vx.weight
       << "\", width=" << size << ", height=" << size;
    if (divisor && (*divisor)(v) < 0) os << ", fillcolor=red";
    os << "];\n";
  }
  for (const auto& e : g.edges()) {
    for (Int m = 0; m < e.multiplicity; ++m) {
      os << "  " << dot_quote(g.vertex(e.u).id) << " -- " << dot_quote(g.vertex(e.v).id)
         << " [penwidth=" << 1.5 * static_cast<double>(e.weight) << ", label=\"" << e.weight << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace chipfire::io
