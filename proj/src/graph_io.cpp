#include "plumb/graph_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace plumb {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::ValidationError, "at " + path + ": " + what);
}

int get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) invalid(path, "expected an integer, got " + std::string(j.type_name()));
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) invalid(path, "integer out of range");
  return static_cast<int>(v);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) invalid(path, std::string("missing field \"") + key + "\"");
  return *it;
}

}  // namespace

PlumbingGraph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = e.byte > 0 ? std::min<std::size_t>(e.byte - 1, text.size()) : 0;
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto p = msg.find(": "); p != std::string::npos) msg = msg.substr(p + 2);
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }

  if (!doc.is_object()) invalid("/", "expected an object");
  const auto& vs = field(doc, "vertices", "/");
  if (!vs.is_array()) invalid("/vertices", "expected an array");
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string path = "/vertices/" + std::to_string(i);
    const auto& v = vs[i];
    if (!v.is_object()) invalid(path, "expected an object");
    Vertex vx;
    vx.id = get_int(field(v, "id", path), path + "/id");
    vx.genus = get_int(field(v, "genus", path), path + "/genus");
    const auto& si = field(v, "self_int", path);
    if (si.is_string()) {
      if (si.get<std::string>() != "inf") invalid(path + "/self_int", "expected an integer or \"inf\"");
      vx.self_int = SelfInt::inf();
    } else {
      vx.self_int = SelfInt(get_int(si, path + "/self_int"));
    }
    vertices.push_back(vx);
  }
  std::vector<Edge> edges;
  if (auto it = doc.find("edges"); it != doc.end()) {
    if (!it->is_array()) invalid("/edges", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = "/edges/" + std::to_string(i);
      const auto& e = (*it)[i];
      if (!e.is_array() || e.size() != 2) invalid(path, "expected a pair [i, j]");
      edges.push_back({get_int(e[0], path + "/0"), get_int(e[1], path + "/1")});
    }
  }
  try {
    return validate(PlumbingGraph(std::move(vertices), std::move(edges)));
  } catch (const Error& e) {
    throw Error(ErrorCode::ValidationError, std::string(to_string(e.code())) + ": " + e.what(), e.vertices());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string emit_graph(const PlumbingGraph& g) {
  std::string s = "{\n  \"vertices\": [";
  for (std::size_t i = 0; i < g.vertices().size(); ++i) {
    const auto& v = g.vertices()[i];
    s += i ? ",\n    " : "\n    ";
    s += "{\"id\": " + std::to_string(v.id) + ", \"genus\": " + std::to_string(v.genus) + ", \"self_int\": " +
         (v.self_int.is_inf() ? "\"inf\"" : v.self_int.to_string()) + "}";
  }
  s += g.vertices().empty() ? "],\n" : "\n  ],\n";
  s += "  \"edges\": [";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    s += (i ? ", [" : "[") + std::to_string(e.u) + ", " + std::to_string(e.v) + "]";
  }
  return s + "]\n}\n";
}

}  // namespace plumb
