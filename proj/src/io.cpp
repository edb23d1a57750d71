#include "conlap/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace conlap {

namespace {

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [l, c] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(l, c, "invalid JSON");
  }
}

std::vector<Face> faces_from(const nlohmann::json& arr, const char* key) {
  if (!arr.is_array()) throw InputError(std::string("\"") + key + "\" must be an array");
  std::vector<Face> out;
  for (const auto& f : arr) {
    if (!f.is_array()) throw InputError(std::string("each entry of \"") + key + "\" must be an array");
    std::vector<Vertex> vs;
    for (const auto& v : f) {
      if (!v.is_number_unsigned()) throw InputError("vertex labels must be non-negative integers");
      vs.push_back(v.get<Vertex>());
    }
    out.emplace_back(std::move(vs));
  }
  return out;
}

SimplicialComplex complex_from(const nlohmann::json& j) {
  if (j.contains("facets")) {
    auto facets = faces_from(j["facets"], "facets");
    return SimplicialComplex::closure(facets);
  }
  if (j.contains("faces")) return SimplicialComplex::validate(faces_from(j["faces"], "faces"));
  throw InputError("complex JSON needs a \"facets\" or \"faces\" key");
}

Graph graph_from(const nlohmann::json& j) {
  std::vector<Vertex> vs;
  if (j.contains("vertices"))
    for (const auto& v : j["vertices"]) vs.push_back(v.get<Vertex>());
  std::vector<Edge> es;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw InputError("edges must be [u, v] pairs");
    es.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return Graph(std::move(vs), es);
}

}  // namespace

SimplicialComplex parse_complex_json(std::string_view text) {
  auto j = parse_json(text);
  if (!j.is_object()) throw ParseError(1, 1, "expected a JSON object");
  return complex_from(j);
}

std::string complex_to_json(const SimplicialComplex& k) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  auto faces = nlohmann::json::array();
  for (const auto& f : k.faces()) faces.push_back(f.vertices());
  j["faces"] = faces;
  return j.dump();
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Vertex> nums;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == ',') {
        ++i;
        continue;
      }
      Vertex v = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
      if (ec != std::errc() || ptr == line.data() + i)
        throw ParseError(line_no, i + 1, "expected a non-negative integer vertex label");
      nums.push_back(v);
      i = static_cast<std::size_t>(ptr - line.data());
    }
    if (nums.size() == 1) {
      vs.push_back(nums[0]);
    } else if (nums.size() == 2) {
      if (nums[0] == nums[1]) throw ParseError(line_no, 1, "loop edge");
      es.emplace_back(nums[0], nums[1]);
    } else if (nums.size() > 2) {
      throw ParseError(line_no, 1, "expected at most two labels per line");
    }
    pos = end + 1;
  }
  return Graph(std::move(vs), es);
}

std::string graph_to_edge_list(const Graph& g) {
  std::string s;
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (g.degree(i) == 0) s += std::to_string(g.label(i)) + "\n";
  for (const auto& [u, v] : g.edges()) s += std::to_string(u) + " " + std::to_string(v) + "\n";
  return s;
}

std::string graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["vertices"] = g.labels();
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = edges;
  return j.dump();
}

Input parse_input(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    auto j = parse_json(text);
    if (j.contains("facets") || j.contains("faces")) return complex_from(j);
    if (j.contains("edges")) return graph_from(j);
    throw InputError("JSON input needs \"facets\", \"faces\" or \"edges\"");
  }
  return parse_edge_list(text);
}

Input load_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_input(ss.str());
}

}  // namespace conlap
