#include "opvg/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace opvg {

using nlohmann::json;

std::optional<GraphFormat> parse_format_name(std::string_view name) {
  if (name == "g6" || name == "graph6") return GraphFormat::Graph6;
  if (name == "edges" || name == "edgelist") return GraphFormat::EdgeList;
  if (name == "json") return GraphFormat::Json;
  return std::nullopt;
}

GraphFormat format_for_path(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  if (ext == ".g6") return GraphFormat::Graph6;
  if (ext == ".json") return GraphFormat::Json;
  return GraphFormat::EdgeList;
}

// ---------------------------------------------------------------------------
// graph6

namespace {

void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

int sixbits(char c) {
  if (c < 63 || c > 126) bad("graph6 byte out of range");
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (text.empty()) bad("empty graph6 string");

  std::size_t pos = 0;
  long long n = 0;
  auto take = [&](int count) {
    long long value = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= text.size()) bad("truncated graph6 size");
      value = (value << 6) | sixbits(text[pos++]);
    }
    return value;
  };
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] != 126) {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n > 100000) bad("graph6 order too large");

  std::vector<std::pair<int, int>> edges;
  long long bits_needed = n * (n - 1) / 2;
  if (static_cast<long long>(text.size() - pos) != (bits_needed + 5) / 6) bad("graph6 length mismatch");
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int byte = sixbits(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  return numbered_graph(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  std::string out;
  long long n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.append(2, 126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

// ---------------------------------------------------------------------------
// edge list

Graph parse_edge_list(std::string_view text) {
  std::vector<LabelledEdge> edges;
  std::vector<std::string> isolated;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() == 1) {
      isolated.push_back(tokens[0]);
    } else if (tokens.size() == 2) {
      edges.emplace_back(tokens[0], tokens[1]);
    } else {
      bad("line " + std::to_string(lineno) + ": expected 'u v'");
    }
  }
  return build_graph(edges, isolated);
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) out += g.label(v) + "\n";
  for (const Edge& e : g.edges()) out += g.label(e.u) + " " + g.label(e.v) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// JSON

Graph graph_from_json(const json& j) {
  try {
    std::vector<std::string> vertices;
    if (j.contains("vertices"))
      for (const auto& v : j.at("vertices")) vertices.push_back(v.get<std::string>());
    std::vector<LabelledEdge> edges;
    for (const auto& e : j.at("edges")) {
      if (e.size() != 2) bad("edge must have two endpoints");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return build_graph(edges, vertices);
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
}

json graph_to_json(const Graph& g) {
  json j;
  j["vertices"] = g.labels();
  j["edges"] = json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({g.label(e.u), g.label(e.v)});
  return j;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::Graph6: return parse_graph6(text);
    case GraphFormat::EdgeList: return parse_edge_list(text);
    case GraphFormat::Json: {
      json j = json::parse(text, nullptr, false);
      if (j.is_discarded()) bad("invalid JSON");
      return graph_from_json(j);
    }
  }
  bad("unknown format");
  return {};
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::Graph6: return to_graph6(g) + "\n";
    case GraphFormat::EdgeList: return to_edge_list(g);
    case GraphFormat::Json: return graph_to_json(g).dump(2) + "\n";
  }
  return {};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) bad("cannot write " + path.string());
  out << content;
}

Graph read_graph(const std::filesystem::path& path, std::optional<GraphFormat> format) {
  return parse_graph(read_file(path), format.value_or(format_for_path(path)));
}

// ---------------------------------------------------------------------------
// drawings

json drawing_to_json(const SegmentDrawing& d) {
  json j;
  j["vertices"] = d.vertices;
  j["segments"] = json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& s = d.segments[i];
    j["segments"].push_back({{"vertex", d.vertices[i]},
                             {"x1", to_string(s.p1.x)},
                             {"y1", to_string(s.p1.y)},
                             {"x2", to_string(s.p2.x)},
                             {"y2", to_string(s.p2.y)}});
  }
  return j;
}

SegmentDrawing drawing_from_json(const json& j) {
  SegmentDrawing d;
  std::vector<std::string> declared;
  try {
    for (const auto& v : j.at("vertices")) declared.push_back(v.get<std::string>());
    for (const auto& s : j.at("segments")) {
      auto coord = [&](const char* key) {
        const auto& value = s.at(key);
        return value.is_number_integer() ? Rational(value.get<long long>())
                                         : parse_rational(value.get<std::string>());
      };
      Segment seg({coord("x1"), coord("y1")}, {coord("x2"), coord("y2")});
      auto vertex = s.at("vertex").get<std::string>();
      if (!seg.axis_parallel()) throw Error(ErrorCode::NonAxisParallel, vertex);
      if (d.index_of(vertex)) bad("two segments for vertex " + vertex);
      d.add(vertex, std::move(seg));
    }
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
  auto a = declared, b = d.vertices;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw Error(ErrorCode::VertexMismatch, "segment list does not match vertex list");
  return d;
}

std::string drawing_to_svg(const SegmentDrawing& d) {
  constexpr double scale = 40.0, lane = 4.0, margin = 20.0;
  Box box = d.bounding_box();
  double xmin = box.xmin.convert_to<double>(), ymax = box.ymax.convert_to<double>();
  double width = (box.xmax - box.xmin).convert_to<double>() * scale + 2 * margin;
  double height = (box.ymax - box.ymin).convert_to<double>() * scale + 2 * margin;
  auto px = [&](const Rational& x) { return (x.convert_to<double>() - xmin) * scale + margin; };
  auto py = [&](const Rational& y) { return (ymax - y.convert_to<double>()) * scale + margin; };

  // Lanes: greedy interval colouring of segments sharing a supporting line.
  std::vector<int> offset(d.size(), 0);
  std::map<std::pair<int, Rational>, std::vector<std::size_t>> lines;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& s = d.segments[i];
    if (s.is_point()) continue;
    lines[{s.is_horizontal() ? 0 : 1, s.is_horizontal() ? s.p1.y : s.p1.x}].push_back(i);
  }
  for (auto& [key, members] : lines) {
    bool horiz = key.first == 0;
    auto lo = [&](std::size_t i) { return horiz ? d.segments[i].p1.x : d.segments[i].p1.y; };
    auto hi = [&](std::size_t i) { return horiz ? d.segments[i].p2.x : d.segments[i].p2.y; };
    std::sort(members.begin(), members.end(), [&](auto a, auto b) { return lo(a) < lo(b); });
    std::vector<Rational> lane_end;
    for (auto i : members) {
      std::size_t l = 0;
      while (l < lane_end.size() && lane_end[l] >= lo(i)) ++l;
      if (l == lane_end.size()) lane_end.emplace_back();
      lane_end[l] = hi(i);
      offset[i] = static_cast<int>(l);
    }
  }

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& s = d.segments[i];
    const auto& name = d.vertices[i];
    if (s.is_point()) {
      svg << "<rect x=\"" << px(s.p1.x) - 3 << "\" y=\"" << py(s.p1.y) - 3
          << "\" width=\"6\" height=\"6\" fill=\"black\"><title>" << name << "</title></rect>\n";
      continue;
    }
    double dx = s.is_vertical() ? offset[i] * lane : 0.0;
    double dy = s.is_horizontal() ? -offset[i] * lane : 0.0;
    svg << "<line x1=\"" << px(s.p1.x) + dx << "\" y1=\"" << py(s.p1.y) + dy << "\" x2=\"" << px(s.p2.x) + dx
        << "\" y2=\"" << py(s.p2.y) + dy << "\" stroke=\"black\" stroke-width=\"2\"><title>" << name
        << "</title></line>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace opvg
