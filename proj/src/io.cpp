#include "covenergy/io.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace covenergy::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::size_t parse_index(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                      ": expected a nonnegative integer, got '" +
                                      std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

GraphFile parse_edge_list(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto tokens = split_ws(line);
    if (!n) {
      if (tokens.size() != 1) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                          ": expected the vertex count");
      }
      n = parse_index(tokens[0], line_no);
      continue;
    }
    if (tokens.size() != 2) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                        ": expected 'u v'");
    }
    edges.emplace_back(parse_index(tokens[0], line_no),
                       parse_index(tokens[1], line_no));
  }
  if (!n) throw Error(ErrorCode::Parse, "missing vertex count");
  return GraphFile{Graph(*n, edges), std::nullopt};
}

GraphFile parse_graph_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  auto as_index = [](const json& v, const char* what) -> std::size_t {
    if (!v.is_number_unsigned()) {
      throw Error(ErrorCode::Parse,
                  std::string(what) + " must be a nonnegative integer");
    }
    return v.get<std::size_t>();
  };
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw Error(ErrorCode::Parse, "expected an object with 'n' and 'edges'");
  }
  const std::size_t n = as_index(j["n"], "n");
  const auto& jedges = j["edges"];
  if (!jedges.is_array()) throw Error(ErrorCode::Parse, "'edges' must be an array");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : jedges) {
    if (!e.is_array() || e.size() != 2) {
      throw Error(ErrorCode::Parse, "each edge must be a 2-element array");
    }
    edges.emplace_back(as_index(e[0], "edge endpoint"),
                       as_index(e[1], "edge endpoint"));
  }
  GraphFile out{Graph(n, edges), std::nullopt};
  if (j.contains("cover")) {
    const auto& jc = j["cover"];
    if (!jc.is_array()) throw Error(ErrorCode::Parse, "'cover' must be an array");
    std::vector<Vertex> cover;
    for (const auto& v : jc) cover.push_back(as_index(v, "cover member"));
    out.cover = std::move(cover);
  }
  return out;
}

GraphFile parse_graph(std::string_view text) {
  const auto t = trim(text);
  if (!t.empty() && t.front() == '{') return parse_graph_json(text);
  return parse_edge_list(text);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::filesystem::filesystem_error(
        "cannot open", path, std::make_error_code(std::errc::io_error));
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

json graph_to_json(const Graph& g, const std::optional<CoverSet>& cover) {
  json j;
  j["n"] = g.order();
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  if (cover) j["cover"] = cover->members();
  return j;
}

double round12(double x) {
  if (!(std::abs(x) >= 1e-12)) return 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string format12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", round12(x));
  return buf;
}

std::vector<Vertex> parse_vertex_list(std::string_view text) {
  std::vector<Vertex> out;
  if (trim(text).empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_index(trim(text.substr(pos, comma - pos)), 1));
    pos = comma + 1;
  }
  return out;
}

json energy_report_to_json(const EnergyReport& r) {
  json j;
  j["cover"] = r.cover.members();
  json eig = json::array();
  for (double l : r.spectrum.eigenvalues) eig.push_back(round12(l));
  j["eigenvalues"] = std::move(eig);
  j["energy"] = round12(r.energy);
  j["method"] = std::string(to_string(r.method));
  return j;
}

std::string energy_report_csv_header() {
  return "cover,eigenvalues,energy,method\n";
}

std::string energy_report_csv_row(const EnergyReport& r) {
  std::vector<std::string> cover, eig;
  for (Vertex v : r.cover.members()) cover.push_back(std::to_string(v));
  for (double l : r.spectrum.eigenvalues) eig.push_back(format12(l));
  return join(cover, ';') + "," + join(eig, ';') + "," + format12(r.energy) +
         "," + std::string(to_string(r.method)) + "\n";
}

json cover_to_json(const CoverSet& q, std::string_view method) {
  json j;
  j["k"] = q.kind() == CoverKind::TwoCovering ? 2 : 3;
  j["method"] = std::string(method);
  j["size"] = q.size();
  j["cover"] = q.members();
  return j;
}

json theorem_report_to_json(const TheoremReport& r) {
  json j;
  j["theorem"] = r.theorem;
  j["pass"] = r.pass();
  json ws = json::array();
  for (const auto& w : r.witnesses) {
    json jw;
    jw["theorem"] = w.theorem;
    jw["kind"] = w.kind;
    jw["vertices"] = w.vertices;
    jw["detail"] = w.detail;
    ws.push_back(std::move(jw));
  }
  j["witnesses"] = std::move(ws);
  return j;
}

json radicand_report_to_json(const RadicandReport& r) {
  json j;
  j["m"] = r.m;
  j["delta1"] = r.delta1;
  j["delta0"] = r.delta0;
  j["direct_expansion"] = r.direct_expansion;
  j["direct_closed_form"] = r.direct_closed_form;
  j["simplified"] = r.simplified;
  j["agree"] = r.agree;
  j["direct_negative"] = r.direct_negative;
  return j;
}

std::string char_poly_to_json(const CharPoly& p, const CoverSet& q) {
  std::ostringstream os;
  os << "{\"n\":" << p.degree() << ",\"cover\":" << json(q.members()).dump()
     << ",\"coefficients\":[";
  for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
    if (i) os << ",";
    os << p.coefficients[i];
  }
  os << "],\"polynomial\":" << json(p.to_string("x")).dump() << "}\n";
  return os.str();
}

std::string dump(const json& j) { return j.dump() + "\n"; }

}  // namespace covenergy::io
