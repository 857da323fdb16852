#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "covenergy/covering.hpp"
#include "covenergy/families.hpp"
#include "covenergy/graph.hpp"
#include "covenergy/spectral.hpp"

namespace covenergy::io {

using json = nlohmann::ordered_json;

struct GraphFile {
  Graph graph;
  /// Present only for JSON input carrying a "cover" array.
  std::optional<std::vector<Vertex>> cover;
};

/// Edge list: first non-comment line `n`, then `u v` per line, `#` comments.
GraphFile parse_edge_list(std::string_view text);
/// {"n": int, "edges": [[u, v], ...], "cover": [...]?}
GraphFile parse_graph_json(std::string_view text);
/// Dispatches on the first non-blank character ('{' means JSON).
GraphFile parse_graph(std::string_view text);

/// Throws std::filesystem::filesystem_error when the file cannot be read.
std::string read_file(const std::filesystem::path& path);

std::string to_edge_list(const Graph& g);
json graph_to_json(const Graph& g,
                   const std::optional<CoverSet>& cover = std::nullopt);

/// Rounds to 12 significant digits; tiny magnitudes (< 1e-12) become +0.
double round12(double x);
/// printf("%.12g") with the same zero handling.
std::string format12(double x);

/// Parses "0,3,5"; whitespace allowed, empty string is the empty set.
std::vector<Vertex> parse_vertex_list(std::string_view text);

json energy_report_to_json(const EnergyReport& r);
std::string energy_report_csv_header();
std::string energy_report_csv_row(const EnergyReport& r);

json cover_to_json(const CoverSet& q, std::string_view method);
json theorem_report_to_json(const TheoremReport& r);
json radicand_report_to_json(const RadicandReport& r);
/// Coefficients are arbitrary precision, so this writes the JSON text itself.
std::string char_poly_to_json(const CharPoly& p, const CoverSet& q);

/// Compact, newline-terminated.
std::string dump(const json& j);

}  // namespace covenergy::io
