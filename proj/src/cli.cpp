#include "covenergy/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <optional>

#include "CLI11.hpp"
#include "covenergy/covering.hpp"
#include "covenergy/families.hpp"
#include "covenergy/io.hpp"
#include "covenergy/spectral.hpp"
#include "covenergy/verify.hpp"

namespace covenergy::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t bruteforce_bound() {
  const char* env = std::getenv("COVER_ENERGY_MAX_N");
  if (env == nullptr || *env == '\0') return kDefaultBruteforceBound;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) {
    throw UsageError("COVER_ENERGY_MAX_N must be a positive integer");
  }
  return static_cast<std::size_t>(v);
}

io::GraphFile load(const std::string& path) {
  return io::parse_graph(io::read_file(path));
}

CoverSet resolve_cover(const io::GraphFile& file,
                       const std::optional<std::string>& cover_flag) {
  const std::size_t n = file.graph.order();
  if (cover_flag) return CoverSet(n, io::parse_vertex_list(*cover_flag));
  if (file.cover) return CoverSet(n, *file.cover);
  return CoverSet(n, {});
}

struct GenArgs {
  std::string family;
  std::optional<std::size_t> m, ray_len, n;
  std::optional<double> p;
  std::uint64_t seed = 0;
  std::string format = "edgelist";
};

void cmd_gen(const GenArgs& a, std::ostream& out) {
  std::optional<Graph> g;
  if (a.family == "star") {
    if (!a.m) throw UsageError("--family star needs --m");
    if (a.n || a.p) throw UsageError("--n/--p do not apply to --family star");
    g = gen_star_rays(StarParams{*a.m, a.ray_len.value_or(1)});
  } else {
    if (a.m || a.ray_len) {
      throw UsageError("--m/--ray-len only apply to --family star");
    }
    if (!a.n) throw UsageError("--family " + a.family + " needs --n");
    if (a.family == "path") {
      g = gen_path(*a.n);
    } else if (a.family == "complete") {
      g = gen_complete(*a.n);
    } else {
      if (!a.p) throw UsageError("--family random needs --p");
      g = gen_random(*a.n, *a.p, a.seed);
    }
    if (a.family != "random" && a.p) {
      throw UsageError("--p only applies to --family random");
    }
  }
  if (a.format == "json") {
    out << io::dump(io::graph_to_json(*g));
  } else {
    out << io::to_edge_list(*g);
  }
}

CoverSet min_cover(const Graph& g, const std::string& method, int k) {
  if (k == 2) {
    return method == "bruteforce"
               ? min_2_covering_bruteforce(g, bruteforce_bound())
               : min_2_covering_exact(g);
  }
  return method == "bruteforce"
             ? min_3_covering_bruteforce(g, bruteforce_bound())
             : min_3_covering_exact(g);
}

void emit_counterexample(const verify::TrialOutcome& t, std::ostream& out) {
  out << "# counterexample in trial " << t.index << " (edge probability "
      << io::format12(t.edge_prob) << ")\n";
  for (const auto& f : t.failures) out << "# " << f << "\n";
  out << "# candidate cover: " << io::json(t.candidate.members()).dump()
      << "\n";
  out << "# superset cover: " << io::json(t.valid_cover.members()).dump()
      << "\n";
  out << io::to_edge_list(t.graph);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Minimum 3-path coverings, covering matrices and covering energy",
               "cover-energy"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph");
  gen_cmd->add_option("--family", gen.family, "star | path | complete | random")
      ->required()
      ->check(CLI::IsMember({"star", "path", "complete", "random"}));
  gen_cmd->add_option("--m", gen.m, "Number of rays (star)");
  gen_cmd->add_option("--ray-len", gen.ray_len, "Edges per ray (star)");
  gen_cmd->add_option("--n", gen.n, "Vertex count (path, complete, random)");
  gen_cmd->add_option("--p", gen.p, "Edge probability (random)");
  gen_cmd->add_option("--seed", gen.seed, "Seed (random)");
  gen_cmd->add_option("--format", gen.format, "edgelist | json")
      ->check(CLI::IsMember({"edgelist", "json"}));

  std::string in_path;
  std::string method = "exact";
  int k = 3;
  auto* mincover_cmd =
      app.add_subcommand("mincover", "Minimum 2- or 3-covering of a graph");
  mincover_cmd->add_option("--in", in_path, "Graph file")->required();
  mincover_cmd->add_option("--method", method, "exact | bruteforce")
      ->check(CLI::IsMember({"exact", "bruteforce"}));
  mincover_cmd->add_option("--k", k, "2 (vertex cover) or 3 (P3 cover)")
      ->check(CLI::IsMember({2, 3}));

  std::optional<std::string> cover_flag;
  bool use_min_cover = false;
  std::string energy_format = "json";
  auto* energy_cmd = app.add_subcommand("energy", "Covering energy report");
  energy_cmd->add_option("--in", in_path, "Graph file")->required();
  auto* cover_opt =
      energy_cmd->add_option("--cover", cover_flag, "Cover, e.g. \"0,3,5\"");
  auto* min_opt = energy_cmd->add_flag(
      "--min-cover", use_min_cover, "Use the exact minimum 3-covering");
  cover_opt->excludes(min_opt);
  energy_cmd->add_option("--format", energy_format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* charpoly_cmd = app.add_subcommand(
      "charpoly", "Exact characteristic polynomial of the covering matrix");
  charpoly_cmd->add_option("--in", in_path, "Graph file")->required();
  charpoly_cmd->add_option("--cover", cover_flag, "Cover, e.g. \"0,3,5\"");

  verify::CorpusConfig corpus;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Random-graph property corpus for the covering theorems");
  verify_cmd->add_option("--trials", corpus.trials);
  verify_cmd->add_option("--seed", corpus.seed);
  verify_cmd->add_option("--max-n", corpus.max_n)->check(CLI::Range(3, 64));
  verify_cmd->add_option("--min-n", corpus.min_n)->check(CLI::Range(3, 64));
  verify_cmd->add_option("--threads", corpus.threads, "0 = all cores");

  std::string table_family = "star3";
  std::size_t m_from = 2, m_to = 2;
  auto* table_cmd = app.add_subcommand(
      "family-table", "Closed-form vs numeric energies for a star family");
  table_cmd->add_option("--family", table_family, "star3 | star1")
      ->check(CLI::IsMember({"star3", "star1"}));
  table_cmd->add_option("--m-from", m_from)->required();
  table_cmd->add_option("--m-to", m_to)->required();

  auto* disc_cmd = app.add_subcommand(
      "discrepancy", "Cubic discriminant radicand: direct vs simplified");
  disc_cmd->add_option("--m-from", m_from)->required();
  disc_cmd->add_option("--m-to", m_to)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) {
      cmd_gen(gen, out);
    } else if (mincover_cmd->parsed()) {
      const auto file = load(in_path);
      out << io::dump(io::cover_to_json(min_cover(file.graph, method, k),
                                        method));
    } else if (energy_cmd->parsed()) {
      const auto file = load(in_path);
      const CoverSet q = use_min_cover ? min_3_covering_exact(file.graph)
                                       : resolve_cover(file, cover_flag);
      const auto report = covering_energy(file.graph, q);
      if (energy_format == "csv") {
        out << io::energy_report_csv_header() << io::energy_report_csv_row(report);
      } else {
        out << io::dump(io::energy_report_to_json(report));
      }
    } else if (charpoly_cmd->parsed()) {
      const auto file = load(in_path);
      const CoverSet q = resolve_cover(file, cover_flag);
      out << io::char_poly_to_json(
          char_poly(build_covering_matrix(file.graph, q)), q);
    } else if (verify_cmd->parsed()) {
      if (corpus.min_n > corpus.max_n) {
        throw UsageError("--min-n exceeds --max-n");
      }
      const auto result = verify::run_corpus(corpus);
      if (const auto* bad = result.first_failure()) {
        emit_counterexample(*bad, out);
        err << result.failures() << " of " << corpus.trials
            << " trials produced counterexamples\n";
        return kExitCounterexample;
      }
      io::json summary;
      summary["trials"] = corpus.trials;
      summary["seed"] = corpus.seed;
      summary["min_n"] = corpus.min_n;
      summary["max_n"] = corpus.max_n;
      summary["valid_candidates"] = result.valid_candidates();
      summary["characterization_discrepancies"] =
          result.characterization_discrepancies();
      summary["failures"] = result.failures();
      out << io::dump(summary);
    } else if (table_cmd->parsed()) {
      if (m_from > m_to) throw UsageError("--m-from exceeds --m-to");
      out << "m,energy_closed,energy_numeric,abs_diff\n";
      for (std::size_t m = m_from; m <= m_to; ++m) {
        const bool star3 = table_family == "star3";
        const double closed =
            star3 ? star3_energy_closed(m) : star1_energy_closed(m);
        const Graph g = gen_star_rays(StarParams{m, star3 ? 2u : 1u});
        const double numeric =
            covering_energy(g, CoverSet(g.order(), {0})).energy;
        out << m << "," << io::format12(closed) << ","
            << io::format12(numeric) << ","
            << io::format12(std::abs(closed - numeric)) << "\n";
      }
    } else if (disc_cmd->parsed()) {
      if (m_from > m_to) throw UsageError("--m-from exceeds --m-to");
      io::json reports = io::json::array();
      bool all_negative = true;
      bool any_agree = false;
      for (std::size_t m = m_from; m <= m_to; ++m) {
        const auto r = radicand_discrepancy_report(m);
        all_negative = all_negative && r.direct_negative;
        any_agree = any_agree || r.agree;
        reports.push_back(io::radicand_report_to_json(r));
      }
      io::json j;
      j["reports"] = std::move(reports);
      j["all_direct_negative"] = all_negative;
      j["any_agree"] = any_agree;
      out << io::dump(j);
    }
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace covenergy::cli
