// Command-line front end: matrix rank reports, bipartite-graph biclique
// numbers, named reproduction checks, the matrix catalog, and the raw
// enumeration survey.
//
// Exit codes: 0 success/PASS, 1 FAIL verdict, 2 usage or parse errors,
// 3 node budget exhausted (or an INCONCLUSIVE verdict).
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "matrank/budget.hpp"
#include "matrank/constructions.hpp"
#include "matrank/enumerate.hpp"
#include "matrank/graph.hpp"
#include "matrank/rank_comb.hpp"
#include "matrank/rank_real.hpp"
#include "matrank/serialize.hpp"
#include "matrank/text_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

// Node cap resolution: an explicit --budget wins, then MATRANK_BUDGET,
// then unlimited (0).
std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  const char* env = std::getenv("MATRANK_BUDGET");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const std::string text(env);
    const unsigned long long v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing text");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("MATRANK_BUDGET is not a non-negative integer");
  }
}

matrank::BinaryMatrix read_matrix(const std::string& path) {
  if (path.empty() || path == "-") return matrank::parse_matrix(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return matrank::parse_matrix(in);
}

std::string vertex_set(std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 64; ++i) {
    if (((mask >> i) & 1ull) == 0) continue;
    if (!first) out += ", ";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

int cmd_rank(const std::string& path, const std::string& quantity, bool json,
             const std::optional<std::uint64_t>& budget_flag) {
  const matrank::BinaryMatrix m = read_matrix(path);
  matrank::Budget budget(resolve_budget(budget_flag));
  using matrank::Json;
  if (quantity.empty()) {
    const matrank::RankProfile p = matrank::rank_profile(m, &budget);
    if (json) {
      std::cout << matrank::pretty(matrank::rank_report_json(m, p));
    } else {
      std::cout << "real=" << p.real << " binary=" << p.binary
                << " boolean=" << p.boolean << " isolation=" << p.isolation << "\n";
    }
    return kExitOk;
  }
  Json out{{"rows", m.rows()}, {"cols", m.cols()}};
  int value = 0;
  if (quantity == "real") {
    value = matrank::real_rank(m);
    out["real"] = value;
  } else if (quantity == "binary") {
    auto [v, cert] = matrank::binary_rank(m, &budget);
    value = v;
    out["binary"] = v;
    out["certificate"] = matrank::to_json(cert);
  } else if (quantity == "boolean") {
    auto [v, cert] = matrank::boolean_rank(m, &budget);
    value = v;
    out["boolean"] = v;
    out["certificate"] = matrank::to_json(cert);
  } else {
    auto [v, cert] = matrank::isolation_number(m, &budget);
    value = v;
    out["isolation"] = v;
    out["certificate"] = matrank::to_json(cert);
  }
  if (json) {
    std::cout << matrank::pretty(out);
  } else {
    std::cout << value << "\n";
  }
  return kExitOk;
}

int cmd_graph(const std::string& path, const std::string& mode,
              const std::optional<std::uint64_t>& budget_flag) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  const matrank::BipartiteGraph g = matrank::parse_graph(in);
  const matrank::BinaryMatrix m = matrank::adjacency_matrix(g);
  matrank::Budget budget(resolve_budget(budget_flag));
  std::vector<matrank::Rectangle> rects;
  if (mode == "bp") {
    auto [v, cert] = matrank::binary_rank(m, &budget);
    std::cout << "bp = " << v << "\n";
    rects = cert.rectangles;
  } else {
    auto [v, cert] = matrank::boolean_rank(m, &budget);
    std::cout << "bc = " << v << "\n";
    rects = cert.rectangles;
  }
  for (std::size_t i = 0; i < rects.size(); ++i)
    std::cout << "biclique " << i + 1 << ": left " << vertex_set(rects[i].row_set)
              << " right " << vertex_set(rects[i].col_set) << "\n";
  return kExitOk;
}

int cmd_reproduce(const std::string& check, const std::optional<int>& n,
                  const std::optional<int>& max_dim, int jobs,
                  const std::optional<std::uint64_t>& budget_flag,
                  const std::string& out_path) {
  matrank::ReproduceOptions opts;
  opts.n = n;
  opts.max_dim = max_dim;
  opts.jobs = jobs;
  opts.budget_cap = resolve_budget(budget_flag);
  const matrank::SearchReport r = matrank::reproduce(check, opts);
  const std::string text = matrank::pretty(matrank::to_json(r));
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << text;
    std::cout << "check " << r.check << ": " << matrank::to_string(r.verdict)
              << " (report written to " << out_path << ")\n";
  }
  switch (r.verdict) {
    case matrank::Verdict::kPass: return kExitOk;
    case matrank::Verdict::kFail: return kExitFail;
    case matrank::Verdict::kInconclusive: return kExitBudget;
  }
  return kExitBudget;
}

std::string expected_str(const matrank::ExpectedProfile& e) {
  auto field = [](int v) { return v < 0 ? std::string("-") : std::to_string(v); };
  return "real=" + field(e.real) + " binary=" + field(e.binary) +
         " boolean=" + field(e.boolean) + " isolation=" + field(e.isolation);
}

int cmd_catalog(const std::string& action, const std::string& name,
                const std::string& dir) {
  if (action == "list") {
    for (const matrank::CatalogEntry& e : matrank::catalog())
      std::cout << e.name << "  " << e.matrix.rows() << "x" << e.matrix.cols()
                << "  expected " << expected_str(e.expected) << "\n";
    return kExitOk;
  }
  if (action == "show") {
    const matrank::CatalogEntry* e = matrank::catalog_find(name);
    if (e == nullptr) throw std::invalid_argument("unknown catalog name: " + name);
    matrank::emit_matrix(std::cout, e->matrix);
    std::cout << "expected: " << expected_str(e->expected) << "\n";
    return kExitOk;
  }
  // export
  if (dir.empty()) throw std::invalid_argument("catalog export requires --dir");
  std::filesystem::create_directories(dir);
  int count = 0;
  for (const matrank::CatalogEntry& e : matrank::catalog()) {
    const std::filesystem::path base = std::filesystem::path(dir) / e.name;
    std::ofstream txt(base.string() + ".txt");
    matrank::emit_matrix(txt, e.matrix);
    std::ofstream side(base.string() + ".json");
    side << matrank::pretty(matrank::to_json(e));
    if (!txt || !side) throw std::invalid_argument("cannot write into " + dir);
    ++count;
  }
  std::cout << "wrote " << count << " entries to " << dir << "\n";
  return kExitOk;
}

int cmd_enumerate(int d, int max_dim, int jobs, bool json,
                  const std::optional<std::uint64_t>& budget_flag) {
  const matrank::SearchReport r =
      matrank::search_max_basic(d, max_dim, resolve_budget(budget_flag), jobs);
  if (json) {
    std::cout << matrank::pretty(matrank::to_json(r));
  } else {
    std::cout << "search d=" << d << " max_dim=" << max_dim << ": "
              << matrank::to_string(r.verdict) << "\n";
    for (const matrank::ShapeCount& s : r.shapes)
      std::cout << "  " << s.rows << "x" << s.cols << ": " << s.classes
                << " classes\n";
    for (const std::string& e : r.evidence) std::cout << "  " << e << "\n";
  }
  switch (r.verdict) {
    case matrank::Verdict::kPass: return kExitOk;
    case matrank::Verdict::kFail: return kExitFail;
    case matrank::Verdict::kInconclusive: return kExitBudget;
  }
  return kExitBudget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rank laboratory for 0,1 matrices: real, binary, and "
               "Boolean rank, isolation sets, and isomorph-free enumeration"};
  app.require_subcommand(1);

  // rank
  std::string rank_path;
  std::string rank_quantity;
  bool rank_json = false;
  std::optional<std::uint64_t> rank_budget;
  CLI::App* rank = app.add_subcommand("rank", "Rank profile of a matrix file");
  rank->add_option("file", rank_path, "matrix file ('-' or absent: stdin)");
  rank->add_option("--quantity", rank_quantity,
                   "compute one quantity: real, binary, boolean, isolation")
      ->check(CLI::IsMember({"real", "binary", "boolean", "isolation"}));
  rank->add_flag("--json", rank_json, "emit a JSON report with certificates");
  rank->add_option("--budget", rank_budget, "node budget (0 = unlimited)");

  // graph
  std::string graph_path;
  std::string graph_mode;
  std::optional<std::uint64_t> graph_budget;
  CLI::App* graph =
      app.add_subcommand("graph", "Biclique partition/cover number of a bipartite graph");
  graph->add_option("file", graph_path, "edge-list file")->required();
  graph->add_option("mode", graph_mode, "bp (partition) or bc (cover)")
      ->required()
      ->check(CLI::IsMember({"bp", "bc"}));
  graph->add_option("--budget", graph_budget, "node budget (0 = unlimited)");

  // reproduce
  std::string rep_check;
  std::optional<int> rep_n;
  std::optional<int> rep_max_dim;
  int rep_jobs = 1;
  std::optional<std::uint64_t> rep_budget;
  std::string rep_out;
  CLI::App* rep = app.add_subcommand("reproduce", "Run a named enumeration check");
  std::string check_help = "check id:";
  for (const std::string& id : matrank::reproduce_check_ids()) check_help += " " + id;
  rep->add_option("check", rep_check, check_help)->required();
  rep->add_option("--n", rep_n, "matrix size for theorem1");
  rep->add_option("--max-dim", rep_max_dim, "dimension bound for rank4_bounds");
  rep->add_option("--jobs", rep_jobs, "parallel workers (counts are jobs-independent)")
      ->check(CLI::PositiveNumber);
  rep->add_option("--budget", rep_budget, "node budget (0 = unlimited)");
  rep->add_option("--out", rep_out, "write the JSON report to a file");

  // catalog
  CLI::App* cat = app.add_subcommand("catalog", "Named matrices with pinned profiles");
  cat->require_subcommand(1);
  CLI::App* cat_list = cat->add_subcommand("list", "list all entries");
  std::string cat_name;
  CLI::App* cat_show = cat->add_subcommand("show", "print one entry");
  cat_show->add_option("name", cat_name, "entry name")->required();
  std::string cat_dir;
  CLI::App* cat_export =
      cat->add_subcommand("export", "write matrix files and JSON sidecars");
  cat_export->add_option("--dir", cat_dir, "output directory")->required();

  // enumerate
  int enum_d = 0;
  int enum_max_dim = 8;
  int enum_jobs = 1;
  bool enum_json = false;
  std::optional<std::uint64_t> enum_budget;
  CLI::App* enu = app.add_subcommand(
      "enumerate", "Survey all basic classes of a given real rank by shape");
  enu->add_option("d", enum_d, "target real rank (2..5; d=5 grows slowly)")
      ->required()
      ->check(CLI::Range(2, 5));
  enu->add_option("--max-dim", enum_max_dim, "largest dimension to reach")
      ->check(CLI::Range(2, 64));
  enu->add_option("--jobs", enum_jobs, "parallel workers (counts are jobs-independent)")
      ->check(CLI::PositiveNumber);
  enu->add_flag("--json", enum_json, "emit the JSON report");
  enu->add_option("--budget", enum_budget, "node budget (0 = unlimited)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (rank->parsed()) return cmd_rank(rank_path, rank_quantity, rank_json, rank_budget);
    if (graph->parsed()) return cmd_graph(graph_path, graph_mode, graph_budget);
    if (rep->parsed())
      return cmd_reproduce(rep_check, rep_n, rep_max_dim, rep_jobs, rep_budget, rep_out);
    if (cat->parsed()) {
      if (cat_list->parsed()) return cmd_catalog("list", "", "");
      if (cat_show->parsed()) return cmd_catalog("show", cat_name, "");
      if (cat_export->parsed()) return cmd_catalog("export", "", cat_dir);
    }
    if (enu->parsed())
      return cmd_enumerate(enum_d, enum_max_dim, enum_jobs, enum_json, enum_budget);
  } catch (const matrank::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const matrank::BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
