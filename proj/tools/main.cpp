// pnmax: exact private-neighbor and domination invariants of small graphs.
//
// verbs: compute, table, verify, conjecture, search
// exit codes: 0 success/PASS, 1 verification failure or counterexample
// found, 2 usage error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pnmax/conjectures.hpp"
#include "pnmax/families.hpp"
#include "pnmax/formats.hpp"
#include "pnmax/grid_dp.hpp"
#include "pnmax/reference_tables.hpp"
#include "pnmax/routing.hpp"
#include "pnmax/search.hpp"
#include "pnmax/verify.hpp"
#include "pnmax/version.hpp"
#include "record.hpp"

namespace {

using namespace pnmax;
using cli::RunRecord;

struct GraphInput {
  Graph graph{0};
  std::string descriptor;
};

GraphInput load_graph(const std::string& family, const std::string& file,
                      const std::string& format) {
  if (!family.empty()) {
    const FamilySpec spec = FamilySpec::parse(family);
    return {generate(spec), spec.to_string()};
  }
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open '" + file + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  Graph g{0};
  if (format == "graph6") {
    std::string line = buf.str();
    const auto nl = line.find('\n');
    if (nl != std::string::npos) line.resize(nl);
    g = parse_graph6(line);
  } else if (format == "edgelist") {
    g = parse_edge_list(buf.str());
  } else {
    throw std::invalid_argument("unknown format '" + format + "'");
  }
  return {g, "file:" + cli::graph_hash(g)};
}

std::vector<ParameterKind> parse_kind_list(const std::string& csv) {
  std::vector<ParameterKind> kinds;
  std::string cur;
  std::stringstream ss(csv);
  while (std::getline(ss, cur, ',')) {
    if (!cur.empty()) kinds.push_back(parse_kind(cur));
  }
  if (kinds.empty()) throw std::invalid_argument("--kind list is empty");
  return kinds;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const int v = std::stoi(text);
    return {v, v};
  }
  return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

int cmd_compute(const std::string& family, const std::string& file,
                const std::string& format, const std::string& kind_csv,
                const std::string& output, int threads, int max_n,
                const std::string& cache_dir) {
  const GraphInput input = load_graph(family, file, format);
  const auto kinds = parse_kind_list(kind_csv);
  SolveOptions opts;
  opts.parallel_shards = threads;
  opts.max_width = max_n;

  const std::string ghash = cli::graph_hash(input.graph);
  std::vector<RunRecord> records;
  for (ParameterKind kind : kinds) {
    const std::string key = cli::cache_key(ghash, kind_name(kind), kVersion);
    if (!cache_dir.empty()) {
      if (auto cached = cli::cache_load(cache_dir, key, kVersion)) {
        records.push_back(*cached);
        continue;
      }
    }
    const auto t0 = std::chrono::steady_clock::now();
    const SolveResult res = solve_auto(input.graph, kind, opts);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    RunRecord rec = cli::make_record(input.descriptor, kind_name(kind), res, ms);
    if (!cache_dir.empty()) cli::cache_store(cache_dir, key, rec);
    records.push_back(std::move(rec));
  }

  if (output == "csv") {
    std::cout << cli::kCsvHeader << "\n";
    for (const auto& r : records) std::cout << cli::record_to_csv(r) << "\n";
  } else if (output == "json") {
    std::cout << cli::records_to_json(records) << "\n";
  } else {
    for (const auto& r : records) {
      std::cout << r.input << "  " << r.kind << " = ";
      if (r.feasible) {
        std::cout << r.value;
        if (r.only_trivial) std::cout << " (only-trivial)";
      } else {
        std::cout << "does not exist";
      }
      std::cout << "  [" << r.method << "]\n";
    }
  }
  return 0;
}

int cmd_table(const std::string& kind_name_str, const std::string& m_range,
              const std::string& n_range, bool paper_check) {
  const ParameterKind kind = parse_kind(kind_name_str);
  if (!is_pn_kind(kind)) {
    throw std::invalid_argument("table expects a PN-maximization kind");
  }
  const auto [m_lo, m_hi] = parse_range(m_range);
  const auto [n_lo, n_hi] = parse_range(n_range);
  if (m_lo < 1 || m_hi > kGridMaxRows || m_lo > m_hi || n_lo < 1 || n_lo > n_hi) {
    throw std::invalid_argument("table ranges out of bounds (rows 1..6)");
  }

  std::cout << kind_name(kind) << "(P_n box P_m)\n";
  std::cout << " m\\n |";
  for (int n = n_lo; n <= n_hi; ++n) std::cout << std::setw(4) << n;
  std::cout << "\n";
  for (int m = m_lo; m <= m_hi; ++m) {
    std::cout << std::setw(4) << m << " |";
    for (int n = n_lo; n <= n_hi; ++n) {
      if (n < m) {
        std::cout << "    ";  // blank below the diagonal, by symmetry
        continue;
      }
      std::cout << std::setw(4) << solve_pn_grid(n, m, kind).value;
    }
    std::cout << "\n";
  }

  if (!paper_check) return 0;
  int compared = 0, diffs = 0;
  for (const auto& cell : reference_grid_cells()) {
    if (cell.kind != kind) continue;
    if (cell.rows < m_lo || cell.rows > m_hi || cell.cols < n_lo || cell.cols > n_hi) {
      continue;
    }
    ++compared;
    const int computed = solve_pn_grid(cell.cols, cell.rows, kind).value;
    if (computed != cell.value) {
      ++diffs;
      std::cout << "DIFF m=" << cell.rows << " n=" << cell.cols
                << " reference=" << cell.value << " computed=" << computed << "\n";
    }
  }
  std::cout << "reference check: " << compared << " cells, " << diffs << " diffs\n";
  return diffs == 0 ? 0 : 1;
}

int cmd_verify(const std::string& suite, int max_n, int graphs, int trees, int triples,
               std::uint64_t seed, int threads) {
  VerifyOptions opts;
  opts.max_n = max_n;
  opts.graphs = graphs;
  opts.trees = trees;
  opts.triples = triples;
  opts.seed = seed;
  opts.threads = threads;

  std::vector<SuiteReport> reports;
  if (suite == "formulas") {
    reports.push_back(verify_formulas(opts));
  } else if (suite == "inequalities") {
    reports.push_back(verify_inequalities(opts));
  } else if (suite == "tree-bound") {
    reports.push_back(verify_tree_bound(opts));
  } else if (suite == "efficiency") {
    reports.push_back(verify_efficiency(opts));
  } else if (suite == "reductions") {
    reports.push_back(verify_reductions(opts));
  } else if (suite == "all") {
    reports = verify_all(opts);
  } else {
    throw std::invalid_argument("unknown suite '" + suite +
                                "' (formulas, inequalities, tree-bound, efficiency, "
                                "reductions, all)");
  }
  bool pass = true;
  for (const auto& r : reports) {
    std::cout << r.text;
    pass = pass && r.pass;
  }
  std::cout << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

int cmd_conjecture(const std::string& which, const std::string& range) {
  const ConjectureId id = parse_conjecture(which);
  std::pair<int, int> r;
  if (!range.empty()) {
    r = parse_range(range);
  } else if (id == ConjectureId::C1) {
    r = {2, 40};
  } else if (id == ConjectureId::C2a) {
    r = {1, 15};
  } else {
    r = {2, 20};
  }
  const ConjectureReport rep = run_conjecture(id, r.first, r.second);
  std::cout << rep.text;
  if (!rep.all_agree) {
    // a concrete counterexample record for each disagreeing instance
    for (const auto& inst : rep.instances) {
      if (inst.agree) continue;
      int cols = 0, rows = 0;
      ParameterKind kind = ParameterKind::Eispn;
      if (rep.id == ConjectureId::C1) {
        cols = static_cast<int>(inst.param);
        rows = 2;
        kind = ParameterKind::Eipn;
      } else if (rep.id == ConjectureId::C2a) {
        cols = static_cast<int>(2 * inst.param);
        rows = 3;
      } else {
        cols = static_cast<int>(inst.param);
        rows = 4;
      }
      const Graph g = grid_graph(cols, rows);
      const SolveResult res = solve_pn_grid(cols, rows, kind);
      std::cout << "counterexample graph6=" << emit_graph6(g) << "\n";
      std::cout << cli::record_to_json(
                       cli::make_record("grid:" + std::to_string(cols) + "," +
                                            std::to_string(rows),
                                        kind_name(kind), res, 0))
                << "\n";
    }
  }
  return rep.all_agree ? 0 : 1;
}

int cmd_search(const std::string& target_text, const std::string& generator,
               int max_n, long budget, std::uint64_t seed, int limit, int threads,
               const std::string& cache_dir) {
  SearchOptions opts;
  opts.generator = parse_generator(generator);
  opts.max_n = max_n;
  opts.budget = budget;
  opts.seed = seed;
  opts.limit_hits = limit;
  opts.threads = threads;
  const SearchTarget target = SearchTarget::parse(target_text);
  const SearchReport rep = run_search(target, opts);
  std::cout << rep.text;
  if (!cache_dir.empty() && !rep.hits.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(cache_dir);
    const fs::path tmp = fs::path(cache_dir) / "hits.tmp";
    {
      std::ofstream out(tmp);
      for (const auto& h : rep.hits) {
        const Graph g = parse_graph6(h.graph6);
        RunRecord rec;
        rec.input = "graph6:" + h.graph6;
        rec.kind = target.source;
        rec.value = 1;
        rec.method = "search";
        rec.version = kVersion;
        out << h.graph6 << "\t" << cli::record_to_json(rec) << "\n";
      }
    }
    fs::rename(tmp, fs::path(cache_dir) / "hits.jsonl");
  }
  return rep.hits.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact private-neighbor maximization and domination invariants"};
  app.set_version_flag("--version", std::string(pnmax::kToolName) + " " +
                                        pnmax::kVersion);
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "compute invariants of one graph");
  std::string family, file, format = "edgelist", kinds, output = "table", cache_dir;
  int threads = 1, max_n = 26;
  compute->add_option("--family", family, "family spec, e.g. grid:8,3");
  compute->add_option("--file", file, "graph file");
  compute->add_option("--format", format, "edgelist|graph6")
      ->check(CLI::IsMember({"edgelist", "graph6"}));
  compute->add_option("--kind", kinds, "comma separated parameter kinds")->required();
  compute->add_option("--output", output, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  compute->add_option("--threads", threads, "solver shards");
  compute->add_option("--max-n", max_n, "enumeration width limit");
  compute->add_option("--cache", cache_dir, "record cache directory");

  // table
  auto* table = app.add_subcommand("table", "grid tables of a PN parameter");
  std::string table_kind, m_range = "2:4", n_range = "2:9";
  bool paper_check = false;
  table->add_option("--kind", table_kind, "PN parameter kind")->required();
  table->add_option("--m", m_range, "row range A:B (rows 1..6)");
  table->add_option("--n", n_range, "column range A:B");
  table->add_flag("--paper-check", paper_check,
                  "diff against the published reference values");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  int v_max_n = 11, v_graphs = 200, v_trees = 500, v_triples = 200;
  std::uint64_t v_seed = 1;
  int v_threads = 1;
  verify->add_option("suite", suite,
                     "formulas|inequalities|tree-bound|efficiency|reductions|all")
      ->required();
  verify->add_option("--max-n", v_max_n, "instance size cap");
  verify->add_option("--graphs", v_graphs, "random graph count");
  verify->add_option("--trees", v_trees, "random tree count");
  verify->add_option("--triples", v_triples, "random reduction triples");
  verify->add_option("--seed", v_seed, "random seed");
  verify->add_option("--threads", v_threads, "solver shards");

  // conjecture
  auto* conjecture = app.add_subcommand("conjecture", "bounded conjecture sweeps");
  std::string which, range;
  conjecture->add_option("which", which, "C1|C2a|C2b")->required();
  conjecture->add_option("--range", range, "parameter range A:B");

  // search
  auto* search = app.add_subcommand("search", "counterexample search");
  std::string target, generator = "random-graph";
  int s_max_n = 8, s_limit = 10, s_threads = 1;
  long budget = 1000;
  std::uint64_t s_seed = 1;
  std::string s_cache;
  search->add_option("--target", target, "e.g. \"2*ALPHA_STAR < IPN\"")->required();
  search->add_option("--generator", generator, "random-graph|random-tree|all-graphs");
  search->add_option("--max-n", s_max_n, "largest candidate order");
  search->add_option("--budget", budget, "candidates to examine (0 = unlimited)");
  search->add_option("--seed", s_seed, "random seed");
  search->add_option("--limit", s_limit, "stop after this many hits (0 = never)");
  search->add_option("--threads", s_threads, "solver shards");
  search->add_option("--cache", s_cache, "directory for hit records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) {
      if (family.empty() == file.empty()) {
        std::cerr << "compute needs exactly one of --family or --file\n";
        return 2;
      }
      return cmd_compute(family, file, format, kinds, output, threads, max_n,
                         cache_dir);
    }
    if (table->parsed()) {
      return cmd_table(table_kind, m_range, n_range, paper_check);
    }
    if (verify->parsed()) {
      return cmd_verify(suite, v_max_n, v_graphs, v_trees, v_triples, v_seed,
                        v_threads);
    }
    if (conjecture->parsed()) {
      return cmd_conjecture(which, range);
    }
    if (search->parsed()) {
      return cmd_search(target, generator, s_max_n, budget, s_seed, s_limit,
                        s_threads, s_cache);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
