#include "impsep/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "impsep/errors.hpp"
#include "impsep/graph_io.hpp"
#include "impsep/multiway_cut.hpp"
#include "impsep/oracle.hpp"
#include "impsep/witness.hpp"

namespace impsep {

namespace {

using nlohmann::json;

std::string id_list(const VertexSet& s) {
  if (s.empty()) return "-";
  std::string out;
  for (VertexId v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const VertexSet& require(const std::optional<VertexSet>& s, const char* what) {
  if (!s) throw UsageError(std::string("graph file has no '") + what + "' line");
  return *s;
}

void print_separators(std::ostream& out, const Graph& g, std::size_t r, std::size_t max_excess,
                      std::vector<VertexSet> cuts, bool as_json) {
  std::sort(cuts.begin(), cuts.end(), size_then_lex_less);
  const auto bound = binomial_bound(g.order(), max_excess);
  if (as_json) {
    json doc;
    doc["n"] = g.order();
    doc["r"] = r;
    doc["max_excess"] = max_excess;
    doc["count"] = cuts.size();
    doc["bound"] = bound;
    doc["separators"] = json::array();
    for (const auto& c : cuts)
      doc["separators"].push_back({{"vertices", c.ids()}, {"excess", c.size() - r}});
    out << doc.dump() << '\n';
    return;
  }
  for (const auto& c : cuts) out << id_list(c) << '\n';
  out << "count " << cuts.size() << '\n' << "bound " << bound << '\n';
}

int print_mwc(std::ostream& out, const std::optional<VertexSet>& cut, std::size_t m, VertexId terminal,
              std::size_t k, bool as_json) {
  if (as_json) {
    json doc;
    doc["answer"] = cut ? "YES" : "NO";
    doc["cut"] = cut ? json(cut->ids()) : json(nullptr);
    doc["m"] = m;
    doc["terminal"] = terminal;
    doc["excess"] = k;
    out << doc.dump() << '\n';
  } else {
    out << (cut ? "YES " + id_list(*cut) : std::string("NO")) << '\n';
    out << "m " << m << '\n' << "terminal " << terminal << '\n';
  }
  return cut ? kExitSuccess : kExitNo;
}

int cmd_minsep(const std::string& path, bool as_json, std::ostream& out) {
  const GraphFile file = read_graph_file(path);
  const auto& x = require(file.x, "x");
  const auto& y = require(file.y, "y");
  const auto sep = min_separator(file.graph, x, y);
  if (!sep) throw UsageError("no separator exists");
  if (as_json) {
    out << json{{"size", sep->size()}, {"separator", sep->cut().ids()}}.dump() << '\n';
  } else {
    out << "size " << sep->size() << '\n' << "separator " << id_list(sep->cut()) << '\n';
  }
  return kExitSuccess;
}

int cmd_important(const std::string& path, std::size_t max_excess, unsigned threads, bool as_json,
                  std::ostream& out) {
  const GraphFile file = read_graph_file(path);
  const auto& x = require(file.x, "x");
  const auto& y = require(file.y, "y");
  const auto found = enumerate_important(file.graph, x, y, max_excess, EnumerationOptions{threads});
  if (!found) throw UsageError("no separator exists");
  std::vector<VertexSet> cuts;
  for (const auto& s : *found) cuts.push_back(s.cut());
  print_separators(out, file.graph, found->front().size(), max_excess, std::move(cuts), as_json);
  return kExitSuccess;
}

int cmd_mwc(const std::string& path, std::size_t k, bool as_json, std::ostream& out) {
  const GraphFile file = read_graph_file(path);
  const MwcInstance inst(file.graph, require(file.terminals, "t"));
  const LowerBound bound = lower_bound_m(inst);
  const auto cert = solve_above_guarantee(inst, k);
  std::optional<VertexSet> cut;
  if (cert) cut = cert->cut;
  return print_mwc(out, cut, bound.m, bound.terminal, k, as_json);
}

int cmd_oracle_important(const std::string& path, std::optional<std::size_t> max_excess,
                         std::optional<std::size_t> max_size, bool as_json, std::ostream& out) {
  const GraphFile file = read_graph_file(path);
  const auto& x = require(file.x, "x");
  const auto& y = require(file.y, "y");
  const auto r = oracle::min_separator_size(file.graph, x, y);
  if (!r) throw UsageError("no separator exists");
  if (max_excess.has_value() == max_size.has_value())
    throw UsageError("give exactly one of --max-excess and --max-size");
  const std::size_t limit = max_size ? *max_size : *r + *max_excess;
  const std::size_t excess = limit >= *r ? limit - *r : 0;
  auto cuts = oracle::important(file.graph, x, y, limit);
  print_separators(out, file.graph, *r, excess, std::move(cuts), as_json);
  return kExitSuccess;
}

int cmd_oracle_mwc(const std::string& path, std::size_t k, bool as_json, std::ostream& out) {
  const GraphFile file = read_graph_file(path);
  const MwcInstance inst(file.graph, require(file.terminals, "t"));
  const auto m = oracle::lower_bound_m(inst);
  const auto best = oracle::min_multiway_cut(inst);
  if (!m || !best) throw Error(ErrorKind::AdjacentTerminals, "two terminals cannot be separated by deleting non-terminals");
  VertexId terminal = -1;
  for (VertexId t : inst.terminals()) {
    const auto size = oracle::min_separator_size(inst.graph(), VertexSet{t}, inst.terminals() - VertexSet{t});
    if (size && *size == *m) {
      terminal = t;
      break;
    }
  }
  std::optional<VertexSet> cut;
  if (best->size <= *m + k) cut = best->certificate.cut;
  return print_mwc(out, cut, *m, terminal, k, as_json);
}

int cmd_corpus(const oracle::CorpusConfig& config, const std::string& dir, std::ostream& out) {
  const auto instances = oracle::generate_corpus(config);
  std::filesystem::create_directories(dir);
  std::size_t index = 0;
  for (const auto& inst : instances) {
    GraphFile file{inst.graph, inst.x, inst.y, std::nullopt};
    if (!inst.terminals.empty()) file.terminals = inst.terminals;
    std::ostringstream name;
    name << "instance_" << std::setw(6) << std::setfill('0') << index++ << ".sep";
    const auto target = std::filesystem::path(dir) / name.str();
    std::ofstream f(target, std::ios::binary);
    if (!f) throw UsageError("cannot write " + target.string());
    f << format_graph_file(file);
  }
  out << "wrote " << instances.size() << " instances to " << dir << '\n';
  return kExitSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Important vertex separators and multiway cut above the isolating-cut bound"};
  app.require_subcommand(1);

  std::string path;
  bool as_json = false;
  std::size_t max_excess = 0;
  std::size_t excess = 0;
  unsigned threads = 1;

  auto* minsep = app.add_subcommand("minsep", "Minimum X-Y separator size and one minimum separator");
  minsep->add_option("FILE", path, "Graph file")->required();
  minsep->add_flag("--json", as_json, "JSON output");

  auto* important = app.add_subcommand("important", "All important X-Y separators of bounded excess");
  important->add_option("FILE", path, "Graph file")->required();
  important->add_option("--max-excess", max_excess, "Largest excess over the minimum separator size")->required();
  important->add_option("--threads", threads, "Worker threads for subset evaluation");
  important->add_flag("--json", as_json, "JSON output");

  auto* mwc = app.add_subcommand("mwc", "Is there a multiway cut of size at most m + K?");
  mwc->add_option("FILE", path, "Graph file")->required();
  mwc->add_option("--excess", excess, "Excess K over the isolating-cut bound m")->required();
  mwc->add_flag("--json", as_json, "JSON output");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference outputs");
  oracle_cmd->require_subcommand(1);
  std::optional<std::size_t> oracle_excess;
  std::optional<std::size_t> oracle_size;
  auto* oracle_important = oracle_cmd->add_subcommand("important", "Definitional important separators");
  oracle_important->add_option("FILE", path, "Graph file")->required();
  oracle_important->add_option("--max-excess", oracle_excess, "Largest excess over the minimum separator size");
  oracle_important->add_option("--max-size", oracle_size, "Largest separator size");
  oracle_important->add_flag("--json", as_json, "JSON output");
  auto* oracle_mwc = oracle_cmd->add_subcommand("mwc", "Exhaustive minimum multiway cut against m + K");
  oracle_mwc->add_option("FILE", path, "Graph file")->required();
  oracle_mwc->add_option("--excess", excess, "Excess K over the isolating-cut bound m")->required();
  oracle_mwc->add_flag("--json", as_json, "JSON output");

  oracle::CorpusConfig corpus_config;
  std::string mode = "random";
  std::string out_dir = "corpus";
  auto* corpus = app.add_subcommand("corpus", "Write instance files for test harnesses");
  corpus->add_option("--seed", corpus_config.seed, "Random seed")->required();
  corpus->add_option("--n", corpus_config.n, "Vertices per graph")->required();
  corpus->add_option("--count", corpus_config.count, "Number of instances (exhaustive: 0 = all)")->required();
  corpus->add_option("--mode", mode, "exhaustive | random")
      ->required()
      ->check(CLI::IsMember({"exhaustive", "random"}));
  corpus->add_option("--edge-prob", corpus_config.edge_prob, "Edge probability (random mode)");
  corpus->add_option("--terminals", corpus_config.terminals, "Terminals per instance");
  corpus->add_option("--out", out_dir, "Output directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (minsep->parsed()) return cmd_minsep(path, as_json, out);
    if (important->parsed()) return cmd_important(path, max_excess, threads, as_json, out);
    if (mwc->parsed()) return cmd_mwc(path, excess, as_json, out);
    if (oracle_important->parsed())
      return cmd_oracle_important(path, oracle_excess, oracle_size, as_json, out);
    if (oracle_mwc->parsed()) return cmd_oracle_mwc(path, excess, as_json, out);
    if (corpus->parsed()) {
      corpus_config.mode = mode == "exhaustive" ? oracle::CorpusMode::Exhaustive : oracle::CorpusMode::Random;
      return cmd_corpus(corpus_config, out_dir, out);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::AdjacentTerminals) err << "infeasible: " << e.what() << '\n';
    else err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace impsep
