// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
//
//   impsep_acceptance --cli PATH --data DIR [--report FILE] [--quick]
//
// --quick shrinks the exhaustive corpus to n <= 6 for local iteration.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "impsep/graph_ops.hpp"
#include "impsep/multiway_cut.hpp"
#include "impsep/oracle.hpp"
#include "impsep/separator.hpp"
#include "impsep/witness.hpp"

using namespace impsep;

namespace {

// Largest excess exercised by the enumeration and witness criteria.
constexpr std::size_t kMaxExcess = 3;
// Largest attribute support in the witness-law scans.
constexpr std::size_t kMaxWitnessSet = 3;
constexpr std::size_t kExhaustiveMaxN = 8;
constexpr std::size_t kPairSetsMaxN = 6;
constexpr std::size_t kRandomGraphs = 500;
constexpr std::size_t kRandomMaxN = 14;
constexpr std::size_t kMwcInstances = 300;
constexpr std::size_t kMwcMaxN = 10;
constexpr double kBenchmarkLimitSeconds = 60.0;
constexpr std::uint64_t kSeed = 20240611;

struct Tally {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = describe();
  }
};

struct Instance {
  Graph graph;
  VertexSet x;
  VertexSet y;
};

std::string show(const VertexSet& s) {
  std::ostringstream out;
  out << s;
  return out.str();
}

std::string show(const Instance& inst) {
  std::ostringstream out;
  out << "graph";
  for (const auto& [u, v] : inst.graph.edges()) out << ' ' << u << '-' << v;
  out << " x=" << inst.x << " y=" << inst.y;
  return out.str();
}

bool touching(const Graph& g, const VertexSet& x, const VertexSet& y) {
  for (VertexId v : x)
    for (VertexId w : y)
      if (g.adjacent(v, w)) return true;
  return false;
}

std::vector<VertexSet> subsets_up_to(const VertexSet& base, std::size_t max_size) {
  std::vector<VertexSet> out{VertexSet{}};
  for (VertexId v : base) {
    const std::size_t count = out.size();
    for (std::size_t i = 0; i < count; ++i)
      if (out[i].size() < max_size) out.push_back(out[i] | VertexSet{v});
  }
  return out;
}

std::vector<VertexSet> cuts_of(const std::vector<Separator>& seps) {
  std::vector<VertexSet> out;
  for (const auto& s : seps) out.push_back(s.cut());
  return out;
}

std::vector<VertexSet> sorted(std::vector<VertexSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Order definitional_order(const Instance& inst, const VertexSet& k1, const VertexSet& k2) {
  const VertexSet nr1 = oracle::not_reachable(inst.graph, inst.y, k1);
  const VertexSet nr2 = oracle::not_reachable(inst.graph, inst.y, k2);
  if (nr1 == nr2) return Order::Equal;
  if (nr2.is_subset_of(nr1)) return Order::Greater;
  if (nr1.is_subset_of(nr2)) return Order::Less;
  return Order::Incomparable;
}

bool proper_subset(const VertexSet& a, const VertexSet& b) { return a != b && a.is_subset_of(b); }

// Every connected graph on 3..max_n vertices up to isomorphism, with every
// ordered pair of non-adjacent singletons, and for n <= kPairSetsMaxN every
// pair of disjoint, mutually non-adjacent X, Y with |X|, |Y| <= 2.
std::vector<Instance> exhaustive_corpus(std::size_t max_n) {
  std::vector<Instance> out;
  for (std::size_t n = 3; n <= max_n; ++n) {
    for (const Graph& g : oracle::connected_graphs(n)) {
      std::vector<VertexSet> sides;
      for (VertexId v : g.vertices()) sides.push_back({v});
      if (n <= kPairSetsMaxN)
        for (VertexId v : g.vertices())
          for (VertexId w : g.vertices())
            if (v < w) sides.push_back({v, w});
      for (const auto& x : sides)
        for (const auto& y : sides) {
          if (x.intersects(y) || touching(g, x, y)) continue;
          if (x.size() + y.size() > 2 && n > kPairSetsMaxN) continue;
          out.push_back({g, x, y});
        }
    }
  }
  return out;
}

std::vector<Instance> random_corpus(std::mt19937_64& rng) {
  std::vector<Instance> out;
  while (out.size() < kRandomGraphs) {
    const std::size_t n = 6 + oracle::uniform_below(rng, kRandomMaxN - 5);
    const double p = out.size() % 2 == 0 ? 0.2 : 0.4;
    Graph g = oracle::random_graph(n, p, rng);
    std::vector<VertexId> order = g.vertices();
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[oracle::uniform_below(rng, i)]);
    const std::size_t xs = 1 + oracle::uniform_below(rng, 2);
    const std::size_t ys = 1 + oracle::uniform_below(rng, 2);
    VertexSet x(std::vector<VertexId>(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(xs)));
    VertexSet y(std::vector<VertexId>(order.begin() + static_cast<std::ptrdiff_t>(xs),
                                      order.begin() + static_cast<std::ptrdiff_t>(xs + ys)));
    if (touching(g, x, y)) continue;
    out.push_back({std::move(g), std::move(x), std::move(y)});
  }
  return out;
}

// --- criteria -------------------------------------------------------------

void check_uniqueness(const Instance& inst, Tally& t) {
  const auto r = oracle::min_separator_size(inst.graph, inst.x, inst.y);
  const auto fast = smallest_important_separator(inst.graph, inst.x, inst.y);
  t.expect(r.has_value() && fast.has_value(), [&] { return "no separator on " + show(inst); });
  if (!r || !fast) return;
  std::vector<VertexSet> smallest;
  for (const auto& k : oracle::important(inst.graph, inst.x, inst.y, *r))
    if (k.size() == *r) smallest.push_back(k);
  t.expect(smallest.size() == 1 && smallest.front() == fast->cut(), [&] {
    return show(inst) + ": oracle has " + std::to_string(smallest.size()) + " smallest important, solver " +
           show(fast->cut());
  });
}

void check_enumeration(const Instance& inst, Tally& exact, Tally& bound) {
  const std::size_t r = *oracle::min_separator_size(inst.graph, inst.x, inst.y);
  const auto truth = oracle::important(inst.graph, inst.x, inst.y, r + kMaxExcess);
  for (std::size_t k = 0; k <= kMaxExcess; ++k) {
    const auto found = enumerate_important(inst.graph, inst.x, inst.y, k);
    std::vector<VertexSet> want;
    for (const auto& s : truth)
      if (s.size() <= r + k) want.push_back(s);
    const auto got = found ? sorted(cuts_of(*found)) : std::vector<VertexSet>{};
    exact.expect(found.has_value() && got == sorted(want), [&] {
      return show(inst) + " k=" + std::to_string(k) + ": solver " + std::to_string(got.size()) + " separators, oracle " +
             std::to_string(want.size());
    });
    const std::uint64_t limit = binomial_bound(inst.graph.order(), k);
    bound.expect(got.size() <= limit, [&] {
      return show(inst) + " k=" + std::to_string(k) + ": " + std::to_string(got.size()) + " > " + std::to_string(limit);
    });
  }
}

// Witness laws and compound completeness on the normalization of inst.
void check_witnesses(const Instance& inst, Tally& laws, Tally& complete) {
  const auto norm = normalize(inst.graph, inst.x, inst.y);
  if (!norm) return;
  const Instance g{norm->graph, inst.x, inst.y};
  laws.expect(is_normalized(g.graph, g.x, g.y) && oracle::is_normalized(g.graph, g.x, g.y),
              [&] { return "normalization failed on " + show(inst); });
  const VertexSet nx = neighborhood(g.graph, g.x);
  const std::size_t r = nx.size();
  const auto important = oracle::important(g.graph, g.x, g.y, g.graph.order());

  for (const VertexSet& s : subsets_up_to(nx, kMaxWitnessSet)) {
    const auto k = important_witness(g.graph, g.x, g.y, s);
    const auto expected = oracle::important_witnesses(g.graph, g.x, g.y, s);
    const ExcessValue ce = cover_excess(g.graph, g.x, g.y, s);
    // Uniqueness: exactly one important separator among the smallest avoiding s.
    if (!k) {
      laws.expect(expected.empty() && ce.is_infinite(),
                  [&] { return show(g) + " s=" + show(s) + ": solver infinite, oracle finite"; });
      continue;
    }
    laws.expect(expected.size() == 1 && expected.front() == k->cut() && !ce.is_infinite() &&
                    ce.value() == k->size() - r,
                [&] { return show(g) + " s=" + show(s) + ": witness " + show(k->cut()); });
    // Domination: every important separator avoiding s lies above K(s).
    const VertexSet nr_k = oracle::not_reachable(g.graph, g.y, k->cut());
    for (const auto& other : important)
      if (!other.intersects(s))
        laws.expect(nr_k.is_subset_of(oracle::not_reachable(g.graph, g.y, other)),
                    [&] { return show(g) + " s=" + show(s) + ": " + show(other) + " not above " + show(k->cut()); });
    // Compression: a subset of size at most CE(s) has the same witness.
    if (ce.is_infinite()) continue;
    bool compressed = false;
    for (const VertexSet& sub : subsets_up_to(s, ce.value())) {
      const auto w = important_witness(g.graph, g.x, g.y, sub);
      if (w && w->cut() == k->cut()) {
        compressed = true;
        break;
      }
    }
    laws.expect(compressed, [&] { return show(g) + " s=" + show(s) + ": no compressed subset"; });
  }

  // Completeness: every important K != N(X) of excess <= kMaxExcess has a
  // generating subset of size <= excess(K).
  std::map<VertexSet, std::size_t> generated;  // separator -> smallest generating subset size
  VertexSet candidates;
  for (VertexId v : g.graph.vertices())
    if (g.graph.is_deletable(v) && !g.x.contains(v) && !g.y.contains(v)) candidates.insert(v);
  for (const VertexSet& s : subsets_up_to(candidates, kMaxExcess)) {
    if (s.empty()) continue;
    const auto attr = attribute_of(g.graph, g.x, g.y, s);
    if (!attr) continue;
    const auto w = compound_witness(g.graph, g.x, g.y, *attr);
    if (!w) continue;
    auto [it, fresh] = generated.emplace(w->cut(), s.size());
    if (!fresh) it->second = std::min(it->second, s.size());
  }
  for (const auto& k : important) {
    if (k == nx || k.size() > r + kMaxExcess) continue;
    const std::size_t excess = k.size() - r;
    const auto it = generated.find(k);
    complete.expect(it != generated.end() && it->second <= excess,
                    [&] { return show(g) + ": " + show(k) + " has no generating subset"; });
  }
}

void check_order(const Instance& inst, Tally& t) {
  std::vector<VertexSet> minimal;
  for (const auto& k : oracle::separators(inst.graph, inst.x, inst.y, inst.graph.order()))
    if (oracle::is_minimal(inst.graph, inst.x, inst.y, k)) minimal.push_back(k);
  std::vector<Separator> certified;
  for (const auto& k : minimal) certified.push_back(Separator::certify(inst.graph, inst.x, inst.y, k));
  for (std::size_t i = 0; i < minimal.size(); ++i)
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      const VertexSet& k1 = minimal[i];
      const VertexSet& k2 = minimal[j];
      const Order fast = compare(inst.graph, inst.x, inst.y, certified[i], certified[j]);
      t.expect(fast == definitional_order(inst, k1, k2),
               [&] { return show(inst) + ": compare " + show(k1) + " vs " + show(k2) + " gave " + to_string(fast); });
      if (i != j) {
        const bool by_nr = proper_subset(oracle::not_reachable(inst.graph, inst.y, k1),
                                         oracle::not_reachable(inst.graph, inst.y, k2));
        const bool by_r = proper_subset(oracle::reachable_from(inst.graph, inst.x, k1),
                                        oracle::reachable_from(inst.graph, inst.x, k2));
        t.expect(by_nr == by_r, [&] { return show(inst) + ": equivalence fails for " + show(k1) + ", " + show(k2); });
      }
      const Separator bot = bottom(inst.graph, inst.x, inst.y, certified[i], certified[j]);
      const Order o1 = definitional_order(inst, bot.cut(), k1);
      const Order o2 = definitional_order(inst, bot.cut(), k2);
      t.expect((o1 == Order::Greater || o1 == Order::Equal) && (o2 == Order::Greater || o2 == Order::Equal),
               [&] { return show(inst) + ": bottom of " + show(k1) + ", " + show(k2) + " does not dominate"; });
    }
}

void check_mwc(std::mt19937_64& rng, Tally& decision, Tally& lower) {
  std::size_t made = 0;
  while (made < kMwcInstances) {
    const std::size_t n = 6 + oracle::uniform_below(rng, kMwcMaxN - 5);
    const std::size_t want = 3 + made % 2;
    Graph g = oracle::random_graph(n, 0.3, rng);
    std::vector<VertexId> order = g.vertices();
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[oracle::uniform_below(rng, i)]);
    std::vector<VertexId> picked;
    for (VertexId v : order) {
      if (picked.size() == want) break;
      if (std::none_of(picked.begin(), picked.end(), [&](VertexId t) { return g.adjacent(v, t); }))
        picked.push_back(v);
    }
    if (picked.size() < want) continue;
    ++made;
    const MwcInstance inst(std::move(g), VertexSet(picked));
    const Instance shown{inst.graph(), inst.terminals(), {}};
    const auto opt = oracle::min_multiway_cut(inst);
    const LowerBound lb = lower_bound_m(inst);
    lower.expect(opt && lb.m <= opt->size, [&] { return show(shown) + ": m exceeds the optimum"; });
    if (!opt) continue;
    for (std::size_t k = 0; k <= kMaxExcess; ++k) {
      const auto cut = solve_above_guarantee(inst, k);
      const bool yes = opt->size <= lb.m + k;
      decision.expect(cut.has_value() == yes, [&] {
        return show(shown) + " k=" + std::to_string(k) + ": answered " + (cut ? "YES" : "NO") + ", optimum " +
               std::to_string(opt->size) + ", m " + std::to_string(lb.m);
      });
      if (cut)
        decision.expect(is_multiway_cut(inst.graph(), inst.terminals(), cut->cut) && cut->size() <= lb.m + k,
                        [&] { return show(shown) + ": bad certificate " + show(cut->cut); });
    }
  }
}

std::optional<std::string> capture(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return std::nullopt;
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  out += "\n[status " + std::to_string(status) + "]";
  return out;
}

void check_determinism(const std::string& cli, const std::string& data, std::mt19937_64& rng, Tally& t) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("impsep_acceptance_" + std::to_string(kSeed));
  fs::remove_all(dir);
  const std::string corpus_cmd = "'" + cli + "' corpus --seed 17 --n 12 --count 6 --mode random --edge-prob 0.3 --out '" +
                                 dir.string() + "' 2>&1";
  t.expect(capture(corpus_cmd).has_value() && fs::exists(dir / "instance_000005.sep"),
           [&] { return "corpus generation failed"; });

  std::vector<std::string> files;
  for (const char* name : {"theta.sep", "two_paths.sep", "path.sep", "star.sep", "edge.sep"})
    files.push_back((fs::path(data) / name).string());
  if (fs::exists(dir))
    for (const auto& entry : fs::directory_iterator(dir)) files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());

  const std::vector<std::string> flag_sets{"minsep", "important --max-excess 2", "important --max-excess 2 --json",
                                           "important --max-excess 3 --threads 4", "mwc --excess 1",
                                           "mwc --excess 0 --json"};
  for (const auto& file : files)
    for (const auto& flags : flag_sets) {
      const auto space = flags.find(' ');
      const std::string sub = flags.substr(0, space);
      const std::string rest = space == std::string::npos ? "" : flags.substr(space);
      const std::string command = "'" + cli + "' " + sub + " '" + file + "'" + rest + " 2>&1";
      const auto first = capture(command);
      for (int rep = 0; rep < 2; ++rep)
        t.expect(first && capture(command) == first, [&] { return "output differs between runs: " + command; });
    }
  fs::remove_all(dir);

  // Forced parallel evaluation equals sequential output.
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 10 + oracle::uniform_below(rng, 8);
    Graph g = oracle::random_graph(n, 0.25, rng);
    if (g.adjacent(1, 2)) continue;
    const VertexSet x{1};
    const VertexSet y{2};
    const auto one = enumerate_important(g, x, y, kMaxExcess);
    const auto many = enumerate_important(g, x, y, kMaxExcess, EnumerationOptions{4});
    t.expect(one.has_value() == many.has_value() &&
                 (!one || sorted(cuts_of(*one)) == sorted(cuts_of(*many))),
             [&] { return "parallel enumeration differs on " + show(Instance{g, x, y}); });
  }
}

double benchmark(std::size_t& count) {
  std::mt19937_64 rng(kSeed);
  // n = 60, average degree about 6; X and Y a non-adjacent pair.
  Graph g = oracle::random_graph(60, 0.1, rng);
  VertexId target = 60;
  while (target > 2 && g.adjacent(1, target)) --target;
  const auto start = std::chrono::steady_clock::now();
  const auto found = enumerate_important(g, {1}, {target}, 2);
  count = found ? found->size() : 0;
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Report {
  bool all_passed = true;
  std::ofstream file;  // optional copy of everything printed

  void say(const std::string& text) {
    std::cout << text << '\n' << std::flush;
    if (file) file << text << '\n' << std::flush;
  }

  void line(const std::string& id, const Tally& t, double seconds) {
    const bool pass = t.failures == 0 && t.checks > 0;
    all_passed = all_passed && pass;
    std::ostringstream text;
    text << (pass ? "PASS" : "FAIL") << "  criterion " << id << "  " << t.name << "  (" << t.checks << " checks, "
         << t.failures << " failures, " << std::fixed << std::setprecision(1) << seconds << "s)";
    if (!pass) text << "\n      first failure: " << (t.checks == 0 ? "nothing checked" : t.first_failure);
    say(text.str());
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite"};
  std::string cli;
  std::string data;
  std::string report_path;
  bool quick = false;
  app.add_option("--cli", cli, "Path to the impsep executable")->required();
  app.add_option("--report", report_path, "Also write the report to this file");
  app.add_option("--data", data, "Directory with the fixture graph files")->required();
  app.add_flag("--quick", quick, "Exhaustive corpus up to n = 6 only");
  CLI11_PARSE(app, argc, argv);

  Report report;
  if (!report_path.empty()) report.file.open(report_path);
  std::mt19937_64 rng(kSeed);
  auto clock = std::chrono::steady_clock::now();
  const auto exhaustive = exhaustive_corpus(quick ? 6 : kExhaustiveMaxN);
  const auto random = random_corpus(rng);
  {
    std::ostringstream text;
    text << "corpus: " << exhaustive.size() << " exhaustive instances (connected graphs up to isomorphism, n <= "
         << (quick ? 6 : kExhaustiveMaxN) << "), " << random.size() << " random instances (n <= " << kRandomMaxN << ")";
    report.say(text.str());
  }

  Tally unique{"uniqueness of the smallest important separator"};
  clock = std::chrono::steady_clock::now();
  for (const auto& inst : exhaustive) check_uniqueness(inst, unique);
  report.line("1", unique, seconds_since(clock));

  Tally exact{"enumeration equals the definitional set, excess <= 3"};
  Tally bound{"enumerated count within the binomial bound"};
  clock = std::chrono::steady_clock::now();
  for (const auto& inst : exhaustive) check_enumeration(inst, exact, bound);
  for (const auto& inst : random) check_enumeration(inst, exact, bound);
  const double enum_seconds = seconds_since(clock);
  report.line("2", exact, enum_seconds);
  report.line("3", bound, enum_seconds);

  Tally laws{"witness uniqueness, domination and compression, |s| <= 3"};
  Tally complete{"compound witness completeness, excess <= 3"};
  clock = std::chrono::steady_clock::now();
  for (const auto& inst : exhaustive) check_witnesses(inst, laws, complete);
  const double witness_seconds = seconds_since(clock);
  report.line("4", laws, witness_seconds);
  report.line("5", complete, witness_seconds);

  Tally decision{"multiway cut decisions match the exhaustive optimum"};
  Tally lower{"lower bound m never exceeds the optimum"};
  clock = std::chrono::steady_clock::now();
  check_mwc(rng, decision, lower);
  const double mwc_seconds = seconds_since(clock);
  report.line("6", decision, mwc_seconds);
  report.line("7", lower, mwc_seconds);

  Tally order{"fast comparison, order equivalence, bottom domination"};
  clock = std::chrono::steady_clock::now();
  for (const auto& inst : exhaustive) check_order(inst, order);
  report.line("8", order, seconds_since(clock));

  Tally determinism{"byte-identical CLI runs, parallel equals sequential"};
  clock = std::chrono::steady_clock::now();
  check_determinism(cli, data, rng, determinism);
  report.line("9", determinism, seconds_since(clock));

  std::size_t count = 0;
  const double bench = benchmark(count);
  Tally smoke{"n = 60, excess 2 enumeration under 60s"};
  smoke.expect(bench < kBenchmarkLimitSeconds, [&] { return std::to_string(bench) + "s"; });
  report.line("smoke", smoke, bench);
  report.say("      (" + std::to_string(count) + " separators enumerated)");
  report.say(report.all_passed ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
  return report.all_passed ? 0 : 1;
}
