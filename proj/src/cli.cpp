#include "mpg/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mpg/brim.hpp"
#include "mpg/families.hpp"
#include "mpg/io.hpp"
#include "mpg/measure.hpp"
#include "mpg/oracle.hpp"
#include "mpg/qdpm.hpp"

namespace mpg::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("short write to " + path);
}

// empty path means stdout
void emit_text(const std::string& path, const std::string& text) {
  if (path.empty())
    std::cout << text;
  else
    write_file(path, text);
}

bool positive_measure(const Measure& m) { return m.is_inf() || m.value() > 0; }

std::string winners_text(const Game& g, const Solution& sol) {
  std::ostringstream os;
  for (int32_t v = 0; v < static_cast<int32_t>(g.size()); ++v)
    os << v << ' ' << (sol.win_max[v] ? "max" : "min") << '\n';
  return os.str();
}

std::string measure_text(const Game& g, const Solution& sol) {
  std::ostringstream os;
  const int32_t n = static_cast<int32_t>(g.size());
  for (int32_t v = 0; v < n; ++v)
    os << "measure " << v << ' ' << sol.final_measure[v].str() << '\n';
  const std::vector<int32_t>& sig =
      sol.sigma.empty() ? sol.witness_max : sol.sigma;
  for (int32_t v = 0; v < n; ++v)
    if (g.owner(v) == Owner::Max && sig[v] >= 0)
      os << "strategy " << v << ' ' << sig[v] << '\n';
  return os.str();
}

struct SolutionFile {
  MeasureFunction mu;
  std::vector<int32_t> sigma;
};

// Lines are "measure <position> <nat|inf>" and "strategy <position>
// <successor>"; '#' starts a comment. Every position needs a measure line.
SolutionFile parse_solution(const Game& g, const std::string& text) {
  const int32_t n = static_cast<int32_t>(g.size());
  SolutionFile sf;
  sf.mu.assign(n, Measure::fin(0));
  sf.sigma.assign(n, -1);
  std::vector<uint8_t> seen_mu(n, 0), seen_sig(n, 0);
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "measure") {
      long long id = -1;
      std::string val;
      if (!(ls >> id >> val))
        throw ParseError(lineno, "expected: measure <position> <value>");
      if (id < 0 || id >= n) throw ParseError(lineno, "position id out of range");
      if (seen_mu[id]++)
        throw ParseError(lineno, "second measure for position " + std::to_string(id));
      if (val == "inf") {
        sf.mu[id] = Measure::inf();
      } else {
        if (val.empty() || val.find_first_not_of("0123456789") != std::string::npos)
          throw ParseError(lineno, "measure value must be a natural number or inf");
        sf.mu[id] = Measure::fin(Int(val));
      }
    } else if (kw == "strategy") {
      long long id = -1, to = -1;
      if (!(ls >> id >> to))
        throw ParseError(lineno, "expected: strategy <position> <successor>");
      if (id < 0 || id >= n) throw ParseError(lineno, "position id out of range");
      if (g.owner(static_cast<int32_t>(id)) != Owner::Max)
        throw ParseError(lineno, "strategy on a min player position");
      if (seen_sig[id]++)
        throw ParseError(lineno, "second strategy for position " + std::to_string(id));
      bool is_succ = false;
      for (int32_t u : g.succ(static_cast<int32_t>(id)))
        if (u == to) is_succ = true;
      if (!is_succ) throw ParseError(lineno, "strategy target is not a successor");
      sf.sigma[id] = static_cast<int32_t>(to);
    } else {
      throw ParseError(lineno, "unknown directive '" + kw + "'");
    }
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing content '" + extra + "'");
  }
  for (int32_t v = 0; v < n; ++v)
    if (!seen_mu[v])
      throw ParseError(lineno, "no measure for position " + std::to_string(v));
  return sf;
}

StatsRecord make_record(const std::string& algo, const Game& g,
                        const UpdateStats& st, int64_t wins_max,
                        int64_t wins_min, std::string params) {
  const GameStats& gs = stats(g);
  StatsRecord r;
  r.algorithm = algo;
  r.n = gs.n;
  r.m = gs.m;
  r.W = gs.W;
  r.S = gs.S;
  r.stats = st;
  r.win_max_size = wins_max;
  r.win_min_size = wins_min;
  r.params = std::move(params);
  return r;
}

std::chrono::nanoseconds seconds_to_ns(double s) {
  return std::chrono::nanoseconds(s > 0 ? static_cast<int64_t>(s * 1e9) : 0);
}

// ---- solve ----

struct SolveOpts {
  std::string algo = "qdpm";
  std::string input;
  std::string output;
  std::string measure_path;
  std::string stats_path;
  std::string threshold;
  bool stats = false;
  bool trace = false;
  bool audit = false;
  double timeout = 0.0;
  uint64_t budget = 1ull << 20;
  bool budget_given = false;
};

int cmd_solve(const SolveOpts& o) {
  if (o.audit && o.algo != "qdpm") {
    std::cerr << "--audit only applies to the qdpm algorithm\n";
    return 1;
  }
  if (o.algo == "oracle" && (o.trace || !o.measure_path.empty() || o.timeout > 0)) {
    std::cerr << "--trace, --measure and --timeout do not apply to the oracle\n";
    return 1;
  }
  if (o.budget_given && o.algo != "oracle") {
    std::cerr << "--budget only applies to the oracle\n";
    return 1;
  }
  if (o.timeout < 0) {
    std::cerr << "--timeout must be nonnegative\n";
    return 1;
  }

  Game g = parse_mpg(read_file(o.input));
  if (!o.threshold.empty()) g = shift_threshold(g, Int(o.threshold));

  TraceSink sink;
  if (o.trace)
    sink = [](const TraceEvent& e) {
      std::cout << "trace " << e.pass << ' ' << e.position << ' '
                << e.old_value.str() << ' ' << e.new_value.str() << '\n';
    };

  const std::chrono::nanoseconds ns = seconds_to_ns(o.timeout);
  Solution sol;
  UpdateStats st{};
  if (o.algo == "qdpm") {
    QdpmOptions qo;
    qo.time_limit = ns;
    qo.validate_each_phase = o.audit;
    qo.check_strict = o.audit;
    if (o.trace) qo.trace = sink;
    std::tie(sol, st) = qdpm_solve(g, qo);
  } else if (o.algo == "brim") {
    BrimOptions bo;
    bo.time_limit = ns;
    auto r = o.trace ? brim_solve_traced(g, sink, bo) : brim_solve(g, bo);
    sol = std::move(r.first);
    st = r.second;
  } else {
    sol = oracle_solve(g, o.budget);
  }

  emit_text(o.output, winners_text(g, sol));
  if (!o.measure_path.empty()) write_file(o.measure_path, measure_text(g, sol));
  if (o.stats || !o.stats_path.empty()) {
    std::string params = "input=" + o.input + ";algo=" + o.algo;
    if (!o.threshold.empty()) params += ";threshold=" + o.threshold;
    StatsRecord rec = make_record(o.algo, g, st, sol.max_count(),
                                  sol.min_count(), std::move(params));
    if (o.stats_path.empty())
      std::cout << to_json(rec) << '\n';
    else
      write_file(o.stats_path, to_json(rec) + "\n");
  }
  return 0;
}

// ---- generate ----

int cmd_generate(const RandomGameParams& p, const std::string& output) {
  Game g = generate_random(p);
  emit_text(output, write_mpg(g, random_game_header(p)));
  return 0;
}

// ---- convert ----

int cmd_convert(const std::string& input, const std::string& output) {
  Game g = parity_to_mpg(parse_parity(read_file(input)));
  emit_text(output, write_mpg(g, "encoded from a parity game"));
  return 0;
}

// ---- check ----

struct CheckOpts {
  std::string input;
  std::string solution;
  bool deep = false;
};

int cmd_check(const CheckOpts& o) {
  Game g = parse_mpg(read_file(o.input));
  const GameStats& gs = stats(g);
  if (o.solution.empty()) {
    std::cout << "ok: " << gs.n << " positions, " << gs.m << " moves, W=" << gs.W
              << ", S=" << gs.S << '\n';
    return 0;
  }
  SolutionFile sf = parse_solution(g, read_file(o.solution));
  std::vector<std::string> bad;

  ProgressReport pr = is_progress_measure(g, sf.mu);
  for (int32_t v : pr.violators)
    bad.push_back("position " + std::to_string(v) + ": measure is not progress here");

  bool full_cover = true;
  for (int32_t v = 0; v < static_cast<int32_t>(g.size()); ++v)
    if (g.owner(v) == Owner::Max && positive_measure(sf.mu[v]) && sf.sigma[v] < 0)
      full_cover = false;

  if (full_cover) {
    // the strategy covers the whole positive max region, so the state can be
    // validated as one object
    QDR r{sf.mu, sf.sigma};
    ValidationReport vr;
    try {
      vr = validate_qdr(g, r, o.deep);
    } catch (const SizeLimit&) {
      std::cerr << "note: positive region too large for the deep check, ran the light one\n";
      vr = validate_qdr(g, r, false);
    }
    for (const ValidationIssue& is : vr.issues)
      bad.push_back("position " + std::to_string(is.position) + ": " + is.what);
  } else {
    for (int32_t v = 0; v < static_cast<int32_t>(g.size()); ++v) {
      if (sf.sigma[v] < 0) continue;
      if (!positive_measure(sf.mu[v]))
        bad.push_back("position " + std::to_string(v) +
                      ": zero-value position carries a strategy move");
      else if (!(sf.mu[v] <= stretch(sf.mu[sf.sigma[v]], v, g)))
        bad.push_back("position " + std::to_string(v) +
                      ": value exceeds what the strategy move supports");
    }
    if (o.deep)
      std::cerr << "note: deep check skipped, the strategy does not cover the "
                   "positive max region\n";
  }

  if (!bad.empty()) {
    for (const std::string& b : bad) std::cout << b << '\n';
    return 1;
  }
  int64_t inf_count = 0;
  for (const Measure& m : sf.mu) inf_count += m.is_inf() ? 1 : 0;
  std::cout << "ok: " << gs.n << " positions, measure verified, " << inf_count
            << " max wins / " << (gs.n - inf_count) << " min wins\n";
  return 0;
}

// ---- bench ----

struct BenchOpts {
  std::string dir;
  std::string suite;
  std::string algos = "qdpm,brim";
  std::string csv;
  double timeout = 0.0;
  int jobs = 1;
  int32_t n = 5000;
  std::string degrees = "10,20,40,80";
  int count = 20;
  int64_t weight_bound = 10000;
  double ratio = 0.5;
  uint64_t seed_base = 1;
};

struct BenchInstance {
  std::string name;
  Game game;
  uint64_t seed = 0;
  bool has_seed = false;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw std::runtime_error("empty entry in list '" + s + "'");
    out.push_back(item);
  }
  if (out.empty()) throw std::runtime_error("empty list '" + s + "'");
  return out;
}

std::vector<int32_t> parse_int_list(const std::string& s) {
  std::vector<int32_t> out;
  for (const std::string& item : split_list(s)) {
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size() || v <= 0)
      throw std::runtime_error("bad list entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<BenchInstance> make_instances(const BenchOpts& o) {
  std::vector<BenchInstance> out;
  if (!o.dir.empty()) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(o.dir))
      if (e.is_regular_file() && e.path().extension() == ".mpg")
        files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw std::runtime_error("no .mpg files under " + o.dir);
    for (const auto& f : files)
      out.push_back({f.stem().string(), parse_mpg(read_file(f.string())), 0, false});
  } else if (o.suite == "fig1" || o.suite == "sim") {
    for (int64_t k : {3, 10, 100, 1000, 10000}) {
      Game g = o.suite == "fig1" ? make_fig1_family(k) : make_sim_family(k);
      out.push_back({o.suite + "_k" + std::to_string(k), std::move(g), 0, false});
    }
  } else if (o.suite == "random") {
    std::vector<int32_t> degs = parse_int_list(o.degrees);
    for (size_t di = 0; di < degs.size(); ++di)
      for (int i = 0; i < o.count; ++i) {
        RandomGameParams p;
        p.n = o.n;
        p.max_outdeg = degs[di];
        p.weight_lo = -o.weight_bound;
        p.weight_hi = o.weight_bound;
        p.owner_ratio = o.ratio;
        p.seed = o.seed_base + 9973ull * di + static_cast<uint64_t>(i);
        out.push_back({"rand_n" + std::to_string(o.n) + "_d" +
                           std::to_string(degs[di]) + "_s" + std::to_string(i),
                       generate_random(p), p.seed, true});
      }
  } else {
    throw std::runtime_error("bench needs exactly one of --dir and --suite");
  }
  return out;
}

struct BenchRow {
  StatsRecord rec;
  std::string status = "ok";
  std::string error;  // nonempty means the run failed outright
  std::vector<uint8_t> win;
  bool have_win = false;
};

// timeout and error rows keep the game columns but leave the run-dependent
// ones empty
std::string bench_csv_row(const BenchRow& r) {
  if (r.status == "ok") return to_csv(r.rec);
  std::ostringstream os;
  os << r.rec.algorithm << ',' << r.rec.n << ',' << r.rec.m << ','
     << r.rec.W.str() << ',' << r.rec.S.str() << ",,,,,,," << r.rec.params;
  return os.str();
}

BenchRow run_bench_job(const BenchInstance& inst, const std::string& algo,
                       std::chrono::nanoseconds time_limit_ns) {
  BenchRow row;
  UpdateStats st{};
  int64_t wmax = 0, wmin = 0;
  std::string status = "ok";
  auto t0 = std::chrono::steady_clock::now();
  try {
    Solution sol;
    if (algo == "qdpm") {
      QdpmOptions qo;
      qo.time_limit = time_limit_ns;
      std::tie(sol, st) = qdpm_solve(inst.game, qo);
    } else {
      BrimOptions bo;
      bo.time_limit = time_limit_ns;
      std::tie(sol, st) = brim_solve(inst.game, bo);
    }
    wmax = sol.max_count();
    wmin = sol.min_count();
    row.win = std::move(sol.win_max);
    row.have_win = true;
  } catch (const Timeout&) {
    status = "timeout";
    st = UpdateStats{};
    st.time_ns = static_cast<uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now() - t0)
            .count());
  } catch (const std::exception& e) {
    status = "error";
    st = UpdateStats{};
    row.error = inst.name + " " + algo + ": " + e.what();
  }
  std::string params = "instance=" + inst.name;
  if (inst.has_seed) params += ";seed=" + std::to_string(inst.seed);
  params += ";status=" + status;
  row.status = status;
  row.rec = make_record(algo, inst.game, st, wmax, wmin, std::move(params));
  return row;
}

int cmd_bench(const BenchOpts& o) {
  if (o.dir.empty() == o.suite.empty()) {
    std::cerr << "bench needs exactly one of --dir and --suite\n";
    return 1;
  }
  if (o.jobs < 1) {
    std::cerr << "--jobs must be at least 1\n";
    return 1;
  }
  if (o.timeout < 0) {
    std::cerr << "--timeout must be nonnegative\n";
    return 1;
  }
  std::vector<std::string> algos = split_list(o.algos);
  for (const std::string& a : algos)
    if (a != "qdpm" && a != "brim") {
      std::cerr << "bench runs qdpm and brim only, got '" << a << "'\n";
      return 1;
    }

  std::vector<BenchInstance> instances = make_instances(o);
  const std::chrono::nanoseconds ns = seconds_to_ns(o.timeout);

  std::vector<BenchRow> rows(instances.size() * algos.size());
  std::atomic<size_t> cursor{0};
  auto work = [&]() {
    for (;;) {
      size_t i = cursor.fetch_add(1);
      if (i >= instances.size()) break;
      for (size_t j = 0; j < algos.size(); ++j)
        rows[i * algos.size() + j] = run_bench_job(instances[i], algos[j], ns);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < o.jobs; ++t) pool.emplace_back(work);
  work();
  for (std::thread& th : pool) th.join();

  std::ostringstream csv;
  csv << csv_header() << '\n';
  for (const BenchRow& r : rows) csv << bench_csv_row(r) << '\n';
  emit_text(o.csv, csv.str());

  std::vector<std::string> problems;
  for (const BenchRow& r : rows)
    if (!r.error.empty()) problems.push_back(r.error);
  for (size_t i = 0; i < instances.size(); ++i) {
    const BenchRow* base = nullptr;
    for (size_t j = 0; j < algos.size(); ++j) {
      const BenchRow& r = rows[i * algos.size() + j];
      if (!r.have_win) continue;
      if (!base) {
        base = &r;
      } else if (r.win != base->win) {
        problems.push_back("winner mismatch on " + instances[i].name +
                           " between " + base->rec.algorithm + " and " +
                           r.rec.algorithm);
      }
    }
  }
  for (const std::string& p : problems) std::cerr << p << '\n';
  return problems.empty() ? 0 : 2;
}

}  // namespace

std::string csv_header() {
  return "algorithm,n,m,W,S,lift_events,solver_passes,outer_iterations,"
         "time_ns,win_max_size,win_min_size,params";
}

std::string to_csv(const StatsRecord& r) {
  std::ostringstream os;
  os << r.algorithm << ',' << r.n << ',' << r.m << ',' << r.W.str() << ','
     << r.S.str() << ',' << r.stats.lift_events << ',' << r.stats.solver_passes
     << ',' << r.stats.outer_iterations << ',' << r.stats.time_ns << ','
     << r.win_max_size << ',' << r.win_min_size << ',' << r.params;
  return os.str();
}

std::string to_json(const StatsRecord& r) {
  nlohmann::ordered_json j;
  j["algorithm"] = r.algorithm;
  j["n"] = r.n;
  j["m"] = r.m;
  j["W"] = r.W.str();
  j["S"] = r.S.str();
  j["lift_events"] = r.stats.lift_events;
  j["solver_passes"] = r.stats.solver_passes;
  j["outer_iterations"] = r.stats.outer_iterations;
  j["time_ns"] = r.stats.time_ns;
  j["win_max_size"] = r.win_max_size;
  j["win_min_size"] = r.win_min_size;
  j["params"] = r.params;
  return j.dump();
}

int run(const std::vector<std::string>& args) {
  CLI::App app{"mean payoff game toolkit"};
  app.require_subcommand(1);

  SolveOpts so;
  CLI::App* solve = app.add_subcommand("solve", "solve a game and print winners");
  solve->add_option("--input,-i", so.input, "game file")->required();
  solve->add_option("--algo,-a", so.algo, "qdpm, brim or oracle")
      ->check(CLI::IsMember({"qdpm", "brim", "oracle"}))
      ->capture_default_str();
  solve->add_option("--output,-o", so.output,
                    "winner listing destination, stdout when omitted");
  solve->add_option("--measure", so.measure_path,
                    "also write the final measure and strategy here");
  solve->add_flag("--stats", so.stats, "print a json stats record to stdout");
  solve->add_option("--stats-out", so.stats_path,
                    "write the json stats record here instead");
  solve->add_flag("--trace", so.trace, "print every value update as it happens");
  solve->add_flag("--audit", so.audit,
                  "qdpm only: revalidate the whole state after every phase");
  solve->add_option("--threshold", so.threshold,
                    "decide mean > threshold instead of mean > 0");
  solve->add_option("--timeout", so.timeout, "wall clock limit in seconds");
  solve->add_option("--budget", so.budget, "oracle only: strategy pair cap")
      ->capture_default_str();

  RandomGameParams gp;
  gp.max_outdeg = 4;
  gp.weight_lo = -10;
  gp.weight_hi = 10;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("generate", "emit a seeded random game");
  gen->add_option("--n", gp.n, "positions")->required();
  gen->add_option("--max-outdeg", gp.max_outdeg, "most moves per position")
      ->capture_default_str();
  gen->add_option("--weight-lo", gp.weight_lo, "least weight")
      ->capture_default_str();
  gen->add_option("--weight-hi", gp.weight_hi, "greatest weight")
      ->capture_default_str();
  gen->add_option("--ratio", gp.owner_ratio,
                  "probability a position belongs to the max player")
      ->capture_default_str();
  gen->add_option("--seed", gp.seed, "rng seed")->capture_default_str();
  gen->add_option("--output,-o", gen_out, "destination, stdout when omitted");

  std::string conv_from = "parity", conv_in, conv_out;
  CLI::App* conv =
      app.add_subcommand("convert", "encode another game kind as a game file");
  conv->add_option("--from", conv_from, "input format")
      ->check(CLI::IsMember({"parity"}))
      ->capture_default_str();
  conv->add_option("--input,-i", conv_in, "input file")->required();
  conv->add_option("--output,-o", conv_out, "destination, stdout when omitted");

  CheckOpts ko;
  CLI::App* check =
      app.add_subcommand("check", "validate a game file or a solution for it");
  check->add_option("--input,-i", ko.input, "game file")->required();
  check->add_option("--solution", ko.solution, "measure/strategy file to verify");
  check->add_flag("--deep", ko.deep,
                  "also certify the positive region by play analysis");

  BenchOpts bo;
  CLI::App* bench = app.add_subcommand("bench", "run solvers and emit csv rows");
  bench->add_option("--dir", bo.dir, "run on every .mpg file in this directory");
  bench->add_option("--suite", bo.suite, "generated family: random, fig1 or sim")
      ->check(CLI::IsMember({"random", "fig1", "sim"}));
  bench->add_option("--algos", bo.algos, "comma list out of qdpm,brim")
      ->capture_default_str();
  bench->add_option("--timeout", bo.timeout, "per run wall clock limit in seconds");
  bench->add_option("--csv", bo.csv, "csv destination, stdout when omitted");
  bench->add_option("--jobs", bo.jobs, "worker threads")->capture_default_str();
  bench->add_option("--n", bo.n, "random suite: positions per game")
      ->capture_default_str();
  bench->add_option("--degrees", bo.degrees,
                    "random suite: max out-degrees, comma list")
      ->capture_default_str();
  bench->add_option("--count", bo.count, "random suite: games per degree")
      ->capture_default_str();
  bench->add_option("--weight-bound", bo.weight_bound,
                    "random suite: weights drawn from [-b, b]")
      ->capture_default_str();
  bench->add_option("--ratio", bo.ratio, "random suite: max-player probability")
      ->capture_default_str();
  bench->add_option("--seed-base", bo.seed_base, "random suite: seed offset")
      ->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  so.budget_given = solve->count("--budget") > 0;

  try {
    if (solve->parsed()) return cmd_solve(so);
    if (gen->parsed()) return cmd_generate(gp, gen_out);
    if (conv->parsed()) return cmd_convert(conv_in, conv_out);
    if (check->parsed()) return cmd_check(ko);
    if (bench->parsed()) return cmd_bench(bo);
    std::cerr << "no subcommand given\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const BuildError& e) {
    std::cerr << "bad game: " << e.what() << '\n';
    return 1;
  } catch (const Timeout&) {
    std::cerr << "time limit exceeded\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const SizeLimit& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

int run(int argc, const char* const* argv) {
  return run(std::vector<std::string>(argv + 1, argv + argc));
}

}  // namespace mpg::cli
