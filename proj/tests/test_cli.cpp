#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "mpg/cli.hpp"
#include "mpg/families.hpp"
#include "mpg/io.hpp"

using namespace mpg;

namespace {

// runs the command with stdout/stderr redirected so assertions stay readable
int run_cli(const std::vector<std::string>& args, std::string* out = nullptr,
            std::string* err = nullptr) {
  std::ostringstream so, se;
  std::streambuf* ob = std::cout.rdbuf(so.rdbuf());
  std::streambuf* eb = std::cerr.rdbuf(se.rdbuf());
  int rc;
  try {
    rc = cli::run(args);
  } catch (...) {
    std::cout.rdbuf(ob);
    std::cerr.rdbuf(eb);
    throw;
  }
  std::cout.rdbuf(ob);
  std::cerr.rdbuf(eb);
  if (out) *out = so.str();
  if (err) *err = se.str();
  return rc;
}

struct TempDir {
  std::filesystem::path p;
  TempDir() {
    static int counter = 0;
    p = std::filesystem::temp_directory_path() /
        ("mpg_cli_test_" + std::to_string(++counter));
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
  }
  ~TempDir() { std::filesystem::remove_all(p); }
  std::string file(const std::string& name) const { return (p / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << text;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("help exits zero, usage mistakes exit one") {
  std::string out;
  CHECK(run_cli({"--help"}, &out) == 0);
  CHECK(out.find("solve") != std::string::npos);

  CHECK(run_cli({}) == 1);                     // a subcommand is required
  CHECK(run_cli({"solve"}) == 1);              // missing --input
  CHECK(run_cli({"frobnicate"}) == 1);         // unknown subcommand
  TempDir td;
  spit(td.file("g.mpg"), write_mpg(make_loop_game()));
  CHECK(run_cli({"solve", "-i", td.file("g.mpg"), "--bogus"}) == 1);
}

TEST_CASE("generate writes identical bytes for identical seeds") {
  TempDir td;
  std::vector<std::string> base{"generate",    "--n",  "30", "--max-outdeg",
                                "3",           "--weight-lo", "-5",
                                "--weight-hi", "5",    "--ratio", "0.4",
                                "--seed",      "7"};
  auto with_out = [&](const std::string& path) {
    std::vector<std::string> a = base;
    a.push_back("-o");
    a.push_back(path);
    return a;
  };
  REQUIRE(run_cli(with_out(td.file("a.mpg"))) == 0);
  REQUIRE(run_cli(with_out(td.file("b.mpg"))) == 0);
  CHECK(slurp(td.file("a.mpg")) == slurp(td.file("b.mpg")));

  Game g = parse_mpg(slurp(td.file("a.mpg")));
  CHECK(g.size() == 30);

  // omitted -o goes to stdout with the same content
  std::string out;
  REQUIRE(run_cli(base, &out) == 0);
  CHECK(out == slurp(td.file("a.mpg")));

  CHECK(run_cli({"generate", "--n", "0", "--seed", "1"}) == 1);
}

TEST_CASE("winner listings agree across the solvers") {
  TempDir td;
  REQUIRE(run_cli({"generate", "--n", "25", "--max-outdeg", "3", "--weight-lo",
                   "-6", "--weight-hi", "6", "--seed", "11", "-o",
                   td.file("g.mpg")}) == 0);
  REQUIRE(run_cli({"solve", "-i", td.file("g.mpg"), "-a", "qdpm", "-o",
                   td.file("wq.txt")}) == 0);
  REQUIRE(run_cli({"solve", "-i", td.file("g.mpg"), "-a", "brim", "-o",
                   td.file("wb.txt")}) == 0);
  CHECK(slurp(td.file("wq.txt")) == slurp(td.file("wb.txt")));
  CHECK(lines_of(slurp(td.file("wq.txt"))).size() == 25);

  REQUIRE(run_cli({"generate", "--n", "10", "--max-outdeg", "3", "--weight-lo",
                   "-4", "--weight-hi", "4", "--seed", "3", "-o",
                   td.file("s.mpg")}) == 0);
  std::string qd, ora;
  REQUIRE(run_cli({"solve", "-i", td.file("s.mpg"), "-a", "qdpm"}, &qd) == 0);
  REQUIRE(run_cli({"solve", "-i", td.file("s.mpg"), "-a", "oracle"}, &ora) == 0);
  CHECK(qd == ora);
}

TEST_CASE("threshold shifts move the winning bar") {
  TempDir td;
  spit(td.file("z.mpg"), write_mpg(make_zero_cycle_game()));
  std::string plain, shifted;
  REQUIRE(run_cli({"solve", "-i", td.file("z.mpg")}, &plain) == 0);
  CHECK(plain == "0 min\n1 min\n");
  REQUIRE(run_cli({"solve", "-i", td.file("z.mpg"), "--threshold", "-1"},
                  &shifted) == 0);
  CHECK(shifted == "0 max\n1 max\n");
}

TEST_CASE("stats records carry the run shape") {
  TempDir td;
  REQUIRE(run_cli({"generate", "--n", "20", "--max-outdeg", "4", "--weight-lo",
                   "-9", "--weight-hi", "9", "--seed", "21", "-o",
                   td.file("g.mpg")}) == 0);
  REQUIRE(run_cli({"solve", "-i", td.file("g.mpg"), "-a", "qdpm", "-o",
                   td.file("w.txt"), "--stats-out", td.file("st.json")}) == 0);
  nlohmann::json j = nlohmann::json::parse(slurp(td.file("st.json")));
  CHECK(j["algorithm"] == "qdpm");
  CHECK(j["n"] == 20);
  CHECK(j["m"].get<int64_t>() >= 20);
  CHECK(j["win_max_size"].get<int64_t>() + j["win_min_size"].get<int64_t>() ==
        20);
  CHECK(j.contains("lift_events"));
  CHECK(j.contains("solver_passes"));
  CHECK(j.contains("outer_iterations"));
  CHECK(j.contains("time_ns"));
  std::string params = j["params"];
  CHECK(params.find("algo=qdpm") != std::string::npos);

  // --stats prints the same record shape on stdout after the winners
  std::string out;
  REQUIRE(run_cli({"solve", "-i", td.file("g.mpg"), "-a", "brim", "-o",
                   td.file("w2.txt"), "--stats"}, &out) == 0);
  nlohmann::json k = nlohmann::json::parse(out);
  CHECK(k["algorithm"] == "brim");
  CHECK(k["n"] == 20);
  CHECK(k["win_max_size"] == j["win_max_size"]);
}

TEST_CASE("measure files verify through check") {
  TempDir td;
  spit(td.file("e.mpg"), write_mpg(make_escape_demo()));
  REQUIRE(run_cli({"solve", "-i", td.file("e.mpg"), "-a", "qdpm", "-o",
                   td.file("w.txt"), "--measure", td.file("m.txt")}) == 0);
  std::string out;
  CHECK(run_cli({"check", "-i", td.file("e.mpg"), "--solution",
                 td.file("m.txt")}, &out) == 0);
  CHECK(out.find("measure verified") != std::string::npos);
  CHECK(run_cli({"check", "-i", td.file("e.mpg"), "--solution",
                 td.file("m.txt"), "--deep"}) == 0);

  // the all-zero function is no longer progress at positive-weight positions
  spit(td.file("zero.txt"),
       "measure 0 0\nmeasure 1 0\nmeasure 2 0\n"
       "measure 3 0\nmeasure 4 0\nmeasure 5 0\n");
  std::string bad;
  CHECK(run_cli({"check", "-i", td.file("e.mpg"), "--solution",
                 td.file("zero.txt")}, &bad) == 1);
  CHECK(bad.find("not progress") != std::string::npos);

  // structural mistakes are parse errors
  spit(td.file("minstrat.txt"), slurp(td.file("m.txt")) + "strategy 2 3\n");
  CHECK(run_cli({"check", "-i", td.file("e.mpg"), "--solution",
                 td.file("minstrat.txt")}) == 1);
  spit(td.file("short.txt"), "measure 0 1\n");
  CHECK(run_cli({"check", "-i", td.file("e.mpg"), "--solution",
                 td.file("short.txt")}) == 1);
}

TEST_CASE("plain check prints the game shape") {
  TempDir td;
  spit(td.file("e.mpg"), write_mpg(make_escape_demo()));
  std::string out;
  CHECK(run_cli({"check", "-i", td.file("e.mpg")}, &out) == 0);
  CHECK(out.find("ok: 6 positions") != std::string::npos);
  CHECK(out.find("S=4") != std::string::npos);

  spit(td.file("bad.mpg"), "mpg x;\n");
  std::string err;
  CHECK(run_cli({"check", "-i", td.file("bad.mpg")}, nullptr, &err) == 1);
  CHECK(err.find("line 1") != std::string::npos);
  CHECK(run_cli({"solve", "-i", td.file("bad.mpg")}) == 1);
  CHECK(run_cli({"solve", "-i", td.file("missing.mpg")}) == 1);
}

TEST_CASE("parity files convert and solve end to end") {
  TempDir td;
  // three-node cycle topped by an odd priority: the odd player wins it
  spit(td.file("p.gm"), "parity 2;\n0 3 0 1;\n1 2 1 2;\n2 0 0 0;\n");
  REQUIRE(run_cli({"convert", "--from", "parity", "-i", td.file("p.gm"), "-o",
                   td.file("p.mpg")}) == 0);
  Game g = parse_mpg(slurp(td.file("p.mpg")));
  CHECK(g.size() == 3);
  std::string out;
  REQUIRE(run_cli({"solve", "-i", td.file("p.mpg"), "-a", "oracle"}, &out) == 0);
  CHECK(out == "0 min\n1 min\n2 min\n");
}

TEST_CASE("trace output replays the whole run") {
  TempDir td;
  spit(td.file("e.mpg"), write_mpg(make_escape_demo()));
  std::string out;
  REQUIRE(run_cli({"solve", "-i", td.file("e.mpg"), "-a", "qdpm", "--trace"},
                  &out) == 0);
  std::vector<std::string> ls = lines_of(out);
  REQUIRE(ls.size() == 8 + 6);
  for (size_t i = 0; i < 8; ++i) {
    CAPTURE(ls[i]);
    CHECK(ls[i].rfind("trace ", 0) == 0);
  }
  for (size_t i = 8; i < 14; ++i)
    CHECK(ls[i] == std::to_string(i - 8) + " min");
}

TEST_CASE("bench emits one row per solver run") {
  TempDir td;
  std::string err;
  REQUIRE(run_cli({"bench", "--suite", "fig1", "--csv", td.file("b.csv")},
                  nullptr, &err) == 0);
  std::vector<std::string> rows = lines_of(slurp(td.file("b.csv")));
  REQUIRE(rows.size() == 11);  // header + 5 sizes x 2 solvers
  CHECK(rows[0] == cli::csv_header());
  int qdpm_rows = 0, brim_rows = 0, k3 = 0;
  for (size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].rfind("qdpm,", 0) == 0) ++qdpm_rows;
    if (rows[i].rfind("brim,", 0) == 0) ++brim_rows;
    if (rows[i].find("instance=fig1_k3;") != std::string::npos) ++k3;
    CHECK(rows[i].find("status=ok") != std::string::npos);
  }
  CHECK(qdpm_rows == 5);
  CHECK(brim_rows == 5);
  CHECK(k3 == 2);

  // a directory works as a source of instances too
  spit(td.file("one.mpg"), write_mpg(make_loop_game()));
  spit(td.file("two.mpg"), write_mpg(make_zero_cycle_game()));
  REQUIRE(run_cli({"bench", "--dir", td.p.string(), "--algos", "qdpm", "--csv",
                   td.file("d.csv")}) == 0);
  CHECK(lines_of(slurp(td.file("d.csv"))).size() == 3);

  CHECK(run_cli({"bench", "--suite", "fig1", "--dir", td.p.string()}) == 1);
}

TEST_CASE("budget and deadline overruns exit two") {
  TempDir td;
  REQUIRE(run_cli({"generate", "--n", "40", "--max-outdeg", "4", "--weight-lo",
                   "-9", "--weight-hi", "9", "--seed", "8", "-o",
                   td.file("g.mpg")}) == 0);
  std::string err;
  CHECK(run_cli({"solve", "-i", td.file("g.mpg"), "-a", "oracle", "--budget",
                 "1000"}, nullptr, &err) == 2);

  REQUIRE(run_cli({"generate", "--n", "4000", "--max-outdeg", "8",
                   "--weight-lo", "-10000", "--weight-hi", "10000", "--seed",
                   "5", "-o", td.file("big.mpg")}) == 0);
  CHECK(run_cli({"solve", "-i", td.file("big.mpg"), "-a", "brim", "--timeout",
                 "0.000000001"}) == 2);
}

TEST_CASE("flag combinations that make no sense exit one") {
  TempDir td;
  spit(td.file("g.mpg"), write_mpg(make_loop_game()));
  CHECK(run_cli({"solve", "-i", td.file("g.mpg"), "-a", "oracle", "--trace"}) ==
        1);
  CHECK(run_cli({"solve", "-i", td.file("g.mpg"), "-a", "brim", "--budget",
                 "10"}) == 1);
  CHECK(run_cli({"solve", "-i", td.file("g.mpg"), "-a", "brim", "--audit"}) ==
        1);
  CHECK(run_cli({"solve", "-i", td.file("g.mpg"), "-a", "nosuch"}) == 1);
}
