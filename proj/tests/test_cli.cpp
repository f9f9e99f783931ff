#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support/oracles.hpp"
#include "ttp/cli.hpp"
#include "ttp/schedule_io.hpp"

using namespace ttp;
using namespace ttp::testing;

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("ttp_cli_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace

TEST_CASE("score prints the reference footer") {
  std::ostringstream out, err;
  const int rc = cmd_score(fixture_path("galaxy10.txt"),
                           fixture_path("galaxy10_best.txt"), out, err);
  CHECK(rc == kExitOk);
  CHECK(out.str() == "404 416 477 463 423 435 452 500 462 503 total=4535\n");
  CHECK(err.str().empty());
}

TEST_CASE("score on a zero matrix is all zeros") {
  TempDir dir;
  const Instance ref = load_instance_file("galaxy10.txt");
  std::ostringstream matrix;
  matrix << "10\n";
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) matrix << "0 ";
    matrix << '\n';
  }
  for (const auto& name : ref.names) matrix << name << ' ';
  matrix << '\n';
  write_text(dir.file("zero.txt"), matrix.str());

  std::ostringstream out, err;
  const int rc = cmd_score(dir.file("zero.txt"),
                           fixture_path("galaxy10_best.txt"), out, err);
  CHECK(rc == kExitOk);
  CHECK(out.str() == "0 0 0 0 0 0 0 0 0 0 total=0\n");
}

TEST_CASE("score reports parse failures on exit 1") {
  std::ostringstream out, err;
  const int rc = cmd_score(fixture_path("galaxy10.txt"),
                           fixture_path("missing.txt"), out, err);
  CHECK(rc == kExitInputError);
  CHECK(err.str().find("error:") == 0);
}

TEST_CASE("validate judges the reference schedule feasible") {
  std::ostringstream out, err;
  const int rc = cmd_validate(fixture_path("galaxy10.txt"),
                              fixture_path("galaxy10_best.txt"), out, err);
  CHECK(rc == kExitOk);
  CHECK(out.str() == "drr=true atmost=0 norepeat=0\n");
}

TEST_CASE("validate flags a venue flip as not round-robin") {
  TempDir dir;
  const Instance inst = load_instance_file("galaxy10.txt");
  Schedule s = load_schedule_file("galaxy10_best.txt", inst);
  const int o = s.opponent(0, 0);
  s.venue(0, 0) ^= 1;
  s.venue(o, 0) ^= 1;
  write_text(dir.file("flipped.txt"), render_schedule(s, inst));

  std::ostringstream out, err;
  const int rc = cmd_validate(fixture_path("galaxy10.txt"),
                              dir.file("flipped.txt"), out, err);
  CHECK(rc == kExitInvalid);
  CHECK(out.str().find("drr=false") == 0);
}

TEST_CASE("validate counts a manufactured home stand") {
  TempDir dir;
  const Instance inst = load_instance_file("toy4.txt");
  // same pairings every round; venues give team 1 a four-game home stand
  Schedule s = Schedule::empty(4);
  const Venue v0[6] = {Venue::Home, Venue::Home, Venue::Home,
                       Venue::Home, Venue::Away, Venue::Home};
  for (int r = 0; r < 6; ++r) {
    if (v0[r] == Venue::Home) {
      s.set_pair(0, 1, r);
    } else {
      s.set_pair(1, 0, r);
    }
    if (r % 2 == 0) {
      s.set_pair(2, 3, r);
    } else {
      s.set_pair(3, 2, r);
    }
  }
  write_text(dir.file("stand.txt"), render_schedule(s, inst));

  std::ostringstream out, err;
  const int rc =
      cmd_validate(fixture_path("toy4.txt"), dir.file("stand.txt"), out, err);
  CHECK(rc == kExitInvalid);
  CHECK(out.str().find("drr=false") == 0);
  CHECK(out.str().find("atmost=2") != std::string::npos);
}

TEST_CASE("solve writes both formats and a summary") {
  TempDir dir;
  write_text(dir.file("params.cfg"), "w = 40\nt0 = 30\n");

  RunConfig cfg;
  cfg.instance_path = fixture_path("toy4.txt");
  cfg.out_path = dir.file("best.txt");
  cfg.config_path = dir.file("params.cfg");
  cfg.steps = 60000;
  cfg.seed = 5;

  std::ostringstream out, err;
  const int rc = cmd_solve(cfg, out, err);
  CHECK(rc == kExitOk);

  const Instance inst = load_instance_file("toy4.txt");
  std::ifstream human(dir.file("best.txt"));
  REQUIRE(human.good());
  const Schedule s = parse_schedule(human, inst);
  std::ifstream machine(dir.file("best.txt") + ".sol");
  REQUIRE(machine.good());
  const Schedule s2 = parse_solution(machine, inst);
  CHECK(s == s2);
  CHECK(is_double_round_robin(s));
  CHECK(count_violations(s).total() == 0);

  const N4Summary oracle = summarize_n4(inst);
  std::ostringstream want;
  want << "distance=" << oracle.best_feasible << " feasible=true proposals=60000\n";
  CHECK(out.str() == want.str());

  SUBCASE("the emitted schedule passes validation") {
    std::ostringstream vout, verr;
    const int vrc =
        cmd_validate(fixture_path("toy4.txt"), dir.file("best.txt"), vout, verr);
    CHECK(vrc == kExitOk);
  }
}

TEST_CASE("solve with zero steps still reports consistently") {
  TempDir dir;
  RunConfig cfg;
  cfg.instance_path = fixture_path("toy4.txt");
  cfg.out_path = dir.file("zero.txt");
  cfg.steps = 0;
  cfg.seed = 9;
  std::ostringstream out, err;
  const int rc = cmd_solve(cfg, out, err);
  CHECK((rc == kExitOk || rc == kExitNoFeasible));
  const bool feasible = out.str().find("feasible=true") != std::string::npos;
  CHECK(rc == (feasible ? kExitOk : kExitNoFeasible));
  CHECK(out.str().find("proposals=0") != std::string::npos);
}

TEST_CASE("solve rejects bad inputs with exit 1") {
  RunConfig cfg;
  cfg.instance_path = fixture_path("does_not_exist.txt");
  std::ostringstream out, err;
  CHECK(cmd_solve(cfg, out, err) == kExitInputError);
  CHECK(err.str().find("error:") == 0);

  TempDir dir;
  write_text(dir.file("bad.txt"), "4\n0 1 2 3\n9 0 4 5\n2 4 0 6\n3 5 6 0\n");
  cfg.instance_path = dir.file("bad.txt");
  std::ostringstream out2, err2;
  CHECK(cmd_solve(cfg, out2, err2) == kExitInputError);
  CHECK(err2.str().find("line 3") != std::string::npos);
}

TEST_CASE("config file parsing") {
  TempDir dir;
  SUBCASE("full set of keys") {
    write_text(dir.file("all.cfg"),
               "# comment\n"
               "t0 = 50\nbeta = 0.999\nsteps = 1234\nw = 77\n"
               "p_look = 1\np_exit = 2\nseed = 42\nchains = 2\n"
               "weights = 0.2,0.2,0.2,0.2,0.1,0.05,0.05\n");
    AnnealParams params;
    apply_config_file(params, dir.file("all.cfg"));
    CHECK(params.t0 == 50.0);
    CHECK(params.beta == 0.999);
    CHECK(params.steps == 1234);
    CHECK(params.w == 77.0);
    CHECK(params.p_look == 1.0);
    CHECK(params.p_exit == 2.0);
    CHECK(params.seed == 42);
    CHECK(params.chains == 2);
    CHECK(params.weights[MoveKind::SwapHomes] == 0.2);
    CHECK(params.weights[MoveKind::Lpst] == 0.05);
  }
  SUBCASE("unknown key") {
    write_text(dir.file("bad.cfg"), "nope = 1\n");
    AnnealParams params;
    CHECK_THROWS_WITH_AS(apply_config_file(params, dir.file("bad.cfg")),
                         doctest::Contains("unknown config key"), ParseError);
  }
  SUBCASE("malformed value") {
    write_text(dir.file("bad.cfg"), "t0 = fast\n");
    AnnealParams params;
    CHECK_THROWS_AS(apply_config_file(params, dir.file("bad.cfg")), ParseError);
  }
  SUBCASE("flags override the file") {
    write_text(dir.file("c.cfg"), "steps = 5\nseed = 5\n");
    RunConfig cfg;
    cfg.config_path = dir.file("c.cfg");
    cfg.steps = 99;
    const AnnealParams params = resolve_params(cfg);
    CHECK(params.steps == 99);
    CHECK(params.seed == 5);
  }
}

TEST_CASE("bench runs the instance-by-seed grid") {
  TempDir dir;
  fs::copy_file(fixture_path("toy4.txt"), dir.file("a.txt"));
  {
    Rng rng(3);
    const Instance other = random_metric_instance(6, rng);
    std::ostringstream os;
    os << other.n << '\n';
    for (int i = 0; i < other.n; ++i) {
      for (int j = 0; j < other.n; ++j) os << other.dist(i, j) << ' ';
      os << '\n';
    }
    write_text(dir.file("b.txt"), os.str());
  }

  std::ostringstream out, err;
  const int rc =
      cmd_bench(dir.path.string(), {4, 5, 6}, 2000, "", out, err);
  CHECK(rc == kExitOk);

  std::istringstream rows(out.str());
  std::string line;
  int count = 0;
  std::vector<long long> toy_dists;
  while (std::getline(rows, line)) {
    ++count;
    std::istringstream fields(line);
    std::string name, feasible;
    long long seed = 0, dist = 0;
    double secs = -1.0;
    fields >> name >> seed >> dist >> feasible >> secs;
    CHECK((name == "a.txt" || name == "b.txt"));
    CHECK((feasible == "true" || feasible == "false"));
    CHECK(secs >= 0.0);
    if (name == "a.txt") toy_dists.push_back(dist);
  }
  CHECK(count == 6);

  SUBCASE("identical seeds repeat identical distances") {
    std::ostringstream out2, err2;
    cmd_bench(dir.path.string(), {4, 4}, 2000, "", out2, err2);
    std::istringstream rows2(out2.str());
    std::vector<std::string> lines;
    while (std::getline(rows2, line)) lines.push_back(line);
    REQUIRE(lines.size() == 4);
    // strip the trailing time field before comparing
    auto strip = [](const std::string& s) {
      return s.substr(0, s.find_last_of(' '));
    };
    CHECK(strip(lines[0]) == strip(lines[1]));
    CHECK(strip(lines[2]) == strip(lines[3]));
  }
}

TEST_CASE("bench refuses directories with a bad instance") {
  TempDir dir;
  write_text(dir.file("bad.txt"), "4\n0 1\n");
  std::ostringstream out, err;
  CHECK(cmd_bench(dir.path.string(), {1}, 100, "", out, err) ==
        kExitInputError);
}

TEST_CASE("the installed binary wires the subcommands together") {
  TempDir dir;
  const std::string cli = TTP_CLI_PATH;
  const std::string cmd = cli + " score " + fixture_path("galaxy10.txt") + " " +
                          fixture_path("galaxy10_best.txt") + " > " +
                          dir.file("out.txt");
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::ifstream in(dir.file("out.txt"));
  std::string line;
  std::getline(in, line);
  CHECK(line == "404 416 477 463 423 435 452 500 462 503 total=4535");

  const std::string usage = cli + " > /dev/null 2>&1";
  CHECK(std::system(usage.c_str()) != 0);
}
