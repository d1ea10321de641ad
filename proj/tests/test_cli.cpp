// Exercises the installed CLI end to end through a shell.  The binary path
// arrives in the LDSEQ_CLI environment variable (set by ctest).

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "ldseq/io.hpp"

namespace {

const std::string& cli_path() {
  static const std::string path = [] {
    const char* env = std::getenv("LDSEQ_CLI");
    REQUIRE(env != nullptr);
    return std::string(env);
  }();
  return path;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("ldseq_cli_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("generate writes points, steps and manifest") {
  TempDir dir;
  const auto out = dir.file("points.csv");
  const auto steps = dir.file("steps.jsonl");
  REQUIRE(run("generate --dim 1 --initial 0.5,0.95 --count 20 --kernel logsin --out " +
              out + " --steps " + steps) == 0);
  auto pts = ldseq::read_points_csv(out);
  REQUIRE(pts.count() == 20);
  CHECK(pts.x(0) == 0.5);
  CHECK(pts.x(1) == 0.95);
  auto stepfile = ldseq::read_steps_jsonl(steps);
  REQUIRE(stepfile.manifest.has_value());
  CHECK(stepfile.initial_count == 2);
  CHECK(stepfile.records.size() == 18);
  CHECK(std::filesystem::exists(out + ".manifest.json"));

  // round trip: discrepancy of the file equals the in-memory pipeline
  const auto report = dir.file("report.json");
  REQUIRE(run("discrepancy --in " + out + " --embed-xn --out " + report) == 0);
  auto j = nlohmann::json::parse(slurp(report));
  const double via_cli = j["value"].get<double>();
  const double direct =
      ldseq::star_disc_dd(ldseq::xn_embed(pts, pts.count())).value;
  CHECK(via_cli == direct);
}

TEST_CASE("generate with a single initial point and count 1") {
  TempDir dir;
  const auto out = dir.file("one.csv");
  REQUIRE(run("generate --dim 1 --initial 0.3 --count 1 --out " + out) == 0);
  auto pts = ldseq::read_points_csv(out);
  REQUIRE(pts.count() == 1);
  CHECK(pts.x(0) == 0.3);
}

TEST_CASE("usage errors exit 2") {
  TempDir dir;
  CHECK(run("generate --count 5") == 2);  // no initial set
  CHECK(run("generate --dim 1 --initial 0.5 --count 0") == 2);
  CHECK(run("scan --initial 0.5,0.95 --max-n 1") == 2);
  CHECK(run("table --which 3") == 2);
  CHECK(run("discrepancy --in " + dir.file("missing.csv")) == 2);
  CHECK(run("nonsense") == 2);
}

TEST_CASE("no admissible region exits 3") {
  CHECK(run("generate --dim 1 --initial 0.0,0.5 --count 3 --exclusion-floor 0.3") == 3);
}

TEST_CASE("unsupported dimension exits 4") {
  TempDir dir;
  const auto csv = dir.file("d4.csv");
  std::ofstream f(csv);
  f << "index,x1,x2,x3,x4\n1,0.1,0.2,0.3,0.4\n";
  f.close();
  CHECK(run("discrepancy --in " + csv) == 4);
}

TEST_CASE("check certificates: dyadic pass, lemma3 fail exits 5") {
  TempDir dir;
  const auto dyadic = dir.file("dyadic.csv");
  REQUIRE(run("generate --dim 1 --initial 0.5,1.0 --count 16 --out " + dyadic) == 0);
  CHECK(run("check --points " + dyadic + " --dyadic --depth 4") == 0);

  // a clustered synthetic file fails the negativity certificate
  const auto bad = dir.file("bad.csv");
  std::ofstream f(bad);
  f << "index,x1\n";
  for (int i = 1; i <= 12; ++i) f << i << ",0.5\n";
  f.close();
  CHECK(run("check --points " + bad + " --lemma3 --m-mult 10 --out " +
            dir.file("cert.json")) == 5);
}

TEST_CASE("scan emits rows and plot data") {
  TempDir dir;
  const auto out = dir.file("scan.csv");
  const auto plot = dir.file("plot.dat");
  REQUIRE(run("scan --initial 0.5,1.0 --max-n 16 --stride 1 --out " + out +
              " --plot-data " + plot) == 0);
  const auto body = slurp(out);
  CHECK(body.find("n,discrepancy,prefix_discrepancy") == 0);
  // count data rows
  std::size_t rows = 0;
  for (char c : body)
    if (c == '\n') ++rows;
  CHECK(rows == 1 + 15);  // header + N in {2..16}
  CHECK(!slurp(plot).empty());
}

TEST_CASE("table subset runs fast and reports cells") {
  TempDir dir;
  const auto out = dir.file("table.csv");
  const int code = run("table --which 1 --columns baselines --out " + out);
  (void)code;  // deviation exit status depends on the recorded reference values
  const auto body = slurp(out);
  CHECK(body.find("table,n,column,paper,computed") == 0);
  std::size_t rows = 0;
  for (char c : body)
    if (c == '\n') ++rows;
  CHECK(rows == 1 + 15);  // header + 5 N values x 3 baselines
}

TEST_CASE("generate rejects fourier kernel misconfiguration") {
  CHECK(run("generate --dim 1 --initial 0.5 --count 4 --kernel cosine-series") == 2);
  CHECK(run("generate --dim 1 --initial 0.5 --count 4 --engine warp") == 2);
}

TEST_CASE("spectral engine produces a valid sequence") {
  TempDir dir;
  const auto out = dir.file("spec.csv");
  REQUIRE(run("generate --dim 1 --initial 0.5,0.95 --count 24 --kernel fourier "
              "--engine spectral --out " + out) == 0);
  auto pts = ldseq::read_points_csv(out);
  REQUIRE(pts.count() == 24);
}

TEST_CASE("generate accepts an initial-file and M-rule multipliers") {
  TempDir dir;
  const auto init = dir.file("init.csv");
  std::ofstream f(init);
  f << "index,x1\n1,0.5\n2,0.95\n";
  f.close();
  const auto out = dir.file("from_file.csv");
  REQUIRE(run("generate --dim 1 --initial-file " + init +
              " --count 12 --kernel fourier --fourier-m-rule mult:2 --out " + out) == 0);
  auto pts = ldseq::read_points_csv(out);
  REQUIRE(pts.count() == 12);
  CHECK(pts.x(0) == 0.5);

  const auto cs = dir.file("cosine.csv");
  REQUIRE(run("generate --dim 1 --initial 0.3 --count 8 --kernel cosine-series "
              "--coeffs 1,0.5,0.25 --out " + cs) == 0);
  REQUIRE(ldseq::read_points_csv(cs).count() == 8);
}
