#include <catch2/catch_amalgamated.hpp>
#include <qrange/io.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

// Drives the installed binary through a shell; the path arrives via the
// QRANGE_CLI environment variable set by the build system.
namespace {

namespace fs = std::filesystem;
using namespace qrange;

std::string cli_path() {
  const char* p = std::getenv("QRANGE_CLI");
  REQUIRE(p != nullptr);
  return p;
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args, const fs::path& dir) {
  const fs::path out = dir / "stdout.txt";
  const std::string cmd =
      cli_path() + " " + args + " > " + out.string() + " 2> /dev/null";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(raw);
  std::ifstream in(out);
  r.output.assign((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("qrange-cli-" +
                                                std::to_string(std::rand()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string write_tuple(const TempDir& dir, const OperatorTuple& t,
                        const std::string& name) {
  const std::string p = (dir.path / name).string();
  atomic_write(p, tuple_to_json(t).dump());
  return p;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("cloud of the identity emits constant CSV rows with a sidecar") {
  TempDir dir;
  const std::string in = write_tuple(dir, OperatorTuple(Mat::Identity(2, 2)), "id.json");
  const std::string out = (dir.path / "cloud.csv").string();
  const auto r = run("cloud --input " + in + " --q 0.5 --count 10 --seed 1 --out " + out,
                     dir.path);
  CHECK(r.exit_code == 0);
  const PointCloud c = cloud_from_csv(slurp(out));
  REQUIRE(c.points.size() == 10);
  for (const Vec& p : c.points) CHECK(std::abs(p(0) - Cplx(0.5, 0)) < 1e-12);
  const auto meta = nlohmann::json::parse(slurp(out + ".meta.json"));
  CHECK(meta["n"] == 2);
  CHECK(meta["count"] == 10);
  CHECK(meta["seed"] == 1);
}

TEST_CASE("cloud CSV written to a file reloads bit exactly") {
  TempDir dir;
  Mat m(2, 2);
  m << Cplx(0.3, -1.1), 0.0, Cplx(2.0, 0.7), -0.4;
  const std::string in = write_tuple(dir, OperatorTuple(m), "m.json");
  const std::string out = (dir.path / "cloud.csv").string();
  REQUIRE(run("cloud --input " + in + " --q 0.4,0.2 --count 25 --seed 9 --out " + out,
              dir.path)
              .exit_code == 0);
  const std::string csv = slurp(out);
  const PointCloud c = cloud_from_csv(csv);
  CHECK(cloud_to_csv(c) == csv);
}

TEST_CASE("svg output holds a marker per point") {
  TempDir dir;
  Mat m(2, 2);
  m << 1, 1, 0, -1;
  const std::string in = write_tuple(dir, OperatorTuple(m), "m.json");
  const std::string out = (dir.path / "cloud.svg").string();
  REQUIRE(run("cloud --input " + in + " --q 0.5 --count 40 --format svg --out " + out,
              dir.path)
              .exit_code == 0);
  const std::string svg = slurp(out);
  std::size_t circles = 0, pos = 0;
  while ((pos = svg.find("<circle", pos)) != std::string::npos) {
    ++circles;
    pos += 7;
  }
  CHECK(circles == 40);
}

TEST_CASE("malformed input exits with code 2") {
  TempDir dir;
  const std::string bad = (dir.path / "bad.json").string();
  atomic_write(bad, "{ nope");
  CHECK(run("cloud --input " + bad + " --q 0.5", dir.path).exit_code == 2);
  const std::string in =
      write_tuple(dir, OperatorTuple(Mat::Identity(2, 2)), "id.json");
  CHECK(run("cloud --input " + in + " --q 1.5", dir.path).exit_code == 2);
  CHECK(run("cloud --input " + in + " --q 0.5,0.5,0.5", dir.path).exit_code == 2);
  CHECK(run("cloud", dir.path).exit_code == 2);
}

TEST_CASE("infeasible constraints exit with code 3") {
  TempDir dir;
  const std::string in =
      write_tuple(dir, OperatorTuple(Mat::Identity(1, 1)), "one.json");
  CHECK(run("cloud --input " + in + " --q 0.5", dir.path).exit_code == 3);
  // rank(A) = 1 with |q| < 1
  Mat a = Mat::Zero(2, 2);
  a(0, 0) = 1.0;
  const std::string in2 =
      write_tuple(dir, OperatorTuple(Mat::Identity(2, 2)), "id.json");
  const std::string apath = write_tuple(dir, OperatorTuple(a), "a.json");
  CHECK(run("cloud --input " + in2 + " --a " + apath + " --q 0.5", dir.path)
            .exit_code == 3);
}

TEST_CASE("full-plane ranges leave CSV mode with code 4 and JSON mode cleanly") {
  TempDir dir;
  Mat a = Mat::Zero(3, 3);
  a(0, 0) = 1.0;
  a(1, 1) = 1.0;
  Mat m = Mat::Identity(3, 3);
  m(0, 2) = 1.0;  // pushes N(A) into the range
  const std::string min = write_tuple(dir, OperatorTuple(m), "m.json");
  const std::string ain = write_tuple(dir, OperatorTuple(a), "a.json");
  const auto csv = run("cloud --input " + min + " --a " + ain + " --q 0.5", dir.path);
  CHECK(csv.exit_code == 4);
  CHECK(nlohmann::json::parse(csv.output)["kind"] == "FullPlane");
  const auto js = run("cloud --input " + min + " --a " + ain + " --q 0.5 --format json",
                      dir.path);
  CHECK(js.exit_code == 0);
  const auto doc = nlohmann::json::parse(js.output);
  CHECK(doc["kind"] == "FullPlane");
  CHECK(doc["certificate"]["values"].size() == 5);
}

TEST_CASE("radius reports the value, witness and bounds") {
  TempDir dir;
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = 1.0;
  const std::string in = write_tuple(dir, OperatorTuple(m), "m.json");
  const auto r = run("radius --input " + in + " --q 0.5 --seed 2 --restarts 8",
                     dir.path);
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["value"].get<double>() == Catch::Approx(0.75).margin(1e-3));
  CHECK(doc["bounds"]["upper"].get<double>() == Catch::Approx(1.0));
  CHECK(doc["bounds"]["corrected_lower"].get<double>() == Catch::Approx(0.25));
  CHECK(doc.contains("witness"));
  // zero tuple: value 0
  const std::string zin = write_tuple(dir, OperatorTuple(Mat::Zero(2, 2)), "z.json");
  const auto rz = run("radius --input " + zin + " --q 0.5", dir.path);
  REQUIRE(rz.exit_code == 0);
  CHECK(nlohmann::json::parse(rz.output)["value"].get<double>() == 0.0);
}

TEST_CASE("spectra lists joint eigenvalues of commuting tuples") {
  TempDir dir;
  Mat a = Mat::Zero(2, 2), b = Mat::Zero(2, 2);
  a(0, 0) = 1.0;
  a(1, 1) = 2.0;
  b(0, 0) = -1.0;
  b(1, 1) = 3.0;
  const std::string in =
      write_tuple(dir, OperatorTuple(std::vector<Mat>{a, b}), "t.json");
  const auto r = run("spectra --input " + in, dir.path);
  REQUIRE(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.output).size() == 2);
  // non-commuting input is infeasible for the spectra command
  Mat n1(2, 2), n2(2, 2);
  n1 << 0, 1, 0, 0;
  n2 << 0, 0, 1, 0;
  const std::string nin =
      write_tuple(dir, OperatorTuple(std::vector<Mat>{n1, n2}), "nc.json");
  CHECK(run("spectra --input " + nin, dir.path).exit_code == 3);
}

TEST_CASE("semihilbert summarizes the weighted structure") {
  TempDir dir;
  Mat a = Mat::Zero(2, 2);
  a(0, 0) = 2.0;
  a(1, 1) = 1.0;
  Mat m(2, 2);
  m << 1, 0, 1, -1;
  const std::string min = write_tuple(dir, OperatorTuple(m), "m.json");
  const std::string ain = write_tuple(dir, OperatorTuple(a), "a.json");
  const auto r = run("semihilbert --input " + min + " --a " + ain + " --q 0.5",
                     dir.path);
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["rank"] == 2);
  CHECK(doc["adjointable"] == true);
  CHECK(doc["kernel_escape"] == false);
  CHECK(doc["radius"]["infinite"] == false);
}

TEST_CASE("verify runs a reduced suite and honors the negative control") {
  TempDir dir;
  const std::string common =
      "verify --seed 42 --instances 6 --samples 1500 --restarts 6";
  const std::string out = (dir.path / "report.json").string();
  const auto ok = run(common + " --q 0.5 --q 0,0.6 --out " + out, dir.path);
  CHECK(ok.exit_code == 0);
  const auto doc = nlohmann::json::parse(slurp(out));
  CHECK(doc.size() >= 25);
  const auto bad = run(common + " --q 0.5 --printed-center", dir.path);
  CHECK(bad.exit_code == 1);
  CHECK(run("verify --q 2.0", dir.path).exit_code == 2);
}
