#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
  const char* p = std::getenv("PROSHRINK_CLI");
  REQUIRE(p != nullptr);
  return p;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("proshrink_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

int run(const std::string& args, const std::string& out_log,
        const std::string& err_log) {
  const std::string cmd =
      cli_path() + " " + args + " >" + out_log + " 2>" + err_log;
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("solve on the one-dimensional worked instance") {
  TempDir dir;
  write_text(dir.file("A.csv"), "1\n");
  write_text(dir.file("b.txt"), "0.5\n");
  write_text(dir.file("box.txt"), "-1 1\n");

  const std::string out = dir.file("x.txt");
  const int code =
      run("solve --matrix " + dir.file("A.csv") + " --rhs " + dir.file("b.txt") +
              " --box " + dir.file("box.txt") +
              " --tau 1 --h 1 --tol-feas 1e-13 --history --out " + out,
          dir.file("out.log"), dir.file("err.log"));
  CHECK(code == 0);

  const double x = std::strtod(read_text(out).c_str(), nullptr);
  CHECK(std::abs(x - 0.5) <= 1e-10);

  const std::string trace = read_text(out + ".trace.csv");
  CHECK(trace.rfind("iter,primal_feas,fixed_point,dual_value\n", 0) == 0);

  const auto manifest = nlohmann::json::parse(read_text(out + ".manifest.json"));
  CHECK(manifest["command"] == "solve");
  CHECK(manifest["resolved"]["termination"] == "FEAS_TOL");
  CHECK(manifest["resolved"]["h"] == 1.0);

  // identical invocation reproduces every output byte for byte
  const std::string out2 = dir.file("x2.txt");
  run("solve --matrix " + dir.file("A.csv") + " --rhs " + dir.file("b.txt") +
          " --box " + dir.file("box.txt") +
          " --tau 1 --h 1 --tol-feas 1e-13 --history --out " + out2,
      dir.file("out.log"), dir.file("err.log"));
  CHECK(read_text(out2) == read_text(out));
  CHECK(read_text(out2 + ".trace.csv") == read_text(out + ".trace.csv"));
}

TEST_CASE("box length mismatch is an input error") {
  TempDir dir;
  write_text(dir.file("A.csv"), "1,0\n0,1\n");
  write_text(dir.file("b.txt"), "0.5\n0.25\n");
  write_text(dir.file("box.txt"), "-1 1\n");  // 1 line for 2 columns

  const int code =
      run("solve --matrix " + dir.file("A.csv") + " --rhs " + dir.file("b.txt") +
              " --box " + dir.file("box.txt") + " --tau 1 --out " +
              dir.file("x.txt"),
          dir.file("out.log"), dir.file("err.log"));
  CHECK(code == 1);
  CHECK(read_text(dir.file("err.log")).find("box") != std::string::npos);
}

TEST_CASE("malformed rhs reports the line number") {
  TempDir dir;
  write_text(dir.file("A.csv"), "1\n");
  write_text(dir.file("b.txt"), "not_a_number\n");
  const int code = run("solve --matrix " + dir.file("A.csv") + " --rhs " +
                           dir.file("b.txt") + " --tau 1 --out " + dir.file("x"),
                       dir.file("out.log"), dir.file("err.log"));
  CHECK(code == 1);
  CHECK(read_text(dir.file("err.log")).find(":1:") != std::string::npos);
}

TEST_CASE("oversized manual step warns but proceeds") {
  TempDir dir;
  write_text(dir.file("A.csv"), "1\n");
  write_text(dir.file("b.txt"), "0.5\n");
  write_text(dir.file("box.txt"), "-1 1\n");

  const int code =
      run("solve --matrix " + dir.file("A.csv") + " --rhs " + dir.file("b.txt") +
              " --box " + dir.file("box.txt") +
              " --tau 1 --h 1.99 --tol-feas 1e-13 --out " + dir.file("x.txt"),
          dir.file("out.log"), dir.file("err.log"));
  // h = 1.99 < 2 = 2/(tau*sigma^2): no warning, converges
  CHECK(code == 0);
  CHECK(read_text(dir.file("err.log")).empty());

  const int code2 =
      run("solve --matrix " + dir.file("A.csv") + " --rhs " + dir.file("b.txt") +
              " --box " + dir.file("box.txt") +
              " --tau 1 --h 2.5 --max-iter 500 --tol-feas 1e-13 --out " +
              dir.file("x2.txt"),
          dir.file("out.log"), dir.file("err2.log"));
  CHECK(read_text(dir.file("err2.log")).find("warning") != std::string::npos);
  CHECK(code2 != 1);  // the override is honored, not rejected
}

TEST_CASE("accel and ppbp solvers via the CLI") {
  TempDir dir;
  write_text(dir.file("A.csv"), "1\n");
  write_text(dir.file("b.txt"), "0.5\n");
  write_text(dir.file("box.txt"), "-1 1\n");

  for (const std::string solver : {"accel", "ppbp"}) {
    const std::string out = dir.file("x_" + solver + ".txt");
    const int code =
        run("solve --solver " + solver + " --matrix " + dir.file("A.csv") +
                " --rhs " + dir.file("b.txt") + " --box " + dir.file("box.txt") +
                " --tau 1 --tol-feas 1e-12 --out " + out,
            dir.file("out.log"), dir.file("err.log"));
    CHECK(code == 0);
    const double x = std::strtod(read_text(out).c_str(), nullptr);
    CHECK(std::abs(x - 0.5) <= 1e-9);
  }

  // the anchor flag applies only to the anchored solvers
  const int code =
      run("solve --solver ppbp --matrix " + dir.file("A.csv") + " --rhs " +
              dir.file("b.txt") + " --box " + dir.file("box.txt") +
              " --tau 1 --u " + dir.file("b.txt") + " --out " + dir.file("x"),
          dir.file("out.log"), dir.file("err.log"));
  CHECK(code == 1);
}

TEST_CASE("iteration-cap exhaustion exits with code 2") {
  TempDir dir;
  write_text(dir.file("A.csv"), "1\n");
  write_text(dir.file("b.txt"), "0.5\n");
  write_text(dir.file("box.txt"), "-1 1\n");

  const int code =
      run("solve --matrix " + dir.file("A.csv") + " --rhs " + dir.file("b.txt") +
              " --box " + dir.file("box.txt") +
              " --tau 1 --h 1 --tol-feas 1e-13 --max-iter 2 --out " +
              dir.file("x.txt"),
          dir.file("out.log"), dir.file("err.log"));
  CHECK(code == 2);
  // the partial iterate and the manifest are still written
  CHECK(fs::exists(dir.file("x.txt")));
  const auto manifest = nlohmann::json::parse(read_text(dir.file("x.txt") +
                                                        ".manifest.json"));
  CHECK(manifest["resolved"]["termination"] == "MAX_ITER");
}

TEST_CASE("fbs solver via the CLI") {
  TempDir dir;
  write_text(dir.file("A.csv"), "1\n");
  write_text(dir.file("b.txt"), "1\n");
  write_text(dir.file("box.txt"), "0 2\n");

  const int code =
      run("solve --solver fbs --matrix " + dir.file("A.csv") + " --rhs " +
              dir.file("b.txt") + " --box " + dir.file("box.txt") +
              " --tau 0.5 --tol-feas 1e-13 --max-iter 100000 --out " +
              dir.file("x.txt"),
          dir.file("out.log"), dir.file("err.log"));
  CHECK(code == 0);
  const double x = std::strtod(read_text(dir.file("x.txt")).c_str(), nullptr);
  CHECK(std::abs(x - 0.5) <= 1e-8);
}

TEST_CASE("sweep reruns are byte-identical and manifests reproduce them") {
  TempDir dir;
  const std::string out1 = dir.file("r1.csv");
  const std::string out2 = dir.file("r2.csv");
  const std::string flags =
      " --m 10 --n 20 --s-range 2:4:2 --trials 2 --tau 10 --seed 42"
      " --tol-feas 1e-12 --max-iter 5000 --out ";

  CHECK(run("sweep" + flags + out1, dir.file("o1.log"), dir.file("e1.log")) == 0);
  CHECK(run("sweep" + flags + out2, dir.file("o2.log"), dir.file("e2.log")) == 0);
  const std::string text1 = read_text(out1);
  CHECK(text1 == read_text(out2));
  CHECK(text1.rfind("s,trials,", 0) == 0);
  // header + one row per sparsity level
  CHECK(std::count(text1.begin(), text1.end(), '\n') == 3);

  // rebuild the command from the manifest alone
  const auto manifest = nlohmann::json::parse(read_text(out1 + ".manifest.json"));
  const auto& p = manifest["parameters"];
  const std::string out3 = dir.file("r3.csv");
  std::ostringstream cmd;
  cmd << "sweep --m " << p["m"].get<std::size_t>() << " --n "
      << p["n"].get<std::size_t>() << " --s-range "
      << p["s_range"].get<std::string>() << " --trials "
      << p["trials"].get<std::size_t>() << " --tau " << p["tau"].get<double>()
      << " --box " << p["box"].get<std::string>() << " --tol-feas "
      << p["tol_feas"].get<double>() << " --max-iter "
      << p["max_iter"].get<std::size_t>() << " --seed "
      << p["seed"].get<std::uint64_t>() << " --out " << out3;
  CHECK(run(cmd.str(), dir.file("o3.log"), dir.file("e3.log")) == 0);
  CHECK(read_text(out3) == text1);
}

TEST_CASE("check batteries pass on a fresh build") {
  TempDir dir;
  const int code = run("check", dir.file("out.log"), dir.file("err.log"));
  CHECK(code == 0);
  const std::string log = read_text(dir.file("out.log"));
  CHECK(log.find("key identity") != std::string::npos);
  CHECK(log.find("FAIL") == std::string::npos);
}
