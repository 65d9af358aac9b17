#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "bjq/io.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "bjq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = bjq::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

size_t count_lines(const std::string& s) { return static_cast<size_t>(std::count(s.begin(), s.end(), '\n')); }

fs::path scratch_dir() {
  const fs::path d = fs::temp_directory_path() / ("bjq_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

// Keeps BJQ_DEFAULT_HBAR unset outside the scope of a test.
struct EnvGuard {
  explicit EnvGuard(const char* value) { ::setenv("BJQ_DEFAULT_HBAR", value, 1); }
  ~EnvGuard() { ::unsetenv("BJQ_DEFAULT_HBAR"); }
};

}  // namespace

TEST_CASE("wigner csv has one row per phase-space point") {
  const Result r = call({"--n-points", "16", "--half-length", "4", "wigner", "--signal", "hermite:1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("x,p,re,im\n", 0) == 0);
  CHECK(count_lines(r.out) == 16 * 16 + 1);
}

TEST_CASE("distribution subcommands run") {
  for (const std::vector<std::string>& extra :
       {std::vector<std::string>{"tau-wigner", "--tau", "0.3"}, {"bjw"}, {"bjw", "--method", "quadrature"},
        {"rihaczek"}, {"ambiguity", "--signal2", "gaussian:0.5,0,1"}}) {
    std::vector<std::string> args{"--n-points", "16", "--half-length", "4"};
    args.insert(args.end(), extra.begin(), extra.end());
    const Result r = call(args);
    CHECK_MESSAGE(r.code == 0, extra.front());
    CHECK(count_lines(r.out) == 16 * 16 + 1);
  }
  CHECK(call({"--n-points", "16", "tau-wigner"}).code == 2);
  CHECK(call({"--n-points", "16", "bjw", "--method", "simpson"}).code == 2);
}

TEST_CASE("json and pgm output formats") {
  const Result j = call({"--n-points", "8", "--half-length", "3", "--format", "json", "wigner"});
  REQUIRE(j.code == 0);
  const json doc = json::parse(j.out);
  CHECK(doc["n_points"].get<int>() == 8);
  CHECK(doc["re"].size() == 64u);

  CHECK(call({"--n-points", "8", "--format", "pgm", "wigner"}).code == 2);
  const fs::path dir = scratch_dir();
  const std::string img = (dir / "w.pgm").string();
  REQUIRE(call({"--n-points", "32", "--half-length", "5", "--format", "pgm", "--out", img, "bjw"}).code == 0);
  CHECK(bjq::read_pgm(img).width == 32);
  CHECK(fs::exists(img + ".json"));
  fs::remove_all(dir);
}

TEST_CASE("quantize prints normal-ordered polynomials") {
  const Result w = call({"quantize", "--scheme", "weyl", "--monomial", "1,1"});
  REQUIRE(w.code == 0);
  CHECK(w.out == "X P - (1/2)iħ\n");
  const Result bj = call({"quantize", "--scheme", "bj", "--monomial", "1,1"});
  CHECK(bj.out == w.out);
  const Result t0 = call({"quantize", "--scheme", "tau:0", "--monomial", "1,1"});
  CHECK(t0.out == "X P - iħ\n");
  CHECK(call({"quantize", "--scheme", "weyl", "--monomial", "1;1"}).code == 2);
  CHECK(call({"quantize", "--scheme", "nope", "--monomial", "1,1"}).code == 2);
  CHECK(call({"quantize"}).code == 2);
}

TEST_CASE("commutator reports the discrepancy with the factorial-free formula") {
  const Result r = call({"commutator", "--m", "2", "--n", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("closed form without k!") != std::string::npos);
  const Result j = call({"--format", "json", "commutator", "--m", "2", "--n", "2"});
  const json doc = json::parse(j.out);
  CHECK_FALSE(doc["agree"].get<bool>());
  const Result one = call({"--format", "json", "commutator", "--m", "1", "--n", "1"});
  CHECK(json::parse(one.out)["agree"].get<bool>());
  CHECK(call({"commutator", "--m", "-1"}).code == 2);
}

TEST_CASE("crehan levels") {
  const Result r = call({"crehan", "--N", "0", "--lambda", "1", "--alpha", "0", "--exact"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "-5/2\n");
  const Result f = call({"crehan", "--N", "0", "--lambda", "1", "--alpha", "0"});
  CHECK(std::stod(f.out) == -2.5);
  const Result z = call({"crehan", "--N", "3", "--lambda", "0", "--exact"});
  CHECK(z.out == "7/2\n");
  CHECK(call({"crehan", "--N", "1", "--lambda", "x"}).code == 2);
}

TEST_CASE("apply-op with the position symbol multiplies by x") {
  const Result r =
      call({"--n-points", "32", "--half-length", "5", "apply-op", "--symbol", "monomial:1,0", "--scheme", "bj"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,re,im");
  const double c = std::pow(std::numbers::pi, -0.25);
  double worst = 0.0;
  while (std::getline(in, line)) {
    double x, re, im;
    char comma;
    std::istringstream row(line);
    row >> x >> comma >> re >> comma >> im;
    worst = std::max(worst, std::abs(re - x * c * std::exp(-x * x / 2)) + std::abs(im));
  }
  CHECK(worst < 1e-10);
  CHECK(call({"apply-op", "--symbol", "banana"}).code == 2);
  CHECK(call({"apply-op", "--symbol", "gaussian:x"}).code == 2);
}

TEST_CASE("check subcommands report json") {
  const Result p = call({"--n-points", "64", "--half-length", "6", "pairing-check", "--signal2", "hermite:1",
                         "--symbol", "xp_gaussian", "--scheme", "tau:3/10"});
  REQUIRE(p.code == 0);
  CHECK(json::parse(p.out)["passed"].get<bool>());

  const Result c = call({"--n-points", "64", "--half-length", "6", "covariance-test", "--scheme", "bj",
                         "--generator", "vp:1", "--symbol", "xp_gaussian"});
  REQUIRE(c.code == 0);
  const json cd = json::parse(c.out);
  CHECK(cd["defect"].get<double>() > 1e-3);
  CHECK(cd["theta_invariance"].get<double>() > 0.1);
  CHECK(call({"covariance-test", "--scheme", "tau:1/2"}).code == 2);
  CHECK(call({"covariance-test", "--generator", "ml:9"}).code == 2);

  const Result u = call({"--n-points", "64", "--half-length", "6", "uncertainty", "--state",
                         "mix:0.5@gaussian:0,0,1;0.5@hermite:1"});
  REQUIRE(u.code == 0);
  const json ud = json::parse(u.out);
  CHECK(ud["satisfied"].get<bool>());
  CHECK(ud["matrix_check_passed"].get<bool>());
  CHECK(call({"uncertainty", "--state", "mix:0.5gaussian:0,0,1"}).code == 2);
}

TEST_CASE("ghost energy drops under Born-Jordan") {
  const Result r = call({"ghost"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["bjw_energy"].get<double>() < doc["wigner_energy"].get<double>());
  CHECK(doc["ratio"].get<double>() < 1.0);
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"--n-points", "7", "wigner"}).code == 2);
  CHECK(call({"--hbar", "-1", "wigner"}).code == 2);
  CHECK(call({"--quad-nodes", "0", "bjw"}).code == 2);
  CHECK(call({"--format", "xml", "wigner"}).code == 2);
  CHECK(call({"--help"}).code == 0);

  // A zero symbol is bad input; a polynomial symbol through the twist path is
  // well formed but its symplectic Fourier transform never decays.
  const fs::path dir = scratch_dir();
  const std::string zero = (dir / "zero.csv").string();
  bjq::PhaseGrid pg = bjq::make_phase_grid(16, 4.0, 1.0);
  bjq::write_csv(bjq::PhaseFunction(pg), zero);
  CHECK(call({"--n-points", "16", "--half-length", "4", "covariance-test", "--symbol", "csv:" + zero}).code == 2);
  fs::remove_all(dir);

  const Result r = call({"--n-points", "32", "--half-length", "5", "apply-op", "--symbol", "monomial:1,1", "--method",
                         "twist", "--scheme", "bj"});
  CHECK(r.code == 1);
  CHECK(r.err.find("numeric failure") != std::string::npos);
  CHECK(call({"--n-points", "32", "--half-length", "5", "apply-op", "--symbol", "gaussian", "--method", "twist"}).code ==
        0);
  CHECK(call({"apply-op", "--symbol", "gaussian", "--method", "fft"}).code == 2);
}

TEST_CASE("default hbar comes from the environment") {
  {
    EnvGuard env("2");
    const Result r = call({"crehan", "--N", "0", "--lambda", "0", "--exact"});
    CHECK(r.out == "1\n");
    const Result flag = call({"--hbar", "0.5", "crehan", "--N", "0", "--lambda", "0", "--exact"});
    CHECK(flag.out == "1/4\n");
  }
  {
    EnvGuard env("abc");
    const Result r = call({"crehan", "--N", "0"});
    CHECK(r.code == 2);
    CHECK(r.err.find("BJQ_DEFAULT_HBAR") != std::string::npos);
  }
  CHECK(call({"crehan", "--N", "0", "--lambda", "0", "--exact"}).out == "1/2\n");
}

TEST_CASE("config file supplies defaults and flags override it") {
  const fs::path dir = scratch_dir();
  const std::string cfg = (dir / "run.ini").string();
  std::ofstream(cfg) << "n-points = 8\nhalf-length = 3\n";

  const Result r = call({"--config", cfg, "wigner"});
  REQUIRE(r.code == 0);
  CHECK(count_lines(r.out) == 8 * 8 + 1);
  const Result over = call({"--config", cfg, "--n-points", "12", "wigner"});
  CHECK(count_lines(over.out) == 12 * 12 + 1);
  CHECK(call({"--config", (dir / "missing.ini").string(), "wigner"}).code == 2);
  fs::remove_all(dir);
}
