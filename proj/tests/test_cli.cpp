#include <doctest.h>

#include "cli/commands.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using fock::cli::run;

namespace {

struct Scratch {
  fs::path dir;
  Scratch() {
    static int counter = 0;
    dir = fs::temp_directory_path() /
          ("fock_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string file(const std::string &name, const std::string &text) const {
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string out() const { return (dir / "out").string(); }
};

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "fock_toeplitz");
  std::vector<char *> argv;
  for (auto &a : args)
    argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

nlohmann::json load_json(const fs::path &p) { return nlohmann::json::parse(slurp(p)); }

const char *kRadialU = R"(
u:
  name: "|z|^2"
  modes:
    - {j: 0, kind: monomial, p: 2}
)";

const char *kZ = R"(
v:
  name: z
  modes:
    - {j: 1, kind: monomial, p: 1}
)";

} // namespace

TEST_CASE("matrix: u = 1 gives the identity") {
  Scratch t;
  const auto cfg = t.file("c.yaml", "s_values: [0.7]\nN: 4\nu:\n  modes:\n    - {kind: monomial, p: 0}\n");
  const Result r = invoke({"matrix", "--config", cfg, "--out", t.out(), "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream csv(slurp(fs::path(t.out()) / "matrix_u_s0.csv"));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "row,col,re,im");
  int count = 0;
  while (std::getline(csv, line)) {
    int row, col;
    double re, im;
    char c;
    std::istringstream ls(line);
    ls >> row >> c >> col >> c >> re >> c >> im;
    CHECK(std::abs(re - (row == col ? 1.0 : 0.0)) < 1e-13);
    CHECK(im == 0.0);
    ++count;
  }
  CHECK(count == 16);
  CHECK_FALSE(fs::exists(fs::path(t.out()) / "matrix_u_s0.json"));
}

TEST_CASE("matrix: |z|^2 at s = 0, N = 3 is diag(1, 2, 3)") {
  Scratch t;
  const auto cfg = t.file("c.yaml", std::string("N: 3\n") + kRadialU);
  REQUIRE(invoke({"matrix", "--config", cfg, "--out", t.out(), "--quiet"}).code == 0);
  const auto j = load_json(fs::path(t.out()) / "matrix_u_s0.json");
  CHECK(j["exact_band"] == 0);
  REQUIRE(j["entries"].size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(j["entries"][i][0] == i);
    CHECK(j["entries"][i][1] == i);
    CHECK(j["entries"][i][2].get<double>() == doctest::Approx(i + 1.0).epsilon(1e-13));
  }
}

TEST_CASE("configuration errors exit with code 2 and name the field") {
  Scratch t;
  SUBCASE("missing N") {
    const auto cfg = t.file("c.yaml", kRadialU);
    const Result r = invoke({"matrix", "--config", cfg, "--out", t.out()});
    CHECK(r.code == 2);
    CHECK(r.err.find("'N'") != std::string::npos);
  }
  SUBCASE("N too small for the window") {
    const auto cfg = t.file("c.yaml", std::string("N: 4\nk_max: 3\n") + kRadialU + kZ);
    const Result r = invoke({"criterion", "--config", cfg, "--out", t.out()});
    CHECK(r.code == 2);
    CHECK(r.err.find("k_max + j_max + 2 = 6") != std::string::npos);
  }
  SUBCASE("unknown field with line number") {
    const auto cfg = t.file("c.yaml", "N: 4\nbogus: 1\n");
    const Result r = invoke({"matrix", "--config", cfg});
    CHECK(r.code == 2);
    CHECK(r.err.find("'bogus' (line 2)") != std::string::npos);
  }
  SUBCASE("wrong type") {
    const auto cfg = t.file("c.yaml", "N: four\n");
    const Result r = invoke({"matrix", "--config", cfg});
    CHECK(r.code == 2);
    CHECK(r.err.find("'N' (line 1)") != std::string::npos);
  }
  SUBCASE("malformed YAML") {
    const auto cfg = t.file("c.yaml", "N: [1, 2\n");
    CHECK(invoke({"matrix", "--config", cfg}).code == 2);
  }
  SUBCASE("missing config file and bad flags") {
    CHECK(invoke({"matrix", "--config", (t.dir / "nope.yaml").string()}).code == 2);
    CHECK(invoke({"matrix"}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    const auto cfg = t.file("c.yaml", std::string("N: 3\n") + kRadialU);
    CHECK(invoke({"matrix", "--config", cfg, "--format", "xml"}).code == 2);
  }
  SUBCASE("negative order and nonpositive tolerance") {
    CHECK(invoke({"matrix", "--config", t.file("a.yaml", std::string("N: 3\ns_values: [-1]\n") + kRadialU)}).code == 2);
    CHECK(invoke({"matrix", "--config",
                  t.file("b.yaml", std::string("N: 3\ntolerances: {quad_abs: 0}\n") + kRadialU)})
              .code == 2);
  }
}

TEST_CASE("commutator residual at the (1, 0) window entry is sqrt(s + 1)") {
  Scratch t;
  const auto cfg = t.file("c.yaml", std::string("s_values: [0, 3]\nN: 3\nk_max: 0\nj_max: 1\n") + kRadialU + kZ);
  REQUIRE(invoke({"commutator", "--config", cfg, "--out", t.out(), "--quiet"}).code == 0);
  const auto j = load_json(fs::path(t.out()) / "commutator_summary.json");
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["residual"].get<double>() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(j["rows"][1]["residual"].get<double>() == doctest::Approx(2.0).epsilon(1e-13));
  for (const auto &row : j["rows"]) {
    CHECK(row["row"] == 1);
    CHECK(row["col"] == 0);
    CHECK(row["commutes"] == false);
  }
}

TEST_CASE("commutator of two radial symbols vanishes on the window") {
  Scratch t;
  const auto cfg = t.file("c.yaml", std::string("s_values: [0, 0.5, 1, 2.3]\nN: 32\n") + kRadialU +
                                        "v:\n  modes:\n    - {kind: exponential, a: 1}\n");
  REQUIRE(invoke({"commutator", "--config", cfg, "--out", t.out(), "--quiet"}).code == 0);
  for (const auto &row : load_json(fs::path(t.out()) / "commutator_summary.json")["rows"]) {
    CHECK(row["residual"].get<double>() <= 1e-10);
    CHECK(row["commutes"] == true);
  }
}

TEST_CASE("criterion verdicts") {
  Scratch t;
  auto verdict = [&](const std::string &body) {
    const auto cfg = t.file("c.yaml", "N: 8\nk_max: 4\n" + body);
    const Result r = invoke({"criterion", "--config", cfg, "--out", t.out(), "--quiet"});
    REQUIRE(r.code == 0);
    return load_json(fs::path(t.out()) / "criterion.json")["reports"][0]["verdict"];
  };
  CHECK(verdict(std::string(kRadialU) + "v:\n  modes:\n    - {kind: gaussian, a: 1, p: 1}\n")["kind"] ==
        "consistent_radial");
  const auto c = verdict(std::string("u:\n  modes:\n    - {kind: monomial, p: 0, coeff: 2}\n") + kZ);
  CHECK(c["kind"] == "inconclusive");
  CHECK(c["reason"] == "u constant");
  const auto n = verdict(std::string(kRadialU) + kZ);
  CHECK(n["kind"] == "nonradial_mode_detected");
  CHECK(n["modes"] == nlohmann::json::array({1}));
  const std::string csv = slurp(fs::path(t.out()) / "criterion.csv");
  CHECK(csv.rfind("s,j,k,abs_phi,abs_psi,abs_product,matrix_discrepancy\n", 0) == 0);
}

TEST_CASE("criterion rejects a nonradial u") {
  Scratch t;
  const auto cfg = t.file("c.yaml", "N: 8\nk_max: 2\nu:\n  modes:\n    - {j: 1, kind: monomial, p: 1}\n" +
                                        std::string(kZ));
  const Result r = invoke({"criterion", "--config", cfg, "--out", t.out()});
  CHECK(r.code == 2);
  CHECK(r.err.find("radial u") != std::string::npos);
}

namespace {
std::string polar_csv(int radii, int M, const std::function<std::complex<double>(std::complex<double>)> &u) {
  std::ostringstream os;
  os.precision(17);
  os << "r,theta,re,im\n";
  for (int i = 1; i <= radii; ++i)
    for (int k = 0; k < M; ++k) {
      const double r = 0.1 * i, th = 2.0 * M_PI * k / M;
      const auto v = u(std::polar(r, th));
      os << r << ',' << th << ',' << v.real() << ',' << v.imag() << '\n';
    }
  return os.str();
}
} // namespace

TEST_CASE("decompose") {
  Scratch t;
  SUBCASE("Re z") {
    t.file("re.csv", polar_csv(30, 8, [](auto z) { return std::complex<double>(z.real()); }));
    const auto cfg = t.file("c.yaml", "j_max: 3\nsamples: re.csv\n");
    REQUIRE(invoke({"decompose", "--config", cfg, "--out", t.out(), "--quiet"}).code == 0);
    const auto j = load_json(fs::path(t.out()) / "decompose.json");
    CHECK(j["modes"] == nlohmann::json::array({-1, 1}));
    CHECK(j["max_sample_error"].get<double>() <= 1e-10);
    CHECK(j["l2_residual"][0]["residual"].get<double>() <= 1e-10);
    CHECK(fs::exists(fs::path(t.out()) / "modes.csv"));
  }
  SUBCASE("radial exp(-r) via --samples") {
    const auto samples = t.file("e.csv", polar_csv(20, 6, [](auto z) { return std::complex<double>(std::exp(-std::abs(z))); }));
    const auto cfg = t.file("c.yaml", "j_max: 2\n");
    REQUIRE(invoke({"decompose", "--config", cfg, "--samples", samples, "--out", t.out(), "--quiet"}).code == 0);
    CHECK(load_json(fs::path(t.out()) / "decompose.json")["modes"] == nlohmann::json::array({0}));
  }
  SUBCASE("M = 3 with j_max = 2 aliases") {
    t.file("a.csv", polar_csv(5, 3, [](auto z) { return z; }));
    const auto cfg = t.file("c.yaml", "j_max: 2\nsamples: a.csv\n");
    const Result r = invoke({"decompose", "--config", cfg, "--out", t.out()});
    CHECK(r.code == 2);
    CHECK(r.err.find("need M >= 6") != std::string::npos);
  }
  SUBCASE("malformed samples") {
    t.file("bad.csv", "r,theta,re,im\n1,0,x,0\n");
    const auto cfg = t.file("c.yaml", "j_max: 1\nsamples: bad.csv\n");
    const Result r = invoke({"decompose", "--config", cfg, "--out", t.out()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
  }
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  Scratch t;
  const std::string body = std::string("s_values: [0, 0.5]\nN: 10\nk_max: 5\n") + kRadialU +
                           "v:\n  modes:\n    - {j: 1, kind: gaussian, a: 0.5, p: 1}\n"
                           "    - {j: -2, kind: polynomial, coefficients: [0, 0, [1, -0.5]]}\n";
  const auto cfg = t.file("c.yaml", body);
  const fs::path a = t.dir / "a", b = t.dir / "b";
  setenv("FOCK_TOEPLITZ_THREADS", "1", 1);
  REQUIRE(invoke({"criterion", "--config", cfg, "--out", a.string(), "--quiet"}).code == 0);
  setenv("FOCK_TOEPLITZ_THREADS", "4", 1);
  REQUIRE(invoke({"criterion", "--config", cfg, "--out", b.string(), "--quiet"}).code == 0);
  unsetenv("FOCK_TOEPLITZ_THREADS");
  CHECK(slurp(a / "criterion.json") == slurp(b / "criterion.json"));
  CHECK(slurp(a / "criterion.csv") == slurp(b / "criterion.csv"));
}

TEST_CASE("golden criterion report") {
  Scratch t;
  const auto cfg = t.file("c.yaml", std::string("N: 4\nk_max: 1\n") + kRadialU + kZ);
  REQUIRE(invoke({"criterion", "--config", cfg, "--out", t.out(), "--format", "json", "--quiet"}).code == 0);
  CHECK(slurp(fs::path(t.out()) / "criterion.json") ==
        slurp(fs::path(FOCK_GOLDEN_DIR) / "criterion_r2_z.json"));
}
