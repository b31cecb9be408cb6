// End-to-end checks of the cmc-kit binary. The test runner exports
// CMC_KIT_BIN with the path to the built executable.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <sys/wait.h>

namespace {

struct RunResult {
  int code;
  std::string output;
};

const char* binary() {
  const char* bin = std::getenv("CMC_KIT_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "CMC_KIT_BIN must point at the cmc-kit binary");
  return bin;
}

RunResult run(const std::string& args) {
  const std::string out_file = "cli_capture.txt";
  const std::string cmd = std::string("\"") + binary() + "\" " + args + " > " + out_file + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out_file);
  std::ostringstream text;
  text << in.rdbuf();
  r.output = text.str();
  return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::istringstream cols(line);
    std::string cell;
    while (std::getline(cols, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("report").code == 2);                             // missing --surface
  CHECK(run("report --surface enneper --format csv").code == 2);
  CHECK(run("profile --surface enneper --format json").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("catalog lists every surface kind") {
  const RunResult plain = run("catalog");
  CHECK(plain.code == 0);
  for (const char* kind : {"sphere-cap", "plane-disc", "enneper", "cylinder-annulus",
                           "weierstrass-minimal"})
    CHECK(plain.output.find(kind) != std::string::npos);

  const RunResult machine = run("catalog --json");
  CHECK(machine.code == 0);
  const auto doc = nlohmann::json::parse(machine.output);
  CHECK(doc.is_array());
  CHECK(doc.size() == 5);
  CHECK(doc[0].contains("kind"));
  CHECK(doc[0].contains("params"));
}

TEST_CASE("profile emits the declared CSV schema") {
  const RunResult r = run("profile --surface enneper --n 256");
  CHECK(r.code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 257);
  const std::vector<std::string> header = {"t",       "x",       "y",     "z",    "nu2",
                                           "ds_dt",   "kappa_g", "kappa_n", "tau_g"};
  CHECK(rows[0] == header);
  for (size_t k = 1; k < rows.size(); ++k) REQUIRE(rows[k].size() == 9);

  // Column 8 is tau_g; the Enneper boundary torsion is -sin(2t)/2.
  for (size_t k = 1; k < rows.size(); ++k) {
    const double t = std::stod(rows[k][0]);
    const double tau = std::stod(rows[k][8]);
    CHECK(std::abs(tau + 0.5 * std::sin(2.0 * t)) < 1e-10);
  }
}

TEST_CASE("sphere cap profile has constant normal curvature") {
  const RunResult r = run("profile --surface sphere-cap --H 1 --n 128");
  CHECK(r.code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 129);
  for (size_t k = 1; k < rows.size(); ++k)
    CHECK(std::abs(std::stod(rows[k][7]) - 1.0) < 1e-10);
}

TEST_CASE("report classifies the catalog correctly") {
  const RunResult enneper = run("report --surface enneper --n 512");
  CHECK(enneper.code == 0);
  const auto e = nlohmann::json::parse(enneper.output);
  CHECK(e["classification"] == "StrictlyBounded");
  CHECK(std::abs(e["I1"].get<double>()) <= 1e-9);
  CHECK(std::abs(e["fourier"]["pairing_residual"].get<double>()) <= 1e-9);

  const RunResult cap = run("report --surface sphere-cap --H 1");
  CHECK(cap.code == 0);
  CHECK(nlohmann::json::parse(cap.output)["classification"] == "TotallyUmbilic");

  const RunResult cyl = run("report --surface cylinder-annulus --R 1");
  CHECK(cyl.code == 0);
  const auto c = nlohmann::json::parse(cyl.output);
  CHECK(c["classification"] == "Violation");
  REQUIRE(c["warnings"].size() > 0);
  CHECK(c["warnings"][0].get<std::string>().find("non-disc topology") != std::string::npos);
}

TEST_CASE("report output is byte-stable and honors --out") {
  const RunResult once = run("report --surface enneper --n 256 --grid-n 16");
  const RunResult twice = run("report --surface enneper --n 256 --grid-n 16");
  CHECK(once.code == 0);
  CHECK(once.output == twice.output);

  const RunResult to_file = run("report --surface enneper --n 256 --grid-n 16 --out report_out.json");
  CHECK(to_file.code == 0);
  std::ifstream in("report_out.json");
  std::ostringstream text;
  text << in.rdbuf();
  CHECK(text.str() == once.output);
}

TEST_CASE("descriptor files round-trip through the CLI") {
  {
    std::ofstream d("descriptor_cli.txt");
    d << "surface weierstrass-minimal\n"
      << "fpoly 1\n"
      << "gpoly 0 0 1\n"
      << "domain-radius 1\n";
  }
  const RunResult r = run("report --surface descriptor_cli.txt");
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["classification"] == "StrictlyBounded");
  CHECK(doc["umbilics"]["globally_umbilic"] == false);
  CHECK(doc["umbilics"]["q_max"].get<double>() > 0.5);

  // The interior zero of the Hopf coefficient sits between lattice points;
  // a loose tolerance picks up the four nearest ones.
  const RunResult loose = run("report --surface descriptor_cli.txt --tol 0.05");
  CHECK(loose.code == 0);
  CHECK(nlohmann::json::parse(loose.output)["umbilics"]["points"].size() == 4);

  const RunResult missing = run("report --surface no_such_file.txt");
  CHECK(missing.code == 1);
  CHECK(missing.output.find("error:") != std::string::npos);
}

TEST_CASE("surface construction failures exit nonzero") {
  const RunResult r = run("report --surface sphere-cap --H -3");
  CHECK(r.code == 1);
  CHECK(r.output.find("error:") != std::string::npos);
}

TEST_CASE("verify runs the acceptance criteria") {
  const RunResult filtered = run("verify --filter capillary");
  CHECK(filtered.code == 0);
  CHECK(filtered.output.find("PASS capillary-torsion") != std::string::npos);
  CHECK(filtered.output.find("1/1") != std::string::npos);

  CHECK(run("verify --filter zzz").code == 2);
}

TEST_CASE("fault injection makes verify fail and names the criterion") {
  const RunResult r = run("verify --filter fourier-pairing --inject-tau-sign-flip");
  CHECK(r.code == 1);
  CHECK(r.output.find("FAIL fourier-pairing") != std::string::npos);
}
