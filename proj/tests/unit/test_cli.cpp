#include <doctest.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tra_cli/commands.hpp"

using namespace tra::cli;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tra");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Data rows of a CSV table, metadata and header removed.
std::vector<std::vector<std::string>> csv_rows(const std::string& text, std::vector<std::string>* header = nullptr) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  bool seen_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!seen_header) {
      seen_header = true;
      if (header) *header = cells;
      continue;
    }
    rows.push_back(cells);
  }
  return rows;
}

double number(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  REQUIRE(res.ec == std::errc());
  return v;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("spectrum at lambda_star reproduces the oscillator levels") {
    const Run r = run({"spectrum", "--levels", "3"});
    CHECK(r.code == 0);
    std::vector<std::string> header;
    const auto rows = csv_rows(r.out, &header);
    CHECK(header == std::vector<std::string>{"n", "E_matrix", "E_analytic", "abs_diff", "E_omega2"});
    REQUIRE(rows.size() == 3);
    CHECK(number(rows[0][1]) == 1.5);
    CHECK(number(rows[1][1]) == 3.5);
    CHECK(number(rows[2][1]) == 5.5);
    CHECK(r.out.find("# generated_by: tra ") == 0);
    CHECK(r.out.find('\r') == std::string::npos);
  }

  TEST_CASE("magnetic-field spectrum") {
    const Run r = run({"--system", "bfield", "--bfield", "0.5", "--ell", "1", "--mu-az", "1", "spectrum", "--levels", "2"});
    CHECK(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 2);
    for (const auto& row : rows) CHECK(number(row[3]) <= 1e-10);
  }

  TEST_CASE("detuned scale reports differences without failing") {
    const Run r = run({"--lambda", "1.4", "--basis-size", "300", "spectrum", "--levels", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("tolerance_applies: no") != std::string::npos);
    for (const auto& row : csv_rows(r.out)) CHECK(number(row[3]) < 1e-8);
  }

  TEST_CASE("exit codes") {
    CHECK(run({"--zeta", "abc", "spectrum"}).code == 2);
    CHECK(run({"--bfield", "1", "spectrum"}).code == 2);
    CHECK(run({"--levels", "60", "spectrum"}).code == 2);
    CHECK(run({"spectrum", "--bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--q", "-1", "--zeta", "2", "spectrum"}).code == 3);
    CHECK(run({"wavefunction", "--terms", "1,5"}).code == 4);
    CHECK(run({"wavefunction", "--terms", "1"}).code == 0);
    CHECK(run({"--help"}).code == 0);
    const Run tight = run({"--tolerance", "-1", "spectrum"});
    CHECK((tight.code == 1 || tight.code == 2));
  }

  TEST_CASE("output is byte-identical across runs") {
    const std::vector<std::string> args{"--system", "bfield", "--bfield", "0.7", "--ell", "2", "--lambda", "0.9",
                                        "--basis-size", "80", "sweep", "--param", "mu_az", "--values", "-2,-1,0,1,2"};
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }

  TEST_CASE("csv and json carry the same numbers") {
    const std::vector<std::string> base{"--zeta", "0.4", "--ell", "1", "--lambda", "0.8", "--basis-size", "120"};
    auto csv_args = base;
    csv_args.push_back("spectrum");
    auto json_args = base;
    json_args.insert(json_args.end(), {"--format", "json", "spectrum"});
    const Run c = run(csv_args);
    const Run j = run(json_args);
    REQUIRE(c.code == 0);
    REQUIRE(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    std::vector<std::string> header;
    const auto rows = csv_rows(c.out, &header);
    CHECK(doc["columns"].get<std::vector<std::string>>() == header);
    REQUIRE(doc["rows"].size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t k = 0; k < header.size(); ++k) {
        CHECK(doc["rows"][i][k].get<double>() == number(rows[i][k]));
      }
    }
    CHECK(doc["metadata"]["zeta"].get<double>() == 0.4);
  }

  TEST_CASE("config file with flags taking precedence") {
    {
      std::ofstream f("cli_test.cfg");
      f << "# test configuration\nsystem = efield\nzeta = 0.5\nbasis_size = 20\nlevels = 2\n";
    }
    const Run a = run({"--config", "cli_test.cfg", "spectrum"});
    CHECK(a.code == 0);
    CHECK(csv_rows(a.out).size() == 2);
    CHECK(a.out.find("# zeta: 0.5") != std::string::npos);
    const Run b = run({"--config", "cli_test.cfg", "--zeta", "0.25", "spectrum"});
    CHECK(b.out.find("# zeta: 0.25") != std::string::npos);
    {
      std::ofstream f("cli_bad.cfg");
      f << "colour = blue\n";
    }
    CHECK(run({"--config", "cli_bad.cfg", "spectrum"}).code == 2);
    CHECK(run({"--config", "missing.cfg", "spectrum"}).code == 2);
  }

  TEST_CASE("--out writes a file") {
    const Run r = run({"--out", "cli_out.csv", "spectrum", "--levels", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f("cli_out.csv");
    std::stringstream text;
    text << f.rdbuf();
    CHECK(csv_rows(text.str()).size() == 1);
  }

  TEST_CASE("sweep keeps value order and shows the Zeeman slope") {
    const Run r = run({"--system", "bfield", "--ell", "1", "--mu-az", "1", "--levels", "1", "sweep", "--param", "B",
                       "--values", "0.8,0.2,0.4"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 3);
    const double bs[] = {0.8, 0.2, 0.4};
    for (int i = 0; i < 3; ++i) {
      CHECK(number(rows[i][0]) == bs[i]);
      CHECK(number(rows[i][4]) == doctest::Approx(-0.5 * bs[i]).epsilon(1e-10));
    }
    CHECK(run({"sweep", "--param", "B", "--values", "1"}).code == 2);
    CHECK(run({"--system", "bfield", "--ell", "1", "sweep", "--param", "mu_az", "--values", "0.5"}).code == 2);
  }

  TEST_CASE("wavefunction metadata and columns") {
    const Run r = run({"--zeta", "1", "--lambda", "1", "wavefunction", "--terms", "1,20", "--r-points", "5"});
    REQUIRE(r.code == 0);
    std::vector<std::string> header;
    const auto rows = csv_rows(r.out, &header);
    CHECK(header == std::vector<std::string>{"r", "psi_1", "psi_20"});
    CHECK(rows.size() == 5);
    CHECK(number(rows.back()[0]) == 5.0);
    CHECK(r.out.find("# cosh_theta: 2") != std::string::npos);
    CHECK(r.out.find("# theta: 1.316957896924816") != std::string::npos);
    CHECK(r.out.find("# expansion: minimal") != std::string::npos);
  }

  TEST_CASE("verify") {
    const Run ok = run({"verify", "--suite", "basis"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("PASS  [basis]") != std::string::npos);
    CHECK(ok.out.find("FAIL") == std::string::npos);
    const Run bad = run({"verify", "--suite", "basis", "--inject-fault"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CHECK(run({"verify", "--suite", "nothing"}).code == 2);
  }
}
