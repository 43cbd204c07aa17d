#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "specden/carry_system.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SPECDEN_CLI_PATH) + " " + args + " 2>&1";
  CliResult result;
  std::FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe) != nullptr) result.output += buf;
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("verify exits zero on valid systems") {
  for (const char* bits : {"2", "3"}) {
    const auto r = run_cli(std::string("verify --bits ") + bits);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS") != std::string::npos);
  }
}

TEST_CASE("verify rejects bits below two as a usage error") {
  const auto r = run_cli("verify --bits 1");
  CHECK(r.exit_code == 2);
}

TEST_CASE("verify --json emits a machine-readable report") {
  const auto r = run_cli("verify --bits 3 --json");
  CHECK(r.exit_code == 0);
  const json rep = json::parse(r.output);
  CHECK(rep["ok"] == true);
  CHECK(rep["n_bits"] == 3);
  CHECK(rep["no_interference"]["pairs_checked"].get<int>() == 120);
}

TEST_CASE("trace prints the six-row chain and its accepting tail") {
  const auto r = run_cli("trace --bits 2 --digits 1");
  CHECK(r.exit_code == 0);
  std::size_t rows = 0;
  std::stringstream ss(r.output);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 6);
  CHECK(r.output.find("carry") != std::string::npos);
  CHECK(r.output.find("(accepting)") != std::string::npos);
}

TEST_CASE("trace csv round-trips through the library trajectory") {
  const auto r = run_cli("trace --bits 2 --digits 2 --format csv");
  CHECK(r.exit_code == 0);
  const auto sys = specden::carry::build_carry_system({2});
  const auto chain = specden::carry::trace_chain(sys, 2);

  std::stringstream ss(r.output);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "step,state,instruction,tape");
  std::size_t i = 0;
  while (std::getline(ss, line)) {
    REQUIRE(i < chain.size());
    std::stringstream row(line);
    std::string step, state, instruction, tape;
    std::getline(row, step, ',');
    std::getline(row, state, ',');
    std::getline(row, instruction, ',');
    std::getline(row, tape);
    specden::tds::Configuration x;
    x.state = specden::tds::StateSpace::index_of(state);
    std::stringstream cells(tape);
    std::string cell;
    while (std::getline(cells, cell, ';')) {
      if (cell.empty()) continue;
      const auto colon = cell.find(':');
      x.set(std::stoi(cell.substr(0, colon)), sys.alphabet.index_of(cell.substr(colon + 1)));
    }
    CHECK(x == chain[i]);
    ++i;
  }
  CHECK(i == chain.size());
}

TEST_CASE("census writes csv, json, and a manifest") {
  const std::string base = "/tmp/specden_cli_census";
  const auto r = run_cli("census --bits 2 --max-digits 3 --out " + base);
  CHECK(r.exit_code == 0);

  const std::string csv = slurp(base + ".csv");
  CHECK(csv.find("j,length,measure_num,measure_den,accepted") == 0);
  CHECK(csv.find("1,6,3,128,1") != std::string::npos);

  const json rep = json::parse(slurp(base + ".json"));
  CHECK(rep["n_bits"] == 2);
  CHECK(rep["d_value"] == 2);
  CHECK(rep["records"].size() == 3);
  CHECK(rep["records"][0]["length"] == 6);
  CHECK(rep["records"][0]["measure"] == "3/128");
  CHECK(rep["records"][0]["lower_bound_ok"] == true);
  CHECK(rep["cross_disjoint"] == true);

  const json manifest = json::parse(slurp(base + ".manifest.json"));
  CHECK(manifest["command"] == "census");
  CHECK(manifest["outputs"].size() == 2);
  CHECK(manifest["version"].get<std::string>() == "0.1.0");
}

TEST_CASE("lemma-cert certifies small lengths and rejects length one") {
  const auto ok = run_cli("lemma-cert --max-length 40 --enclosure-bits 0");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("all certificates PASS") != std::string::npos);
  const auto bad = run_cli("lemma-cert --max-length 1");
  CHECK(bad.exit_code == 2);  // certificates start at length two
}

TEST_CASE("bs-det emits integer verdicts down to length one") {
  const std::string base = "/tmp/specden_cli_bsdet";
  const auto r = run_cli("bs-det --max-length 5 --out " + base);
  CHECK(r.exit_code == 0);
  const std::string csv = slurp(base + ".csv");
  CHECK(csv.find("m,det_chain,det_uniform,root_ge_cbrt5") == 0);
  CHECK(csv.find("1,1,5,1") != std::string::npos);
  CHECK(csv.find("2,1,21,1") != std::string::npos);
  CHECK(csv.find("3,1,85,1") != std::string::npos);
}

TEST_CASE("bound-table certifies at 0.27 and refuses 0.1 with the threshold") {
  const std::string base = "/tmp/specden_cli_bound";
  const auto ok = run_cli("bound-table --bits 2 --max-digits 4 --delta 0.27 --out " + base);
  CHECK(ok.exit_code == 0);
  const std::string csv = slurp(base + ".csv");
  CHECK(csv.find("j,l_j,epsilon_float,epsilon_exact,certified_num,certified_den,reference,ratio") ==
        0);
  CHECK(csv.find("5^(-6/3)") != std::string::npos);
  const json rep = json::parse(slurp(base + ".json"));
  CHECK(rep["rows"].size() == 4);
  for (const auto& row : rep["rows"]) CHECK(row["exact_ok"] == true);

  const auto refused = run_cli("bound-table --bits 2 --max-digits 3 --delta 0.1");
  CHECK(refused.exit_code == 2);
  CHECK(refused.output.find("0.26186") != std::string::npos);
}

TEST_CASE("dos and fit pipeline on a small run") {
  const std::string base = "/tmp/specden_cli_dos";
  const auto r = run_cli("dos --size 20000 --samples 6 --law corollary --energies 1e-1..1e-6 "
                         "--seed 5 --out " + base);
  CHECK(r.exit_code == 0);
  const std::string csv = slurp(base + ".csv");
  CHECK(csv.find("epsilon,mu_hat,stderr,n,samples,seed") == 0);
  const json manifest = json::parse(slurp(base + ".manifest.json"));
  CHECK(manifest["seed"] == 5);

  const auto fit = run_cli("fit --in " + base + ".csv --json");
  CHECK(fit.exit_code == 0);
  const json f = json::parse(fit.output);
  CHECK(f["points_used"].get<int>() >= 4);
  CHECK(f["diagnostics"].size() == 3);
}

TEST_CASE("dos surfaces bad input as exit two") {
  CHECK(run_cli("dos --size 1000 --law file:/tmp/specden_no_such_file --energies 0.1").exit_code == 2);
  CHECK(run_cli("dos --size 999 --law corollary --energies 0.1").exit_code == 2);  // odd size
  CHECK(run_cli("fit --in /tmp/specden_no_such_fit_input.csv").exit_code == 2);
}

TEST_CASE("constant-law dos matches the arcsine value end to end") {
  const auto r = run_cli("dos --size 100000 --law constant:1 --energies 0.2 --seed 1");
  CHECK(r.exit_code == 0);
  // arcsin(0.1)/pi = 0.031882...
  CHECK(r.output.find("3.188") != std::string::npos);
}

TEST_CASE("describe prints the operator skeleton and the group") {
  const auto r = run_cli("describe --bits 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("5 + 2(T+T*) - 4*chi_I") != std::string::npos);
  CHECK(r.output.find("wr Z") != std::string::npos);
  CHECK(r.output.find("growth constants") != std::string::npos);
}

TEST_SUITE_END();
