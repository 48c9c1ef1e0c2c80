#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "gstieltjes/cli.hpp"

using gstieltjes::cli::run;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run gstj(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string& header) {
  std::istringstream in(text);
  std::getline(in, header);
  std::vector<std::vector<double>> rows;
  for (std::string line; std::getline(in, line);) {
    std::vector<double> row;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("seq check") {
  const auto r = gstj({"seq", "check", "--a", "0,3", "--b", "1,2"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["weak_supermajorisation"] == true);
  CHECK(j["pte_degree"] == 1);
}

TEST_CASE("verify thm2 exits 0 and emits a parseable report") {
  const auto r = gstj({"verify", "thm2", "--model", "reciprocal_gamma", "--a", "0,3", "--b", "1,2", "--grid", "1,2.5,10",
                       "--tol", "1e-8"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["status"] == "pass");
  CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("exit codes") {
  CHECK(gstj({"seq", "check", "--a", "0,x", "--b", "1,2"}).code == 2);
  CHECK(gstj({"seq", "check", "--a", "0,3"}).code == 2);
  CHECK(gstj({"verify", "thm2", "--model", "no_such_model", "--a", "0,3", "--b", "1,2"}).code == 2);
  CHECK(gstj({"nonsense"}).code == 2);
  // unequal lengths
  CHECK(gstj({"seq", "check", "--a", "0,3,4", "--b", "1,2"}).code == 3);
  // precondition not met: sums differ
  CHECK(gstj({"verify", "thm2", "--model", "reciprocal_gamma", "--a", "0,4", "--b", "1,2"}).code == 3);
  // rho_1 of ((0,4,5),(1,2,6)) takes negative values
  CHECK(gstj({"rho", "certify", "--a", "0,4,5", "--b", "1,2,6", "--ell", "1"}).code == 1);
  CHECK(gstj({"rho", "certify", "--a", "0,4,5", "--b", "1,2,6", "--ell", "2"}).code == 0);
}

TEST_CASE("figure rho-pair") {
  const auto r = gstj({"figure", "rho-pair", "--a", "0,4,5", "--b", "1,2,6"});
  REQUIRE(r.code == 0);
  std::string header;
  const auto rows = parse_csv(r.out, header);
  CHECK(header == "t,rho1,rho2");
  double min1 = 0, max1 = 0, min2 = 0;
  for (const auto& row : rows) {
    REQUIRE(row.size() == 3);
    min1 = std::min(min1, row[1]);
    max1 = std::max(max1, row[1]);
    min2 = std::min(min2, row[2]);
  }
  CHECK(min1 < 0.0);
  CHECK(max1 > 0.0);
  CHECK(min2 >= 0.0);
  CHECK(rows.front()[0] == -1.0);
  CHECK(rows.back()[0] == 7.0);
  // byte-for-byte deterministic, LF endings
  CHECK(gstj({"figure", "rho-pair", "--a", "0,4,5", "--b", "1,2,6"}).out == r.out);
  CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("--out writes the file") {
  const auto path = std::filesystem::temp_directory_path() / "gstj_test_phi.csv";
  const auto r = gstj({"phi", "emit", "--model", "reciprocal_gamma", "--a", "0,3", "--b", "1,2", "--ell", "1", "--out",
                       path.string()});
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,phi");
  std::filesystem::remove(path);
}

TEST_CASE("pte search") {
  const auto r = gstj({"pte", "search", "--n", "3", "--max", "6", "--ell", "2", "--distinct"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.dump().find("\"0\",\"4\",\"5\"") != std::string::npos);
}

TEST_CASE("verify vertical and barnes") {
  CHECK(gstj({"verify", "vertical", "--which", "cor32", "--model", "reciprocal_gamma", "--grid", "0.5,1,4", "--tol", "1e-6"})
            .code == 0);
  CHECK(gstj({"verify", "barnes", "--n", "2", "--a", "0,3/2,3/2", "--b", "1/2,1/2,2"}).code == 0);
}
