#include <doctest.h>

#include <regex>
#include <sstream>

#include <json.hpp>

#include "sachs/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = sachs::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string without_wall_time(std::string text) {
  return std::regex_replace(text, std::regex("\"wall_time_ms\": [0-9.e+-]+"), "\"wall_time_ms\": 0");
}

}  // namespace

TEST_CASE("coeff on K4") {
  const auto r = cli({"coeff", "C~"});
  CHECK(r.code == 0);
  CHECK(r.out.find("a4=-3") != std::string::npos);
  CHECK(r.out.find("1 0 -6 -8 -3") != std::string::npos);
  const auto j = nlohmann::json::parse(cli({"--json", "coeff", "C~"}).out);
  CHECK(j["results"]["a4"] == -3);
  CHECK(j["results"]["coefficients"] == nlohmann::json::array({1, 0, -6, -8, -3}));
}

TEST_CASE("family, compress and recognize") {
  CHECK(cli({"family", "named", "complete", "2"}).out == "A_\n");
  CHECK(cli({"family", "threshold", "2,2"}).out == cli({"family", "threshold", "2,0,0,2"}).out);
  CHECK(cli({"family", "threshold", "0,2,0,2"}).out == "C~\n");
  CHECK(cli({"family", "difference", "2", "3"}).out == cli({"family", "named", "complete-bipartite", "2", "3"}).out);
  CHECK(cli({"family", "named", "G3", "8", "10"}).code == 0);
  CHECK(cli({"family", "named", "G3", "8"}).code == 2);
  CHECK(cli({"family", "named", "petersen", "10"}).code == 2);
  CHECK(cli({"family", "threshold", "1,x"}).code == 2);

  std::string c5 = cli({"family", "named", "cycle", "5"}).out;
  c5.pop_back();
  const auto c = nlohmann::json::parse(cli({"--json", "compress", c5, "0", "2"}).out);
  CHECK(c["results"]["a4_before"] == 5);
  CHECK(c["results"]["a4_after"] == 4);
  CHECK(cli({"compress", "C~", "0", "0"}).code == 2);

  const auto rec = nlohmann::json::parse(cli({"--json", "recognize", "C^"}).out);
  CHECK(rec["results"]["threshold"] == true);
  CHECK(rec["results"]["threshold_vector"] == nlohmann::json::array({2, 2}));
  CHECK(rec["results"]["spanning_difference"].is_object());
}

TEST_CASE("enumerate streams graph6 lines") {
  const auto r = cli({"enumerate", "5"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 21);
  CHECK(cli({"enumerate", "5", "--threads", "2"}).out == r.out);
  const auto j = nlohmann::json::parse(cli({"--json", "enumerate", "6", "8", "--bipartite"}).out);
  CHECK(j["results"]["count"] == 2);
  CHECK(cli({"enumerate", "11"}).code == 2);
}

TEST_CASE("search-min 7 9 reports the predicted minimum") {
  const auto r = cli({"search-min", "7", "9"});
  CHECK(r.code == 0);
  CHECK(r.out.find("min_a4=4 predicted=4 matches=yes") != std::string::npos);
  const auto j = nlohmann::json::parse(cli({"--json", "search-min", "7", "9"}).out);
  CHECK(j["results"]["min_a4"] == 4);
  CHECK(j["minimizers"].size() == 1);
}

TEST_CASE("exit codes for the probe set") {
  CHECK(cli({"verify", "T-REMARK1"}).code == 0);
  const auto fail = cli({"verify", "T-NONNEG", "--n", "4", "--m", "6"});
  CHECK(fail.code == 1);
  CHECK(fail.out.find("counterexample C~") != std::string::npos);
  const auto usage = cli({"frobnicate"});
  CHECK(usage.code == 2);
  CHECK_FALSE(usage.err.empty());
  CHECK(cli({"verify", "T-NOPE"}).code == 2);
  CHECK(cli({"coeff", "garbage\x01"}).code == 2);
  CHECK(cli({"coeff"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("json reports are schema-stable and reproducible") {
  const std::vector<std::string> args{"--json", "verify", "T-REMARK1", "T-REMARK3", "T-DECOMP"};
  const auto a = cli(args), b = cli(args);
  CHECK(a.code == 0);
  CHECK(without_wall_time(a.out) == without_wall_time(b.out));
  const auto j = nlohmann::json::parse(a.out);
  for (const char* key : {"command", "params", "status", "results", "minimizers", "wall_time_ms"})
    CHECK(j.contains(key));
  CHECK(j["status"] == "pass");
  CHECK(j["results"].size() == 3);
  CHECK(j["results"][0]["id"] == "T-REMARK1");
  CHECK(j["results"][0]["counterexample"].is_null());

  const auto f = nlohmann::json::parse(cli({"--json", "verify", "T-NONNEG", "--n", "4", "--m", "6"}).out);
  CHECK(f["status"] == "fail");
  CHECK(f["results"][0]["counterexample"]["graph6"] == "C~");
}
