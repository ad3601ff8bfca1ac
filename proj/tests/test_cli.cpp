#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3bn/cli.hpp"

#include <json.hpp>

#include <sstream>

using namespace k3bn;
using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run_inv(const Invocation& inv) {
  std::ostringstream out, err;
  int code = run(inv, out, err);
  return {code, out.str(), err.str()};
}

RunResult run_args(std::vector<std::string> args) {
  std::vector<const char*> argv{"k3bn"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check command emits the full certificate") {
  Invocation inv;
  inv.command = Invocation::Command::Check;
  inv.g = 7;
  inv.m = 2;
  inv.v = {2, 1, 3};
  RunResult r = run_inv(inv);
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["verdict"] == "pass");
  CHECK(doc["route"] == "special-(7,2)");
  CHECK(doc["reports"]["injectivity"]["verdict"] == "pass");
  CHECK(doc["reports"]["isomorphism"]["route"] == "square-zero-window");
  CHECK(doc["input"]["v"] == json::array({2, 1, 3}));
  CHECK(doc["derived"]["hbar"]["approx_flag"] == "approx");
  CHECK(doc["derived"]["sharpness"] == 4);
  // byte-identical reruns
  CHECK(run_inv(inv).out == r.out);
}

TEST_CASE("suggest command exit codes") {
  Invocation inv;
  inv.command = Invocation::Command::Suggest;
  inv.g = 5;
  inv.m = 2;
  RunResult r = run_inv(inv);
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["result"].is_null());
  inv.g = 7;
  RunResult ok = run_inv(inv);
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["result"]["v"] == json::array({2, 1, 3}));
}

TEST_CASE("hk command") {
  RunResult r = run_args({"hk", "1", "50"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["result"]["p"] == 3);
  CHECK(doc["result"]["c"] == 1);
  CHECK(doc["result"]["v"] == json::array({3, 1, 16}));
  CHECK(run_args({"hk", "1", "10"}).code == 1);
}

TEST_CASE("oracle command") {
  RunResult r = run_args({"oracle", "no-wall", "7", "2", "1", "3", "--m", "2"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["status"] == "no-wall");
  CHECK(doc["witnesses"].empty());
  // imprimitive vector in the non-strict oracle (sigma_v = 1/2 at m = 3)
  RunResult c = run_args({"oracle", "no-wall", "3", "2", "2", "2", "--m", "3", "--non-strict"});
  CHECK(c.code == 1);
  CHECK(json::parse(c.out)["witnesses"].size() > 0);
}

TEST_CASE("scan command in csv") {
  RunResult r = run_args({"scan", "5..5", "2..3", "--format", "csv"});
  CHECK(r.out.substr(0, 28) == "g,m,r,c,s,inj,surj,iso,route");
  CHECK(r.out.find("5,3,4,3,9,pass,pass,pass,table1") != std::string::npos);
  CHECK(r.code == 0);
}

TEST_CASE("usage errors exit with 3") {
  CHECK(run_args({"check", "7", "2"}).code == 3);
  CHECK(run_args({"bogus"}).code == 3);
  CHECK(run_args({"scan", "7..3", "2..2"}).code == 3);
  CHECK(run_args({"check", "1", "1", "1", "1", "1"}).code == 3);  // genus below 2
}

TEST_CASE("exit code tracks the verdict") {
  CHECK(run_args({"check", "7", "2", "6", "5", "25"}).code == 1);
  CHECK(run_args({"check", "7", "3", "6", "5", "25"}).code == 0);
}
