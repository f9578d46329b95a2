#include <doctest.h>

#include <stdexcept>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = monreg::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kExample =
    "ring 4\nx1^7, x1^5 x2, x1^2 x2^4, x1 x2^6, x1^5 x3^2, x1 x2^4 x3^2\n";

}  // namespace

TEST_CASE("reg with JSON envelope") {
  auto r = run({"--json", "reg"}, kExample);
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["command"] == "reg");
  CHECK(j["n"] == 4);
  CHECK(j["generators"].size() == 6);
  CHECK(j["result"] == 8);
  CHECK(j["evidence"]["chain"] == 8);
  CHECK(j["evidence"]["truncation"] == 8);
  CHECK(j["evidence"]["oracle"] == 8);
  CHECK(j["evidence"]["s_values"] == json::array({7, 7, 0}));
}

TEST_CASE("text output") {
  auto r = run({"reg", "--method", "truncation"}, kExample);
  CHECK(r.code == 0);
  CHECK(r.out.find("reg = 8") != std::string::npos);

  auto b = run({"bound"}, kExample);
  CHECK(b.out.find("= 25") != std::string::npos);

  auto c = run({"chain"}, kExample);
  CHECK(c.out.find("r = 3") != std::string::npos);
}

TEST_CASE("check subcommand") {
  auto borel = run({"--json", "check", "--property", "borel-type"}, kExample);
  CHECK(json::parse(borel.out)["result"] == true);
  auto ss = run({"--json", "check", "--property", "strongly-stable"}, kExample);
  CHECK(json::parse(ss.out)["result"] == false);
  auto df = run({"--json", "check", "--property", "d-fixed", "--dseq", "1,2"},
                "ring 3\nx1^2, x2^3, x3^4\n");
  REQUIRE(df.code == 0);
  CHECK(json::parse(df.out)["result"] == false);
  auto named = run({"--json", "check", "--property", "d-fixed", "--dseq", "p"},
                   "ring 2\ndseq p 1,2\nx1^2, x2^2\n");
  CHECK(json::parse(named.out)["result"] == true);
  auto ass = run({"--json", "ass"}, kExample);
  CHECK(json::parse(ass.out)["evidence"]["totally_ordered"] == true);
}

TEST_CASE("d-fixed commands") {
  auto r = run({"--json", "dfixed-reg", "--monomial", "x3^4", "--dseq", "1,2"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["result"] == 6);
  auto e = run({"--json", "dfixed-expand", "--monomial", "x2^2", "--dseq", "1,2", "--ring", "3"});
  REQUIRE(e.code == 0);
  auto j = json::parse(e.out);
  CHECK(j["n"] == 3);
  CHECK(j["result"] == json::array({"x1^2", "x2^2"}));
}

TEST_CASE("exit codes") {
  CHECK(run({"reg"}, "ring 2\nx3").code == 2);
  CHECK(run({"reg", "--method", "chain"}, "ring 2\nx1 x2").code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", "--property", "d-fixed"}, "ring 2\nx1").code == 2);
  CHECK(run({"dfixed-reg", "--monomial", "x2", "--dseq", "1,3,4"}).code == 2);
  CHECK(run({"--input", "/nonexistent/file", "reg"}).code == 2);
  auto parse = run({"reg"}, "ring 2\nx1^0");
  CHECK(parse.err.find("line 2, column 4") != std::string::npos);
}
