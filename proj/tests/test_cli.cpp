#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "mbetti/io.hpp"

using namespace mbetti;
using mbetti::io::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(MBETTI_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("schur subcommand") {
  CHECK(run({"schur", "--lambda", "0", "--nvars", "2"}).out == "1\n");
  const auto r = run({"schur", "--lambda", "2,1", "--nvars", "2", "--method", "ssyt"});
  CHECK(r.code == 0);
  CHECK(r.out == "t1^2*t2 + t1*t2^2\n");
  const auto both = run({"schur", "--lambda", "4,2,1", "--nvars", "3", "--method", "both", "--format", "json"});
  REQUIRE(both.code == 0);
  const json j = json::parse(both.out);
  CHECK(j["agree"] == true);
  CHECK(io::poly_from_json(j["ssyt"]).coefficient_sum() == 15);
}

TEST_CASE("equivariant table") {
  const auto r = run({"equivariant", "--e", "2,3", "--format", "table"});
  REQUIRE(r.code == 0);
  for (const char* deg : {"(2,0)", "(1,1)", "(0,2)", "(4,0)", "(3,1)", "(2,2)", "(1,3)", "(0,4)", "(4,3)", "(3,4)"})
    CHECK(r.out.find(deg) != std::string::npos);
  CHECK(r.out.find("S^3") != std::string::npos);
  CHECK(r.out.find("S^5") != std::string::npos);
  CHECK(r.out.find("S^2") != std::string::npos);
  const auto j = run({"--format", "json", "equivariant", "--e", "2,3"});
  REQUIRE(j.code == 0);
  CHECK(io::diagram_from_json(json::parse(j.out)) == equivariant(DifferenceVector({2, 3})));
  const auto tw = run({"equivariant", "--e", "2,3", "--twist", "1,-1", "--format", "json"});
  CHECK(io::diagram_from_json(json::parse(tw.out)) == twist(equivariant(DifferenceVector({2, 3})), Exponent{1, -1}));
}

TEST_CASE("decompose subcommand") {
  const auto r = run({"decompose", "--in", data("bs.json"), "--e", "2,3"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("cofactor: t1^2 - t1*t2 + t2^2") != std::string::npos);
  CHECK(r.out.find("integral: true") != std::string::npos);
  const auto j = run({"decompose", "--in", data("bs.json"), "--e", "2,3", "--format", "json"});
  const json rep = json::parse(j.out);
  CHECK(rep["in_space"] == true);
  CHECK(io::poly_from_json(rep["cofactor"]) == io::parse_poly("t1^2 - t1*t2 + t2^2", 2));
  const auto wrong = run({"decompose", "--in", data("bs.json"), "--e", "1,3", "--format", "json"});
  CHECK(wrong.code == 0);
  CHECK(json::parse(wrong.out)["in_space"] == false);
}

TEST_CASE("check, collapse, hilbert, gcd-schur, generator") {
  const auto c = run({"check", "--in", data("ekvi.json")});
  CHECK(c.code == 0);
  CHECK(c.out.find("pure: yes") != std::string::npos);
  CHECK(c.out.find("hk: pass") != std::string::npos);
  const auto m = run({"check", "--in", data("mixed.json"), "--format", "json"});
  CHECK(m.code == 0);
  CHECK(json::parse(m.out)["pure"] == false);

  const auto col = run({"collapse", "--in", data("ekvi.json"), "--format", "json"});
  const json cj = json::parse(col.out);
  REQUIRE(cj["entries"].size() == 3);
  CHECK(cj["entries"][0]["deg"] == 2);
  CHECK(cj["entries"][0]["mult"] == "3");
  CHECK(cj["entries"][2]["deg"] == 7);
  CHECK(cj["entries"][2]["mult"] == "2");

  const auto h = run({"hilbert", "--in", data("ekvi.json"), "--format", "json"});
  const json hj = json::parse(h.out);
  CHECK(hj["divisible"] == true);
  CHECK(io::poly_from_json(hj["numerator"]).coefficient_sum() == 15);
  CHECK(run({"hilbert", "--in", data("mixed.json")}).out == "h: t2 + 1\n");
  const auto hp = run({"hilbert", "--in", data("perturbed.json")});
  CHECK(hp.code == 0);
  CHECK(hp.out.find("not divisible") != std::string::npos);
  const auto cp = run({"check", "--in", data("perturbed.json")});
  CHECK(cp.out.find("hk: fail at t1 = 1") != std::string::npos);

  const auto g = run({"gcd-schur", "--e", "2,2"});
  CHECK(g.out.find("gcd: t1 + t2") != std::string::npos);

  const auto gen = run({"generator", "--in", data("bs.json"), data("ekvi.json")});
  REQUIRE(gen.code == 0);
  CHECK(gen.out.find("(3,4)") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"schur", "--lambda", "2,1"}).code == cli::kUsageError);
  CHECK(run({"schur", "--lambda", "1,2", "--nvars", "2"}).code == cli::kUsageError);
  CHECK(run({"equivariant", "--e", "2,0"}).code == cli::kUsageError);
  CHECK(run({"equivariant", "--e", "2,3", "--format", "xml"}).code == cli::kUsageError);
  CHECK(run({"equivariant", "--e", "2,3", "--twist", "1"}).code == cli::kUsageError);
  CHECK(run({"equivariant", "--e", "2,3", "--bogus"}).code == cli::kUsageError);
  CHECK(run({"check", "--in", data("missing.json")}).code == cli::kUsageError);
  CHECK(run({"check", "--in", data("broken.json")}).code == cli::kUsageError);
  CHECK(run({"decompose", "--in", data("bs.json"), "--e", "2,3,1"}).code == cli::kUsageError);
  CHECK(run({"generator", "--in", data("mixed.json")}).code == cli::kDomainError);
  const auto help = run({"--help"});
  CHECK(help.code == cli::kOk);
  CHECK(help.out.find("equivariant") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"equivariant", "--e", "1,2,2", "--format", "json"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> g = {"gcd-schur", "--e", "2,4,2", "--format", "json"};
  CHECK(run(g).out == run(g).out);
}
