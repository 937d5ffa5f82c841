#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "hofc/errors.hpp"
#include "hofc/json_io.hpp"
#include "hofc/moebius.hpp"
#include "hofc/transforms.hpp"

using namespace hofc;

namespace {
struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(HOFC_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), p)) r.out += buf.data();
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  while (!r.out.empty() && (r.out.back() == '\n' || r.out.back() == ' ')) r.out.pop_back();
  return r;
}
}  // namespace

TEST_CASE("scalar json") {
  CHECK(scalar_to_json(Scalar(-3, 4)) == "-3/4");
  CHECK(scalar_from_json(Json("6/8")) == Scalar(3, 4));
  CHECK(scalar_from_json(Json(5)) == 5);
  CHECK_THROWS_AS(scalar_from_json(Json(0.5)), ParseError);
}

TEST_CASE("multfn round trip") {
  auto mu = moebius_recursion(5);
  CHECK(multfn_from_json(parse_json(multfn_to_json(mu).dump())) == mu);
  std::vector<std::string> alpha{"a", "b"}, back;
  auto j = multfn_to_json(mu, alpha);
  CHECK(multfn_from_json(j, &back) == mu);
  CHECK(back == alpha);
  CHECK(multfn_to_json(mu)[0]["value"] == "1/1");
}

TEST_CASE("series round trip") {
  Series1 C(5, {1, 2, Scalar(-1, 3), 0, 4});
  Series2 C2(5);
  C2.at(1, 2) = Scalar(2, 7);
  C2.at(2, 1) = Scalar(2, 7);
  CHECK(series1_from_json(series_to_json(C)) == C);
  CHECK(series2_from_json(series_to_json(C2)) == C2);
  auto M2 = c2m_second(C, C2);
  CHECK(series2_from_json(parse_json(series_to_json(M2).dump())) == M2);
  CHECK(series_to_json(C2)["coeffs"]["(1,2)"] == "2/7");
}

TEST_CASE("wg, finite-N and partitioned permutation round trips") {
  auto t = wg_table(3, 6);
  auto t2 = wg_from_json(parse_json(wg_to_json(t).dump()));
  CHECK(t2.n == t.n);
  CHECK(t2.N == t.N);
  CHECK(t2.values == t.values);
  FiniteNTable f{Scalar(7, 2), moebius_recursion(3)};
  auto f2 = finite_n_from_json(finite_n_to_json(f));
  CHECK(f2.N == f.N);
  CHECK(f2.values == f.values);
  PP x(SetPartition::from_blocks(4, {{1, 3, 4}, {2}}), Permutation::parse("(1,3)", 4));
  auto j = pp_to_json(x);
  CHECK(j["blocks"] == Json::parse("[[1,3,4],[2]]"));
  CHECK(pp_from_json(j) == x);
}

TEST_CASE("malformed json") {
  CHECK_THROWS_AS(parse_json("{"), ParseError);
  CHECK_THROWS_AS(multfn_from_json(parse_json("[{\"diagram\":[2]}]")), ParseError);
  CHECK_THROWS_AS(series1_from_json(parse_json("{\"trunc\":2,\"coeffs\":{\"(5)\":\"1\"}}")), ParseError);
}

TEST_CASE("cli examples") {
  auto c = run_cli("count --profile 2,2");
  CHECK(c.code == 0);
  CHECK(c.out == "18");
  auto m = run_cli("moebius --diagram 2");
  CHECK(m.code == 0);
  CHECK(m.out == "-1");
  auto h = run_cli("haar-moment --n 2 --pattern '|u11|^4' --N 5");
  CHECK(h.code == 0);
  CHECK(h.out == "1/15");
}

TEST_CASE("cli json output parses") {
  auto w = run_cli("wg --n 2 --N 7");
  REQUIRE(w.code == 0);
  auto t = wg_from_json(parse_json(w.out));
  CHECK(t.at(YoungDiagram({2})) == Scalar(-1, 336));
  auto conv = run_cli("convolve --f zeta --g mu --order 4");
  REQUIRE(conv.code == 0);
  CHECK(multfn_from_json(parse_json(conv.out)) == MultFn::delta(4));
}

TEST_CASE("cli transforms round trip through files") {
  std::string path = "hofc_test_series.json";
  {
    std::ofstream f(path);
    f << R"json({"first":{"trunc":4,"coeffs":{"(0)":"1","(2)":"1","(4)":"2"}},"second":{"trunc":4,"coeffs":{"(1,1)":"1"}}})json";
  }
  auto c = run_cli("m2c --input " + path + " -o " + path + ".out");
  REQUIRE(c.code == 0);
  auto back = run_cli("c2m --input " + path + ".out");
  REQUIRE(back.code == 0);
  auto j = parse_json(back.out);
  CHECK(series1_from_json(j["first"])[4] == 2);
  CHECK(series2_from_json(j["second"]).coeff(1, 1) == 1);
  std::remove(path.c_str());
  std::remove((path + ".out").c_str());
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("count --profile two").code == 2);
  CHECK(run_cli("moebius --diagram 2 --algorithm nope").code == 2);
  CHECK(run_cli("wg --n 3 --N 2").code == 3);
  CHECK(run_cli("haar-moment --pattern 'u11' --N 3").code == 3);
  CHECK(run_cli("finite-n --input /nonexistent --N 5").code == 3);
  CHECK(run_cli("check --only 1").code == 0);
}

TEST_CASE("simulate is deterministic for a fixed seed") {
  auto a = run_cli("simulate --ensemble gue --N 20 --n 1 --samples 400 --seed 4 --threads 1");
  auto b = run_cli("simulate --ensemble gue --N 20 --n 1 --samples 400 --seed 4 --threads 2");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("quantity,N,S,estimate,std_err,prediction,provenance,z", 0) == 0);
}
