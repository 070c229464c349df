#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hecke/cli.hpp"
#include "hecke/json_io.hpp"

using namespace hecke;

namespace {

CommandResult run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  return run_command(args, in);
}

Json parse(const CommandResult& r) { return Json::parse(r.output); }

}  // namespace

TEST_CASE("weights check verdicts and exit codes") {
  auto ok = run({"weights", "check"}, R"({"d":2,"r":1,"n":[-1,0,1]})");
  CHECK(ok.exit_code == 0);
  CHECK(parse(ok) == Json{{"balanced", true}});
  auto bad = run({"weights", "check"}, R"({"d":1,"r":1,"n":[1,-1]})");
  CHECK(bad.exit_code == 1);
  CHECK(parse(bad)["witness"]["subset"] == Json::array({0}));
  CHECK(run({"weights", "check"}, R"({"d":3,"r":1,"n":[1,-1]})").exit_code == 2);
  CHECK(run({"weights", "check"}, "not json").exit_code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"weights"}).exit_code == 2);
  CHECK(run({"weights", "enumerate", "--q", "6"}).exit_code == 2);
  CHECK(run({"weights", "enumerate", "--r", "0"}).exit_code == 2);
  CHECK(run({"oracle", "compare", "--precision", "2"}, "{}").exit_code == 2);
  auto help = run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.output.find("weights") != std::string::npos);
}

TEST_CASE("piping contract") {
  auto weights = run({"weights", "enumerate", "--d", "2", "--r", "2"});
  REQUIRE(weights.exit_code == 0);
  CHECK(parse(weights).size() == enumerate_balanced(2, 2).size());
  auto nablas = run({"nabla", "build", "--q", "2"}, weights.output);
  REQUIRE(nablas.exit_code == 0);
  auto checked = run({"nabla", "check"}, nablas.output);
  CHECK(checked.exit_code == 0);
  auto lattice = run({"lattice", "check"}, nablas.output);
  CHECK(lattice.exit_code == 0);
  for (const auto& item : parse(lattice)) {
    CHECK(item["stable"] == true);
    CHECK(item.contains("certificate"));
  }
  auto modules = run({"module", "reduce"}, nablas.output);
  REQUIRE(modules.exit_code == 0);
  for (const auto& m : parse(modules)) CHECK(run({"module", "validate"}, m.dump()).exit_code == 0);
}

TEST_CASE("unstable lattice is a false verdict with a witness") {
  const std::string in =
      R"({"d":1,"entries":{"0 1":0,"1 0":1},"character":{"d":1,"q":3,"r":1,"pi_ord":[1,-1]}})";
  auto res = run({"lattice", "check"}, in);
  CHECK(res.exit_code == 1);
  CHECK(parse(res)["witness"]["generator"] == "T_s1");
  CHECK(run({"module", "reduce"}, in).exit_code == 1);
}

TEST_CASE("criterion, realization and oracle commands") {
  auto crit = run({"criterion", "check"}, R"({"d":1,"q":3,"r":1,"pi_ord":[-1,1]})");
  CHECK(crit.exit_code == 0);
  CHECK(parse(crit)["unitary"] == true);
  auto dual = parse(run({"criterion", "dual"}, R"({"d":1,"q":3,"r":2,"pi_ord":[0,0]})"));
  CHECK(dual["dual"]["pi_ord"] == Json::array({-2, 2}));

  const std::string sigma = R"({"d":2,"values":{"0 1 2":1,"1 0 2":0,"2 0 1":-1}})";
  auto search = run({"partial", "search", "--r", "2"}, sigma);
  CHECK(search.exit_code == 0);
  auto real = run({"realize", "--r", "2"}, R"({"q":5,"theta_exp":[0,1,2],"sigma":)" + sigma + "}");
  CHECK(real.exit_code == 0);
  CHECK(parse(real)["round_trip"] == true);

  auto oracle = run({"oracle", "compare"}, R"({"d":1,"q":2,"r":1,"pi_ord":[0,0]})");
  CHECK(oracle.exit_code == 0);
  CHECK(parse(oracle)["matches"] == 8);
  CHECK(parse(oracle)["mismatches"].empty());
}

TEST_CASE("determinism and output file") {
  const std::vector<std::string> args{"weights", "enumerate", "--d", "3", "--r", "1"};
  CHECK(run(args).output == run(args).output);
  const std::string in = R"({"d":2,"q":3,"r":1,"theta_exp":[0,1,1],"pi_ord":[1,0,-1]})";
  CHECK(run({"oracle", "compare", "--seed", "5"}, in).output == run({"oracle", "compare", "--seed", "5"}, in).output);

  const std::string path = "test_cli_out.json";
  auto res = run({"weights", "enumerate", "--d", "1", "--out", path});
  CHECK(res.exit_code == 0);
  CHECK(res.output.empty());
  std::ifstream file(path);
  std::stringstream buf;
  buf << file.rdbuf();
  CHECK(Json::parse(buf.str()).size() == 2);
  std::remove(path.c_str());
}

TEST_CASE("json round trips") {
  auto ring = ScalarRing::get(5, 2);
  auto s = Scalar::monomial(ring, 3, -3) + Scalar::from_int(ring, 7);
  CHECK(scalar_from_json(scalar_to_json(s), ring) == s);
  auto field = FqField::get(9);
  auto x = FqElement::generator_power(field, 5);
  CHECK(fq_from_json(fq_to_json(x), field) == x);
  auto nabla = build_nabla(Weight{-1, 0, 1}, 1);
  CHECK(nabla_from_json(nabla_to_json(nabla)) == nabla);
  auto c = make_character({0, 1, 2}, {1, 0, -1}, {2, 0, 1}, 5, 2);
  CHECK(character_from_json(character_to_json(c)) == c);
  for (const auto& sigma : enumerate_sigma(2)) CHECK(sigma_from_json(sigma_to_json(sigma)) == sigma);
  auto partial = partial_from_nabla(nabla, 1);
  CHECK(partial_from_json(partial_to_json(partial)) == partial);
  auto m = reduce_lattice(character_from_weight(Weight{-1, 0, 1}, 5, 1), nabla);
  CHECK(wtype_from_json(wtype_to_json(m)) == m);
}
