#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "blockmagic/cli.hpp"
#include "blockmagic/fixtures.hpp"
#include "blockmagic/io.hpp"

using namespace blockmagic;
using nlohmann::json;

namespace {

const std::string kData = BLOCKMAGIC_DATA_DIR;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, const std::string& input = "") {
  args.push_back("--json");
  const Outcome o = run(std::move(args), input);
  REQUIRE(o.code == 0);
  return json::parse(o.out);
}

std::string read(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("data files match the built-in fixtures") {
  CHECK(parse_matrix_text(read(kData + "/lohshu.txt")) == fixtures::loh_shu());
  CHECK(parse_matrix_text(read(kData + "/balanced5.txt")) == fixtures::balanced5());
  CHECK(parse_matrix_text(read(kData + "/balanced4.txt")) == fixtures::balanced4());
  CHECK(parse_matrix_text(read(kData + "/semimagic_y3.txt")) == fixtures::semimagic_y3());
  CHECK(components_from_json(json::parse(read(kData + "/lohshu_components.json"))) == fixtures::loh_shu_components());
  CHECK(components_from_json(json::parse(read(kData + "/balanced5_components.json"))) ==
        fixtures::balanced5_components());
  const auto check_spec = [&](const std::string& file, const Rank1Spec& s) {
    const auto [spec, w] = spec_from_json(json::parse(read(kData + "/" + file)));
    CHECK(spec.u == s.u);
    CHECK(spec.v == s.v);
    CHECK(spec.x == s.x);
    CHECK(spec.y == s.y);
    CHECK(w.is_zero());
  };
  check_spec("example1.json", fixtures::example1_spec());
  check_spec("example2.json", fixtures::example2_spec());
  check_spec("nilpotent.json", fixtures::nilpotent_spec());
}

TEST_CASE("classify the Loh Shu square") {
  const json r = run_json({"classify", "--in", kData + "/lohshu.txt"});
  CHECK(r["weight"] == "5");
  CHECK(r["is_magic"] == true);
  CHECK(r["is_associated"] == true);
  const Outcome text = run({"classify"}, read(kData + "/lohshu.txt"));
  CHECK(text.code == 0);
  CHECK(text.out.find("weight: 5\n") != std::string::npos);
}

TEST_CASE("rank1 P with its 1/11 prefactor") {
  const json r = run_json({"rank1", "--spec", kData + "/example1.json", "--emit", "P"});
  CHECK(r["two_sided"]["P_content"]["prefactor"] == "1/11");
  CHECK(matrix_from_json(r["two_sided"]["P"]) == fixtures::example1_P());
  CHECK_FALSE(r["two_sided"].contains("P_inv"));
  const json inv = run_json({"rank1", "--spec", kData + "/example1.json", "--emit", "Pinv"});
  CHECK(inv["two_sided"]["P_inv_content"]["prefactor"] == "1/1092");
  const json all = run_json({"rank1", "--spec", kData + "/nilpotent.json"});
  CHECK(all["verdict"]["case"] == "nilpotent_magic");
  CHECK_FALSE(all.contains("two_sided"));
}

TEST_CASE("assemble then extract reproduces the component file") {
  json original = json::parse(read(kData + "/balanced5_components.json"));
  original.erase("comment");
  const Outcome square = run({"assemble", "--json", "--in", kData + "/balanced5_components.json"});
  REQUIRE(square.code == 0);
  CHECK(run_json({"extract"}, square.out) == original);
}

TEST_CASE("text and JSON carry the same numbers") {
  const json j = run_json({"qform", "--spec", kData + "/example2.json", "--source", "teigen"});
  const Outcome t = run({"qform", "--spec", kData + "/example2.json", "--source", "teigen"});
  CHECK(t.out == cli::render_text(j));
  CHECK(t.out.find(j["teigen"]["text"].get<std::string>()) != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"rank1", "--spec", kData + "/example2.json"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"nonsense"}).code == cli::kExitUsage);
  CHECK(run({"rank1", "--emit", "Q"}).code == cli::kExitUsage);
  CHECK(run({"weight-shift", "--in", kData + "/lohshu.txt"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
  const Outcome bad = run({"extract", "--json"}, "1 2\n3 4\n");
  CHECK(bad.code == cli::kExitDomainError);
  CHECK(json::parse(bad.out)["error"]["code"] == "NotSemimagic");
  CHECK(run({"classify", "--in", "/nonexistent/file"}).code == cli::kExitDomainError);
  CHECK(run({"classify"}, "1 2\n3\n").code == cli::kExitDomainError);
}

TEST_CASE("selftest passes") {
  const Outcome o = run({"selftest"});
  CHECK(o.code == cli::kExitOk);
  CHECK(o.out.find("FAIL") == std::string::npos);
  for (const auto& c : cli::selftest()) CHECK_MESSAGE(c.passed, c.name);
}

TEST_CASE("other verbs") {
  CHECK(run_json({"power-scan", "--in", kData + "/balanced4.txt"})["first_bad_N"] == 2);
  CHECK(run_json({"magic-check", "--in", kData + "/balanced5_components.json"})["magic"] == true);
  CHECK(run_json({"quasi-inverse", "--in", kData + "/balanced5.txt"})["exists"] == true);
  CHECK(run_json({"dihedral", "--canonical", "--in", kData + "/lohshu.txt"})["canonical"]["entries"][0][0] == "2");
  CHECK(run_json({"dihedral", "--in", kData + "/lohshu.txt"})["orbit"].size() == 8);
  CHECK(run_json({"decompose", "--in", kData + "/lohshu.txt"})["weight"] == "5");
  CHECK(run_json({"blockrep", "--in", kData + "/balanced4.txt"})["block"] == matrix_to_json(fixtures::balanced4_block()));
  const json q = run_json({"qform", "--spec", kData + "/example1.json"});
  CHECK(q["natural"]["text"] == "17472*(4*x1^2 + 1092*x2^2)");
  CHECK(q["q1_vs_natural"] == "not_equivalent");
}
