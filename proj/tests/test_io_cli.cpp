#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "omfam/cli.hpp"
#include "omfam/io.hpp"
#include "omfam/models.hpp"

using namespace omfam;
namespace fs = std::filesystem;

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

std::string temp_file(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / "omfam-tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p, std::ios::binary) << content;
  return p.string();
}

}  // namespace

TEST_CASE("matrix files") {
  const auto mf = parse_matrix("# comment\n2 3\n1 2/5 0.25\n-3 1e1 0\n");
  CHECK(mf.matrix == Matrix{{1, Rational(2, 5), Rational(1, 4)}, {-3, 10, 0}});
  CHECK(!mf.approximate);
  CHECK(parse_matrix(format_matrix(mf.matrix)).matrix == mf.matrix);

  try {
    parse_matrix("2 2\n1 2\n3 x\n");
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_matrix("2 2\n1 2\n"), InputError);
  CHECK_THROWS_AS(parse_matrix("1 2\n1 2 3\n"), InputError);
  CHECK_THROWS_AS(parse_matrix(""), InputError);
  CHECK_THROWS_AS(parse_matrix("1 2\n1 sqrt(2)\n"), IrrationalInput);
  const auto fl = parse_matrix("1 2\n1 sqrt(2)\n", Mode::Float);
  CHECK(fl.approximate);
  CHECK(fl.matrix(0, 1).to_double() == doctest::Approx(1.4142135623730951));
}

TEST_CASE("distribution, measure and subset syntax") {
  CHECK(parse_distribution("0 1/2 0 0.5\n").exact_values() == std::vector<Rational>{0, Rational(1, 2), 0, Rational(1, 2)});
  CHECK_THROWS_AS(parse_distribution("0.5 0.4"), InputError);
  CHECK_THROWS_AS(parse_distribution("0.5\n0.5\n"), InputError);
  CHECK(parse_distribution("0.3333333333 0.6666666667", Mode::Float, 1e-9).mode() == Mode::Float);
  CHECK(parse_measure("1 2\n3") == Vector{1, 2, 3});
  CHECK_THROWS_AS(parse_measure("1 0"), InputError);
  CHECK(parse_subset("1,3,4", 4) == IndexSet::from_indices({0, 2, 3}));
  CHECK(format_subset(IndexSet::from_indices({0, 2})) == "{1,3}");
  CHECK_THROWS_AS(parse_subset("0,1", 4), InputError);
  CHECK_THROWS_AS(parse_subset("5", 4), InputError);
}

TEST_CASE("circuits command") {
  const auto path = temp_file("ex1.txt", format_matrix(example1_matrix(2)));
  const auto r = run({"circuits", path, "--format", "json"});
  REQUIRE(r.code == cli::kOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["count"] == 3);
  CHECK(doc["bound"] == 4);
  CHECK(doc["signed_circuits"].size() == 6);
  CHECK(doc["circuits"][0] == nlohmann::json::array({0, 0, 1, -1}));

  const auto id = temp_file("id.txt", "2 2\n1 0\n0 1\n");
  CHECK(nlohmann::json::parse(run({"circuits", id, "--format", "json"}).out)["count"] == 0);
  const auto parity = temp_file("parity2.txt", format_matrix(parity_model_matrix(2)));
  CHECK(nlohmann::json::parse(run({"circuits", parity, "--format", "json"}).out)["count"] == 1);

  const auto text = run({"circuits", path});
  CHECK(text.out.find("count: 3") != std::string::npos);
  CHECK(text.out.find("+{3} -{4}") != std::string::npos);
}

TEST_CASE("text and json carry the same fields") {
  const auto path = temp_file("ex1.txt", format_matrix(example1_matrix(2)));
  for (const std::string cmd : {"circuits", "supports", "dual"}) {
    const auto doc = nlohmann::ordered_json::parse(run({cmd, path, "--format", "json"}).out);
    const auto text = run({cmd, path}).out;
    for (const auto& [key, value] : doc.items()) CHECK(text.find(key + ":") != std::string::npos);
  }
}

TEST_CASE("supports command") {
  const auto ex = temp_file("ex1.txt", format_matrix(example1_matrix(2)));
  const auto r = run({"supports", ex, "--format", "json", "--fvector", "--brute-force-check"});
  REQUIRE(r.code == cli::kOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["count"] == 3);
  CHECK(doc["supports"][2]["states"] == nlohmann::json::array({1, 2, 3, 4}));
  CHECK(doc["brute_force_check"]["agrees"] == true);
  CHECK(doc["neighborliness"] == 0);

  for (const auto& [m, file] : {std::pair{parity_model_matrix(2), "p2.txt"}, std::pair{moment_matrix(4), "m4.txt"}}) {
    const auto path = temp_file(file, format_matrix(m));
    CHECK(nlohmann::json::parse(run({"supports", path, "--format", "json"}).out)["count"] == 9);
  }

  Matrix big(1, 21);
  for (std::size_t c = 0; c < 21; ++c) big(0, c) = static_cast<long>(c);
  const auto wide = temp_file("wide.txt", format_matrix(big));
  CHECK(run({"supports", wide, "--brute-force-check"}).code == cli::kGuardExceeded);
}

TEST_CASE("member command") {
  const auto ex = temp_file("ex1.txt", format_matrix(example1_matrix(2)));
  const auto pa = temp_file("pa.txt", "0 1/2 0 1/2\n");
  const auto r = run({"member", ex, pa, "--format", "json"});
  CHECK(r.code == cli::kNotMember);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["member"] == false);
  CHECK(doc["violated"].size() == 2);
  CHECK(doc["violated"][0].contains("lhs"));
  REQUIRE(doc["equations"].size() == 3);
  CHECK(doc["equations"][1]["lhs_exponents"] == nlohmann::json::array({1, 2, 0, 0}));
  CHECK(doc["equations"][1]["rhs_exponents"] == nlohmann::json::array({0, 0, 3, 0}));

  CHECK(run({"member", ex, temp_file("mono.txt", "1/17 8/17 4/17 4/17")}).code == cli::kOk);
  CHECK(run({"member", ex, temp_file("delta.txt", "1 0 0 0")}).code == cli::kOk);
  CHECK(run({"member", ex, temp_file("short.txt", "1/2 1/2")}).code == cli::kDimensionMismatch);
  CHECK(run({"member", ex, temp_file("badsum.txt", "1/2 1/2 1/2 0")}).code == cli::kBadInput);
  CHECK(run({"member", ex, temp_file("mono.txt", "1/17 8/17 4/17 4/17"), "--q", temp_file("q3.txt", "1 1 1")}).code ==
        cli::kDimensionMismatch);
  const auto fl = run({"member", ex, temp_file("fl.txt", "0.0588235294117647 0.470588235294118 0.235294117647059 0.235294117647059"),
                       "--mode", "float", "--tol", "1e-6"});
  CHECK(fl.code == cli::kOk);
}

TEST_CASE("generate command") {
  CHECK(run({"generate", "example1", "--alpha", "2"}).out == format_matrix(example1_matrix(2)));
  const auto p3 = run({"generate", "parity", "--n", "3"});
  CHECK(p3.out.rfind("7 8\n", 0) == 0);
  CHECK(run({"generate", "cyclic", "--d", "2", "--n", "4"}).out == format_matrix(moment_matrix(4)));
  CHECK(run({"generate", "cyclic", "--d", "2", "--n", "3", "--t", "0,1/2,2"}).out ==
        format_matrix(Matrix{{1, 1, 1}, {0, Rational(1, 2), 2}, {0, Rational(1, 4), 4}}));
  CHECK(run({"generate", "moment", "--m", "5"}).out == format_matrix(moment_matrix(5)));
  CHECK(run({"generate", "example1", "--alpha", "1"}).code == cli::kBadInput);
  CHECK(run({"generate", "example1", "--alpha", "x"}).code == cli::kBadInput);
  CHECK(run({"generate", "parity", "--n", "1"}).code == cli::kBadInput);
  CHECK(run({"generate", "nope"}).code == cli::kBadInput);
}

TEST_CASE("dual command") {
  const auto ex = temp_file("ex1.txt", format_matrix(example1_matrix(2)));
  const auto r = run({"dual", ex, "--format", "json"});
  REQUIRE(r.code == cli::kOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["dual"]["rows"] == 2);
  CHECK(doc["cocircuit_count"] == 6);
  CHECK(doc["circuits_of_dual_match"] == true);

  const auto id = temp_file("id3.txt", format_matrix(Matrix::identity(3)));
  CHECK(nlohmann::json::parse(run({"dual", id, "--format", "json"}).out)["dual"]["rows"] == 0);
}

TEST_CASE("error exit codes") {
  const auto bad = temp_file("bad.txt", "2 2\n1 2\n3 x\n");
  const auto r = run({"circuits", bad});
  CHECK(r.code == cli::kBadInput);
  CHECK(r.err.find("line 3, column 3") != std::string::npos);
  CHECK(run({"circuits", temp_file("irr.txt", "1 2\n1 pi\n")}).code == cli::kIrrationalInExactMode);
  CHECK(run({"circuits", temp_file("irr.txt", "1 2\n1 pi\n"), "--mode", "float"}).code == cli::kOk);
  CHECK(run({"circuits", "/nonexistent/file"}).code == cli::kBadInput);
  CHECK(run({"frobnicate"}).code == cli::kBadInput);
  CHECK(run({}).code == cli::kBadInput);
  CHECK(run({"circuits", bad, "--format", "yaml"}).code == cli::kBadInput);
}

TEST_CASE("output is deterministic and can go to a file") {
  const auto p3 = temp_file("p3.txt", format_matrix(parity_model_matrix(3)));
  const auto a = run({"supports", p3, "--format", "json", "--fvector"});
  const auto b = run({"supports", p3, "--format", "json", "--fvector"});
  CHECK(a.out == b.out);
  const auto target = (fs::temp_directory_path() / "omfam-tests" / "report.json").string();
  CHECK(run({"supports", p3, "--format", "json", "--fvector", "--output", target}).out.empty());
  std::ifstream in(target);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == a.out);
  CHECK(nlohmann::json::parse(ss.str())["s_vector"][3] == 68);
}
