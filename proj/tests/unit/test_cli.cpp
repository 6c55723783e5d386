#include <doctest.h>

#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "gsic/io.hpp"
#include "gsic_cli/cli.hpp"

using namespace gsic;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "gsic_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("usage errors exit with 1") {
  CHECK(call({}).code == cli::kUsage);
  CHECK(call({"nope"}).code == cli::kUsage);
  CHECK(call({"povm", "build"}).code == cli::kUsage);  // --t missing
  CHECK(call({"detect", "--family", "bogus"}).code == cli::kUsage);
  CHECK(call({"detect", "--family", "horodecki", "--d", "4", "--x", "0.5"}).code ==
        cli::kUsage);
  CHECK(call({"detect", "--family", "isotropic", "--q", "0.5", "--criteria", "foo"}).code ==
        cli::kUsage);
  CHECK(call({"reproduce", "4"}).code == cli::kUsage);
  CHECK(call({"--help"}).code == cli::kOk);
}

TEST_CASE("povm build emits a loadable document") {
  const auto r = call({"povm", "build", "--d", "3", "--t", "0.01"});
  REQUIRE(r.code == cli::kOk);
  const auto p = povm_from_json(r.out);
  CHECK(p.a() == GeneralSicPovm::construct(3, 0.01).a());
  CHECK(validate(p).passed);
}

TEST_CASE("infeasible t exits with 2 and names the element") {
  const auto r = call({"povm", "build", "--d", "3", "--t", "0.02"});
  CHECK(r.code == cli::kFailure);
  CHECK(r.err.find("element") != std::string::npos);
}

TEST_CASE("povm validate on a corrupted file exits with 2 naming completeness") {
  const auto path = scratch("corrupt.json");
  auto doc = nlohmann::json::parse(to_json(GeneralSicPovm::construct(3, 0.01)));
  doc["elements"][2][4][0] = doc["elements"][2][4][0].get<double>() + 1e-3;
  write_text_file(path.string(), doc.dump());
  const auto r = call({"povm", "validate", "--in", path.string()});
  CHECK(r.code == cli::kFailure);
  CHECK(r.err.find("completeness") != std::string::npos);
  CHECK(r.out.find("FAIL") != std::string::npos);

  const auto ok = call({"povm", "validate", "--d", "3", "--t", "0.0"});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out.find("PASS") != std::string::npos);
}

TEST_CASE("povm range prints the feasible interval") {
  const auto r = call({"povm", "range", "--d", "3"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("feasible t in [-0.0121") != std::string::npos);
}

TEST_CASE("detect prints one row per criterion") {
  const auto r = call({"detect", "--family", "isotropic", "--q", "0.5", "--t", "0.01",
                       "--criteria", "theorem1,ppt,realignment"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.find("theorem1") != std::string::npos);
  CHECK(r.out.find("ppt") != std::string::npos);
  CHECK(r.out.find("realignment") != std::string::npos);

  const auto j = call({"detect", "--family", "werner", "--f", "-0.5", "--t", "0.01",
                       "--criteria", "theorem1,ja", "--json"});
  REQUIRE(j.code == cli::kOk);
  const auto doc = nlohmann::json::parse(j.out);
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["detected"] == true);
  CHECK(std::abs(doc[0]["margin"].get<double>() - 48e-4 * 0.5) <= 1e-12);
  CHECK(std::abs(doc[1]["margin"].get<double>() - 36e-4 * -3.5) <= 1e-12);
  CHECK(doc[1]["detected"] == false);
}

TEST_CASE("detect from a state file") {
  const auto path = scratch("state.json");
  REQUIRE(call({"state", "--family", "horodecki", "--x", "0.3", "--out", path.string()}).code ==
          cli::kOk);
  const auto r = call({"detect", "--state", path.string(), "--t", "-0.01", "--json"});
  REQUIRE(r.code == cli::kOk);
  CHECK(nlohmann::json::parse(r.out)[0]["detected"] == true);
  CHECK(call({"detect", "--state", path.string(), "--family", "isotropic"}).code ==
        cli::kUsage);
}

TEST_CASE("scan output is deterministic and ordered") {
  const auto a = scratch("scan_a.csv");
  const auto b = scratch("scan_b.csv");
  const std::vector<std::string> common{"scan", "--family", "horodecki-noise",
                                        "--grid", "x=0.1:0.9:5", "--grid", "q=0.9:1:3",
                                        "--grid", "t=-0.01:0.01:3", "--criteria",
                                        "theorem1,ja,ppt"};
  auto args_a = common;
  args_a.insert(args_a.end(), {"--out", a.string()});
  auto args_b = common;
  args_b.insert(args_b.end(), {"--out", b.string()});
  REQUIRE(call(args_a).code == cli::kOk);
  REQUIRE(call(args_b).code == cli::kOk);
  const auto text = read_text_file(a.string());
  CHECK(text == read_text_file(b.string()));

  std::istringstream lines(text);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "x,q,t,criterion,value,threshold,margin,detected");
  std::size_t rows = 0;
  std::string first;
  for (std::string line; std::getline(lines, line);) {
    if (rows == 0) first = line;
    ++rows;
  }
  CHECK(rows == 5 * 3 * 3 * 3);
  CHECK(first.rfind("0.10000000000000001,0.90000000000000002,-0.01,theorem1,", 0) == 0);
}

TEST_CASE("scan without t-dependent criteria has no t column") {
  const auto path = scratch("scan_ppt.csv");
  REQUIRE(call({"scan", "--family", "werner", "--grid", "f=-1:1:5", "--criteria", "ppt",
                "--out", path.string()})
              .code == cli::kOk);
  const auto text = read_text_file(path.string());
  CHECK(text.rfind("f,criterion,", 0) == 0);
}

TEST_CASE("scan to an unwritable path exits with 2") {
  const auto r = call({"scan", "--family", "isotropic", "--q", "0.5", "--t", "0.01",
                       "--out", "/nonexistent/dir/out.csv"});
  CHECK(r.code == cli::kFailure);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("grid and family parsing") {
  const auto g = cli::parse_grid("q=0:1:5");
  CHECK(g.name == "q");
  CHECK(g.values == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK_THROWS(cli::parse_grid("q=0:1"));
  CHECK_THROWS(cli::parse_grid("q0:1:5"));
  CHECK_THROWS(cli::parse_grid("q=0:1:0"));
  CHECK(cli::linspace(0.3, 0.7, 1) == std::vector<double>{0.3});
  CHECK(cli::family_parameters(cli::Family::kHorodeckiNoise) ==
        std::vector<std::string>{"x", "q"});
  CHECK(cli::parse_family("werner") == cli::Family::kWerner);
  CHECK(cli::format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("reproduce passes for all three examples") {
  for (const char* ex : {"1", "2", "3"}) {
    const auto r = call({"reproduce", ex});
    INFO(r.out << r.err);
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
}
