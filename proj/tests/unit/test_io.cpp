#include <doctest.h>

#include <json.hpp>

#include "gsic/errors.hpp"
#include "gsic/io.hpp"
#include "test_support.hpp"

using namespace gsic;
using nlohmann::json;

TEST_CASE("POVM round trip is bit exact") {
  for (double t : {-0.0121, 0.0, 1.0 / 3.0 * 0.03}) {
    const auto p = GeneralSicPovm::construct(3, t);
    const auto back = povm_from_json(to_json(p));
    CHECK(back.d() == 3);
    REQUIRE(back.t().has_value());
    CHECK(*back.t() == t);
    CHECK(back.a() == p.a());
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(max_abs_diff(back[i], p[i]) == 0.0);
  }
  const auto sic = sic_fiducial_povm(2);
  const auto back = povm_from_json(to_json(sic, 2));
  CHECK_FALSE(back.t().has_value());
  CHECK(json::parse(to_json(sic))["t"].is_null());
}

TEST_CASE("state round trip keeps the split") {
  testing::Rng rng(71);
  const auto rho = testing::random_mixed_state(rng, 6, Split{2, 3});
  const auto back = state_from_json(to_json(rho));
  CHECK(back.split() == Split{2, 3});
  CHECK(max_abs_diff(back.matrix(), rho.matrix()) == 0.0);

  const auto plain = state_from_json(to_json(maximally_mixed(4)));
  CHECK_FALSE(plain.split().has_value());
}

TEST_CASE("state loader rejects bad documents") {
  CHECK_THROWS_AS(state_from_json("not json"), ValidationError);
  CHECK_THROWS_AS(state_from_json(R"({"kind": "povm"})"), ValidationError);
  CHECK_THROWS_AS(state_from_json(R"({"kind": "state", "dim": 2})"), ValidationError);
  // Negative eigenvalue.
  CHECK_THROWS_AS(
      state_from_json(
          R"({"kind": "state", "dim": 2, "split": null,
              "matrix": [[1.5, 0], [0, 0], [0, 0], [-0.5, 0]]})"),
      ValidationError);
  // Entry count does not match dim.
  CHECK_THROWS_AS(
      state_from_json(
          R"({"kind": "state", "dim": 2, "split": null, "matrix": [[1, 0], [0, 0]]})"),
      ValidationError);
  // Split that does not factor dim.
  CHECK_THROWS_AS(
      state_from_json(
          R"({"kind": "state", "dim": 2, "split": [2, 2],
              "matrix": [[0.5, 0], [0, 0], [0, 0], [0.5, 0]]})"),
      ValidationError);
  CHECK_NOTHROW(state_from_json(
      R"({"kind": "state", "dim": 2, "split": null,
          "matrix": [[0.5, 0], [0, 0], [0, 0], [0.5, 0]]})"));
}

TEST_CASE("POVM loader rejects malformed documents but not bad elements") {
  CHECK_THROWS_AS(povm_from_json("[1, 2]"), ValidationError);
  CHECK_THROWS_AS(povm_from_json(R"({"kind": "state"})"), ValidationError);

  auto doc = json::parse(to_json(GeneralSicPovm::construct(3, 0.01)));
  doc["elements"][0][0][0] = doc["elements"][0][0][0].get<double>() + 1e-3;
  const auto p = povm_from_json(doc.dump());
  const auto rep = validate(p);
  CHECK_FALSE(rep.passed);
  const auto f = rep.failures();
  CHECK(std::find(f.begin(), f.end(), "completeness") != f.end());
}

TEST_CASE("basis and report documents") {
  const auto b = json::parse(to_json(gellmann_basis(3)));
  CHECK(b["kind"] == "basis");
  CHECK(b["d"] == 3);
  CHECK(b["elements"].size() == 8);
  CHECK(b["elements"][0].size() == 9);

  const auto r = make_report("theorem1", 0.5, 0.25, {{"tA", 0.01}});
  const auto j = json::parse(to_json(r));
  CHECK(j["kind"] == "report");
  CHECK(j["criterion"] == "theorem1");
  CHECK(j["margin"].get<double>() == 0.25);
  CHECK(j["detected"] == true);
  CHECK(j["params"]["tA"].get<double>() == 0.01);

  CHECK(json_kind(to_json(r)) == "report");
  CHECK_THROWS_AS(json_kind("{}"), ValidationError);
}

TEST_CASE("file helpers report unreadable and unwritable paths") {
  CHECK_THROWS_AS(read_text_file("/nonexistent/dir/file.json"), std::runtime_error);
  CHECK_THROWS_AS(write_text_file("/nonexistent/dir/file.json", "x"), std::runtime_error);
}
