#include <doctest.h>

#include <random>

#include "sonf/json_io.hpp"
#include "sonf/random_params.hpp"
#include "sonf/verify.hpp"

using namespace sonf;

TEST_CASE("parameter json round trip") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 50; ++t) {
    DiscreteLParameter phi = random_parameter(rng);
    Json j = to_json(phi);
    DiscreteLParameter back = parameter_from_json(j);
    CHECK(back == phi);
  }
}

TEST_CASE("parameter json parsing accepts the documented schema") {
  Json j = Json::parse(R"({
    "n": 2,
    "summands": [
      {"label": {"name": "chi", "dim": 1, "ramified": false, "selfdual": "orthogonal",
                 "unram_sign": "+1", "base_conductor": 0},
       "kappa": "3/2"}
    ]
  })");
  DiscreteLParameter phi = parameter_from_json(j);
  CHECK(phi.n == 2);
  REQUIRE(phi.summands.size() == 1);
  CHECK(phi.summands[0].kappa == HalfInt(3));
  CHECK_FALSE(validate(phi).has_value());

  // Optional per-summand epsilon lands in the supplied-sign map.
  Json ram = Json::parse(R"({
    "n": 3,
    "summands": [
      {"label": {"name": "sigma", "dim": 2, "ramified": true, "selfdual": "symplectic",
                 "base_conductor": 1},
       "kappa": 1, "epsilon": "-1"}
    ]
  })");
  SuppliedSigns signs;
  DiscreteLParameter psi = parameter_from_json(ram, &signs);
  CHECK_FALSE(validate(psi).has_value());
  CHECK(signs.at({"sigma", HalfInt::whole(1)}) == UnitSign::minus());
  CHECK(epsilon_sign(psi, signs) == UnitSign::minus());
}

TEST_CASE("parse errors carry context") {
  CHECK_THROWS_AS(parameter_from_json(Json::parse("{\"summands\": []}")),
                  std::invalid_argument);
  CHECK_THROWS_AS(halfint_from_json(Json::parse("1.5")), std::invalid_argument);
  CHECK_THROWS_AS(label_from_json(Json::parse("{\"name\": \"x\"}")), std::invalid_argument);
}

TEST_CASE("qlaurent serialization lists exponent and coefficient pairs") {
  QLaurent p = QLaurent::monomial(2, HalfInt(3)) - QLaurent::monomial(1, HalfInt::whole(0));
  Json j = to_json(p);
  REQUIRE(j.size() == 2);
  CHECK(j[0][0] == "0");
  CHECK(j[0][1] == -1);
  CHECK(j[1][0] == "3/2");
  CHECK(j[1][1] == 2);
}

TEST_CASE("segment and matrix serialization") {
  Segment seg(chi_label(), HalfInt(3), HalfInt(-1));
  Json j = to_json(seg);
  CHECK(j["x"] == "3/2");
  CHECK(j["y"] == "-1/2");
  Segment back = segment_from_json(j);
  CHECK(back == seg);

  RatMatrix m = RatMatrix::identity(2);
  m.at(0, 1) = Rat(1, 27);
  Json mj = to_json(m);
  CHECK(mj[0][1] == "1/27");
}

TEST_CASE("verify output is byte-stable across runs") {
  VerifyOptions opts;
  opts.samples = 5;
  opts.max_n = 2;
  opts.max_d = 2;
  auto a = run_all_checks(opts);
  auto b = run_all_checks(opts);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].pass == b[i].pass);
    CHECK(a[i].detail == b[i].detail);
  }
}
