#include <doctest.h>

#include <sstream>

#include "sonf/coset_geometry.hpp"

using namespace sonf;

TEST_CASE("form preservation of the generators") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(preserves_form(n, root_short(n, 1, Rat(7))));
    CHECK(preserves_form(n, root_short_neg(n, n, Rat(1, 3))));
    CHECK(preserves_form(n, weyl_short(n, 1, 2, 3)));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        CHECK(preserves_form(n, root_eps_diff(n, i, j, Rat(-2))));
        CHECK(preserves_form(n, root_eps_sum(n, i, j, Rat(5, 27))));
        CHECK(preserves_form(n, root_eps_sum_neg(n, i, j, Rat(4))));
        CHECK(preserves_form(n, weyl_gl(n, i, j)));
      }
    std::vector<long long> exps(n, 1);
    CHECK(preserves_form(n, torus_cochar(n, exps, Rat(3))));
  }
}

TEST_CASE("chevalley generator example") {
  // x_{eps_1 - eps_2}(y): identity plus y in one slot and a compensating -y.
  RatMatrix g = root_eps_diff(2, 1, 2, Rat(5));
  CHECK(g.at(0, 1) == Rat(5));
  CHECK(g.at(3, 4) == Rat(-5));
  CHECK(preserves_form(2, g));
}

TEST_CASE("weyl relations") {
  int n = 3;
  long long p = 3;
  for (int m = 0; m <= 2; ++m)
    for (int i = 1; i <= n; ++i) {
      RatMatrix w = weyl_short(n, i, m, p);
      CHECK(w * w == RatMatrix::identity(2 * n + 1));
    }
  // w_{S,m+1} w_{S,m} = pi^{-lambda_S}.
  std::vector<int> S = {1, 3};
  RatMatrix lhs = weyl_set(n, S, 2, p) * weyl_set(n, S, 1, p);
  std::vector<long long> exps = {-1, 0, -1};
  CHECK(lhs == torus_cochar(n, exps, Rat(p)));
}

TEST_CASE("conjugation flips plus roots into the Levi") {
  int n = 3, m = 1;
  long long p = 3;
  std::vector<int> S = {2, 3};
  RatMatrix w = weyl_set(n, S, m + 1, p);
  Rat c = Rat(2) * Rat::prime_power(p, -(m + 1));
  CHECK(w * root_eps_sum(n, 1, 2, c) * w == root_eps_diff(n, 1, 2, Rat(-2)));
  CHECK(w * root_eps_sum(n, 1, 3, c) * w == root_eps_diff(n, 1, 3, Rat(-2)));
}

TEST_CASE("full relation suite") {
  std::ostringstream why;
  bool ok = relation_suite(3, 1, 3, why);
  CHECK_MESSAGE(ok, why.str());
  std::ostringstream why2;
  CHECK_MESSAGE(relation_suite(2, 1, 2, why2), why2.str());
}

TEST_CASE("coset representative counts") {
  CHECK(enumerate_coset_reps(1, 0, 3).size() == 1);
  for (long long p : {2LL, 3LL}) {
    CHECK(expected_coset_count(2, p) == p + 1);
    CHECK(expected_coset_count(3, p) == p * p * p + p * p + p + 1);
    for (int m = 0; m <= 2; ++m) {
      CHECK(static_cast<long long>(enumerate_coset_reps(2, m, p).size()) == p + 1);
      CHECK(static_cast<long long>(enumerate_coset_reps(3, m, p).size()) ==
            expected_coset_count(3, p));
    }
  }
}

TEST_CASE("coset representatives are pairwise distinct") {
  for (long long p : {2LL, 3LL})
    for (int n = 1; n <= 3; ++n)
      for (int m = 0; m <= 1; ++m) {
        auto reps = enumerate_coset_reps(n, m, p);
        auto report = verify_coset_distinctness(reps, n, m, p);
        CHECK(report.ok());
        long long N = static_cast<long long>(reps.size());
        CHECK(report.pairs_checked == N * (N - 1) / 2);
      }
}

TEST_CASE("coset matrices land in the group") {
  auto reps = enumerate_coset_reps(2, 1, 3);
  for (auto& rep : reps) CHECK(preserves_form(2, rep.matrix(2, 1, 3)));
}

TEST_CASE("hecke coset counts") {
  for (long long p : {2LL, 3LL}) {
    CHECK(expected_hecke_count(2, 1, p) == p);
    CHECK(expected_hecke_count(3, 1, p) == p * p + p);
    CHECK(expected_hecke_count(3, 0, p) == 1);
    for (int r = 2; r <= 4; ++r)
      for (int i = 0; i <= r - 1; ++i)
        CHECK(static_cast<long long>(enumerate_hecke_reps(r, i, p).size()) ==
              expected_hecke_count(r, i, p));
  }
  CHECK(enumerate_hecke_reps(3, 0, 3).size() == 1);
}

TEST_CASE("hecke representatives are pairwise distinct") {
  for (long long p : {2LL, 3LL})
    for (int r = 2; r <= 4; ++r)
      for (int i = 1; i <= r - 1; ++i) {
        auto reps = enumerate_hecke_reps(r, i, p);
        CHECK(verify_hecke_distinctness(reps, r, i, p).ok());
      }
}

TEST_CASE("parallel and serial sweeps agree") {
  auto reps = enumerate_coset_reps(3, 1, 2);
  auto par = verify_coset_distinctness(reps, 3, 1, 2, true);
  auto ser = verify_coset_distinctness_serial(reps, 3, 1, 2);
  CHECK(par.pairs_checked == ser.pairs_checked);
  CHECK(par.failures == ser.failures);

  auto hreps = enumerate_hecke_reps(4, 2, 3);
  auto hp = verify_hecke_distinctness(hreps, 4, 2, 3, true);
  auto hs = verify_hecke_distinctness_serial(hreps, 4, 2, 3);
  CHECK(hp.failures == hs.failures);
}

TEST_CASE("build_element dispatch") {
  ElementRequest req;
  req.kind = "root";
  req.root_type = "ei+ej";
  req.i = 1;
  req.j = 2;
  req.value = Rat(1, 3);
  CHECK(build_element(2, req) == root_eps_sum(2, 1, 2, Rat(1, 3)));
  req.root_type = "bogus";
  CHECK_THROWS_AS(build_element(2, req), std::invalid_argument);
  ElementRequest torus;
  torus.kind = "torus";
  torus.cochar = {1, -1};
  torus.value = Rat(3);
  CHECK(preserves_form(2, build_element(2, torus)));
}
