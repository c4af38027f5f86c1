#include <doctest.h>

#include <random>
#include <set>

#include "sonf/gl_ring.hpp"
#include "sonf/random_params.hpp"
#include "sonf/so_jacquet.hpp"

using namespace sonf;

namespace {

SupercuspidalLabel ram_label() {
  SupercuspidalLabel l;
  l.name = "sigma";
  l.dim_k = 2;
  l.ramified = true;
  l.kind = SelfdualKind::symplectic;
  l.base_conductor = 1;
  return l;
}

DiscreteLParameter make(std::vector<Summand> sums) {
  DiscreteLParameter phi;
  phi.summands = std::move(sums);
  phi.sort();
  phi.n = phi.dim() / 2;
  return phi;
}

}  // namespace

TEST_CASE("single derivative step") {
  auto phi = make({{chi_prime_label(), HalfInt(5)}, {ram_label(), HalfInt::whole(1)}});
  DiscreteLParameter d = derivative_param(phi, chi_prime_label(), HalfInt(5));
  CHECK(d.contains(chi_prime_label(), HalfInt(3)));
  CHECK(d.n == phi.n - 1);

  // kappa = 1/2 drops the summand entirely: 2n' = 2n - 2.
  auto small = make({{chi_label(), HalfInt(1)}, {ram_label(), HalfInt::whole(1)}});
  DiscreteLParameter dropped = derivative_param(small, chi_label(), HalfInt(1));
  CHECK(dropped.kappas_of(chi_label()).empty());
  CHECK(dropped.n == small.n - 1);

  CHECK_THROWS_AS(derivative_param(phi, chi_label(), HalfInt(5)), std::invalid_argument);
  // Discreteness violation: target already present.
  auto clash = make({{chi_label(), HalfInt(1)}, {chi_label(), HalfInt(3)}});
  CHECK_THROWS_AS(derivative_param(clash, chi_label(), HalfInt(3)), std::invalid_argument);
}

TEST_CASE("K sets enumeration") {
  auto single = make({{chi_label(), HalfInt(3)}});
  auto ks = k_sets(single, chi_label(), 1);
  REQUIRE(ks.size() == 1);
  CHECK(ks[0].a == std::vector<int>{1});

  auto two = make({{chi_label(), HalfInt(1)}, {chi_label(), HalfInt(3)}});
  auto k2 = k_sets(two, chi_label(), 2);
  REQUIRE(k2.size() == 3);
  std::set<std::vector<int>> got;
  for (auto& t : k2) got.insert(t.a);
  CHECK(got == std::set<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});

  // |K^{ur} cap K^{(l)}| = binomial(d, l).
  auto binom = [](int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (int d = 0; d <= 8; ++d) {
    DiscreteLParameter phi;
    for (int i = 0; i < d; ++i) phi.summands.push_back({chi_label(), HalfInt(2 * i + 1)});
    phi.sort();
    phi.n = phi.dim() / 2;
    long long total = 0;
    for (int ell = 0; ell <= d; ++ell) {
      auto ur = k_ur_filter(k_sets(phi, chi_label(), ell));
      CHECK(static_cast<long long>(ur.size()) == binom(d, ell));
      total += static_cast<long long>(ur.size());
    }
    CHECK(total == (1LL << d));
  }
}

TEST_CASE("jacquet dimension on omega vectors") {
  OmegaVector z({HalfInt(3)});
  CHECK(jac_dim(z, z) == 1);

  OmegaVector twin({HalfInt(3), HalfInt(3)});
  CHECK_FALSE(twin.check().has_value());
  CHECK(jac_dim(twin, twin) == 2);

  OmegaVector low({HalfInt(1)});
  CHECK(jac_dim(low, z) == 0);
  CHECK_FALSE(jac_dim(z, low).has_value());

  // Runs are recovered from the flat entry list.
  OmegaVector mixed({HalfInt(3), HalfInt(1), HalfInt(3)});
  auto rs = mixed.runs();
  REQUIRE(rs.size() == 2);
  CHECK(rs[0] == std::pair(HalfInt(3), HalfInt(1)));
  CHECK(rs[1] == std::pair(HalfInt(3), HalfInt(3)));
  CHECK_THROWS_AS(jac_dim(z, twin), std::invalid_argument);
}

TEST_CASE("K^ur run vectors sit on the diagonal with dimension one") {
  // kappa(a) for a in K^{ur} has pairwise distinct singleton runs, so the
  // transition matrix is the identity there.
  std::vector<HalfInt> kappas = {HalfInt(1), HalfInt(3), HalfInt(7)};
  DiscreteLParameter phi;
  for (auto k : kappas) phi.summands.push_back({chi_label(), k});
  phi.sort();
  phi.n = phi.dim() / 2;
  for (int ell = 0; ell <= 3; ++ell)
    for (auto& a : k_ur_filter(k_sets(phi, chi_label(), ell))) {
      OmegaVector z = kappa_vector(kappas, a);
      CHECK_FALSE(z.check().has_value());
      CHECK(jac_dim(z, z) == 1);
    }
  // A non-ur tuple produces a longer run.
  KTuple deep;
  deep.a = {0, 2, 0};
  OmegaVector z = kappa_vector(kappas, deep);
  CHECK(z.entries == std::vector<HalfInt>{HalfInt(3), HalfInt(1)});
  CHECK(jac_dim(z, z) == 1);
}

TEST_CASE("mu_ur term enumeration") {
  // All-ramified: exactly one term with empty GL part.
  auto ram = make({{ram_label(), HalfInt::whole(1)}});
  auto terms = mu_ur_terms(ram);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].gl_part.is_trivial());
  CHECK(terms[0].so_parameter == ram);

  // Seed with d = d' = 1: the four asserted terms.
  auto seed = make({{chi_label(), HalfInt(3)}, {chi_prime_label(), HalfInt(1)}});
  terms = mu_ur_terms(seed);
  REQUIRE(terms.size() == 4);
  std::set<SegmentProduct> gl_parts;
  for (auto& t : terms) {
    gl_parts.insert(t.gl_part);
    CHECK(has_unramified_constituent(t.gl_part));
    CHECK(t.so_generic);
    CHECK(2 * t.gl_part.gl_dim() + t.so_parameter.dim() == 2 * seed.n);
  }
  CHECK(gl_parts.count(SegmentProduct()) == 1);
  CHECK(gl_parts.count(SegmentProduct({Segment(chi_label(), HalfInt(3), HalfInt(3))})) == 1);
  CHECK(gl_parts.count(SegmentProduct({Segment(chi_prime_label(), HalfInt(1), HalfInt(1))})) == 1);
  CHECK(gl_parts.count(SegmentProduct({Segment(chi_label(), HalfInt(3), HalfInt(3)),
                                       Segment(chi_prime_label(), HalfInt(1), HalfInt(1))})) == 1);

  // d = 2, d' = 1 gives 8 terms.
  auto mixed = make({{chi_label(), HalfInt(1)}, {chi_label(), HalfInt(5)},
                     {chi_prime_label(), HalfInt(1)}});
  CHECK(mu_ur_terms(mixed).size() == 8);
}

TEST_CASE("derived parameters are discrete when no collision is forced") {
  // kappas 1/2 and 5/2 never collide under single steps.
  auto phi = make({{chi_label(), HalfInt(1)}, {chi_label(), HalfInt(5)}});
  for (auto& t : mu_ur_terms(phi)) CHECK_FALSE(validate(t.so_parameter).has_value());
  // Adjacent kappas 1/2, 3/2: deriving only the larger one repeats S_2.
  auto adjacent = make({{chi_label(), HalfInt(1)}, {chi_label(), HalfInt(3)}});
  int discrete = 0, repeated = 0;
  for (auto& t : mu_ur_terms(adjacent)) {
    if (validate(t.so_parameter).has_value())
      ++repeated;
    else
      ++discrete;
    CHECK(2 * t.gl_part.gl_dim() + t.so_parameter.dim() == 2 * adjacent.n);
  }
  CHECK(discrete == 3);
  CHECK(repeated == 1);
}

TEST_CASE("count routes agree") {
  CHECK(count_mu_ur(make({{ram_label(), HalfInt::whole(1)}})) == 1);
  CHECK(count_mu_ur(make({{chi_label(), HalfInt(3)}, {chi_prime_label(), HalfInt(1)}})) == 4);
  CHECK(count_mu_ur(make({{chi_label(), HalfInt(1)}, {chi_label(), HalfInt(3)}})) == 4);
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    DiscreteLParameter phi = random_parameter(rng);
    long long d = 0;
    for (auto& line : phi.unramified_lines())
      d += static_cast<long long>(phi.kappas_of(line).size());
    CHECK(count_mu_ur(phi) == (1LL << d));
  }
}

TEST_CASE("highest derivative chain") {
  // kappa = 3/2: the trajectory [phi, after 3/2, after 1/2] has length 3.
  auto phi = make({{chi_label(), HalfInt(3)}, {ram_label(), HalfInt::whole(1)}});
  auto chain = highest_derivative_chain(phi, chi_label());
  REQUIRE(chain.size() == 3);
  CHECK(chain.front() == phi);
  CHECK(chain.back().kappas_of(chi_label()).empty());
  CHECK(chain.back().n == phi.n - 2);

  auto big = make({{chi_prime_label(), HalfInt(5)}});
  auto chain3 = highest_derivative_chain(big, chi_prime_label());
  REQUIRE(chain3.size() == 4);
  CHECK(chain3.back().summands.empty());
  // Derivative of the final parameter vanishes for every kappa.
  for (HalfInt k(1); k <= HalfInt(5); k += HalfInt::whole(1))
    CHECK_THROWS_AS(derivative_param(chain3.back(), chi_prime_label(), k),
                    std::invalid_argument);

  CHECK(highest_derivative_chain(phi, chi_prime_label()).empty());
}
