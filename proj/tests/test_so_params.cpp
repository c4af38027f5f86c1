#include <doctest.h>

#include <random>

#include "sonf/random_params.hpp"
#include "sonf/so_params.hpp"

using namespace sonf;

namespace {

SupercuspidalLabel symplectic_label(int dim = 2, long long cond = 1) {
  SupercuspidalLabel l;
  l.name = "sigma" + std::to_string(dim);
  l.dim_k = dim;
  l.ramified = true;
  l.kind = SelfdualKind::symplectic;
  l.base_conductor = cond;
  return l;
}

SupercuspidalLabel ramified_orth(int dim = 1, long long cond = 1) {
  SupercuspidalLabel l;
  l.name = "rho" + std::to_string(dim);
  l.dim_k = dim;
  l.ramified = true;
  l.kind = SelfdualKind::orthogonal;
  l.base_conductor = cond;
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

TEST_CASE("validation catches the spec violations") {
  DiscreteLParameter good = make({{chi_label(), HalfInt(3)}});
  CHECK(good.n == 2);
  CHECK_FALSE(validate(good).has_value());

  DiscreteLParameter dup = good;
  dup.summands.push_back({chi_label(), HalfInt(3)});
  dup.n = dup.dim() / 2;
  auto err = validate(dup);
  REQUIRE(err.has_value());
  CHECK(err->find("duplicate") != std::string::npos);

  DiscreteLParameter parity = make({{chi_label(), HalfInt::whole(1)}});
  err = validate(parity);
  REQUIRE(err.has_value());
  CHECK(err->find("half-integer") != std::string::npos);

  DiscreteLParameter bad_dim = good;
  bad_dim.n = 5;
  CHECK(validate(bad_dim).has_value());

  DiscreteLParameter symp_bad = make({{symplectic_label(), HalfInt(1)}});
  CHECK(validate(symp_bad).has_value());
}

TEST_CASE("partition of the label set") {
  auto phi = make({{symplectic_label(), HalfInt::whole(0)},
                   {chi_label(), HalfInt(1)},
                   {ramified_orth(), HalfInt(1)},
                   {ramified_orth(), HalfInt(3)}});
  LabelPartition part = partition(phi);
  REQUIRE(part.i00.size() == 1);
  CHECK(part.i00[0] == symplectic_label());
  REQUIRE(part.i2_odd.size() == 1);
  CHECK(part.i2_odd[0] == chi_label());
  REQUIRE(part.i2_even.size() == 1);
  CHECK(part.i2_even[0] == ramified_orth());

  auto phi2 = make({{symplectic_label(), HalfInt::whole(1)}, {symplectic_label(), HalfInt::whole(2)}});
  CHECK(partition(phi2).i1.size() == 1);

  auto phi3 = make({{symplectic_label(), HalfInt::whole(0)},
                    {symplectic_label(), HalfInt::whole(1)},
                    {symplectic_label(), HalfInt::whole(2)}});
  CHECK(partition(phi3).i01.size() == 1);

  auto phi4 = make({{symplectic_label(), HalfInt::whole(1)}});
  CHECK(partition(phi4).i02.size() == 1);
}

TEST_CASE("construction emits the standard-module segments") {
  // I^2 with even count: one segment D_chi[3/2, -1/2].
  auto even = make({{chi_label(), HalfInt(1)}, {chi_label(), HalfInt(3)}});
  ConstructionResult cons = construct(even);
  REQUIRE(cons.segments.size() == 1);
  CHECK(cons.segments[0] == Segment(chi_label(), HalfInt(3), HalfInt(-1)));
  CHECK(cons.cuspidal_support.empty());
  CHECK(cons.n0 == 0);

  // I^2 with odd count: D_chi[3/2, 1/2].
  auto odd = make({{chi_label(), HalfInt(3)}});
  cons = construct(odd);
  REQUIRE(cons.segments.size() == 1);
  CHECK(cons.segments[0] == Segment(chi_label(), HalfInt(3), HalfInt(1)));

  // I^00: no segments, support only.
  auto i00 = make({{symplectic_label(), HalfInt::whole(0)}});
  cons = construct(i00);
  CHECK(cons.segments.empty());
  REQUIRE(cons.cuspidal_support.size() == 1);
  CHECK(cons.n0 == 1);

  // I^02: leading segment D_rho[kappa_1, 1].
  auto i02 = make({{symplectic_label(), HalfInt::whole(2)}});
  cons = construct(i02);
  REQUIRE(cons.segments.size() == 1);
  CHECK(cons.segments[0] == Segment(symplectic_label(), HalfInt::whole(2), HalfInt::whole(1)));
  CHECK(cons.cuspidal_support.size() == 1);
}

TEST_CASE("conductor per summand") {
  CHECK(conductor(make({{chi_label(), HalfInt(3)}})) == 3);
  CHECK(conductor(DiscreteLParameter{}) == 0);
  CHECK(conductor(make({{chi_label(), HalfInt(1)}, {chi_prime_label(), HalfInt(1)}})) == 2);
  // Ramified summand: (2 kappa + 1) * base_conductor.
  CHECK(conductor(make({{symplectic_label(2, 2), HalfInt::whole(1)}})) == 6);
}

TEST_CASE("epsilon sign of unramified parameters") {
  CHECK(epsilon_sign(make({{chi_label(), HalfInt(3)}})) == UnitSign::minus());
  CHECK(epsilon_sign(make({{chi_prime_label(), HalfInt(1)}})) == UnitSign::plus());
  CHECK(epsilon_sign(DiscreteLParameter{}) == UnitSign::plus());
  // Ramified summands need a supplied sign.
  auto ram = make({{symplectic_label(), HalfInt::whole(1)}});
  CHECK_THROWS_AS(epsilon_sign(ram), std::invalid_argument);
  SuppliedSigns signs;
  signs[{symplectic_label().name, HalfInt::whole(1)}] = UnitSign::minus();
  CHECK(epsilon_sign(ram, signs) == UnitSign::minus());
}

TEST_CASE("seed association cases") {
  // Odd count keeps the minimal kappa.
  auto odd3 = make({{chi_label(), HalfInt(1)}, {chi_label(), HalfInt(3)},
                    {chi_label(), HalfInt(5)}, {symplectic_label(), HalfInt::whole(0)}});
  DiscreteLParameter seed = seed_of(odd3);
  CHECK(seed.kappas_of(chi_label()) == std::vector<HalfInt>{HalfInt(1)});
  CHECK(seed.contains(symplectic_label(), HalfInt::whole(0)));

  // Even counts drop the whole line.
  auto even2 = make({{chi_label(), HalfInt(1)}, {chi_label(), HalfInt(3)}});
  CHECK(seed_of(even2).summands.empty());
  CHECK(seed_of(even2).n == 0);

  // Idempotence.
  CHECK(seed_of(seed) == seed);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    DiscreteLParameter phi = random_parameter(rng);
    DiscreteLParameter s = seed_of(phi);
    CHECK(seed_of(s) == s);
    CHECK_FALSE(validate(s).has_value());
  }
}

TEST_CASE("reduction chain of a two-summand chi parameter") {
  auto phi = make({{chi_label(), HalfInt(1)}, {chi_label(), HalfInt(3)}});
  auto chain = reduction_chain(phi);
  REQUIRE(chain.size() == 2);
  CHECK(chain[0].stage == "to-seed");
  REQUIRE(chain[0].segments_peeled.size() == 1);
  CHECK(chain[0].segments_peeled[0] == Segment(chi_label(), HalfInt(3), HalfInt(-1)));
  CHECK(chain[0].segments_peeled[0].conductor() == 2);
  CHECK(chain[0].a_induced == 4);
  CHECK(chain[0].c_param == 4);
  CHECK(chain[0].relation == ChainRelation::equal);
  CHECK(chain[1].stage == "to-supercuspidal");
  CHECK(chain[1].a_induced == 0);
  CHECK(chain[1].c_param == 0);
  CHECK(chain[1].relation == ChainRelation::equal);
}

TEST_CASE("reduction chain strips seed segments off by one") {
  auto phi = make({{chi_label(), HalfInt(3)}, {symplectic_label(), HalfInt::whole(1)}});
  auto chain = reduction_chain(phi);
  REQUIRE(chain.size() == 2);
  CHECK(chain[0].stage == "strip-unramified");
  REQUIRE(chain[0].segments_peeled.size() == 1);
  CHECK(chain[0].segments_peeled[0] == Segment(chi_label(), HalfInt(3), HalfInt(1)));
  CHECK(chain[0].relation == ChainRelation::off_by_one);
  CHECK(chain[0].a_induced == chain[0].c_param - 1);
  CHECK(chain[1].stage == "to-supercuspidal");
  CHECK(chain[1].relation == ChainRelation::equal);
}

TEST_CASE("reduction chain of an all-ramified parameter is a single node") {
  auto phi = make({{symplectic_label(), HalfInt::whole(1)}, {ramified_orth(), HalfInt(1)}});
  auto chain = reduction_chain(phi);
  REQUIRE(chain.size() == 1);
  CHECK(chain[0].stage == "to-supercuspidal");
  CHECK(chain[0].relation == ChainRelation::equal);
  CHECK(chain[0].a_induced == chain[0].c_param);
}

TEST_CASE("reduction chain accepts a tempered prefix") {
  auto phi = make({{chi_label(), HalfInt(3)}});
  auto chain = reduction_chain(phi, {2, 1});
  REQUIRE(chain.size() >= 2);
  CHECK(chain[0].stage == "tempered-prefix");
  CHECK(chain[0].relation == ChainRelation::equal);
  CHECK(chain[0].c_param == conductor(phi) + 6);
}

TEST_CASE("chain relations on random parameters") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 200; ++t) {
    DiscreteLParameter phi = random_parameter(rng);
    for (auto& node : reduction_chain(phi)) {
      if (node.stage == "strip-unramified")
        CHECK(node.relation == ChainRelation::off_by_one);
      else
        CHECK(node.relation == ChainRelation::equal);
    }
  }
}
