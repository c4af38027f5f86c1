#include <doctest.h>

#include "sonf/gl_ring.hpp"
#include "sonf/hecke_gl.hpp"
#include "sonf/random_params.hpp"

using namespace sonf;

namespace {

SupercuspidalLabel ramified_char() {
  SupercuspidalLabel l;
  l.name = "rho";
  l.dim_k = 1;
  l.ramified = true;
  l.kind = SelfdualKind::orthogonal;
  l.base_conductor = 1;
  return l;
}

}  // namespace

TEST_CASE("unramified segment criterion") {
  HalfInt k(3);  // 3/2
  CHECK(is_unramified_segment(Segment(chi_label(), k, k)));
  CHECK_FALSE(is_unramified_segment(Segment(chi_label(), HalfInt(3), HalfInt(1))));
  CHECK(is_unramified_segment(Segment(ramified_char(), HalfInt::whole(1), HalfInt::whole(2))));
  CHECK_FALSE(is_unramified_segment(Segment(ramified_char(), HalfInt::whole(1), HalfInt::whole(1))));
}

TEST_CASE("unramified constituent of a product") {
  Segment s1(chi_label(), HalfInt(1), HalfInt(1));
  Segment s2(chi_prime_label(), HalfInt(3), HalfInt(3));
  CHECK(has_unramified_constituent(SegmentProduct({s1, s2})));
  Segment ram(ramified_char(), HalfInt::whole(1), HalfInt::whole(1));
  CHECK_FALSE(has_unramified_constituent(SegmentProduct({s1, ram})));
  CHECK(has_unramified_constituent(SegmentProduct()));
}

TEST_CASE("comultiplication of a singleton") {
  Segment seg(ramified_char(), HalfInt::whole(0), HalfInt::whole(0));
  TensorFormalSum ms = comult_M_star(seg);
  CHECK(ms.total_multiplicity() == 3);
  // Counit term 1 (x) seg has multiplicity exactly one.
  auto it = ms.terms.find({SegmentProduct(), SegmentProduct({seg})});
  REQUIRE(it != ms.terms.end());
  CHECK(it->second == 1);
}

TEST_CASE("comultiplication term counts") {
  // x - y = 2 gives (2+2)(2+3)/2 = 10 terms.
  Segment seg(chi_label(), HalfInt(5), HalfInt(1));
  CHECK(comult_M_star(seg).total_multiplicity() == 10);
  for (long long len = 0; len <= 6; ++len) {
    Segment s(chi_prime_label(), HalfInt(2 * len + 1), HalfInt(1));
    CHECK(comult_M_star(s).total_multiplicity() == (len + 2) * (len + 3) / 2);
  }
}

TEST_CASE("M* of products") {
  Segment s1(chi_label(), HalfInt(1), HalfInt(1));
  Segment s2(chi_prime_label(), HalfInt(3), HalfInt(3));
  SegmentProduct p({s1, s2});
  CHECK(M_star_product(p).total_multiplicity() == 9);
  CHECK(M_star_product(SegmentProduct({s1})) == comult_M_star(s1));
  TensorFormalSum empty = M_star_product(SegmentProduct());
  CHECK(empty.total_multiplicity() == 1);
  CHECK(empty.terms.count({SegmentProduct(), SegmentProduct()}) == 1);
  // Counit multiplicity one for the product as well.
  TensorFormalSum ms = M_star_product(p);
  auto it = ms.terms.find({SegmentProduct(), p});
  REQUIRE(it != ms.terms.end());
  CHECK(it->second == 1);
}

TEST_CASE("unramified term counts match the closed form") {
  CHECK(M_star_ur_count(Segment(ramified_char(), HalfInt::whole(2), HalfInt::whole(0))) == 1);
  CHECK(M_star_ur_count(Segment(chi_label(), HalfInt(1), HalfInt(1))) == 3);
  CHECK(M_star_ur_count(Segment(chi_label(), HalfInt(5), HalfInt(1))) == 4);
  for (long long len = 0; len <= 8; ++len) {
    CHECK(M_star_ur_count(Segment(chi_label(), HalfInt::whole(len), HalfInt::whole(0))) ==
          (len == 0 ? 3 : 4));
    CHECK(M_star_ur_count(Segment(ramified_char(), HalfInt::whole(len + 2), HalfInt::whole(2))) ==
          1);
    SupercuspidalLabel symp = ramified_char();
    symp.kind = SelfdualKind::symplectic;
    symp.dim_k = 2;
    CHECK(M_star_ur_count(Segment(symp, HalfInt::whole(len), HalfInt::whole(0))) == 1);
  }
}

TEST_CASE("unramified counts multiply over distinct cuspidal supports") {
  Segment a(chi_label(), HalfInt(3), HalfInt(-1));
  Segment b(chi_prime_label(), HalfInt(5), HalfInt(1));
  Segment c(ramified_char(), HalfInt::whole(1), HalfInt::whole(0));
  CHECK(M_star_ur_count(SegmentProduct({a, b})) ==
        M_star_ur_count(a) * M_star_ur_count(b));
  CHECK(M_star_ur_count(SegmentProduct({a, b, c})) ==
        M_star_ur_count(a) * M_star_ur_count(b) * M_star_ur_count(c));
}

TEST_CASE("left and right derivatives of segments") {
  SupercuspidalLabel chi = chi_label();
  Segment seg(chi, HalfInt(5), HalfInt(1));  // [5/2, 1/2]
  GLFormalSum dx = left_derivative(seg, chi.with_twist(HalfInt(5)));
  REQUIRE(dx.terms.size() == 1);
  CHECK(dx.terms.begin()->first == SegmentProduct({Segment(chi, HalfInt(3), HalfInt(1))}));
  CHECK(left_derivative(seg, chi.with_twist(HalfInt(3))).is_zero());
  CHECK(left_derivative(seg, chi_prime_label().with_twist(HalfInt(5))).is_zero());

  // Right derivative of a singleton shrinks to GL_0.
  Segment point(chi, HalfInt(1), HalfInt(1));
  GLFormalSum dr = right_derivative(point, chi.with_twist(HalfInt(1)));
  REQUIRE(dr.terms.size() == 1);
  CHECK(dr.terms.begin()->first.is_trivial());
}

TEST_CASE("Leibniz rule term by term") {
  SupercuspidalLabel chi = chi_label();
  std::vector<Segment> segs = {Segment(chi, HalfInt(3), HalfInt(1)),
                               Segment(chi, HalfInt(5), HalfInt(3)),
                               Segment(chi_prime_label(), HalfInt(3), HalfInt(1))};
  for (auto& s1 : segs)
    for (auto& s2 : segs)
      for (auto& at_seg : segs) {
        SupercuspidalLabel at = at_seg.label.with_twist(at_seg.x);
        SegmentProduct p({s1, s2});
        GLFormalSum lhs = left_derivative(p, at);
        GLFormalSum rhs;
        for (auto& [q, m] : left_derivative(s1, at).terms) rhs.add(q * SegmentProduct({s2}), m);
        for (auto& [q, m] : left_derivative(s2, at).terms) rhs.add(SegmentProduct({s1}) * q, m);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("hecke eigenvalues of the one-factor L-function") {
  for (int r = 2; r <= 10; ++r) {
    for (UnitSign sign : {UnitSign::plus(), UnitSign::minus()}) {
      auto lambda = hecke_eigenvalues({{sign, HalfInt(r - 1)}}, r);  // x = (r-1)/2
      REQUIRE(static_cast<int>(lambda.size()) == r);
      CHECK(lambda[0] == QLaurent::one());
      CHECK(lambda[1] == QLaurent::monomial(sign.value, HalfInt(0)));
      for (int i = 2; i < r; ++i) CHECK(lambda[i].is_zero());
    }
  }
}

TEST_CASE("hecke eigenvalues of trivial and quadratic L-functions") {
  auto trivial = hecke_eigenvalues({}, 3);
  CHECK(trivial[0] == QLaurent::one());
  CHECK(trivial[1].is_zero());
  CHECK(trivial[2].is_zero());

  // L(s) = (1 - q^{-(s+1)})^{-1} (1 + q^{-(s+1)})^{-1}, r = 3:
  // lambda_2 is pinned by the t^2 coefficient of 1 - q^{-2(s+1)}.
  auto lambda = hecke_eigenvalues(
      {{UnitSign::plus(), HalfInt::whole(1)}, {UnitSign::minus(), HalfInt::whole(1)}}, 3);
  CHECK(lambda[0] == QLaurent::one());
  CHECK(lambda[1].is_zero());
  CHECK(lambda[2] == QLaurent::monomial(-1, HalfInt::whole(-1)));
}

TEST_CASE("hecke eigenvalue inversion rejects excess degree") {
  std::vector<InverseLFactor> three(3, {UnitSign::plus(), HalfInt::whole(1)});
  CHECK_THROWS_AS(hecke_eigenvalues(three, 3), std::invalid_argument);
  CHECK_THROWS_AS(hecke_eigenvalues(three, 2), std::invalid_argument);
}
