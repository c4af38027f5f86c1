#include "sonf/gl_ring.hpp"

#include <stdexcept>

namespace sonf {

bool is_unramified_segment(const Segment& seg) {
  if (seg.is_empty()) return true;
  return seg.x == seg.y && !seg.label.ramified;
}

bool has_unramified_constituent(const SegmentProduct& p) {
  for (auto& f : p.factors)
    if (!is_unramified_segment(f)) return false;
  return true;
}

TensorFormalSum comult_M_star(const Segment& seg) {
  if (seg.is_empty()) throw std::invalid_argument("comult_M_star: needs x - y >= 0");
  const HalfInt x = seg.x, y = seg.y;
  const long long len = (x - y).as_integer();  // x - y
  const SupercuspidalLabel rho = seg.label;    // twist already folded into x, y
  const SupercuspidalLabel rho_dual = rho.dual();
  TensorFormalSum out;
  for (long long i = 0; i <= len + 1; ++i) {
    for (long long j = 0; j <= i; ++j) {
      Segment l1(rho_dual, -y, HalfInt::whole(i) - x);
      Segment l2(rho, x, x + HalfInt::whole(1 - j));
      Segment r(rho, x - HalfInt::whole(j), x + HalfInt::whole(1 - i));
      out.add(SegmentProduct({l1, l2}), SegmentProduct({r}), 1);
    }
  }
  return out;
}

TensorFormalSum M_star_product(const SegmentProduct& p) {
  TensorFormalSum acc;
  acc.add(SegmentProduct(), SegmentProduct(), 1);
  for (auto& f : p.factors) {
    TensorFormalSum step = comult_M_star(f);
    TensorFormalSum next;
    for (auto& [ab, m1] : acc.terms)
      for (auto& [cd, m2] : step.terms)
        next.add(ab.first * cd.first, ab.second * cd.second, m1 * m2);
    acc = std::move(next);
  }
  return acc;
}

long long M_star_ur_count(const SegmentProduct& p) {
  long long count = 0;
  for (auto& [lr, m] : M_star_product(p).terms)
    if (has_unramified_constituent(lr.first)) count += m;
  return count;
}

long long M_star_ur_count(const Segment& seg) {
  return M_star_ur_count(SegmentProduct({seg}));
}

GLFormalSum left_derivative(const Segment& seg, const SupercuspidalLabel& at) {
  GLFormalSum out;
  if (seg.is_empty()) return out;
  if (seg.label.same_unitary(at) && at.twist == seg.x)
    out.add(SegmentProduct({Segment(seg.label, seg.x - HalfInt::whole(1), seg.y)}), 1);
  return out;
}

GLFormalSum right_derivative(const Segment& seg, const SupercuspidalLabel& at) {
  GLFormalSum out;
  if (seg.is_empty()) return out;
  if (seg.label.same_unitary(at) && at.twist == seg.y)
    out.add(SegmentProduct({Segment(seg.label, seg.x, seg.y + HalfInt::whole(1))}), 1);
  return out;
}

namespace {

template <typename Deriv>
GLFormalSum leibniz(const SegmentProduct& p, const SupercuspidalLabel& at, Deriv deriv) {
  GLFormalSum out;
  for (size_t i = 0; i < p.factors.size(); ++i) {
    GLFormalSum di = deriv(p.factors[i], at);
    for (auto& [q, m] : di.terms) {
      std::vector<Segment> rest;
      for (size_t j = 0; j < p.factors.size(); ++j)
        if (j != i) rest.push_back(p.factors[j]);
      out.add(SegmentProduct(rest) * q, m);
    }
  }
  return out;
}

}  // namespace

GLFormalSum left_derivative(const SegmentProduct& p, const SupercuspidalLabel& at) {
  return leibniz(p, at, [](const Segment& s, const SupercuspidalLabel& a) {
    return left_derivative(s, a);
  });
}

GLFormalSum right_derivative(const SegmentProduct& p, const SupercuspidalLabel& at) {
  return leibniz(p, at, [](const Segment& s, const SupercuspidalLabel& a) {
    return right_derivative(s, a);
  });
}

}  // namespace sonf
