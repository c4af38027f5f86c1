#ifndef SONF_GL_RING_HPP
#define SONF_GL_RING_HPP

#include <vector>

#include "sonf/labels.hpp"
#include "sonf/qlaurent.hpp"

namespace sonf {

// Unramified-vector criteria for segments and segment products.
bool is_unramified_segment(const Segment& seg);
bool has_unramified_constituent(const SegmentProduct& p);

// Comultiplication M* of a single segment, expanded over the standard double
// sum; requires x - y >= 0.  Terms are counted with multiplicity.
TensorFormalSum comult_M_star(const Segment& seg);

// Componentwise extension of M* to products; the empty product gives 1 (x) 1.
TensorFormalSum M_star_product(const SegmentProduct& p);

// Number of terms of M_star_product whose left part has an unramified
// constituent (single segment: 1 ramified, 3 unramified singleton, 4 else).
long long M_star_ur_count(const SegmentProduct& p);
long long M_star_ur_count(const Segment& seg);

// Left/right derivatives at rho|.|^z (the label's twist carries z), extended
// to products by the Leibniz rule.
GLFormalSum left_derivative(const Segment& seg, const SupercuspidalLabel& at);
GLFormalSum right_derivative(const Segment& seg, const SupercuspidalLabel& at);
GLFormalSum left_derivative(const SegmentProduct& p, const SupercuspidalLabel& at);
GLFormalSum right_derivative(const SegmentProduct& p, const SupercuspidalLabel& at);

}  // namespace sonf

#endif
