#ifndef SONF_HECKE_GL_HPP
#define SONF_HECKE_GL_HPP

#include <vector>

#include "sonf/halfint.hpp"
#include "sonf/qlaurent.hpp"
#include "sonf/unit_sign.hpp"

namespace sonf {

// One factor (1 - sign * q^{-(s+x)}) of the inverse L-factor L(s)^{-1}.
struct InverseLFactor {
  UnitSign sign;
  HalfInt x;
};

// Solves for the Hecke eigenvalues lambda_0, ..., lambda_{r-1} of a GL_r
// newform with conductor >= 1 by matching coefficients of t = q^{-s} in
//   L(s)^{-1} = sum_i (-1)^i lambda_i q^{-i(s + (r-1)/2) + i(i-1)/2}.
// Throws std::invalid_argument when the inverse L-factor has degree >= r.
std::vector<QLaurent> hecke_eigenvalues(const std::vector<InverseLFactor>& inverse_l, int r);

}  // namespace sonf

#endif
