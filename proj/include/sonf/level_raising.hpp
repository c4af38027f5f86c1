#ifndef SONF_LEVEL_RAISING_HPP
#define SONF_LEVEL_RAISING_HPP

#include <optional>
#include <string>

#include "sonf/halfint.hpp"
#include "sonf/qlaurent.hpp"
#include "sonf/unit_sign.hpp"

namespace sonf {

enum class LevelOperator { theta, theta_prime };

// Formal value of a level-raising operator on the newform of the standard
// module: a coefficient for each parity class of the sum over subsets S1 of
// {r+1..n} (classes indexed by the parity of |S1|).  The sums over S1 and the
// residue data stay symbolic; only the q-power coefficients are materialized.
struct LevelRaisingState {
  int n = 0;
  int r = 0;
  UnitSign chi_sign;
  HalfInt s{0};
  LevelOperator op = LevelOperator::theta;
  QLaurent coeff_s1_even;
  QLaurent coeff_s1_odd;
};

LevelRaisingState theta_evaluate(int n, int r, UnitSign chi_sign, HalfInt s, LevelOperator op);

// theta - chi(w) theta' at s = -r/2 must vanish classwise; for r = n the
// second evaluation point reduces through the involution twist to
// theta' - chi(w) theta, which is checked as well.
struct KernelWitness {
  QLaurent residual_even;
  QLaurent residual_odd;
  QLaurent twisted_residual_even;  // r = n route; zero polynomials otherwise
  QLaurent twisted_residual_odd;
  bool zero = false;
  std::optional<std::string> offending_class;
};

KernelWitness kernel_check(int n, int r, UnitSign chi_sign);

// Whittaker-functional value of theta - chi(w) theta' at s = r/2: only the
// S1-empty term survives, scaled by the residue-sum volume q^{(n-r)(n-r-1)/2}.
// Defined up to a global unit carried by the Whittaker pairing constant.
QLaurent whittaker_value(int n, int r, UnitSign chi_sign);

}  // namespace sonf

#endif
