#include "sonf/level_raising.hpp"

#include <stdexcept>

namespace sonf {

namespace {

void check_range(int n, int r) {
  if (!(1 <= r && r <= n)) throw std::invalid_argument("level raising: need 1 <= r <= n");
}

}  // namespace

LevelRaisingState theta_evaluate(int n, int r, UnitSign chi_sign, HalfInt s, LevelOperator op) {
  check_range(n, r);
  // s + n - r/2 as a half-integer.
  HalfInt base = s + HalfInt::whole(n) - HalfInt(r);
  // chi^{r+1} q^{(r-1)(s+n-r/2) + (n-r)} on the class |S1| = r-1 (mod 2) for
  // theta, and on the complementary class for theta'.
  QLaurent coeff_a =
      chi_sign.pow(r + 1) * QLaurent::monomial(1, (r - 1) * base + HalfInt::whole(n - r));
  // chi^{r} q^{r(s+n-r/2)} on the class |S1| = r (mod 2) for theta.
  QLaurent coeff_b = chi_sign.pow(r) * QLaurent::monomial(1, r * base);

  LevelRaisingState st;
  st.n = n;
  st.r = r;
  st.chi_sign = chi_sign;
  st.s = s;
  st.op = op;
  int parity_a = (r - 1) % 2;  // |S1| parity carrying coeff_a under theta
  if (op == LevelOperator::theta_prime) parity_a = 1 - parity_a;
  if (parity_a == 0) {
    st.coeff_s1_even = coeff_a;
    st.coeff_s1_odd = coeff_b;
  } else {
    st.coeff_s1_even = coeff_b;
    st.coeff_s1_odd = coeff_a;
  }
  return st;
}

KernelWitness kernel_check(int n, int r, UnitSign chi_sign) {
  check_range(n, r);
  HalfInt s = -HalfInt(r);  // s = -r/2
  LevelRaisingState th = theta_evaluate(n, r, chi_sign, s, LevelOperator::theta);
  LevelRaisingState thp = theta_evaluate(n, r, chi_sign, s, LevelOperator::theta_prime);

  KernelWitness w;
  w.residual_even = th.coeff_s1_even - chi_sign * thp.coeff_s1_even;
  w.residual_odd = th.coeff_s1_odd - chi_sign * thp.coeff_s1_odd;
  if (r == n) {
    w.twisted_residual_even = thp.coeff_s1_even - chi_sign * th.coeff_s1_even;
    w.twisted_residual_odd = thp.coeff_s1_odd - chi_sign * th.coeff_s1_odd;
  }
  w.zero = w.residual_even.is_zero() && w.residual_odd.is_zero() &&
           w.twisted_residual_even.is_zero() && w.twisted_residual_odd.is_zero();
  if (!w.zero) {
    if (!w.residual_even.is_zero())
      w.offending_class = "|S1| even";
    else if (!w.residual_odd.is_zero())
      w.offending_class = "|S1| odd";
    else
      w.offending_class = "twisted evaluation point";
  }
  return w;
}

QLaurent whittaker_value(int n, int r, UnitSign chi_sign) {
  check_range(n, r);
  HalfInt s = HalfInt(r);  // s = r/2
  LevelRaisingState th = theta_evaluate(n, r, chi_sign, s, LevelOperator::theta);
  LevelRaisingState thp = theta_evaluate(n, r, chi_sign, s, LevelOperator::theta_prime);
  // S1 = empty lies in the even class; the surviving residue sum over
  // I^+_empty has (n-r)(n-r-1)/2 coordinates.
  QLaurent diff = th.coeff_s1_even - chi_sign * thp.coeff_s1_even;
  long long vol_exp = static_cast<long long>(n - r) * (n - r - 1) / 2;
  return QLaurent::monomial(1, HalfInt::whole(vol_exp)) * diff;
}

}  // namespace sonf
