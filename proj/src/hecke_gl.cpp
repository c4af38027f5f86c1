#include "sonf/hecke_gl.hpp"

#include <stdexcept>

namespace sonf {

std::vector<QLaurent> hecke_eigenvalues(const std::vector<InverseLFactor>& inverse_l, int r) {
  if (r < 1) throw std::invalid_argument("hecke_eigenvalues: r must be positive");
  if (static_cast<int>(inverse_l.size()) >= r)
    throw std::invalid_argument(
        "hecke_eigenvalues: inverse L-factor of degree >= r has no consistent solution");

  // Expand prod_j (1 - sign_j q^{-x_j} t) as coefficients of t^i.
  std::vector<QLaurent> poly = {QLaurent::one()};
  for (auto& f : inverse_l) {
    std::vector<QLaurent> next(poly.size() + 1);
    QLaurent factor = QLaurent::monomial(-f.sign.value, -f.x);
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i] = next[i] + poly[i];
      next[i + 1] = next[i + 1] + factor * poly[i];
    }
    poly = std::move(next);
  }

  // lambda_i = (-1)^i q^{i(r-1)/2 - i(i-1)/2} [t^i] L^{-1}.
  std::vector<QLaurent> lambda(r);
  for (int i = 0; i < r; ++i) {
    if (i >= static_cast<int>(poly.size())) continue;  // stays zero
    HalfInt shift = HalfInt(i * (r - 1)) - HalfInt::whole(static_cast<long long>(i) * (i - 1) / 2);
    long long sign = (i % 2 == 0) ? 1 : -1;
    lambda[i] = sign * (QLaurent::monomial(1, shift) * poly[i]);
  }
  return lambda;
}

}  // namespace sonf
