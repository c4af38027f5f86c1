#include "sonf/random_params.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sonf {

SupercuspidalLabel chi_label() {
  SupercuspidalLabel l;
  l.name = "chi";
  l.dim_k = 1;
  l.ramified = false;
  l.kind = SelfdualKind::orthogonal;
  l.unram_sign = UnitSign::plus();
  l.base_conductor = 0;
  return l;
}

SupercuspidalLabel chi_prime_label() {
  SupercuspidalLabel l = chi_label();
  l.name = "chi_prime";
  l.unram_sign = UnitSign::minus();
  return l;
}

namespace {

// Distinct kappas with the required parity: odd twice-values for orthogonal
// labels, even for symplectic ones.
std::vector<HalfInt> pick_kappas(std::mt19937_64& rng, int count, bool integral,
                                 long long max_twice) {
  std::vector<long long> pool;
  for (long long t = integral ? 0 : 1; t <= max_twice; t += 2) pool.push_back(t);
  std::shuffle(pool.begin(), pool.end(), rng);
  if (count > static_cast<int>(pool.size())) count = static_cast<int>(pool.size());
  std::vector<HalfInt> ks;
  for (int i = 0; i < count; ++i) ks.emplace_back(pool[i]);
  std::sort(ks.begin(), ks.end());
  return ks;
}

}  // namespace

DiscreteLParameter random_parameter(std::mt19937_64& rng, const ParamGenOptions& opts) {
  DiscreteLParameter phi;
  auto add_line = [&](const SupercuspidalLabel& label, int count, bool integral) {
    for (auto k : pick_kappas(rng, count, integral, opts.max_twice_kappa))
      phi.summands.push_back({label, k});
  };

  std::uniform_int_distribution<int> d_unram(0, opts.max_per_unramified_line);
  add_line(chi_label(), d_unram(rng), false);
  add_line(chi_prime_label(), d_unram(rng), false);

  std::uniform_int_distribution<int> n_ram(0, opts.max_ramified_labels);
  std::uniform_int_distribution<int> d_ram(1, opts.max_per_ramified_line);
  std::uniform_int_distribution<int> coin(0, 1);
  int ram_count = n_ram(rng);
  for (int k = 0; k < ram_count; ++k) {
    SupercuspidalLabel l;
    l.name = "rho" + std::to_string(k + 1);
    l.ramified = true;
    bool symplectic = coin(rng) == 1;
    l.kind = symplectic ? SelfdualKind::symplectic : SelfdualKind::orthogonal;
    l.dim_k = symplectic ? 2 * (1 + coin(rng)) : 1 + coin(rng) + coin(rng);
    l.base_conductor = 1 + coin(rng);
    add_line(l, d_ram(rng), symplectic);
  }

  phi.sort();
  phi.n = phi.dim() / 2;
  if (phi.dim() % 2 != 0) throw std::logic_error("random_parameter: odd total dimension");
  if (auto err = validate(phi)) throw std::logic_error("random_parameter: " + *err);
  return phi;
}

}  // namespace sonf
