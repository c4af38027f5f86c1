#ifndef SONF_RANDOM_PARAMS_HPP
#define SONF_RANDOM_PARAMS_HPP

#include <cstdint>
#include <random>

#include "sonf/so_params.hpp"

namespace sonf {

struct ParamGenOptions {
  int max_per_unramified_line = 5;  // d, d' bound
  int max_ramified_labels = 2;
  int max_per_ramified_line = 3;
  long long max_twice_kappa = 15;   // kappas up to 15/2
};

// Stock unramified quadratic characters chi (trivial) and chi' (nontrivial).
SupercuspidalLabel chi_label();
SupercuspidalLabel chi_prime_label();

// Deterministic valid discrete parameter from the engine state.
DiscreteLParameter random_parameter(std::mt19937_64& rng, const ParamGenOptions& opts = {});

}  // namespace sonf

#endif
