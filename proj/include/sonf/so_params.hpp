#ifndef SONF_SO_PARAMS_HPP
#define SONF_SO_PARAMS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sonf/labels.hpp"
#include "sonf/unit_sign.hpp"

namespace sonf {

// One summand phi_rho (x) S_{2kappa+1} of a discrete L-parameter.
struct Summand {
  SupercuspidalLabel label;  // twist 0
  HalfInt kappa{0};

  long long dim() const { return label.dim_k * (kappa.twice + 1); }

  auto key() const { return std::tuple(label.key(), kappa.twice); }
  friend bool operator==(const Summand& a, const Summand& b) { return a.key() == b.key(); }
  friend bool operator<(const Summand& a, const Summand& b) { return a.key() < b.key(); }
};

// Discrete L-parameter of SO(2n+1): a multiplicity-free multiset of summands
// of total dimension 2n.  The summand list is kept sorted; validate() reports
// the first violated invariant.  Derived parameters coming out of the Jacquet
// calculus may carry a repeated summand; validate() flags those.
struct DiscreteLParameter {
  long long n = 0;
  std::vector<Summand> summands;

  DiscreteLParameter() = default;
  DiscreteLParameter(long long nn, std::vector<Summand> s) : n(nn), summands(std::move(s)) {
    sort();
  }

  void sort() { std::sort(summands.begin(), summands.end()); }

  long long dim() const {
    long long d = 0;
    for (auto& s : summands) d += s.dim();
    return d;
  }

  std::vector<HalfInt> kappas_of(const SupercuspidalLabel& label) const {
    std::vector<HalfInt> ks;
    for (auto& s : summands)
      if (s.label == label) ks.push_back(s.kappa);
    std::sort(ks.begin(), ks.end());
    return ks;
  }

  std::vector<SupercuspidalLabel> distinct_labels() const {
    std::vector<SupercuspidalLabel> ls;
    for (auto& s : summands)
      if (ls.empty() || !(ls.back() == s.label)) ls.push_back(s.label);
    return ls;
  }

  // The unramified quadratic character lines present, in deterministic order.
  std::vector<SupercuspidalLabel> unramified_lines() const {
    std::vector<SupercuspidalLabel> ls;
    for (auto& l : distinct_labels())
      if (!l.ramified) ls.push_back(l);
    return ls;
  }

  bool contains(const SupercuspidalLabel& label, HalfInt kappa) const {
    for (auto& s : summands)
      if (s.label == label && s.kappa == kappa) return true;
    return false;
  }

  friend bool operator==(const DiscreteLParameter& a, const DiscreteLParameter& b) {
    return a.n == b.n && a.summands == b.summands;
  }
};

std::optional<std::string> validate(const DiscreteLParameter& phi);

// The six-way label partition of the construction: I^00, I^01, I^02, I^1, and
// I^2 split by parity of d_rho.
struct LabelPartition {
  std::vector<SupercuspidalLabel> i00, i01, i02, i1, i2_even, i2_odd;
};

LabelPartition partition(const DiscreteLParameter& phi);

// Standard-module data of the generic square-integrable representation: the
// induced GL segments and the supercuspidal support.
struct ConstructionResult {
  std::vector<Segment> segments;
  std::vector<SupercuspidalLabel> cuspidal_support;
  long long n0 = 0;
};

ConstructionResult construct(const DiscreteLParameter& phi);

long long conductor(const DiscreteLParameter& phi);

// Per-summand epsilon signs for ramified summands, keyed by (label name, kappa).
using SuppliedSigns = std::map<std::pair<std::string, HalfInt>, UnitSign>;

UnitSign epsilon_sign(const DiscreteLParameter& phi, const SuppliedSigns& supplied = {});

// Seed parameter: drops excess summands on the two unramified character lines
// so that at most one survives per line (the minimal kappa when the count is
// odd).  Idempotent.
DiscreteLParameter seed_of(const DiscreteLParameter& phi);

enum class ChainRelation { equal, off_by_one };

inline std::string chain_relation_str(ChainRelation r) {
  return r == ChainRelation::equal ? "equal" : "off_by_one";
}

struct ReductionNode {
  std::string stage;  // "tempered-prefix" | "to-seed" | "strip-unramified" | "to-supercuspidal"
  DiscreteLParameter parameter;
  std::vector<Segment> segments_peeled;
  long long a_induced = 0;
  long long c_param = 0;
  ChainRelation relation = ChainRelation::equal;
};

// Full reduction chain: square-integrable -> seed -> (strip one unramified
// segment at a time) -> L-trivial seed -> supercuspidal support.  a_induced is
// recomputed bottom-up from peeled segment conductors under the premise that
// the level of the representation below equals its conductor; c_param comes
// from the parameter directly.  An optional prefix of GL conductor
// contributions models the reduction from generic to square-integrable.
std::vector<ReductionNode> reduction_chain(const DiscreteLParameter& phi,
                                           const std::vector<long long>& prefix_conductors = {});

}  // namespace sonf

#endif
