#include "sonf/so_params.hpp"

#include <stdexcept>

namespace sonf {

std::optional<std::string> validate(const DiscreteLParameter& phi) {
  if (phi.n < 0) return "n must be non-negative";
  for (size_t i = 0; i < phi.summands.size(); ++i) {
    const Summand& s = phi.summands[i];
    if (auto err = s.label.check()) return *err;
    if (s.label.twist != HalfInt(0)) return "label '" + s.label.name + "': twist must be 0";
    if (s.kappa < HalfInt(0)) return "summand (" + s.label.name + "): kappa must be >= 0";
    bool integral = s.kappa.is_integer();
    if (s.label.kind == SelfdualKind::symplectic && !integral)
      return "summand (" + s.label.name + ", " + s.kappa.str() +
             "): symplectic labels need integer kappa";
    if (s.label.kind == SelfdualKind::orthogonal && integral)
      return "summand (" + s.label.name + ", " + s.kappa.str() +
             "): orthogonal labels need half-integer kappa";
    if (s.label.kind == SelfdualKind::none)
      return "summand (" + s.label.name + "): labels of a discrete parameter are self-dual";
    if (i > 0 && phi.summands[i - 1] == s)
      return "duplicate summand (" + s.label.name + ", " + s.kappa.str() + ")";
  }
  if (phi.dim() != 2 * phi.n)
    return "dimension mismatch: summands give " + std::to_string(phi.dim()) + ", expected " +
           std::to_string(2 * phi.n);
  return std::nullopt;
}

namespace {

void require_valid(const DiscreteLParameter& phi) {
  if (auto err = validate(phi)) throw std::domain_error("invalid parameter: " + *err);
}

}  // namespace

LabelPartition partition(const DiscreteLParameter& phi) {
  require_valid(phi);
  LabelPartition part;
  for (auto& label : phi.distinct_labels()) {
    auto ks = phi.kappas_of(label);
    size_t d = ks.size();
    if (label.kind == SelfdualKind::symplectic) {
      if (d % 2 == 0) {
        part.i1.push_back(label);
      } else if (d == 1 && ks[0] == HalfInt(0)) {
        part.i00.push_back(label);
      } else if (ks[0] == HalfInt(0)) {
        part.i01.push_back(label);
      } else {
        part.i02.push_back(label);
      }
    } else {
      (d % 2 == 0 ? part.i2_even : part.i2_odd).push_back(label);
    }
  }
  return part;
}

ConstructionResult construct(const DiscreteLParameter& phi) {
  require_valid(phi);
  LabelPartition part = partition(phi);
  ConstructionResult out;
  auto pair_tail = [&](const SupercuspidalLabel& label, const std::vector<HalfInt>& ks,
                       size_t first) {
    // Segments D_rho[kappa_{2j+1}, -kappa_{2j}] over consecutive pairs above `first`.
    for (size_t j = first; j + 1 < ks.size(); j += 2)
      out.segments.emplace_back(label, ks[j + 1], -ks[j]);
  };
  for (auto& label : part.i00) out.cuspidal_support.push_back(label);
  for (auto& label : part.i01) {
    out.cuspidal_support.push_back(label);
    pair_tail(label, phi.kappas_of(label), 1);
  }
  for (auto& label : part.i02) {
    out.cuspidal_support.push_back(label);
    auto ks = phi.kappas_of(label);
    out.segments.emplace_back(label, ks[0], HalfInt::whole(1));
    pair_tail(label, ks, 1);
  }
  for (auto& label : part.i1) pair_tail(label, phi.kappas_of(label), 0);
  for (auto& label : part.i2_even) pair_tail(label, phi.kappas_of(label), 0);
  for (auto& label : part.i2_odd) {
    auto ks = phi.kappas_of(label);
    out.segments.emplace_back(label, ks[0], HalfInt(1));
    pair_tail(label, ks, 1);
  }
  long long support_dim = 0;
  for (auto& l : out.cuspidal_support) support_dim += l.dim_k;
  if (support_dim % 2 != 0) throw std::logic_error("construct: odd cuspidal support dimension");
  out.n0 = support_dim / 2;
  std::sort(out.segments.begin(), out.segments.end());
  std::sort(out.cuspidal_support.begin(), out.cuspidal_support.end());
  return out;
}

long long conductor(const DiscreteLParameter& phi) {
  require_valid(phi);
  long long c = 0;
  for (auto& s : phi.summands) {
    if (!s.label.ramified)
      c += s.kappa.twice;  // 2 kappa
    else
      c += (s.kappa.twice + 1) * s.label.base_conductor;  // (2 kappa + 1) a_rho
  }
  return c;
}

UnitSign epsilon_sign(const DiscreteLParameter& phi, const SuppliedSigns& supplied) {
  require_valid(phi);
  UnitSign eps = UnitSign::plus();
  for (auto& s : phi.summands) {
    if (!s.label.ramified) {
      // (-chi(w))^{2 kappa}
      UnitSign base = UnitSign::minus() * *s.label.unram_sign;
      eps = eps * base.pow(s.kappa.twice);
    } else {
      auto it = supplied.find({s.label.name, s.kappa});
      if (it == supplied.end())
        throw std::invalid_argument("epsilon_sign: ramified summand (" + s.label.name + ", " +
                                    s.kappa.str() + ") needs a supplied sign");
      eps = eps * it->second;
    }
  }
  return eps;
}

DiscreteLParameter seed_of(const DiscreteLParameter& phi) {
  require_valid(phi);
  DiscreteLParameter seed = phi;
  for (auto& line : phi.unramified_lines()) {
    auto ks = phi.kappas_of(line);
    std::vector<HalfInt> keep;
    if (ks.size() % 2 == 1) keep.push_back(ks[0]);  // kappa_min survives an odd count
    auto& sums = seed.summands;
    for (auto it = sums.begin(); it != sums.end();) {
      if (it->label == line &&
          std::find(keep.begin(), keep.end(), it->kappa) == keep.end()) {
        seed.n -= it->dim() / 2;
        it = sums.erase(it);
      } else {
        ++it;
      }
    }
  }
  return seed;
}

namespace {

ChainRelation classify_relation(long long a, long long c) {
  if (a == c) return ChainRelation::equal;
  if (a == c - 1) return ChainRelation::off_by_one;
  throw std::logic_error("reduction_chain: a = " + std::to_string(a) + " vs c = " +
                         std::to_string(c) + " satisfies neither relation");
}

}  // namespace

std::vector<ReductionNode> reduction_chain(const DiscreteLParameter& phi,
                                           const std::vector<long long>& prefix_conductors) {
  require_valid(phi);
  std::vector<ReductionNode> nodes;

  DiscreteLParameter cur = phi;
  DiscreteLParameter seed = seed_of(cur);
  if (!(seed == cur)) {
    ReductionNode node;
    node.stage = "to-seed";
    node.parameter = cur;
    for (auto& line : cur.unramified_lines()) {
      auto ks = cur.kappas_of(line);
      auto kept = seed.kappas_of(line);
      std::vector<HalfInt> excess;
      for (auto k : ks)
        if (std::find(kept.begin(), kept.end(), k) == kept.end()) excess.push_back(k);
      for (size_t j = 0; j + 1 < excess.size(); j += 2)
        node.segments_peeled.emplace_back(line, excess[j + 1], -excess[j]);
    }
    long long two_sum = 0;
    for (auto& seg : node.segments_peeled) two_sum += 2 * seg.conductor();
    node.a_induced = conductor(seed) + two_sum;
    node.c_param = conductor(cur);
    node.relation = classify_relation(node.a_induced, node.c_param);
    nodes.push_back(node);
    cur = seed;
  }

  for (auto& line : cur.unramified_lines()) {
    auto ks = cur.kappas_of(line);
    if (ks.empty()) continue;
    HalfInt kappa = ks[0];
    ReductionNode node;
    node.stage = "strip-unramified";
    node.parameter = cur;
    node.segments_peeled.emplace_back(line, kappa, HalfInt(1));  // D_chi[kappa, 1/2]
    DiscreteLParameter next = cur;
    next.summands.erase(std::remove_if(next.summands.begin(), next.summands.end(),
                                       [&](const Summand& s) {
                                         return s.label == line && s.kappa == kappa;
                                       }),
                        next.summands.end());
    next.n -= (kappa.twice + 1) / 2;
    node.a_induced = conductor(next) + 2 * node.segments_peeled[0].conductor();
    node.c_param = conductor(cur);
    node.relation = classify_relation(node.a_induced, node.c_param);
    nodes.push_back(node);
    cur = next;
  }

  {
    // All remaining summands are ramified: peel the construction segments down
    // to the supercuspidal support.
    ReductionNode node;
    node.stage = "to-supercuspidal";
    node.parameter = cur;
    ConstructionResult cons = construct(cur);
    node.segments_peeled = cons.segments;
    long long support_conductor = 0;
    for (auto& l : cons.cuspidal_support) support_conductor += l.base_conductor;
    long long two_sum = 0;
    for (auto& seg : node.segments_peeled) two_sum += 2 * seg.conductor();
    node.a_induced = support_conductor + two_sum;
    node.c_param = conductor(cur);
    node.relation = classify_relation(node.a_induced, node.c_param);
    nodes.push_back(node);
  }

  if (!prefix_conductors.empty()) {
    long long two_sum = 0;
    for (auto c : prefix_conductors) {
      if (c < 0) throw std::invalid_argument("reduction_chain: prefix conductors must be >= 0");
      two_sum += 2 * c;
    }
    ReductionNode node;
    node.stage = "tempered-prefix";
    node.parameter = phi;
    node.a_induced = nodes.front().c_param + two_sum;
    node.c_param = conductor(phi) + two_sum;
    node.relation = classify_relation(node.a_induced, node.c_param);
    nodes.insert(nodes.begin(), node);
  }

  return nodes;
}

}  // namespace sonf
