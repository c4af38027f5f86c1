#include "sonf/so_jacquet.hpp"

#include <map>
#include <stdexcept>

#include "sonf/gl_ring.hpp"

namespace sonf {

std::vector<std::pair<HalfInt, HalfInt>> OmegaVector::runs() const {
  std::vector<std::pair<HalfInt, HalfInt>> rs;
  size_t i = 0;
  while (i < entries.size()) {
    size_t j = i;
    while (j + 1 < entries.size() && entries[j + 1] == entries[j] - HalfInt::whole(1)) ++j;
    rs.emplace_back(entries[i], entries[j]);
    i = j + 1;
  }
  return rs;
}

std::optional<std::string> OmegaVector::check() const {
  auto rs = runs();
  for (size_t i = 1; i < rs.size(); ++i) {
    if (rs[i - 1].first > rs[i].first) return "run starts must be non-decreasing";
    if (rs[i - 1].first == rs[i].first && rs[i - 1].second > rs[i].second)
      return "run ends must be non-decreasing among equal starts";
  }
  return std::nullopt;
}

DiscreteLParameter derivative_param(const DiscreteLParameter& phi, const SupercuspidalLabel& chi,
                                    HalfInt kappa) {
  if (!phi.contains(chi, kappa))
    throw std::invalid_argument("derivative_param: summand (" + chi.name + ", " + kappa.str() +
                                ") is absent; the derivative vanishes");
  HalfInt target = kappa - HalfInt::whole(1);
  bool drop = target < HalfInt(0);
  if (!drop && phi.contains(chi, target))
    throw std::invalid_argument("derivative_param: target summand (" + chi.name + ", " +
                                target.str() + ") already present; result is not discrete");
  DiscreteLParameter out = phi;
  for (auto& s : out.summands) {
    if (s.label == chi && s.kappa == kappa) {
      s.kappa = target;
      break;
    }
  }
  if (drop)
    out.summands.erase(std::remove_if(out.summands.begin(), out.summands.end(),
                                      [&](const Summand& s) {
                                        return s.label == chi && s.kappa == target;
                                      }),
                       out.summands.end());
  out.n -= chi.dim_k;
  out.sort();
  return out;
}

std::vector<KTuple> k_sets(const DiscreteLParameter& phi, const SupercuspidalLabel& chi,
                           int ell) {
  if (chi.ramified) throw std::invalid_argument("k_sets: chi must be unramified");
  auto ks = phi.kappas_of(chi);
  std::vector<KTuple> out;
  KTuple cur;
  cur.a.assign(ks.size(), 0);
  // Depth-first odometer over the bounded slots.
  auto rec = [&](auto&& self, size_t i, int remaining) -> void {
    if (i == ks.size()) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    int bound = static_cast<int>(ks[i].twice + 1);  // 2 kappa_i + 1
    for (int v = 0; v <= bound && v <= remaining; ++v) {
      cur.a[i] = v;
      self(self, i + 1, remaining - v);
    }
    cur.a[i] = 0;
  };
  if (ell >= 0) rec(rec, 0, ell);
  return out;
}

std::vector<KTuple> k_ur_filter(const std::vector<KTuple>& tuples) {
  std::vector<KTuple> out;
  for (auto& t : tuples)
    if (t.is_ur()) out.push_back(t);
  return out;
}

OmegaVector kappa_vector(const std::vector<HalfInt>& kappas, const KTuple& a) {
  if (kappas.size() != a.a.size())
    throw std::invalid_argument("kappa_vector: tuple length mismatch");
  std::vector<HalfInt> entries;
  for (size_t i = 0; i < kappas.size(); ++i)
    for (int step = 0; step < a.a[i]; ++step)
      entries.push_back(kappas[i] - HalfInt::whole(step));
  return OmegaVector(std::move(entries));
}

std::optional<long long> jac_dim(const OmegaVector& z_prime, const OmegaVector& z) {
  if (z_prime.entries.size() != z.entries.size())
    throw std::invalid_argument("jac_dim: vectors must have equal length");
  if (z_prime == z) {
    std::map<std::pair<HalfInt, HalfInt>, long long> mult;
    for (auto& r : z.runs()) ++mult[r];
    long long d = 1;
    for (auto& [run, m] : mult)
      for (long long i = 2; i <= m; ++i) d *= i;
    return d;
  }
  if (z_prime < z) return 0;
  return std::nullopt;  // above the diagonal the value is not determined here
}

namespace {

struct LineData {
  SupercuspidalLabel label;
  std::vector<HalfInt> kappas;
};

// Applies the selected single-step derivatives of one K^{ur} tuple to the
// summand multiset, without a discreteness requirement.
void apply_ur_tuple(DiscreteLParameter& param, const LineData& line, const KTuple& t) {
  for (size_t i = 0; i < t.a.size(); ++i) {
    if (t.a[i] == 0) continue;
    HalfInt kappa = line.kappas[i];
    HalfInt target = kappa - HalfInt::whole(1);
    for (auto& s : param.summands) {
      if (s.label == line.label && s.kappa == kappa) {
        s.kappa = target;
        break;
      }
    }
    if (target < HalfInt(0))
      param.summands.erase(std::find_if(param.summands.begin(), param.summands.end(),
                                        [&](const Summand& s) {
                                          return s.label == line.label && s.kappa == target;
                                        }));
    param.n -= line.label.dim_k;
  }
  param.sort();
}

std::vector<KTuple> all_ur_tuples(size_t d) {
  std::vector<KTuple> out;
  for (size_t mask = 0; mask < (size_t(1) << d); ++mask) {
    KTuple t;
    t.a.assign(d, 0);
    for (size_t i = 0; i < d; ++i)
      if (mask & (size_t(1) << i)) t.a[i] = 1;
    out.push_back(t);
  }
  return out;
}

}  // namespace

std::vector<MuUrTerm> mu_ur_terms(const DiscreteLParameter& phi) {
  if (auto err = validate(phi)) throw std::domain_error("mu_ur_terms: " + *err);
  std::vector<LineData> lines;
  for (auto& l : phi.unramified_lines()) lines.push_back({l, phi.kappas_of(l)});
  while (lines.size() < 2) lines.push_back({});

  std::vector<MuUrTerm> out;
  for (auto& a : all_ur_tuples(lines[0].kappas.size())) {
    for (auto& b : all_ur_tuples(lines[1].kappas.size())) {
      MuUrTerm term;
      std::vector<Segment> gl;
      for (size_t i = 0; i < a.a.size(); ++i)
        if (a.a[i]) gl.emplace_back(lines[0].label, lines[0].kappas[i], lines[0].kappas[i]);
      for (size_t i = 0; i < b.a.size(); ++i)
        if (b.a[i]) gl.emplace_back(lines[1].label, lines[1].kappas[i], lines[1].kappas[i]);
      term.gl_part = SegmentProduct(std::move(gl));
      term.so_parameter = phi;
      apply_ur_tuple(term.so_parameter, lines[0], a);
      apply_ur_tuple(term.so_parameter, lines[1], b);
      term.so_generic = true;
      out.push_back(std::move(term));
    }
  }
  return out;
}

long long count_mu_ur(const DiscreteLParameter& phi) {
  if (auto err = validate(phi)) throw std::domain_error("count_mu_ur: " + *err);
  long long d_total = 0;
  for (auto& l : phi.unramified_lines()) d_total += static_cast<long long>(phi.kappas_of(l).size());
  long long formula = 1LL << d_total;

  // Route 1: direct K^{ur} x K^{ur} enumeration.
  long long enumerated = static_cast<long long>(mu_ur_terms(phi).size());

  // Route 2: 4^l recursion through the seed, with each peeled segment counted
  // by full expansion of M* and the seed counted per its line occupancies.
  DiscreteLParameter seed = seed_of(phi);
  long long factor = 1;
  for (auto& line : phi.unramified_lines()) {
    auto ks = phi.kappas_of(line);
    auto kept = seed.kappas_of(line);
    std::vector<HalfInt> excess;
    for (auto k : ks)
      if (std::find(kept.begin(), kept.end(), k) == kept.end()) excess.push_back(k);
    for (size_t j = 0; j + 1 < excess.size(); j += 2)
      factor *= M_star_ur_count(Segment(line, excess[j + 1], -excess[j]));
  }
  long long seed_d = 0;
  for (auto& l : seed.unramified_lines()) seed_d += static_cast<long long>(seed.kappas_of(l).size());
  long long recursed = factor * (1LL << seed_d);

  if (enumerated != formula || recursed != formula)
    throw std::logic_error("count_mu_ur: routes disagree (enumeration " +
                           std::to_string(enumerated) + ", recursion " + std::to_string(recursed) +
                           ", formula " + std::to_string(formula) + ")");
  return formula;
}

std::vector<DiscreteLParameter> highest_derivative_chain(const DiscreteLParameter& phi,
                                                         const SupercuspidalLabel& chi) {
  if (auto err = validate(phi)) throw std::domain_error("highest_derivative_chain: " + *err);
  auto ks = phi.kappas_of(chi);
  if (ks.empty()) return {};
  if (ks.size() != 1)
    throw std::invalid_argument("highest_derivative_chain: the line of '" + chi.name +
                                "' must carry a single summand");
  if (ks[0].is_integer())
    throw std::invalid_argument(
        "highest_derivative_chain: the ladder kappa, ..., 1/2 needs a half-integer kappa");
  std::vector<DiscreteLParameter> chain = {phi};
  DiscreteLParameter cur = phi;
  for (HalfInt kappa = ks[0]; kappa >= HalfInt(1); kappa -= HalfInt::whole(1)) {
    cur = derivative_param(cur, chi, kappa);
    chain.push_back(cur);
  }
  return chain;
}

}  // namespace sonf
