#include "sonf/verify.hpp"

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "sonf/coset_geometry.hpp"
#include "sonf/gl_ring.hpp"
#include "sonf/hecke_gl.hpp"
#include "sonf/level_raising.hpp"
#include "sonf/random_params.hpp"
#include "sonf/so_jacquet.hpp"
#include "sonf/so_params.hpp"

namespace sonf {

namespace {

struct Checker {
  std::vector<CheckResult>& out;

  void record(const std::string& name, bool pass, const std::string& detail = "") {
    out.push_back({name, pass, detail});
  }

  template <typename F>
  void run(const std::string& name, F body) {
    try {
      std::string detail;
      bool pass = body(detail);
      record(name, pass, detail);
    } catch (const std::exception& e) {
      record(name, false, std::string("exception: ") + e.what());
    }
  }
};

QLaurent random_qlaurent(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), coeff(-5, 5), expo(-6, 6);
  QLaurent q;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) q.add_term(HalfInt(expo(rng)), coeff(rng));
  return q;
}

std::vector<Segment> test_segments(long long max_len) {
  SupercuspidalLabel ram;
  ram.name = "rho";
  ram.ramified = true;
  ram.kind = SelfdualKind::orthogonal;
  ram.dim_k = 1;
  ram.base_conductor = 1;
  std::vector<Segment> segs;
  for (long long len = 0; len <= max_len; ++len) {
    segs.emplace_back(chi_label(), HalfInt::whole(len), HalfInt(0));
    segs.emplace_back(chi_prime_label(), HalfInt(2 * len + 1), HalfInt(1));
    segs.emplace_back(ram, HalfInt::whole(len + 1), HalfInt::whole(1));
    SupercuspidalLabel symp = ram;
    symp.name = "sigma";
    symp.kind = SelfdualKind::symplectic;
    symp.dim_k = 2;
    segs.emplace_back(symp, HalfInt::whole(len), HalfInt::whole(0));
  }
  return segs;
}

long long closed_form_ur_count(const Segment& s) {
  if (s.label.ramified) return 1;
  return s.x == s.y ? 3 : 4;
}

// ---- symbolics ----

void check_symbolics(Checker& ck, const VerifyOptions& opts) {
  ck.run("symbolics/qlaurent-ring-axioms", [&](std::string& detail) {
    std::mt19937_64 rng(opts.seed);
    for (int t = 0; t < opts.samples; ++t) {
      QLaurent a = random_qlaurent(rng), b = random_qlaurent(rng), c = random_qlaurent(rng);
      if (!((a * b) * c == a * (b * c)) || !(a * (b + c) == a * b + a * c) ||
          !(a * b == b * a) || !(a + b == b + a)) {
        detail = "axiom failed on sample " + std::to_string(t);
        return false;
      }
    }
    return true;
  });
  ck.run("symbolics/halfint-order", [&](std::string& detail) {
    for (long long s = -12; s <= 12; ++s)
      for (long long t = -12; t <= 12; ++t)
        if ((HalfInt(s) < HalfInt(t)) != (s < t)) {
          detail = "order mismatch";
          return false;
        }
    return true;
  });
}

// ---- gl_ring ----

void check_gl_ring(Checker& ck, const VerifyOptions& opts) {
  ck.run("gl/unram-count-table", [&](std::string& detail) {
    for (auto& seg : test_segments(8)) {
      long long got = M_star_ur_count(seg);
      if (got != closed_form_ur_count(seg)) {
        detail = seg.str() + ": expansion gives " + std::to_string(got);
        return false;
      }
    }
    return true;
  });
  ck.run("gl/unram-count-multiplicative", [&](std::string& detail) {
    // Factors with distinct unitary cuspidal supports.
    std::vector<Segment> a = {Segment(chi_label(), HalfInt(3), HalfInt(1)),
                              Segment(chi_label(), HalfInt(1), HalfInt(1))};
    std::vector<Segment> b = {Segment(chi_prime_label(), HalfInt(5), HalfInt(1))};
    for (auto& s1 : a)
      for (auto& s2 : b) {
        SegmentProduct p({s1, s2});
        if (M_star_ur_count(p) != M_star_ur_count(s1) * M_star_ur_count(s2)) {
          detail = p.str();
          return false;
        }
      }
    SegmentProduct big({a[0], a[1], b[0]});
    long long expect = M_star_ur_count(a[0]) * M_star_ur_count(a[1]) * M_star_ur_count(b[0]);
    if (M_star_ur_count(big) != expect) {
      detail = "three-factor product";
      return false;
    }
    (void)opts;
    return true;
  });
  ck.run("gl/counit-multiplicity", [&](std::string& detail) {
    for (auto& seg : test_segments(4)) {
      SegmentProduct p({seg});
      TensorFormalSum ms = M_star_product(p);
      auto it = ms.terms.find({SegmentProduct(), p});
      if (it == ms.terms.end() || it->second != 1) {
        detail = seg.str();
        return false;
      }
    }
    return true;
  });
  ck.run("gl/leibniz", [&](std::string& detail) {
    std::vector<Segment> segs = {Segment(chi_label(), HalfInt(3), HalfInt(1)),
                                 Segment(chi_label(), HalfInt(5), HalfInt(3)),
                                 Segment(chi_prime_label(), HalfInt(3), HalfInt(1))};
    for (auto& s1 : segs)
      for (auto& s2 : segs) {
        SegmentProduct p({s1, s2});
        for (auto& at_seg : segs) {
          SupercuspidalLabel at = at_seg.label.with_twist(at_seg.x);
          GLFormalSum lhs = left_derivative(p, at);
          GLFormalSum rhs;
          for (auto& [q, mult] : left_derivative(s1, at).terms)
            rhs.add(q * SegmentProduct({s2}), mult);
          for (auto& [q, mult] : left_derivative(s2, at).terms)
            rhs.add(SegmentProduct({s1}) * q, mult);
          if (!(lhs == rhs)) {
            detail = p.str() + " at " + at.name + "|.|^" + at.twist.str();
            return false;
          }
        }
      }
    return true;
  });
  ck.run("gl/hecke-lambda0", [&](std::string& detail) {
    std::mt19937_64 rng(opts.seed + 1);
    std::uniform_int_distribution<int> degree(0, 3), sgn(0, 1), ex(-2, 4);
    for (int t = 0; t < opts.samples; ++t) {
      int r = degree(rng) + 2;
      std::vector<InverseLFactor> fs;
      int deg = std::uniform_int_distribution<int>(0, r - 1)(rng);
      for (int i = 0; i < deg; ++i)
        fs.push_back({sgn(rng) ? UnitSign::plus() : UnitSign::minus(), HalfInt(ex(rng))});
      auto lambda = hecke_eigenvalues(fs, r);
      if (!(lambda[0] == QLaurent::one())) {
        detail = "lambda_0 != 1 on sample " + std::to_string(t);
        return false;
      }
    }
    return true;
  });
}

// ---- so_params ----

void check_so_params(Checker& ck, const VerifyOptions& opts) {
  ParamGenOptions gen;
  gen.max_per_unramified_line = opts.max_d;

  ck.run("so/seed-idempotent", [&](std::string& detail) {
    std::mt19937_64 rng(opts.seed + 2);
    ParamGenOptions wide = gen;
    wide.max_per_unramified_line = 6;
    for (int t = 0; t < opts.samples; ++t) {
      DiscreteLParameter phi = random_parameter(rng, wide);
      DiscreteLParameter seed = seed_of(phi);
      if (auto err = validate(seed)) {
        detail = *err;
        return false;
      }
      if (!(seed_of(seed) == seed)) {
        detail = "not idempotent on sample " + std::to_string(t);
        return false;
      }
      for (auto& line : seed.unramified_lines())
        if (seed.kappas_of(line).size() > 1) {
          detail = "seed keeps more than one summand on a line";
          return false;
        }
      // The non-unramified content is untouched.
      long long ram_before = 0, ram_after = 0;
      for (auto& s : phi.summands)
        if (s.label.ramified) ram_before += s.dim();
      for (auto& s : seed.summands)
        if (s.label.ramified) ram_after += s.dim();
      if (ram_before != ram_after) {
        detail = "ramified content changed";
        return false;
      }
    }
    return true;
  });

  ck.run("so/conductor-telescoping", [&](std::string& detail) {
    std::mt19937_64 rng(opts.seed + 3);
    ParamGenOptions wide = gen;
    wide.max_per_unramified_line = 6;
    for (int t = 0; t < opts.samples; ++t) {
      DiscreteLParameter phi = random_parameter(rng, wide);
      DiscreteLParameter seed = seed_of(phi);
      long long two_sum = 0;
      for (auto& line : phi.unramified_lines()) {
        auto ks = phi.kappas_of(line);
        auto kept = seed.kappas_of(line);
        std::vector<HalfInt> excess;
        for (auto k : ks)
          if (std::find(kept.begin(), kept.end(), k) == kept.end()) excess.push_back(k);
        for (size_t j = 0; j + 1 < excess.size(); j += 2)
          two_sum += 2 * Segment(line, excess[j + 1], -excess[j]).conductor();
      }
      if (conductor(phi) != conductor(seed) + two_sum) {
        detail = "telescoping failed on sample " + std::to_string(t);
        return false;
      }
    }
    return true;
  });

  ck.run("so/construct-content", [&](std::string& detail) {
    std::mt19937_64 rng(opts.seed + 4);
    for (int t = 0; t < opts.samples; ++t) {
      DiscreteLParameter phi = random_parameter(rng, gen);
      ConstructionResult cons = construct(phi);
      for (auto& seg : cons.segments)
        if (!(HalfInt(0) < seg.x + seg.y)) {
          detail = "non-positive central exponent in " + seg.str();
          return false;
        }
      // Reassemble exponent content: segments + duals + cuspidal support must
      // recover the multiset of (rho, exponent) constituents of phi.
      std::map<std::pair<std::string, long long>, long long> want, got;
      for (auto& s : phi.summands)
        for (long long tw = -s.kappa.twice; tw <= s.kappa.twice; tw += 2)
          ++want[{s.label.name, tw}];
      auto add_segment = [&](const Segment& seg) {
        for (HalfInt e = seg.y; e <= seg.x; e += HalfInt::whole(1))
          ++got[{seg.label.name, e.twice}];
      };
      for (auto& seg : cons.segments) {
        add_segment(seg);
        add_segment(seg.dual());
      }
      for (auto& l : cons.cuspidal_support) ++got[{l.name, 0}];
      if (want != got) {
        detail = "content mismatch on sample " + std::to_string(t);
        return false;
      }
      long long seg_dim = 0;
      for (auto& seg : cons.segments) seg_dim += seg.gl_dim();
      if (2 * cons.n0 + 1 + 2 * seg_dim != 2 * phi.n + 1) {
        detail = "dimension mismatch on sample " + std::to_string(t);
        return false;
      }
    }
    return true;
  });

  ck.run("so/chain-relations", [&](std::string& detail) {
    std::mt19937_64 rng(opts.seed + 5);
    for (int t = 0; t < opts.samples; ++t) {
      DiscreteLParameter phi = random_parameter(rng, gen);
      auto chain = reduction_chain(phi, t % 3 == 0 ? std::vector<long long>{1, 2}
                                                   : std::vector<long long>{});
      for (auto& node : chain) {
        bool expect_equal = node.stage != "strip-unramified";
        if (expect_equal != (node.relation == ChainRelation::equal)) {
          detail = "stage " + node.stage + " has relation " +
                   chain_relation_str(node.relation) + " on sample " + std::to_string(t);
          return false;
        }
      }
      if (chain.back().stage != "to-supercuspidal") {
        detail = "chain does not end at the supercuspidal support";
        return false;
      }
    }
    return true;
  });
}

// ---- so_jacquet ----

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_so_jacquet(Checker& ck, const VerifyOptions& opts) {
  ParamGenOptions gen;
  gen.max_per_unramified_line = opts.max_d;

  ck.run("jac/kur-binomial", [&](std::string& detail) {
    for (int d = 0; d <= 8; ++d) {
      DiscreteLParameter phi;
      for (int i = 0; i < d; ++i) phi.summands.push_back({chi_label(), HalfInt(2 * i + 1)});
      phi.sort();
      phi.n = phi.dim() / 2;
      for (int ell = 0; ell <= d + 1; ++ell) {
        auto ur = k_ur_filter(k_sets(phi, chi_label(), ell));
        if (static_cast<long long>(ur.size()) != binomial(d, ell)) {
          detail = "d=" + std::to_string(d) + " ell=" + std::to_string(ell);
          return false;
        }
      }
    }
    return true;
  });

  ck.run("jac/term-count", [&](std::string& detail) {
    std::mt19937_64 rng(opts.seed + 6);
    for (int t = 0; t < opts.samples; ++t) {
      DiscreteLParameter phi = random_parameter(rng, gen);
      long long d = 0;
      for (auto& line : phi.unramified_lines())
        d += static_cast<long long>(phi.kappas_of(line).size());
      if (static_cast<long long>(mu_ur_terms(phi).size()) != (1LL << d)) {
        detail = "sample " + std::to_string(t);
        return false;
      }
    }
    return true;
  });

  ck.run("jac/term-properties", [&](std::string& detail) {
    std::mt19937_64 rng(opts.seed + 7);
    for (int t = 0; t < opts.samples; ++t) {
      DiscreteLParameter phi = random_parameter(rng, gen);
      for (auto& term : mu_ur_terms(phi)) {
        if (!has_unramified_constituent(term.gl_part)) {
          detail = "GL part not unramified";
          return false;
        }
        if (!term.so_generic) {
          detail = "term not generic";
          return false;
        }
        if (2 * term.gl_part.gl_dim() + term.so_parameter.dim() != 2 * phi.n) {
          detail = "dimension bookkeeping failed on sample " + std::to_string(t);
          return false;
        }
      }
    }
    return true;
  });

  ck.run("jac/count-routes", [&](std::string& detail) {
    std::mt19937_64 rng(opts.seed + 8);
    for (int t = 0; t < opts.samples; ++t) {
      DiscreteLParameter phi = random_parameter(rng, gen);
      long long d = 0;
      for (auto& line : phi.unramified_lines())
        d += static_cast<long long>(phi.kappas_of(line).size());
      if (count_mu_ur(phi) != (1LL << d)) {
        detail = "sample " + std::to_string(t);
        return false;
      }
    }
    return true;
  });
}

// ---- coset geometry ----

void check_cosets(Checker& ck, const VerifyOptions& opts) {
  const long long p = opts.prime;

  ck.run("coset/gram-preservation", [&](std::string& detail) {
    for (int n = 1; n <= 4; ++n) {
      std::vector<RatMatrix> gens;
      for (int i = 1; i <= n; ++i) {
        gens.push_back(root_short(n, i, Rat(2)));
        gens.push_back(root_short_neg(n, i, Rat(1, 3)));
        gens.push_back(weyl_short(n, i, 1, p));
        for (int j = 1; j <= n; ++j)
          if (i != j) gens.push_back(root_eps_diff(n, i, j, Rat(-3)));
        for (int j = i + 1; j <= n; ++j) {
          gens.push_back(root_eps_sum(n, i, j, Rat(5, 9)));
          gens.push_back(root_eps_sum_neg(n, i, j, Rat(7)));
          gens.push_back(weyl_gl(n, i, j));
        }
      }
      std::vector<long long> exps(n, 0);
      if (n >= 2) exps[1] = -2;
      exps[0] = 1;
      gens.push_back(torus_cochar(n, exps, Rat(p)));
      for (auto& g : gens)
        if (!preserves_form(n, g)) {
          detail = "n=" + std::to_string(n);
          return false;
        }
    }
    return true;
  });

  ck.run("coset/relation-suite", [&](std::string& detail) {
    std::ostringstream why;
    bool ok = relation_suite(4, 2, p, why);
    detail = why.str();
    return ok;
  });

  ck.run("coset/coset-counts", [&](std::string& detail) {
    for (int n = 1; n <= 3; ++n)
      for (int m = 0; m <= 2; ++m) {
        auto reps = enumerate_coset_reps(n, m, p);
        if (static_cast<long long>(reps.size()) != expected_coset_count(n, p)) {
          detail = "n=" + std::to_string(n) + " m=" + std::to_string(m);
          return false;
        }
      }
    return true;
  });

  ck.run("coset/coset-distinctness", [&](std::string& detail) {
    for (int n = 1; n <= 3; ++n)
      for (int m = 0; m <= 2; ++m) {
        auto reps = enumerate_coset_reps(n, m, p);
        auto report = verify_coset_distinctness(reps, n, m, p, opts.parallel);
        if (!report.ok()) {
          detail = "collision at n=" + std::to_string(n) + " m=" + std::to_string(m);
          return false;
        }
      }
    return true;
  });

  ck.run("coset/hecke-counts", [&](std::string& detail) {
    for (int r = 2; r <= 4; ++r)
      for (int i = 0; i <= r - 1; ++i) {
        auto reps = enumerate_hecke_reps(r, i, p);
        if (static_cast<long long>(reps.size()) != expected_hecke_count(r, i, p)) {
          detail = "r=" + std::to_string(r) + " i=" + std::to_string(i);
          return false;
        }
      }
    return true;
  });

  ck.run("coset/hecke-distinctness", [&](std::string& detail) {
    for (int r = 2; r <= 4; ++r)
      for (int i = 1; i <= r - 1; ++i) {
        auto reps = enumerate_hecke_reps(r, i, p);
        auto report = verify_hecke_distinctness(reps, r, i, p, opts.parallel);
        if (!report.ok()) {
          detail = "collision at r=" + std::to_string(r) + " i=" + std::to_string(i);
          return false;
        }
      }
    return true;
  });

  ck.run("level/kernel-zero", [&](std::string& detail) {
    for (int n = 1; n <= 8; ++n)
      for (int r = 1; r <= n; ++r)
        for (UnitSign sign : {UnitSign::plus(), UnitSign::minus()}) {
          auto w = kernel_check(n, r, sign);
          if (!w.zero) {
            detail = "nonzero residual at n=" + std::to_string(n) + " r=" + std::to_string(r) +
                     " class " + w.offending_class.value_or("?");
            return false;
          }
        }
    return true;
  });

  ck.run("level/whittaker-nonvanishing", [&](std::string& detail) {
    for (int n = 1; n <= 8; ++n)
      for (int r = 1; r <= n; ++r)
        for (UnitSign sign : {UnitSign::plus(), UnitSign::minus()}) {
          QLaurent w = whittaker_value(n, r, sign);
          for (long long q : {2LL, 3LL})
            if (w.evaluate(q).is_zero()) {
              detail = "vanishes at q=" + std::to_string(q) + ", n=" + std::to_string(n) +
                       " r=" + std::to_string(r);
              return false;
            }
        }
    return true;
  });

  ck.run("parallel/serial-omp-agreement", [&](std::string& detail) {
    auto reps = enumerate_coset_reps(3, 1, p);
    auto a = verify_coset_distinctness(reps, 3, 1, p, true);
    auto b = verify_coset_distinctness_serial(reps, 3, 1, p);
    if (!(a.pairs_checked == b.pairs_checked && a.failures == b.failures)) {
      detail = "coset sweep";
      return false;
    }
    auto hreps = enumerate_hecke_reps(4, 2, p);
    auto ha = verify_hecke_distinctness(hreps, 4, 2, p, true);
    auto hb = verify_hecke_distinctness_serial(hreps, 4, 2, p);
    if (!(ha.pairs_checked == hb.pairs_checked && ha.failures == hb.failures)) {
      detail = "hecke sweep";
      return false;
    }
    return true;
  });
}

}  // namespace

std::vector<CheckResult> run_all_checks(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  Checker ck{out};
  check_symbolics(ck, opts);
  check_gl_ring(ck, opts);
  check_so_params(ck, opts);
  check_so_jacquet(ck, opts);
  check_cosets(ck, opts);
  return out;
}

}  // namespace sonf
