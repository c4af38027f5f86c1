#include "sonf/coset_geometry.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sonf {

namespace {

// 0-based matrix slots: e_{-(n+1-i)} at i-1, e_0 at n, e_{n+1-i} at 2n+1-i.
inline int mi(int n, int i) {
  (void)n;
  return i - 1;
}
inline int pl(int n, int i) { return 2 * n + 1 - i; }
inline int zz(int n) { return n; }

void check_index(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("root index out of range");
}

Rat pairing(int n, const std::vector<Rat>& u, const std::vector<Rat>& v) {
  Rat s(0);
  int N = 2 * n + 1;
  for (int a = 0; a < N; ++a) {
    if (u[a].is_zero()) continue;
    int b = 2 * n - a;
    if (a == n)
      s = s + u[a] * Rat(2) * v[a];
    else
      s = s + u[a] * v[b];
  }
  return s;
}

}  // namespace

RatMatrix so_gram(int n) {
  RatMatrix g(2 * n + 1);
  for (int a = 0; a < 2 * n + 1; ++a) {
    if (a == n)
      g.at(a, a) = Rat(2);
    else
      g.at(a, 2 * n - a) = Rat(1);
  }
  return g;
}

bool preserves_form(int n, const RatMatrix& g) {
  RatMatrix gram = so_gram(n);
  return g.transpose() * gram * g == gram && g.det() == Rat(1);
}

RatMatrix root_eps_diff(int n, int i, int j, const Rat& c) {
  check_index(n, i);
  check_index(n, j);
  if (i == j) throw std::invalid_argument("eps_i - eps_j needs i != j");
  RatMatrix g = RatMatrix::identity(2 * n + 1);
  g.at(mi(n, i), mi(n, j)) = c;
  g.at(pl(n, j), pl(n, i)) = -c;
  return g;
}

RatMatrix root_eps_sum(int n, int i, int j, const Rat& c) {
  check_index(n, i);
  check_index(n, j);
  if (!(i < j)) throw std::invalid_argument("eps_i + eps_j needs i < j");
  RatMatrix g = RatMatrix::identity(2 * n + 1);
  g.at(mi(n, i), pl(n, j)) = c;
  g.at(mi(n, j), pl(n, i)) = -c;
  return g;
}

RatMatrix root_eps_sum_neg(int n, int i, int j, const Rat& c) {
  check_index(n, i);
  check_index(n, j);
  if (!(i < j)) throw std::invalid_argument("-(eps_i + eps_j) needs i < j");
  RatMatrix g = RatMatrix::identity(2 * n + 1);
  g.at(pl(n, j), mi(n, i)) = c;
  g.at(pl(n, i), mi(n, j)) = -c;
  return g;
}

RatMatrix root_short(int n, int i, const Rat& c) {
  check_index(n, i);
  RatMatrix g = RatMatrix::identity(2 * n + 1);
  g.at(zz(n), pl(n, i)) = c;
  g.at(mi(n, i), pl(n, i)) = -(c * c);
  g.at(mi(n, i), zz(n)) = -(Rat(2) * c);
  return g;
}

RatMatrix root_short_neg(int n, int i, const Rat& c) {
  check_index(n, i);
  RatMatrix g = RatMatrix::identity(2 * n + 1);
  g.at(zz(n), mi(n, i)) = -c;
  g.at(pl(n, i), mi(n, i)) = -(c * c);
  g.at(pl(n, i), zz(n)) = Rat(2) * c;
  return g;
}

RatMatrix weyl_short(int n, int i, int m, long long p) {
  check_index(n, i);
  RatMatrix g = RatMatrix::identity(2 * n + 1);
  g.at(mi(n, i), mi(n, i)) = Rat(0);
  g.at(pl(n, i), pl(n, i)) = Rat(0);
  g.at(mi(n, i), pl(n, i)) = -Rat::prime_power(p, -m);
  g.at(pl(n, i), mi(n, i)) = -Rat::prime_power(p, m);
  g.at(zz(n), zz(n)) = Rat(-1);
  return g;
}

RatMatrix weyl_set(int n, const std::vector<int>& S, int m, long long p) {
  RatMatrix g = RatMatrix::identity(2 * n + 1);
  for (int i : S) g = g * weyl_short(n, i, m, p);
  return g;
}

RatMatrix weyl_gl(int n, int i, int j) {
  check_index(n, i);
  check_index(n, j);
  if (i == j) throw std::invalid_argument("w_{eps_i - eps_j} needs i != j");
  return root_eps_diff(n, i, j, Rat(1)) * root_eps_diff(n, j, i, Rat(-1)) *
         root_eps_diff(n, i, j, Rat(1));
}

RatMatrix torus_cochar(int n, const std::vector<long long>& exps, const Rat& value) {
  if (static_cast<int>(exps.size()) != n)
    throw std::invalid_argument("torus_cochar: need one exponent per index");
  if (value.is_zero()) throw std::invalid_argument("torus_cochar: value must be nonzero");
  RatMatrix g = RatMatrix::identity(2 * n + 1);
  auto pow = [&](long long e) {
    Rat r(1);
    Rat step = e >= 0 ? value : value.inverse();
    long long k = e >= 0 ? e : -e;
    for (long long t = 0; t < k; ++t) r = r * step;
    return r;
  };
  for (int i = 1; i <= n; ++i) {
    g.at(mi(n, i), mi(n, i)) = pow(exps[i - 1]);
    g.at(pl(n, i), pl(n, i)) = pow(-exps[i - 1]);
  }
  return g;
}

RatMatrix u_of(int n, const std::map<std::pair<int, int>, Rat>& x) {
  RatMatrix g = RatMatrix::identity(2 * n + 1);
  for (auto& [ij, c] : x) {
    g.at(mi(n, ij.first), pl(n, ij.second)) = c;
    g.at(mi(n, ij.second), pl(n, ij.first)) = -c;
  }
  return g;
}

RatMatrix build_element(int n, const ElementRequest& req) {
  if (req.kind == "root") {
    if (req.root_type == "ei-ej") return root_eps_diff(n, req.i, req.j, req.value);
    if (req.root_type == "ei+ej") return root_eps_sum(n, req.i, req.j, req.value);
    if (req.root_type == "-ei-ej") return root_eps_sum_neg(n, req.i, req.j, req.value);
    if (req.root_type == "ei") return root_short(n, req.i, req.value);
    if (req.root_type == "-ei") return root_short_neg(n, req.i, req.value);
    throw std::invalid_argument("build_element: unknown root '" + req.root_type + "'");
  }
  if (req.kind == "weyl") {
    if (req.root_type == "ei-ej") return weyl_gl(n, req.i, req.j);
    if (!req.S.empty()) return weyl_set(n, req.S, req.m, req.p);
    return weyl_short(n, req.i, req.m, req.p);
  }
  if (req.kind == "torus") return torus_cochar(n, req.cochar, req.value);
  throw std::invalid_argument("build_element: unknown kind '" + req.kind + "'");
}

namespace {

std::vector<std::pair<int, int>> i_set_of(int n, const std::vector<int>& S) {
  std::vector<std::pair<int, int>> out;
  auto in_S = [&](int k) { return std::find(S.begin(), S.end(), k) != S.end(); };
  for (int i = 1; i <= n; ++i) {
    if (in_S(i)) continue;
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  }
  return out;
}

std::vector<std::vector<int>> even_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    std::vector<int> S;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) S.push_back(i + 1);
    out.push_back(std::move(S));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

RatMatrix CosetRep::matrix(int n, int m, long long p) const {
  RatMatrix g = weyl_set(n, S, m + 1, p);
  Rat scale = Rat::prime_power(p, -(m + 1));
  for (auto& [ij, res] : y)
    if (res != 0) g = g * root_eps_sum(n, ij.first, ij.second, Rat(res) * scale);
  return g;
}

std::vector<CosetRep> enumerate_coset_reps(int n, int m, long long p) {
  (void)m;
  std::vector<CosetRep> out;
  for (auto& S : even_subsets(n)) {
    auto roots = i_set_of(n, S);
    std::vector<int> odo(roots.size(), 0);
    while (true) {
      CosetRep rep;
      rep.S = S;
      for (size_t k = 0; k < roots.size(); ++k) rep.y[roots[k]] = odo[k];
      out.push_back(std::move(rep));
      size_t k = 0;
      while (k < odo.size() && ++odo[k] == p) odo[k++] = 0;
      if (k == odo.size()) break;
      if (odo.empty()) break;
    }
  }
  return out;
}

long long expected_coset_count(int n, long long p) {
  long long total = 0;
  for (auto& S : even_subsets(n)) {
    long long t = 1;
    for (size_t k = 0; k < i_set_of(n, S).size(); ++k) t *= p;
    total += t;
  }
  return total;
}

namespace {

// Congruence test of the proof: a pair is separated either by a pairing of
// valuation exactly -(m+1) (different S) or by a root coordinate outside the
// p^{-m} lattice bound (same S, different residues).
bool coset_pair_distinct(const CosetRep& b1, const CosetRep& b2, int n, int m, long long p) {
  Rat scale = Rat::prime_power(p, -(m + 1));
  if (b1.S == b2.S) {
    RatMatrix h = RatMatrix::identity(2 * n + 1);
    for (auto& [ij, res] : b2.y) {
      long long diff = b1.y.at(ij) - res;
      if (diff != 0) h = h * root_eps_sum(n, ij.first, ij.second, Rat(diff) * scale);
    }
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const Rat& e = h.at(i - 1, 2 * n + 1 - j);
        if (!e.is_zero() && e.valuation(p) < -m) return true;
      }
    return false;
  }
  std::vector<int> sdiff;
  for (int i = 1; i <= n; ++i) {
    bool in1 = std::find(b1.S.begin(), b1.S.end(), i) != b1.S.end();
    bool in2 = std::find(b2.S.begin(), b2.S.end(), i) != b2.S.end();
    if (in1 != in2) sdiff.push_back(i);
  }
  RatMatrix h = RatMatrix::identity(2 * n + 1);
  for (auto& [ij, res] : b2.y)
    if (res != 0) h = h * root_eps_sum(n, ij.first, ij.second, Rat(-res) * scale);
  h = h * weyl_set(n, sdiff, m + 1, p);
  for (auto& [ij, res] : b1.y)
    if (res != 0) h = h * root_eps_sum(n, ij.first, ij.second, Rat(res) * scale);
  int ell = sdiff.front();
  std::vector<Rat> basis(2 * n + 1);
  basis[2 * n + 1 - ell] = Rat(1);
  std::vector<Rat> image = h.apply(basis);
  Rat val = pairing(n, image, basis);
  return !val.is_zero() && val.valuation(p) == -(m + 1);
}

template <typename RepT, typename Check>
DistinctnessReport pairwise_sweep(const std::vector<RepT>& reps, Check check, bool parallel) {
  DistinctnessReport report;
  long long N = static_cast<long long>(reps.size());
  long long total = N * (N - 1) / 2;
  report.pairs_checked = total;
  std::vector<std::vector<std::pair<long long, long long>>> local(1);
#ifdef _OPENMP
  if (parallel) local.resize(static_cast<size_t>(omp_get_max_threads()));
#endif
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
#endif
  for (long long t = 0; t < total; ++t) {
    // Unrank the flat index into a pair (a, b) with a < b.
    long long a = 0, offset = t;
    while (offset >= N - 1 - a) {
      offset -= N - 1 - a;
      ++a;
    }
    long long b = a + 1 + offset;
    bool distinct = check(reps[a], reps[b]);
    if (!distinct) {
      size_t slot = 0;
#ifdef _OPENMP
      if (parallel) slot = static_cast<size_t>(omp_get_thread_num());
#endif
      local[slot].emplace_back(a, b);
    }
  }
  for (auto& v : local)
    report.failures.insert(report.failures.end(), v.begin(), v.end());
  std::sort(report.failures.begin(), report.failures.end());
  return report;
}

}  // namespace

DistinctnessReport verify_coset_distinctness(const std::vector<CosetRep>& reps, int n, int m,
                                             long long p, bool parallel) {
  return pairwise_sweep(
      reps,
      [&](const CosetRep& a, const CosetRep& b) { return coset_pair_distinct(a, b, n, m, p); },
      parallel);
}

DistinctnessReport verify_coset_distinctness_serial(const std::vector<CosetRep>& reps, int n,
                                                    int m, long long p) {
  return verify_coset_distinctness(reps, n, m, p, false);
}

RatMatrix HeckeCosetRep::matrix(int r, long long p) const {
  RatMatrix g = RatMatrix::identity(r);
  for (auto& [ij, res] : y)
    if (res != 0) g.at(ij.first - 1, ij.second - 1) = Rat(res);
  for (int i : S) g.at(i - 1, i - 1) = Rat(p);
  return g;
}

namespace {

std::vector<std::pair<int, int>> j_set_of(int r, const std::vector<int>& S) {
  std::vector<std::pair<int, int>> out;
  auto in_S = [&](int k) { return std::find(S.begin(), S.end(), k) != S.end(); };
  for (int i = 1; i <= r; ++i) {
    if (!in_S(i)) continue;
    for (int j = i + 1; j <= r; ++j)
      if (!in_S(j)) out.emplace_back(i, j);
  }
  return out;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> S;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) S.push_back(i + 1);
    out.push_back(std::move(S));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<HeckeCosetRep> enumerate_hecke_reps(int r, int i, long long p) {
  if (r < 1 || i < 0 || i > r - 1)
    throw std::invalid_argument("enumerate_hecke_reps: need 0 <= i <= r-1");
  std::vector<HeckeCosetRep> out;
  if (i == 0) {
    out.push_back({});  // nu_empty = 0: single identity coset
    return out;
  }
  for (auto& S : subsets_of_size(r - 1, i)) {
    auto roots = j_set_of(r, S);
    std::vector<int> odo(roots.size(), 0);
    while (true) {
      HeckeCosetRep rep;
      rep.S = S;
      for (size_t k = 0; k < roots.size(); ++k) rep.y[roots[k]] = odo[k];
      out.push_back(std::move(rep));
      size_t k = 0;
      while (k < odo.size() && ++odo[k] == p) odo[k++] = 0;
      if (k == odo.size()) break;
      if (odo.empty()) break;
    }
  }
  return out;
}

long long expected_hecke_count(int r, int i, long long p) {
  if (i == 0) return 1;
  long long total = 0;
  for (auto& S : subsets_of_size(r - 1, i)) {
    long long t = 1;
    for (size_t k = 0; k < j_set_of(r, S).size(); ++k) t *= p;
    total += t;
  }
  return total;
}

namespace {

// Necessary pattern for two representatives to share a coset: g1^{-1} g2 lies
// in GL_r(o) with the block rows <= i, cols > i divisible by p.
bool hecke_pair_distinct(const HeckeCosetRep& a, const HeckeCosetRep& b, int r, int i,
                         long long p) {
  RatMatrix m = a.matrix(r, p).inverse() * b.matrix(r, p);
  if (!m.all_integral()) return true;
  if (m.det().valuation(p) != 0) return true;
  for (int row = 1; row <= i; ++row)
    for (int col = i + 1; col <= r; ++col)
      if (m.at(row - 1, col - 1).num % p != 0) return true;
  return false;
}

}  // namespace

DistinctnessReport verify_hecke_distinctness(const std::vector<HeckeCosetRep>& reps, int r, int i,
                                             long long p, bool parallel) {
  return pairwise_sweep(
      reps,
      [&](const HeckeCosetRep& a, const HeckeCosetRep& b) {
        return hecke_pair_distinct(a, b, r, i, p);
      },
      parallel);
}

DistinctnessReport verify_hecke_distinctness_serial(const std::vector<HeckeCosetRep>& reps, int r,
                                                    int i, long long p) {
  return verify_hecke_distinctness(reps, r, i, p, false);
}

namespace {

RatMatrix gl_block_embed(int n, const RatMatrix& top, const RatMatrix& bottom) {
  RatMatrix g = RatMatrix::identity(2 * n + 1);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      g.at(r, c) = top.at(r, c);
      g.at(n + 1 + r, n + 1 + c) = bottom.at(r, c);
    }
  return g;
}

// Skew matrix X = sum_{i<j} x_{ij} (E_{i,n+1-j} - E_{j,n+1-i}) from its upper
// coefficients, and the reverse extraction.
RatMatrix skew_from_coeffs(int n, const std::map<std::pair<int, int>, Rat>& x) {
  RatMatrix X(n);
  for (auto& [ij, c] : x) {
    X.at(ij.first - 1, n - ij.second) = c;
    X.at(ij.second - 1, n - ij.first) = -c;
  }
  return X;
}

std::map<std::pair<int, int>, Rat> coeffs_from_skew(int n, const RatMatrix& X) {
  std::map<std::pair<int, int>, Rat> x;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!X.at(i - 1, n - j).is_zero()) x[{i, j}] = X.at(i - 1, n - j);
  return x;
}

std::vector<long long> lambda_of(int n, const std::vector<int>& S, long long scale) {
  std::vector<long long> exps(n, 0);
  for (int i : S) exps[i - 1] = scale;
  return exps;
}

}  // namespace

bool relation_suite(int max_n, int max_m, long long p, std::ostream& why) {
  for (int n = 1; n <= max_n; ++n) {
    RatMatrix id = RatMatrix::identity(2 * n + 1);
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> S;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) S.push_back(i + 1);
      subsets.push_back(std::move(S));
    }
    for (int m = 0; m <= max_m; ++m) {
      for (int i = 1; i <= n; ++i) {
        RatMatrix w = weyl_short(n, i, m, p);
        if (!(w * w == id)) {
          why << "w_{eps_" << i << "," << m << "}^2 != 1 at n=" << n;
          return false;
        }
      }
      for (auto& S : subsets) {
        RatMatrix lhs = weyl_set(n, S, m + 1, p) * weyl_set(n, S, m, p);
        RatMatrix rhs = torus_cochar(n, lambda_of(n, S, -1), Rat(p));
        if (!(lhs == rhs)) {
          why << "w_{S,m+1} w_{S,m} != pi^{-lambda_S} at n=" << n << " m=" << m;
          return false;
        }
      }
      // Conjugation table of w_{S,m+1} on the eps_i + eps_j root groups.
      Rat scale = Rat::prime_power(p, -(m + 1));
      for (auto& S : subsets) {
        RatMatrix w = weyl_set(n, S, m + 1, p);
        auto in_S = [&](int k) { return std::find(S.begin(), S.end(), k) != S.end(); };
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j) {
            if (in_S(i)) continue;
            for (long long y : {1LL, 2LL}) {
              RatMatrix conj = w * root_eps_sum(n, i, j, Rat(y) * scale) * w;
              RatMatrix expect = in_S(j) ? root_eps_diff(n, i, j, Rat(-y))
                                         : root_eps_sum(n, i, j, Rat(y) * scale);
              if (!(conj == expect)) {
                why << "conjugation table fails at n=" << n << " m=" << m << " (i,j)=(" << i
                    << "," << j << ")";
                return false;
              }
            }
          }
      }
      for (int k = 1; k <= n; ++k)
        for (int h = k + 1; h <= n; ++h) {
          RatMatrix w = weyl_set(n, {k, h}, m + 1, p);
          for (long long u : {1LL, 2LL}) {
            RatMatrix conj =
                w * root_eps_sum_neg(n, k, h, Rat::prime_power(p, m + 1) * Rat(u)) * w;
            RatMatrix expect = root_eps_sum(n, k, h, Rat(-u) * scale);
            if (!(conj == expect)) {
              why << "negative-root conjugation fails at n=" << n << " m=" << m;
              return false;
            }
          }

          // Rank-one Bruhat identity through the opposite root subgroup.
          for (long long y = 1; y < p; ++y) {
            RatMatrix lhs = root_eps_sum(n, k, h, Rat(y) * scale);
            RatMatrix rhs =
                root_eps_sum_neg(n, k, h, Rat::prime_power(p, m + 1) * Rat(1, y)) * w *
                root_eps_sum_neg(n, k, h, Rat::prime_power(p, m + 1) * Rat(y)) *
                torus_cochar(n, lambda_of(n, {k, h}, 1), Rat(-1, y)) * weyl_gl(n, k, h);
            if (!(lhs == rhs)) {
              why << "Bruhat rewriting fails at n=" << n << " m=" << m << " y=" << y;
              return false;
            }
          }
        }

      // u(X) lemma: YXY = 0, (I+YX)^{-1} = I-YX, and the full congruence
      // identity as an exact product.
      if (n >= 2) {
        for (int k = 1; k <= n; ++k)
          for (int h = k + 1; h <= n; ++h) {
            std::map<std::pair<int, int>, Rat> xcoef;
            int fill = 0;
            for (int i = 1; i <= n; ++i)
              for (int j = i + 1; j <= n; ++j)
                if (!(i == k && j == h)) xcoef[{i, j}] = Rat(1 + (fill++ % 3));
            RatMatrix X = skew_from_coeffs(n, xcoef);
            for (long long yv : {1LL, 2LL}) {
              RatMatrix Y(n);
              Y.at(n - h, k - 1) = Rat(yv);
              Y.at(n - k, h - 1) = Rat(-yv);
              RatMatrix In = RatMatrix::identity(n);
              RatMatrix YXY = Y * X * Y;
              if (!(YXY == RatMatrix(n))) {
                why << "YXY != 0 at n=" << n;
                return false;
              }
              RatMatrix XY = X * Y, YX = Y * X;
              RatMatrix IplusYX = In;
              RatMatrix ImXY = In;
              for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) {
                  IplusYX.at(r, c) = IplusYX.at(r, c) + YX.at(r, c);
                  ImXY.at(r, c) = ImXY.at(r, c) - XY.at(r, c);
                }
              RatMatrix ImYX = In;
              for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) ImYX.at(r, c) = ImYX.at(r, c) - YX.at(r, c);
              if (!(IplusYX * ImYX == In)) {
                why << "(I+YX)^{-1} != I-YX at n=" << n;
                return false;
              }
              std::map<std::pair<int, int>, Rat> scaled;
              for (auto& [ij, c] : xcoef) scaled[ij] = c * scale;
              RatMatrix XYX = X * Y * X;
              RatMatrix Xnew(n);
              for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) Xnew.at(r, c) = X.at(r, c) - XYX.at(r, c);
              std::map<std::pair<int, int>, Rat> scaled_new;
              for (auto& [ij, c] : coeffs_from_skew(n, Xnew)) scaled_new[ij] = c * scale;
              RatMatrix lhs =
                  root_eps_sum_neg(n, k, h, Rat::prime_power(p, m + 1) * Rat(yv)) *
                  u_of(n, scaled) *
                  root_eps_sum_neg(n, k, h, Rat::prime_power(p, m + 1) * Rat(-yv));
              RatMatrix rhs = u_of(n, scaled_new) * gl_block_embed(n, ImXY, IplusYX);
              if (!(lhs == rhs)) {
                why << "u(X) congruence identity fails at n=" << n << " m=" << m;
                return false;
              }
            }
          }
      }
    }

    // Evaluation lemma: exact identity for r in S and m = c1 + 2 c2.
    if (n >= 2) {
      for (int c1 = 0; c1 <= 1; ++c1)
        for (int c2 = 0; c2 <= 1; ++c2) {
          int m = c1 + 2 * c2;
          if (m > max_m + 1) continue;
          int c = c1 + c2;
          Rat scale = Rat::prime_power(p, -(m + 1));
          for (auto& S : subsets) {
            bool has_r = false;
            int r = 0;
            for (int cand = 1; cand <= n; ++cand)
              if (std::find(S.begin(), S.end(), cand) != S.end()) {
                has_r = true;
                r = cand;
                break;
              }
            if (!has_r) continue;
            auto in_S = [&](int k) { return std::find(S.begin(), S.end(), k) != S.end(); };
            auto roots = i_set_of(n, S);
            std::map<std::pair<int, int>, long long> yv;
            long long fill = 1;
            for (auto& ij : roots) yv[ij] = (fill++ % p);
            RatMatrix lhs = root_short_neg(n, r, Rat::prime_power(p, c + 1));
            lhs = lhs * weyl_set(n, S, m + 1, p);
            for (auto& [ij, v] : yv)
              if (v != 0) lhs = lhs * root_eps_sum(n, ij.first, ij.second, Rat(v) * scale);
            lhs = lhs * weyl_set(n, S, m, p);
            RatMatrix rhs = RatMatrix::identity(2 * n + 1);
            for (auto& [ij, v] : yv)  // I_S^-: j in S
              if (in_S(ij.second) && v != 0)
                rhs = rhs * root_eps_diff(n, ij.first, ij.second, Rat(-v));
            for (auto& [ij, v] : yv)  // I_S^+: j not in S
              if (!in_S(ij.second) && v != 0)
                rhs = rhs * root_eps_sum(n, ij.first, ij.second, Rat(v) * scale);
            rhs = rhs * torus_cochar(n, lambda_of(n, S, -1), Rat(p));
            rhs = rhs * root_short_neg(n, r, Rat::prime_power(p, c));
            if (!(lhs == rhs)) {
              why << "evaluation lemma fails at n=" << n << " S size " << S.size()
                  << " (c1,c2)=(" << c1 << "," << c2 << ")";
              return false;
            }
          }
        }
    }
  }
  return true;
}

}  // namespace sonf
