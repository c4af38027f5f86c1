#ifndef SONF_COSET_GEOMETRY_HPP
#define SONF_COSET_GEOMETRY_HPP

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "sonf/matrix.hpp"
#include "sonf/rational.hpp"

namespace sonf {

// Exact matrix model of SO(2n+1) on the ordered basis
// (e_{ -n }, ..., e_{ -1 }, e_0, e_1, ..., e_n) whose Gram matrix is
// antidiag(J_n, 2, J_n).  The torus character eps_i pairs with the basis
// vectors e_{ +-(n+1-i) }.  All entries are exact rationals.

RatMatrix so_gram(int n);
bool preserves_form(int n, const RatMatrix& g);

// Root subgroup elements; indices are 1-based in {1..n}.
RatMatrix root_eps_diff(int n, int i, int j, const Rat& c);   // eps_i - eps_j, i != j
RatMatrix root_eps_sum(int n, int i, int j, const Rat& c);    // eps_i + eps_j, i < j
RatMatrix root_eps_sum_neg(int n, int i, int j, const Rat& c);// -(eps_i + eps_j), i < j
RatMatrix root_short(int n, int i, const Rat& c);             // eps_i
RatMatrix root_short_neg(int n, int i, const Rat& c);         // -eps_i

// Weyl elements: w_{eps_i, m}, the product w_{S, m}, and the GL-type
// representative w_{eps_i - eps_j}.
RatMatrix weyl_short(int n, int i, int m, long long p);
RatMatrix weyl_set(int n, const std::vector<int>& S, int m, long long p);
RatMatrix weyl_gl(int n, int i, int j);

// value^{sum_i exps[i] * eps_i^*}; exps is 1-based via exps[i-1].
RatMatrix torus_cochar(int n, const std::vector<long long>& exps, const Rat& value);

// u(X) for X = sum_{i<j} x_{ij} (E_{i,n+1-j} - E_{j,n+1-i}) given the upper
// coefficients x_{ij}; equals prod x_{eps_i+eps_j}(x_{ij}).
RatMatrix u_of(int n, const std::map<std::pair<int, int>, Rat>& x);

// Uniform entry point mirroring the kind/data dispatch of the public surface.
struct ElementRequest {
  std::string kind;       // "root" | "weyl" | "torus"
  std::string root_type;  // "ei-ej" | "ei+ej" | "-ei-ej" | "ei" | "-ei"
  int i = 0, j = 0;
  Rat value{0};
  int m = 0;
  long long p = 3;
  std::vector<int> S;
  std::vector<long long> cochar;
};

RatMatrix build_element(int n, const ElementRequest& req);

// One representative w_{S,m+1} prod_{beta in I_S} x_beta(p^{-m-1} y_beta) of
// K_{n,m+1}/(K_{n,m} cap K_{n,m+1}); I_S = {eps_i+eps_j : i<j, i not in S}.
struct CosetRep {
  std::vector<int> S;                        // even size
  std::map<std::pair<int, int>, int> y;      // residues on I_S

  RatMatrix matrix(int n, int m, long long p) const;
};

std::vector<CosetRep> enumerate_coset_reps(int n, int m, long long p);
long long expected_coset_count(int n, long long p);

struct DistinctnessReport {
  long long pairs_checked = 0;
  std::vector<std::pair<long long, long long>> failures;  // index pairs not separated
  bool ok() const { return failures.empty(); }
};

DistinctnessReport verify_coset_distinctness(const std::vector<CosetRep>& reps, int n, int m,
                                             long long p, bool parallel = true);
DistinctnessReport verify_coset_distinctness_serial(const std::vector<CosetRep>& reps, int n,
                                                    int m, long long p);

// GL_r Hecke operator coset data: J_S = {eps_i-eps_j : i<j<=r, i in S, j not in S}
// with S inside {1..r-1}; the representative is prod chi_beta(y) pi^{nu_S}.
struct HeckeCosetRep {
  std::vector<int> S;
  std::map<std::pair<int, int>, int> y;

  RatMatrix matrix(int r, long long p) const;
};

std::vector<HeckeCosetRep> enumerate_hecke_reps(int r, int i, long long p);
long long expected_hecke_count(int r, int i, long long p);

DistinctnessReport verify_hecke_distinctness(const std::vector<HeckeCosetRep>& reps, int r, int i,
                                             long long p, bool parallel = true);
DistinctnessReport verify_hecke_distinctness_serial(const std::vector<HeckeCosetRep>& reps, int r,
                                                    int i, long long p);

// Exact matrix identities behind the coset decomposition: involutions,
// w_{S,m+1} w_{S,m} = pi^{-lambda_S}, the conjugation table, the u(X) lemma,
// the evaluation lemma, and the rank-one Bruhat identity that rewrites
// x_{eps_k+eps_h} through the opposite root subgroup.  Returns false and
// writes the first failing identity into `why`.
bool relation_suite(int max_n, int max_m, long long p, std::ostream& why);

}  // namespace sonf

#endif
