#ifndef SONF_SO_JACQUET_HPP
#define SONF_SO_JACQUET_HPP

#include <optional>
#include <vector>

#include "sonf/labels.hpp"
#include "sonf/so_params.hpp"

namespace sonf {

// A concatenation of descending runs (x_i, x_i - 1, ..., y_i) with run starts
// ascending, indexing an irreducible on a single cuspidal line.
struct OmegaVector {
  std::vector<HalfInt> entries;

  OmegaVector() = default;
  explicit OmegaVector(std::vector<HalfInt> e) : entries(std::move(e)) {}

  std::vector<std::pair<HalfInt, HalfInt>> runs() const;
  std::optional<std::string> check() const;

  friend bool operator==(const OmegaVector& a, const OmegaVector& b) {
    return a.entries == b.entries;
  }
  friend bool operator<(const OmegaVector& a, const OmegaVector& b) {
    return std::lexicographical_compare(a.entries.begin(), a.entries.end(), b.entries.begin(),
                                        b.entries.end());
  }
};

// Exponent tuple in K^{(l)}: 0 <= a_i <= 2 kappa_i + 1 with sum l.
struct KTuple {
  std::vector<int> a;

  int total() const {
    int t = 0;
    for (int v : a) t += v;
    return t;
  }
  bool is_ur() const {
    for (int v : a)
      if (v > 1) return false;
    return true;
  }
  friend bool operator==(const KTuple& x, const KTuple& y) { return x.a == y.a; }
};

// Single derivative step on a parameter: replaces (chi, kappa) by
// (chi, kappa - 1), dropping the summand entirely at kappa = 1/2.  Throws when
// the summand is absent or the result would repeat a summand.
DiscreteLParameter derivative_param(const DiscreteLParameter& phi, const SupercuspidalLabel& chi,
                                    HalfInt kappa);

// Enumerates K^{(l)} for the line of chi (kappas ascending).
std::vector<KTuple> k_sets(const DiscreteLParameter& phi, const SupercuspidalLabel& chi, int ell);

// The K^{ur} filter: tuples with all entries in {0, 1}.
std::vector<KTuple> k_ur_filter(const std::vector<KTuple>& tuples);

// The run vector kappa(a) = (kappa_1, ..., kappa_1-a_1+1, kappa_2, ...).
OmegaVector kappa_vector(const std::vector<HalfInt>& kappas, const KTuple& a);

// dim Jac along z' of the standard module of z: product of run-multiplicity
// factorials when z' = z, 0 when z' < z lexicographically, and undetermined
// (nullopt) when z' > z.
std::optional<long long> jac_dim(const OmegaVector& z_prime, const OmegaVector& z);

// One unramified term of mu*: an unramified GL part together with the derived
// parameter (which can acquire a repeated summand when kappa - 1 collides with
// a retained kappa; the attached representation is then tempered rather than
// square-integrable, and discrete otherwise).
struct MuUrTerm {
  SegmentProduct gl_part;
  DiscreteLParameter so_parameter;
  bool so_generic = true;
};

// Enumerates all pairs of K^{ur} tuples over the (at most two) unramified
// lines; the list has exactly 2^{d+d'} entries.
std::vector<MuUrTerm> mu_ur_terms(const DiscreteLParameter& phi);

// |mu*_ur| = 2^{d+d'}; cross-checks the K^{ur} enumeration against the
// 4^l-recursion through the seed (segment factors counted by full M*
// expansion) and throws std::logic_error if the routes disagree.
long long count_mu_ur(const DiscreteLParameter& phi);

// Applies derivative_param down the ladder kappa, kappa-1, ..., 1/2 on a line
// carrying a single summand; returns the intermediate parameters.
std::vector<DiscreteLParameter> highest_derivative_chain(const DiscreteLParameter& phi,
                                                         const SupercuspidalLabel& chi);

}  // namespace sonf

#endif
