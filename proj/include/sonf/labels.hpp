#ifndef SONF_LABELS_HPP
#define SONF_LABELS_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sonf/halfint.hpp"
#include "sonf/unit_sign.hpp"

namespace sonf {

enum class SelfdualKind { orthogonal, symplectic, none };

inline std::string selfdual_kind_str(SelfdualKind k) {
  switch (k) {
    case SelfdualKind::orthogonal: return "orthogonal";
    case SelfdualKind::symplectic: return "symplectic";
    default: return "none";
  }
}

inline SelfdualKind parse_selfdual_kind(const std::string& s) {
  if (s == "orthogonal") return SelfdualKind::orthogonal;
  if (s == "symplectic") return SelfdualKind::symplectic;
  if (s == "none") return SelfdualKind::none;
  throw std::invalid_argument("selfdual kind: cannot parse '" + s + "'");
}

// A supercuspidal representation of some GL_k, as opaque combinatorial data.
// The twist field holds the exponent z in rho = rho^u |.|^z.
struct SupercuspidalLabel {
  std::string name;
  int dim_k = 1;
  bool ramified = false;
  SelfdualKind kind = SelfdualKind::orthogonal;
  std::optional<UnitSign> unram_sign;
  long long base_conductor = 0;
  HalfInt twist{0};

  std::optional<std::string> check() const {
    if (dim_k <= 0) return "label '" + name + "': dim_k must be positive";
    if (!ramified) {
      if (dim_k != 1) return "label '" + name + "': unramified labels have dim_k = 1";
      if (kind != SelfdualKind::orthogonal)
        return "label '" + name + "': unramified labels are orthogonal";
      if (!unram_sign) return "label '" + name + "': unramified labels need unram_sign";
      if (base_conductor != 0) return "label '" + name + "': unramified labels have conductor 0";
    } else {
      if (base_conductor < 1) return "label '" + name + "': ramified labels have conductor >= 1";
      if (unram_sign) return "label '" + name + "': ramified labels carry no unram_sign";
    }
    if (kind == SelfdualKind::symplectic && dim_k % 2 != 0)
      return "label '" + name + "': symplectic labels have even dim_k";
    return std::nullopt;
  }

  SupercuspidalLabel dual() const {
    SupercuspidalLabel d = *this;
    d.twist = -d.twist;
    return d;
  }

  SupercuspidalLabel with_twist(HalfInt z) const {
    SupercuspidalLabel t = *this;
    t.twist = z;
    return t;
  }

  // Ignores the twist; identifies the underlying unitary cuspidal.
  bool same_unitary(const SupercuspidalLabel& o) const {
    return name == o.name && dim_k == o.dim_k && ramified == o.ramified && kind == o.kind &&
           unram_sign == o.unram_sign && base_conductor == o.base_conductor;
  }

  auto key() const {
    return std::tuple(name, dim_k, ramified, static_cast<int>(kind),
                      unram_sign ? unram_sign->value : 0, base_conductor, twist.twice);
  }
  friend bool operator==(const SupercuspidalLabel& a, const SupercuspidalLabel& b) {
    return a.key() == b.key();
  }
  friend bool operator<(const SupercuspidalLabel& a, const SupercuspidalLabel& b) {
    return a.key() < b.key();
  }
};

// The segment Delta_rho[x, y]: the descending exponent run x, x-1, ..., y on the
// cuspidal line of rho.  x - y < 0 denotes the trivial representation of GL_0.
struct Segment {
  SupercuspidalLabel label;
  HalfInt x{0};
  HalfInt y{0};

  Segment() = default;
  Segment(SupercuspidalLabel l, HalfInt xx, HalfInt yy) : label(std::move(l)), x(xx), y(yy) {
    if (!(x - y).is_integer()) throw std::invalid_argument("Segment: x - y must be an integer");
    // Fold the label twist into the exponent range.
    if (label.twist != HalfInt(0)) {
      x += label.twist;
      y += label.twist;
      label.twist = HalfInt(0);
    }
  }

  bool is_empty() const { return x < y; }
  long long length() const { return is_empty() ? 0 : (x - y).as_integer() + 1; }
  long long gl_dim() const { return label.dim_k * length(); }

  // Conductor of the attached parameter: x - y for unramified lines, and
  // length * base_conductor for ramified ones.
  long long conductor() const {
    if (is_empty()) return 0;
    if (!label.ramified) return (x - y).as_integer();
    return length() * label.base_conductor;
  }

  Segment dual() const { return Segment(label.dual(), -y, -x); }

  auto key() const { return std::tuple(label.key(), x.twice, y.twice); }
  friend bool operator==(const Segment& a, const Segment& b) { return a.key() == b.key(); }
  friend bool operator<(const Segment& a, const Segment& b) { return a.key() < b.key(); }

  std::string str() const {
    return "D_" + label.name + "[" + x.str() + "," + y.str() + "]";
  }
};

// Induced product of segments, kept in a canonical sorted form with empty
// factors dropped; the empty list is the trivial representation of GL_0.
struct SegmentProduct {
  std::vector<Segment> factors;

  SegmentProduct() = default;
  explicit SegmentProduct(std::vector<Segment> f) : factors(std::move(f)) { canonicalize(); }

  void canonicalize() {
    factors.erase(std::remove_if(factors.begin(), factors.end(),
                                 [](const Segment& s) { return s.is_empty(); }),
                  factors.end());
    std::sort(factors.begin(), factors.end());
  }

  bool is_trivial() const { return factors.empty(); }

  long long gl_dim() const {
    long long d = 0;
    for (auto& f : factors) d += f.gl_dim();
    return d;
  }

  friend SegmentProduct operator*(const SegmentProduct& a, const SegmentProduct& b) {
    std::vector<Segment> f = a.factors;
    f.insert(f.end(), b.factors.begin(), b.factors.end());
    return SegmentProduct(std::move(f));
  }

  friend bool operator==(const SegmentProduct& a, const SegmentProduct& b) {
    return a.factors == b.factors;
  }
  friend bool operator<(const SegmentProduct& a, const SegmentProduct& b) {
    return std::lexicographical_compare(a.factors.begin(), a.factors.end(), b.factors.begin(),
                                        b.factors.end());
  }

  std::string str() const {
    if (factors.empty()) return "1";
    std::string out;
    for (auto& f : factors) {
      if (!out.empty()) out += " x ";
      out += f.str();
    }
    return out;
  }
};

// Integer-linear combination of segment products.
struct GLFormalSum {
  std::map<SegmentProduct, long long> terms;

  void add(const SegmentProduct& p, long long mult) {
    if (mult == 0) return;
    auto [it, fresh] = terms.try_emplace(p, 0);
    it->second += mult;
    if (it->second == 0) terms.erase(it);
  }

  bool is_zero() const { return terms.empty(); }

  long long total_multiplicity() const {
    long long t = 0;
    for (auto& [p, m] : terms) t += m;
    return t;
  }

  friend GLFormalSum operator+(const GLFormalSum& a, const GLFormalSum& b) {
    GLFormalSum r = a;
    for (auto& [p, m] : b.terms) r.add(p, m);
    return r;
  }

  friend bool operator==(const GLFormalSum& a, const GLFormalSum& b) { return a.terms == b.terms; }
};

// Integer-linear combination of pairs (left GL part, right GL part).
struct TensorFormalSum {
  std::map<std::pair<SegmentProduct, SegmentProduct>, long long> terms;

  void add(const SegmentProduct& l, const SegmentProduct& r, long long mult) {
    if (mult == 0) return;
    auto [it, fresh] = terms.try_emplace(std::pair(l, r), 0);
    it->second += mult;
    if (it->second == 0) terms.erase(it);
  }

  long long total_multiplicity() const {
    long long t = 0;
    for (auto& [p, m] : terms) t += m;
    return t;
  }

  friend bool operator==(const TensorFormalSum& a, const TensorFormalSum& b) {
    return a.terms == b.terms;
  }
};

}  // namespace sonf

#endif
