#ifndef SONF_QLAURENT_HPP
#define SONF_QLAURENT_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sonf/halfint.hpp"
#include "sonf/unit_sign.hpp"

namespace sonf {

namespace detail {

inline long long checked_mul(long long a, long long b) {
  __int128 p = static_cast<__int128>(a) * b;
  if (p > INT64_MAX || p < INT64_MIN) throw std::overflow_error("QLaurent: coefficient overflow");
  return static_cast<long long>(p);
}

inline long long checked_add(long long a, long long b) {
  __int128 s = static_cast<__int128>(a) + b;
  if (s > INT64_MAX || s < INT64_MIN) throw std::overflow_error("QLaurent: coefficient overflow");
  return static_cast<long long>(s);
}

}  // namespace detail

// Exact value of a Laurent polynomial at an integer point, as num/den with den a
// power of the evaluation point.
struct ExactValue {
  __int128 num = 0;
  __int128 den = 1;

  bool is_zero() const { return num == 0; }
  friend bool operator==(const ExactValue& a, const ExactValue& b) {
    return a.num * b.den == b.num * a.den;
  }
};

// Laurent polynomial in a formal variable q with integer coefficients and
// half-integer exponents.  No zero coefficients are stored.
struct QLaurent {
  std::map<HalfInt, long long> coeffs;

  QLaurent() = default;

  static QLaurent zero() { return {}; }
  static QLaurent one() { return monomial(1, HalfInt(0)); }

  static QLaurent monomial(long long c, HalfInt e) {
    QLaurent r;
    if (c != 0) r.coeffs[e] = c;
    return r;
  }

  bool is_zero() const { return coeffs.empty(); }

  long long coeff(HalfInt e) const {
    auto it = coeffs.find(e);
    return it == coeffs.end() ? 0 : it->second;
  }

  void add_term(HalfInt e, long long c) {
    if (c == 0) return;
    auto [it, fresh] = coeffs.try_emplace(e, 0);
    it->second = detail::checked_add(it->second, c);
    if (it->second == 0) coeffs.erase(it);
  }

  friend QLaurent operator+(const QLaurent& a, const QLaurent& b) {
    QLaurent r = a;
    for (auto& [e, c] : b.coeffs) r.add_term(e, c);
    return r;
  }

  friend QLaurent operator-(const QLaurent& a, const QLaurent& b) {
    QLaurent r = a;
    for (auto& [e, c] : b.coeffs) r.add_term(e, -c);
    return r;
  }

  friend QLaurent operator-(const QLaurent& a) { return zero() - a; }

  friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    for (auto& [ea, ca] : a.coeffs)
      for (auto& [eb, cb] : b.coeffs) r.add_term(ea + eb, detail::checked_mul(ca, cb));
    return r;
  }

  friend QLaurent operator*(long long k, const QLaurent& a) {
    QLaurent r;
    for (auto& [e, c] : a.coeffs) r.add_term(e, detail::checked_mul(k, c));
    return r;
  }

  friend QLaurent operator*(UnitSign s, const QLaurent& a) {
    return static_cast<long long>(s.value) * a;
  }

  friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.coeffs == b.coeffs; }

  // Exact evaluation at an integer q > 1.  All exponents must be integers.
  ExactValue evaluate(long long q) const {
    if (q <= 1) throw std::invalid_argument("QLaurent: evaluation point must be an integer > 1");
    long long min_exp = 0;
    for (auto& [e, c] : coeffs) {
      long long ei = e.as_integer();
      if (ei < min_exp) min_exp = ei;
    }
    auto pow = [&](long long k) {
      __int128 r = 1;
      for (long long i = 0; i < k; ++i) {
        r *= q;
        if (r > (__int128(1) << 120)) throw std::overflow_error("QLaurent: evaluation overflow");
      }
      return r;
    };
    ExactValue v;
    v.den = pow(-min_exp);
    for (auto& [e, c] : coeffs) v.num += static_cast<__int128>(c) * pow(e.as_integer() - min_exp);
    return v;
  }

  std::string str() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (auto& [e, c] : coeffs) {
      long long a = c < 0 ? -c : c;
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      bool trivial_exp = e == HalfInt(0);
      if (a != 1 || trivial_exp) out += std::to_string(a);
      if (!trivial_exp) {
        if (a != 1) out += "*";
        out += "q^" + e.str();
      }
    }
    return out;
  }
};

}  // namespace sonf

#endif
