#ifndef SONF_RATIONAL_HPP
#define SONF_RATIONAL_HPP

#include <cstdint>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sonf {

// Exact rational on 64-bit numerator/denominator with overflow detection.
// Matrix entries in the coset module stay tiny; anything larger throws.
struct Rat {
  long long num = 0;
  long long den = 1;

  constexpr Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    if (num == 0) {
      den = 1;
      return;
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    num /= g;
    den /= g;
  }

  static Rat from128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a != 0) {
      n /= a;
      d /= a;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX) throw std::overflow_error("Rat: overflow");
    Rat r;
    r.num = static_cast<long long>(n);
    r.den = static_cast<long long>(d == 0 ? 1 : d);
    return r;
  }

  bool is_zero() const { return num == 0; }
  bool is_integral() const { return den == 1; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return from128(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                   static_cast<__int128>(a.den) * b.den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return from128(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                   static_cast<__int128>(a.den) * b.den);
  }
  friend Rat operator-(const Rat& a) {
    Rat r = a;
    r.num = -r.num;
    return r;
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return from128(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("Rat: division by zero");
    return from128(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num);
  }

  Rat inverse() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    return Rat(den, num);
  }

  // p^k for k of either sign.
  static Rat prime_power(long long p, long long k) {
    Rat r(1);
    Rat step = k >= 0 ? Rat(p) : Rat(1, p);
    long long n = k >= 0 ? k : -k;
    for (long long i = 0; i < n; ++i) r = r * step;
    return r;
  }

  // p-adic valuation; throws on zero.
  long long valuation(long long p) const {
    if (is_zero()) throw std::domain_error("Rat: valuation of zero");
    long long v = 0;
    long long n = num < 0 ? -num : num;
    while (n % p == 0) {
      n /= p;
      ++v;
    }
    long long d = den;
    while (d % p == 0) {
      d /= p;
      --v;
    }
    return v;
  }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  }
};

}  // namespace sonf

#endif
