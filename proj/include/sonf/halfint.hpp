#ifndef SONF_HALFINT_HPP
#define SONF_HALFINT_HPP

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>

namespace sonf {

// Exact element of (1/2)Z, stored as twice its value.
struct HalfInt {
  long long twice = 0;

  constexpr HalfInt() = default;
  constexpr explicit HalfInt(long long t) : twice(t) {}

  static constexpr HalfInt whole(long long v) { return HalfInt(2 * v); }
  static constexpr HalfInt half(long long t) { return HalfInt(t); }

  bool is_integer() const { return twice % 2 == 0; }

  long long as_integer() const {
    if (!is_integer()) throw std::domain_error("HalfInt: " + str() + " is not an integer");
    return twice / 2;
  }

  friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
  friend HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
  friend HalfInt operator-(HalfInt a) { return HalfInt(-a.twice); }
  friend HalfInt operator*(long long k, HalfInt a) { return HalfInt(k * a.twice); }
  HalfInt& operator+=(HalfInt b) { twice += b.twice; return *this; }
  HalfInt& operator-=(HalfInt b) { twice -= b.twice; return *this; }

  friend auto operator<=>(HalfInt a, HalfInt b) = default;

  std::string str() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }

  // Accepts "3", "-2", "3/2", "-1/2".
  static HalfInt parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return whole(std::stoll(s));
      long long num = std::stoll(s.substr(0, slash));
      long long den = std::stoll(s.substr(slash + 1));
      if (den == 2) return HalfInt(num);
      if (den == 1) return whole(num);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("HalfInt: cannot parse '" + s + "'");
  }
};

}  // namespace sonf

#endif
