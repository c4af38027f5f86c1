#ifndef SONF_UNIT_SIGN_HPP
#define SONF_UNIT_SIGN_HPP

#include <compare>
#include <stdexcept>
#include <string>

namespace sonf {

// An element of {+1, -1}.
struct UnitSign {
  int value = 1;

  constexpr UnitSign() = default;
  constexpr explicit UnitSign(int v) : value(v >= 0 ? 1 : -1) {}

  static constexpr UnitSign plus() { return UnitSign(1); }
  static constexpr UnitSign minus() { return UnitSign(-1); }

  friend UnitSign operator*(UnitSign a, UnitSign b) { return UnitSign(a.value * b.value); }
  UnitSign pow(long long e) const { return (e % 2 == 0) ? plus() : *this; }

  friend auto operator<=>(UnitSign a, UnitSign b) = default;

  std::string str() const { return value > 0 ? "+1" : "-1"; }

  static UnitSign parse(const std::string& s) {
    if (s == "+1" || s == "1" || s == "+") return plus();
    if (s == "-1" || s == "-") return minus();
    throw std::invalid_argument("UnitSign: cannot parse '" + s + "'");
  }
};

}  // namespace sonf

#endif
