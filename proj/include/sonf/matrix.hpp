#ifndef SONF_MATRIX_HPP
#define SONF_MATRIX_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "sonf/rational.hpp"

namespace sonf {

// Dense square matrix over exact rationals.
struct RatMatrix {
  int n = 0;
  std::vector<Rat> a;

  RatMatrix() = default;
  explicit RatMatrix(int size) : n(size), a(static_cast<size_t>(size) * size) {}

  static RatMatrix identity(int size) {
    RatMatrix m(size);
    for (int i = 0; i < size; ++i) m.at(i, i) = Rat(1);
    return m;
  }

  Rat& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
  const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }

  friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
    if (x.n != y.n) throw std::invalid_argument("RatMatrix: size mismatch");
    RatMatrix r(x.n);
    for (int i = 0; i < x.n; ++i)
      for (int k = 0; k < x.n; ++k) {
        const Rat& xik = x.at(i, k);
        if (xik.is_zero()) continue;
        for (int j = 0; j < x.n; ++j) {
          const Rat& ykj = y.at(k, j);
          if (!ykj.is_zero()) r.at(i, j) = r.at(i, j) + xik * ykj;
        }
      }
    return r;
  }

  friend bool operator==(const RatMatrix& x, const RatMatrix& y) {
    return x.n == y.n && x.a == y.a;
  }

  RatMatrix transpose() const {
    RatMatrix r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  // Gauss-Jordan; throws if singular.
  RatMatrix inverse() const {
    RatMatrix m = *this;
    RatMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      for (int r = col; r < n; ++r)
        if (!m.at(r, col).is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) throw std::domain_error("RatMatrix: singular");
      if (pivot != col)
        for (int j = 0; j < n; ++j) {
          std::swap(m.at(pivot, j), m.at(col, j));
          std::swap(inv.at(pivot, j), inv.at(col, j));
        }
      Rat piv = m.at(col, col).inverse();
      for (int j = 0; j < n; ++j) {
        m.at(col, j) = m.at(col, j) * piv;
        inv.at(col, j) = inv.at(col, j) * piv;
      }
      for (int r = 0; r < n; ++r) {
        if (r == col || m.at(r, col).is_zero()) continue;
        Rat f = m.at(r, col);
        for (int j = 0; j < n; ++j) {
          m.at(r, j) = m.at(r, j) - f * m.at(col, j);
          inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
        }
      }
    }
    return inv;
  }

  Rat det() const {
    RatMatrix m = *this;
    Rat d(1);
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      for (int r = col; r < n; ++r)
        if (!m.at(r, col).is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) return Rat(0);
      if (pivot != col) {
        for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
        d = -d;
      }
      d = d * m.at(col, col);
      Rat piv = m.at(col, col).inverse();
      for (int r = col + 1; r < n; ++r) {
        if (m.at(r, col).is_zero()) continue;
        Rat f = m.at(r, col) * piv;
        for (int j = col; j < n; ++j) m.at(r, j) = m.at(r, j) - f * m.at(col, j);
      }
    }
    return d;
  }

  std::vector<Rat> apply(const std::vector<Rat>& v) const {
    std::vector<Rat> out(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] = out[i] + at(i, j) * v[j];
    return out;
  }

  bool all_integral() const {
    for (auto& e : a)
      if (!e.is_integral()) return false;
    return true;
  }
};

}  // namespace sonf

#endif
