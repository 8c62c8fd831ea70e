#pragma once

#include <complex>
#include <cstdint>

#include "cubiccount/errors.hpp"

namespace cubiccount {

// Exact element a + b*omega of Z[omega], omega = (-1 + sqrt(-3))/2.
// Big enough for every Jacobi sum at desk scale: partial sums are
// bounded by q and the final norm equals q.
struct Eisenstein {
  long long a = 0;
  long long b = 0;

  bool operator==(const Eisenstein&) const = default;

  friend Eisenstein operator+(Eisenstein x, Eisenstein y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend Eisenstein operator-(Eisenstein x, Eisenstein y) {
    return {x.a - y.a, x.b - y.b};
  }
  // omega^2 = -1 - omega.
  friend Eisenstein operator*(Eisenstein x, Eisenstein y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
  }

  Eisenstein conj() const { return {a - b, -b}; }

  // a^2 - ab + b^2, always non-negative.
  unsigned long long norm() const {
    __int128 n = (__int128)a * a - (__int128)a * b + (__int128)b * b;
    if (n < 0 || n > (__int128)~0ULL)
      throw ConsistencyError("eisenstein norm out of range");
    return (unsigned long long)n;
  }

  std::complex<double> to_complex() const {
    static const double half_sqrt3 = 0.86602540378443864676;
    return {(double)a - 0.5 * (double)b, half_sqrt3 * (double)b};
  }

  static Eisenstein omega_pow(int j) {
    switch (((j % 3) + 3) % 3) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      default: return {-1, -1};
    }
  }
};

}  // namespace cubiccount
