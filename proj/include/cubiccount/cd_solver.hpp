#pragma once

#include <optional>

#include "cubiccount/field.hpp"

namespace cubiccount {

enum class CdBranch {
  P1Mod3NonCubic,     // p ≡ 1 (mod 3), sign of d fixed by the coefficient
  P1Mod3CubicOrZero,  // p ≡ 1 (mod 3), no sign rule applies; d omitted
  P2Mod3EvenK,        // p ≡ 2 (mod 3), k even: c = ±2p^{k/2}, d = 0
};

const char* to_string(CdBranch branch);

// The essentially unique integers with 4q = c^2 + 27d^2, c ≡ 1 (mod 3)
// and (for p ≡ 1 mod 3) gcd(c, p) = 1. d is present only when a sign
// for it is defined.
struct CdPair {
  long long c = 0;
  std::optional<long long> d;
  CdBranch branch = CdBranch::P1Mod3CubicOrZero;
};

// c alone (d left unsigned). Requires q ≡ 1 (mod 3).
CdPair solve_c(const FieldConfig& field);

// c together with the sign of d determined by
//   9d ≡ c(2 z^{(q-1)/3} + 1)  (mod p)
// when p ≡ 1 (mod 3) and z is non-cubic. Cubic z yields no d;
// p ≡ 2 (mod 3) yields d = 0. Requires q ≡ 1 (mod 3) and z ≠ 0.
CdPair solve_cd(const FieldConfig& field, const FieldElement& z);

// Floor square root, exact (Newton iteration).
unsigned __int128 isqrt_u128(unsigned __int128 n);

}  // namespace cubiccount
