#include "cubiccount/cd_solver.hpp"

#include <cmath>

namespace cubiccount {

namespace {

using u128 = unsigned __int128;

struct Magnitudes {
  long long c_abs = 0;
  long long d_abs = 0;
};

// Scan d' = 0..floor(sqrt(4q/27)) for 4q - 27 d'^2 a perfect square
// coprime to p. Exactly one |c| may survive the gcd filter; anything
// else means a bug or a field this representation cannot describe.
Magnitudes find_magnitudes(uint64_t p, uint64_t q) {
  u128 four_q = (u128)q * 4;
  u128 d_max = isqrt_u128(four_q / 27);
  bool found = false;
  Magnitudes m;
  for (u128 d = 0; d <= d_max; ++d) {
    u128 rem = four_q - 27 * d * d;
    u128 s = isqrt_u128(rem);
    if (s * s != rem || s == 0) continue;
    if ((uint64_t)(s % p) == 0) continue;  // gcd(c, p) = 1 filter
    if (found) {
      if ((u128)m.c_abs != s)
        throw ConsistencyError("multiple admissible |c| in 4q = c^2 + 27d^2");
      continue;
    }
    found = true;
    m.c_abs = (long long)s;
    m.d_abs = (long long)d;
  }
  if (!found)
    throw ConsistencyError("no admissible (c, d) with 4q = c^2 + 27d^2");
  return m;
}

long long fix_sign_mod3(long long c_abs) {
  if (c_abs % 3 == 1) return c_abs;
  if (c_abs % 3 == 2) return -c_abs;
  throw ConsistencyError("|c| divisible by 3 cannot satisfy c ≡ 1 (mod 3)");
}

void check_representation(uint64_t q, long long c, long long d) {
  u128 lhs = (u128)q * 4;
  u128 rhs = (u128)(c < 0 ? -c : c) * (u128)(c < 0 ? -c : c) +
             27 * (u128)(d < 0 ? -d : d) * (u128)(d < 0 ? -d : d);
  if (lhs != rhs) throw ConsistencyError("4q = c^2 + 27d^2 violated");
  if (((c % 3) + 3) % 3 != 1) throw ConsistencyError("c ≢ 1 (mod 3)");
}

// The closed form for p ≡ 2 (mod 3) (k is forced even by q ≡ 1 mod 3):
// c = -2 p^{k/2} if k ≡ 0 (mod 4), +2 p^{k/2} if k ≡ 2 (mod 4), d = 0.
CdPair even_k_pair(const FieldConfig& field) {
  unsigned k = field.k();
  if (k % 2 != 0)
    throw ConsistencyError("q ≡ 1 (mod 3) with p ≡ 2 (mod 3) needs even k");
  uint64_t root = 1;
  for (unsigned i = 0; i < k / 2; ++i) root *= field.p();
  long long c = (k % 4 == 0) ? -2 * (long long)root : 2 * (long long)root;
  check_representation(field.q(), c, 0);
  return {c, 0, CdBranch::P2Mod3EvenK};
}

}  // namespace

unsigned __int128 isqrt_u128(unsigned __int128 n) {
  if (n == 0) return 0;
  u128 x = (u128)std::sqrt((long double)n);
  if (x == 0) x = 1;
  for (int i = 0; i < 64; ++i) {
    u128 y = (x + n / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

const char* to_string(CdBranch branch) {
  switch (branch) {
    case CdBranch::P1Mod3NonCubic: return "P1MOD3_NONCUBIC";
    case CdBranch::P1Mod3CubicOrZero: return "P1MOD3_CUBIC_OR_ZERO";
    default: return "P2MOD3_EVEN_K";
  }
}

CdPair solve_c(const FieldConfig& field) {
  if (field.q() % 3 != 1)
    throw UnsupportedFieldError("no (c, d) pair: q ≡ 2 (mod 3)");
  if (field.p() % 3 == 2) return even_k_pair(field);
  Magnitudes m = find_magnitudes(field.p(), field.q());
  long long c = fix_sign_mod3(m.c_abs);
  check_representation(field.q(), c, m.d_abs);
  return {c, std::nullopt, CdBranch::P1Mod3CubicOrZero};
}

CdPair solve_cd(const FieldConfig& field, const FieldElement& z) {
  if (field.q() % 3 != 1)
    throw UnsupportedFieldError("no (c, d) pair: q ≡ 2 (mod 3)");
  if (field.is_zero(z)) throw std::invalid_argument("z must be nonzero");
  if (field.p() % 3 == 2) return even_k_pair(field);

  CubeClass cc = field.cube_class(z);
  Magnitudes m = find_magnitudes(field.p(), field.q());
  long long c = fix_sign_mod3(m.c_abs);
  check_representation(field.q(), c, m.d_abs);
  if (cc.tag == CubeTag::Cubic)
    return {c, std::nullopt, CdBranch::P1Mod3CubicOrZero};

  if (!cc.value)
    throw ConsistencyError("non-cubic class without a subfield value");
  uint64_t p = field.p();
  uint64_t v = *cc.value;
  uint64_t c_mod = (uint64_t)(((c % (long long)p) + (long long)p) % (long long)p);
  uint64_t target =
      (uint64_t)((unsigned __int128)c_mod * ((2 * v + 1) % p) % p);
  uint64_t d_mod = (uint64_t)(m.d_abs % (long long)p);
  uint64_t plus = (uint64_t)((unsigned __int128)9 * d_mod % p);
  uint64_t minus = (uint64_t)((unsigned __int128)9 * ((p - d_mod) % p) % p);
  // gcd(c, p) = 1 forces p ∤ d, so the two signs are distinguishable.
  if (plus == minus)
    throw ConsistencyError("signs of d are indistinguishable mod p");
  long long d;
  if (target == plus)
    d = m.d_abs;
  else if (target == minus)
    d = -m.d_abs;
  else
    throw ConsistencyError("9d ≡ c(2 z^{(q-1)/3} + 1) has no solution in ±d");
  return {c, d, CdBranch::P1Mod3NonCubic};
}

}  // namespace cubiccount
