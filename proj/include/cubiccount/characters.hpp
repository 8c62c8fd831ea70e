#pragma once

#include <complex>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "cubiccount/eisenstein.hpp"
#include "cubiccount/field.hpp"

namespace cubiccount {

// Smallest integer e in (1, p) with e^3 ≡ 1 (mod p). Requires
// p ≡ 1 (mod 3).
uint64_t primitive_cube_root_mod(uint64_t p);

// Multiplicative character of order 3 on F_q^*, pinned by the fixed
// primitive cube root epsilon of F_p and an orientation bit:
// x with x^{(q-1)/3} = epsilon^j maps to omega^{orientation*j}.
// Only defined when p ≡ 1 (mod 3).
struct CubicCharacter {
  const FieldConfig* field = nullptr;
  uint64_t epsilon = 0;
  int orientation = 1;  // 1 or 2

  bool operator==(const CubicCharacter&) const = default;
};

// Value of a cubic character: one of 1, omega, omega^2, or the zero
// marker for chi(0). The marker is distinct from the ring's 0 so an
// accidental inclusion in a sum is detectable.
struct ChiValue {
  bool zero = false;
  int omega_exp = 0;

  Eisenstein eisenstein() const {
    if (zero) throw ConsistencyError("chi(0) used as a ring element");
    return Eisenstein::omega_pow(omega_exp);
  }
  std::complex<double> value() const { return eisenstein().to_complex(); }
};

// The unique cubic character with chi(z) = omega. Requires p ≡ 1 (mod 3)
// and z non-cubic.
CubicCharacter character_for(const FieldConfig& field, const FieldElement& z);

CubicCharacter conjugate(const CubicCharacter& chi);

ChiValue chi_eval(const CubicCharacter& chi, const FieldElement& x);

// Canonical additive character psi(x) = e^{2 pi i Tr(x) / p}.
std::complex<double> psi(const FieldConfig& field, const FieldElement& x);

// S(a) = sum over x in F_q of psi(a x^3). Always real; the imaginary
// residual is checked against 1e-9 before being discarded.
double gauss_S(const FieldConfig& field, const FieldElement& a);

// G(chi, psi) = sum over x != 0 of chi(x) psi(x); |G| = sqrt(q) is
// verified to 1e-6 relative before returning.
std::complex<double> gauss_G(const FieldConfig& field, const CubicCharacter& chi);

// Exact J(chi, chi) = sum over x not in {0,1} of chi(x) chi(1-x),
// accumulated in Z[omega]. Requires p ≡ 1 (mod 3).
Eisenstein jacobi_chichi(const FieldConfig& field, const CubicCharacter& chi);

// Expected Jacobi value (c+3d)/2 + 3d*omega for a given (c, d).
Eisenstein jacobi_expected(long long c, long long d);

// Max over both orientations of |G(chi) - (-1)^{k-1} G(chi')^k| where
// chi is the norm-lift of the prime-field character chi' with the same
// orientation (N(x)^{(p-1)/3} = x^{(q-1)/3}, so lifting preserves the
// orientation). Requires p ≡ 1 (mod 3).
double hasse_davenport_residual(const FieldConfig& field);

// Both sides of S(1)^2 S(z) + S(z)^2 S(z^2) + S(z^2)^2 S(1)
// = (3/2) q (9d - c); the right side is exact (9d - c is always even).
struct WeightedCubeIdentity {
  double lhs = 0.0;
  boost::multiprecision::cpp_int rhs;
};

WeightedCubeIdentity weighted_cube_identity(const FieldConfig& field,
                                            const FieldElement& z);

}  // namespace cubiccount
