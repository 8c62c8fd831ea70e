#include "cubiccount/characters.hpp"

#include <cmath>

#include "cubiccount/cd_solver.hpp"

namespace cubiccount {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

uint64_t mulmod_p(uint64_t a, uint64_t b, uint64_t p) {
  return (uint64_t)((unsigned __int128)a * b % p);
}

void require_p1mod3(const FieldConfig& field) {
  if (field.p() % 3 != 1)
    throw UnsupportedFieldError(
        "cubic characters here need a cube root of unity in F_p "
        "(p ≡ 1 mod 3)");
}

// Exponent j with x^{(q-1)/3} = epsilon^j, or -1 for x = 0.
int class_exponent(const FieldConfig& field, uint64_t epsilon,
                   const FieldElement& x) {
  CubeClass cc = field.cube_class(x);
  if (cc.tag == CubeTag::Zero) return -1;
  if (!cc.value)
    throw ConsistencyError("cube-class value missing with p ≡ 1 mod 3");
  uint64_t v = *cc.value;
  if (v == 1) return 0;
  if (v == epsilon) return 1;
  if (v == mulmod_p(epsilon, epsilon, field.p())) return 2;
  throw ConsistencyError("cube-class value is not a power of epsilon");
}

}  // namespace

uint64_t primitive_cube_root_mod(uint64_t p) {
  if (p % 3 != 1)
    throw UnsupportedFieldError("F_p has no primitive cube root of unity");
  uint64_t e = (p - 1) / 3;
  for (uint64_t h = 2; h < p; ++h) {
    uint64_t r = 1;
    {
      uint64_t base = h, exp = e;
      while (exp) {
        if (exp & 1) r = mulmod_p(r, base, p);
        base = mulmod_p(base, base, p);
        exp >>= 1;
      }
    }
    if (r == 1) continue;  // h is a cube
    uint64_t r2 = mulmod_p(r, r, p);
    uint64_t eps = std::min(r, r2);
    if (mulmod_p(mulmod_p(eps, eps, p), eps, p) != 1)
      throw ConsistencyError("epsilon^3 != 1");
    return eps;
  }
  throw ConsistencyError("no non-cube found in F_p^*");
}

CubicCharacter character_for(const FieldConfig& field, const FieldElement& z) {
  require_p1mod3(field);
  CubeClass cc = field.cube_class(z);
  if (cc.tag != CubeTag::NonCubic)
    throw std::invalid_argument("z must be non-cubic");
  uint64_t epsilon = primitive_cube_root_mod(field.p());
  int j = class_exponent(field, epsilon, z);
  // orientation j maps z to omega^{j*j} = omega, since j^2 ≡ 1 (mod 3).
  CubicCharacter chi{&field, epsilon, j};
  ChiValue at_z = chi_eval(chi, z);
  if (at_z.zero || at_z.omega_exp != 1)
    throw ConsistencyError("chi(z) != omega for the chosen orientation");
  return chi;
}

CubicCharacter conjugate(const CubicCharacter& chi) {
  return {chi.field, chi.epsilon, 3 - chi.orientation};
}

ChiValue chi_eval(const CubicCharacter& chi, const FieldElement& x) {
  int j = class_exponent(*chi.field, chi.epsilon, x);
  if (j < 0) return {true, 0};
  return {false, (chi.orientation * j) % 3};
}

std::complex<double> psi(const FieldConfig& field, const FieldElement& x) {
  uint64_t t = field.trace(x);
  return std::polar(1.0, kTwoPi * (double)t / (double)field.p());
}

double gauss_S(const FieldConfig& field, const FieldElement& a) {
  if (field.is_zero(a)) throw std::invalid_argument("a must be nonzero");
  std::complex<double> acc = 0.0;
  for (uint64_t i = 0; i < field.q(); ++i) {
    FieldElement x = field.element_at(i);
    FieldElement cube = field.mul(x, field.mul(x, x));
    acc += psi(field, field.mul(a, cube));
  }
  // x -> -x pairs each term with its conjugate, so S(a) is real.
  if (std::abs(acc.imag()) >= 1e-9)
    throw ConsistencyError("S(a) has a non-real residual");
  return acc.real();
}

std::complex<double> gauss_G(const FieldConfig& field,
                             const CubicCharacter& chi) {
  std::complex<double> acc = 0.0;
  for (uint64_t i = 1; i < field.q(); ++i) {
    FieldElement x = field.element_at(i);
    acc += chi_eval(chi, x).value() * psi(field, x);
  }
  double root_q = std::sqrt((double)field.q());
  if (std::abs(std::abs(acc) - root_q) > 1e-6 * root_q)
    throw ConsistencyError("|G(chi)| != sqrt(q)");
  return acc;
}

Eisenstein jacobi_chichi(const FieldConfig& field, const CubicCharacter& chi) {
  require_p1mod3(field);
  Eisenstein acc;
  FieldElement one = field.one();
  for (uint64_t i = 0; i < field.q(); ++i) {
    FieldElement x = field.element_at(i);
    if (field.is_zero(x)) continue;
    FieldElement y = field.sub(one, x);
    if (field.is_zero(y)) continue;
    int j1 = class_exponent(field, chi.epsilon, x);
    int j2 = class_exponent(field, chi.epsilon, y);
    acc = acc + Eisenstein::omega_pow(chi.orientation * (j1 + j2));
  }
  return acc;
}

Eisenstein jacobi_expected(long long c, long long d) {
  // (c + 3 sqrt(3) d i) / 2 rewritten over 1, omega.
  if ((c + 3 * d) % 2 != 0)
    throw ConsistencyError("c and 3d have different parities");
  return {(c + 3 * d) / 2, 3 * d};
}

double hasse_davenport_residual(const FieldConfig& field) {
  require_p1mod3(field);
  FieldConfig base(field.p(), 1);
  uint64_t epsilon = primitive_cube_root_mod(field.p());
  unsigned k = field.k();
  double worst = 0.0;
  for (int orientation : {1, 2}) {
    CubicCharacter lifted{&field, epsilon, orientation};
    CubicCharacter prime_chi{&base, epsilon, orientation};
    std::complex<double> lhs = gauss_G(field, lifted);
    std::complex<double> g = gauss_G(base, prime_chi);
    std::complex<double> rhs = 1.0;
    for (unsigned i = 0; i < k; ++i) rhs *= g;
    if (k % 2 == 0) rhs = -rhs;  // (-1)^{k-1}
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

WeightedCubeIdentity weighted_cube_identity(const FieldConfig& field,
                                            const FieldElement& z) {
  require_p1mod3(field);
  CubeClass cc = field.cube_class(z);
  if (cc.tag != CubeTag::NonCubic)
    throw std::invalid_argument("z must be non-cubic");
  double s1 = gauss_S(field, field.one());
  double sz = gauss_S(field, z);
  double sz2 = gauss_S(field, field.mul(z, z));
  double lhs = s1 * s1 * sz + sz * sz * sz2 + sz2 * sz2 * s1;

  CdPair cd = solve_cd(field, z);
  if (!cd.d) throw ConsistencyError("non-cubic z produced no signed d");
  boost::multiprecision::cpp_int nine_d_minus_c =
      boost::multiprecision::cpp_int(9) * *cd.d - cd.c;
  if (nine_d_minus_c % 2 != 0)
    throw ConsistencyError("9d - c is odd");
  boost::multiprecision::cpp_int rhs =
      3 * boost::multiprecision::cpp_int(field.q()) * (nine_d_minus_c / 2);
  return {lhs, rhs};
}

}  // namespace cubiccount
