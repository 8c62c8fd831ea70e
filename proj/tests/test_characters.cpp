#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "cubiccount/cd_solver.hpp"
#include "cubiccount/characters.hpp"
#include "test_util.hpp"

using namespace cubiccount;

namespace {

FieldConfig F49() { return FieldConfig(7, 2, {1, 0, 1}); }

// Membership-based chi oracle: classify by coset of the cube subgroup
// instead of powering, then sum complex character values directly.
std::complex<double> jacobi_oracle(const FieldConfig& F, const FieldElement& z,
                                   bool reversed) {
  std::set<uint64_t> cubes = test_util::cube_index_set(F);
  auto coset_exp = [&](const FieldElement& x) {
    if (cubes.count(F.index_of(x))) return 0;
    if (cubes.count(F.index_of(F.mul(x, F.inv(z))))) return 1;
    return 2;
  };
  std::complex<double> omega(-0.5, std::sqrt(3.0) / 2.0);
  std::complex<double> acc = 0.0;
  for (uint64_t step = 0; step < F.q(); ++step) {
    uint64_t i = reversed ? F.q() - 1 - step : step;
    FieldElement x = F.element_at(i);
    if (F.is_zero(x)) continue;
    FieldElement y = F.sub(F.one(), x);
    if (F.is_zero(y)) continue;
    acc += std::pow(omega, coset_exp(x)) * std::pow(omega, coset_exp(y));
  }
  return acc;
}

}  // namespace

TEST_CASE("primitive cube roots of unity") {
  CHECK(primitive_cube_root_mod(7) == 2);
  CHECK(primitive_cube_root_mod(13) == 3);
  CHECK(primitive_cube_root_mod(31) == 5);
  CHECK_THROWS_AS(primitive_cube_root_mod(5), UnsupportedFieldError);
}

TEST_CASE("character_for pins chi(z) = omega") {
  FieldConfig F = F49();
  FieldElement z = F.element({1, 1});
  CubicCharacter chi = character_for(F, z);
  ChiValue v = chi_eval(chi, z);
  CHECK_FALSE(v.zero);
  CHECK(v.omega_exp == 1);

  // The other non-cubic class carries the conjugate character.
  CHECK(character_for(F, F.mul(z, z)) == conjugate(chi));

  FieldConfig P(7, 1);
  CubicCharacter chi3 = character_for(P, P.from_subfield(3));
  CHECK(chi3.epsilon == 2);
  CHECK(chi3.orientation == 1);

  CHECK_THROWS_AS(character_for(P, P.one()), std::invalid_argument);
  CHECK_THROWS_AS(character_for(P, P.zero()), std::invalid_argument);
  FieldConfig F25(5, 2);
  CHECK_THROWS_AS(character_for(F25, F25.element({1, 1})),
                  UnsupportedFieldError);
}

TEST_CASE("chi_eval values and multiplicativity") {
  for (auto [p, k] : {std::pair<uint64_t, unsigned>{7, 1}, {13, 1}, {7, 2}}) {
    FieldConfig F(p, k);
    FieldElement znc = F.zero();
    for (uint64_t i = 1; i < F.q(); ++i) {
      znc = F.element_at(i);
      if (F.cube_class(znc).tag == CubeTag::NonCubic) break;
    }
    CubicCharacter chi = character_for(F, znc);
    CubicCharacter bar = conjugate(chi);

    CHECK(chi_eval(chi, F.one()).omega_exp == 0);
    CHECK(chi_eval(chi, F.zero()).zero);
    CHECK_THROWS_AS(chi_eval(chi, F.zero()).eisenstein(), ConsistencyError);

    std::mt19937_64 rng(p + k);
    for (int t = 0; t < 40; ++t) {
      FieldElement x = F.element_at(1 + rng() % (F.q() - 1));
      FieldElement y = F.element_at(1 + rng() % (F.q() - 1));
      FieldElement w = F.element_at(1 + rng() % (F.q() - 1));
      // cubes are the kernel
      CHECK(chi_eval(chi, F.mul(w, F.mul(w, w))).omega_exp == 0);
      // chi(x) * conj-chi(x) = 1
      CHECK((chi_eval(chi, x).omega_exp + chi_eval(bar, x).omega_exp) % 3 == 0);
      // multiplicativity
      CHECK(chi_eval(chi, F.mul(x, y)).omega_exp ==
            (chi_eval(chi, x).omega_exp + chi_eval(chi, y).omega_exp) % 3);
    }
  }
}

TEST_CASE("eisenstein ring basics") {
  Eisenstein w = Eisenstein::omega_pow(1);
  CHECK(w * w == Eisenstein::omega_pow(2));
  CHECK(w * w * w == Eisenstein{1, 0});
  CHECK(Eisenstein{5, -3}.norm() == 49);
  CHECK((Eisenstein{2, 3} * Eisenstein{4, -1}).norm() ==
        Eisenstein{2, 3}.norm() * Eisenstein{4, -1}.norm());
  CHECK(Eisenstein{5, -3}.conj() == Eisenstein{8, 3});
}

TEST_CASE("gauss_S values") {
  FieldConfig P(7, 1);
  double expected = 1.0 + 6.0 * std::cos(2.0 * M_PI / 7.0);
  CHECK(std::abs(gauss_S(P, P.one()) - expected) < 1e-9);
  CHECK_THROWS_AS(gauss_S(P, P.zero()), std::invalid_argument);

  // q ≡ 2 (mod 3): the cube map is a bijection, so the sum vanishes.
  for (uint64_t p : {5ULL, 11ULL, 17ULL}) {
    FieldConfig F(p, 1);
    std::mt19937_64 rng(p);
    for (int t = 0; t < 5; ++t) {
      FieldElement a = F.element_at(1 + rng() % (F.q() - 1));
      CHECK(std::abs(gauss_S(F, a)) < 1e-9);
    }
  }

  // F_49: S(1) is a root of x^3 - 3qx - qc with c = 13.
  FieldConfig F = F49();
  double s = gauss_S(F, F.one());
  CHECK(std::abs(s * s * s - 147.0 * s - 637.0) < 1e-6);
}

TEST_CASE("gauss_G magnitude and products") {
  FieldConfig P(7, 1);
  CubicCharacter chi = character_for(P, P.from_subfield(3));
  std::complex<double> G = gauss_G(P, chi);
  CHECK(std::abs(std::abs(G) - std::sqrt(7.0)) < 1e-9);

  std::complex<double> GGbar = G * gauss_G(P, conjugate(chi));
  CHECK(std::abs(GGbar - std::complex<double>(7.0, 0.0)) < 1e-9);

  // G^3(chi) = q (c + 3 sqrt(3) d i) / 2 for the worked example.
  FieldConfig F = F49();
  CubicCharacter chi49 = character_for(F, F.element({1, 1}));
  std::complex<double> G49 = gauss_G(F, chi49);
  std::complex<double> expected(49.0 * 13.0 / 2.0,
                                49.0 * 3.0 * std::sqrt(3.0) * -1.0 / 2.0);
  CHECK(std::abs(G49 * G49 * G49 - expected) < 1e-5);
}

TEST_CASE("jacobi sums are exact") {
  FieldConfig F = F49();
  FieldElement z = F.element({1, 1});
  Eisenstein J = jacobi_chichi(F, character_for(F, z));
  CHECK(J == Eisenstein{5, -3});
  CHECK(J.norm() == 49);

  FieldConfig P(7, 1);
  FieldElement three = P.from_subfield(3);
  Eisenstein J7 = jacobi_chichi(P, character_for(P, three));
  CHECK(J7 == Eisenstein{-1, -3});
  CHECK(J7.norm() == 7);

  // Independent double-loop oracle, both iteration orders.
  for (bool reversed : {false, true}) {
    std::complex<double> oracle = jacobi_oracle(P, three, reversed);
    CHECK(std::abs(oracle - J7.to_complex()) < 1e-9);
    std::complex<double> oracle49 = jacobi_oracle(F, z, reversed);
    CHECK(std::abs(oracle49 - J.to_complex()) < 1e-9);
  }

  // Exactness: accumulating the same terms in reverse order gives the
  // identical Eisenstein integer, not merely a close value.
  {
    CubicCharacter chi = character_for(F, z);
    Eisenstein reversed_sum;
    for (uint64_t i = F.q(); i-- > 0;) {
      FieldElement x = F.element_at(i);
      if (F.is_zero(x)) continue;
      FieldElement y = F.sub(F.one(), x);
      if (F.is_zero(y)) continue;
      reversed_sum = reversed_sum +
                     chi_eval(chi, x).eisenstein() * chi_eval(chi, y).eisenstein();
    }
    CHECK(reversed_sum == J);
  }

  // jacobi_expected converts (c, d) to the same corner of Z[omega].
  CHECK(jacobi_expected(13, -1) == Eisenstein{5, -3});
  CHECK(jacobi_expected(1, -1) == Eisenstein{-1, -3});

  // Norm equals q across a few more fields.
  for (auto [p, k] :
       {std::pair<uint64_t, unsigned>{13, 1}, {61, 1}, {7, 3}, {19, 1}}) {
    FieldConfig FF(p, k);
    for (uint64_t i = 1; i < FF.q(); ++i) {
      FieldElement cand = FF.element_at(i);
      if (FF.cube_class(cand).tag != CubeTag::NonCubic) continue;
      Eisenstein JJ = jacobi_chichi(FF, character_for(FF, cand));
      CHECK(JJ.norm() == FF.q());
      CdPair cd = solve_cd(FF, cand);
      CHECK(JJ == jacobi_expected(cd.c, *cd.d));
      break;
    }
  }
}

TEST_CASE("gauss decomposition S(a) = conj-chi(a) G + chi(a) conj-G") {
  for (auto [p, k] : {std::pair<uint64_t, unsigned>{7, 1}, {13, 1}, {7, 2}}) {
    FieldConfig F(p, k);
    FieldElement znc = F.zero();
    for (uint64_t i = 1; i < F.q(); ++i) {
      znc = F.element_at(i);
      if (F.cube_class(znc).tag == CubeTag::NonCubic) break;
    }
    CubicCharacter chi = character_for(F, znc);
    CubicCharacter bar = conjugate(chi);
    std::complex<double> G = gauss_G(F, chi);
    std::complex<double> Gbar = gauss_G(F, bar);
    double tol = 1e-6 * std::sqrt((double)F.q());
    std::mt19937_64 rng(42 + p);
    for (int t = 0; t < 100; ++t) {
      FieldElement a = F.element_at(1 + rng() % (F.q() - 1));
      std::complex<double> rhs =
          chi_eval(bar, a).value() * G + chi_eval(chi, a).value() * Gbar;
      CHECK(std::abs(gauss_S(F, a) - rhs) < tol);
    }
  }
}

TEST_CASE("character orthogonality") {
  for (auto [p, k] : {std::pair<uint64_t, unsigned>{7, 1}, {13, 1}, {7, 2}}) {
    FieldConfig F(p, k);
    FieldElement znc = F.zero();
    for (uint64_t i = 1; i < F.q(); ++i) {
      znc = F.element_at(i);
      if (F.cube_class(znc).tag == CubeTag::NonCubic) break;
    }
    CubicCharacter chi = character_for(F, znc);
    Eisenstein sum;
    for (uint64_t i = 1; i < F.q(); ++i)
      sum = sum + chi_eval(chi, F.element_at(i)).eisenstein();
    CHECK(sum == Eisenstein{0, 0});

    std::complex<double> psi_zero = 0.0;
    for (uint64_t i = 0; i < F.q(); ++i)
      psi_zero += psi(F, F.mul(F.zero(), F.element_at(i)));
    CHECK(std::abs(psi_zero - std::complex<double>((double)F.q(), 0)) < 1e-9);

    std::complex<double> psi_a = 0.0;
    for (uint64_t i = 0; i < F.q(); ++i)
      psi_a += psi(F, F.mul(znc, F.element_at(i)));
    CHECK(std::abs(psi_a) < 1e-6);
  }
}

TEST_CASE("hasse-davenport lift") {
  FieldConfig F7(7, 1);
  CHECK(hasse_davenport_residual(F7) == 0.0);  // both sides are the same sum

  CHECK(hasse_davenport_residual(F49()) < 1e-6);
  CHECK(hasse_davenport_residual(FieldConfig(13, 2)) < 1e-6);
  CHECK(hasse_davenport_residual(FieldConfig(7, 3)) < 1e-6);
  CHECK_THROWS_AS(hasse_davenport_residual(FieldConfig(5, 2)),
                  UnsupportedFieldError);
}

TEST_CASE("weighted cube identity") {
  FieldConfig P(7, 1);
  WeightedCubeIdentity w7 = weighted_cube_identity(P, P.from_subfield(3));
  CHECK(w7.rhs == -105);  // (3/2) * 7 * (9*(-1) - 1)
  CHECK(std::abs(w7.lhs - (double)w7.rhs.convert_to<double>()) <
        1e-4 * std::pow(7.0, 1.5));

  FieldConfig F = F49();
  WeightedCubeIdentity w49 = weighted_cube_identity(F, F.element({1, 1}));
  CHECK(w49.rhs == -1617);  // (3/2) * 49 * (-9 - 13)
  CHECK(std::abs(w49.lhs - (double)w49.rhs.convert_to<double>()) <
        1e-4 * std::pow(49.0, 1.5));

  // Same class, same identity: scale z by a cube.
  FieldElement z = P.from_subfield(3);
  FieldElement scaled = P.mul(z, P.from_subfield(6));  // 6 = (-1)^3 is a cube
  WeightedCubeIdentity other = weighted_cube_identity(P, scaled);
  CHECK(other.rhs == w7.rhs);
  CHECK(std::abs(other.lhs - w7.lhs) < 1e-9);

  CHECK_THROWS_AS(weighted_cube_identity(P, P.one()), std::invalid_argument);
}
