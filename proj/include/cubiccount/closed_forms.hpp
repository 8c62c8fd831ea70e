#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cubiccount/cd_solver.hpp"
#include "cubiccount/field.hpp"

namespace cubiccount {

using BigInt = boost::multiprecision::cpp_int;

// Coefficients of P(x) / (1 - 3q x^2 - qc x^3), the correction term
// shared by all the generating functions. P has degree <= 3 and may
// carry half-integer coefficients, so it is stored doubled; every
// emitted series coefficient must be an integer (the halves always
// cancel) and extraction asserts that. Coefficients obey
//   s_n = p_n + 3q s_{n-2} + qc s_{n-3}.
class CorrectionSeries {
 public:
  CorrectionSeries(BigInt q, BigInt c, std::array<BigInt, 4> numer_twice);

  BigInt coeff(int n);

 private:
  BigInt q_, c_;
  std::array<BigInt, 4> numer2_;
  std::vector<BigInt> twice_;  // twice_[n] = 2 * s_n
};

// An exact solution count plus the branch that produced it and the
// (c, d) pair it used (absent on the trivial q ≡ 2 mod 3 path).
struct CountResult {
  BigInt count;
  std::string branch;
  std::optional<CdPair> cd;
};

// Number of solutions of x_1^3 + ... + x_n^3 = z over F_q. n >= 1.
CountResult count_A(const FieldConfig& field, const FieldElement& z, int n);

// Number of solutions of x_1^3 + ... + x_n^3 + z x_{n+1}^3 = 0.
// n >= 0, z != 0.
CountResult count_B(const FieldConfig& field, const FieldElement& z, int n);

// Number of solutions of a1 x1^3 + a2 x2^3 + a3 x3^3 = 0; all ai != 0.
CountResult count_M(const FieldConfig& field, const FieldElement& a1,
                    const FieldElement& a2, const FieldElement& a3);

// Number of solutions of a1 x1^3 + a2 x2^3 = a3; all ai != 0.
CountResult count_N(const FieldConfig& field, const FieldElement& a1,
                    const FieldElement& a2, const FieldElement& a3);

// Same computations from a caller-supplied (c, d) pair. Used by the
// verification sweep's fault-injection mode; the public functions above
// delegate here after solving.
CountResult count_A_with(const FieldConfig& field, const FieldElement& z,
                         int n, const CdPair& cd);
CountResult count_B_with(const FieldConfig& field, const FieldElement& z,
                         int n, const CdPair& cd);
CountResult count_M_with(const FieldConfig& field, const FieldElement& a1,
                         const FieldElement& a2, const FieldElement& a3,
                         const CdPair& cd);
CountResult count_N_with(const FieldConfig& field, const FieldElement& a1,
                         const FieldElement& a2, const FieldElement& a3,
                         const CdPair& cd);

struct SeriesResult {
  std::string branch;
  std::optional<CdPair> cd;
  int n_start = 0;
  std::vector<BigInt> values;
};

// A_n(z) for n = 1..terms.
SeriesResult series_A(const FieldConfig& field, const FieldElement& z,
                      int terms);
// B_n(z) for n = 0..terms.
SeriesResult series_B(const FieldConfig& field, const FieldElement& z,
                      int terms);

}  // namespace cubiccount
