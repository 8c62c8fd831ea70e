#include "cubiccount/closed_forms.hpp"

namespace cubiccount {

namespace {

BigInt pow_big(uint64_t base, int e) {
  BigInt r = 1;
  BigInt b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

BigInt half_exact(const BigInt& v) {
  if (v % 2 != 0)
    throw ConsistencyError("half-integer term did not cancel");
  return v / 2;
}

CdPair cd_for(const FieldConfig& field, const FieldElement& z) {
  return field.is_zero(z) ? solve_c(field) : solve_cd(field, z);
}

long long signed_d(const CdPair& cd) {
  if (!cd.d)
    throw ConsistencyError("branch requires a signed d but the pair has none");
  return *cd.d;
}

void check_range(const BigInt& count, const FieldConfig& field, int vars,
                 const char* what) {
  if (count < 0 || count > pow_big(field.q(), vars))
    throw ConsistencyError(std::string(what) + ": count outside [0, q^vars]");
}

// Doubled numerators of the correction-term generating functions. With
// the shared denominator 1 - 3q x^2 - qc x^3 the series coefficients
// satisfy s_n = p_n + 3q s_{n-2} + qc s_{n-3}, so s_1..s_3 expand
// directly from the numerator p_1..p_3 and the recurrence takes over
// afterwards.
std::array<BigInt, 4> numer_A_zero(const BigInt& q, const BigInt& c) {
  // (q-1)(2 + c x) x^2
  return {0, 0, 4 * (q - 1), 2 * c * (q - 1)};
}

std::array<BigInt, 4> numer_A_cubic(const BigInt& c) {
  // 2x + (c-2) x^2 - c x^3
  return {0, 4, 2 * (c - 2), -2 * c};
}

std::array<BigInt, 4> numer_A_noncubic(const BigInt& c, const BigInt& d) {
  // x + (1/2)(4 + c - 9d) x^2 + c x^3, subtracted from the main term
  return {0, 2, 4 + c - 9 * d, 2 * c};
}

std::array<BigInt, 4> numer_B_noncubic(const BigInt& q, const BigInt& c,
                                       const BigInt& d) {
  // (q-1) x + (1/2)(q-1)(c - 9d) x^2, subtracted from the main term
  return {0, 2 * (q - 1), (q - 1) * (c - 9 * d), 0};
}

}  // namespace

CorrectionSeries::CorrectionSeries(BigInt q, BigInt c,
                                   std::array<BigInt, 4> numer_twice)
    : q_(std::move(q)), c_(std::move(c)), numer2_(std::move(numer_twice)) {}

BigInt CorrectionSeries::coeff(int n) {
  if (n < 0) throw std::invalid_argument("series index must be >= 0");
  while ((int)twice_.size() <= n) {
    int m = (int)twice_.size();
    BigInt t = m <= 3 ? numer2_[m] : BigInt(0);
    if (m >= 2) t += 3 * q_ * twice_[m - 2];
    if (m >= 3) t += q_ * c_ * twice_[m - 3];
    twice_.push_back(std::move(t));
  }
  return half_exact(twice_[n]);
}

CountResult count_A_with(const FieldConfig& field, const FieldElement& z,
                         int n, const CdPair& cd) {
  if (n < 1) throw std::invalid_argument("count_A needs n >= 1");
  BigInt q = field.q();
  BigInt c = cd.c;
  BigInt main = pow_big(field.q(), n - 1);
  CountResult result;
  switch (field.cube_class(z).tag) {
    case CubeTag::Zero: {
      CorrectionSeries s(q, c, numer_A_zero(q, c));
      result = {main + s.coeff(n), "A_zero", cd};
      break;
    }
    case CubeTag::Cubic: {
      CorrectionSeries s(q, c, numer_A_cubic(c));
      result = {main + s.coeff(n), "A_cubic", cd};
      break;
    }
    case CubeTag::NonCubic: {
      CorrectionSeries s(q, c, numer_A_noncubic(c, signed_d(cd)));
      result = {main - s.coeff(n), "A_noncubic", cd};
      break;
    }
  }
  check_range(result.count, field, n, "count_A");
  return result;
}

CountResult count_A(const FieldConfig& field, const FieldElement& z, int n) {
  if (n < 1) throw std::invalid_argument("count_A needs n >= 1");
  if (field.q() % 3 == 2) {
    // The cube map is a bijection, so the count is q^{n-1} for every z.
    CountResult result{pow_big(field.q(), n - 1), "A_trivial_all_cubes", {}};
    check_range(result.count, field, n, "count_A");
    return result;
  }
  return count_A_with(field, z, n, cd_for(field, z));
}

CountResult count_B_with(const FieldConfig& field, const FieldElement& z,
                         int n, const CdPair& cd) {
  if (n < 0) throw std::invalid_argument("count_B needs n >= 0");
  if (field.is_zero(z)) throw std::invalid_argument("count_B needs z != 0");
  BigInt q = field.q();
  BigInt c = cd.c;
  BigInt main = pow_big(field.q(), n);
  CountResult result;
  if (field.cube_class(z).tag == CubeTag::Cubic) {
    // B_n(z) = A_{n+1}(0) when z is cubic.
    CorrectionSeries s(q, c, numer_A_zero(q, c));
    result = {main + s.coeff(n + 1), "B_cubic_via_A_zero", cd};
  } else {
    CorrectionSeries s(q, c, numer_B_noncubic(q, c, signed_d(cd)));
    result = {main - s.coeff(n), "B_noncubic", cd};
  }
  check_range(result.count, field, n + 1, "count_B");
  return result;
}

CountResult count_B(const FieldConfig& field, const FieldElement& z, int n) {
  if (n < 0) throw std::invalid_argument("count_B needs n >= 0");
  if (field.is_zero(z)) throw std::invalid_argument("count_B needs z != 0");
  if (field.q() % 3 == 2) {
    // x_{n+1} is uniquely determined by the other variables.
    CountResult result{pow_big(field.q(), n), "B_trivial_all_cubes", {}};
    check_range(result.count, field, n + 1, "count_B");
    return result;
  }
  return count_B_with(field, z, n, solve_cd(field, z));
}

CountResult count_M_with(const FieldConfig& field, const FieldElement& a1,
                         const FieldElement& a2, const FieldElement& a3,
                         const CdPair& cd) {
  BigInt q = field.q();
  BigInt c = cd.c;
  FieldElement t = field.mul(a1, field.mul(a2, a3));
  CountResult result;
  if (field.cube_class(t).tag == CubeTag::Cubic) {
    result = {q * q + c * (q - 1), "M_cubic", cd};
  } else {
    BigInt h = half_exact(BigInt(9) * signed_d(cd) - c);
    result = {q * q + (q - 1) * h, "M_noncubic", cd};
  }
  check_range(result.count, field, 3, "count_M");
  return result;
}

CountResult count_M(const FieldConfig& field, const FieldElement& a1,
                    const FieldElement& a2, const FieldElement& a3) {
  if (field.is_zero(a1) || field.is_zero(a2) || field.is_zero(a3))
    throw std::invalid_argument("count_M needs nonzero coefficients");
  if (field.q() % 3 == 2) {
    CountResult result{BigInt(field.q()) * field.q(), "M_trivial_all_cubes", {}};
    return result;
  }
  FieldElement t = field.mul(a1, field.mul(a2, a3));
  return count_M_with(field, a1, a2, a3, solve_cd(field, t));
}

CountResult count_N_with(const FieldConfig& field, const FieldElement& a1,
                         const FieldElement& a2, const FieldElement& a3,
                         const CdPair& cd) {
  BigInt q = field.q();
  FieldElement t = field.mul(a1, field.mul(a2, a3));
  FieldElement r = field.mul(a1, field.inv(a2));
  bool t_cubic = field.cube_class(t).tag == CubeTag::Cubic;
  bool r_cubic = field.cube_class(r).tag == CubeTag::Cubic;
  BigInt term = t_cubic ? BigInt(cd.c)
                        : half_exact(BigInt(9) * signed_d(cd) - cd.c);
  BigInt base = r_cubic ? BigInt(q - 2) : BigInt(q + 1);
  std::string branch = std::string("N_") + (t_cubic ? "cubic" : "noncubic") +
                       (r_cubic ? "_cubic" : "_noncubic");
  CountResult result{base + term, branch, cd};
  check_range(result.count, field, 2, "count_N");
  return result;
}

CountResult count_N(const FieldConfig& field, const FieldElement& a1,
                    const FieldElement& a2, const FieldElement& a3) {
  if (field.is_zero(a1) || field.is_zero(a2) || field.is_zero(a3))
    throw std::invalid_argument("count_N needs nonzero coefficients");
  if (field.q() % 3 == 2) {
    return {BigInt(field.q()), "N_trivial_all_cubes", {}};
  }
  FieldElement t = field.mul(a1, field.mul(a2, a3));
  return count_N_with(field, a1, a2, a3, solve_cd(field, t));
}

SeriesResult series_A(const FieldConfig& field, const FieldElement& z,
                      int terms) {
  if (terms < 1) throw std::invalid_argument("series_A needs terms >= 1");
  SeriesResult out;
  out.n_start = 1;
  for (int n = 1; n <= terms; ++n) {
    CountResult r = count_A(field, z, n);
    if (n == 1) {
      out.branch = r.branch;
      out.cd = r.cd;
    }
    out.values.push_back(std::move(r.count));
  }
  return out;
}

SeriesResult series_B(const FieldConfig& field, const FieldElement& z,
                      int terms) {
  if (terms < 0) throw std::invalid_argument("series_B needs terms >= 0");
  SeriesResult out;
  out.n_start = 0;
  for (int n = 0; n <= terms; ++n) {
    CountResult r = count_B(field, z, n);
    if (n == 0) {
      out.branch = r.branch;
      out.cd = r.cd;
    }
    out.values.push_back(std::move(r.count));
  }
  return out;
}

}  // namespace cubiccount
