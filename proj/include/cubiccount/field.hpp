#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubiccount/errors.hpp"

namespace cubiccount {

// Element of F_{p^k}, stored as the k coefficients of its residue class
// modulo the field's defining polynomial, constant term first, each
// reduced into [0, p).
struct FieldElement {
  std::vector<uint64_t> coeffs;

  bool operator==(const FieldElement&) const = default;
};

// Constant-term-first lexicographic comparison of coefficient vectors.
bool lex_less(const FieldElement& a, const FieldElement& b);

enum class CubeTag { Zero, Cubic, NonCubic };

const char* to_string(CubeTag tag);

// z^{(q-1)/3} together with its classification. `value` holds the
// prime-subfield integer when that power lies in F_p; for p ≡ 2 (mod 3)
// the non-cubic classes land outside F_p and `value` is absent.
struct CubeClass {
  CubeTag tag = CubeTag::Zero;
  std::optional<uint64_t> value;
};

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

// Rabin irreducibility test for a monic polynomial over F_p, given as
// its coefficient list (constant term first).
bool is_irreducible(const std::vector<uint64_t>& poly, uint64_t p);

// Lexicographically smallest monic irreducible of degree k over F_p
// (coefficients compared constant-term-first). k = 1 yields x.
std::vector<uint64_t> find_irreducible(uint64_t p, unsigned k);

// Immutable description of F_{p^k}. All operations are pure; a config
// can be shared freely across threads.
class FieldConfig {
 public:
  FieldConfig(uint64_t p, unsigned k);
  FieldConfig(uint64_t p, unsigned k, std::vector<uint64_t> modulus);

  uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  uint64_t q() const { return q_; }
  const std::vector<uint64_t>& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  // Embedding of a (mod p) into the prime subfield.
  FieldElement from_subfield(uint64_t a) const;
  // Validates length and coefficient range.
  FieldElement element(std::vector<uint64_t> coeffs) const;

  bool is_zero(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  // a^e with 0^0 = 1.
  FieldElement pow(const FieldElement& a, uint64_t e) const;
  FieldElement inv(const FieldElement& a) const;

  // Absolute trace/norm down to F_p, returned as the prime-subfield
  // integer. Both verify that their own output landed in F_p.
  uint64_t trace(const FieldElement& a) const;
  uint64_t norm(const FieldElement& a) const;

  // Requires q ≡ 1 (mod 3).
  CubeClass cube_class(const FieldElement& z) const;

  // Enumeration order: index = sum coeffs[i] * p^i, so indices cover
  // 0..q-1 with 0 the zero element.
  uint64_t index_of(const FieldElement& a) const;
  FieldElement element_at(uint64_t idx) const;

  // Text form "c0,c1,...,c_{k-1}"; parsing accepts signed integers and
  // reduces them mod p.
  FieldElement parse_element(const std::string& text) const;
  std::string format_element(const FieldElement& a) const;
  std::string format_modulus() const;

 private:
  void check(const FieldElement& a) const;
  FieldElement reduce_product(std::vector<uint64_t> prod) const;

  uint64_t p_;
  unsigned k_;
  uint64_t q_;
  std::vector<uint64_t> modulus_;
};

}  // namespace cubiccount
