#include "cubiccount/field.hpp"

#include <algorithm>
#include <sstream>

namespace cubiccount {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return (uint64_t)((unsigned __int128)a * b % m);
}

uint64_t addmod(uint64_t a, uint64_t b, uint64_t m) {
  uint64_t s = a + b;  // a, b < m <= 2^63, no overflow
  return s >= m ? s - m : s;
}

uint64_t submod(uint64_t a, uint64_t b, uint64_t m) {
  return a >= b ? a - b : a + m - b;
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// --- polynomial helpers over F_p, coefficient lists constant-first ---

unsigned poly_deg(const std::vector<uint64_t>& f) {
  unsigned d = (unsigned)f.size();
  while (d > 0 && f[d - 1] == 0) --d;
  return d == 0 ? 0 : d - 1;
}

void poly_trim(std::vector<uint64_t>& f) {
  while (f.size() > 1 && f.back() == 0) f.pop_back();
}

// a*b mod (f, p), deg a, deg b < deg f, f monic.
std::vector<uint64_t> poly_mulmod(const std::vector<uint64_t>& a,
                                  const std::vector<uint64_t>& b,
                                  const std::vector<uint64_t>& f, uint64_t p) {
  size_t k = f.size() - 1;
  std::vector<uint64_t> c(2 * k - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = addmod(c[i + j], mulmod(a[i], b[j], p), p);
  }
  for (size_t i = c.size(); i-- > k;) {
    uint64_t t = c[i];
    if (t == 0) continue;
    c[i] = 0;
    for (size_t j = 0; j < k; ++j)
      c[i - k + j] = submod(c[i - k + j], mulmod(t, f[j], p), p);
  }
  c.resize(k);
  return c;
}

std::vector<uint64_t> poly_powmod(std::vector<uint64_t> base, uint64_t e,
                                  const std::vector<uint64_t>& f, uint64_t p) {
  size_t k = f.size() - 1;
  std::vector<uint64_t> r(k, 0);
  r[0] = 1;
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

std::vector<uint64_t> poly_mod(std::vector<uint64_t> a,
                               const std::vector<uint64_t>& b, uint64_t p) {
  poly_trim(a);
  unsigned db = poly_deg(b);
  uint64_t lead_inv = powmod(b[db], p - 2, p);
  while (poly_deg(a) >= db && !(a.size() == 1 && a[0] == 0)) {
    unsigned da = poly_deg(a);
    uint64_t factor = mulmod(a[da], lead_inv, p);
    for (unsigned j = 0; j <= db; ++j)
      a[da - db + j] = submod(a[da - db + j], mulmod(factor, b[j], p), p);
    poly_trim(a);
    if (a.size() == 1 && a[0] == 0) break;
  }
  return a;
}

std::vector<uint64_t> poly_gcd(std::vector<uint64_t> a, std::vector<uint64_t> b,
                               uint64_t p) {
  poly_trim(a);
  poly_trim(b);
  while (!(b.size() == 1 && b[0] == 0)) {
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

uint64_t checked_pow_u64(uint64_t p, unsigned k) {
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > (unsigned __int128)INT64_MAX)
      throw std::invalid_argument("p^k exceeds the 64-bit range");
  }
  return (uint64_t)q;
}

}  // namespace

bool lex_less(const FieldElement& a, const FieldElement& b) {
  return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(),
                                      b.coeffs.begin(), b.coeffs.end());
}

const char* to_string(CubeTag tag) {
  switch (tag) {
    case CubeTag::Zero: return "ZERO";
    case CubeTag::Cubic: return "CUBIC";
    default: return "NONCUBIC";
  }
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t s : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                     23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % s == 0) return n == s;
  }
  uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This witness set is exact for all n < 3.3e24, so for all of u64.
  for (uint64_t w : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                     23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t x = powmod(w, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_irreducible(const std::vector<uint64_t>& poly, uint64_t p) {
  if (poly.size() < 2 || poly.back() != 1)
    throw std::invalid_argument("polynomial must be monic of degree >= 1");
  unsigned k = (unsigned)poly.size() - 1;
  if (k == 1) return true;

  std::vector<uint64_t> x(k, 0);
  x[1] = 1;

  // x^(p^k) ≡ x (mod f)
  std::vector<uint64_t> frob = x;
  for (unsigned i = 0; i < k; ++i) frob = poly_powmod(frob, p, poly, p);
  if (frob != x) return false;

  // gcd(x^(p^(k/r)) - x, f) = 1 for every prime r | k
  std::vector<unsigned> prime_factors;
  unsigned rest = k;
  for (unsigned r = 2; r * r <= rest; ++r) {
    if (rest % r != 0) continue;
    prime_factors.push_back(r);
    while (rest % r == 0) rest /= r;
  }
  if (rest > 1) prime_factors.push_back(rest);
  for (unsigned r : prime_factors) {
    std::vector<uint64_t> y = x;
    for (unsigned i = 0; i < k / r; ++i) y = poly_powmod(y, p, poly, p);
    std::vector<uint64_t> diff = y;
    diff[1] = submod(diff[1], 1, p);
    if (poly_deg(poly_gcd(diff, poly, p)) != 0) return false;
  }
  return true;
}

std::vector<uint64_t> find_irreducible(uint64_t p, unsigned k) {
  if (!is_prime_u64(p)) throw std::invalid_argument("p is not prime");
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  if (k == 1) return {0, 1};
  checked_pow_u64(p, k);

  // Enumerate the non-leading coefficients (c0,...,c_{k-1}) in
  // lexicographic order, rightmost digit fastest. Candidates with
  // c0 = 0 are divisible by x, so start at c0 = 1.
  std::vector<uint64_t> cand(k + 1, 0);
  cand[0] = 1;
  cand[k] = 1;
  for (;;) {
    if (is_irreducible(cand, p)) return cand;
    unsigned i = k;
    do {
      --i;
      cand[i] = cand[i] + 1;
      if (cand[i] < p) break;
      cand[i] = 0;
    } while (i > 0);
    if (i == 0 && cand[0] == 0)
      throw ConsistencyError("no irreducible polynomial found");
  }
}

FieldConfig::FieldConfig(uint64_t p, unsigned k)
    : FieldConfig(p, k, find_irreducible(p, k)) {}

FieldConfig::FieldConfig(uint64_t p, unsigned k, std::vector<uint64_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  if (!is_prime_u64(p_)) throw std::invalid_argument("p is not prime");
  if (k_ == 0) throw std::invalid_argument("k must be >= 1");
  q_ = checked_pow_u64(p_, k_);
  if (modulus_.size() != (size_t)k_ + 1)
    throw std::invalid_argument("modulus must have exactly k+1 coefficients");
  if (modulus_.back() != 1)
    throw std::invalid_argument("modulus must be monic");
  for (uint64_t c : modulus_)
    if (c >= p_)
      throw std::invalid_argument("modulus coefficients must lie in [0, p)");
  if (!is_irreducible(modulus_, p_))
    throw std::invalid_argument("modulus is not irreducible over F_p");
}

FieldElement FieldConfig::zero() const {
  return {std::vector<uint64_t>(k_, 0)};
}

FieldElement FieldConfig::one() const { return from_subfield(1); }

FieldElement FieldConfig::from_subfield(uint64_t a) const {
  std::vector<uint64_t> c(k_, 0);
  c[0] = a % p_;
  return {std::move(c)};
}

FieldElement FieldConfig::element(std::vector<uint64_t> coeffs) const {
  FieldElement e{std::move(coeffs)};
  check(e);
  return e;
}

void FieldConfig::check(const FieldElement& a) const {
  if (a.coeffs.size() != k_)
    throw std::invalid_argument("element does not belong to this field");
  for (uint64_t c : a.coeffs)
    if (c >= p_)
      throw std::invalid_argument("element coefficient out of range");
}

bool FieldConfig::is_zero(const FieldElement& a) const {
  check(a);
  return std::all_of(a.coeffs.begin(), a.coeffs.end(),
                     [](uint64_t c) { return c == 0; });
}

FieldElement FieldConfig::add(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  FieldElement r = a;
  for (unsigned i = 0; i < k_; ++i)
    r.coeffs[i] = addmod(r.coeffs[i], b.coeffs[i], p_);
  return r;
}

FieldElement FieldConfig::sub(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  FieldElement r = a;
  for (unsigned i = 0; i < k_; ++i)
    r.coeffs[i] = submod(r.coeffs[i], b.coeffs[i], p_);
  return r;
}

FieldElement FieldConfig::neg(const FieldElement& a) const {
  check(a);
  FieldElement r = a;
  for (unsigned i = 0; i < k_; ++i)
    r.coeffs[i] = r.coeffs[i] == 0 ? 0 : p_ - r.coeffs[i];
  return r;
}

FieldElement FieldConfig::mul(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  if (k_ == 1) return {{mulmod(a.coeffs[0], b.coeffs[0], p_)}};
  std::vector<uint64_t> c(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j)
      c[i + j] = addmod(c[i + j], mulmod(a.coeffs[i], b.coeffs[j], p_), p_);
  }
  return reduce_product(std::move(c));
}

FieldElement FieldConfig::reduce_product(std::vector<uint64_t> prod) const {
  for (size_t i = prod.size(); i-- > k_;) {
    uint64_t t = prod[i];
    if (t == 0) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < k_; ++j)
      prod[i - k_ + j] = submod(prod[i - k_ + j], mulmod(t, modulus_[j], p_), p_);
  }
  prod.resize(k_);
  return {std::move(prod)};
}

FieldElement FieldConfig::pow(const FieldElement& a, uint64_t e) const {
  check(a);
  FieldElement r = one();
  FieldElement base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FieldElement FieldConfig::inv(const FieldElement& a) const {
  if (is_zero(a)) throw DivisionByZeroError("inverse of zero");
  FieldElement r = pow(a, q_ - 2);
  if (mul(a, r) != one())
    throw ConsistencyError("inverse failed its self-check");
  return r;
}

uint64_t FieldConfig::trace(const FieldElement& a) const {
  check(a);
  FieldElement acc = a;
  FieldElement x = a;
  for (unsigned i = 1; i < k_; ++i) {
    x = pow(x, p_);
    acc = add(acc, x);
  }
  for (unsigned i = 1; i < k_; ++i)
    if (acc.coeffs[i] != 0)
      throw ConsistencyError("trace left the prime subfield");
  return acc.coeffs[0];
}

uint64_t FieldConfig::norm(const FieldElement& a) const {
  if (is_zero(a)) return 0;
  FieldElement r = pow(a, (q_ - 1) / (p_ - 1));
  for (unsigned i = 1; i < k_; ++i)
    if (r.coeffs[i] != 0)
      throw ConsistencyError("norm left the prime subfield");
  return r.coeffs[0];
}

CubeClass FieldConfig::cube_class(const FieldElement& z) const {
  if (q_ % 3 != 1)
    throw UnsupportedFieldError(
        "cube classes are trivial: every element of F_q is a cube when "
        "q ≡ 2 (mod 3)");
  if (is_zero(z)) return {CubeTag::Zero, 0};
  FieldElement y = pow(z, (q_ - 1) / 3);
  if (y == one()) return {CubeTag::Cubic, 1};
  bool in_subfield = true;
  for (unsigned i = 1; i < k_; ++i)
    if (y.coeffs[i] != 0) in_subfield = false;
  if (!in_subfield) {
    // Only possible when the cube roots of unity are not in F_p.
    if (p_ % 3 != 2)
      throw ConsistencyError("cube-class power escaped F_p with p ≡ 1 mod 3");
    return {CubeTag::NonCubic, std::nullopt};
  }
  uint64_t v = y.coeffs[0];
  if (mulmod(mulmod(v, v, p_), v, p_) != 1)
    throw ConsistencyError("cube-class value is not a cube root of unity");
  return {CubeTag::NonCubic, v};
}

uint64_t FieldConfig::index_of(const FieldElement& a) const {
  check(a);
  uint64_t idx = 0;
  for (unsigned i = k_; i-- > 0;) idx = idx * p_ + a.coeffs[i];
  return idx;
}

FieldElement FieldConfig::element_at(uint64_t idx) const {
  std::vector<uint64_t> c(k_);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = idx % p_;
    idx /= p_;
  }
  if (idx != 0) throw std::invalid_argument("element index out of range");
  return {std::move(c)};
}

FieldElement FieldConfig::parse_element(const std::string& text) const {
  std::vector<uint64_t> coeffs;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    long long v;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad element coefficient: '" + tok + "'");
    }
    if (pos != tok.size())
      throw std::invalid_argument("bad element coefficient: '" + tok + "'");
    long long m = (long long)p_;
    coeffs.push_back((uint64_t)(((v % m) + m) % m));
  }
  if (coeffs.size() != k_)
    throw std::invalid_argument("element needs exactly k coefficients");
  return {std::move(coeffs)};
}

std::string FieldConfig::format_element(const FieldElement& a) const {
  check(a);
  std::string s;
  for (unsigned i = 0; i < k_; ++i) {
    if (i) s += ',';
    s += std::to_string(a.coeffs[i]);
  }
  return s;
}

std::string FieldConfig::format_modulus() const {
  std::string s;
  for (size_t i = 0; i < modulus_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(modulus_[i]);
  }
  return s;
}

}  // namespace cubiccount
