#include "cubiccount/brute_oracle.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace cubiccount {

namespace {

using boost::multiprecision::cpp_int;

void check_budget(const FieldConfig& field, int vars,
                  const EnumerationBudget& budget) {
  cpp_int points = 1;
  for (int i = 0; i < vars; ++i) points *= field.q();
  if (points > budget.max_points)
    throw BudgetExceededError("enumeration of q^" + std::to_string(vars) +
                              " = " + points.str() +
                              " points exceeds the budget of " +
                              std::to_string(budget.max_points));
}

// Index-level helpers: an element's index is its coefficient vector in
// mixed radix p, so addition is digit-wise and carry-free.
struct IndexOps {
  uint64_t p;
  unsigned k;

  uint64_t add(uint64_t a, uint64_t b) const {
    if (k == 1) {
      uint64_t s = a + b;
      return s >= p ? s - p : s;
    }
    uint64_t out = 0, mult = 1;
    for (unsigned i = 0; i < k; ++i) {
      uint64_t da = a % p, db = b % p;
      a /= p;
      b /= p;
      uint64_t s = da + db;
      if (s >= p) s -= p;
      out += s * mult;
      mult *= p;
    }
    return out;
  }

  uint64_t sub(uint64_t a, uint64_t b) const {
    if (k == 1) return a >= b ? a - b : a + p - b;
    uint64_t out = 0, mult = 1;
    for (unsigned i = 0; i < k; ++i) {
      uint64_t da = a % p, db = b % p;
      a /= p;
      b /= p;
      out += (da >= db ? da - db : da + p - db) * mult;
      mult *= p;
    }
    return out;
  }

  uint64_t neg(uint64_t a) const { return sub(0, a); }
};

// idx(a * x^3) for every x, as a flat table.
std::vector<uint64_t> scaled_cube_indices(const FieldConfig& field,
                                          const FieldElement& a) {
  std::vector<uint64_t> out(field.q());
  for (uint64_t i = 0; i < field.q(); ++i) {
    FieldElement x = field.element_at(i);
    FieldElement v = field.mul(a, field.mul(x, field.mul(x, x)));
    out[i] = field.index_of(v);
  }
  return out;
}

std::vector<uint64_t> histogram_of(const FieldConfig& field,
                                   const std::vector<uint64_t>& values) {
  std::vector<uint64_t> hist(field.q(), 0);
  for (uint64_t v : values) ++hist[v];
  uint64_t total = 0;
  for (uint64_t h : hist) total += h;
  if (total != field.q())
    throw ConsistencyError("cube-value histogram does not sum to q");
  return hist;
}

// Sum of hist[target - (sum of `vars` cube values)] over all outer
// assignments; the innermost variable is the histogram lookup.
uint64_t fold_count(const FieldConfig& field, const IndexOps& ops,
                    const std::vector<uint64_t>& cube_idx,
                    const std::vector<uint64_t>& hist, uint64_t target,
                    int outer_vars) {
  uint64_t total = 0;
  std::function<void(int, uint64_t)> walk = [&](int depth, uint64_t partial) {
    if (depth == outer_vars) {
      total += hist[ops.sub(target, partial)];
      return;
    }
    for (uint64_t i = 0; i < field.q(); ++i)
      walk(depth + 1, ops.add(partial, cube_idx[i]));
  };
  walk(0, 0);
  return total;
}

}  // namespace

BruteCount brute_A(const FieldConfig& field, const FieldElement& z, int n,
                   EnumerationBudget budget) {
  if (n < 1) throw std::invalid_argument("brute_A needs n >= 1");
  check_budget(field, n, budget);
  IndexOps ops{field.p(), field.k()};
  std::vector<uint64_t> cube_idx = scaled_cube_indices(field, field.one());
  std::vector<uint64_t> hist = histogram_of(field, cube_idx);
  return fold_count(field, ops, cube_idx, hist, field.index_of(z), n - 1);
}

BruteCount brute_B(const FieldConfig& field, const FieldElement& z, int n,
                   EnumerationBudget budget) {
  if (n < 0) throw std::invalid_argument("brute_B needs n >= 0");
  if (field.is_zero(z)) throw std::invalid_argument("brute_B needs z != 0");
  check_budget(field, n + 1, budget);
  IndexOps ops{field.p(), field.k()};
  std::vector<uint64_t> cube_idx = scaled_cube_indices(field, field.one());
  std::vector<uint64_t> hist_z =
      histogram_of(field, scaled_cube_indices(field, z));
  // x_1^3 + ... + x_n^3 = -z x_{n+1}^3, innermost variable from hist_z.
  return fold_count(field, ops, cube_idx, hist_z, 0, n);
}

BruteCount brute_M(const FieldConfig& field, const FieldElement& a1,
                   const FieldElement& a2, const FieldElement& a3,
                   EnumerationBudget budget) {
  if (field.is_zero(a1) || field.is_zero(a2) || field.is_zero(a3))
    throw std::invalid_argument("brute_M needs nonzero coefficients");
  check_budget(field, 3, budget);
  IndexOps ops{field.p(), field.k()};
  std::vector<uint64_t> v1 = scaled_cube_indices(field, a1);
  std::vector<uint64_t> v2 = scaled_cube_indices(field, a2);
  std::vector<uint64_t> hist3 =
      histogram_of(field, scaled_cube_indices(field, a3));
  uint64_t total = 0;
  for (uint64_t i = 0; i < field.q(); ++i)
    for (uint64_t j = 0; j < field.q(); ++j)
      total += hist3[ops.neg(ops.add(v1[i], v2[j]))];
  return total;
}

BruteCount brute_N(const FieldConfig& field, const FieldElement& a1,
                   const FieldElement& a2, const FieldElement& a3,
                   EnumerationBudget budget) {
  if (field.is_zero(a1) || field.is_zero(a2) || field.is_zero(a3))
    throw std::invalid_argument("brute_N needs nonzero coefficients");
  check_budget(field, 2, budget);
  IndexOps ops{field.p(), field.k()};
  std::vector<uint64_t> v1 = scaled_cube_indices(field, a1);
  std::vector<uint64_t> hist2 =
      histogram_of(field, scaled_cube_indices(field, a2));
  uint64_t target = field.index_of(a3);
  uint64_t total = 0;
  for (uint64_t i = 0; i < field.q(); ++i)
    total += hist2[ops.sub(target, v1[i])];
  return total;
}

std::vector<std::pair<FieldElement, FieldElement>> enumerate_N_solutions(
    const FieldConfig& field, const FieldElement& a1, const FieldElement& a2,
    const FieldElement& a3, EnumerationBudget budget) {
  if (field.is_zero(a1) || field.is_zero(a2) || field.is_zero(a3))
    throw std::invalid_argument("enumerate_N_solutions needs nonzero "
                                "coefficients");
  check_budget(field, 2, budget);
  IndexOps ops{field.p(), field.k()};
  std::vector<uint64_t> v1 = scaled_cube_indices(field, a1);
  std::vector<uint64_t> v2 = scaled_cube_indices(field, a2);
  uint64_t target = field.index_of(a3);
  std::vector<std::pair<FieldElement, FieldElement>> out;
  for (uint64_t i = 0; i < field.q(); ++i)
    for (uint64_t j = 0; j < field.q(); ++j)
      if (ops.add(v1[i], v2[j]) == target)
        out.emplace_back(field.element_at(i), field.element_at(j));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return lex_less(x.first, y.first);
    return lex_less(x.second, y.second);
  });
  return out;
}

}  // namespace cubiccount
