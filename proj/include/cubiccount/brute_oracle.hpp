#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cubiccount/field.hpp"

namespace cubiccount {

// Upper bound on q^{#variables} for an exhaustive enumeration; the
// oracle refuses to start past it.
struct EnumerationBudget {
  uint64_t max_points = 100'000'000;
};

using BruteCount = boost::multiprecision::cpp_int;

// Exact counts by naive enumeration over a precomputed cube table,
// with the innermost variable folded into a histogram of cube values
// (q^{n} loops become q^{n-1} table lookups). These stay deliberately
// simple: they are the ground truth the closed forms are checked
// against.
BruteCount brute_A(const FieldConfig& field, const FieldElement& z, int n,
                   EnumerationBudget budget = {});
BruteCount brute_B(const FieldConfig& field, const FieldElement& z, int n,
                   EnumerationBudget budget = {});
BruteCount brute_M(const FieldConfig& field, const FieldElement& a1,
                   const FieldElement& a2, const FieldElement& a3,
                   EnumerationBudget budget = {});
BruteCount brute_N(const FieldConfig& field, const FieldElement& a1,
                   const FieldElement& a2, const FieldElement& a3,
                   EnumerationBudget budget = {});

// Full solution list of a1 x1^3 + a2 x2^3 = a3, sorted
// lexicographically (constant-term-first on x1, then x2).
std::vector<std::pair<FieldElement, FieldElement>> enumerate_N_solutions(
    const FieldConfig& field, const FieldElement& a1, const FieldElement& a2,
    const FieldElement& a3, EnumerationBudget budget = {});

}  // namespace cubiccount
