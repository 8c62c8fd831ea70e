#include "cubiccount/verify.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include "cubiccount/brute_oracle.hpp"
#include "cubiccount/characters.hpp"
#include "cubiccount/closed_forms.hpp"

namespace cubiccount {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

unsigned worker_count(size_t jobs) {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("CUBICCOUNT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) n = (unsigned)v;
  }
  if ((size_t)n > jobs) n = (unsigned)jobs;
  return n == 0 ? 1 : n;
}

std::string describe(const FieldConfig& F) {
  std::ostringstream os;
  os << "p=" << F.p() << " k=" << F.k() << " modulus=" << F.format_modulus();
  return os.str();
}

CdPair perturbed(CdPair cd, long long inject_c) {
  cd.c += inject_c;
  return cd;
}

struct FieldChecker {
  const FieldConfig& F;
  const VerifyOptions& opt;
  VerifyFieldResult& fr;

  void issue(const std::string& check, const std::string& detail) {
    fr.issues.push_back({check, describe(F) + " " + detail});
  }

  template <typename Fn>
  void guarded(const std::string& name, Fn&& fn) {
    ++fr.checks;
    try {
      fn();
    } catch (const BudgetExceededError&) {
      // The oracle refused the enumeration; not a mismatch.
      --fr.checks;
      ++fr.skipped;
    } catch (const std::exception& e) {
      issue(name, std::string("exception: ") + e.what());
    }
  }

  FieldElement noncubic_representative() {
    for (uint64_t i = 1; i < F.q(); ++i) {
      FieldElement z = F.element_at(i);
      if (F.cube_class(z).tag == CubeTag::NonCubic) return z;
    }
    throw ConsistencyError("no non-cubic element found");
  }

  void count_checks(const FieldElement& znc, const FieldElement& znc2) {
    const FieldElement reps_A[] = {F.zero(), F.one(), znc, znc2};
    for (const FieldElement& z : reps_A) {
      for (int n = 1; n <= opt.n_max; ++n) {
        guarded("A_formula_vs_brute", [&] {
          CdPair cd = perturbed(
              F.is_zero(z) ? solve_c(F) : solve_cd(F, z), opt.inject_c);
          BigInt formula = count_A_with(F, z, n, cd).count;
          BigInt brute = brute_A(F, z, n);
          if (formula != brute) {
            std::ostringstream os;
            os << "A_n: z=" << F.format_element(z) << " n=" << n
               << " formula=" << formula << " brute=" << brute;
            issue("A_formula_vs_brute", os.str());
          }
        });
      }
    }

    const FieldElement reps_B[] = {F.one(), znc, znc2};
    for (const FieldElement& z : reps_B) {
      for (int n = 0; n <= opt.n_max; ++n) {
        guarded("B_formula_vs_brute", [&] {
          CdPair cd = perturbed(solve_cd(F, z), opt.inject_c);
          BigInt formula = count_B_with(F, z, n, cd).count;
          BigInt brute = brute_B(F, z, n);
          if (formula != brute) {
            std::ostringstream os;
            os << "B_n: z=" << F.format_element(z) << " n=" << n
               << " formula=" << formula << " brute=" << brute;
            issue("B_formula_vs_brute", os.str());
          }
        });
      }
    }

    std::mt19937_64 rng(splitmix64(opt.seed ^ splitmix64(F.q() * 64 + F.k())));
    for (int t = 0; t < opt.triples; ++t) {
      FieldElement a1 = F.element_at(1 + rng() % (F.q() - 1));
      FieldElement a2 = F.element_at(1 + rng() % (F.q() - 1));
      FieldElement a3 = F.element_at(1 + rng() % (F.q() - 1));
      std::string inputs = "a1=" + F.format_element(a1) +
                           " a2=" + F.format_element(a2) +
                           " a3=" + F.format_element(a3);
      guarded("M_formula_vs_brute", [&] {
        FieldElement prod = F.mul(a1, F.mul(a2, a3));
        CdPair cd = perturbed(solve_cd(F, prod), opt.inject_c);
        BigInt formula = count_M_with(F, a1, a2, a3, cd).count;
        BigInt brute = brute_M(F, a1, a2, a3);
        if (formula != brute) {
          std::ostringstream os;
          os << "M: " << inputs << " formula=" << formula
             << " brute=" << brute;
          issue("M_formula_vs_brute", os.str());
        }
      });
      guarded("N_formula_vs_brute", [&] {
        FieldElement prod = F.mul(a1, F.mul(a2, a3));
        CdPair cd = perturbed(solve_cd(F, prod), opt.inject_c);
        BigInt formula = count_N_with(F, a1, a2, a3, cd).count;
        BigInt brute = brute_N(F, a1, a2, a3);
        if (formula != brute) {
          std::ostringstream os;
          os << "N: " << inputs << " formula=" << formula
             << " brute=" << brute;
          issue("N_formula_vs_brute", os.str());
        }
      });
    }
  }

  void character_checks(const FieldElement& znc, const FieldElement& znc2) {
    double root_q = std::sqrt((double)F.q());
    double big_tol = 1e-4 * root_q * root_q * root_q;

    for (const FieldElement& z : {znc, znc2}) {
      guarded("jacobi_exact", [&] {
        CubicCharacter chi = character_for(F, z);
        Eisenstein J = jacobi_chichi(F, chi);
        CdPair cd = solve_cd(F, z);
        Eisenstein expected = jacobi_expected(cd.c, *cd.d);
        if (!(J == expected)) {
          std::ostringstream os;
          os << "J(chi,chi): z=" << F.format_element(z) << " got (" << J.a
             << "," << J.b << ") expected (" << expected.a << ","
             << expected.b << ")";
          issue("jacobi_exact", os.str());
        }
        if (J.norm() != F.q()) {
          std::ostringstream os;
          os << "norm J = " << J.norm() << " != q";
          issue("jacobi_norm", os.str());
        }
      });
    }

    guarded("gauss_cubed_eq_q_jacobi", [&] {
      CubicCharacter chi = character_for(F, znc);
      std::complex<double> G = gauss_G(F, chi);
      Eisenstein J = jacobi_chichi(F, chi);
      std::complex<double> lhs = G * G * G;
      std::complex<double> rhs = (double)F.q() * J.to_complex();
      if (std::abs(lhs - rhs) > big_tol) {
        std::ostringstream os;
        os << "G^3 vs qJ residual " << std::abs(lhs - rhs);
        issue("gauss_cubed_eq_q_jacobi", os.str());
      }
    });

    guarded("gauss_product_conjugate", [&] {
      CubicCharacter chi = character_for(F, znc);
      std::complex<double> prod =
          gauss_G(F, chi) * gauss_G(F, conjugate(chi));
      if (std::abs(prod - std::complex<double>((double)F.q(), 0.0)) >
          1e-6 * (double)F.q()) {
        std::ostringstream os;
        os << "G(chi) G(conj chi) = " << prod.real() << "+" << prod.imag()
           << "i != q";
        issue("gauss_product_conjugate", os.str());
      }
    });

    guarded("cubic_equation_roots", [&] {
      CdPair cd = solve_c(F);
      double s[3] = {gauss_S(F, F.one()), gauss_S(F, znc),
                     gauss_S(F, F.mul(znc, znc))};
      for (double v : s) {
        double residual =
            std::abs(v * v * v - 3.0 * F.q() * v - (double)F.q() * cd.c);
        if (residual > big_tol) {
          std::ostringstream os;
          os << "S-value " << v << " residual " << residual;
          issue("cubic_equation_roots", os.str());
        }
      }
      if (std::abs(s[0] + s[1] + s[2]) > 1e-6 * root_q) {
        std::ostringstream os;
        os << "S(1)+S(z)+S(z^2) = " << s[0] + s[1] + s[2];
        issue("cubic_equation_roots", os.str());
      }
    });

    guarded("gauss_decomposition", [&] {
      CubicCharacter chi = character_for(F, znc);
      CubicCharacter bar = conjugate(chi);
      std::complex<double> G = gauss_G(F, chi);
      std::complex<double> Gbar = gauss_G(F, bar);
      std::mt19937_64 rng(splitmix64(opt.seed ^ splitmix64(F.q() * 977)));
      for (int i = 0; i < 100; ++i) {
        FieldElement a = F.element_at(1 + rng() % (F.q() - 1));
        std::complex<double> expect =
            chi_eval(bar, a).value() * G + chi_eval(chi, a).value() * Gbar;
        double residual = std::abs(gauss_S(F, a) - expect);
        if (residual > 1e-6 * root_q) {
          std::ostringstream os;
          os << "S(a) decomposition: a=" << F.format_element(a)
             << " residual " << residual;
          issue("gauss_decomposition", os.str());
          break;
        }
      }
    });

    guarded("weighted_cube_identity", [&] {
      WeightedCubeIdentity wi = weighted_cube_identity(F, znc);
      double rhs = (double)wi.rhs.convert_to<double>();
      if (std::abs(wi.lhs - rhs) > big_tol) {
        std::ostringstream os;
        os << "lhs=" << wi.lhs << " rhs=" << rhs;
        issue("weighted_cube_identity", os.str());
      }
    });

    guarded("hasse_davenport", [&] {
      double residual = hasse_davenport_residual(F);
      if (residual > 1e-5 * root_q) {
        std::ostringstream os;
        os << "residual " << residual;
        issue("hasse_davenport", os.str());
      }
    });

    guarded("character_orthogonality", [&] {
      CubicCharacter chi = character_for(F, znc);
      Eisenstein sum;
      for (uint64_t i = 1; i < F.q(); ++i)
        sum = sum + chi_eval(chi, F.element_at(i)).eisenstein();
      if (!(sum == Eisenstein{0, 0})) {
        std::ostringstream os;
        os << "sum chi(x) = (" << sum.a << "," << sum.b << ")";
        issue("character_orthogonality", os.str());
      }
      std::mt19937_64 rng(splitmix64(opt.seed ^ splitmix64(F.q() * 39)));
      for (int i = 0; i < 3; ++i) {
        FieldElement a = F.element_at(1 + rng() % (F.q() - 1));
        std::complex<double> acc = 0.0;
        for (uint64_t j = 0; j < F.q(); ++j)
          acc += psi(F, F.mul(a, F.element_at(j)));
        if (std::abs(acc) > 1e-6) {
          std::ostringstream os;
          os << "sum psi(a x): a=" << F.format_element(a) << " |sum|="
             << std::abs(acc);
          issue("character_orthogonality", os.str());
        }
      }
    });
  }

  void run() {
    FieldElement znc = noncubic_representative();
    FieldElement znc2 = F.mul(znc, znc);
    count_checks(znc, znc2);
    if (F.p() % 3 == 1) character_checks(znc, znc2);
  }
};

VerifyFieldResult check_field(uint64_t p, unsigned k,
                              const VerifyOptions& opt) {
  VerifyFieldResult fr;
  fr.p = p;
  fr.k = k;
  auto t0 = std::chrono::steady_clock::now();
  try {
    FieldConfig F(p, k);
    fr.q = F.q();
    fr.modulus = F.format_modulus();
    FieldChecker checker{F, opt, fr};
    checker.run();
  } catch (const std::exception& e) {
    fr.issues.push_back(
        {"field_setup", std::string("exception: ") + e.what()});
  }
  fr.elapsed_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  return fr;
}

}  // namespace

std::vector<std::pair<uint64_t, unsigned>> prime_powers_1mod3(uint64_t max_q) {
  std::vector<std::pair<uint64_t, unsigned>> out;
  for (uint64_t p = 2; p <= max_q; ++p) {
    if (!is_prime_u64(p)) continue;
    unsigned __int128 q = p;
    unsigned k = 1;
    while (q <= max_q) {
      if (q % 3 == 1) out.emplace_back(p, k);
      q *= p;
      ++k;
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    uint64_t qa = 1, qb = 1;
    for (unsigned i = 0; i < a.second; ++i) qa *= a.first;
    for (unsigned i = 0; i < b.second; ++i) qb *= b.first;
    return qa < qb;
  });
  return out;
}

VerifyReport run_verify(const VerifyOptions& options) {
  auto fields = prime_powers_1mod3(options.max_q);
  VerifyReport report;
  report.fields.resize(fields.size());

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= fields.size()) break;
      report.fields[i] = check_field(fields[i].first, fields[i].second,
                                     options);
    }
  };
  unsigned workers = worker_count(fields.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (const auto& fr : report.fields) {
    report.total_checks += fr.checks;
    report.total_skipped += fr.skipped;
    report.total_issues += (int)fr.issues.size();
  }
  report.ok = report.total_issues == 0;
  return report;
}

}  // namespace cubiccount
