// cubiccount: exact solution counts of diagonal cubic equations over
// finite fields, with every closed form checkable against brute force.
//
// Subcommands: field, cd, count, series, verify, sums. One JSON record
// per invocation on stdout; diagnostics on stderr. Exit codes: 0 ok,
// 1 verification mismatch or failed self-check, 2 invalid input.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubiccount/brute_oracle.hpp"
#include "cubiccount/cd_solver.hpp"
#include "cubiccount/characters.hpp"
#include "cubiccount/closed_forms.hpp"
#include "cubiccount/verify.hpp"

using json = nlohmann::ordered_json;
using namespace cubiccount;

namespace {

// Integers beyond 53 bits of precision go out as decimal strings.
json big_to_json(const BigInt& v) {
  static const BigInt limit = BigInt(1) << 53;
  if (v > -limit && v < limit) return (int64_t)v.convert_to<long long>();
  return v.str();
}

json u64_to_json(uint64_t v) {
  if (v < (1ULL << 53)) return v;
  return std::to_string(v);
}

struct FieldFlags {
  uint64_t p = 0;
  unsigned k = 1;
  std::string modulus;

  void attach(CLI::App* cmd) {
    cmd->add_option("--p", p, "characteristic (prime)")->required();
    cmd->add_option("--k", k, "extension degree (default 1)");
    cmd->add_option("--modulus", modulus,
                    "defining polynomial, k+1 coefficients constant-first "
                    "(default: lexicographically smallest irreducible)");
  }

  FieldConfig build() const {
    if (modulus.empty()) return FieldConfig(p, k);
    std::vector<uint64_t> coeffs;
    std::stringstream ss(modulus);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        size_t pos = 0;
        unsigned long long v = std::stoull(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        coeffs.push_back(v);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad modulus coefficient: '" + tok + "'");
      }
    }
    return FieldConfig(p, k, std::move(coeffs));
  }
};

json field_json(const FieldConfig& F) {
  json j;
  j["p"] = u64_to_json(F.p());
  j["k"] = F.k();
  j["modulus"] = F.format_modulus();
  j["q"] = u64_to_json(F.q());
  j["q_mod_3"] = F.q() % 3;
  j["p_mod_3"] = F.p() % 3;
  return j;
}

json cd_json(const CdPair& cd) {
  json j;
  j["c"] = cd.c;
  if (cd.d)
    j["d"] = *cd.d;
  else
    j["d"] = nullptr;
  j["branch"] = to_string(cd.branch);
  return j;
}

json count_json(const CountResult& r) {
  json j;
  j["count"] = big_to_json(r.count);
  j["branch"] = r.branch;
  if (r.cd) j["cd"] = cd_json(*r.cd);
  return j;
}

struct Record {
  json j;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  Record(const std::string& command, const std::vector<std::string>& argv) {
    j["command"] = command;
    j["argv"] = argv;
  }

  int emit(int exit_code) {
    j["timing_ms"] = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    std::cout << j.dump(2) << "\n";
    return exit_code;
  }
};

int run_field(const FieldFlags& ff, const std::vector<std::string>& argv) {
  Record rec("field", argv);
  FieldConfig F = ff.build();
  rec.j["field"] = field_json(F);
  return rec.emit(0);
}

int run_cd(const FieldFlags& ff, const std::string& z_text,
           const std::vector<std::string>& argv) {
  Record rec("cd", argv);
  FieldConfig F = ff.build();
  rec.j["field"] = field_json(F);
  FieldElement z = F.parse_element(z_text);
  rec.j["inputs"] = {{"z", F.format_element(z)}};
  CubeClass cc = F.cube_class(z);
  CdPair cd = solve_cd(F, z);
  json result = cd_json(cd);
  if (!cd.d) result["d_note"] = "undefined (z cubic)";
  result["cube_class"] = {{"tag", to_string(cc.tag)}};
  if (cc.value)
    result["cube_class"]["value"] = u64_to_json(*cc.value);
  else
    result["cube_class"]["value"] = nullptr;
  rec.j["result"] = result;
  return rec.emit(0);
}

int run_count(const FieldFlags& ff, const std::string& formula,
              const std::string& z_text, const std::string& a1_text,
              const std::string& a2_text, const std::string& a3_text, int n,
              bool check, const std::vector<std::string>& argv) {
  Record rec("count", argv);
  FieldConfig F = ff.build();
  rec.j["field"] = field_json(F);
  json inputs;
  inputs["formula"] = formula;

  CountResult result;
  BruteCount brute;
  if (formula == "A" || formula == "B") {
    if (z_text.empty())
      throw std::invalid_argument("--z is required for formula " + formula);
    FieldElement z = F.parse_element(z_text);
    inputs["z"] = F.format_element(z);
    inputs["n"] = n;
    if (formula == "A") {
      result = count_A(F, z, n);
      if (check) brute = brute_A(F, z, n);
    } else {
      result = count_B(F, z, n);
      if (check) brute = brute_B(F, z, n);
    }
  } else if (formula == "M" || formula == "N") {
    if (a1_text.empty() || a2_text.empty() || a3_text.empty())
      throw std::invalid_argument("--a1/--a2/--a3 are required for formula " +
                                  formula);
    FieldElement a1 = F.parse_element(a1_text);
    FieldElement a2 = F.parse_element(a2_text);
    FieldElement a3 = F.parse_element(a3_text);
    inputs["a1"] = F.format_element(a1);
    inputs["a2"] = F.format_element(a2);
    inputs["a3"] = F.format_element(a3);
    if (formula == "M") {
      result = count_M(F, a1, a2, a3);
      if (check) brute = brute_M(F, a1, a2, a3);
    } else {
      result = count_N(F, a1, a2, a3);
      if (check) brute = brute_N(F, a1, a2, a3);
    }
  } else {
    throw std::invalid_argument("--formula must be one of A, B, M, N");
  }

  rec.j["inputs"] = inputs;
  rec.j["result"] = count_json(result);
  int code = 0;
  if (check) {
    bool match = result.count == brute;
    rec.j["check"] = {{"brute", big_to_json(brute)}, {"match", match}};
    if (!match) code = 1;
  }
  return rec.emit(code);
}

int run_series(const FieldFlags& ff, const std::string& formula,
               const std::string& z_text, int terms, const std::string& format,
               const std::vector<std::string>& argv) {
  Record rec("series", argv);
  FieldConfig F = ff.build();
  FieldElement z = F.parse_element(z_text);
  SeriesResult series;
  if (formula == "A")
    series = series_A(F, z, terms);
  else if (formula == "B")
    series = series_B(F, z, terms);
  else
    throw std::invalid_argument("--formula must be A or B");

  if (format == "csv") {
    std::cout << "n,count\n";
    for (size_t i = 0; i < series.values.size(); ++i)
      std::cout << series.n_start + (int)i << "," << series.values[i].str()
                << "\n";
    return 0;
  }
  if (format != "json")
    throw std::invalid_argument("--format must be json or csv");

  rec.j["field"] = field_json(F);
  rec.j["inputs"] = {{"formula", formula},
                     {"z", F.format_element(z)},
                     {"terms", terms}};
  json result;
  result["branch"] = series.branch;
  if (series.cd) result["cd"] = cd_json(*series.cd);
  result["n_start"] = series.n_start;
  result["values"] = json::array();
  for (const BigInt& v : series.values)
    result["values"].push_back(big_to_json(v));
  rec.j["result"] = result;
  return rec.emit(0);
}

int run_verify_cmd(const VerifyOptions& opt,
                   const std::vector<std::string>& argv) {
  Record rec("verify", argv);
  VerifyReport report = run_verify(opt);
  json fields = json::array();
  for (const auto& fr : report.fields) {
    json f;
    f["p"] = u64_to_json(fr.p);
    f["k"] = fr.k;
    f["q"] = u64_to_json(fr.q);
    f["modulus"] = fr.modulus;
    f["checks"] = fr.checks;
    f["skipped"] = fr.skipped;
    f["issues"] = json::array();
    for (const auto& issue : fr.issues)
      f["issues"].push_back({{"check", issue.check},
                             {"detail", issue.detail}});
    fields.push_back(std::move(f));
  }
  rec.j["inputs"] = {{"max_q", u64_to_json(opt.max_q)},
                     {"n_max", opt.n_max},
                     {"triples", opt.triples},
                     {"seed", u64_to_json(opt.seed)},
                     {"inject_c", opt.inject_c}};
  rec.j["result"] = {{"fields", fields},
                     {"total_checks", report.total_checks},
                     {"total_skipped", report.total_skipped},
                     {"total_issues", report.total_issues},
                     {"ok", report.ok}};
  for (const auto& fr : report.fields)
    for (const auto& issue : fr.issues)
      std::cerr << "mismatch [" << issue.check << "] " << issue.detail
                << "\n";
  return rec.emit(report.ok ? 0 : 1);
}

int run_sums(const FieldFlags& ff, const std::string& z_text,
             const std::vector<std::string>& argv) {
  Record rec("sums", argv);
  FieldConfig F = ff.build();
  rec.j["field"] = field_json(F);
  FieldElement z = F.parse_element(z_text);
  rec.j["inputs"] = {{"z", F.format_element(z)}};

  CubicCharacter chi = character_for(F, z);
  CdPair cd = solve_cd(F, z);
  double q = (double)F.q();

  double s1 = gauss_S(F, F.one());
  double sz = gauss_S(F, z);
  double sz2 = gauss_S(F, F.mul(z, z));
  auto root_residual = [&](double s) {
    return std::abs(s * s * s - 3.0 * q * s - q * (double)cd.c);
  };

  std::complex<double> G = gauss_G(F, chi);
  Eisenstein J = jacobi_chichi(F, chi);
  std::complex<double> G3 = G * G * G;
  double g3_residual = std::abs(G3 - q * J.to_complex());
  WeightedCubeIdentity wi = weighted_cube_identity(F, z);

  json result;
  result["cd"] = cd_json(cd);
  result["S"] = {{"S1", s1}, {"Sz", sz}, {"Sz2", sz2}};
  result["cubic_equation_residuals"] = {root_residual(s1), root_residual(sz),
                                        root_residual(sz2)};
  result["jacobi"] = {{"a", J.a}, {"b", J.b}};
  result["jacobi_norm"] = u64_to_json(J.norm());
  result["gauss_cubed_vs_q_jacobi_residual"] = g3_residual;
  result["weighted_cube_identity"] = {{"lhs", wi.lhs},
                                      {"rhs", big_to_json(wi.rhs)}};
  result["hasse_davenport_residual"] = hasse_davenport_residual(F);
  rec.j["result"] = result;
  return rec.emit(0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solution counts of diagonal cubic equations over F_q"};
  app.require_subcommand(1);

  FieldFlags ff_field, ff_cd, ff_count, ff_series, ff_sums;
  std::string z_cd, z_count, z_series, z_sums;
  std::string formula_count, formula_series;
  std::string a1, a2, a3;
  int n = 1, terms = 8;
  bool check = false;
  std::string format = "json";
  VerifyOptions vopt;

  CLI::App* c_field = app.add_subcommand("field", "construct a field and print its parameters");
  ff_field.attach(c_field);

  CLI::App* c_cd = app.add_subcommand("cd", "solve 4q = c^2 + 27d^2 with the sign of d fixed by z");
  ff_cd.attach(c_cd);
  c_cd->add_option("--z", z_cd, "element coefficients, constant-first")->required();

  CLI::App* c_count = app.add_subcommand("count", "evaluate a counting formula");
  ff_count.attach(c_count);
  c_count->add_option("--formula", formula_count, "A, B, M or N")->required();
  c_count->add_option("--z", z_count, "right-hand side / extra coefficient (A, B)");
  c_count->add_option("--n", n, "number of cubes (A, B)");
  c_count->add_option("--a1", a1, "coefficient (M, N)");
  c_count->add_option("--a2", a2, "coefficient (M, N)");
  c_count->add_option("--a3", a3, "coefficient (M, N)");
  c_count->add_flag("--check", check, "also run the brute-force oracle; mismatch exits 1");

  CLI::App* c_series = app.add_subcommand("series", "emit a table of counts from the generating function");
  ff_series.attach(c_series);
  c_series->add_option("--formula", formula_series, "A or B")->required();
  c_series->add_option("--z", z_series, "element coefficients")->required();
  c_series->add_option("--terms", terms, "last n to emit");
  c_series->add_option("--format", format, "json or csv (default json)");

  CLI::App* c_verify = app.add_subcommand("verify", "sweep fields and check every formula against brute force");
  c_verify->add_option("--max-q", vopt.max_q, "largest field size to sweep (default 64)");
  c_verify->add_option("--n-max", vopt.n_max, "largest n for A/B checks (default 3)");
  c_verify->add_option("--triples", vopt.triples, "random coefficient triples per field (default 50)");
  c_verify->add_option("--seed", vopt.seed, "seed for the triple generator (default 0)");
  c_verify->add_option("--inject-c", vopt.inject_c,
                       "offset added to every solved c inside the counting "
                       "formulas; nonzero values must make the sweep fail");

  CLI::App* c_sums = app.add_subcommand("sums", "numeric Gauss sums, exact Jacobi sum and identity residuals");
  ff_sums.attach(c_sums);
  c_sums->add_option("--z", z_sums, "non-cubic element")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    if (c_field->parsed()) return run_field(ff_field, args);
    if (c_cd->parsed()) return run_cd(ff_cd, z_cd, args);
    if (c_count->parsed())
      return run_count(ff_count, formula_count, z_count, a1, a2, a3, n, check,
                       args);
    if (c_series->parsed())
      return run_series(ff_series, formula_series, z_series, terms, format,
                        args);
    if (c_verify->parsed()) return run_verify_cmd(vopt, args);
    if (c_sums->parsed()) return run_sums(ff_sums, z_sums, args);
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
