#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubiccount/brute_oracle.hpp"
#include "cubiccount/characters.hpp"
#include "cubiccount/closed_forms.hpp"
#include "cubiccount/verify.hpp"

namespace py = pybind11;
using namespace cubiccount;

namespace {

using Coeffs = std::vector<uint64_t>;

py::object to_py_int(const BigInt& v) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::dict cd_dict(const CdPair& cd) {
  py::dict d;
  d["c"] = cd.c;
  d["d"] = cd.d ? py::cast(*cd.d) : py::object(py::none());
  d["branch"] = to_string(cd.branch);
  return d;
}

py::dict count_dict(const CountResult& r) {
  py::dict d;
  d["count"] = to_py_int(r.count);
  d["branch"] = r.branch;
  d["cd"] = r.cd ? py::object(cd_dict(*r.cd)) : py::object(py::none());
  return d;
}

EnumerationBudget budget_of(uint64_t max_points) { return {max_points}; }

}  // namespace

PYBIND11_MODULE(_cubiccount, m) {
  m.doc() =
      "Exact solution counts of diagonal cubic equations over finite "
      "fields, with brute-force oracles and character-sum checks.";

  py::register_exception<UnsupportedFieldError>(m, "UnsupportedFieldError");
  py::register_exception<DivisionByZeroError>(m, "DivisionByZeroError");
  py::register_exception<BudgetExceededError>(m, "BudgetExceededError");
  py::register_exception<ConsistencyError>(m, "ConsistencyError");

  py::class_<FieldConfig>(m, "FieldConfig")
      .def(py::init<uint64_t, unsigned>(), py::arg("p"), py::arg("k") = 1)
      .def(py::init<uint64_t, unsigned, Coeffs>(), py::arg("p"), py::arg("k"),
           py::arg("modulus"))
      .def_property_readonly("p", &FieldConfig::p)
      .def_property_readonly("k", &FieldConfig::k)
      .def_property_readonly("q", &FieldConfig::q)
      .def_property_readonly(
          "modulus", [](const FieldConfig& F) { return F.modulus(); })
      .def("add",
           [](const FieldConfig& F, const Coeffs& a, const Coeffs& b) {
             return F.add(F.element(a), F.element(b)).coeffs;
           })
      .def("sub",
           [](const FieldConfig& F, const Coeffs& a, const Coeffs& b) {
             return F.sub(F.element(a), F.element(b)).coeffs;
           })
      .def("mul",
           [](const FieldConfig& F, const Coeffs& a, const Coeffs& b) {
             return F.mul(F.element(a), F.element(b)).coeffs;
           })
      .def("neg",
           [](const FieldConfig& F, const Coeffs& a) {
             return F.neg(F.element(a)).coeffs;
           })
      .def("pow",
           [](const FieldConfig& F, const Coeffs& a, uint64_t e) {
             return F.pow(F.element(a), e).coeffs;
           })
      .def("inv",
           [](const FieldConfig& F, const Coeffs& a) {
             return F.inv(F.element(a)).coeffs;
           })
      .def("trace",
           [](const FieldConfig& F, const Coeffs& a) {
             return F.trace(F.element(a));
           })
      .def("norm",
           [](const FieldConfig& F, const Coeffs& a) {
             return F.norm(F.element(a));
           })
      .def("cube_class",
           [](const FieldConfig& F, const Coeffs& z) {
             CubeClass cc = F.cube_class(F.element(z));
             py::object value =
                 cc.value ? py::cast(*cc.value) : py::object(py::none());
             return py::make_tuple(value, to_string(cc.tag));
           })
      .def("parse_element",
           [](const FieldConfig& F, const std::string& s) {
             return F.parse_element(s).coeffs;
           })
      .def("format_element",
           [](const FieldConfig& F, const Coeffs& a) {
             return F.format_element(F.element(a));
           })
      .def("__repr__", [](const FieldConfig& F) {
        return "FieldConfig(p=" + std::to_string(F.p()) +
               ", k=" + std::to_string(F.k()) +
               ", modulus=" + F.format_modulus() + ")";
      });

  m.def("is_prime", &is_prime_u64, py::arg("n"));
  m.def("find_irreducible", &find_irreducible, py::arg("p"), py::arg("k"));

  m.def("solve_c",
        [](const FieldConfig& F) { return cd_dict(solve_c(F)); });
  m.def("solve_cd", [](const FieldConfig& F, const Coeffs& z) {
    return cd_dict(solve_cd(F, F.element(z)));
  });

  m.def("count_A", [](const FieldConfig& F, const Coeffs& z, int n) {
    return count_dict(count_A(F, F.element(z), n));
  });
  m.def("count_B", [](const FieldConfig& F, const Coeffs& z, int n) {
    return count_dict(count_B(F, F.element(z), n));
  });
  m.def("count_M", [](const FieldConfig& F, const Coeffs& a1,
                      const Coeffs& a2, const Coeffs& a3) {
    return count_dict(count_M(F, F.element(a1), F.element(a2), F.element(a3)));
  });
  m.def("count_N", [](const FieldConfig& F, const Coeffs& a1,
                      const Coeffs& a2, const Coeffs& a3) {
    return count_dict(count_N(F, F.element(a1), F.element(a2), F.element(a3)));
  });

  m.def("series_A", [](const FieldConfig& F, const Coeffs& z, int terms) {
    py::list values;
    for (const BigInt& v : series_A(F, F.element(z), terms).values)
      values.append(to_py_int(v));
    return values;
  });
  m.def("series_B", [](const FieldConfig& F, const Coeffs& z, int terms) {
    py::list values;
    for (const BigInt& v : series_B(F, F.element(z), terms).values)
      values.append(to_py_int(v));
    return values;
  });

  m.def(
      "brute_A",
      [](const FieldConfig& F, const Coeffs& z, int n, uint64_t max_points) {
        return to_py_int(brute_A(F, F.element(z), n, budget_of(max_points)));
      },
      py::arg("field"), py::arg("z"), py::arg("n"),
      py::arg("max_points") = 100000000ULL);
  m.def(
      "brute_B",
      [](const FieldConfig& F, const Coeffs& z, int n, uint64_t max_points) {
        return to_py_int(brute_B(F, F.element(z), n, budget_of(max_points)));
      },
      py::arg("field"), py::arg("z"), py::arg("n"),
      py::arg("max_points") = 100000000ULL);
  m.def(
      "brute_M",
      [](const FieldConfig& F, const Coeffs& a1, const Coeffs& a2,
         const Coeffs& a3, uint64_t max_points) {
        return to_py_int(brute_M(F, F.element(a1), F.element(a2),
                                 F.element(a3), budget_of(max_points)));
      },
      py::arg("field"), py::arg("a1"), py::arg("a2"), py::arg("a3"),
      py::arg("max_points") = 100000000ULL);
  m.def(
      "brute_N",
      [](const FieldConfig& F, const Coeffs& a1, const Coeffs& a2,
         const Coeffs& a3, uint64_t max_points) {
        return to_py_int(brute_N(F, F.element(a1), F.element(a2),
                                 F.element(a3), budget_of(max_points)));
      },
      py::arg("field"), py::arg("a1"), py::arg("a2"), py::arg("a3"),
      py::arg("max_points") = 100000000ULL);
  m.def(
      "enumerate_N_solutions",
      [](const FieldConfig& F, const Coeffs& a1, const Coeffs& a2,
         const Coeffs& a3, uint64_t max_points) {
        py::list out;
        for (const auto& [x1, x2] : enumerate_N_solutions(
                 F, F.element(a1), F.element(a2), F.element(a3),
                 budget_of(max_points)))
          out.append(py::make_tuple(x1.coeffs, x2.coeffs));
        return out;
      },
      py::arg("field"), py::arg("a1"), py::arg("a2"), py::arg("a3"),
      py::arg("max_points") = 100000000ULL);

  // chi is the cubic character with chi(z) = omega.
  m.def("jacobi_chichi", [](const FieldConfig& F, const Coeffs& z) {
    Eisenstein J = jacobi_chichi(F, character_for(F, F.element(z)));
    return py::make_tuple(J.a, J.b);
  });
  m.def("gauss_S", [](const FieldConfig& F, const Coeffs& a) {
    return gauss_S(F, F.element(a));
  });
  m.def("gauss_G", [](const FieldConfig& F, const Coeffs& z) {
    return gauss_G(F, character_for(F, F.element(z)));
  });
  m.def("hasse_davenport_residual", &hasse_davenport_residual);
  m.def("weighted_cube_identity",
        [](const FieldConfig& F, const Coeffs& z) {
          WeightedCubeIdentity wi = weighted_cube_identity(F, F.element(z));
          return py::make_tuple(wi.lhs, to_py_int(wi.rhs));
        });

  m.def(
      "run_verify",
      [](uint64_t max_q, int n_max, int triples, uint64_t seed,
         long long inject_c) {
        VerifyOptions opt{max_q, n_max, triples, seed, inject_c};
        VerifyReport rep = run_verify(opt);
        py::list fields;
        for (const auto& fr : rep.fields) {
          py::dict f;
          f["p"] = fr.p;
          f["k"] = fr.k;
          f["q"] = fr.q;
          f["modulus"] = fr.modulus;
          f["checks"] = fr.checks;
          f["skipped"] = fr.skipped;
          py::list issues;
          for (const auto& issue : fr.issues) {
            py::dict d;
            d["check"] = issue.check;
            d["detail"] = issue.detail;
            issues.append(d);
          }
          f["issues"] = issues;
          fields.append(f);
        }
        py::dict out;
        out["fields"] = fields;
        out["total_checks"] = rep.total_checks;
        out["total_skipped"] = rep.total_skipped;
        out["total_issues"] = rep.total_issues;
        out["ok"] = rep.ok;
        return out;
      },
      py::arg("max_q") = 64, py::arg("n_max") = 3, py::arg("triples") = 50,
      py::arg("seed") = 0, py::arg("inject_c") = 0);
}
