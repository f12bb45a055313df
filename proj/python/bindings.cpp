#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lspec/algebraic.hpp"
#include "lspec/density.hpp"
#include "lspec/dyck.hpp"
#include "lspec/enumeration.hpp"
#include "lspec/errors.hpp"
#include "lspec/matrix_mc.hpp"
#include "lspec/series.hpp"

namespace py = pybind11;
using namespace lspec;

namespace {

py::object to_py(const Integer& n) { return py::module_::import("builtins").attr("int")(n.str()); }

py::object to_py(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(boost::multiprecision::numerator(q)), to_py(boost::multiprecision::denominator(q)));
}

template <class T>
py::list to_py_list(const std::vector<T>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

Partition as_partition(const std::vector<int>& parts) { return Partition(parts); }

py::dict poly_to_dict(const BivariatePoly& P) {
  py::dict out;
  for (const auto& [degrees, c] : P.terms()) out[py::make_tuple(degrees.first, degrees.second)] = to_py(c);
  return out;
}

py::dict tree_to_dict(const LabelledPlaneTree& t) {
  py::dict d;
  d["children"] = t.child_counts;
  d["labels"] = t.labels;
  return d;
}

LabelledPlaneTree tree_from_dict(const py::dict& d) {
  return {d["children"].cast<std::vector<int>>(), d["labels"].cast<std::vector<int>>()};
}

std::vector<std::array<int, 3>> path_to_list(const LambdaDyckPath& path) {
  std::vector<std::array<int, 3>> out;
  for (const auto& s : path.steps) out.push_back({s.i, s.j, s.h});
  return out;
}

LambdaDyckPath path_from_list(const std::vector<std::array<int, 3>>& steps, int root_label) {
  LambdaDyckPath path;
  for (const auto& s : steps) path.steps.push_back({s[0], s[1], s[2]});
  path.root_label = root_label;
  return path;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spectra of lambda-shaped random matrices: exact counts, transforms and densities.";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);

  // Partitions.
  m.def("parse_partition", [](const std::string& text) { return parse_partition(text).parts(); });
  m.def("conjugate", [](const std::vector<int>& parts) { return conjugate(as_partition(parts)).parts(); });
  m.def("from_heights", [](const std::vector<int>& a) { return self_conjugate_from_heights(a).parts(); },
        py::arg("heights"));
  m.def("heights", [](const std::vector<int>& parts) { return as_partition(parts).heights(); });
  m.def("null_space_dim", [](const std::vector<int>& parts) { return null_space_dim(as_partition(parts)); },
        "Row-count kernel formula.");
  m.def("generic_null_space_dim",
        [](const std::vector<int>& parts) { return generic_null_space_dim(as_partition(parts)); },
        "Kernel dimension of a generic matrix with this support pattern.");

  // Counts and moments.
  m.def("count_trees",
        [](const std::vector<int>& parts, int kmax) { return to_py_list(count_recurrence(as_partition(parts), kmax).counts); },
        py::arg("partition"), py::arg("kmax"));
  m.def("count_summation", [](const std::vector<int>& a, int k) { return to_py(count_summation(a, k)); },
        py::arg("heights"), py::arg("k"));
  m.def("count_fat_hook", [](int a1, int a2, int k) { return to_py(count_fat_hook(a1, a2, k)); });
  m.def("count_brute",
        [](const std::vector<int>& parts, int k, double budget) { return to_py(count_brute(as_partition(parts), k, budget)); },
        py::arg("partition"), py::arg("k"), py::arg("budget") = kDefaultBruteBudget);
  m.def("moments", [](const std::vector<int>& parts, int kmax) { return to_py_list(moments(as_partition(parts), kmax)); },
        py::arg("partition"), py::arg("kmax"));
  m.def("refined_count", [](const std::vector<int>& composition) { return to_py(refined_count(composition)); });

  // Trees and paths.
  m.def("enumerate_trees", [](const std::vector<int>& parts, int k) {
    py::list out;
    for (const auto& t : enumerate_brute(as_partition(parts), k)) out.append(tree_to_dict(t));
    return out;
  });
  m.def("tree_to_path", [](const std::vector<int>& parts, const py::dict& tree) {
    const LambdaDyckPath path = tree_to_path(as_partition(parts), tree_from_dict(tree));
    return py::make_tuple(path_to_list(path), path.root_label);
  });
  m.def("path_to_tree",
        [](const std::vector<int>& parts, const std::vector<std::array<int, 3>>& steps, int root_label) {
          return tree_to_dict(path_to_tree(as_partition(parts), path_from_list(steps, root_label)));
        },
        py::arg("partition"), py::arg("steps"), py::arg("root_label") = 0);
  m.def("validate_path",
        [](const std::vector<int>& parts, const std::vector<std::array<int, 3>>& steps, int root_label) {
          const PathCheck check = validate_path(as_partition(parts), path_from_list(steps, root_label));
          return py::make_tuple(check.valid(), check.message);
        },
        py::arg("partition"), py::arg("steps"), py::arg("root_label") = 0);
  m.def("count_paths", [](const std::vector<int>& parts, int k) { return to_py(count_paths(as_partition(parts), k)); });

  // Transforms and algebraic equations.
  m.def("r_transform", [](const std::vector<int>& a, int order) {
    return to_py_list(r_transform_from_moments(a, order).coefficients());
  }, py::arg("heights"), py::arg("order"));
  m.def("s_transform", [](const std::vector<int>& a, int order) {
    return to_py_list(R_to_S(r_transform_from_moments(a, order)).coefficients());
  }, py::arg("heights"), py::arg("order"));
  m.def("moment_equation", [](const std::vector<int>& a) { return poly_to_dict(eliminate_moment_equation(a)); },
        "P(M, z) as {(deg_M, deg_z): coefficient}.");
  m.def("cauchy_equation", [](const std::vector<int>& a) { return poly_to_dict(eliminate(a)); },
        "L(G, z) as {(deg_G, deg_z): coefficient}.");
  m.def("fat_hook_cubic", [](int a1, int a2) { return poly_to_dict(fat_hook_cubic(a1, a2)); });
  m.def("fat_hook_support", [](int a1, int a2) {
    const FatHookSpectrum s = fat_hook_support(a1, a2);
    py::dict d;
    d["atom_mass"] = to_py(s.atom_mass);
    d["z_minus"] = s.z_minus.value();
    d["z_plus"] = s.z_plus.value();
    d["support"] = py::make_tuple(s.support_min(), s.support_max());
    return d;
  });

  // Densities.
  m.def("fat_hook_density", [](int a1, int a2, double x) {
    return fat_hook_density(fat_hook_support(a1, a2), x).value;
  });
  m.def("fat_hook_density_closed_form", &fat_hook_density_closed_form);
  m.def("fat_hook_density_continuation", &fat_hook_density_continuation);
  m.def("stieltjes_density",
        [](const std::vector<int>& a, double x) { return stieltjes_density(a, x).density; },
        py::arg("heights"), py::arg("x"));
  m.def("support_edges", [](const std::vector<int>& a) { return discriminant_positive_roots(eliminate(a)); });
  m.def("analytic_law", [](const std::vector<int>& parts) {
    const AnalyticLaw law = analytic_law(as_partition(parts));
    py::dict d;
    d["atom_mass"] = law.atom_mass;
    d["support"] = py::make_tuple(law.support_lo, law.support_hi);
    return d;
  });

  // Monte Carlo.
  m.def("gram_eigenvalues",
        [](const std::vector<int>& parts, int N, std::uint64_t seed, const std::string& law) {
          const auto values = gram_eigenvalues(sample_matrix(as_partition(parts), N, seed, parse_entry_law(law)));
          return py::array_t<double>(values.size(), values.data());
        },
        py::arg("partition"), py::arg("N"), py::arg("seed") = 42, py::arg("law") = "gaussian");
  m.def("simulate",
        [](const std::vector<int>& parts, int N, int trials, std::uint64_t seed, const std::string& law, int kmax,
           int bins, int threads) {
          ExperimentConfig config;
          config.N = N;
          config.trials = trials;
          config.seed = seed;
          config.law = parse_entry_law(law);
          config.kmax = kmax;
          config.bins = bins;
          config.threads = threads;
          SpectralSample s;
          {
            py::gil_scoped_release release;
            s = run_experiment(as_partition(parts), config);
          }
          py::dict d;
          d["eigenvalues"] = py::array_t<double>(s.eigenvalues.size(), s.eigenvalues.data());
          py::list means, errors;
          for (const auto& e : s.moments) {
            means.append(e.mean);
            errors.append(e.standard_error);
          }
          d["moments"] = means;
          d["standard_errors"] = errors;
          d["near_zero_fraction"] = s.near_zero_fraction;
          return d;
        },
        py::arg("partition"), py::arg("N") = 20, py::arg("trials") = 100, py::arg("seed") = 42,
        py::arg("law") = "gaussian", py::arg("kmax") = 4, py::arg("bins") = 200, py::arg("threads") = 0);
  m.def("kernel_dim", [](const std::vector<int>& parts, int N, std::uint64_t seed) {
    const KernelCheck c = kernel_dim_check(as_partition(parts), N, seed);
    py::dict d;
    d["numeric"] = c.numeric_dim;
    d["formula"] = c.predicted_dim;
    d["generic"] = c.generic_dim;
    d["ambiguous"] = c.ambiguous;
    return d;
  }, py::arg("partition"), py::arg("N"), py::arg("seed") = 42);
}
