#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tpcone/errors.hpp"
#include "tpcone/generators.hpp"
#include "tpcone/matrix_io.hpp"
#include "tpcone/serialize.hpp"

namespace py = pybind11;
using namespace tpcone;

namespace {

using DoubleArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

Matrix matrix_from_array(const DoubleArray& arr) {
  const auto buf = arr.request();
  if (buf.ndim != 2) throw InputError("expected a 2D array");
  Matrix m(static_cast<int>(buf.shape[0]), static_cast<int>(buf.shape[1]));
  const double* data = static_cast<const double*>(buf.ptr);
  std::copy(data, data + m.entries().size(), m.entries().begin());
  return m;
}

py::array_t<double> array_from_matrix(const Matrix& m) {
  py::array_t<double> arr({m.rows(), m.cols()});
  std::copy(m.entries().begin(), m.entries().end(), arr.mutable_data());
  return arr;
}

py::object json_to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Json py_to_json(const py::object& obj) {
  return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

ConeSpec cone_from_py(const py::dict& d) { return cone_from_json(py_to_json(d)); }

TSearchPolicy policy_from_string(const std::string& s) {
  if (s == "auto") return TSearchPolicy::automatic;
  if (s == "exact") return TSearchPolicy::exact_only;
  if (s == "mc") return TSearchPolicy::monte_carlo;
  throw InputError("policy must be one of 'auto', 'exact', 'mc'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exterior powers, total-positivity classification and spectral verification";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
  py::register_exception<ClassificationError>(m, "ClassificationError", PyExc_ValueError);

  // exterior
  m.def("subset_rank", &subset_rank, py::arg("n"), py::arg("elements"),
        "Lexicographic rank of a strictly increasing 1-based index tuple.");
  m.def("subset_unrank", &subset_unrank, py::arg("n"), py::arg("j"), py::arg("rank"));
  m.def(
      "minor",
      [](const DoubleArray& a, const IndexTuple& rows, const IndexTuple& cols) {
        return minor_of(matrix_from_array(a), rows, cols);
      },
      py::arg("a"), py::arg("rows"), py::arg("cols"),
      "Minor on 1-based row/column subsets.");
  m.def(
      "compound",
      [](const DoubleArray& a, int j) { return array_from_matrix(compound(matrix_from_array(a), j).body); },
      py::arg("a"), py::arg("j"), "j-th compound matrix over the lexicographic wedge basis.");
  m.def(
      "wedge", [](const std::vector<Vec>& xs) { return wedge(xs).coords; }, py::arg("vectors"),
      "Exterior product; coordinates are the j x j minors of the stacked factors.");
  m.def(
      "hodge",
      [](const Vec& coords, int n) {
        return hodge(MultiVector(n, n - 1, coords));
      },
      py::arg("coords"), py::arg("n"),
      "Map a grade n-1 multivector to the orthogonal vector of R^n.");
  m.def("kronecker_eigs", &kronecker_eigs, py::arg("eigenvalues"), py::arg("j"),
        "All j-fold products of eigenvalues over increasing index tuples.");

  // signs
  m.def(
      "sign_variation",
      [](const Vec& x, double tol) {
        const SignVariation sv = sign_variation(x, tol);
        return py::make_tuple(sv.s_minus, sv.s_plus);
      },
      py::arg("x"), py::arg("tol") = kDefaultTol, "(S-, S+) sign-change counts.");
  m.def(
      "m_membership",
      [](const Vec& x, int j, double tol) { return std::string(to_string(m_membership(x, j, tol))); },
      py::arg("x"), py::arg("j"), py::arg("tol") = kDefaultTol,
      "Membership in M(j) = { S- <= j-1 }: 'interior' | 'boundary' | 'outside'.");

  // classify
  m.def(
      "detect_js",
      [](const DoubleArray& a, bool strict, double tol) -> py::object {
        const auto jp = detect_js(matrix_from_array(a), strict, tol);
        if (!jp) return py::none();
        return py::cast(jp->members);
      },
      py::arg("a"), py::arg("strict") = false, py::arg("tol") = kDefaultTol,
      "Canonical J partition for a (strictly) J-sign-symmetric matrix, or None.");
  m.def(
      "classify",
      [](const DoubleArray& a, int k, double tol) {
        const Matrix m = matrix_from_array(a);
        return json_to_py(positivity_to_json(classify(m, k > 0 ? k : m.rows(), tol)));
      },
      py::arg("a"), py::arg("k") = 0, py::arg("tol") = kDefaultTol,
      "Positivity-hierarchy flags from the first k compound matrices (k=0 -> n).");

  // cones
  m.def(
      "cone_contains",
      [](const py::dict& cone, const Vec& x, double tol) {
        return std::string(to_string(contains(cone_from_py(cone), x, tol)));
      },
      py::arg("cone"), py::arg("x"), py::arg("tol") = kDefaultTol);
  m.def(
      "cone_adjoint",
      [](const py::dict& cone) { return json_to_py(cone_to_json(adjoint(cone_from_py(cone)))); },
      py::arg("cone"));
  m.def(
      "cone_max_angle",
      [](const py::dict& cone, int samples, std::uint64_t seed) {
        const MaxAngle ma = max_angle(cone_from_py(cone), samples, seed);
        return py::make_tuple(ma.radians, ma.exact);
      },
      py::arg("cone"), py::arg("samples") = 2048, py::arg("seed") = 0);
  m.def(
      "t_membership",
      [](const Vec& x, const py::dict& cone, int grade, int budget, std::uint64_t seed,
         const std::string& policy, double tol) {
        return json_to_py(t_result_to_json(
            t_membership(x, cone_from_py(cone), grade, budget, seed, policy_from_string(policy), tol)));
      },
      py::arg("x"), py::arg("cone"), py::arg("grade") = 0, py::arg("budget") = 10000,
      py::arg("seed") = 0, py::arg("policy") = "auto", py::arg("tol") = kDefaultTol);
  m.def(
      "t_chain_membership",
      [](const Vec& x, const std::vector<py::dict>& cones, int budget, std::uint64_t seed,
         const std::string& policy, double tol) {
        std::vector<ConeSpec> ks;
        for (const py::dict& d : cones) ks.push_back(cone_from_py(d));
        return json_to_py(
            t_result_to_json(t_chain_membership(x, ks, budget, seed, policy_from_string(policy), tol)));
      },
      py::arg("x"), py::arg("cones"), py::arg("budget") = 10000, py::arg("seed") = 0,
      py::arg("policy") = "auto", py::arg("tol") = kDefaultTol);

  // spectral
  m.def(
      "eigen",
      [](const DoubleArray& a) {
        const EigenDecomposition d = eigen(matrix_from_array(a));
        return py::make_tuple(d.values, d.right, d.left);
      },
      py::arg("a"), "(eigenvalues, right eigenvectors, left eigenvectors).");
  m.def(
      "perron_root",
      [](const DoubleArray& a, double tol, int max_iterations) {
        const PerronResult r = perron_root(matrix_from_array(a), tol, max_iterations);
        return py::make_tuple(r.rho, r.right, r.left);
      },
      py::arg("a"), py::arg("tol") = 1e-13, py::arg("max_iterations") = 500000,
      "Dominant eigenpair of an entrywise-positive matrix by power iteration.");
  m.def(
      "gk_verify",
      [](const DoubleArray& a, double tol, int combo_samples, std::uint64_t seed) {
        return json_to_py(spectral_report_to_json(gk_verify(matrix_from_array(a), tol, combo_samples, seed)));
      },
      py::arg("a"), py::arg("tol") = kEigenTol, py::arg("combo_samples") = 200, py::arg("seed") = 0,
      "Spectral verification report for an STP/STJS matrix.");
  m.def(
      "vdp_check",
      [](const DoubleArray& a, int trials, std::uint64_t seed, double tol) {
        return json_to_py(vdp_report_to_json(vdp_check(matrix_from_array(a), trials, seed, tol)));
      },
      py::arg("a"), py::arg("trials") = 1000, py::arg("seed") = 0, py::arg("tol") = kDefaultTol,
      "Variation-diminishing trials for a strictly sign-regular matrix.");

  // generators
  m.def(
      "vandermonde", [](const std::vector<double>& nodes) { return array_from_matrix(vandermonde(nodes)); },
      py::arg("nodes"));
  m.def(
      "random_stp",
      [](int n, std::uint64_t seed) { return array_from_matrix(random_stp(n, seed)); }, py::arg("n"),
      py::arg("seed") = 0, "Seeded strictly totally positive matrix, validated by classify.");
  m.def(
      "signature_conjugate",
      [](const DoubleArray& a, const std::vector<int>& signs) {
        return array_from_matrix(signature_conjugate(matrix_from_array(a), signs));
      },
      py::arg("a"), py::arg("signs"));
  m.def(
      "rotation3", [](double theta) { return array_from_matrix(rotation3(theta)); }, py::arg("theta"));
  m.def(
      "permutation_similar",
      [](const DoubleArray& a, const std::vector<int>& perm) {
        return array_from_matrix(permutation_similar(matrix_from_array(a), perm));
      },
      py::arg("a"), py::arg("perm"));
  m.def(
      "generate",
      [](const py::dict& spec) { return array_from_matrix(generate_from_json(py_to_json(spec))); },
      py::arg("spec"), "Run a generator spec ({'kind': ..., ...}).");

  m.attr("__version__") = "0.1.0";
}
