#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flagtwist/suites.hpp"

namespace py = pybind11;
using namespace flagtwist;

namespace {

std::pair<CMat, CMat> tau_py(const CMat& x, const CMat& xi, int alpha, double cutoff,
                             bool inverse) {
  const CotangentPoint p{x, xi};
  const TwistProfile profile(cutoff);
  const CotangentPoint q = inverse ? tau_inverse(p, alpha, profile) : tau(p, alpha, profile);
  return {q.x, q.xi};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Moment maps, fiberwise Dehn twists and reduced-space braid "
            "generators on T*(SU(n)/T)";
  m.attr("__version__") = version_string();

  m.def("random_su",
        [](int n, std::uint64_t seed) {
          Rng rng(seed);
          return random_su(n, rng);
        },
        py::arg("n"), py::arg("seed") = 1, "Haar sample from SU(n)");
  m.def("exp_skew", &exp_skew, py::arg("a"),
        "exponential of a skew-Hermitian matrix");
  m.def("pairing", &pairing, py::arg("xi"), py::arg("a"),
        "Re tr(xi * i a) duality pairing");
  m.def("weyl_element", &weyl_element, py::arg("i"), py::arg("n"));
  m.def("strict_upper", &strict_upper, py::arg("xi"));

  m.def("moment",
        [](const CMat& x, const CMat& xi) { return moment({x, xi}); },
        py::arg("x"), py::arg("xi"), "moment map x xi x*");
  m.def("nilpotent_moment",
        [](const CMat& x, const CMat& xi) { return nilpotent_moment({x, xi}); },
        py::arg("x"), py::arg("xi"));
  m.def("sample_fiber",
        [](const RVec& p, std::uint64_t seed) {
          Rng rng(seed);
          const CotangentPoint pt = sample_fiber(p, rng);
          return std::make_pair(pt.x, pt.xi);
        },
        py::arg("p"), py::arg("seed") = 1,
        "point (x, xi) with moment diag(p) and zero-diagonal xi");
  m.def("is_singular_value",
        [](const RVec& p) { return is_singular_value(Chamber(p)); }, py::arg("p"));
  m.def("moment_rank",
        [](const CMat& x, const CMat& xi) { return moment_rank({x, xi}); },
        py::arg("x"), py::arg("xi"));

  m.def("jordan_partition",
        [](const CMat& u, double tol) { return jordan_partition(u, tol).parts; },
        py::arg("u"), py::arg("tol") = 1e-8);
  m.def("springer_class",
        [](const CMat& x, const CMat& xi) {
          return to_string(springer_class({x, xi}));
        },
        py::arg("x"), py::arg("xi"));
  m.def("fiber_normal_form",
        [](const CMat& x, const CMat& xi) {
          const FiberNormalForm f = fiber_normal_form({x, xi});
          return py::make_tuple(f.epsilon, f.a, f.theta);
        },
        py::arg("x"), py::arg("xi"),
        "(epsilon, bordering vector, theta) over diag(1,-1,0,...)");

  m.def("tau", &tau_py, py::arg("x"), py::arg("xi"), py::arg("alpha") = 1,
        py::arg("cutoff") = 1.0, py::arg("inverse") = false,
        "fiberwise Dehn twist along the root plane alpha");
  m.def("twist_profile_h",
        [](double t, double cutoff) { return TwistProfile(cutoff).h(t); },
        py::arg("t"), py::arg("cutoff") = 1.0);

  m.def("project_chart",
        [](const CMat& xi) {
          const ReducedChart3 c = project_chart(xi);
          return py::make_tuple(c.m12, c.m13, c.m23, c.nu, c.scale);
        },
        py::arg("xi"), "invariants (m12, m13, m23, nu, N) of a 3x3 fiber point");
  m.def("lift_chart",
        [](double m12, double m13, double m23, double nu, double scale) {
          ReducedChart3 c;
          c.m12 = m12;
          c.m13 = m13;
          c.m23 = m23;
          c.nu = nu;
          c.scale = scale;
          return lift_chart(c);
        },
        py::arg("m12"), py::arg("m13"), py::arg("m23"), py::arg("nu"),
        py::arg("scale"));
  m.def("tau_reduced",
        [](double m12, double m13, double m23, double nu, double scale, int alpha,
           double cutoff, bool inverse) {
          ReducedChart3 c;
          c.m12 = m12;
          c.m13 = m13;
          c.m23 = m23;
          c.nu = nu;
          c.scale = scale;
          const ReducedChart3 out = tau_reduced(c, alpha, TwistProfile(cutoff), inverse);
          return py::make_tuple(out.m12, out.m13, out.m23, out.nu);
        },
        py::arg("m12"), py::arg("m13"), py::arg("m23"), py::arg("nu"),
        py::arg("scale"), py::arg("alpha") = 1, py::arg("cutoff") = 1.0,
        py::arg("inverse") = false);
  m.def("vertex_permutation",
        [](int alpha, double N, double cutoff) {
          return vertex_permutation(alpha, N, TwistProfile(cutoff));
        },
        py::arg("alpha"), py::arg("N") = 4.0, py::arg("cutoff") = 1.0);

  m.def("sp4_matrix",
        [](double l2, double t1, double t2, double t4) {
          Sp4Equivariant e;
          e.lambda2 = l2;
          e.lambda1 = std::sqrt(1.0 + l2 * l2);
          e.theta1 = t1;
          e.theta2 = t2;
          e.theta4 = t4;
          e.theta3 = t2 + t4 - t1;
          return sp4_matrix(e);
        },
        py::arg("lambda2"), py::arg("theta1") = 0.0, py::arg("theta2") = 0.0,
        py::arg("theta4") = 0.0);
  m.def("sp4_membership",
        [](const Eigen::Matrix4d& mtx, double tol) -> py::tuple {
          double res = 0.0;
          const auto e = sp4_membership(mtx, tol, &res);
          if (!e) return py::make_tuple(py::none(), res);
          return py::make_tuple(
              py::make_tuple(e->lambda1, e->lambda2, e->theta1, e->theta2, e->theta3,
                             e->theta4),
              res);
        },
        py::arg("m"), py::arg("tol") = 1e-9);
  m.def("induced_rays",
        [](double l2, double t1, double t2, double t4) {
          Sp4Equivariant e;
          e.lambda2 = l2;
          e.lambda1 = std::sqrt(1.0 + l2 * l2);
          e.theta1 = t1;
          e.theta2 = t2;
          e.theta4 = t4;
          e.theta3 = t2 + t4 - t1;
          return induced_rays(e);
        },
        py::arg("lambda2"), py::arg("theta1") = 0.0, py::arg("theta2") = 0.0,
        py::arg("theta4") = 0.0);
  m.def("reduce_at_zero", &reduce_at_zero, py::arg("z0"), py::arg("z1"),
        py::arg("tol") = 1e-10);

  m.def("run_verify",
        [](const std::string& suite, int n, std::uint64_t seed, int samples) {
          RunConfig cfg;
          cfg.n = n;
          cfg.seed = seed;
          cfg.samples = samples;
          const SuiteReport report = run_verify(suite, cfg);
          return report_to_json(report, cfg).dump(2);
        },
        py::arg("suite") = "all", py::arg("n") = 3, py::arg("seed") = 1,
        py::arg("samples") = 32, "run a verification suite, returns the JSON report");
  m.def("figure1_report",
        [](int alpha, double N, int samples, double cutoff) {
          return figure1_report(alpha, N, samples, TwistProfile(cutoff)).dump(2);
        },
        py::arg("alpha") = 1, py::arg("N") = 4.0, py::arg("samples") = 256,
        py::arg("cutoff") = 1.0);
}
