#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "adistab/adi.hpp"
#include "adistab/bounds.hpp"
#include "adistab/config.hpp"
#include "adistab/discretization.hpp"
#include "adistab/errors.hpp"
#include "adistab/harness.hpp"
#include "adistab/reference.hpp"
#include "adistab/symbol.hpp"

#include <memory>

namespace py = pybind11;
using namespace adistab;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

std::vector<double> to_vector(const Array& a)
{
    return std::vector<double>(a.data(), a.data() + a.size());
}

Array to_array(const std::vector<double>& v)
{
    Array out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

SquareMatrix to_matrix(const Array& a)
{
    if (a.ndim() != 2 || a.shape(0) != a.shape(1))
        throw StructuralError("expected a square 2-D array");
    return SquareMatrix(static_cast<std::size_t>(a.shape(0)), to_vector(a));
}

// Holds the problem alongside the operator so the operator's problem data
// outlives any Python references.
struct PyOperator
{
    PyOperator(std::shared_ptr<const ProblemSpec> p, GridSpec g)
        : problem(std::move(p)), op(*problem, std::move(g))
    {}
    std::shared_ptr<const ProblemSpec> problem;
    SplitOperator op;
};

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "ADI schemes for diffusion equations with mixed derivatives: theta bounds, "
              "von Neumann symbols and time stepping";

    py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<InstabilityError>(m, "InstabilityError", PyExc_ArithmeticError);

    py::enum_<SchemeKind>(m, "Scheme")
        .value("Do", SchemeKind::Douglas)
        .value("CS", SchemeKind::CraigSneyd)
        .value("MCS", SchemeKind::ModifiedCraigSneyd)
        .value("HV", SchemeKind::HundsdorferVerwer);
    m.def("parse_scheme", [](const std::string& s) { return parse_scheme(s); });

    py::class_<BoundResult>(m, "BoundResult")
        .def_readonly("k", &BoundResult::k)
        .def_readonly("gamma", &BoundResult::gamma)
        .def_readonly("theta_min", &BoundResult::theta_min)
        .def_readonly("constants", &BoundResult::constants)
        .def_readonly("necessary_only", &BoundResult::necessary_only)
        .def_property_readonly("scheme", [](const BoundResult& b) { return b.kind; })
        .def_property_readonly("source", [](const BoundResult& b) {
            return b.source == BoundSource::Sufficient ? "theorem1" : "theorem2";
        });

    m.def("theorem1_lower_bound", &theorem1_lower_bound, py::arg("scheme"), py::arg("k"),
          py::arg("gamma"));
    m.def("theorem2_lower_bound", &theorem2_lower_bound, py::arg("scheme"), py::arg("k"),
          py::arg("gamma"));
    m.def("solve_ak", &solve_ak, py::arg("k"));
    m.def("lemma2_condition", &lemma2_condition, py::arg("alpha"), py::arg("delta"));
    m.def("lemma2_bruteforce_min", &lemma2_bruteforce_min, py::arg("alpha"), py::arg("delta"),
          py::arg("upper") = 8.0, py::arg("h") = 0.02);
    m.def("bounds_table", &format_bounds_table, py::arg("k"), py::arg("gamma"));

    m.def("validate_psd", [](const Array& a, double tol) { return validate_psd(to_matrix(a), tol); },
          py::arg("matrix"), py::arg("tol") = kPsdTolerance);
    m.def("gamma_min", [](const Array& a) { return gamma_min(DiffusionMatrix(to_matrix(a))); },
          py::arg("d"));
    m.def("template_matrix", [](const std::string& name, double gamma) {
        const SquareMatrix s = template_matrix(name, gamma);
        Array out({s.size(), s.size()});
        std::copy(s.data().begin(), s.data().end(), out.mutable_data());
        return out;
    }, py::arg("name"), py::arg("gamma"));

    m.def("scaled_eigenvalues",
          [](const Array& d, const Array& r_diag, const Array& phi) {
              const DiffusionMatrix dm(to_matrix(d));
              const auto zs = scaled_eigenvalues(dm, MixedStencilParams(dm.dim()), to_vector(r_diag),
                                                 to_vector(phi));
              return py::make_tuple(zs.z0, zs.z);
          },
          py::arg("d"), py::arg("r_diag"), py::arg("phi"),
          "Scaled eigenvalues (z0, [z1..zk]) for the 4-point mixed stencil (beta = 0)");
    m.def("amplification",
          [](SchemeKind kind, double theta, double z0, std::vector<double> z) {
              return amplification(kind, theta, ScaledEigenvalues{z0, std::move(z)});
          },
          py::arg("scheme"), py::arg("theta"), py::arg("z0"), py::arg("z"));
    m.def("stability_sweep",
          [](SchemeKind kind, double theta, const std::string& name, double gamma,
             std::size_t nphi, double rmin, double rmax, std::size_t rcount) {
              const ProblemSpec p = problem_template(name, gamma);
              const auto res = stability_sweep(
                  kind, theta, p.diffusion, p.beta,
                  SweepSampling::uniform(p.dim(), nphi, rmin, rmax, rcount));
              py::dict out;
              out["max_abs_m"] = res.max_abs_m;
              out["stable"] = res.stable;
              out["samples"] = res.samples;
              out["witness_r"] = res.witness_ratio.r;
              out["witness_phi"] = res.witness_phi;
              return out;
          },
          py::arg("scheme"), py::arg("theta"), py::arg("template"), py::arg("gamma"),
          py::arg("nphi") = 64, py::arg("rmin") = 1e-2, py::arg("rmax") = 1e6,
          py::arg("rcount") = 25);

    py::class_<ProblemSpec, std::shared_ptr<ProblemSpec>>(m, "Problem")
        .def_static("template", [](const std::string& name, double gamma) {
            return std::make_shared<ProblemSpec>(problem_template(name, gamma));
        }, py::arg("name"), py::arg("gamma"))
        .def_static("load", [](const std::string& path) {
            return std::make_shared<ProblemSpec>(load_problem(path));
        }, py::arg("path"))
        .def_property_readonly("k", &ProblemSpec::dim)
        .def_property_readonly("initial", [](const ProblemSpec& p) { return p.initial.name; });

    py::class_<PyOperator>(m, "SplitOperator")
        .def(py::init([](std::shared_ptr<ProblemSpec> p, std::size_t mpts) {
            const std::size_t k = p->dim();
            return std::make_unique<PyOperator>(std::move(p), GridSpec::uniform(k, mpts));
        }), py::arg("problem"), py::arg("m"))
        .def_property_readonly("size", [](const PyOperator& o) { return o.op.grid().size(); })
        .def("apply_term", [](const PyOperator& o, std::size_t j, const Array& u) {
            return to_array(o.op.apply_term(j, to_vector(u)));
        }, py::arg("j"), py::arg("u"))
        .def("apply_full", [](const PyOperator& o, const Array& u) {
            return to_array(o.op.apply_full(to_vector(u)));
        }, py::arg("u"))
        .def("initial", [](const PyOperator& o) {
            return to_array(sample_initial(*o.problem, o.op.grid()));
        })
        .def("step", [](const PyOperator& o, SchemeKind kind, double theta, const Array& u,
                        double dt) {
            return to_array(step(SchemeConfig(kind, theta), o.op, to_vector(u), 0.0, dt));
        }, py::arg("scheme"), py::arg("theta"), py::arg("u"), py::arg("dt"))
        .def("integrate", [](const PyOperator& o, SchemeKind kind, double theta, const Array& u0,
                             double t_final, std::size_t n_steps, bool tolerant) {
            Field u;
            {
                py::gil_scoped_release release;
                u = integrate(SchemeConfig(kind, theta), o.op, to_vector(u0), t_final, n_steps,
                              tolerant ? OverflowPolicy::Tolerant : OverflowPolicy::Strict);
            }
            return to_array(u);
        }, py::arg("scheme"), py::arg("theta"), py::arg("u0"), py::arg("t_final"),
           py::arg("n_steps"), py::arg("tolerant") = false)
        .def("exact", [](const PyOperator& o, const Array& u0, double t) {
            return to_array(exact_semidiscrete(*o.problem, o.op.grid(), to_vector(u0), t));
        }, py::arg("u0"), py::arg("t"));

    m.def("global_error", [](const Array& ref, const Array& num, std::size_t k, std::size_t mpts) {
        return global_error(to_vector(ref), to_vector(num), k, mpts);
    }, py::arg("ref"), py::arg("num"), py::arg("k"), py::arg("m"));

    m.def("converge",
          [](const std::string& name, double gamma, std::vector<std::size_t> ms,
             std::vector<std::string> schemes, const std::string& policy, double t_final,
             std::vector<std::size_t> steps) {
              ExperimentConfig cfg;
              cfg.template_name = name;
              cfg.gamma = gamma;
              cfg.m = std::move(ms);
              cfg.schemes.clear();
              for (const auto& s : schemes)
                  cfg.schemes.push_back(parse_scheme(s));
              cfg.theta_policy = ThetaPolicy::parse(policy);
              cfg.t_final = t_final;
              cfg.n_list = std::move(steps);
              ConvergenceResult res;
              {
                  py::gil_scoped_release release;
                  res = run_convergence(cfg);
              }
              py::list rows;
              for (const auto& r : res.records)
                  rows.append(py::make_tuple(std::string(scheme_name(r.scheme)), r.theta, r.m,
                                             r.dt, r.error));
              return rows;
          },
          py::arg("template"), py::arg("gamma"), py::arg("m"), py::arg("schemes"),
          py::arg("theta_policy") = "theorem1", py::arg("t_final") = 5.0,
          py::arg("steps") = std::vector<std::size_t>{});
}
