#include "moricone/blowup.hpp"
#include "moricone/certificate_io.hpp"
#include "moricone/delpezzo.hpp"
#include "moricone/errors.hpp"
#include "moricone/scenario.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace moricone;

namespace {

py::object fraction(const Rational& q) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

py::list vec(const ClassVector& v) {
    py::list out;
    for (std::size_t i = 0; i < v.size(); ++i) out.append(fraction(v[i]));
    return out;
}

py::list vecs(const std::vector<ClassVector>& vs) {
    py::list out;
    for (const auto& v : vs) out.append(vec(v));
    return out;
}

Budget make_budget(std::optional<double> seconds, std::optional<std::size_t> rays) {
    Budget b;
    b.max_seconds = seconds;
    b.max_rays = rays;
    return b;
}

py::dict relative_cones() {
    auto rc = blowup::relative_cones();
    py::dict d;
    d["nef"] = vecs(rc.nef.rays());
    d["ne"] = vecs(rc.ne.rays());
    d["verified"] = rc.verified();
    return d;
}

py::dict classify_construction(int a, int b, std::vector<int> components, bool a_in_b, bool b_in_a) {
    blowup::ConstructionParams p{a, b, std::move(components), a_in_b, b_in_a};
    auto r = blowup::classify(p);
    py::dict d;
    d["contraction"] = r.contraction_type();
    d["K_extremal"] = r.is_K_extremal;
    d["K_dot_e"] = r.K_dot_e;
    d["K_dot_f"] = r.K_dot_f;
    d["exceptional_codims"] = r.exceptional_component_codims;
    d["target"] = r.target_description;
    d["modification"] = blowup::to_string(r.birational_modification);
    return d;
}

py::list minus_one_classes(int r) { return vecs(delpezzo::minus_one_classes(delpezzo::Lattice(r))); }

py::dict verify_scenario(int r1, int r2, std::optional<double> seconds, std::optional<std::size_t> rays) {
    auto s = scenario::build_scenario(r1, r2);
    scenario::TheoremVerdict v;
    {
        py::gil_scoped_release release;
        v = scenario::verify_theorem(s, make_budget(seconds, rays));
    }
    py::dict d;
    d["containment"] = v.containment;
    d["containment_method"] = v.containment_method;
    d["equality"] = scenario::to_string(v.equality);
    d["verified"] = v.verified();
    d["dual_rays"] = v.dual_ray_count;
    d["claimed_rays"] = v.claimed_ray_count;
    d["witness"] = v.equality_witness ? py::object(vec(*v.equality_witness)) : py::object(py::none());
    return d;
}

py::dict classify_scenario(int r1, int r2) {
    auto c = scenario::classify(scenario::build_scenario(r1, r2));
    auto pairings = [](const std::vector<scenario::CurvePairing>& ps) {
        py::dict out;
        for (const auto& p : ps) out[py::str(p.curve)] = fraction(p.value);
        return out;
    };
    py::dict d;
    d["fano"] = c.fano;
    d["weak_fano"] = c.weak_fano;
    d["fano_type"] = c.fano_type;
    d["minus_k"] = pairings(c.minus_k);
    d["delta_certificate"] = pairings(c.delta_certificate);
    d["delta_passes"] = c.delta_passes;
    if (c.not_fano_witness) d["not_fano_witness"] = py::make_tuple(c.not_fano_witness->curve, fraction(c.not_fano_witness->value));
    if (c.not_weak_fano_witness)
        d["not_weak_fano_witness"] = py::make_tuple(c.not_weak_fano_witness->curve, fraction(c.not_weak_fano_witness->value));
    return d;
}

py::dict verify_certificate(const std::string& path) {
    auto v = nefcert::verify(nefcert::load_certificate(path));
    py::list steps;
    for (const auto& s : v.steps) {
        py::dict st;
        st["label"] = s.label;
        st["stratum"] = s.stratum;
        st["passed"] = s.passed;
        py::list ps;
        for (const auto& p : s.pairings) ps.append(fraction(p));
        st["pairings"] = ps;
        steps.append(st);
    }
    py::dict d;
    d["passed"] = v.passed;
    d["steps"] = steps;
    d["conclusion"] = v.conclusion;
    return d;
}

}  // namespace

PYBIND11_MODULE(_moricone, m) {
    m.doc() = "Exact Mori and nef cone computations.";

    // Translators are tried newest first, so the base class goes first.
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_TimeoutError);

    m.def("relative_cones", &relative_cones);
    m.def("classify_construction", &classify_construction, py::arg("a"), py::arg("b"), py::arg("components"),
          py::arg("a_in_b") = false, py::arg("b_in_a") = false);
    m.def("minus_one_classes", &minus_one_classes, py::arg("r"));
    m.def("verify_scenario", &verify_scenario, py::arg("r1"), py::arg("r2"), py::arg("budget_seconds") = py::none(),
          py::arg("budget_rays") = py::none());
    m.def("classify_scenario", &classify_scenario, py::arg("r1"), py::arg("r2"));
    m.def("verify_certificate", &verify_certificate, py::arg("path"));
}
