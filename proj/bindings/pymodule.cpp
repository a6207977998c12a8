#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lieharm/checks.hpp"

namespace py = pybind11;
using namespace lieharm;

namespace {

py::dict report_dict(const CheckReport& r) {
    py::dict d;
    d["name"] = r.name;
    d["manifold"] = r.manifold;
    d["label"] = r.label;
    d["samples"] = r.samples;
    d["max_residual"] = r.max_residual;
    d["tolerance"] = r.tolerance;
    d["pass"] = r.pass;
    d["seed"] = r.seed;
    py::dict cfg;
    for (const auto& [k, v] : r.config) cfg[py::str(k)] = v;
    d["config"] = cfg;
    if (r.wall_ms) d["wall_ms"] = *r.wall_ms;
    return d;
}

py::list report_list(const std::vector<CheckReport>& v) {
    py::list out;
    for (const auto& r : v) out.append(report_dict(r));
    return out;
}

}  // namespace

PYBIND11_MODULE(_lieharm, m) {
    m.doc() = "harmonic realizations of SL(2,C), SU(2), SU(1,1) and E2";

    py::class_<Multiplicity>(m, "Multiplicity")
        .def_static("finite", &Multiplicity::finite)
        .def_static("infinite", &Multiplicity::infinite)
        .def_property_readonly("is_finite", &Multiplicity::is_finite)
        .def_property_readonly("q", [](const Multiplicity& mm) -> py::object {
            return mm.is_finite() ? py::cast(mm.q()) : py::none();
        })
        .def("__repr__", &Multiplicity::str);

    py::class_<Covering>(m, "Covering")
        .def_readonly("plus", &Covering::plus)
        .def_readonly("minus", &Covering::minus)
        .def("__repr__", &Covering::str);

    py::class_<ComplexAngles>(m, "ComplexAngles")
        .def(py::init([](double t0, double t1, double pp0, double pp1, double pm0,
                         double pm1) {
                 return ComplexAngles{t0, t1, pp0, pp1, pm0, pm1};
             }),
             py::arg("theta0"), py::arg("theta1") = 0.0, py::arg("phiP0") = 0.0,
             py::arg("phiP1") = 0.0, py::arg("phiM0") = 0.0, py::arg("phiM1") = 0.0)
        .def_readwrite("theta0", &ComplexAngles::theta0)
        .def_readwrite("theta1", &ComplexAngles::theta1)
        .def_readwrite("phiP0", &ComplexAngles::phiP0)
        .def_readwrite("phiP1", &ComplexAngles::phiP1)
        .def_readwrite("phiM0", &ComplexAngles::phiM0)
        .def_readwrite("phiM1", &ComplexAngles::phiM1);

    py::class_<S3Point>(m, "S3Point")
        .def(py::init([](double th, double pp, double pm) {
                 return S3Point{th, pp, pm};
             }),
             py::arg("theta"), py::arg("phi_plus") = 0.0, py::arg("phi_minus") = 0.0)
        .def_readwrite("theta", &S3Point::theta)
        .def_readwrite("phi_plus", &S3Point::phiPlus)
        .def_readwrite("phi_minus", &S3Point::phiMinus);

    py::class_<H22Point>(m, "H22Point")
        .def(py::init([](double rho, double pp, double pm) {
                 return H22Point{rho, pp, pm, Covering{}};
             }),
             py::arg("rho"), py::arg("phi_plus") = 0.0, py::arg("phi_minus") = 0.0)
        .def_readwrite("rho", &H22Point::rho)
        .def_readwrite("phi_plus", &H22Point::phiPlus)
        .def_readwrite("phi_minus", &H22Point::phiMinus);

    py::class_<ConePoint>(m, "ConePoint")
        .def(py::init([](double r, double pp, double pm) {
                 return ConePoint{r, pp, pm, Covering{}};
             }),
             py::arg("r"), py::arg("phi_plus") = 0.0, py::arg("phi_minus") = 0.0)
        .def_readwrite("r", &ConePoint::r)
        .def_readwrite("phi_plus", &ConePoint::phiPlus)
        .def_readwrite("phi_minus", &ConePoint::phiMinus);

    py::class_<CompactConePoint>(m, "CompactConePoint")
        .def(py::init([](double psi, double pp, double pm) {
                 return CompactConePoint{psi, pp, pm, Covering{}};
             }),
             py::arg("psi"), py::arg("phi_plus") = 0.0, py::arg("phi_minus") = 0.0)
        .def_readwrite("psi", &CompactConePoint::psi)
        .def_readwrite("phi_plus", &CompactConePoint::phiPlus)
        .def_readwrite("phi_minus", &CompactConePoint::phiMinus);

    m.def("embed_s3c", &embed_s3c);
    m.def("embed_s3", &embed_s3);
    m.def("embed_h22", &embed_h22);
    m.def("embed_cone", &embed_cone);
    m.def("h22_chart_inverse", [](cplx zp, cplx zm) {
        auto r = h22_chart_inverse(zp, zm);
        return py::make_tuple(r.r, r.uPlus, r.uMinus);
    });
    m.def("in_removed_set", [](py::object p) {
        if (py::isinstance<ComplexAngles>(p)) return in_removed_set(p.cast<ComplexAngles>());
        if (py::isinstance<S3Point>(p)) return in_removed_set(p.cast<S3Point>());
        if (py::isinstance<H22Point>(p)) return in_removed_set(p.cast<H22Point>());
        if (py::isinstance<ConePoint>(p)) return in_removed_set(p.cast<ConePoint>());
        return in_removed_set(p.cast<CompactConePoint>());
    });

    py::class_<SL2CLabel>(m, "SL2CLabel")
        .def(py::init<double, cplx>(), py::arg("ell0"), py::arg("ell1"))
        .def_readonly("ell0", &SL2CLabel::ell0)
        .def_readonly("ell1", &SL2CLabel::ell1)
        .def("finite_dimensional", &SL2CLabel::finite_dimensional)
        .def("__repr__", &SL2CLabel::str);
    py::class_<SU2Label>(m, "SU2Label")
        .def(py::init<double>(), py::arg("ell"))
        .def_readonly("ell", &SU2Label::ell)
        .def("__repr__", &SU2Label::str);
    py::enum_<DiscSign>(m, "DiscSign").value("plus", DiscSign::plus).value("minus",
                                                                           DiscSign::minus);
    py::class_<SU11DiscLabel>(m, "SU11DiscLabel")
        .def(py::init<double, DiscSign, int>(), py::arg("s"), py::arg("sign"), py::arg("n"))
        .def_readonly("s", &SU11DiscLabel::s)
        .def_readonly("n", &SU11DiscLabel::n)
        .def("__repr__", &SU11DiscLabel::str);
    py::class_<SU11ContLabel>(m, "SU11ContLabel")
        .def(py::init<cplx, cplx, int>(), py::arg("lam"), py::arg("mu"), py::arg("n"))
        .def_readonly("lam", &SU11ContLabel::lambda)
        .def_readonly("mu", &SU11ContLabel::mu)
        .def_readonly("n", &SU11ContLabel::n)
        .def("__repr__", &SU11ContLabel::str);
    py::class_<E2Label>(m, "E2Label")
        .def(py::init<double, double, int>(), py::arg("p"), py::arg("s"), py::arg("n"))
        .def_readonly("p", &E2Label::p)
        .def_readonly("s", &E2Label::s)
        .def_readonly("n", &E2Label::n)
        .def("__repr__", &E2Label::str);

    auto to_label = [](py::object l) -> RepLabel {
        if (py::isinstance<SL2CLabel>(l)) return l.cast<SL2CLabel>();
        if (py::isinstance<SU2Label>(l)) return l.cast<SU2Label>();
        if (py::isinstance<SU11DiscLabel>(l)) return l.cast<SU11DiscLabel>();
        if (py::isinstance<SU11ContLabel>(l)) return l.cast<SU11ContLabel>();
        return l.cast<E2Label>();
    };

    m.def("casimir_values", [to_label](py::object l) {
        py::dict d;
        for (const auto& [name, v] : casimir_values(to_label(l))) d[py::str(name)] = v;
        return d;
    });
    m.def("unitary_class",
          [to_label](py::object l) { return unitary_class_name(unitary_class(to_label(l))); });
    m.def("covering_required",
          [to_label](py::object l) { return covering_required(to_label(l)); });

    m.def("a_coeff", &a_coeff, py::arg("label"), py::arg("s"));
    m.def("k_range", &k_range, py::arg("ell0"), py::arg("s"), py::arg("m"));
    m.def("c_s_coeff", &c_s_coeff, py::arg("label"), py::arg("s"));
    m.def("psi_sl2c", &psi_sl2c, py::arg("label"), py::arg("s"), py::arg("m"),
          py::arg("point"));
    m.def("phi_su2", &phi_su2, py::arg("label"), py::arg("m"), py::arg("point"));
    m.def("psi_su11_disc", &psi_su11_disc, py::arg("label"), py::arg("point"));
    m.def("psi_su11_cont", &psi_su11_cont, py::arg("label"), py::arg("point"));
    m.def("lambda_e2",
          py::overload_cast<const E2Label&, const ConePoint&>(&lambda_e2), py::arg("label"),
          py::arg("point"));
    m.def("lambda_e2_compact",
          py::overload_cast<const E2Label&, const CompactConePoint&>(&lambda_e2),
          py::arg("label"), py::arg("point"));

    m.def("ladder_expected", [to_label](py::object l, const std::string& gen, double s,
                                        double mm, int n) {
        py::list out;
        for (const auto& t : ladder_expected(to_label(l), gen, Weight{s, mm, n})) {
            py::dict d;
            d["coeff"] = t.coeff;
            d["s"] = t.target.s;
            d["m"] = t.target.m;
            d["n"] = t.target.n;
            out.append(d);
        }
        return out;
    }, py::arg("label"), py::arg("generator"), py::arg("s") = 0.0, py::arg("m") = 0.0,
       py::arg("n") = 0);

    m.def("i_ab_closed", &i_ab_closed, py::arg("a"), py::arg("b"));
    m.def("i_ab_numeric", &i_ab_numeric, py::arg("a"), py::arg("b"), py::arg("levels") = 9);
    m.def("haar_e2_density", &haar_e2_density);

    m.def("harmonic_residual", [to_label](py::object l, double s, double mm, int n,
                                          py::object point) {
        auto fam = family_member(to_label(l), Weight{s, mm, n});
        Coords x = py::isinstance<ComplexAngles>(point)
                       ? coords_of(point.cast<ComplexAngles>())
                   : py::isinstance<S3Point>(point) ? coords_of(point.cast<S3Point>())
                   : py::isinstance<H22Point>(point) ? coords_of(point.cast<H22Point>())
                                                     : coords_of(point.cast<ConePoint>());
        return harmonic_residual(*fam, x, DerivBackend::analytic);
    }, py::arg("label"), py::arg("s"), py::arg("m"), py::arg("n"), py::arg("point"));

    m.def("spinor_action_table", [](unsigned long long seed, int npoints) {
        py::list out;
        for (const auto& c : spinor_action_table(seed, npoints)) {
            py::dict d;
            d["name"] = c.name;
            d["max_residual"] = c.max_residual;
            out.append(d);
        }
        return out;
    }, py::arg("seed") = 42, py::arg("npoints") = 50);

    py::class_<CheckConfig>(m, "CheckConfig")
        .def(py::init<>())
        .def_readwrite("seed", &CheckConfig::seed)
        .def_readwrite("n_functions", &CheckConfig::n_functions)
        .def_readwrite("n_points", &CheckConfig::n_points)
        .def_readwrite("threads", &CheckConfig::threads);

    m.def("run_suite", [](const std::string& suite, const CheckConfig& cfg) {
        return report_list(run_suite(suite, cfg));
    }, py::arg("suite"), py::arg("config") = CheckConfig{});
    m.def("suite_names", &suite_names);

    m.def("inner_s3_members", [](py::object la, double ma, py::object lb, double mb) {
        auto fa = make_su2_phi(la.cast<SU2Label>(), ma);
        auto fb = make_su2_phi(lb.cast<SU2Label>(), mb);
        QuadratureSpec spec;
        return inner_s3(
            [&](const S3Point& p) { return fa->value(coords_of(p)); },
            [&](const S3Point& p) { return fb->value(coords_of(p)); }, spec);
    }, py::arg("label_f"), py::arg("m_f"), py::arg("label_g"), py::arg("m_g"));

    m.def("compactify", &compactify);
}
