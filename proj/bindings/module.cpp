#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "breakup/amplitudes.hpp"
#include "breakup/dynamics.hpp"
#include "breakup/entanglement.hpp"
#include "breakup/faddeeva.hpp"
#include "breakup/oracle.hpp"
#include "breakup/params.hpp"
#include "breakup/wavepackets.hpp"

namespace py = pybind11;
using namespace breakup;

PYBIND11_MODULE(_core, m) {
    m.doc() = "two-body breakup wave-packet widths and entanglement";

    py::enum_<Mode>(m, "Mode")
        .value("Ionization", Mode::Ionization)
        .value("Dissociation", Mode::Dissociation);

    py::class_<SystemParams>(m, "SystemParams")
        .def(py::init([](double m1, double m2, double omega, double e0, double gamma,
                         double dr_cm0, Mode mode) {
                 return SystemParams{m1, m2, omega, e0, gamma, dr_cm0, mode};
             }),
             py::arg("m1"), py::arg("m2"), py::arg("omega"), py::arg("e0"),
             py::arg("gamma"), py::arg("dr_cm0"), py::arg("mode") = Mode::Ionization)
        .def_readwrite("m1", &SystemParams::m1)
        .def_readwrite("m2", &SystemParams::m2)
        .def_readwrite("omega", &SystemParams::omega)
        .def_readwrite("e0", &SystemParams::e0)
        .def_readwrite("gamma", &SystemParams::gamma)
        .def_readwrite("dr_cm0", &SystemParams::dr_cm0)
        .def_readwrite("mode", &SystemParams::mode);

    py::class_<DerivedParams>(m, "DerivedParams")
        .def_readonly("total_mass", &DerivedParams::total_mass)
        .def_readonly("reduced_mass", &DerivedParams::reduced_mass)
        .def_readonly("e_star", &DerivedParams::e_star)
        .def_readonly("v", &DerivedParams::v)
        .def_readonly("k_star", &DerivedParams::k_star)
        .def_readonly("dr_rel0", &DerivedParams::dr_rel0)
        .def_readonly("t_spr_cm", &DerivedParams::t_spr_cm)
        .def_readonly("t_spr_rel", &DerivedParams::t_spr_rel)
        .def_readonly("eta0", &DerivedParams::eta0)
        .def_readonly("eta_star", &DerivedParams::eta_star)
        .def_readonly("eta_inf", &DerivedParams::eta_inf);

    m.def("derive", &derive, py::arg("params"));
    m.def("golden_rule_rate", &golden_rule_rate, py::arg("dipole_coupling"),
          py::arg("probability_rate") = false);

    m.def("ground_amplitude", &ground_amplitude, py::arg("t"), py::arg("params"));
    py::class_<AmplitudeState>(m, "AmplitudeState")
        .def_readonly("t", &AmplitudeState::t)
        .def_readonly("c0", &AmplitudeState::c0)
        .def("ce", [](const AmplitudeState& s, double energy) { return s.ce(energy); },
             py::arg("energy"));
    m.def("amplitude_state", &amplitude_state, py::arg("t"), py::arg("coupling"),
          py::arg("params"));
    m.def("continuum_amplitude", &continuum_amplitude, py::arg("energy"), py::arg("t"),
          py::arg("coupling"), py::arg("params"));
    m.def("continuum_norm", &continuum_norm, py::arg("t"), py::arg("coupling"),
          py::arg("params"));
    m.def("radial_high_energy", &radial_high_energy, py::arg("r"), py::arg("energy"),
          py::arg("reduced_mass"), py::arg("include_coulomb_phase") = false);

    m.def("faddeeva", &faddeeva, py::arg("z"),
          "Faddeeva function w(z) = exp(-z^2) erfc(-iz)");

    py::class_<CmPacket>(m, "CmPacket")
        .def(py::init([](double dr0, double mass) {
                 return CmPacket{dr0, mass};
             }),
             py::arg("dr0"), py::arg("mass"))
        .def_readwrite("dr0", &CmPacket::dr0)
        .def_readwrite("mass", &CmPacket::mass);

    m.def("cm_width", &cm_width, py::arg("t"), py::arg("packet"));
    m.def("cm_density", &cm_density, py::arg("r_cm"), py::arg("t"), py::arg("packet"));
    m.def(
        "rel_density_sharp",
        [](double r, double theta, double t, const DerivedParams& d) {
            return rel_density_sharp(r, theta, t, d);
        },
        py::arg("r"), py::arg("theta"), py::arg("t"), py::arg("derived"));
    m.def("rel_profile", &rel_profile, py::arg("rho"), py::arg("zeta"));
    m.def("profile_zeta", &profile_zeta, py::arg("t"), py::arg("derived"));
    m.def("rel_density", &rel_density, py::arg("r"), py::arg("theta"), py::arg("t"),
          py::arg("derived"));
    m.def("rel_width", &rel_width, py::arg("t"), py::arg("derived"));
    m.def(
        "profile_series",
        [](double zeta, const std::vector<double>& rho) {
            return sample_profile(zeta, rho).density;
        },
        py::arg("zeta"), py::arg("rho"));

    py::enum_<Regime>(m, "Regime")
        .value("Region1", Regime::Region1)
        .value("Region2", Regime::Region2)
        .value("Region3", Regime::Region3)
        .value("Crossover", Regime::Crossover);

    py::class_<WidthReport>(m, "WidthReport")
        .def_readonly("eta", &WidthReport::eta)
        .def_readonly("s_e", &WidthReport::s_e)
        .def_readonly("s_i", &WidthReport::s_i)
        .def_readonly("c_e", &WidthReport::c_e)
        .def_readonly("c_i", &WidthReport::c_i)
        .def_readonly("r_e", &WidthReport::r_e)
        .def_readonly("r_i", &WidthReport::r_i)
        .def_readonly("regime", &WidthReport::regime);

    m.def("eta_ratio", &eta_ratio, py::arg("dr_cm"), py::arg("dr_rel"));
    m.def("single_widths", &single_widths, py::arg("eta"), py::arg("m1"), py::arg("m2"));
    m.def("coincidence_widths", &coincidence_widths, py::arg("eta"), py::arg("m1"),
          py::arg("m2"));
    m.def("entanglement_r", &entanglement_r, py::arg("eta"), py::arg("m1"), py::arg("m2"));
    m.def("classify_regime", &classify_regime, py::arg("eta"), py::arg("m1"), py::arg("m2"),
          py::arg("factor") = 10.0);
    m.def("width_report", &width_report, py::arg("eta"), py::arg("m1"), py::arg("m2"));

    py::class_<PacketWidths>(m, "PacketWidths")
        .def_readonly("t", &PacketWidths::t)
        .def_readonly("dr_cm", &PacketWidths::dr_cm)
        .def_readonly("dr_rel", &PacketWidths::dr_rel)
        .def_readonly("eta", &PacketWidths::eta);
    m.def("packet_widths", &packet_widths, py::arg("t"), py::arg("params"));

    py::class_<EvolutionTrace>(m, "EvolutionTrace")
        .def_readonly("times", &EvolutionTrace::times)
        .def_readonly("dr_cm", &EvolutionTrace::dr_cm)
        .def_readonly("dr_rel", &EvolutionTrace::dr_rel)
        .def_readonly("eta", &EvolutionTrace::eta)
        .def_readonly("r_e", &EvolutionTrace::r_e)
        .def_readonly("r_i", &EvolutionTrace::r_i);

    m.def("evolve", &evolve, py::arg("params"), py::arg("t_grid"));
    m.def("eta_asymptote", &eta_asymptote, py::arg("params"));
    m.def("dissociation_preset", &dissociation_preset, py::arg("M1"), py::arg("M2"),
          py::arg("omega"), py::arg("gamma_d"), py::arg("dr_cm0"));
    m.def(
        "default_time_grid",
        [](const DerivedParams& d, int n) { return default_time_grid(d, n); },
        py::arg("derived"), py::arg("n") = 400);

    py::enum_<GridModel>(m, "GridModel")
        .value("GaussianGaussian", GridModel::GaussianGaussian)
        .value("GaussianExponential", GridModel::GaussianExponential);

    py::class_<GridWidths>(m, "GridWidths")
        .def_readonly("s_e", &GridWidths::s_e)
        .def_readonly("s_i", &GridWidths::s_i)
        .def_readonly("c_e", &GridWidths::c_e)
        .def_readonly("c_i", &GridWidths::c_i);

    m.def(
        "grid_widths_oracle",
        [](GridModel model, double eta, double m1, double m2, double gamma_t,
           int resolution, double conditional_at_xi, double conditional_at_xe) {
            const JointDensityGrid g = build_grid(model, eta, m1, m2, gamma_t, resolution);
            return grid_widths(g, conditional_at_xi, conditional_at_xe);
        },
        py::arg("model"), py::arg("eta"), py::arg("m1"), py::arg("m2"),
        py::arg("gamma_t") = 0.0, py::arg("resolution") = 512,
        py::arg("conditional_at_xi") = 0.0, py::arg("conditional_at_xe") = 0.0,
        "Brute-force marginal/conditional widths from an explicit joint-density grid");
    m.def("recommended_resolution", &recommended_resolution, py::arg("model"),
          py::arg("eta"), py::arg("m1"), py::arg("m2"), py::arg("gamma_t") = 0.0);
    m.def("quad_rel_packet", &quad_rel_packet, py::arg("rho_grid"), py::arg("zeta"),
          py::arg("params"), py::arg("quadratic_dispersion") = true,
          "Direct quadrature of the packet energy integral (oracle for rel_profile)");

    m.attr("__version__") = "0.1.0";
}
