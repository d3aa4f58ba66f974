// Python bindings: the main pipeline operations with python-native
// inputs/outputs (dicts, lists, complex numbers).

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "spinor_epr/entanglement.hpp"
#include "spinor_epr/qed_amplitude.hpp"
#include "spinor_epr/qed_reduction.hpp"
#include "spinor_epr/spin_dynamics.hpp"

namespace py = pybind11;
using namespace spinor_epr;

namespace {

constexpr double kPi = 3.14159265358979323846;

Axis3 named_axis(const std::string& name) {
    if (name == "x") return {1.0, 0.0, 0.0};
    if (name == "y") return {0.0, 1.0, 0.0};
    if (name == "z") return {0.0, 0.0, 1.0};
    throw Error(ErrorKind::NonUnitAxis, "unknown axis name " + name);
}

Spin parse_spin(char c) { return c == 'u' ? Spin::Up : Spin::Down; }

py::dict report_to_dict(const EntanglementReport& rep) {
    py::dict d;
    d["schmidt_spectrum"] = rep.schmidt_spectrum;
    d["spin_schmidt_spectrum"] = rep.spin_schmidt_spectrum;
    d["entropy_bits"] = rep.entropy_bits;
    d["spin_entropy_bits"] = rep.spin_entropy_bits;
    d["concurrence"] = rep.concurrence;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dirac-spinor entanglement toolkit: spin-spin coupling from "
              "one-photon exchange, EPR generation, and Lorentz invariance "
              "of the degree of entanglement";

    py::register_exception<Error>(m, "PhysicsError");

    m.def(
        "coupling_j",
        [](double r, double mass, double alpha) {
            return coupling_J(r, mass, alpha).j;
        },
        py::arg("r"), py::arg("mass") = 1.0, py::arg("alpha") = 1.0 / 137.035999,
        "Spin-spin coupling J = -alpha / (4 m^2 r^3)");

    m.def("maximal_entanglement_time", &maximal_entanglement_time,
          py::arg("j"), "pi / (8 |J|), where 2Jt = pi/4");

    m.def(
        "evolve_spin_amplitudes",
        [](double jt, double mass) {
            const double j = -1.0; // jt fixes the dynamics; J only sets the clock
            const TwoParticleState initial =
                rest_product_state(Spin::Down, Spin::Up, mass);
            const TwoParticleState evolved =
                evolve(initial, j, jt / (2.0 * j));
            const auto c = project_spin_amplitudes(evolved);
            return std::vector<cplx>(c.begin(), c.end());
        },
        py::arg("jt"), py::arg("mass") = 1.0,
        "Spin amplitudes (uu, ud, du, dd) of the evolved |du> state at a "
        "given 2Jt");

    m.def(
        "epr_spin_amplitudes",
        [](double mass) {
            const auto c = project_spin_amplitudes(epr_state(mass));
            return std::vector<cplx>(c.begin(), c.end());
        },
        py::arg("mass") = 1.0,
        "Spin amplitudes of (1/sqrt2)(|du> - i |ud>)");

    m.def(
        "epr_report",
        [](double mass) { return report_to_dict(analyze(epr_state(mass))); },
        py::arg("mass") = 1.0, "Entanglement report of the EPR state");

    m.def(
        "boost_epr",
        [](const std::string& axis, double rapidity, double mass) {
            const LorentzTransform t = boost(named_axis(axis), rapidity);
            const TwoParticleState psi =
                transform_two_particle(t, epr_state(mass));
            py::dict d = report_to_dict(analyze(psi));
            d["p1"] = std::vector<double>{psi.p1.t, psi.p1.x, psi.p1.y,
                                          psi.p1.z};
            d["p2"] = std::vector<double>{psi.p2.t, psi.p2.x, psi.p2.y,
                                          psi.p2.z};
            return d;
        },
        py::arg("axis"), py::arg("rapidity"), py::arg("mass") = 1.0,
        "Boost the EPR state and report its entanglement measures");

    m.def(
        "invariance_scan",
        [](const std::vector<std::string>& axes,
           const std::vector<double>& rapidities,
           const std::vector<double>& rotations, double mass) {
            const auto rows = invariance_scan(
                epr_state(mass), default_scan_grid(axes, rapidities, rotations));
            py::list out;
            for (const ScanRow& row : rows) {
                py::dict d;
                d["kind"] = row.kind;
                d["axis"] = row.axis;
                d["parameter"] = row.parameter;
                d["entropy_bits"] = row.entropy_bits;
                d["spectrum_deviation"] = row.spectrum_deviation;
                d["descriptor"] = row.descriptor;
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("axes") = std::vector<std::string>{"x", "y", "z"},
        py::arg("rapidities") = std::vector<double>{0.5, 1.0, 2.0, 3.0},
        py::arg("rotations") = std::vector<double>{kPi / 4.0, kPi / 2.0},
        py::arg("mass") = 1.0,
        "Entanglement measures of the boosted/rotated EPR state over a grid");

    m.def(
        "tree_amplitude",
        [](double pmag, double angle, const std::string& spins_in,
           const std::string& spins_out, double alpha, double mass) {
            const double e = std::sqrt(4.0 * kPi * alpha);
            const Amplitude a = tree_amplitude(elastic_kinematics(
                mass, e, pmag, angle, parse_spin(spins_in.at(0)),
                parse_spin(spins_in.at(1)), parse_spin(spins_out.at(0)),
                parse_spin(spins_out.at(1))));
            py::dict d;
            d["direct"] = a.direct_term;
            d["exchange"] = a.exchange_term;
            d["total"] = a.value;
            return d;
        },
        py::arg("pmag"), py::arg("angle"), py::arg("spins_in") = "ud",
        py::arg("spins_out") = "ud", py::arg("alpha") = 1.0 / 137.035999,
        py::arg("mass") = 1.0,
        "One-photon-exchange amplitude on center-of-mass elastic kinematics");

    m.def(
        "extraction_deviation",
        [](double delta, double mass, double alpha) {
            const double e = std::sqrt(4.0 * kPi * alpha);
            const MomentumKernel extracted =
                extract_spin_potential(delta, {0.0, 0.0, 1.0}, mass, e);
            const Matrix expected =
                dipole_momentum_kernel(extracted.q, mass, e);
            const double scale = expected.max_abs();
            double worst = 0.0;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    worst = std::max(worst,
                                     std::abs(extracted.matrix(i, j) -
                                              expected(i, j)) /
                                         scale);
            return worst;
        },
        py::arg("delta"), py::arg("mass") = 1.0,
        py::arg("alpha") = 1.0 / 137.035999,
        "Worst relative entry deviation of the Born-extracted spin potential "
        "from the dipole-dipole kernel");

    m.def(
        "gordon_deviation",
        [](double delta, double mass) {
            const TwoSpinor up{cplx(1.0), cplx(0.0)};
            const TwoSpinor mixed{cplx(std::sqrt(0.5)),
                                  cplx(0.0, std::sqrt(0.5))};
            const FourVector p =
                on_shell_momentum(mass, delta * mass, 0.0, 0.2 * delta * mass);
            const FourVector pp = on_shell_momentum(mass, -0.3 * delta * mass,
                                                    delta * mass, 0.0);
            return gordon_check(p, pp, up, mixed, mass);
        },
        py::arg("delta"), py::arg("mass") = 1.0,
        "Relative gap of the low-momentum spatial current identity");
}
