#pragma once

#include "spinor_epr/dirac.hpp"

namespace spinor_epr {

/// External legs of the elastic 2 -> 2 process: incoming (p1, s1), (p2, s2),
/// outgoing (p1_out, s1_out), (p2_out, s2_out). All on-shell for `mass`,
/// total four-momentum conserved. Spin labels are z-axis.
struct ScatteringKinematics {
    FourVector p1, p2, p1_out, p2_out;
    Spin s1 = Spin::Up;
    Spin s2 = Spin::Up;
    Spin s1_out = Spin::Up;
    Spin s2_out = Spin::Up;
    double mass = 1.0;
    double coupling_e = 1.0;
};

/// Throws OffShell / MomentumNotConserved when the leg invariants fail.
void validate(const ScatteringKinematics& k);

/// One-photon-exchange amplitude iM, split into the direct diagram and the
/// exchange diagram; value = direct_term - exchange_term (the relative
/// minus sign from fermion statistics).
struct Amplitude {
    cplx value;
    cplx direct_term;
    cplx exchange_term;
};

/// ubar(u_out) gamma^mu u(u_in), component mu.
std::array<cplx, 4> current(const DiracSpinor& u_out, const DiracSpinor& u_in);

/// Feynman-gauge photon propagator -i g_{mu nu} / q^2 contracted between the
/// two currents. Throws SingularKinematics when |q^2| < 1e-12 on either
/// diagram (forward-scattering pole).
Amplitude tree_amplitude(const ScatteringKinematics& k);

/// Same contraction from explicit external spinors (used to check frame
/// independence: the spinors may live in any frame).
Amplitude tree_amplitude(const DiracSpinor& u1, const DiracSpinor& u2,
                         const DiracSpinor& u1_out, const DiracSpinor& u2_out,
                         double coupling_e);

/// Center-of-mass elastic kinematics: incoming momenta +-pmag z, outgoing
/// rotated by `angle` in the x-z plane (azimuth `phi` about z).
ScatteringKinematics elastic_kinematics(double mass, double coupling_e,
                                        double pmag, double angle,
                                        Spin s1, Spin s2, Spin s1_out,
                                        Spin s2_out, double phi = 0.0);

/// Max over spatial i of | ubar(p') gamma^i u(p)
///   - xi'^dag [ (p+p')^i - i (sigma x (p-p'))^i ] xi |,
/// divided by the largest |ubar gamma^i u|. The bracket is the low-momentum
/// spatial current; the relative gap closes as O((|p|/m)^2).
double gordon_check(const FourVector& p, const FourVector& p_prime,
                    const TwoSpinor& xi, const TwoSpinor& xi_prime,
                    double mass);

} // namespace spinor_epr
