#pragma once

#include "spinor_epr/qed_reduction.hpp"
#include "spinor_epr/state.hpp"

namespace spinor_epr {

/// J = -e^2/(16 pi m^2 r^3) with e^2 = 4 pi alpha, i.e. J = -alpha/(4 m^2 r^3).
/// Negative for all physical inputs. In conventional units the formula reads
/// J = -e^2 hbar^2 / (16 pi m^2 c^2 r^3).
struct CouplingConstant {
    double j = 0.0;
    double r = 1.0;
    double m = 1.0;
    double alpha = 1.0;
};

CouplingConstant coupling_J(double r, double m, double alpha);

/// Maximal-entanglement time pi/(8 |J|): the point where 2Jt = pi/4.
/// (The quarter-period pi/(4|J|) instead gives full spin transfer.)
double maximal_entanglement_time(double j_coupling);

/// sum_{e1 e2} c_{e1 e2} u(p1, e1) (x) u(p2, e2) as a 16-vector.
/// Spin amplitude index: e1*2 + e2 with up = 0.
TwoParticleState lift_spin_to_spinor(const std::array<cplx, 4>& c,
                                     const FourVector& p1,
                                     const FourVector& p2, double mass);

/// Rest-frame product state with definite z spins.
TwoParticleState rest_product_state(Spin s1, Spin s2, double mass);

/// Time evolution of a rest-frame definite-spin state under
/// effective_spin_potential(J), with the e^{iJt} phase stripped so the
/// (|du>, |ud>) amplitudes come out as (cos 2Jt, -i sin 2Jt).
TwoParticleState evolve(const TwoParticleState& initial, double j_coupling,
                        double t);

/// (1/sqrt 2)[u(0, down) (x) u(0, up) - i u(0, up) (x) u(0, down)]:
/// the maximally entangled rest-frame state evolve reaches at 2Jt = pi/4.
TwoParticleState epr_state(double mass);

/// Spin amplitudes c_{e1 e2} of a state relative to the momentum-induced
/// spinor basis {u(p1, e1) (x) u(p2, e2)} (Gram = 2E per particle).
std::array<cplx, 4> project_spin_amplitudes(const TwoParticleState& psi);

} // namespace spinor_epr
