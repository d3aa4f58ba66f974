#pragma once

#include <array>

#include "spinor_epr/dirac.hpp"

namespace spinor_epr {

/// Two-particle spinor state: 16 complex amplitudes on the
/// DiracSpinor (x) DiracSpinor basis induced by (p1, p2), index a*4 + b.
/// Not normalized; <Psi|Psi> carries the 2E-per-particle factors.
struct TwoParticleState {
    std::array<cplx, 16> amplitudes{};
    FourVector p1;
    FourVector p2;
    double mass = 1.0;

    Vector as_vector() const {
        Vector v(16);
        for (std::size_t i = 0; i < 16; ++i) v[i] = amplitudes[i];
        return v;
    }

    double norm_sq() const {
        double s = 0.0;
        for (const cplx& a : amplitudes) s += std::norm(a);
        return s;
    }
};

/// u1 (x) u2 as a TwoParticleState.
TwoParticleState tensor_state(const DiracSpinor& u1, const DiracSpinor& u2);

} // namespace spinor_epr
