#include "spinor_epr/state.hpp"

namespace spinor_epr {

TwoParticleState tensor_state(const DiracSpinor& u1, const DiracSpinor& u2) {
    TwoParticleState psi;
    psi.p1 = u1.momentum;
    psi.p2 = u2.momentum;
    psi.mass = u1.mass;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            psi.amplitudes[a * 4 + b] = u1[a] * u2[b];
    return psi;
}

} // namespace spinor_epr
