#include "spinor_epr/spin_dynamics.hpp"

#include <cmath>

namespace spinor_epr {

namespace {

const cplx I(0.0, 1.0);

bool at_rest(const FourVector& p, double mass) {
    return std::abs(p.t - mass) <= 1e-12 && p.spatial_norm() <= 1e-12;
}

} // namespace

CouplingConstant coupling_J(double r, double m, double alpha) {
    if (r <= 0.0 || m <= 0.0 || alpha <= 0.0)
        throw Error(ErrorKind::NonPositiveInput,
                    "r, m, alpha must all be positive");
    CouplingConstant c;
    c.r = r;
    c.m = m;
    c.alpha = alpha;
    c.j = -alpha / (4.0 * m * m * r * r * r);
    return c;
}

double maximal_entanglement_time(double j_coupling) {
    if (j_coupling == 0.0)
        throw Error(ErrorKind::NonPositiveInput, "J must be nonzero");
    return 3.14159265358979323846 / (8.0 * std::abs(j_coupling));
}

TwoParticleState lift_spin_to_spinor(const std::array<cplx, 4>& c,
                                     const FourVector& p1,
                                     const FourVector& p2, double mass) {
    const DiracSpinor basis1[2] = {u_spinor(p1, Spin::Up, mass),
                                   u_spinor(p1, Spin::Down, mass)};
    const DiracSpinor basis2[2] = {u_spinor(p2, Spin::Up, mass),
                                   u_spinor(p2, Spin::Down, mass)};
    TwoParticleState psi;
    psi.p1 = p1;
    psi.p2 = p2;
    psi.mass = mass;
    for (int e1 = 0; e1 < 2; ++e1)
        for (int e2 = 0; e2 < 2; ++e2) {
            const cplx coeff = c[e1 * 2 + e2];
            if (coeff == cplx(0.0)) continue;
            for (std::size_t a = 0; a < 4; ++a)
                for (std::size_t b = 0; b < 4; ++b)
                    psi.amplitudes[a * 4 + b] +=
                        coeff * basis1[e1][a] * basis2[e2][b];
        }
    return psi;
}

TwoParticleState rest_product_state(Spin s1, Spin s2, double mass) {
    const FourVector rest{mass, 0.0, 0.0, 0.0};
    std::array<cplx, 4> c{};
    c[(s1 == Spin::Up ? 0 : 1) * 2 + (s2 == Spin::Up ? 0 : 1)] = 1.0;
    return lift_spin_to_spinor(c, rest, rest, mass);
}

std::array<cplx, 4> project_spin_amplitudes(const TwoParticleState& psi) {
    const DiracSpinor basis1[2] = {u_spinor(psi.p1, Spin::Up, psi.mass),
                                   u_spinor(psi.p1, Spin::Down, psi.mass)};
    const DiracSpinor basis2[2] = {u_spinor(psi.p2, Spin::Up, psi.mass),
                                   u_spinor(psi.p2, Spin::Down, psi.mass)};
    const double gram1 = 2.0 * psi.p1.t;
    const double gram2 = 2.0 * psi.p2.t;

    std::array<cplx, 4> c{};
    for (int e1 = 0; e1 < 2; ++e1)
        for (int e2 = 0; e2 < 2; ++e2) {
            cplx overlap = 0.0;
            for (std::size_t a = 0; a < 4; ++a)
                for (std::size_t b = 0; b < 4; ++b)
                    overlap += std::conj(basis1[e1][a] * basis2[e2][b]) *
                               psi.amplitudes[a * 4 + b];
            c[e1 * 2 + e2] = overlap / (gram1 * gram2);
        }
    return c;
}

TwoParticleState evolve(const TwoParticleState& initial, double j_coupling,
                        double t) {
    if (!at_rest(initial.p1, initial.mass) ||
        !at_rest(initial.p2, initial.mass))
        throw Error(ErrorKind::NotAtRest,
                    "evolve requires both momenta at (m, 0)");

    const std::array<cplx, 4> c0 = project_spin_amplitudes(initial);
    int definite = -1;
    for (int k = 0; k < 4; ++k) {
        if (std::abs(c0[k]) < 1e-10) continue;
        if (definite >= 0)
            throw Error(ErrorKind::IndefiniteInitialSpin,
                        "initial state must be a single z-basis spin pair");
        definite = k;
    }
    if (definite < 0)
        throw Error(ErrorKind::IndefiniteInitialSpin, "zero spin amplitudes");

    const Matrix u =
        matrix_exp(-I * cplx(t) * effective_spin_potential(j_coupling));
    const cplx strip = std::exp(-I * cplx(j_coupling * t)); // 1/e^{iJt}

    std::array<cplx, 4> c{};
    for (int row = 0; row < 4; ++row)
        for (int col = 0; col < 4; ++col)
            c[row] += u(row, col) * c0[col] * strip;
    return lift_spin_to_spinor(c, initial.p1, initial.p2, initial.mass);
}

TwoParticleState epr_state(double mass) {
    const FourVector rest{mass, 0.0, 0.0, 0.0};
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    // (1/sqrt2)(|du> - i |ud>) on indices (d,u) = 2, (u,d) = 1
    std::array<cplx, 4> c{};
    c[2] = inv_sqrt2;
    c[1] = -I * inv_sqrt2;
    return lift_spin_to_spinor(c, rest, rest, mass);
}

} // namespace spinor_epr
