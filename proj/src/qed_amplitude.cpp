#include "spinor_epr/qed_amplitude.hpp"

#include <cmath>

namespace spinor_epr {

namespace {

const cplx I(0.0, 1.0);

/// Minkowski contraction of two complex four-vectors.
cplx minkowski_contract(const std::array<cplx, 4>& a,
                        const std::array<cplx, 4>& b) {
    return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

} // namespace

void validate(const ScatteringKinematics& k) {
    for (const FourVector* p : {&k.p1, &k.p2, &k.p1_out, &k.p2_out})
        if (!p->is_on_shell(k.mass))
            throw Error(ErrorKind::OffShell, "external leg off shell");
    const FourVector total_in = k.p1 + k.p2;
    const FourVector total_out = k.p1_out + k.p2_out;
    if (total_in.max_abs_diff(total_out) > 1e-9)
        throw Error(ErrorKind::MomentumNotConserved,
                    "sum of external momenta differs");
}

std::array<cplx, 4> current(const DiracSpinor& u_out,
                            const DiracSpinor& u_in) {
    return {bilinear(u_out, gamma(0), u_in), bilinear(u_out, gamma(1), u_in),
            bilinear(u_out, gamma(2), u_in), bilinear(u_out, gamma(3), u_in)};
}

Amplitude tree_amplitude(const DiracSpinor& u1, const DiracSpinor& u2,
                         const DiracSpinor& u1_out, const DiracSpinor& u2_out,
                         double coupling_e) {
    const double e2 = coupling_e * coupling_e;

    const FourVector q_direct = u1_out.momentum - u1.momentum;
    const FourVector q_exchange = u1_out.momentum - u2.momentum;
    const double q2_direct = q_direct.minkowski_sq();
    const double q2_exchange = q_exchange.minkowski_sq();
    if (std::abs(q2_direct) < 1e-12)
        throw Error(ErrorKind::SingularKinematics,
                    "direct photon denominator (p1' - p1)^2 vanishes");
    if (std::abs(q2_exchange) < 1e-12)
        throw Error(ErrorKind::SingularKinematics,
                    "exchange photon denominator (p1' - p2)^2 vanishes");

    // (-ie)^2 [ j1^mu (-i g_{mu nu} / q^2) j2^nu ] = i e^2 (j1 . j2)_g / q^2
    const auto j1 = current(u1_out, u1);
    const auto j2 = current(u2_out, u2);
    const auto jx1 = current(u1_out, u2);
    const auto jx2 = current(u2_out, u1);

    Amplitude amp;
    amp.direct_term = I * e2 * minkowski_contract(j1, j2) / q2_direct;
    amp.exchange_term = I * e2 * minkowski_contract(jx1, jx2) / q2_exchange;
    amp.value = amp.direct_term - amp.exchange_term;
    return amp;
}

Amplitude tree_amplitude(const ScatteringKinematics& k) {
    validate(k);
    const DiracSpinor u1 = u_spinor(k.p1, k.s1, k.mass);
    const DiracSpinor u2 = u_spinor(k.p2, k.s2, k.mass);
    const DiracSpinor u1o = u_spinor(k.p1_out, k.s1_out, k.mass);
    const DiracSpinor u2o = u_spinor(k.p2_out, k.s2_out, k.mass);
    return tree_amplitude(u1, u2, u1o, u2o, k.coupling_e);
}

ScatteringKinematics elastic_kinematics(double mass, double coupling_e,
                                        double pmag, double angle, Spin s1,
                                        Spin s2, Spin s1_out, Spin s2_out,
                                        double phi) {
    ScatteringKinematics k;
    k.mass = mass;
    k.coupling_e = coupling_e;
    k.s1 = s1;
    k.s2 = s2;
    k.s1_out = s1_out;
    k.s2_out = s2_out;

    const double out_x = pmag * std::sin(angle) * std::cos(phi);
    const double out_y = pmag * std::sin(angle) * std::sin(phi);
    const double out_z = pmag * std::cos(angle);
    k.p1 = on_shell_momentum(mass, 0.0, 0.0, pmag);
    k.p2 = on_shell_momentum(mass, 0.0, 0.0, -pmag);
    k.p1_out = on_shell_momentum(mass, out_x, out_y, out_z);
    k.p2_out = on_shell_momentum(mass, -out_x, -out_y, -out_z);
    return k;
}

double gordon_check(const FourVector& p, const FourVector& p_prime,
                    const TwoSpinor& xi, const TwoSpinor& xi_prime,
                    double mass) {
    const DiracSpinor u = u_spinor(p, xi, mass);
    const DiracSpinor u_prime = u_spinor(p_prime, xi_prime, mass);

    const std::array<double, 3> sum = {p.x + p_prime.x, p.y + p_prime.y,
                                       p.z + p_prime.z};
    const std::array<double, 3> diff = {p.x - p_prime.x, p.y - p_prime.y,
                                        p.z - p_prime.z};

    double dev = 0.0;
    double scale = 0.0;
    for (int i = 0; i < 3; ++i) {
        const cplx exact = bilinear(u_prime, gamma(i + 1), u);
        scale = std::max(scale, std::abs(exact));

        // (p + p')^i - i (sigma x (p - p'))^i as a 2x2 operator
        Matrix leading = cplx(sum[i]) * identity2();
        for (int j = 0; j < 3; ++j) {
            if (j == i) continue;
            const int l = 3 - i - j;
            const double sign = ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
            leading -= cplx(0.0, sign * diff[l]) * pauli(j);
        }
        const Vector lv = leading * Vector{xi[0], xi[1]};
        const cplx approx =
            std::conj(xi_prime[0]) * lv[0] + std::conj(xi_prime[1]) * lv[1];
        dev = std::max(dev, std::abs(exact - approx));
    }
    if (scale <= 0.0)
        throw Error(ErrorKind::SingularKinematics,
                    "vanishing spatial current in gordon_check");
    return dev / scale;
}

} // namespace spinor_epr
