#include "spinor_epr/qed_reduction.hpp"

#include <cmath>

namespace spinor_epr {

namespace {

const cplx I(0.0, 1.0);
constexpr double four_pi = 4.0 * 3.14159265358979323846;

double vec_norm(const Vec3& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

/// sum_a v_a sigma_k^a on the two-spin space
Matrix spin_dot(int particle, const Vec3& v) {
    Matrix m(4, 4);
    for (int a = 0; a < 3; ++a)
        if (v[a] != 0.0) m += cplx(v[a]) * spin_operator(particle, a);
    return m;
}

Matrix sigma1_dot_sigma2() {
    Matrix m(4, 4);
    for (int a = 0; a < 3; ++a)
        m += spin_operator(1, a) * spin_operator(2, a);
    return m;
}

} // namespace

Matrix spin_operator(int particle, int axis) {
    return particle == 1 ? kron(pauli(axis), identity2())
                         : kron(identity2(), pauli(axis));
}

double coulomb_position(double r, double m, double e) {
    if (r <= 0.0)
        throw Error(ErrorKind::NonPositiveR, "r = " + std::to_string(r));
    return (2.0 * m) * (2.0 * m) * e * e / (four_pi * r);
}

Matrix dipole_momentum_kernel(const Vec3& q, double m, double e) {
    const double qn = vec_norm(q);
    if (qn <= 0.0)
        throw Error(ErrorKind::ZeroMomentumTransfer, "|q| = 0");

    // (sigma1 x q).(sigma2 x q) = (sigma1.sigma2)|q|^2 - (sigma1.q)(sigma2.q)
    const double scale = e * e / (4.0 * m * m);
    Matrix kernel = cplx(qn * qn) * sigma1_dot_sigma2();
    kernel -= spin_dot(1, q) * spin_dot(2, q);
    kernel *= cplx(-scale / (qn * qn));
    return kernel;
}

Matrix dipole_position_hamiltonian(const Vec3& r_vec, double m, double e) {
    const double r = vec_norm(r_vec);
    if (r <= 0.0)
        throw Error(ErrorKind::ZeroSeparation, "|r| = 0");
    const Vec3 n = {r_vec[0] / r, r_vec[1] / r, r_vec[2] / r};
    const double mu = e / (2.0 * m);

    Matrix h = cplx(3.0) * (spin_dot(1, n) * spin_dot(2, n));
    h -= sigma1_dot_sigma2();
    h *= cplx(mu * mu / (four_pi * r * r * r));
    return h;
}

double curl_form_check(const Vec3& r_vec, double step, double m, double e) {
    const double r = vec_norm(r_vec);
    if (r <= 10.0 * step)
        throw Error(ErrorKind::StepTooLarge,
                    "|r| must exceed 10 * step, got |r| = " +
                        std::to_string(r));

    const double mu = e / (2.0 * m);
    const auto phi = [](const Vec3& x) {
        return 1.0 / (four_pi * vec_norm(x));
    };
    const auto shifted = [](const Vec3& x, int axis, double h) {
        Vec3 y = x;
        y[axis] += h;
        return y;
    };
    // grad phi by central differences
    const auto grad_phi = [&](const Vec3& x) {
        Vec3 g;
        for (int b = 0; b < 3; ++b)
            g[b] = (phi(shifted(x, b, step)) - phi(shifted(x, b, -step))) /
                   (2.0 * step);
        return g;
    };
    // F_k(x) = (mu2 x grad phi)_k, a 4x4 spin operator per component
    const auto field = [&](const Vec3& x, int k) {
        const Vec3 g = grad_phi(x);
        Matrix f(4, 4);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                if (a == k || b == k || a == b) continue;
                const double sign = ((a - k + 3) % 3 == 1) ? 1.0 : -1.0;
                f += cplx(sign * mu * g[b]) * spin_operator(2, a);
            }
        return f;
    };

    // H = -mu1 . curl F, nested central differences
    Matrix h_curl(4, 4);
    for (int i = 0; i < 3; ++i) {
        Matrix curl_i(4, 4);
        for (int j = 0; j < 3; ++j) {
            if (j == i) continue;
            const int k = 3 - i - j;
            const double sign = ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
            Matrix dj_fk = field(shifted(r_vec, j, step), k) -
                           field(shifted(r_vec, j, -step), k);
            dj_fk *= cplx(1.0 / (2.0 * step));
            curl_i += cplx(sign) * dj_fk;
        }
        h_curl -= cplx(mu) * (kron(pauli(i), identity2()) * curl_i);
    }

    const Matrix h_closed = dipole_position_hamiltonian(r_vec, m, e);
    return (h_curl - h_closed).max_abs() / h_closed.max_abs();
}

Matrix effective_spin_potential(double j_coupling) {
    Matrix swap(4, 4);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) swap(a * 2 + b, b * 2 + a) = 1.0;
    Matrix v = cplx(2.0) * swap;
    v -= Matrix::identity(4);
    v *= cplx(j_coupling);
    return v;
}

MomentumKernel extract_spin_potential(double delta, const Vec3& q_hat,
                                      double m, double e) {
    if (delta <= 0.0 || delta > 0.1)
        throw Error(ErrorKind::NonPositiveInput,
                    "delta must be in (0, 0.1], got " + std::to_string(delta));
    const double qh_norm = vec_norm(q_hat);
    if (qh_norm <= 0.0)
        throw Error(ErrorKind::ZeroMomentumTransfer, "q direction is zero");

    const Vec3 qdir = {q_hat[0] / qh_norm, q_hat[1] / qh_norm,
                       q_hat[2] / qh_norm};
    const double pmag = delta * m;
    const double qmag = delta * m; // |q| <= 2|p| holds with room to spare

    // unit vector orthogonal to q
    Vec3 seed = std::abs(qdir[0]) < 0.9 ? Vec3{1.0, 0.0, 0.0}
                                        : Vec3{0.0, 1.0, 0.0};
    Vec3 w = {qdir[1] * seed[2] - qdir[2] * seed[1],
              qdir[2] * seed[0] - qdir[0] * seed[2],
              qdir[0] * seed[1] - qdir[1] * seed[0]};
    const double wn = vec_norm(w);
    w = {w[0] / wn, w[1] / wn, w[2] / wn};

    // center-of-mass elastic pair with p' - p = q and |p'| = |p| = pmag
    const double s = std::sqrt(pmag * pmag - 0.25 * qmag * qmag);
    Vec3 p_in, p_out;
    for (int a = 0; a < 3; ++a) {
        p_in[a] = -0.5 * qmag * qdir[a] + s * w[a];
        p_out[a] = 0.5 * qmag * qdir[a] + s * w[a];
    }

    const std::array<Spin, 2> labels = {Spin::Up, Spin::Down};
    Matrix born(4, 4);
    for (int row = 0; row < 4; ++row)
        for (int col = 0; col < 4; ++col) {
            ScatteringKinematics k;
            k.mass = m;
            k.coupling_e = e;
            k.p1 = on_shell_momentum(m, p_in[0], p_in[1], p_in[2]);
            k.p2 = on_shell_momentum(m, -p_in[0], -p_in[1], -p_in[2]);
            k.p1_out = on_shell_momentum(m, p_out[0], p_out[1], p_out[2]);
            k.p2_out = on_shell_momentum(m, -p_out[0], -p_out[1], -p_out[2]);
            k.s1_out = labels[row / 2];
            k.s2_out = labels[row % 2];
            k.s1 = labels[col / 2];
            k.s2 = labels[col % 2];
            // Born rule iM = -i V(q): V = i * (direct diagram), divided by
            // the (2m)^2 spinor normalization
            born(row, col) =
                I * tree_amplitude(k).direct_term / (4.0 * m * m);
        }

    // remove the spin-independent Coulomb part e^2/|q|^2
    born -= cplx(e * e / (qmag * qmag)) * Matrix::identity(4);

    // keep only the sector bilinear in both spins: cross terms
    // sigma1^a sigma2^b with a, b >= 1 in the Pauli product decomposition
    Matrix residual(4, 4);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            const Matrix basis = kron(pauli(a), pauli(b));
            const cplx coeff = (basis.adjoint() * born).trace() / 4.0;
            residual += coeff * basis;
        }

    MomentumKernel kernel;
    kernel.q = {qmag * qdir[0], qmag * qdir[1], qmag * qdir[2]};
    kernel.matrix = residual;
    return kernel;
}

} // namespace spinor_epr
