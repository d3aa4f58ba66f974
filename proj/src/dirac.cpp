#include "spinor_epr/dirac.hpp"

#include <cmath>

namespace spinor_epr {

namespace {

const cplx I(0.0, 1.0);

Matrix make_pauli(int axis) {
    switch (axis) {
        case 0: return Matrix{{0.0, 1.0}, {1.0, 0.0}};
        case 1: return Matrix{{0.0, -I}, {I, 0.0}};
        default: return Matrix{{1.0, 0.0}, {0.0, -1.0}};
    }
}

Matrix make_gamma(int mu) {
    Matrix g(4, 4);
    if (mu == 0) {
        g(0, 2) = g(1, 3) = g(2, 0) = g(3, 1) = 1.0;
        return g;
    }
    const Matrix& s = pauli(mu - 1);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            g(i, 2 + j) = s(i, j);
            g(2 + i, j) = -s(i, j);
        }
    return g;
}

} // namespace

const Matrix& pauli(int axis) {
    static const Matrix sx = make_pauli(0);
    static const Matrix sy = make_pauli(1);
    static const Matrix sz = make_pauli(2);
    switch (axis) {
        case 0: return sx;
        case 1: return sy;
        default: return sz;
    }
}

const Matrix& identity2() {
    static const Matrix id = Matrix::identity(2);
    return id;
}

const Matrix& gamma(int mu) {
    static const Matrix g0 = make_gamma(0);
    static const Matrix g1 = make_gamma(1);
    static const Matrix g2 = make_gamma(2);
    static const Matrix g3 = make_gamma(3);
    switch (mu) {
        case 0: return g0;
        case 1: return g1;
        case 2: return g2;
        default: return g3;
    }
}

double metric(int mu, int nu) {
    if (mu != nu) return 0.0;
    return mu == 0 ? 1.0 : -1.0;
}

double FourVector::max_abs_diff(const FourVector& o) const {
    return std::max(std::max(std::abs(t - o.t), std::abs(x - o.x)),
                    std::max(std::abs(y - o.y), std::abs(z - o.z)));
}

FourVector on_shell_momentum(double mass, double px, double py, double pz) {
    return {std::sqrt(mass * mass + px * px + py * py + pz * pz), px, py, pz};
}

TwoSpinor chi(Spin s) {
    return s == Spin::Up ? TwoSpinor{1.0, 0.0} : TwoSpinor{0.0, 1.0};
}

Matrix pauli_dot(const FourVector& p, bool barred) {
    const double sign = barred ? 1.0 : -1.0;
    Matrix m = cplx(p.t) * identity2();
    m += cplx(sign * p.x) * pauli(0);
    m += cplx(sign * p.y) * pauli(1);
    m += cplx(sign * p.z) * pauli(2);
    return m;
}

double DiracSpinor::norm() const {
    double s = 0.0;
    for (const cplx& c : components) s += std::norm(c);
    return std::sqrt(s);
}

Vector DiracSpinor::as_vector() const {
    return Vector{components[0], components[1], components[2], components[3]};
}

DiracSpinor u_spinor(const FourVector& p, const TwoSpinor& xi, double mass) {
    if (mass <= 0.0)
        throw Error(ErrorKind::OffShell, "mass must be positive");
    if (!p.is_on_shell(mass))
        throw Error(ErrorKind::OffShell,
                    "p^2 = " + std::to_string(p.minkowski_sq()) +
                        " != m^2 = " + std::to_string(mass * mass));
    const double xi_norm = std::norm(xi[0]) + std::norm(xi[1]);
    if (std::abs(xi_norm - 1.0) > 1e-10)
        throw Error(ErrorKind::NotNormalizedSpinor,
                    "|xi|^2 = " + std::to_string(xi_norm));

    const Matrix upper = hermitian_sqrt(pauli_dot(p, false));
    const Matrix lower = hermitian_sqrt(pauli_dot(p, true));

    DiracSpinor u;
    u.momentum = p;
    u.mass = mass;
    for (std::size_t i = 0; i < 2; ++i) {
        u.components[i] = upper(i, 0) * xi[0] + upper(i, 1) * xi[1];
        u.components[2 + i] = lower(i, 0) * xi[0] + lower(i, 1) * xi[1];
    }
    return u;
}

DiracSpinor u_spinor(const FourVector& p, Spin s, double mass) {
    return u_spinor(p, chi(s), mass);
}

double dirac_residual(const DiracSpinor& u) {
    // gamma^mu p_mu = E gamma^0 - p.gamma
    Matrix slash = cplx(u.momentum.t) * gamma(0);
    slash -= cplx(u.momentum.x) * gamma(1);
    slash -= cplx(u.momentum.y) * gamma(2);
    slash -= cplx(u.momentum.z) * gamma(3);
    slash -= cplx(u.mass) * Matrix::identity(4);
    return (slash * u.as_vector()).norm();
}

cplx bilinear(const DiracSpinor& u_out, const Matrix& big_gamma,
              const DiracSpinor& u_in) {
    const Vector rhs = big_gamma * u_in.as_vector();
    const Vector lhs = gamma(0).adjoint() * u_out.as_vector();
    // ubar Gamma u = u_out^dagger gamma^0 Gamma u_in; gamma^0 is Hermitian
    return inner(lhs, rhs);
}

} // namespace spinor_epr
