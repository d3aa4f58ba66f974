#include "spinor_epr/lorentz.hpp"

#include <cmath>

namespace spinor_epr {

namespace {

const cplx I(0.0, 1.0);

void check_unit_axis(const Axis3& axis) {
    const double n =
        std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (std::abs(n - 1.0) > 1e-12)
        throw Error(ErrorKind::NonUnitAxis, "|axis| = " + std::to_string(n));
}

/// 4x4 complex inverse, Gauss-Jordan with partial pivoting.
Matrix inverse4(const Matrix& m) {
    const std::size_t n = m.rows();
    Matrix a = m;
    Matrix inv = Matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(col, j), a(pivot, j));
                std::swap(inv(col, j), inv(pivot, j));
            }
        const cplx d = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= d;
            inv(col, j) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const cplx f = a(r, col);
            if (f == cplx(0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

std::string axis_name(const Axis3& axis) {
    if (axis[0] == 1.0 && axis[1] == 0.0 && axis[2] == 0.0) return "x";
    if (axis[0] == 0.0 && axis[1] == 1.0 && axis[2] == 0.0) return "y";
    if (axis[0] == 0.0 && axis[1] == 0.0 && axis[2] == 1.0) return "z";
    return "(" + std::to_string(axis[0]) + "," + std::to_string(axis[1]) +
           "," + std::to_string(axis[2]) + ")";
}

} // namespace

FourVector LorentzTransform::apply(const FourVector& p) const {
    const std::array<double, 4> in{p.t, p.x, p.y, p.z};
    std::array<double, 4> out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i] += vector_rep[i][j] * in[j];
    return {out[0], out[1], out[2], out[3]};
}

Matrix LorentzTransform::vector_rep_matrix() const {
    Matrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = vector_rep[i][j];
    return m;
}

LorentzTransform identity_transform() {
    LorentzTransform t;
    for (int i = 0; i < 4; ++i) t.vector_rep[i][i] = 1.0;
    t.spinor_rep = Matrix::identity(4);
    return t;
}

LorentzTransform boost(const Axis3& axis, double rapidity) {
    check_unit_axis(axis);

    LorentzTransform t = identity_transform();
    t.kind = LorentzTransform::Kind::Boost;
    t.axis = axis;
    t.parameter = rapidity;
    t.descriptor = "boost(" + axis_name(axis) + ", " +
                   std::to_string(rapidity) + ")";

    const double ch = std::cosh(rapidity);
    const double sh = std::sinh(rapidity);
    t.vector_rep[0][0] = ch;
    for (int i = 0; i < 3; ++i) {
        t.vector_rep[0][i + 1] = sh * axis[i];
        t.vector_rep[i + 1][0] = sh * axis[i];
        for (int j = 0; j < 3; ++j)
            t.vector_rep[i + 1][j + 1] =
                (i == j ? 1.0 : 0.0) + (ch - 1.0) * axis[i] * axis[j];
    }

    // S = exp(-i eta n_i S^{0i}), S^{0i} = (i/4)[gamma^0, gamma^i]
    Matrix arg(4, 4);
    for (int i = 0; i < 3; ++i) {
        if (axis[i] == 0.0) continue;
        Matrix gen = gamma(0) * gamma(i + 1) - gamma(i + 1) * gamma(0);
        gen *= I * cplx(0.25);
        arg += cplx(-rapidity * axis[i]) * (I * gen);
    }
    t.spinor_rep = matrix_exp(arg);
    return t;
}

LorentzTransform rotation(const Axis3& axis, double angle) {
    check_unit_axis(axis);

    LorentzTransform t = identity_transform();
    t.kind = LorentzTransform::Kind::Rotation;
    t.axis = axis;
    t.parameter = angle;
    t.descriptor =
        "rotation(" + axis_name(axis) + ", " + std::to_string(angle) + ")";

    // Rodrigues formula on the spatial block
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double k[3] = {axis[0], axis[1], axis[2]};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double kk = k[i] * k[j];
            double cross = 0.0; // K_{ij} = -epsilon_{ijl} k_l
            if (i != j) {
                const int l = 3 - i - j;
                const double sign = ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
                cross = -sign * k[l];
            }
            t.vector_rep[i + 1][j + 1] =
                c * (i == j ? 1.0 : 0.0) + s * cross + (1.0 - c) * kk;
        }

    // S = exp(-i angle/2 n.Sigma); kron(I2, sigma^i) = diag(sigma^i, sigma^i)
    Matrix arg(4, 4);
    for (int i = 0; i < 3; ++i) {
        if (axis[i] == 0.0) continue;
        arg += cplx(-0.5 * angle * axis[i]) * I * kron(identity2(), pauli(i));
    }
    t.spinor_rep = matrix_exp(arg);
    return t;
}

LorentzTransform compose(const LorentzTransform& a, const LorentzTransform& b) {
    LorentzTransform t;
    t.kind = LorentzTransform::Kind::Composite;
    t.descriptor = a.descriptor + "." + b.descriptor;
    t.axis = a.axis;
    t.parameter = a.parameter;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k)
                s += a.vector_rep[i][k] * b.vector_rep[k][j];
            t.vector_rep[i][j] = s;
        }
    t.spinor_rep = a.spinor_rep * b.spinor_rep;
    return t;
}

DiracSpinor transform_spinor(const LorentzTransform& t, const DiracSpinor& u) {
    DiracSpinor out;
    out.mass = u.mass;
    out.momentum = t.apply(u.momentum);
    const Vector v = t.spinor_rep * u.as_vector();
    for (std::size_t i = 0; i < 4; ++i) out.components[i] = v[i];
    return out;
}

TwoParticleState transform_two_particle(const LorentzTransform& t,
                                        const TwoParticleState& psi) {
    TwoParticleState out;
    out.mass = psi.mass;
    out.p1 = t.apply(psi.p1);
    out.p2 = t.apply(psi.p2);
    const Matrix ss = kron(t.spinor_rep, t.spinor_rep);
    const Vector v = ss * psi.as_vector();
    for (std::size_t i = 0; i < 16; ++i) out.amplitudes[i] = v[i];
    return out;
}

double metric_preservation_deviation(const LorentzTransform& t) {
    double dev = 0.0;
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k)
                s += t.vector_rep[k][m] * metric(k, k) * t.vector_rep[k][n];
            dev = std::max(dev, std::abs(s - metric(m, n)));
        }
    return dev;
}

double intertwining_deviation(const LorentzTransform& t) {
    const Matrix s_inv = inverse4(t.spinor_rep);
    double dev = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
        Matrix lhs = s_inv * gamma(mu) * t.spinor_rep;
        for (int nu = 0; nu < 4; ++nu)
            lhs -= cplx(t.vector_rep[mu][nu]) * gamma(nu);
        dev = std::max(dev, lhs.max_abs());
    }
    return dev;
}

double velocity_to_rapidity(double beta) {
    if (std::abs(beta) >= 1.0)
        throw Error(ErrorKind::NonPositiveInput,
                    "|beta| must be < 1, got " + std::to_string(beta));
    return std::atanh(beta);
}

} // namespace spinor_epr
