#pragma once

#include <array>

#include "spinor_epr/matrix.hpp"

namespace spinor_epr {

/// Real energy-momentum (or spacetime point), metric signature (+,-,-,-).
/// Natural units throughout: hbar = c = 1.
struct FourVector {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double minkowski_dot(const FourVector& o) const {
        return t * o.t - x * o.x - y * o.y - z * o.z;
    }
    double minkowski_sq() const { return minkowski_dot(*this); }
    double spatial_norm() const { return std::sqrt(x * x + y * y + z * z); }
    std::array<double, 3> spatial() const { return {x, y, z}; }

    friend FourVector operator+(const FourVector& a, const FourVector& b) {
        return {a.t + b.t, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend FourVector operator-(const FourVector& a, const FourVector& b) {
        return {a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend FourVector operator*(double s, const FourVector& a) {
        return {s * a.t, s * a.x, s * a.y, s * a.z};
    }

    /// max-abs componentwise distance
    double max_abs_diff(const FourVector& o) const;

    bool is_on_shell(double mass, double tol = 1e-9) const {
        return std::abs(minkowski_sq() - mass * mass) <= tol && t > 0.0;
    }
};

/// Positive-energy momentum with E = sqrt(m^2 + |p|^2).
FourVector on_shell_momentum(double mass, double px, double py, double pz);

enum class Spin { Up, Down };

using TwoSpinor = std::array<cplx, 2>;

/// z-axis basis spinors: up = (1,0)^T, down = (0,1)^T
TwoSpinor chi(Spin s);

/// Pauli matrices (and the 2x2 identity for axis < 0 is not provided;
/// axis is 0=x, 1=y, 2=z).
const Matrix& pauli(int axis);
const Matrix& identity2();

/// Gamma matrices in the chiral (Weyl) basis:
///   gamma^0 = offdiag(1, 1),  gamma^i = offdiag(sigma^i, -sigma^i).
/// This basis is fixed project-wide; the block square-root spinor
/// construction below presumes it.
const Matrix& gamma(int mu);

/// g^{mu nu} = diag(1, -1, -1, -1)
double metric(int mu, int nu);

/// p_mu sigma^mu = E - p.sigma (unbarred) or E + p.sigma (barred),
/// with sigma^mu = (1, sigma), sigmabar^mu = (1, -sigma).
/// Hermitian, and PSD for physical on-shell momenta.
Matrix pauli_dot(const FourVector& p, bool barred);

/// Four-component positive-energy solution of (gamma.p - m) u = 0,
/// normalized so that u^dagger u = 2E.
struct DiracSpinor {
    std::array<cplx, 4> components{};
    FourVector momentum;
    double mass = 0.0;

    cplx operator[](std::size_t i) const { return components[i]; }
    double norm() const;
    Vector as_vector() const;
};

/// u(p, xi) = (sqrt(p.sigma) xi, sqrt(p.sigmabar) xi) stacked.
/// Requires p on-shell for `mass` and xi normalized.
DiracSpinor u_spinor(const FourVector& p, const TwoSpinor& xi, double mass);
DiracSpinor u_spinor(const FourVector& p, Spin s, double mass);

/// ||(gamma^mu p_mu - m) u||_2 -- zero for any valid positive-energy spinor.
double dirac_residual(const DiracSpinor& u);

/// u_out^dagger gamma^0 Gamma u_in  (the Dirac adjoint contraction).
cplx bilinear(const DiracSpinor& u_out, const Matrix& big_gamma,
              const DiracSpinor& u_in);

} // namespace spinor_epr
