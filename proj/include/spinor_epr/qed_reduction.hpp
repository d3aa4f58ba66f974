#pragma once

#include "spinor_epr/qed_amplitude.hpp"

namespace spinor_epr {

using Vec3 = std::array<double, 3>;

/// sigma^axis acting on particle 1 or 2 of the ordered 2 (x) 2 spin basis
/// (|uu>, |ud>, |du>, |dd>).
Matrix spin_operator(int particle, int axis);

/// The printed Coulomb potential (2m)^2 e^2 / (4 pi r). The (2m)^2 carries
/// the relativistic 2m-per-particle spinor normalization; divide it out to
/// get the physical potential.
double coulomb_position(double r, double m, double e);

/// Momentum-space dipole-dipole kernel
///   -(e/2m)^2 (sigma1 x q).(sigma2 x q) / |q|^2
/// as a 4x4 spin operator; homogeneous of degree 0 in |q|.
Matrix dipole_momentum_kernel(const Vec3& q, double m, double e);

/// Position-space dipole-dipole Hamiltonian away from the origin:
///   [3 (n.mu1)(n.mu2) - mu1.mu2] / (4 pi r^3),  mu = (e/2m) sigma.
/// The distributional contact term at r = 0 is excluded.
Matrix dipole_position_hamiltonian(const Vec3& r_vec, double m, double e);

/// Evaluates -mu1 . curl(mu2 x grad 1/(4 pi r)) by nested central finite
/// differences and returns the max-entry deviation from
/// dipole_position_hamiltonian, relative to that operator's largest entry.
/// Converges as O(step^2).
double curl_form_check(const Vec3& r_vec, double step, double m, double e);

/// J (2 SWAP - I) on the two-spin space: eigenvalue J on the triplet,
/// -3J on the singlet.
Matrix effective_spin_potential(double j_coupling);

struct MomentumKernel {
    Vec3 q;
    Matrix matrix; // 4x4 spin operator
};

/// Numerical Born extraction: evaluates the direct diagram for all 16 spin
/// combinations on center-of-mass elastic kinematics with |p| = delta * m
/// and momentum transfer delta * m * q_hat, divides out the (2m)^2
/// normalization, removes the spin-independent Coulomb part e^2/|q|^2, and
/// keeps the part bilinear in both spins (the "cross terms"; single-spin
/// spin-orbit pieces of the same order are dropped). The result approaches
/// dipole_momentum_kernel as delta -> 0.
MomentumKernel extract_spin_potential(double delta, const Vec3& q_hat,
                                      double m, double e);

} // namespace spinor_epr
