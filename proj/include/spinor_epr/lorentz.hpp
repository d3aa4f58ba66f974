#pragma once

#include <array>
#include <string>

#include "spinor_epr/dirac.hpp"
#include "spinor_epr/state.hpp"

namespace spinor_epr {

using Axis3 = std::array<double, 3>;

/// A Lorentz transformation carried in both representations: the 4x4 real
/// vector matrix Lambda and the 4x4 complex spinor matrix S, with
/// S^-1 gamma^mu S = Lambda^mu_nu gamma^nu. Boosts have Hermitian
/// (non-unitary) S, rotations unitary S.
struct LorentzTransform {
    enum class Kind { Identity, Boost, Rotation, Composite };

    std::array<std::array<double, 4>, 4> vector_rep{};
    Matrix spinor_rep;
    Kind kind = Kind::Identity;
    Axis3 axis{0.0, 0.0, 1.0};
    double parameter = 0.0; // rapidity (boost) or angle (rotation)
    std::string descriptor = "identity";

    FourVector apply(const FourVector& p) const;
    Matrix vector_rep_matrix() const;
};

LorentzTransform identity_transform();

/// Active boost: rest momentum (m, 0) maps to (m cosh eta, m sinh eta * axis).
/// S = exp of the boost generators S^{0i} = (i/4)[gamma^0, gamma^i].
LorentzTransform boost(const Axis3& axis, double rapidity);

/// Active spatial rotation by `angle` about `axis`;
/// S = exp(-i angle/2 axis.Sigma) with Sigma^i = diag(sigma^i, sigma^i).
LorentzTransform rotation(const Axis3& axis, double angle);

/// Composite transform a.b: vector_rep = La Lb, spinor_rep = Sa Sb.
LorentzTransform compose(const LorentzTransform& a, const LorentzTransform& b);

/// Componentwise S.u with the momentum tag moved to Lambda.p.
DiracSpinor transform_spinor(const LorentzTransform& t, const DiracSpinor& u);

/// (S (x) S) on the 16 amplitudes, Lambda on each momentum tag.
/// Does not renormalize.
TwoParticleState transform_two_particle(const LorentzTransform& t,
                                        const TwoParticleState& psi);

/// max entry of Lambda^T g Lambda - g
double metric_preservation_deviation(const LorentzTransform& t);

/// max entry over mu of S^-1 gamma^mu S - Lambda^mu_nu gamma^nu
double intertwining_deviation(const LorentzTransform& t);

double velocity_to_rapidity(double beta);

} // namespace spinor_epr
