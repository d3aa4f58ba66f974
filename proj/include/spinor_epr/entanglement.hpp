#pragma once

#include <string>
#include <vector>

#include "spinor_epr/lorentz.hpp"
#include "spinor_epr/spin_dynamics.hpp"

namespace spinor_epr {

/// Degree of entanglement of a bipartite pure two-spinor state:
/// the 4 (x) 4 Schmidt spectrum and its entropy, plus the 2 (x) 2 spectrum
/// after projecting each particle onto its momentum's spin subspace
/// span{u(p, up), u(p, down)}.
struct EntanglementReport {
    std::vector<double> schmidt_spectrum;      // 4-entry, descending
    std::vector<double> spin_schmidt_spectrum; // 2-entry, descending
    double entropy_bits = 0.0;
    double spin_entropy_bits = 0.0;
    /// 2|c+ c-| for the two-term spin Schmidt decomposition; a derived
    /// convenience, not the primary measure.
    double concurrence = 0.0;
    std::string transform_descriptor = "identity";
};

/// Normalizes (a copy of) Psi and computes the report.
EntanglementReport analyze(const TwoParticleState& psi);

struct ScanRow {
    std::string kind;
    std::string axis;
    double parameter = 0.0;
    double entropy_bits = 0.0;
    double spectrum_deviation = 0.0;
    bool negative_control = false;
    std::string descriptor;
};

/// One row per transform, deviations against the untransformed report.
std::vector<ScanRow> invariance_scan(
    const TwoParticleState& psi,
    const std::vector<LorentzTransform>& transforms);

/// Deliberately broken transformation law (not part of the physics): boosts
/// both momentum tags, applies the correct spinor representation to particle
/// 1, but hits particle 2's Dirac components with the vector (coordinate)
/// representation. That matrix is not a scaled isometry on the spin
/// subspace, so the apparent degree of entanglement shifts. Used as the
/// scan's negative control.
TwoParticleState corrupted_boost(const TwoParticleState& psi, double rapidity);
ScanRow negative_control_row(const TwoParticleState& psi, double rapidity);

/// Relative deviation of S^dagger S restricted to span{u(p,up), u(p,down)}
/// from a multiple of the identity -- the scaled-isometry property behind
/// boost invariance of the spectra.
double spin_subspace_isometry_deviation(const LorentzTransform& t,
                                        const FourVector& p, double mass);

/// Default grid used by the CLI and the acceptance suite: boosts for each
/// axis x rapidity, pure rotations for each axis x angle, and one
/// rotation-after-boost composite per (axis, angle).
std::vector<LorentzTransform> default_scan_grid(
    const std::vector<std::string>& axes,
    const std::vector<double>& rapidities,
    const std::vector<double>& rotation_angles);

} // namespace spinor_epr
