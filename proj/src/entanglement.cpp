#include "spinor_epr/entanglement.hpp"

#include <cmath>

namespace spinor_epr {

namespace {

Axis3 named_axis(const std::string& name) {
    if (name == "x") return {1.0, 0.0, 0.0};
    if (name == "y") return {0.0, 1.0, 0.0};
    if (name == "z") return {0.0, 0.0, 1.0};
    throw Error(ErrorKind::NonUnitAxis, "unknown axis name " + name);
}

/// max deviation across both the 4x4 and projected 2x2 spectra
double spectrum_deviation(const EntanglementReport& rep,
                          const EntanglementReport& base) {
    double dev = 0.0;
    for (std::size_t k = 0; k < rep.schmidt_spectrum.size(); ++k)
        dev = std::max(dev, std::abs(rep.schmidt_spectrum[k] -
                                     base.schmidt_spectrum[k]));
    for (std::size_t k = 0; k < rep.spin_schmidt_spectrum.size(); ++k)
        dev = std::max(dev, std::abs(rep.spin_schmidt_spectrum[k] -
                                     base.spin_schmidt_spectrum[k]));
    return dev;
}

} // namespace

EntanglementReport analyze(const TwoParticleState& psi) {
    const double norm = std::sqrt(psi.norm_sq());
    if (norm <= 0.0) throw Error(ErrorKind::ZeroState, "<Psi|Psi> = 0");

    Vector v = psi.as_vector();
    v *= cplx(1.0 / norm);

    EntanglementReport report;
    report.schmidt_spectrum = schmidt_coefficients(v, 4, 4);
    report.entropy_bits = spectrum_entropy(report.schmidt_spectrum);

    // spin-subspace projection; the basis Gram must be 2E * I2 per particle
    for (const FourVector* p : {&psi.p1, &psi.p2}) {
        const DiracSpinor up = u_spinor(*p, Spin::Up, psi.mass);
        const DiracSpinor down = u_spinor(*p, Spin::Down, psi.mass);
        const double expected = 2.0 * p->t;
        double dev = std::abs(inner(up.as_vector(), down.as_vector()));
        dev = std::max(dev, std::abs(inner(up.as_vector(), up.as_vector()) -
                                     cplx(expected)));
        dev = std::max(dev,
                       std::abs(inner(down.as_vector(), down.as_vector()) -
                                cplx(expected)));
        if (dev > 1e-8 * expected)
            throw Error(ErrorKind::NonOrthogonalSpinBasis,
                        "Gram deviation " + std::to_string(dev));
    }

    std::array<cplx, 4> c = project_spin_amplitudes(psi);
    double cnorm = 0.0;
    for (const cplx& x : c) cnorm += std::norm(x);
    cnorm = std::sqrt(cnorm);
    if (cnorm <= 0.0)
        throw Error(ErrorKind::ZeroState, "no weight in the spin subspace");
    Vector cv{c[0] / cnorm, c[1] / cnorm, c[2] / cnorm, c[3] / cnorm};

    report.spin_schmidt_spectrum = schmidt_coefficients(cv, 2, 2);
    report.spin_entropy_bits = spectrum_entropy(report.spin_schmidt_spectrum);
    report.concurrence =
        2.0 * std::sqrt(std::max(report.spin_schmidt_spectrum[0], 0.0) *
                        std::max(report.spin_schmidt_spectrum[1], 0.0));
    return report;
}

std::vector<ScanRow> invariance_scan(
    const TwoParticleState& psi,
    const std::vector<LorentzTransform>& transforms) {
    const EntanglementReport base = analyze(psi);

    std::vector<ScanRow> rows;
    rows.reserve(transforms.size());
    for (const LorentzTransform& t : transforms) {
        const EntanglementReport rep = analyze(transform_two_particle(t, psi));
        ScanRow row;
        switch (t.kind) {
            case LorentzTransform::Kind::Identity: row.kind = "identity"; break;
            case LorentzTransform::Kind::Boost: row.kind = "boost"; break;
            case LorentzTransform::Kind::Rotation: row.kind = "rotation"; break;
            case LorentzTransform::Kind::Composite: row.kind = "composite"; break;
        }
        row.axis = (std::abs(t.axis[0]) == 1.0)   ? "x"
                   : (std::abs(t.axis[1]) == 1.0) ? "y"
                   : (std::abs(t.axis[2]) == 1.0) ? "z"
                                                  : "custom";
        row.parameter = t.parameter;
        row.entropy_bits = rep.entropy_bits;
        row.descriptor = t.descriptor;
        row.spectrum_deviation = spectrum_deviation(rep, base);
        rows.push_back(std::move(row));
    }
    return rows;
}

TwoParticleState corrupted_boost(const TwoParticleState& psi,
                                 double rapidity) {
    // Deliberately wrong transformation law: particle 1 uses the correct
    // spinor representation, but particle 2's Dirac components are hit with
    // the vector (4x4 coordinate) representation. The vector matrix is not a
    // scaled isometry on the spin subspace, so the Schmidt spectra shift.
    const LorentzTransform t = boost({1.0, 0.0, 0.0}, rapidity);

    TwoParticleState out = psi;
    out.p1 = t.apply(psi.p1);
    out.p2 = t.apply(psi.p2);
    const Matrix op = kron(t.spinor_rep, t.vector_rep_matrix());
    const Vector v = op * psi.as_vector();
    for (std::size_t i = 0; i < 16; ++i) out.amplitudes[i] = v[i];
    return out;
}

ScanRow negative_control_row(const TwoParticleState& psi, double rapidity) {
    const EntanglementReport base = analyze(psi);
    const EntanglementReport rep = analyze(corrupted_boost(psi, rapidity));
    ScanRow row;
    row.kind = "negative-control";
    row.axis = "x";
    row.parameter = rapidity;
    row.entropy_bits = rep.entropy_bits;
    row.negative_control = true;
    row.descriptor = "corrupted-boost(x, " + std::to_string(rapidity) +
                     ") [negative control]";
    row.spectrum_deviation = spectrum_deviation(rep, base);
    return row;
}

double spin_subspace_isometry_deviation(const LorentzTransform& t,
                                        const FourVector& p, double mass) {
    const DiracSpinor basis[2] = {u_spinor(p, Spin::Up, mass),
                                  u_spinor(p, Spin::Down, mass)};
    // Gram of the boosted basis vectors S u(p, e)
    Matrix gram(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            gram(i, j) = inner(t.spinor_rep * basis[i].as_vector(),
                               t.spinor_rep * basis[j].as_vector());
    const double scale = 0.5 * (gram(0, 0).real() + gram(1, 1).real());
    Matrix dev = gram - cplx(scale) * Matrix::identity(2);
    return dev.max_abs() / scale;
}

std::vector<LorentzTransform> default_scan_grid(
    const std::vector<std::string>& axes,
    const std::vector<double>& rapidities,
    const std::vector<double>& rotation_angles) {
    std::vector<LorentzTransform> grid;
    for (const std::string& ax : axes)
        for (double eta : rapidities) grid.push_back(boost(named_axis(ax), eta));
    for (const std::string& ax : axes)
        for (double theta : rotation_angles)
            grid.push_back(rotation(named_axis(ax), theta));
    // rotation-after-boost composites; boost axis cycled off the rotation axis
    for (std::size_t i = 0; i < axes.size(); ++i)
        for (double theta : rotation_angles) {
            const std::string& boost_ax = axes[(i + 1) % axes.size()];
            grid.push_back(compose(rotation(named_axis(axes[i]), theta),
                                   boost(named_axis(boost_ax), 1.2)));
        }
    return grid;
}

} // namespace spinor_epr
