// Acceptance suite: one line per criterion, PASS/FAIL, exit 0 only if all
// pass. argv[1] is the path to the spinor-epr CLI binary (used by the
// determinism criterion).

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spinor_epr/entanglement.hpp"
#include "spinor_epr/lorentz.hpp"
#include "spinor_epr/qed_amplitude.hpp"
#include "spinor_epr/qed_reduction.hpp"
#include "spinor_epr/spin_dynamics.hpp"

using namespace spinor_epr;

namespace {

constexpr double kPi = 3.14159265358979323846;

int g_failures = 0;

void report(int number, const std::string& name, bool pass, double deviation,
            double tolerance) {
    std::printf("%2d. %-38s %s  (deviation %.3e, tolerance %.3e)\n", number,
                name.c_str(), pass ? "PASS" : "FAIL", deviation, tolerance);
    if (!pass) ++g_failures;
}

Axis3 random_axis(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    while (true) {
        Axis3 a{u(rng), u(rng), u(rng)};
        const double n = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
        if (n < 1e-3 || n > 1.0) continue;
        return {a[0] / n, a[1] / n, a[2] / n};
    }
}

LorentzTransform random_transform(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int pick = static_cast<int>(rng() % 3);
    if (pick == 0) return boost(random_axis(rng), 3.0 * u(rng));
    if (pick == 1) return rotation(random_axis(rng), kPi * u(rng));
    return compose(rotation(random_axis(rng), kPi * u(rng)),
                   boost(random_axis(rng), 3.0 * u(rng)));
}

Spin coin(std::mt19937_64& rng) { return rng() % 2 ? Spin::Up : Spin::Down; }

ScatteringKinematics random_elastic(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mag(0.1, 2.0);
    std::uniform_real_distribution<double> ang(0.3, kPi - 0.3);
    std::uniform_real_distribution<double> phi(-kPi, kPi);
    return elastic_kinematics(1.0, 0.303, mag(rng), ang(rng), coin(rng),
                              coin(rng), coin(rng), coin(rng), phi(rng));
}

void criterion_1_clifford_metric() {
    double dev = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            Matrix anti = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
            anti -= cplx(2.0 * metric(mu, nu)) * Matrix::identity(4);
            dev = std::max(dev, anti.max_abs());
        }
    const bool clifford_ok = dev <= 1e-14;

    std::mt19937_64 rng(101);
    double metric_dev = 0.0;
    for (int k = 0; k < 100; ++k)
        metric_dev = std::max(metric_dev,
                              metric_preservation_deviation(random_transform(rng)));
    report(1, "clifford-and-metric", clifford_ok && metric_dev <= 1e-12,
           std::max(dev, metric_dev), 1e-12);
}

void criterion_2_dirac_covariance() {
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    double dev = 0.0;
    std::vector<DiracSpinor> sample;
    for (int k = 0; k < 1000; ++k) {
        const FourVector p = on_shell_momentum(1.0, u(rng), u(rng), u(rng));
        const DiracSpinor spinor =
            u_spinor(p, k % 2 ? Spin::Up : Spin::Down, 1.0);
        dev = std::max(dev, dirac_residual(spinor) / spinor.norm());
        if (k % 10 == 0) sample.push_back(spinor);
    }
    for (int k = 0; k < 100; ++k) {
        const LorentzTransform t = random_transform(rng);
        const DiracSpinor v = transform_spinor(t, sample[k % sample.size()]);
        dev = std::max(dev, dirac_residual(v) / v.norm());
    }
    report(2, "dirac-covariance", dev <= 1e-9, dev, 1e-9);
}

void criterion_3_intertwining() {
    std::mt19937_64 rng(303);
    double dev = 0.0;
    for (int k = 0; k < 100; ++k)
        dev = std::max(dev, intertwining_deviation(random_transform(rng)));
    report(3, "intertwining", dev <= 1e-10, dev, 1e-10);
}

void criterion_4_boost_concordance() {
    const double mass = 1.0;
    const FourVector rest{mass, 0.0, 0.0, 0.0};
    double dev = 0.0;
    for (int k = 0; k < 20; ++k) {
        const double eta = 3.0 * k / 19.0;
        const LorentzTransform t = boost({1.0, 0.0, 0.0}, eta);
        const FourVector moving = t.apply(rest);
        for (Spin s : {Spin::Up, Spin::Down}) {
            const DiracSpinor a = transform_spinor(t, u_spinor(rest, s, mass));
            const DiracSpinor b = u_spinor(moving, s, mass);
            for (int i = 0; i < 4; ++i)
                dev = std::max(dev, std::abs(a.components[i] -
                                             b.components[i]) /
                                        b.norm());
        }
    }
    report(4, "boost-concordance", dev <= 1e-10, dev, 1e-10);
}

void criterion_5_antisymmetry() {
    std::mt19937_64 rng(505);
    double dev = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const ScatteringKinematics kin = random_elastic(rng);
        const Amplitude a = tree_amplitude(kin);
        ScatteringKinematics swapped = kin;
        std::swap(swapped.p1_out, swapped.p2_out);
        std::swap(swapped.s1_out, swapped.s2_out);
        const Amplitude b = tree_amplitude(swapped);
        dev = std::max(dev, std::abs(a.value + b.value) /
                                std::max(std::abs(a.value), 1e-300));
    }
    report(5, "amplitude-antisymmetry", dev <= 1e-10, dev, 1e-10);
}

void criterion_6_ward() {
    std::mt19937_64 rng(606);
    double dev = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const ScatteringKinematics kin = random_elastic(rng);
        const DiracSpinor legs_in[2] = {u_spinor(kin.p1, kin.s1, kin.mass),
                                        u_spinor(kin.p2, kin.s2, kin.mass)};
        const DiracSpinor legs_out[2] = {
            u_spinor(kin.p1_out, kin.s1_out, kin.mass),
            u_spinor(kin.p2_out, kin.s2_out, kin.mass)};
        for (int leg = 0; leg < 2; ++leg) {
            const std::array<cplx, 4> j = current(legs_out[leg], legs_in[leg]);
            const FourVector q = (leg == 0 ? kin.p1_out - kin.p1
                                           : kin.p2_out - kin.p2);
            const cplx qj = cplx(q.t) * j[0] - cplx(q.x) * j[1] -
                            cplx(q.y) * j[2] - cplx(q.z) * j[3];
            double jn = 0.0;
            for (const cplx& c : j) jn += std::norm(c);
            dev = std::max(dev, std::abs(qj) / std::sqrt(jn));
        }
    }
    report(6, "ward-identity", dev <= 1e-9, dev, 1e-9);
}

void criterion_7_frame_independence() {
    std::mt19937_64 rng(707);
    double dev = 0.0;
    for (int k = 0; k < 100; ++k) {
        const ScatteringKinematics kin = random_elastic(rng);
        const Amplitude a = tree_amplitude(kin);
        const LorentzTransform t = random_transform(rng);
        const Amplitude b = tree_amplitude(
            transform_spinor(t, u_spinor(kin.p1, kin.s1, kin.mass)),
            transform_spinor(t, u_spinor(kin.p2, kin.s2, kin.mass)),
            transform_spinor(t, u_spinor(kin.p1_out, kin.s1_out, kin.mass)),
            transform_spinor(t, u_spinor(kin.p2_out, kin.s2_out, kin.mass)),
            kin.coupling_e);
        dev = std::max(dev, std::abs(std::abs(b.value) - std::abs(a.value)) /
                                std::abs(a.value));
    }
    report(7, "frame-independence", dev <= 1e-8, dev, 1e-8);
}

void criterion_8_nr_reduction() {
    const double mass = 1.0;
    const TwoSpinor up{cplx(1.0), cplx(0.0)};
    const TwoSpinor mixed{cplx(std::sqrt(0.5)), cplx(0.0, std::sqrt(0.5))};
    const auto gordon_dev = [&](double d) {
        const FourVector p =
            on_shell_momentum(mass, d * mass, 0.0, 0.2 * d * mass);
        const FourVector pp =
            on_shell_momentum(mass, -0.3 * d * mass, d * mass, 0.0);
        return gordon_check(p, pp, up, mixed, mass);
    };
    const double ratio = gordon_dev(0.1) / gordon_dev(0.05);
    const bool gordon_ok = ratio >= 3.5 && ratio <= 4.5;

    const double e = std::sqrt(4.0 * kPi / 137.035999);
    const auto extraction_dev = [&](double delta) {
        const MomentumKernel extracted =
            extract_spin_potential(delta, {0.0, 0.0, 1.0}, mass, e);
        const Matrix expected = dipole_momentum_kernel(extracted.q, mass, e);
        const double scale = expected.max_abs();
        double worst = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                worst = std::max(
                    worst,
                    std::abs(extracted.matrix(i, j) - expected(i, j)) / scale);
        return worst;
    };
    const double at_002 = extraction_dev(0.02);
    const double at_001 = extraction_dev(0.01);
    const bool extraction_ok = at_002 <= 0.05 && at_001 <= 0.025;
    report(8, "nonrelativistic-reduction", gordon_ok && extraction_ok,
           std::max(std::abs(ratio - 4.0), at_002), 0.5);
}

void criterion_9_curl_form() {
    const Vec3 r{0.36, -0.48, 0.8}; // |r| = 1
    const double dev = curl_form_check(r, 1e-3, 1.0, 0.5);
    const double dev2 = curl_form_check(r, 5e-4, 1.0, 0.5);
    const double order = std::log2(dev / dev2);
    report(9, "dipole-curl-consistency",
           dev <= 1e-5 && std::abs(order - 2.0) <= 0.3, dev, 1e-5);
}

void criterion_10_spectrum() {
    const double j = -1.82433814343923e-3;
    const Matrix v = effective_spin_potential(j);
    const EigenSystem es = hermitian_eigensystem(v);
    // ascending for j < 0: {j, j, j, -3j}
    double dev = 0.0;
    for (int k = 0; k < 3; ++k)
        dev = std::max(dev, std::abs(es.values[k] - j) / std::abs(j));
    dev = std::max(dev, std::abs(es.values[3] + 3.0 * j) / std::abs(3.0 * j));
    report(10, "potential-spectrum", dev <= 1e-12, dev, 1e-12);
}

void criterion_11_evolution() {
    const double mass = 1.0;
    const double j = coupling_J(1.0, 1.0, 1.0 / 137.035999).j;
    const TwoParticleState initial =
        rest_product_state(Spin::Down, Spin::Up, mass);
    double dev = 0.0;
    for (int k = 0; k <= 100; ++k) {
        const double jt2 = 2.0 * kPi * k / 100.0;
        const auto c =
            project_spin_amplitudes(evolve(initial, j, jt2 / (2.0 * j)));
        dev = std::max(dev, std::abs(c[2] - cplx(std::cos(jt2))));
        dev = std::max(dev, std::abs(c[1] - cplx(0.0, -std::sin(jt2))));
        dev = std::max(dev, std::abs(c[0]));
        dev = std::max(dev, std::abs(c[3]));
    }
    const bool trace_ok = dev <= 1e-12;

    const double t0 = 0.41 / std::abs(j);
    const auto a = project_spin_amplitudes(evolve(initial, j, t0));
    const auto b = project_spin_amplitudes(evolve(initial, j, t0 + kPi / j));
    double period_dev = 0.0;
    for (int k = 0; k < 4; ++k)
        period_dev = std::max(period_dev, std::abs(a[k] - b[k]));
    report(11, "evolution-amplitudes", trace_ok && period_dev <= 1e-10,
           std::max(dev, period_dev), 1e-10);
}

void criterion_12_epr_generation() {
    const double mass = 1.0;
    const double j = coupling_J(1.0, 1.0, 1.0 / 137.035999).j;
    const TwoParticleState initial =
        rest_product_state(Spin::Down, Spin::Up, mass);
    // 2Jt = pi/4
    const TwoParticleState evolved = evolve(initial, j, kPi / (8.0 * j));
    const TwoParticleState target = epr_state(mass);
    double dev = 0.0;
    for (int k = 0; k < 16; ++k)
        dev = std::max(dev,
                       std::abs(evolved.amplitudes[k] - target.amplitudes[k]));
    const bool componentwise_ok = dev <= 1e-12;

    const EntanglementReport rep = analyze(evolved);
    const bool entropy_ok = std::abs(rep.entropy_bits - 1.0) <= 1e-10;
    const bool spectrum_ok = std::abs(rep.schmidt_spectrum[0] - 0.5) <= 1e-10 &&
                             std::abs(rep.schmidt_spectrum[1] - 0.5) <= 1e-10 &&
                             std::abs(rep.schmidt_spectrum[2]) <= 1e-10 &&
                             std::abs(rep.schmidt_spectrum[3]) <= 1e-10;
    report(12, "epr-generation", componentwise_ok && entropy_ok && spectrum_ok,
           std::max(dev, std::abs(rep.entropy_bits - 1.0)), 1e-10);
}

void criterion_13_invariance() {
    const TwoParticleState psi = epr_state(1.0);
    const auto rows = invariance_scan(
        psi, default_scan_grid({"x", "y", "z"}, {0.5, 1.0, 2.0, 3.0},
                               {kPi / 4.0, kPi / 2.0}));
    double dev = 0.0;
    for (const ScanRow& row : rows) {
        dev = std::max(dev, std::abs(row.entropy_bits - 1.0));
        dev = std::max(dev, row.spectrum_deviation);
    }
    double iso_dev = 0.0;
    const FourVector rest{1.0, 0.0, 0.0, 0.0};
    for (double eta : {0.5, 1.0, 2.0, 3.0})
        for (Axis3 axis : {Axis3{1, 0, 0}, Axis3{0, 1, 0}, Axis3{0, 0, 1}})
            iso_dev = std::max(iso_dev, spin_subspace_isometry_deviation(
                                            boost(axis, eta), rest, 1.0));
    report(13, "entanglement-invariance", dev <= 1e-9 && iso_dev <= 1e-10,
           std::max(dev, iso_dev), 1e-9);
}

void criterion_14_coupling() {
    const double j = coupling_J(1.0, 1.0, 1.0 / 137.035999).j;
    const double dev = std::abs(j - (-1.82433814343923e-3));
    report(14, "coupling-constant", dev <= 1e-8, dev, 1e-8);
}

void criterion_15_cli_determinism(const std::string& cli) {
    const char* tmpdir = std::getenv("TMPDIR");
    const std::string base = std::string(tmpdir ? tmpdir : "/tmp") + "/scan_";
    bool pass = true;
    std::string first;
    for (int run = 0; run < 2; ++run) {
        const std::string path = base + std::to_string(run) + ".json";
        const std::string cmd = "\"" + cli +
                                "\" invariance-scan --format json --seed 7"
                                " --out \"" + path + "\"";
        if (std::system(cmd.c_str()) != 0) {
            pass = false;
            break;
        }
        std::ifstream f(path, std::ios::binary);
        std::ostringstream buf;
        buf << f.rdbuf();
        if (run == 0)
            first = buf.str();
        else
            pass = pass && !first.empty() && first == buf.str();
    }
    report(15, "cli-determinism", pass, pass ? 0.0 : 1.0, 0.0);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-spinor-epr-cli>\n";
        return 2;
    }
    criterion_1_clifford_metric();
    criterion_2_dirac_covariance();
    criterion_3_intertwining();
    criterion_4_boost_concordance();
    criterion_5_antisymmetry();
    criterion_6_ward();
    criterion_7_frame_independence();
    criterion_8_nr_reduction();
    criterion_9_curl_form();
    criterion_10_spectrum();
    criterion_11_evolution();
    criterion_12_epr_generation();
    criterion_13_invariance();
    criterion_14_coupling();
    criterion_15_cli_determinism(argv[1]);
    if (g_failures > 0) {
        std::printf("%d criteria FAILED\n", g_failures);
        return 1;
    }
    std::printf("all 15 criteria passed\n");
    return 0;
}
