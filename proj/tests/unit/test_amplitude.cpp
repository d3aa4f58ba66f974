#include <doctest.h>

#include <cmath>
#include <random>

#include "spinor_epr/lorentz.hpp"
#include "spinor_epr/qed_amplitude.hpp"

using namespace spinor_epr;

namespace {

constexpr double kPi = 3.14159265358979323846;

Spin coin(std::mt19937_64& rng) { return rng() % 2 ? Spin::Up : Spin::Down; }

ScatteringKinematics random_elastic(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mag(0.1, 2.0);
    std::uniform_real_distribution<double> ang(0.3, kPi - 0.3);
    std::uniform_real_distribution<double> phi(-kPi, kPi);
    return elastic_kinematics(1.0, 0.303, mag(rng), ang(rng), coin(rng),
                              coin(rng), coin(rng), coin(rng), phi(rng));
}

} // namespace

TEST_CASE("total amplitude negates under an outgoing-label swap") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 300; ++trial) {
        const ScatteringKinematics k = random_elastic(rng);
        const Amplitude a = tree_amplitude(k);
        ScatteringKinematics swapped = k;
        std::swap(swapped.p1_out, swapped.p2_out);
        std::swap(swapped.s1_out, swapped.s2_out);
        const Amplitude b = tree_amplitude(swapped);
        const double scale = std::max(std::abs(a.value), 1e-300);
        CHECK(std::abs(a.value + b.value) / scale <= 1e-10);
        // the swap exchanges the two diagrams
        CHECK(std::abs(a.direct_term - b.exchange_term) / scale <= 1e-10);
    }
}

TEST_CASE("currents are transverse to the momentum transfer") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 300; ++trial) {
        const ScatteringKinematics k = random_elastic(rng);
        const DiracSpinor u1 = u_spinor(k.p1, k.s1, k.mass);
        const DiracSpinor u1o = u_spinor(k.p1_out, k.s1_out, k.mass);
        const std::array<cplx, 4> j = current(u1o, u1);
        const FourVector q = k.p1_out - k.p1;
        const cplx qj = cplx(q.t) * j[0] - cplx(q.x) * j[1] -
                        cplx(q.y) * j[2] - cplx(q.z) * j[3];
        double jn = 0.0;
        for (const cplx& c : j) jn += std::norm(c);
        jn = std::sqrt(jn);
        CHECK(std::abs(qj) <= 1e-9 * jn);
    }
}

TEST_CASE("|M| is frame independent") {
    std::mt19937_64 rng(616);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const ScatteringKinematics k = random_elastic(rng);
        const Amplitude a = tree_amplitude(k);

        Axis3 axis{u(rng), u(rng), u(rng)};
        const double n =
            std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
        if (n < 1e-3) continue;
        for (double& c : axis) c /= n;
        const LorentzTransform t = compose(rotation(axis, kPi * u(rng)),
                                           boost(axis, 2.0 * u(rng)));

        const Amplitude b = tree_amplitude(
            transform_spinor(t, u_spinor(k.p1, k.s1, k.mass)),
            transform_spinor(t, u_spinor(k.p2, k.s2, k.mass)),
            transform_spinor(t, u_spinor(k.p1_out, k.s1_out, k.mass)),
            transform_spinor(t, u_spinor(k.p2_out, k.s2_out, k.mass)),
            k.coupling_e);
        CHECK(std::abs(std::abs(b.value) - std::abs(a.value)) <=
              1e-8 * std::abs(a.value));
    }
}

TEST_CASE("forward scattering hits the photon pole") {
    try {
        tree_amplitude(elastic_kinematics(1.0, 0.3, 0.5, 0.0, Spin::Up,
                                          Spin::Down, Spin::Up, Spin::Down));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingularKinematics);
    }
}

TEST_CASE("validate rejects broken kinematics") {
    ScatteringKinematics k = elastic_kinematics(
        1.0, 0.3, 0.5, 1.0, Spin::Up, Spin::Up, Spin::Up, Spin::Up);
    CHECK_NOTHROW(validate(k));
    ScatteringKinematics broken = k;
    broken.p1_out.x += 1e-3;
    CHECK_THROWS_AS(validate(broken), Error);
    ScatteringKinematics off = k;
    off.p2.t *= 1.5;
    try {
        validate(off);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OffShell);
    }
}

TEST_CASE("low-momentum current identity closes quadratically") {
    const double mass = 1.0;
    const TwoSpinor up{cplx(1.0), cplx(0.0)};
    const TwoSpinor mixed{cplx(std::sqrt(0.5)), cplx(0.0, std::sqrt(0.5))};
    const auto deviation = [&](double delta) {
        const FourVector p =
            on_shell_momentum(mass, delta * mass, 0.0, 0.2 * delta * mass);
        const FourVector pp =
            on_shell_momentum(mass, -0.3 * delta * mass, delta * mass, 0.0);
        return gordon_check(p, pp, up, mixed, mass);
    };
    const double d1 = deviation(0.1);
    const double d2 = deviation(0.05);
    CHECK(d1 / d2 > 3.5);
    CHECK(d1 / d2 < 4.5);
}
