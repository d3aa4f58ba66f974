#include <doctest.h>

#include <cmath>
#include <random>

#include "spinor_epr/matrix.hpp"

using namespace spinor_epr;

namespace {

Matrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = cplx(u(rng), u(rng));
    return cplx(0.5) * (a + a.adjoint());
}

} // namespace

TEST_CASE("kronecker product is bilinear and associative") {
    const Matrix a{{cplx(1, 2), cplx(0, -1)}, {cplx(3, 0), cplx(2, 2)}};
    const Matrix b{{cplx(0, 1), cplx(1, 1)}, {cplx(-2, 0), cplx(0, 0)}};
    const Matrix c{{cplx(1, 0), cplx(0, 0)}, {cplx(0, 0), cplx(-1, 0)}};

    Matrix lhs = kron(a + b, c);
    Matrix rhs = kron(a, c) + kron(b, c);
    CHECK((lhs - rhs).max_abs() < 1e-14);

    lhs = kron(kron(a, b), c);
    rhs = kron(a, kron(b, c));
    CHECK((lhs - rhs).max_abs() < 1e-14);

    // mixed-product identity (AC) x (BD) = (A x B)(C x D)
    lhs = kron(a * c, b * c);
    rhs = kron(a, b) * kron(c, c);
    CHECK((lhs - rhs).max_abs() < 1e-12);
}

TEST_CASE("hermitian eigensystem reconstructs the input") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        for (std::size_t n : {std::size_t(2), std::size_t(3), std::size_t(4),
                              std::size_t(6)}) {
            const Matrix a = random_hermitian(rng, n);
            const EigenSystem es = hermitian_eigensystem(a);
            Matrix recon(n, n);
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        recon(i, j) += es.values[k] *
                                       es.vectors(i, k) *
                                       std::conj(es.vectors(j, k));
            CHECK((recon - a).max_abs() < 1e-12);
            for (std::size_t k = 0; k + 1 < n; ++k)
                CHECK(es.values[k] <= es.values[k + 1] + 1e-14);
        }
    }
}

TEST_CASE("hermitian square root of 1.25 I - 0.75 sigma_x") {
    const Matrix a{{cplx(1.25), cplx(-0.75)}, {cplx(-0.75), cplx(1.25)}};
    const Matrix s = hermitian_sqrt(a);
    // closed form: s = p I + q sigma_x with p = (sqrt2 + sqrt0.5)/2,
    // q = (sqrt0.5 - sqrt2)/2
    const double p = (std::sqrt(2.0) + std::sqrt(0.5)) / 2.0;
    const double q = (std::sqrt(0.5) - std::sqrt(2.0)) / 2.0;
    CHECK(std::abs(s(0, 0) - cplx(p)) < 1e-14);
    CHECK(std::abs(s(0, 1) - cplx(q)) < 1e-14);
    CHECK(std::abs(s(1, 0) - cplx(q)) < 1e-14);
    CHECK(std::abs(s(1, 1) - cplx(p)) < 1e-14);
    CHECK((s * s - a).max_abs() < 1e-13);
}

TEST_CASE("hermitian square root squares back for random PSD matrices") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        const Matrix h = random_hermitian(rng, 4);
        const Matrix psd = h * h; // positive semidefinite by construction
        const Matrix s = hermitian_sqrt(psd);
        CHECK((s * s - psd).max_abs() < 1e-10);
        CHECK(s.hermiticity_deviation() < 1e-12);
    }
}

TEST_CASE("hermitian square root rejects bad input") {
    const Matrix not_herm{{cplx(0, 1), cplx(0)}, {cplx(0), cplx(1)}};
    CHECK_THROWS_AS(hermitian_sqrt(not_herm), Error);
    const Matrix negative{{cplx(-1), cplx(0)}, {cplx(0), cplx(1)}};
    try {
        hermitian_sqrt(negative);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NegativeEigenvalue);
    }
}

TEST_CASE("matrix exponential of i*theta*sigma_x") {
    const double theta = 0.731;
    const Matrix sx{{cplx(0), cplx(1)}, {cplx(1), cplx(0)}};
    const Matrix e = matrix_exp(cplx(0, theta) * sx);
    const Matrix expected =
        cplx(std::cos(theta)) * Matrix::identity(2) + cplx(0, std::sin(theta)) * sx;
    CHECK((e - expected).max_abs() < 1e-14);
    CHECK((matrix_exp(Matrix::zero(3, 3)) - Matrix::identity(3)).max_abs() ==
          0.0);
}

TEST_CASE("matrix exponential handles large norms via scaling") {
    const Matrix sx{{cplx(0), cplx(1)}, {cplx(1), cplx(0)}};
    const double a = 25.0;
    const Matrix e = matrix_exp(cplx(a) * sx);
    // exp(a sigma_x) = cosh(a) I + sinh(a) sigma_x
    const Matrix expected =
        cplx(std::cosh(a)) * Matrix::identity(2) + cplx(std::sinh(a)) * sx;
    CHECK((e - expected).max_abs() / std::cosh(a) < 1e-13);
}

TEST_CASE("partial trace of a product state factorizes") {
    const Vector a{cplx(0.6), cplx(0, 0.8)};
    const Vector b{cplx(1.0 / std::sqrt(2.0)), cplx(-1.0 / std::sqrt(2.0))};
    const Vector psi = kron(a, b);
    Matrix rho(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rho(i, j) = psi[i] * std::conj(psi[j]);
    const Matrix rho_a = partial_trace(rho, 1, 2, 2);
    Matrix expected(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) expected(i, j) = a[i] * std::conj(a[j]);
    CHECK((rho_a - expected).max_abs() < 1e-14);
    CHECK(std::abs(rho_a.trace() - cplx(1.0)) < 1e-14);
    const Matrix rho_b = partial_trace(rho, 2, 2, 2);
    CHECK(std::abs(rho_b.trace() - cplx(1.0)) < 1e-14);
}

TEST_CASE("schmidt coefficients of product and maximally entangled states") {
    const Vector product{cplx(1), cplx(0), cplx(0), cplx(0)};
    auto sp = schmidt_coefficients(product, 2, 2);
    CHECK(std::abs(sp[0] - 1.0) < 1e-14);
    CHECK(std::abs(sp[1]) < 1e-14);

    const double inv = 1.0 / std::sqrt(2.0);
    const Vector bell{cplx(inv), cplx(0), cplx(0), cplx(inv)};
    auto sb = schmidt_coefficients(bell, 2, 2);
    CHECK(std::abs(sb[0] - 0.5) < 1e-14);
    CHECK(std::abs(sb[1] - 0.5) < 1e-14);
    CHECK(std::abs(spectrum_entropy(sb) - 1.0) < 1e-12);

    const Vector unnormalized{cplx(2), cplx(0), cplx(0), cplx(0)};
    CHECK_THROWS_AS(schmidt_coefficients(unnormalized, 2, 2), Error);
}

TEST_CASE("entropy of diag(0.25, 0.75)") {
    Matrix rho(2, 2);
    rho(0, 0) = 0.25;
    rho(1, 1) = 0.75;
    const double expected = 0.811278124459133; // -sum p log2 p
    CHECK(std::abs(von_neumann_entropy(rho) - expected) < 1e-12);
}

TEST_CASE("von Neumann entropy validates the density matrix") {
    Matrix bad_trace(2, 2);
    bad_trace(0, 0) = 0.9;
    bad_trace(1, 1) = 0.9;
    CHECK_THROWS_AS(von_neumann_entropy(bad_trace), Error);
    Matrix not_herm(2, 2);
    not_herm(0, 0) = 0.5;
    not_herm(1, 1) = 0.5;
    not_herm(0, 1) = cplx(0.3, 0.1);
    not_herm(1, 0) = cplx(0.1, 0.3);
    CHECK_THROWS_AS(von_neumann_entropy(not_herm), Error);
}
