#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "spinor_epr/error.hpp"

namespace spinor_epr {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. Sized for this problem: everything in
/// the toolkit is between 2x2 and 16x16, so no attempt is made at being a
/// general linear algebra package.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    Matrix adjoint() const;
    Matrix transpose() const;
    cplx trace() const;

    /// max_{ij} |a_ij|
    double max_abs() const;
    double frobenius_norm() const;
    /// max |A - A^dagger| entry
    double hermiticity_deviation() const;
    bool is_hermitian(double tol = 1e-12) const {
        return hermiticity_deviation() <= tol;
    }

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(cplx scale);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(cplx s, Matrix a) { return a *= s; }
    friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
    Matrix operator-() const { return cplx(-1.0) * (*this); }
    friend Matrix operator*(const Matrix& a, const Matrix& b);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> a_;
};

/// Dense complex vector.
class Vector {
  public:
    Vector() = default;
    explicit Vector(std::size_t dim) : a_(dim) {}
    Vector(std::initializer_list<cplx> entries) : a_(entries) {}

    std::size_t dim() const { return a_.size(); }
    cplx& operator[](std::size_t i) { return a_[i]; }
    const cplx& operator[](std::size_t i) const { return a_[i]; }

    double norm() const;
    Vector& operator+=(const Vector& other);
    Vector& operator*=(cplx scale);
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator*(cplx s, Vector a) { return a *= s; }

  private:
    std::vector<cplx> a_;
};

/// <a, b> = sum conj(a_i) b_i
cplx inner(const Vector& a, const Vector& b);
Vector operator*(const Matrix& m, const Vector& v);

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

/// Eigendecomposition of a Hermitian matrix: values ascending, vectors in
/// the columns of `vectors`. 2x2 is closed-form (trace/determinant); larger
/// matrices go through cyclic Jacobi with off-diagonal threshold 1e-13.
struct EigenSystem {
    std::vector<double> values;
    Matrix vectors;
};
EigenSystem hermitian_eigensystem(const Matrix& h);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-1e-9, 0) are clamped to zero; anything below -1e-9 is an error.
Matrix hermitian_sqrt(const Matrix& h);

/// Scaling-and-squaring matrix exponential (series to machine precision;
/// dimensions <= 16 keep conditioning a non-issue).
Matrix matrix_exp(const Matrix& a);

/// Partial trace of a (dim_a*dim_b)-dimensional density operator.
/// keep = 1 returns the dim_a x dim_a reduction, keep = 2 the dim_b x dim_b.
Matrix partial_trace(const Matrix& rho, int keep, std::size_t dim_a,
                     std::size_t dim_b);

/// Squared singular values of the dim_a x dim_b reshaping of a normalized
/// pure state, sorted descending. They sum to 1.
std::vector<double> schmidt_coefficients(const Vector& psi, std::size_t dim_a,
                                         std::size_t dim_b);

/// -sum lambda log2 lambda of a unit-trace Hermitian PSD matrix, in bits.
/// Eigenvalues below 1e-12 are treated as exactly zero.
double von_neumann_entropy(const Matrix& rho);

/// Same entropy over an explicit probability list (e.g. a Schmidt spectrum).
double spectrum_entropy(const std::vector<double>& probs);

} // namespace spinor_epr
