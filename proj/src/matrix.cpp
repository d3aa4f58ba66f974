#include "spinor_epr/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace spinor_epr {

namespace {

const char* error_names[] = {
    "NotHermitian",
    "NegativeEigenvalue",
    "DimensionMismatch",
    "NotNormalized",
    "NotDensityMatrix",
    "OffShell",
    "NotNormalizedSpinor",
    "NonUnitAxis",
    "SingularKinematics",
    "MomentumNotConserved",
    "ZeroMomentumTransfer",
    "ZeroSeparation",
    "StepTooLarge",
    "NonPositiveInput",
    "NonPositiveR",
    "NotAtRest",
    "IndefiniteInitialSpin",
    "ZeroState",
    "NonOrthogonalSpinBasis",
};

} // namespace

const char* error_kind_name(ErrorKind kind) {
    return error_names[static_cast<int>(kind)];
}

Matrix::Matrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw Error(ErrorKind::DimensionMismatch, "ragged initializer");
        a_.insert(a_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols);
}

Matrix Matrix::adjoint() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(j, i) = std::conj((*this)(i, j));
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

cplx Matrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double Matrix::hermiticity_deviation() const {
    if (rows_ != cols_) return std::numeric_limits<double>::infinity();
    double dev = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            dev = std::max(dev,
                           std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return dev;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix sum");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix difference");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= other.a_[k];
    return *this;
}

Matrix& Matrix::operator*=(cplx scale) {
    for (cplx& v : a_) v *= scale;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw Error(ErrorKind::DimensionMismatch, "matrix product");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

double Vector::norm() const {
    double s = 0.0;
    for (const cplx& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

Vector& Vector::operator+=(const Vector& other) {
    if (dim() != other.dim())
        throw Error(ErrorKind::DimensionMismatch, "vector sum");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
    return *this;
}

Vector& Vector::operator*=(cplx scale) {
    for (cplx& v : a_) v *= scale;
    return *this;
}

cplx inner(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim())
        throw Error(ErrorKind::DimensionMismatch, "inner product");
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

Vector operator*(const Matrix& m, const Vector& v) {
    if (m.cols() != v.dim())
        throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
    Vector r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return c;
}

Vector kron(const Vector& a, const Vector& b) {
    Vector c(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < b.dim(); ++k)
            c[i * b.dim() + k] = a[i] * b[k];
    return c;
}

namespace {

EigenSystem eigensystem_2x2(const Matrix& h) {
    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const cplx b = h(0, 1);
    const double mean = 0.5 * (a + d);
    const double disc = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));

    EigenSystem es;
    es.values = {mean - disc, mean + disc};
    es.vectors = Matrix::identity(2);
    if (std::abs(b) > 1e-300) {
        for (int k = 0; k < 2; ++k) {
            cplx v0 = b;
            cplx v1 = es.values[k] - a;
            const double n = std::sqrt(std::norm(v0) + std::norm(v1));
            es.vectors(0, k) = v0 / n;
            es.vectors(1, k) = v1 / n;
        }
    } else if (a > d) {
        // diagonal but unsorted
        es.vectors(0, 0) = 0.0;
        es.vectors(1, 0) = 1.0;
        es.vectors(0, 1) = 1.0;
        es.vectors(1, 1) = 0.0;
    }
    return es;
}

double off_diagonal_max(const Matrix& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) m = std::max(m, std::abs(a(i, j)));
    return m;
}

EigenSystem eigensystem_jacobi(const Matrix& h) {
    const std::size_t n = h.rows();
    Matrix a = h;
    Matrix v = Matrix::identity(n);
    const double scale = std::max(a.max_abs(), 1.0);
    const double threshold = 1e-13 * scale;

    for (int sweep = 0; sweep < 100 && off_diagonal_max(a) > threshold;
         ++sweep) {
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= threshold * 1e-2) continue;
                const cplx w = apq / mag; // phase of the pivot
                const double tau =
                    (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                double t;
                if (tau == 0.0)
                    t = 1.0;
                else
                    t = (tau > 0 ? 1.0 : -1.0) /
                        (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // columns: A <- A U with U = [[c, s w], [-s conj(w), c]]
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx aip = a(i, p);
                    const cplx aiq = a(i, q);
                    a(i, p) = c * aip - s * std::conj(w) * aiq;
                    a(i, q) = s * w * aip + c * aiq;
                }
                // rows: A <- U^dagger A
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx apj = a(p, j);
                    const cplx aqj = a(q, j);
                    a(p, j) = c * apj - s * w * aqj;
                    a(q, j) = s * std::conj(w) * apj + c * aqj;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx vip = v(i, p);
                    const cplx viq = v(i, q);
                    v(i, p) = c * vip - s * std::conj(w) * viq;
                    v(i, q) = s * w * vip + c * viq;
                }
            }
    }

    EigenSystem es;
    es.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) es.values[i] = a(i, i).real();

    // sort ascending, carrying the eigenvector columns along
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) {
        return es.values[i] < es.values[j];
    });
    EigenSystem sorted;
    sorted.values.resize(n);
    sorted.vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        sorted.values[k] = es.values[order[k]];
        for (std::size_t i = 0; i < n; ++i)
            sorted.vectors(i, k) = v(i, order[k]);
    }
    return sorted;
}

} // namespace

EigenSystem hermitian_eigensystem(const Matrix& h) {
    if (h.rows() != h.cols())
        throw Error(ErrorKind::DimensionMismatch, "eigensystem of non-square");
    if (!h.is_hermitian(1e-12 * std::max(1.0, h.max_abs())))
        throw Error(ErrorKind::NotHermitian, "eigensystem input");
    if (h.rows() == 1) {
        EigenSystem es;
        es.values = {h(0, 0).real()};
        es.vectors = Matrix::identity(1);
        return es;
    }
    if (h.rows() == 2) return eigensystem_2x2(h);
    return eigensystem_jacobi(h);
}

Matrix hermitian_sqrt(const Matrix& h) {
    const double scale = std::max(1.0, h.max_abs());
    if (h.rows() != h.cols() || !h.is_hermitian(1e-12 * scale))
        throw Error(ErrorKind::NotHermitian, "hermitian_sqrt input");
    EigenSystem es = hermitian_eigensystem(h);
    const std::size_t n = h.rows();
    Matrix r(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        double lambda = es.values[k];
        if (lambda < -1e-9 * scale)
            throw Error(ErrorKind::NegativeEigenvalue,
                        "eigenvalue " + std::to_string(lambda));
        lambda = std::max(lambda, 0.0);
        const double root = std::sqrt(lambda);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                r(i, j) +=
                    root * es.vectors(i, k) * std::conj(es.vectors(j, k));
    }
    return r;
}

Matrix matrix_exp(const Matrix& a) {
    if (a.rows() != a.cols())
        throw Error(ErrorKind::DimensionMismatch, "matrix_exp of non-square");
    const std::size_t n = a.rows();

    int squarings = 0;
    double norm = a.max_abs() * static_cast<double>(n);
    while (norm > 0.5 && squarings < 60) {
        norm *= 0.5;
        ++squarings;
    }
    const double scale = std::ldexp(1.0, -squarings);
    Matrix t = cplx(scale) * a;

    Matrix result = Matrix::identity(n);
    Matrix term = Matrix::identity(n);
    for (int k = 1; k <= 60; ++k) {
        term = term * t;
        term *= cplx(1.0 / k);
        result += term;
        if (term.max_abs() <= 1e-18 * std::max(1.0, result.max_abs())) break;
    }
    for (int k = 0; k < squarings; ++k) result = result * result;
    return result;
}

Matrix partial_trace(const Matrix& rho, int keep, std::size_t dim_a,
                     std::size_t dim_b) {
    if (rho.rows() != rho.cols() || rho.rows() != dim_a * dim_b)
        throw Error(ErrorKind::DimensionMismatch, "partial_trace dimensions");
    if (keep != 1 && keep != 2)
        throw Error(ErrorKind::DimensionMismatch, "keep must be 1 or 2");

    if (keep == 1) {
        Matrix out(dim_a, dim_a);
        for (std::size_t i = 0; i < dim_a; ++i)
            for (std::size_t j = 0; j < dim_a; ++j)
                for (std::size_t k = 0; k < dim_b; ++k)
                    out(i, j) += rho(i * dim_b + k, j * dim_b + k);
        return out;
    }
    Matrix out(dim_b, dim_b);
    for (std::size_t k = 0; k < dim_b; ++k)
        for (std::size_t l = 0; l < dim_b; ++l)
            for (std::size_t i = 0; i < dim_a; ++i)
                out(k, l) += rho(i * dim_b + k, i * dim_b + l);
    return out;
}

std::vector<double> schmidt_coefficients(const Vector& psi, std::size_t dim_a,
                                         std::size_t dim_b) {
    if (psi.dim() != dim_a * dim_b)
        throw Error(ErrorKind::DimensionMismatch, "schmidt reshape");
    const double n2 = psi.norm();
    if (std::abs(n2 * n2 - 1.0) > 1e-10)
        throw Error(ErrorKind::NotNormalized,
                    "|<psi,psi>| = " + std::to_string(n2 * n2));

    // squared singular values of the dim_a x dim_b reshaping M are the
    // eigenvalues of M M^dagger
    Matrix mmh(dim_a, dim_a);
    for (std::size_t i = 0; i < dim_a; ++i)
        for (std::size_t j = 0; j < dim_a; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < dim_b; ++k)
                s += psi[i * dim_b + k] * std::conj(psi[j * dim_b + k]);
            mmh(i, j) = s;
        }
    EigenSystem es = hermitian_eigensystem(mmh);
    std::vector<double> coeffs(es.values.rbegin(), es.values.rend());
    for (double& c : coeffs) c = std::max(c, 0.0);
    return coeffs;
}

double spectrum_entropy(const std::vector<double>& probs) {
    double s = 0.0;
    for (double p : probs)
        if (p > 1e-12) s -= p * std::log2(p);
    return s;
}

double von_neumann_entropy(const Matrix& rho) {
    const std::size_t n = rho.rows();
    if (rho.cols() != n)
        throw Error(ErrorKind::NotDensityMatrix, "non-square");
    if (!rho.is_hermitian(1e-10))
        throw Error(ErrorKind::NotDensityMatrix, "not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-10 ||
        std::abs(rho.trace().imag()) > 1e-10)
        throw Error(ErrorKind::NotDensityMatrix, "trace != 1");
    EigenSystem es = hermitian_eigensystem(rho);
    for (double lambda : es.values)
        if (lambda < -1e-10 || lambda > 1.0 + 1e-10)
            throw Error(ErrorKind::NotDensityMatrix,
                        "eigenvalue " + std::to_string(lambda));
    return spectrum_entropy(es.values);
}

} // namespace spinor_epr
