#pragma once

#include <optional>
#include <stdexcept>

#include "qpr/complex_matrix.hpp"

namespace qpr {

class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Eigenvalues sorted nonincreasing; basis columns aligned with values.
struct Spectrum {
    std::vector<double> values;
    ComplexMatrix basis;

    double min() const { return values.back(); }
    double max() const { return values.front(); }
    double l1_norm() const {
        double s = 0.0;
        for (double v : values) s += std::abs(v);
        return s;
    }
    cvec eigenvector(int r) const {
        cvec v(basis.dim());
        for (int i = 0; i < basis.dim(); ++i) v[i] = basis(i, r);
        return v;
    }
};

// Cyclic Jacobi eigensolver for complex Hermitian matrices.
// Throws validation_error if the input is not Hermitian within herm_tol.
Spectrum herm_eig(const ComplexMatrix& h, double herm_tol = 1e-12);

class HermitianOperator {
public:
    explicit HermitianOperator(ComplexMatrix m, double herm_tol = 1e-12)
        : m_(std::move(m)), spec_(herm_eig(m_, herm_tol)) {
        // symmetrize so downstream algebra sees an exactly Hermitian matrix
        for (int i = 0; i < m_.dim(); ++i) {
            m_(i, i) = std::real(m_(i, i));
            for (int j = i + 1; j < m_.dim(); ++j) {
                cxd avg = 0.5 * (m_(i, j) + std::conj(m_(j, i)));
                m_(i, j) = avg;
                m_(j, i) = std::conj(avg);
            }
        }
    }

    int dim() const { return m_.dim(); }
    const ComplexMatrix& matrix() const { return m_; }
    const Spectrum& spectrum() const { return spec_; }
    const std::vector<double>& eigenvalues() const { return spec_.values; }
    double min_eigenvalue() const { return spec_.min(); }
    double max_eigenvalue() const { return spec_.max(); }
    double trace() const { return std::real(m_.trace()); }

private:
    ComplexMatrix m_;
    Spectrum spec_;
};

// tr(AB), real for Hermitian inputs.
double hs_inner(const HermitianOperator& a, const HermitianOperator& b);
double hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

// max-norm of A - B
double hs_distance(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qpr
