#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace qpr {

using cxd = std::complex<double>;
using cvec = std::vector<cxd>;

// Square complex matrix, row-major. Everything in this library is square.
class ComplexMatrix {
public:
    ComplexMatrix() : dim_(0) {}
    explicit ComplexMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {
        if (dim < 1) throw std::invalid_argument("ComplexMatrix: dim must be >= 1");
    }
    ComplexMatrix(int dim, std::vector<cxd> entries) : dim_(dim), a_(std::move(entries)) {
        if (dim < 1 || a_.size() != static_cast<size_t>(dim) * dim)
            throw std::invalid_argument("ComplexMatrix: entry count does not match dim");
    }

    static ComplexMatrix identity(int dim) {
        ComplexMatrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }
    static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }

    // |u><v|
    static ComplexMatrix outer(const cvec& u, const cvec& v) {
        if (u.size() != v.size()) throw std::invalid_argument("outer: size mismatch");
        ComplexMatrix m(static_cast<int>(u.size()));
        for (int i = 0; i < m.dim_; ++i)
            for (int j = 0; j < m.dim_; ++j) m(i, j) = u[i] * std::conj(v[j]);
        return m;
    }

    int dim() const { return dim_; }
    cxd& operator()(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
    const cxd& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }
    const std::vector<cxd>& data() const { return a_; }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        check_dim(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        check_dim(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    ComplexMatrix& operator*=(cxd s) {
        for (auto& x : a_) x *= s;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cxd s) { return a *= s; }
    friend ComplexMatrix operator*(cxd s, ComplexMatrix a) { return a *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        a.check_dim(b);
        const int d = a.dim_;
        ComplexMatrix c(d);
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) {
                const cxd aik = a(i, k);
                if (aik == cxd{}) continue;
                for (int j = 0; j < d; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    cvec apply(const cvec& v) const {
        if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("apply: size mismatch");
        cvec w(dim_);
        for (int i = 0; i < dim_; ++i) {
            cxd s{};
            for (int j = 0; j < dim_; ++j) s += (*this)(i, j) * v[j];
            w[i] = s;
        }
        return w;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix m(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
        return m;
    }

    cxd trace() const {
        cxd t{};
        for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& x : a_) m = std::max(m, std::abs(x));
        return m;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& x : a_) s += std::norm(x);
        return std::sqrt(s);
    }

    double hermiticity_defect() const {
        double m = 0.0;
        for (int i = 0; i < dim_; ++i)
            for (int j = i; j < dim_; ++j)
                m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return m;
    }

    bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

    double unitarity_defect() const {
        ComplexMatrix p = adjoint() * (*this);
        p -= identity(dim_);
        return p.max_abs();
    }

private:
    void check_dim(const ComplexMatrix& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
    }

    int dim_;
    std::vector<cxd> a_;
};

inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int da = a.dim(), db = b.dim();
    ComplexMatrix c(da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) {
            const cxd aij = a(i, j);
            for (int k = 0; k < db; ++k)
                for (int l = 0; l < db; ++l) c(i * db + k, j * db + l) = aij * b(k, l);
        }
    return c;
}

inline cxd inner(const cvec& u, const cvec& v) {
    cxd s{};
    for (size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
    return s;
}

inline double norm(const cvec& v) { return std::sqrt(std::real(inner(v, v))); }

}  // namespace qpr
