#include "qpr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qpr {

namespace {

// Zero A(p,q) by a unitary similarity built from the exact eigenvectors of the
// 2x2 Hermitian block.  Returns the 2x2 rotation as (a b; c d), applied as
// A <- J^H A J with J acting on columns p, q.
struct Rot {
    cxd a, b, c, d;
};

Rot block_rotation(double app, double aqq, cxd apq) {
    const double w = std::abs(apq);
    const double delta = 0.5 * (app - aqq);
    const double r = std::hypot(delta, w);
    // eigenvalues mid +- r with mid = (app+aqq)/2
    const double lam1 = 0.5 * (app + aqq) + r;
    // eigenvector for lam1 of [[app, apq],[conj(apq), aqq]]
    cxd v0, v1;
    if (std::abs(lam1 - aqq) >= std::abs(lam1 - app)) {
        v0 = lam1 - aqq;
        v1 = std::conj(apq);
    } else {
        v0 = apq;
        v1 = lam1 - app;
    }
    double n = std::sqrt(std::norm(v0) + std::norm(v1));
    if (n == 0.0) return {1.0, 0.0, 0.0, 1.0};
    v0 /= n;
    v1 /= n;
    // order columns so the rotation stays close to identity
    if (std::abs(v0) >= std::abs(v1)) {
        return {v0, -std::conj(v1), v1, std::conj(v0)};
    }
    return {-std::conj(v1), v0, std::conj(v0), v1};
}

double offdiag_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

Spectrum herm_eig(const ComplexMatrix& h, double herm_tol) {
    if (!h.is_hermitian(herm_tol))
        throw validation_error("herm_eig: input is not Hermitian within tolerance");

    const int d = h.dim();
    ComplexMatrix a = h;
    // work on the exactly Hermitian part
    for (int i = 0; i < d; ++i) {
        a(i, i) = std::real(a(i, i));
        for (int j = i + 1; j < d; ++j) {
            cxd avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(d);

    const double scale = std::max(1.0, a.frobenius_norm());
    const double conv = 1e-13 * scale;
    const int max_sweeps = 80;
    for (int sweep = 0; sweep < max_sweeps && offdiag_norm(a) > conv; ++sweep) {
        for (int p = 0; p < d - 1; ++p) {
            for (int q = p + 1; q < d; ++q) {
                if (std::abs(a(p, q)) <= 1e-300) continue;
                Rot j = block_rotation(std::real(a(p, p)), std::real(a(q, q)), a(p, q));
                // A <- A J  (columns p,q)
                for (int i = 0; i < d; ++i) {
                    const cxd aip = a(i, p), aiq = a(i, q);
                    a(i, p) = aip * j.a + aiq * j.c;
                    a(i, q) = aip * j.b + aiq * j.d;
                }
                // A <- J^H A  (rows p,q)
                for (int i = 0; i < d; ++i) {
                    const cxd api = a(p, i), aqi = a(q, i);
                    a(p, i) = std::conj(j.a) * api + std::conj(j.c) * aqi;
                    a(q, i) = std::conj(j.b) * api + std::conj(j.d) * aqi;
                }
                // V <- V J
                for (int i = 0; i < d; ++i) {
                    const cxd vip = v(i, p), viq = v(i, q);
                    v(i, p) = vip * j.a + viq * j.c;
                    v(i, q) = vip * j.b + viq * j.d;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }
    if (offdiag_norm(a) > 1e3 * conv)
        throw validation_error("herm_eig: Jacobi sweeps did not converge");

    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return std::real(a(i, i)) > std::real(a(j, j)); });

    Spectrum s;
    s.values.resize(d);
    s.basis = ComplexMatrix(d);
    for (int c = 0; c < d; ++c) {
        s.values[c] = std::real(a(order[c], order[c]));
        for (int r = 0; r < d; ++r) s.basis(r, c) = v(r, order[c]);
    }
    return s;
}

double hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("hs_inner: dimension mismatch");
    cxd s{};
    const int d = a.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) s += a(i, j) * b(j, i);
    return std::real(s);
}

double hs_inner(const HermitianOperator& a, const HermitianOperator& b) {
    return hs_inner(a.matrix(), b.matrix());
}

double hs_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c = a;
    c -= b;
    return c.max_abs();
}

}  // namespace qpr
