#include "qpr/symmetry.hpp"

#include <cmath>

namespace qpr {

SymmetryVerdict classify(const TransferMatrix& t, double tol) {
    if (t.kind != TransferKind::unitary)
        throw std::invalid_argument("classify: transfer matrix must come from a unitary");
    SymmetryVerdict v;
    const int n = t.size();
    v.min_entry = t(0, 0);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            if (t(j, k) < v.min_entry) {
                v.min_entry = t(j, k);
                v.min_j = j;
                v.min_k = k;
            }
    if (v.min_entry < -tol) return v;

    // orthogonal + stochastic forces a permutation; snap and read it off
    v.permutation = true;
    v.sigma.assign(n, -1);
    std::vector<bool> used(n, false);
    for (int k = 0; k < n; ++k) {
        int hit = -1;
        for (int j = 0; j < n; ++j) {
            const double e = t(j, k);
            if (std::abs(e - 1.0) <= std::max(tol, 1e-6)) {
                hit = j;
            } else if (std::abs(e) > std::max(tol, 1e-6)) {
                hit = -1;
                break;
            }
        }
        if (hit < 0 || used[hit]) {
            v.permutation = false;
            v.sigma.clear();
            return v;
        }
        used[hit] = true;
        v.sigma[k] = hit;  // U Q_k U^dag = Q_sigma(k)
    }
    return v;
}

std::optional<std::vector<int>> is_symmetry(const ComplexMatrix& u, const NqprFrame& f,
                                            double match_tol) {
    if (u.unitarity_defect() > 1e-9)
        throw validation_error("is_symmetry: input is not unitary");
    const int n = static_cast<int>(f.elements.size());
    const ComplexMatrix udag = u.adjoint();
    std::vector<int> sigma(n, -1);
    std::vector<bool> used(n, false);
    for (int j = 0; j < n; ++j) {
        const ComplexMatrix img = u * f.elements[j].matrix() * udag;
        int match = -1;
        for (int k = 0; k < n; ++k) {
            if (hs_distance(img, f.elements[k].matrix()) < match_tol) {
                if (match >= 0)
                    throw validation_error("is_symmetry: ambiguous element match");
                match = k;
            }
        }
        if (match < 0 || used[match]) return std::nullopt;
        used[match] = true;
        sigma[j] = match;
    }
    // verify operator-wise at the tighter tolerance
    for (int j = 0; j < n; ++j) {
        const ComplexMatrix img = u * f.elements[j].matrix() * udag;
        if (hs_distance(img, f.elements[sigma[j]].matrix()) > 1e-8) return std::nullopt;
    }
    return sigma;
}

bool hw_covariant(const NqprFrame& f, const WeylPair& pair) {
    if (pair.dim != f.dim) throw std::invalid_argument("hw_covariant: dimension mismatch");
    return is_symmetry(pair.X, f).has_value() && is_symmetry(pair.Z, f).has_value();
}

ComplexMatrix saturating_unitary(const NqprFrame& f, int j, int k) {
    const int d = f.dim;
    const int n = static_cast<int>(f.elements.size());
    if (j < 0 || j >= n || k < 0 || k >= n)
        throw std::invalid_argument("saturating_unitary: index out of range");
    const Spectrum& sj = f.elements[j].spectrum();
    const Spectrum& sk = f.elements[k].spectrum();
    // U = sum_r |a_r><b_r| with b_r the r-th nonincreasing eigenvector of Q_k
    // and a_r the r-th nondecreasing eigenvector of Q_j
    ComplexMatrix u = ComplexMatrix::zero(d);
    for (int r = 0; r < d; ++r) {
        const cvec a = sj.eigenvector(d - 1 - r);
        const cvec b = sk.eigenvector(r);
        u += ComplexMatrix::outer(a, b);
    }
    return u;
}

}  // namespace qpr
