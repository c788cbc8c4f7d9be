#include "qpr/negativity.hpp"

#include <cmath>
#include <limits>

#include "qpr/channels.hpp"

namespace qpr {

ClosedForms closed_forms(int d) {
    if (d < 2) throw std::invalid_argument("closed_forms: d must be >= 2");
    ClosedForms cf;
    cf.dim = d;
    const double root = std::sqrt(d + 1.0);
    cf.N_minus = (root - 1.0) / d;
    cf.N_plus = ((d - 1.0) * root - 1.0) / d;
    cf.NU_sic = 1.0;
    cf.NC_minus = (d * d - 2.0 - (d - 2.0) * root) / d;
    cf.NC_plus = (d * d - 2.0 + (d - 2.0) * root) / d;
    cf.NU_lower = 1.0;
    cf.NU_upper = d - 2.0 / d;
    cf.NC_lower = cf.NC_minus;
    cf.NC_upper = (d - 1.0) / (std::sqrt(2.0) * d) * std::sqrt((d + 1.0) * (d * d + d + 2.0)) -
                  1.0 / d;

    int n = 0, m = d;
    while (m % 2 == 0) {
        ++n;
        m /= 2;
    }
    cf.two_adic_valuation = n;
    const double r3 = std::sqrt(3.0);
    const bool pow2 = (m == 1);
    cf.wootters_N = pow2 ? std::pow(2.0, 1 - n) * std::pow(r3 + 1.0, n - 2)
                         : std::pow(2.0, -n) * std::pow(r3 + 1.0, n);
    cf.wootters_NU = d - std::pow(2.0, std::abs(n - 1));
    cf.wootters_NC = pow2 ? std::pow(2.0, -n) * std::pow(r3 + 1.0, n - 1) *
                                (std::pow(3.0, (n + 1) / 2.0) - 1.0)
                          : std::pow(4.0, -n) * std::pow(r3 + 3.0, n) * d;
    return cf;
}

std::string to_string(SpectrumClass c) {
    switch (c) {
        case SpectrumClass::lower_extremal: return "lower-extremal";
        case SpectrumClass::upper_extremal: return "upper-extremal";
        case SpectrumClass::other: return "other";
    }
    return "other";
}

SpectrumClass spectrum_class(const HermitianOperator& q, double tol) {
    const int d = q.dim();
    const auto& ev = q.eigenvalues();
    double sum = 0.0, sq = 0.0;
    for (double v : ev) {
        sum += v;
        sq += v * v;
    }
    if (std::abs(sum - 1.0) > 1e-6 || std::abs(sq - d) > 1e-6 * d)
        throw validation_error("spectrum_class: tr(Q) = 1, tr(Q^2) = d violated");

    const ClosedForms cf = closed_forms(d);
    const double root = std::sqrt(d + 1.0);

    bool lower = std::abs(ev[0] - ((d - 1.0) * root + 1.0) / d) <= tol;
    for (int r = 1; r < d && lower; ++r) lower = std::abs(ev[r] + cf.N_minus) <= tol;
    if (lower) return SpectrumClass::lower_extremal;

    bool upper = std::abs(ev[d - 1] + cf.N_plus) <= tol;
    for (int r = 0; r < d - 1 && upper; ++r) upper = std::abs(ev[r] - (root + 1.0) / d) <= tol;
    if (upper) return SpectrumClass::upper_extremal;

    return SpectrumClass::other;
}

double state_negativity(const HermitianOperator& rho, const NqprFrame& f) {
    const QuasiProbVector m = mu(rho, f);
    double mn = m.values.front();
    for (double v : m.values) mn = std::min(mn, v);
    return std::max(0.0, -f.dim * mn);
}

Witnessed frame_negativity(const NqprFrame& f) {
    Witnessed w;
    double mn = f.elements.front().min_eigenvalue();
    w.j = 0;
    for (int j = 1; j < static_cast<int>(f.elements.size()); ++j) {
        const double v = f.elements[j].min_eigenvalue();
        if (v < mn) {
            mn = v;
            w.j = j;
        }
    }
    w.value = std::abs(mn);
    return w;
}

double unitary_negativity(const ComplexMatrix& u, const NqprFrame& f) {
    if (u.unitarity_defect() > 1e-10)
        throw validation_error("unitary_negativity: input is not unitary");
    const TransferMatrix t = unitary_transfer_matrix(u, f);
    double mn = 0.0;
    const int n = f.dim * f.dim;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) mn = std::min(mn, t(j, k));
    return -f.dim * mn;
}

Witnessed frame_unitary_negativity(const NqprFrame& f) {
    const int n = static_cast<int>(f.elements.size());
    const int d = f.dim;
    Witnessed w;
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
        const auto& lj = f.elements[j].eigenvalues();  // nonincreasing
        for (int k = 0; k < n; ++k) {
            const auto& lk = f.elements[k].eigenvalues();
            double dot = 0.0;
            for (int r = 0; r < d; ++r) dot += lj[d - 1 - r] * lk[r];  // up . down
            if (dot < best) {
                best = dot;
                w.j = j;
                w.k = k;
            }
        }
    }
    w.value = std::abs(best);
    return w;
}

Witnessed frame_channel_negativity(const NqprFrame& f) {
    const int n = static_cast<int>(f.elements.size());
    Witnessed w;
    double best = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
        const double lmax = f.elements[j].max_eigenvalue();
        const double lmin = f.elements[j].min_eigenvalue();
        for (int k = 0; k < n; ++k) {
            const double l1 = f.elements[k].spectrum().l1_norm();
            const double val = 0.5 * (lmax * (l1 - 1.0) - lmin * (l1 + 1.0));
            if (val > best) {
                best = val;
                w.j = j;
                w.k = k;
            }
        }
    }
    w.value = best;
    return w;
}

MaxNegativityStates count_max_negativity_states(const NqprFrame& f, double tol) {
    MaxNegativityStates res;
    const ClosedForms cf = closed_forms(f.dim);
    for (int j = 0; j < static_cast<int>(f.elements.size()); ++j) {
        const auto& q = f.elements[j];
        // validates tr(Q) = 1, tr(Q^2) = d; at d = 2 the two templates coincide,
        // so test the defining condition lambda_min = -N_plus directly
        (void)spectrum_class(q, tol);
        const int d = f.dim;
        if (std::abs(q.min_eigenvalue() + cf.N_plus) > tol) continue;
        // minimum must be nondegenerate
        if (d >= 2 && std::abs(q.eigenvalues()[d - 1] - q.eigenvalues()[d - 2]) <= tol) continue;
        cvec v = q.spectrum().eigenvector(d - 1);
        res.indices.push_back(j);
        res.witnesses.emplace_back(ComplexMatrix::outer(v, v));
    }
    res.count = static_cast<int>(res.indices.size());
    return res;
}

}  // namespace qpr
