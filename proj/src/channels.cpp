#include "qpr/channels.hpp"

#include <cmath>

namespace qpr {

Channel make_channel(std::vector<ComplexMatrix> kraus, std::string label, double tol) {
    if (kraus.empty()) throw std::invalid_argument("make_channel: empty Kraus list");
    const int d = kraus.front().dim();
    ComplexMatrix sum = ComplexMatrix::zero(d);
    for (const auto& k : kraus) {
        if (k.dim() != d) throw std::invalid_argument("make_channel: Kraus dimension mismatch");
        sum += k.adjoint() * k;
    }
    sum -= ComplexMatrix::identity(d);
    if (sum.max_abs() > tol)
        throw validation_error("make_channel: not trace-preserving (deviation " +
                               std::to_string(sum.max_abs()) + ")");
    return {d, std::move(kraus), std::move(label)};
}

Channel identity_channel(int d) {
    return {d, {ComplexMatrix::identity(d)}, "identity"};
}

Channel depolarizing_channel(int d) {
    // Kraus set {X^j Z^k / sqrt(d^2)} realizes rho -> 1/d
    const WeylPair pair = weyl_pair(d);
    std::vector<ComplexMatrix> ks;
    ks.reserve(static_cast<size_t>(d) * d);
    const cxd s{1.0 / d, 0.0};
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) ks.push_back(s * displacement(j, k, pair));
    return make_channel(std::move(ks), "depolarizing");
}

Channel unitary_channel(const ComplexMatrix& u, std::string label) {
    if (u.unitarity_defect() > 1e-9)
        throw validation_error("unitary_channel: input is not unitary");
    return {u.dim(), {u}, std::move(label)};
}

ComplexMatrix apply(const Channel& ch, const ComplexMatrix& x) {
    if (x.dim() != ch.dim) throw std::invalid_argument("apply: dimension mismatch");
    ComplexMatrix out = ComplexMatrix::zero(ch.dim);
    for (const auto& k : ch.kraus) out += k * x * k.adjoint();
    return out;
}

HermitianOperator apply(const Channel& ch, const HermitianOperator& x) {
    return HermitianOperator(apply(ch, x.matrix()), 1e-9);
}

double TransferMatrix::min_entry() const {
    double m = entries.front();
    for (double v : entries) m = std::min(m, v);
    return m;
}

double TransferMatrix::max_column_sum_deviation() const {
    const int n = size();
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += (*this)(j, k);
        worst = std::max(worst, std::abs(s - 1.0));
    }
    return worst;
}

double TransferMatrix::max_row_sum_deviation() const {
    const int n = size();
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += (*this)(j, k);
        worst = std::max(worst, std::abs(s - 1.0));
    }
    return worst;
}

namespace {

TransferMatrix build_transfer(const NqprFrame& f, TransferKind kind,
                              const std::vector<ComplexMatrix>& images) {
    const int n = static_cast<int>(f.elements.size());
    TransferMatrix t;
    t.frame_dim = f.dim;
    t.kind = kind;
    t.frame_id = to_string(f.kind) + " d=" + std::to_string(f.dim);
    t.entries.resize(static_cast<size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            t.entries[static_cast<size_t>(j) * n + k] =
                hs_inner(f.elements[j].matrix(), images[k]) / f.dim;
    return t;
}

}  // namespace

TransferMatrix transfer_matrix(const Channel& ch, const NqprFrame& f) {
    if (ch.dim != f.dim) throw std::invalid_argument("transfer_matrix: dimension mismatch");
    std::vector<ComplexMatrix> images;
    images.reserve(f.elements.size());
    for (const auto& q : f.elements) images.push_back(apply(ch, q.matrix()));
    return build_transfer(f, TransferKind::channel, images);
}

TransferMatrix unitary_transfer_matrix(const ComplexMatrix& u, const NqprFrame& f) {
    if (u.dim() != f.dim) throw std::invalid_argument("unitary_transfer_matrix: dimension mismatch");
    const ComplexMatrix udag = u.adjoint();
    std::vector<ComplexMatrix> images;
    images.reserve(f.elements.size());
    for (const auto& q : f.elements) images.push_back(u * q.matrix() * udag);
    TransferMatrix t = build_transfer(f, TransferKind::unitary, images);
    return t;
}

bool is_unital(const Channel& ch, double tol) {
    ComplexMatrix sum = ComplexMatrix::zero(ch.dim);
    for (const auto& k : ch.kraus) sum += k * k.adjoint();
    sum -= ComplexMatrix::identity(ch.dim);
    return sum.max_abs() <= tol;
}

double channel_negativity(const Channel& ch, const NqprFrame& f) {
    const TransferMatrix t = transfer_matrix(ch, f);
    return std::max(0.0, -f.dim * t.min_entry());
}

Channel saturating_channel(const NqprFrame& f, int j, int k) {
    const int d = f.dim;
    const int n = static_cast<int>(f.elements.size());
    if (j < 0 || j >= n || k < 0 || k >= n)
        throw std::invalid_argument("saturating_channel: index out of range");

    const Spectrum& sj = f.elements[j].spectrum();
    const Spectrum& sk = f.elements[k].spectrum();
    const cvec psi_max = sj.eigenvector(0);
    const cvec psi_min = sj.eigenvector(d - 1);

    // support of the positive part of Q_k (eigenvalues > 1e-10)
    std::vector<ComplexMatrix> kraus;
    for (int r = 0; r < d; ++r) {
        const cvec b = sk.eigenvector(r);
        // measure |b><b|, then prepare psi_min on the positive support and
        // psi_max on the complement
        const cvec& prep = (sk.values[r] > 1e-10) ? psi_min : psi_max;
        kraus.push_back(ComplexMatrix::outer(prep, b));
    }
    return make_channel(std::move(kraus),
                        "saturating(" + std::to_string(j) + "," + std::to_string(k) + ")");
}

}  // namespace qpr
