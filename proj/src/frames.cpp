#include "qpr/frames.hpp"

#include <algorithm>
#include <cmath>

namespace qpr {

std::string to_string(FrameKind kind) {
    switch (kind) {
        case FrameKind::sic_minus: return "sic-minus";
        case FrameKind::sic_plus: return "sic-plus";
        case FrameKind::wootters: return "wootters";
        case FrameKind::custom: return "custom";
    }
    return "custom";
}

FrameKind frame_kind_from_string(const std::string& s) {
    if (s == "sic-minus") return FrameKind::sic_minus;
    if (s == "sic-plus") return FrameKind::sic_plus;
    if (s == "wootters") return FrameKind::wootters;
    if (s == "custom") return FrameKind::custom;
    throw std::invalid_argument("unknown frame kind: " + s);
}

NqprFrame sic_frame(const SicSet& s, FrameKind sign) {
    if (sign != FrameKind::sic_minus && sign != FrameKind::sic_plus)
        throw std::invalid_argument("sic_frame: sign must be sic-minus or sic-plus");
    const int d = s.dim;
    const double root = std::sqrt(d + 1.0);
    const double coeff = (sign == FrameKind::sic_plus) ? -root : root;
    const double shift = (sign == FrameKind::sic_plus) ? (1.0 + root) / d : (1.0 - root) / d;

    NqprFrame f;
    f.dim = d;
    f.kind = sign;
    f.provenance = "sic orbit: " + s.label;
    f.elements.reserve(s.projectors.size());
    const ComplexMatrix id = ComplexMatrix::identity(d);
    for (const auto& p : s.projectors) {
        ComplexMatrix q = cxd{coeff, 0.0} * p.matrix() + cxd{shift, 0.0} * id;
        f.elements.emplace_back(std::move(q));
    }
    return f;
}

namespace {

std::vector<int> prime_factors(int d) {
    std::vector<int> fs;
    for (int p = 2; p * p <= d; ++p)
        while (d % p == 0) {
            fs.push_back(p);
            d /= p;
        }
    if (d > 1) fs.push_back(d);
    return fs;  // already nondecreasing
}

std::vector<HermitianOperator> prime_phase_point_operators(int p) {
    std::vector<HermitianOperator> ops;
    ops.reserve(static_cast<size_t>(p) * p);
    if (p == 2) {
        // A_{j1 j2} = (1 + (-1)^j1 sz + (-1)^j2 sx + (-1)^{j1+j2} sy)/2
        for (int j1 = 0; j1 < 2; ++j1)
            for (int j2 = 0; j2 < 2; ++j2) {
                const double z = j1 ? -1.0 : 1.0;
                const double x = j2 ? -1.0 : 1.0;
                const double y = (j1 + j2) % 2 ? -1.0 : 1.0;
                ComplexMatrix a(2);
                a(0, 0) = 0.5 * (1.0 + z);
                a(1, 1) = 0.5 * (1.0 - z);
                a(0, 1) = 0.5 * cxd{x, -y};
                a(1, 0) = 0.5 * cxd{x, y};
                ops.emplace_back(std::move(a));
            }
        return ops;
    }
    const WeylPair pair = weyl_pair(p);
    const ComplexMatrix a00 = parity(p).matrix();
    for (int j = 0; j < p; ++j)
        for (int k = 0; k < p; ++k) {
            const ComplexMatrix dk = displacement(j, k, pair);
            ops.emplace_back(dk * a00 * dk.adjoint());
        }
    return ops;
}

}  // namespace

NqprFrame wootters_frame(int d) {
    if (d < 2) throw std::invalid_argument("wootters_frame: d must be >= 2");
    const std::vector<int> factors = prime_factors(d);

    std::vector<ComplexMatrix> elems = {ComplexMatrix::identity(1)};
    for (int p : factors) {
        auto prime_ops = prime_phase_point_operators(p);
        std::vector<ComplexMatrix> next;
        next.reserve(elems.size() * prime_ops.size());
        for (const auto& e : elems)
            for (const auto& a : prime_ops) next.push_back(tensor(e, a.matrix()));
        elems = std::move(next);
    }

    NqprFrame f;
    f.dim = d;
    f.kind = FrameKind::wootters;
    f.provenance = "wootters d=" + std::to_string(d);
    f.elements.reserve(elems.size());
    for (auto& e : elems) f.elements.emplace_back(std::move(e));
    return f;
}

NqprFrame custom_frame(std::vector<HermitianOperator> elements, std::string provenance,
                       double tol) {
    if (elements.empty()) throw std::invalid_argument("custom_frame: empty element list");
    NqprFrame f;
    f.dim = elements.front().dim();
    f.elements = std::move(elements);
    f.kind = FrameKind::custom;
    f.provenance = std::move(provenance);
    FrameReport rep = validate_nqpr(f, tol);
    if (!rep.pass) throw validation_error("custom_frame: elements do not form an NQPR");
    return f;
}

NqprFrame rotate_frame(const NqprFrame& f, const ComplexMatrix& u) {
    NqprFrame g;
    g.dim = f.dim;
    g.kind = f.kind;
    g.provenance = f.provenance + " (rotated)";
    const ComplexMatrix udag = u.adjoint();
    g.elements.reserve(f.elements.size());
    for (const auto& q : f.elements) g.elements.emplace_back(u * q.matrix() * udag, 1e-10);
    return g;
}

FrameReport validate_nqpr(const NqprFrame& f, double tol) {
    const int d = f.dim;
    const int n = static_cast<int>(f.elements.size());
    FrameReport rep;
    rep.tolerance = tol;
    if (n != d * d) {
        rep.max_orthogonality_deviation = 1.0;
        return rep;
    }
    for (const auto& q : f.elements)
        rep.max_trace_deviation = std::max(rep.max_trace_deviation, std::abs(q.trace() - 1.0));

    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) {
            const double target = (j == k) ? static_cast<double>(d) : 0.0;
            rep.max_orthogonality_deviation =
                std::max(rep.max_orthogonality_deviation,
                         std::abs(hs_inner(f.elements[j], f.elements[k]) - target));
        }

    ComplexMatrix sum = ComplexMatrix::zero(d);
    for (const auto& q : f.elements) sum += q.matrix();
    sum -= cxd{static_cast<double>(d), 0.0} * ComplexMatrix::identity(d);
    rep.max_resolution_deviation = sum.max_abs();

    rep.pass = rep.max_trace_deviation <= tol && rep.max_orthogonality_deviation <= tol * d &&
               rep.max_resolution_deviation <= tol * d;
    return rep;
}

namespace {

void check_state(const HermitianOperator& rho) {
    if (std::abs(rho.trace() - 1.0) > 1e-9)
        throw validation_error("state: trace must be 1");
    if (rho.min_eigenvalue() < -1e-10)
        throw validation_error("state: negative eigenvalue beyond tolerance");
}

}  // namespace

QuasiProbVector mu(const HermitianOperator& rho, const NqprFrame& f) {
    check_state(rho);
    if (rho.dim() != f.dim) throw std::invalid_argument("mu: dimension mismatch");
    QuasiProbVector v;
    v.frame_id = to_string(f.kind) + " d=" + std::to_string(f.dim);
    v.values.reserve(f.elements.size());
    for (const auto& q : f.elements) v.values.push_back(hs_inner(rho, q) / f.dim);
    return v;
}

std::vector<double> nu(const HermitianOperator& effect, const NqprFrame& f) {
    if (effect.dim() != f.dim) throw std::invalid_argument("nu: dimension mismatch");
    if (effect.min_eigenvalue() < -1e-10 || effect.max_eigenvalue() > 1.0 + 1e-10)
        throw validation_error("nu: input is not an effect (0 <= M <= 1)");
    std::vector<double> v;
    v.reserve(f.elements.size());
    for (const auto& q : f.elements) v.push_back(hs_inner(effect, q));
    return v;
}

double born_check(const HermitianOperator& rho, const std::vector<HermitianOperator>& povm,
                  const NqprFrame& f) {
    ComplexMatrix sum = ComplexMatrix::zero(f.dim);
    for (const auto& m : povm) sum += m.matrix();
    sum -= ComplexMatrix::identity(f.dim);
    if (sum.max_abs() > 1e-8) throw validation_error("born_check: effects do not sum to identity");

    const QuasiProbVector m = mu(rho, f);
    double worst = 0.0;
    for (const auto& eff : povm) {
        const std::vector<double> n = nu(eff, f);
        double lhs = hs_inner(rho, eff);
        double rhs = 0.0;
        for (size_t j = 0; j < n.size(); ++j) rhs += m.values[j] * n[j];
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

DualResult dual_of_minimal(const MinimalFrame& basis, double max_condition) {
    const int d = basis.dim;
    const int n = static_cast<int>(basis.elements.size());
    if (n != d * d) throw std::invalid_argument("dual_of_minimal: need d^2 elements");

    // Gram matrix is real symmetric; reuse the Hermitian eigensolver.
    ComplexMatrix gram(n);
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) {
            const double g = hs_inner(basis.elements[j], basis.elements[k]);
            gram(j, k) = g;
            gram(k, j) = g;
        }
    const Spectrum gs = herm_eig(gram);
    double amax = 0.0, amin = std::numeric_limits<double>::infinity();
    for (double v : gs.values) {
        amax = std::max(amax, std::abs(v));
        amin = std::min(amin, std::abs(v));
    }
    const double cond = (amin > 0.0) ? amax / amin : std::numeric_limits<double>::infinity();
    if (!(cond < max_condition))
        throw validation_error("dual_of_minimal: Gram matrix ill-conditioned (cond = " +
                               std::to_string(cond) + ")");

    // G^{-1} via the spectral decomposition
    std::vector<double> ginv(static_cast<size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            double s = 0.0;
            for (int r = 0; r < n; ++r)
                s += std::real(gs.basis(j, r) * std::conj(gs.basis(k, r))) / gs.values[r];
            ginv[static_cast<size_t>(j) * n + k] = s;
        }

    DualResult res;
    res.condition_number = cond;
    res.dual.dim = d;
    res.dual.elements.reserve(n);
    for (int k = 0; k < n; ++k) {
        ComplexMatrix dk = ComplexMatrix::zero(d);
        for (int j = 0; j < n; ++j)
            dk += cxd{ginv[static_cast<size_t>(j) * n + k], 0.0} * basis.elements[j].matrix();
        res.dual.elements.emplace_back(std::move(dk), 1e-9);
    }
    return res;
}

}  // namespace qpr
