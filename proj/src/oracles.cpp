#include "qpr/oracles.hpp"

#include <cmath>
#include <functional>

#include "qpr/negativity.hpp"

namespace qpr {

ConstraintVector sample_constraint_vector(int d, std::uint64_t seed, std::uint64_t stream) {
    if (d < 2) throw std::invalid_argument("sample_constraint_vector: d must be >= 2");
    auto rng = make_rng(seed, stream);
    std::normal_distribution<double> gauss;
    ConstraintVector cv;
    cv.dim = d;
    cv.v.resize(d);
    double n2 = 0.0;
    do {
        double mean = 0.0;
        for (double& x : cv.v) {
            x = gauss(rng);
            mean += x;
        }
        mean /= d;
        n2 = 0.0;
        for (double& x : cv.v) {
            x -= mean;
            n2 += x * x;
        }
    } while (n2 < 1e-24);
    const double scale = std::sqrt((d - 1.0 / d) / n2);
    for (double& x : cv.v) x = 1.0 / d + scale * x;
    return cv;
}

void reproject(std::vector<double>& v) {
    const int d = static_cast<int>(v.size());
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= d;
    double n2 = 0.0;
    for (double& x : v) {
        x -= mean;
        n2 += x * x;
    }
    const double scale = (n2 > 1e-24) ? std::sqrt((d - 1.0 / d) / n2) : 0.0;
    for (double& x : v) x = 1.0 / d + scale * x;
}

namespace {

using Objective = std::function<double(const std::vector<double>&)>;

// Maximize obj over the constraint sphere: random samples plus restarted
// coordinate-perturbation hill-climbs.
double optimize(int d, int samples, std::uint64_t seed, const HillClimbParams& hc,
                const Objective& obj, double* sample_best = nullptr) {
    double best = -std::numeric_limits<double>::infinity();
    for (int s = 0; s < samples; ++s) {
        const ConstraintVector cv = sample_constraint_vector(d, seed, s);
        best = std::max(best, obj(cv.v));
    }
    if (sample_best) *sample_best = best;

    for (int r = 0; r < hc.restarts; ++r) {
        ConstraintVector cv = sample_constraint_vector(d, seed, 1'000'000 + r);
        auto rng = make_rng(seed, 2'000'000 + r);
        std::normal_distribution<double> gauss;
        std::uniform_int_distribution<int> coord(0, d - 1);
        double cur = obj(cv.v);
        double step = hc.initial_step;
        for (int t = 0; t < hc.steps; ++t) {
            std::vector<double> cand = cv.v;
            cand[coord(rng)] += step * gauss(rng);
            reproject(cand);
            const double val = obj(cand);
            if (val > cur) {
                cur = val;
                cv.v = std::move(cand);
            }
            step *= hc.decay;
        }
        best = std::max(best, cur);
    }
    return best;
}

double l1_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
}

double vmax_of(const std::vector<double>& v) {
    double m = v.front();
    for (double x : v) m = std::max(m, x);
    return m;
}

double vmin_of(const std::vector<double>& v) {
    double m = v.front();
    for (double x : v) m = std::min(m, x);
    return m;
}

double channel_lower_objective(const std::vector<double>& v) {
    const double l1 = l1_norm(v);
    return 0.5 * (vmax_of(v) * (l1 - 1.0) - vmin_of(v) * (l1 + 1.0));
}

bool feasible(const std::vector<double>& v, double tol = 1e-10) {
    double s = 0.0, q = 0.0;
    for (double x : v) {
        s += x;
        q += x * x;
    }
    return std::abs(s - 1.0) <= tol && std::abs(q - v.size()) <= tol * v.size();
}

}  // namespace

double lemma_channel_lower_f(int d, double m, double n) {
    return (m - n) / (m + n) * std::sqrt((d * m + d * n - 1.0) / (m * n)) - 2.0 / (m + n) + d;
}

std::vector<double> l1_extremal_vector(int d) {
    std::vector<double> v;
    if (d % 2 == 1) {
        v.assign(d, -1.0);
        for (int i = 0; i < (d + 1) / 2; ++i) v[i] = 1.0;
    } else {
        const double s = std::sqrt(d * d - 1.0);
        v.assign(d, (1.0 - s) / d);
        for (int i = 0; i < d / 2; ++i) v[i] = (1.0 + s) / d;
    }
    return v;
}

std::vector<double> lower_extremal_spectrum(int d) {
    const double root = std::sqrt(d + 1.0);
    std::vector<double> v(d, (1.0 - root) / d);
    v[0] = ((d - 1.0) * root + 1.0) / d;
    return v;
}

std::vector<double> upper_extremal_spectrum(int d) {
    const double root = std::sqrt(d + 1.0);
    std::vector<double> v(d, (root + 1.0) / d);
    v[d - 1] = (1.0 - (d - 1.0) * root) / d;
    return v;
}

std::vector<double> channel_lower_extremal_vector(int d) { return lower_extremal_spectrum(d); }

std::vector<double> negc2_extremal_vector(int d) {
    const double s = std::sqrt((d + 1.0) / (2.0 * (d * d + d + 2.0)));
    std::vector<double> v(d, 1.0 / d + 2.0 / d * s);
    v[0] = 1.0 / d + (d * d - d + 2.0) / d * s;
    v[d - 1] = 1.0 / d - (d * d + d - 2.0) / d * s;
    return v;
}

OracleReport lemma_l1_check(int d, int samples, std::uint64_t seed, const HillClimbParams& hc) {
    OracleReport rep;
    rep.lemma = "l1-norm-bound";
    rep.dim = d;
    rep.samples = samples;
    rep.seed = seed;
    rep.bound = (d % 2 == 1) ? static_cast<double>(d) : std::sqrt(d * d - 1.0);
    rep.best_found = optimize(d, samples, seed, hc, l1_norm);
    rep.gap = std::abs(rep.bound - rep.best_found);
    rep.violated = rep.best_found > rep.bound + 1e-8;
    const auto ext = l1_extremal_vector(d);
    rep.extremal_attained = feasible(ext) && std::abs(l1_norm(ext) - rep.bound) <= 1e-10;
    return rep;
}

OracleReport lemma_channel_lower_check(int d, int samples, std::uint64_t seed,
                                       const HillClimbParams& hc) {
    if (d < 3) throw std::invalid_argument("lemma_channel_lower_check: d must be >= 3");
    OracleReport rep;
    rep.lemma = "channel-lower-bound";
    rep.dim = d;
    rep.samples = samples;
    rep.seed = seed;
    const double root = std::sqrt(d + 1.0);
    rep.bound = d - root + 2.0 / d * root - 2.0 / d;
    // minimize the objective: maximize its negation
    const double neg_best = optimize(d, samples, seed, hc, [](const std::vector<double>& v) {
        return -channel_lower_objective(v);
    });
    rep.best_found = -neg_best;
    rep.gap = std::abs(rep.bound - rep.best_found);
    rep.violated = rep.best_found < rep.bound - 1e-8;
    const auto ext = channel_lower_extremal_vector(d);
    rep.extremal_attained =
        feasible(ext) && std::abs(channel_lower_objective(ext) - rep.bound) <= 1e-10;
    return rep;
}

OracleReport lemma_negc2_check(int d, int samples, std::uint64_t seed, const HillClimbParams& hc) {
    OracleReport rep;
    rep.lemma = "channel-upper-bound";
    rep.dim = d;
    rep.samples = samples;
    rep.seed = seed;
    rep.bound = (d - 1.0) / (std::sqrt(2.0) * d) * std::sqrt((d + 1.0) * (d * d + d + 2.0)) -
                1.0 / d;
    const auto obj = [d](const std::vector<double>& v) {
        return 0.5 * ((d - 1.0) * vmax_of(v) - (d + 1.0) * vmin_of(v));
    };
    rep.best_found = optimize(d, samples, seed, hc, obj);
    rep.gap = std::abs(rep.bound - rep.best_found);
    rep.violated = rep.best_found > rep.bound + 1e-8;
    const auto ext = negc2_extremal_vector(d);
    rep.extremal_attained = feasible(ext, 1e-9) && std::abs(obj(ext) - rep.bound) <= 1e-10;
    return rep;
}

OracleReport theorem1_spectrum_check(int d, int samples, std::uint64_t seed) {
    OracleReport rep;
    rep.lemma = "extremal-spectrum-range";
    rep.dim = d;
    rep.samples = samples;
    rep.seed = seed;
    const ClosedForms cf = closed_forms(d);
    rep.bound = cf.N_plus;
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        const ConstraintVector cv = sample_constraint_vector(d, seed, s);
        worst = std::max(worst, -vmin_of(cv.v));
    }
    rep.best_found = worst;
    rep.violated = worst > cf.N_plus + 1e-8;
    rep.gap = std::abs(cf.N_plus - worst);
    const auto lo = lower_extremal_spectrum(d);
    const auto hi = upper_extremal_spectrum(d);
    rep.extremal_attained = feasible(lo) && feasible(hi) &&
                            std::abs(vmin_of(lo) + cf.N_minus) <= 1e-10 &&
                            std::abs(vmin_of(hi) + cf.N_plus) <= 1e-10;
    return rep;
}

namespace {

// columns of a (rows x cols) complex Gaussian matrix, orthonormalized with the
// Haar-correct phase fix on the R diagonal
std::vector<cvec> haar_isometry_columns(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    std::vector<cvec> cols_v(cols, cvec(rows));
    for (auto& c : cols_v)
        for (auto& x : c) x = cxd{gauss(rng), gauss(rng)};
    // modified Gram-Schmidt
    for (int i = 0; i < cols; ++i) {
        for (int j = 0; j < i; ++j) {
            const cxd p = inner(cols_v[j], cols_v[i]);
            for (int r = 0; r < rows; ++r) cols_v[i][r] -= p * cols_v[j][r];
        }
        const double n = norm(cols_v[i]);
        for (auto& x : cols_v[i]) x /= n;
    }
    return cols_v;
}

}  // namespace

HermitianOperator random_state(int d, std::uint64_t seed, std::uint64_t stream) {
    auto rng = make_rng(seed, splitmix64(stream) ^ 0x517a7eULL);
    std::normal_distribution<double> gauss;
    ComplexMatrix g(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = cxd{gauss(rng), gauss(rng)};
    ComplexMatrix rho = g * g.adjoint();
    rho *= cxd{1.0 / std::real(rho.trace()), 0.0};
    return HermitianOperator(std::move(rho));
}

ComplexMatrix random_unitary(int d, std::uint64_t seed, std::uint64_t stream) {
    auto rng = make_rng(seed, splitmix64(stream) ^ 0xd1a9ULL);
    const auto cols = haar_isometry_columns(d, d, rng);
    ComplexMatrix u(d);
    for (int c = 0; c < d; ++c)
        for (int r = 0; r < d; ++r) u(r, c) = cols[c][r];
    return u;
}

Channel random_channel(int d, std::uint64_t seed, std::uint64_t stream, int kraus_rank) {
    const int r = (kraus_rank > 0) ? kraus_rank : d;
    auto rng = make_rng(seed, splitmix64(stream) ^ 0xc4a2ULL);
    const auto cols = haar_isometry_columns(d * r, d, rng);
    std::vector<ComplexMatrix> kraus(r, ComplexMatrix(d));
    for (int i = 0; i < r; ++i)
        for (int row = 0; row < d; ++row)
            for (int col = 0; col < d; ++col) kraus[i](row, col) = cols[col][i * d + row];
    return make_channel(std::move(kraus), "random");
}

std::vector<HermitianOperator> random_povm(int d, int outcomes, std::uint64_t seed,
                                           std::uint64_t stream) {
    if (outcomes < 2) throw std::invalid_argument("random_povm: need >= 2 outcomes");
    auto rng = make_rng(seed, splitmix64(stream) ^ 0x9047ULL);
    std::normal_distribution<double> gauss;
    std::vector<ComplexMatrix> raw;
    ComplexMatrix sum = ComplexMatrix::zero(d);
    for (int x = 0; x < outcomes; ++x) {
        ComplexMatrix g(d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) g(i, j) = cxd{gauss(rng), gauss(rng)};
        ComplexMatrix s = g * g.adjoint();
        sum += s;
        raw.push_back(std::move(s));
    }
    // S^{-1/2}
    const Spectrum ss = herm_eig(sum, 1e-9);
    ComplexMatrix isqrt(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            cxd v{};
            for (int r = 0; r < d; ++r)
                v += ss.basis(i, r) * std::conj(ss.basis(j, r)) / std::sqrt(ss.values[r]);
            isqrt(i, j) = v;
        }
    std::vector<HermitianOperator> povm;
    povm.reserve(raw.size());
    for (const auto& s : raw) povm.emplace_back(isqrt * s * isqrt, 1e-9);
    return povm;
}

}  // namespace qpr
