#pragma once

#include "qpr/sic.hpp"

namespace qpr {

enum class FrameKind { sic_minus, sic_plus, wootters, custom };

std::string to_string(FrameKind kind);
FrameKind frame_kind_from_string(const std::string& s);

// Minimal self-dual frame {Q_j}: tr(Q_j) = 1, tr(Q_j Q_k) = d delta_jk,
// sum_j Q_j = d * 1.  Elements carry cached spectra.
struct NqprFrame {
    int dim = 0;
    std::vector<HermitianOperator> elements;
    FrameKind kind = FrameKind::custom;
    std::string provenance;
};

struct FrameReport {
    double max_trace_deviation = 0.0;        // worst |tr(Q_j) - 1|
    double max_orthogonality_deviation = 0.0;  // worst |tr(Q_j Q_k) - d delta|
    double max_resolution_deviation = 0.0;   // max-norm of sum_j Q_j - d*1
    double tolerance = 0.0;
    bool pass = false;
};

struct QuasiProbVector {
    std::vector<double> values;
    std::string frame_id;
};

// d^2 Hermitian operators spanning operator space (not necessarily self dual).
struct MinimalFrame {
    int dim = 0;
    std::vector<HermitianOperator> elements;
};

// Q_j^{+-} = -+ sqrt(d+1) Pi_j + (1 +- sqrt(d+1))/d
NqprFrame sic_frame(const SicSet& s, FrameKind sign);

// Wootters phase-point basis; composite d built as tensor products over the
// prime factorization (nondecreasing order, repeated primes kept separate).
NqprFrame wootters_frame(int d);

NqprFrame custom_frame(std::vector<HermitianOperator> elements, std::string provenance,
                       double tol = 1e-9);

// Conjugate every element by the same unitary (frame stays a valid NQPR).
NqprFrame rotate_frame(const NqprFrame& f, const ComplexMatrix& u);

FrameReport validate_nqpr(const NqprFrame& f, double tol);

// mu_j(rho) = tr(rho Q_j)/d; requires tr(rho) = 1 and rho >= -1e-10
QuasiProbVector mu(const HermitianOperator& rho, const NqprFrame& f);

// nu_j(M) = tr(M Q_j); requires 0 <= M <= 1
std::vector<double> nu(const HermitianOperator& effect, const NqprFrame& f);

// max_xi |tr(rho M_xi) - sum_j mu_j nu_j(M_xi)|
double born_check(const HermitianOperator& rho, const std::vector<HermitianOperator>& povm,
                  const NqprFrame& f);

struct DualResult {
    MinimalFrame dual;
    double condition_number = 0.0;
};

// Dual of a minimal frame via Gram inversion: tr(F_j D_k) = delta_jk.
DualResult dual_of_minimal(const MinimalFrame& basis, double max_condition = 1e8);

}  // namespace qpr
