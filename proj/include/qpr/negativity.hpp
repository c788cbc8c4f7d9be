#pragma once

#include "qpr/frames.hpp"

namespace qpr {

struct ClosedForms {
    int dim = 0;
    double N_minus = 0.0, N_plus = 0.0;     // state negativity bounds
    double NU_sic = 1.0;                    // N_U of both SIC frames
    double NC_minus = 0.0, NC_plus = 0.0;   // channel negativity of Q^-/Q^+
    double NU_lower = 1.0, NU_upper = 0.0;  // 1 <= N_U <= d - 2/d
    double NC_lower = 0.0, NC_upper = 0.0;  // NC_minus and the supplement bound
    double wootters_N = 0.0, wootters_NU = 0.0, wootters_NC = 0.0;
    int two_adic_valuation = 0;
};

ClosedForms closed_forms(int d);

enum class SpectrumClass { lower_extremal, upper_extremal, other };

std::string to_string(SpectrumClass c);

// Classify a frame-element spectrum against the two extremal templates
// (one large eigenvalue + d-1 equal, or d-1 equal + one at -N_plus).
// Requires tr(Q) = 1 and tr(Q^2) = d within tolerance.
SpectrumClass spectrum_class(const HermitianOperator& q, double tol = 1e-8);

struct Witnessed {
    double value = 0.0;
    int j = 0, k = 0;  // k unused for single-index witnesses
};

// N(rho) = max{0, -min_j tr(rho Q_j)}
double state_negativity(const HermitianOperator& rho, const NqprFrame& f);

// |min_j lambda_min(Q_j)|
Witnessed frame_negativity(const NqprFrame& f);

// N_U(U) = -d min_jk U^Q_jk
double unitary_negativity(const ComplexMatrix& u, const NqprFrame& f);

// |min_jk lambda_j^up . lambda_k^down| from cached spectra
Witnessed frame_unitary_negativity(const NqprFrame& f);

// max_jk [l_j^max (||l_k||_1 - 1) - l_j^min (||l_k||_1 + 1)]/2
Witnessed frame_channel_negativity(const NqprFrame& f);

struct MaxNegativityStates {
    int count = 0;
    std::vector<int> indices;
    std::vector<HermitianOperator> witnesses;  // min-eigenstate projectors
};

// Elements with the upper-extremal (nondegenerate-minimum) spectrum; their
// minimal eigenstates are the states attaining negativity N_plus.
MaxNegativityStates count_max_negativity_states(const NqprFrame& f, double tol = 1e-8);

}  // namespace qpr
