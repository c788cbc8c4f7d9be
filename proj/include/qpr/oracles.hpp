#pragma once

#include <cstdint>

#include "qpr/channels.hpp"
#include "qpr/rng.hpp"

namespace qpr {

// Real vector with sum(v) = 1 and sum(v^2) = d: the feasible set of the
// eigenvalue-vector lemmas (a (d-2)-sphere).
struct ConstraintVector {
    int dim = 0;
    std::vector<double> v;
};

ConstraintVector sample_constraint_vector(int d, std::uint64_t seed, std::uint64_t stream = 0);

// Restore sum(v) = 1 and sum(v^2) = d after a perturbation: recenter the mean,
// then rescale the centered part.
void reproject(std::vector<double>& v);

struct HillClimbParams {
    int restarts = 200;
    int steps = 500;
    double initial_step = 0.3;
    double decay = 0.97;
};

struct OracleReport {
    std::string lemma;
    int dim = 0;
    double bound = 0.0;
    double best_found = 0.0;  // best objective over sampling + hill-climb
    double gap = 0.0;         // |bound - best_found|
    bool extremal_attained = false;
    bool violated = false;    // any sample beyond the bound (+1e-8 slack)
    int samples = 0;
    std::uint64_t seed = 0;
};

// ||v||_1 <= d (odd) or sqrt(d^2-1) (even); extremizers per the lemma.
OracleReport lemma_l1_check(int d, int samples, std::uint64_t seed,
                            const HillClimbParams& hc = {});

// (1/2)[v_max (||v||_1 - 1) + |v_min| (||v||_1 + 1)] >= d - sqrt(d+1) + (2/d)(sqrt(d+1) - 1)
OracleReport lemma_channel_lower_check(int d, int samples, std::uint64_t seed,
                                       const HillClimbParams& hc = {});

// ((d-1) v_max - (d+1) v_min)/2 <= (d-1)/(sqrt(2) d) sqrt((d+1)(d^2+d+2)) - 1/d
OracleReport lemma_negc2_check(int d, int samples, std::uint64_t seed,
                               const HillClimbParams& hc = {});

// min component of feasible vectors never drops below -N_plus; the two
// extremal spectra attain -N_minus and -N_plus.
OracleReport theorem1_spectrum_check(int d, int samples, std::uint64_t seed);

// Closed form for the two-level lemma objective with m positive entries a and
// n negative entries -b (zeros elsewhere).
double lemma_channel_lower_f(int d, double m, double n);

// Extremal vectors stated by the lemmas (sorted nonincreasing).
std::vector<double> l1_extremal_vector(int d);
std::vector<double> channel_lower_extremal_vector(int d);
std::vector<double> negc2_extremal_vector(int d);
std::vector<double> lower_extremal_spectrum(int d);  // Q^- spectrum
std::vector<double> upper_extremal_spectrum(int d);  // Q^+ spectrum

HermitianOperator random_state(int d, std::uint64_t seed, std::uint64_t stream = 0);
ComplexMatrix random_unitary(int d, std::uint64_t seed, std::uint64_t stream = 0);
Channel random_channel(int d, std::uint64_t seed, std::uint64_t stream = 0, int kraus_rank = 0);
// Random POVM: normalized random positive operators, S^{-1/2} S_xi S^{-1/2}.
std::vector<HermitianOperator> random_povm(int d, int outcomes, std::uint64_t seed,
                                           std::uint64_t stream = 0);

}  // namespace qpr
