#pragma once

#include "qpr/channels.hpp"

namespace qpr {

struct SymmetryVerdict {
    bool permutation = false;
    std::vector<int> sigma;  // Q_j -> Q_sigma(j) when permutation
    double min_entry = 0.0;
    int min_j = 0, min_k = 0;
};

// Permutation iff no entry of U^Q falls below -tol; entries then snap to {0,1}.
SymmetryVerdict classify(const TransferMatrix& t, double tol = 1e-9);

// Permutation sigma with U Q_j U^dag = Q_sigma(j), recovered by nearest-element
// matching (HS max-norm distance < match_tol, uniqueness asserted), or nullopt.
std::optional<std::vector<int>> is_symmetry(const ComplexMatrix& u, const NqprFrame& f,
                                            double match_tol = 1e-6);

// True iff both HW generators X and Z are symmetries of the frame.
bool hw_covariant(const NqprFrame& f, const WeylPair& pair);

// Unitary mapping the eigenbasis of Q_k (nonincreasing) onto the eigenbasis of
// Q_j (nondecreasing); achieves tr(Q_j U Q_k U^dag) = lambda_j^up . lambda_k^down.
ComplexMatrix saturating_unitary(const NqprFrame& f, int j, int k);

}  // namespace qpr
