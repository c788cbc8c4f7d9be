#pragma once

#include "qpr/frames.hpp"

namespace qpr {

// CPTP map in Kraus form; construction checks sum_i K_i^dag K_i = 1.
struct Channel {
    int dim = 0;
    std::vector<ComplexMatrix> kraus;
    std::string label;
};

Channel make_channel(std::vector<ComplexMatrix> kraus, std::string label, double tol = 1e-9);
Channel identity_channel(int d);
Channel depolarizing_channel(int d);
Channel unitary_channel(const ComplexMatrix& u, std::string label = "unitary");

// sum_i K_i X K_i^dag
ComplexMatrix apply(const Channel& ch, const ComplexMatrix& x);
HermitianOperator apply(const Channel& ch, const HermitianOperator& x);

enum class TransferKind { unitary, channel };

// Real d^2 x d^2 matrix T_jk = tr[Q_j L(Q_k)]/d.  Column sums are 1; row sums
// are 1 iff the map is unital (always, for unitaries).
struct TransferMatrix {
    int frame_dim = 0;
    TransferKind kind = TransferKind::channel;
    std::vector<double> entries;  // row-major, n = frame_dim^2
    std::string frame_id;

    int size() const { return frame_dim * frame_dim; }
    double operator()(int j, int k) const { return entries[static_cast<size_t>(j) * size() + k]; }
    double min_entry() const;
    double max_column_sum_deviation() const;
    double max_row_sum_deviation() const;
};

TransferMatrix transfer_matrix(const Channel& ch, const NqprFrame& f);
TransferMatrix unitary_transfer_matrix(const ComplexMatrix& u, const NqprFrame& f);

// sum_i K_i K_i^dag = 1?
bool is_unital(const Channel& ch, double tol = 1e-9);

// max{0, -d min_jk Lambda^Q_jk}
double channel_negativity(const Channel& ch, const NqprFrame& f);

// Measure {P1, P2} (support of the positive part of Q_k and its complement),
// then prepare the min-/max-eigenstate of Q_j.  Saturates the (j,k) term of
// the channel-negativity formula.
Channel saturating_channel(const NqprFrame& f, int j, int k);

}  // namespace qpr
