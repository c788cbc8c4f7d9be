#pragma once

#include "qpr/linalg.hpp"

namespace qpr {

// Generators of the Heisenberg-Weyl group in dimension d:
// X cyclic shift |q> -> |q+1 mod d>, Z = diag(1, w, ..., w^{d-1}) with w = e^{2 pi i / d}.
struct WeylPair {
    int dim;
    ComplexMatrix X;
    ComplexMatrix Z;
};

WeylPair weyl_pair(int d);

// X^j Z^k (no extra phase; only ever used by conjugation)
ComplexMatrix displacement(int j, int k, const WeylPair& pair);

bool is_prime(int n);

// Parity operator A_00 |q> = |-q mod d> for odd prime d.  Hermitian, unitary,
// trace 1, spectrum +1 with multiplicity (d+1)/2 and -1 with multiplicity (d-1)/2.
HermitianOperator parity(int d);

}  // namespace qpr
