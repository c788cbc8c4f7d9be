#include "qpr/hw.hpp"

#include <cmath>
#include <numbers>

namespace qpr {

WeylPair weyl_pair(int d) {
    if (d < 2) throw std::invalid_argument("weyl_pair: d must be >= 2");
    ComplexMatrix x(d), z(d);
    for (int q = 0; q < d; ++q) {
        x((q + 1) % d, q) = 1.0;
        const double ang = 2.0 * std::numbers::pi * q / d;
        z(q, q) = cxd{std::cos(ang), std::sin(ang)};
    }
    return {d, std::move(x), std::move(z)};
}

ComplexMatrix displacement(int j, int k, const WeylPair& pair) {
    const int d = pair.dim;
    j = ((j % d) + d) % d;
    k = ((k % d) + d) % d;
    ComplexMatrix m(d);
    // X^j Z^k maps |q> to w^{kq} |q+j>
    for (int q = 0; q < d; ++q) {
        const double ang = 2.0 * std::numbers::pi * k * q / d;
        m((q + j) % d, q) = cxd{std::cos(ang), std::sin(ang)};
    }
    return m;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

HermitianOperator parity(int d) {
    if (d % 2 == 0 || !is_prime(d))
        throw std::invalid_argument("parity: d must be an odd prime");
    ComplexMatrix m(d);
    for (int q = 0; q < d; ++q) m((d - q) % d, q) = 1.0;
    return HermitianOperator(std::move(m));
}

}  // namespace qpr
