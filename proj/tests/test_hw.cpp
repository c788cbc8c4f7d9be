#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qpr/frames.hpp"
#include "qpr/rng.hpp"

using namespace qpr;

TEST_CASE("d=2 generators are bit-flip and phase-flip") {
    const WeylPair p = weyl_pair(2);
    CHECK(std::abs(p.X(0, 1) - 1.0) < 1e-15);
    CHECK(std::abs(p.X(1, 0) - 1.0) < 1e-15);
    CHECK(std::abs(p.Z(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(p.Z(1, 1) + 1.0) < 1e-12);
}

TEST_CASE("commutation relation ZX = w XZ") {
    for (int d : {2, 3, 5, 7}) {
        const WeylPair p = weyl_pair(d);
        const double ang = 2.0 * std::numbers::pi / d;
        const cxd w{std::cos(ang), std::sin(ang)};
        ComplexMatrix lhs = p.Z * p.X;
        lhs -= w * (p.X * p.Z);
        CHECK(lhs.max_abs() < 1e-12);
    }
}

TEST_CASE("X and Z have order d") {
    for (int d : {2, 3, 5}) {
        const WeylPair p = weyl_pair(d);
        ComplexMatrix xp = ComplexMatrix::identity(d);
        ComplexMatrix zp = ComplexMatrix::identity(d);
        for (int i = 0; i < d; ++i) {
            xp = xp * p.X;
            zp = zp * p.Z;
        }
        xp -= ComplexMatrix::identity(d);
        zp -= ComplexMatrix::identity(d);
        CHECK(xp.max_abs() < 1e-12);
        CHECK(zp.max_abs() < 1e-12);
        CHECK(p.X.unitarity_defect() < 1e-12);
        CHECK(p.Z.unitarity_defect() < 1e-12);
    }
}

TEST_CASE("displacement basics") {
    const WeylPair p = weyl_pair(3);
    ComplexMatrix d00 = displacement(0, 0, p);
    d00 -= ComplexMatrix::identity(3);
    CHECK(d00.max_abs() < 1e-15);

    ComplexMatrix d10 = displacement(1, 0, p);
    d10 -= p.X;
    CHECK(d10.max_abs() < 1e-15);
}

TEST_CASE("weyl_pair rejects d < 2") { CHECK_THROWS(weyl_pair(1)); }

TEST_CASE("parity matrix and spectra") {
    const HermitianOperator a3 = parity(3);
    CHECK(std::abs(a3.matrix()(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(a3.matrix()(1, 2) - 1.0) < 1e-15);
    CHECK(std::abs(a3.matrix()(2, 1) - 1.0) < 1e-15);
    CHECK(a3.trace() == doctest::Approx(1.0));

    const HermitianOperator a5 = parity(5);
    const auto& ev5 = a5.eigenvalues();
    for (int i = 0; i < 3; ++i) CHECK(ev5[i] == doctest::Approx(1.0).epsilon(1e-12));
    for (int i = 3; i < 5; ++i) CHECK(ev5[i] == doctest::Approx(-1.0).epsilon(1e-12));

    const HermitianOperator a7 = parity(7);
    CHECK(hs_inner(a7, a7) == doctest::Approx(7.0));

    CHECK_THROWS(parity(4));
    CHECK_THROWS(parity(9));
}

TEST_CASE("displacement-conjugated parity passes frame validation for odd primes") {
    for (int p : {3, 5, 7, 11, 13}) {
        const NqprFrame f = wootters_frame(p);
        const FrameReport rep = validate_nqpr(f, 1e-9);
        CHECK(rep.pass);
        for (const auto& q : f.elements) CHECK(q.trace() == doctest::Approx(1.0));
    }
}

TEST_CASE("conjugation ignores a global displacement phase") {
    const WeylPair p = weyl_pair(5);
    auto rng = make_rng(42);
    std::uniform_real_distribution<double> uni(0.0, 2.0 * std::numbers::pi);
    const ComplexMatrix d12 = displacement(1, 2, p);
    const HermitianOperator a = parity(5);
    for (int rep = 0; rep < 5; ++rep) {
        const double phi = uni(rng);
        const cxd ph{std::cos(phi), std::sin(phi)};
        const ComplexMatrix dp = ph * d12;
        ComplexMatrix diff = dp * a.matrix() * dp.adjoint();
        diff -= d12 * a.matrix() * d12.adjoint();
        CHECK(diff.max_abs() < 1e-12);
    }
}
