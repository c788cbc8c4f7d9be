#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qpr/negativity.hpp"
#include "qpr/oracles.hpp"
#include "qpr/symmetry.hpp"
#include "qpr/verify.hpp"

using namespace qpr;

TEST_CASE("channel construction") {
    CHECK_NOTHROW(identity_channel(3));
    CHECK_NOTHROW(depolarizing_channel(3));
    CHECK_NOTHROW(unitary_channel(weyl_pair(3).X));
    CHECK_THROWS_AS(make_channel({ComplexMatrix::identity(2), ComplexMatrix::identity(2)},
                                 "overcomplete"),
                    validation_error);
    CHECK_THROWS_AS(unitary_channel(cxd{0.5, 0.0} * ComplexMatrix::identity(2)),
                    validation_error);
}

TEST_CASE("apply: identity and depolarizing") {
    const HermitianOperator rho = random_state(3, 2, 0);
    const HermitianOperator out = apply(identity_channel(3), rho);
    CHECK(hs_distance(out.matrix(), rho.matrix()) < 1e-12);

    const HermitianOperator dep = apply(depolarizing_channel(3), rho);
    ComplexMatrix diff = dep.matrix() - cxd{1.0 / 3.0, 0.0} * ComplexMatrix::identity(3);
    CHECK(diff.max_abs() < 1e-12);
}

TEST_CASE("random channels are trace preserving") {
    for (std::uint64_t s = 0; s < 5; ++s) {
        const Channel ch = random_channel(3, 11, s);
        const HermitianOperator rho = random_state(3, 12, s);
        CHECK(apply(ch, rho).trace() == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("transfer matrix structure") {
    const NqprFrame f = wootters_frame(3);
    SUBCASE("identity gives the identity transfer matrix") {
        const TransferMatrix t = transfer_matrix(identity_channel(3), f);
        for (int j = 0; j < 9; ++j)
            for (int k = 0; k < 9; ++k)
                CHECK(t(j, k) == doctest::Approx(j == k ? 1.0 : 0.0).epsilon(1e-10));
    }
    SUBCASE("column sums are always 1; row sums 1 iff unital") {
        for (std::uint64_t s = 0; s < 5; ++s) {
            const Channel ch = random_channel(3, 21, s);
            const TransferMatrix t = transfer_matrix(ch, f);
            CHECK(t.max_column_sum_deviation() < 1e-10);
            if (is_unital(ch))
                CHECK(t.max_row_sum_deviation() < 1e-10);
        }
        const ComplexMatrix u = random_unitary(3, 22, 0);
        CHECK(unitary_transfer_matrix(u, f).max_row_sum_deviation() < 1e-10);
    }
    SUBCASE("unitary channel and unitary transfer agree") {
        const ComplexMatrix u = random_unitary(3, 23, 0);
        const TransferMatrix a = unitary_transfer_matrix(u, f);
        const TransferMatrix b = transfer_matrix(unitary_channel(u), f);
        double dev = 0.0;
        for (int j = 0; j < 9; ++j)
            for (int k = 0; k < 9; ++k) dev = std::max(dev, std::abs(a(j, k) - b(j, k)));
        CHECK(dev < 1e-12);
    }
}

TEST_CASE("depolarizing transfer matrix is flat") {
    const NqprFrame f = wootters_frame(3);
    const TransferMatrix t = transfer_matrix(depolarizing_channel(3), f);
    for (int j = 0; j < 9; ++j)
        for (int k = 0; k < 9; ++k)
            CHECK(t(j, k) == doctest::Approx(1.0 / 9.0).epsilon(1e-10));
    CHECK(channel_negativity(depolarizing_channel(3), f) == doctest::Approx(0.0));
}

TEST_CASE("channel negativity of a symmetry is zero") {
    const NqprFrame f = wootters_frame(3);
    CHECK(channel_negativity(identity_channel(3), f) == doctest::Approx(0.0));
    CHECK(channel_negativity(unitary_channel(weyl_pair(3).X), f) ==
          doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("saturating channel attains the frame channel negativity") {
    for (const auto& f : reference_frames(3)) {
        const Witnessed w = frame_channel_negativity(f);
        const Channel ch = saturating_channel(f, w.j, w.k);
        CHECK(channel_negativity(ch, f) == doctest::Approx(w.value).epsilon(1e-9));
    }
}

TEST_CASE("sampled channel negativity never exceeds the frame value") {
    const NqprFrame f = sic_frame(sic_from_fiducial(d3_family(0.0)), FrameKind::sic_minus);
    const double cap = frame_channel_negativity(f).value;
    for (std::uint64_t s = 0; s < 50; ++s)
        CHECK(channel_negativity(random_channel(3, 31, s), f) <= cap + 1e-9);
}

TEST_CASE("unitary channels respect the unitary negativity cap") {
    const NqprFrame f = wootters_frame(3);
    const double cap_u = frame_unitary_negativity(f).value;
    for (std::uint64_t s = 0; s < 50; ++s) {
        const ComplexMatrix u = random_unitary(3, 41, s);
        const double n = channel_negativity(unitary_channel(u), f);
        CHECK(n == doctest::Approx(unitary_negativity(u, f)).epsilon(1e-9));
        CHECK(n <= cap_u + 1e-9);
    }
}

TEST_CASE("is_unital") {
    CHECK(is_unital(identity_channel(3)));
    CHECK(is_unital(depolarizing_channel(3)));
    // amplitude damping is not unital
    ComplexMatrix k0(2), k1(2);
    const double g = 0.4;
    k0(0, 0) = 1.0;
    k0(1, 1) = std::sqrt(1.0 - g);
    k1(0, 1) = std::sqrt(g);
    CHECK_FALSE(is_unital(make_channel({k0, k1}, "amplitude damping")));
}
