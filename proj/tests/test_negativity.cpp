#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qpr/negativity.hpp"
#include "qpr/oracles.hpp"
#include "qpr/symmetry.hpp"
#include "qpr/verify.hpp"

using namespace qpr;

namespace {

NqprFrame hesse_frame(FrameKind kind) {
    return sic_frame(sic_from_fiducial(d3_family(0.0)), kind);
}

}  // namespace

TEST_CASE("closed forms at d=2 and d=3") {
    const ClosedForms c2 = closed_forms(2);
    const double r3 = std::sqrt(3.0);
    CHECK(c2.N_minus == doctest::Approx((r3 - 1.0) / 2.0).epsilon(1e-14));
    CHECK(c2.N_plus == doctest::Approx((r3 - 1.0) / 2.0).epsilon(1e-14));
    CHECK(c2.NC_minus == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c2.NC_plus == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c2.NU_upper == doctest::Approx(1.0).epsilon(1e-14));

    const ClosedForms c3 = closed_forms(3);
    CHECK(c3.N_minus == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(c3.N_plus == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c3.NC_minus == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
    CHECK(c3.NC_plus == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(c3.NU_upper == doctest::Approx(3.0 - 2.0 / 3.0).epsilon(1e-14));
    // supplement upper bound: (d-1)/(sqrt2 d) sqrt((d+1)(d^2+d+2)) - 1/d
    CHECK(c3.NC_upper ==
          doctest::Approx(2.0 / (std::sqrt(2.0) * 3.0) * std::sqrt(4.0 * 14.0) - 1.0 / 3.0)
              .epsilon(1e-14));
    CHECK_THROWS(closed_forms(1));
}

TEST_CASE("wootters closed forms") {
    const double r3 = std::sqrt(3.0);
    CHECK(closed_forms(2).wootters_N == doctest::Approx((r3 - 1.0) / 2.0).epsilon(1e-12));
    CHECK(closed_forms(3).wootters_N == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(closed_forms(4).wootters_N == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(closed_forms(6).wootters_N == doctest::Approx((r3 + 1.0) / 2.0).epsilon(1e-12));
    CHECK(closed_forms(8).wootters_N == doctest::Approx((r3 + 1.0) / 4.0).epsilon(1e-12));

    CHECK(closed_forms(2).wootters_NU == doctest::Approx(1.0));
    CHECK(closed_forms(3).wootters_NU == doctest::Approx(1.0));
    CHECK(closed_forms(4).wootters_NU == doctest::Approx(2.0));
    CHECK(closed_forms(5).wootters_NU == doctest::Approx(3.0));
    CHECK(closed_forms(6).wootters_NU == doctest::Approx(5.0));
    CHECK(closed_forms(8).wootters_NU == doctest::Approx(4.0));

    CHECK(closed_forms(2).wootters_NC == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(closed_forms(3).wootters_NC == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(closed_forms(4).wootters_NC ==
          doctest::Approx(0.25 * (r3 + 1.0) * (std::pow(3.0, 1.5) - 1.0)).epsilon(1e-12));
    CHECK(closed_forms(6).wootters_NC ==
          doctest::Approx((r3 + 3.0) / 4.0 * 6.0).epsilon(1e-12));
}

TEST_CASE("spectrum classification") {
    const NqprFrame fm = hesse_frame(FrameKind::sic_minus);
    const NqprFrame fp = hesse_frame(FrameKind::sic_plus);
    for (const auto& q : fm.elements) CHECK(spectrum_class(q) == SpectrumClass::lower_extremal);
    for (const auto& q : fp.elements) CHECK(spectrum_class(q) == SpectrumClass::upper_extremal);
    for (const auto& q : wootters_frame(4).elements)
        CHECK(spectrum_class(q) == SpectrumClass::other);

    CHECK(to_string(SpectrumClass::lower_extremal) == "lower-extremal");

    // invalid spectrum rejected
    CHECK_THROWS_AS(spectrum_class(HermitianOperator(ComplexMatrix::identity(3))),
                    validation_error);
}

TEST_CASE("state negativity") {
    const NqprFrame f = hesse_frame(FrameKind::sic_minus);
    const HermitianOperator mixed(cxd{1.0 / 3.0, 0.0} * ComplexMatrix::identity(3));
    CHECK(state_negativity(mixed, f) == doctest::Approx(0.0));

    // minimal eigenstate of any element attains N_minus = 1/3
    const cvec v = f.elements[0].spectrum().eigenvector(2);
    CHECK(state_negativity(HermitianOperator(ComplexMatrix::outer(v, v)), f) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("frame negativity matches closed forms") {
    CHECK(frame_negativity(hesse_frame(FrameKind::sic_minus)).value ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(frame_negativity(hesse_frame(FrameKind::sic_plus)).value ==
          doctest::Approx(1.0).epsilon(1e-12));
    for (int d : {2, 3, 4, 5, 6, 8, 9})
        CHECK(frame_negativity(wootters_frame(d)).value ==
              doctest::Approx(closed_forms(d).wootters_N).epsilon(1e-11));
}

TEST_CASE("unitary negativity of a permutation symmetry is zero") {
    const NqprFrame f = hesse_frame(FrameKind::sic_minus);
    CHECK(unitary_negativity(ComplexMatrix::identity(3), f) == doctest::Approx(0.0));
    const WeylPair p = weyl_pair(3);
    CHECK(unitary_negativity(p.X, f) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK_THROWS_AS(unitary_negativity(cxd{2.0, 0.0} * ComplexMatrix::identity(3), f),
                    validation_error);
}

TEST_CASE("frame unitary negativity closed forms") {
    CHECK(frame_unitary_negativity(hesse_frame(FrameKind::sic_minus)).value ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(frame_unitary_negativity(hesse_frame(FrameKind::sic_plus)).value ==
          doctest::Approx(1.0).epsilon(1e-12));
    for (int d : {2, 3, 4, 5, 6, 8})
        CHECK(frame_unitary_negativity(wootters_frame(d)).value ==
              doctest::Approx(closed_forms(d).wootters_NU).epsilon(1e-10));
}

TEST_CASE("saturating unitary attains the frame unitary negativity") {
    for (const auto& f : reference_frames(4)) {
        const Witnessed w = frame_unitary_negativity(f);
        const ComplexMatrix u = saturating_unitary(f, w.j, w.k);
        CHECK(unitary_negativity(u, f) == doctest::Approx(w.value).epsilon(1e-9));
    }
}

TEST_CASE("frame channel negativity closed forms") {
    CHECK(frame_channel_negativity(hesse_frame(FrameKind::sic_minus)).value ==
          doctest::Approx(5.0 / 3.0).epsilon(1e-12));
    CHECK(frame_channel_negativity(hesse_frame(FrameKind::sic_plus)).value ==
          doctest::Approx(3.0).epsilon(1e-12));
    for (int d : {2, 3, 4, 5, 6, 8, 9})
        CHECK(frame_channel_negativity(wootters_frame(d)).value ==
              doctest::Approx(closed_forms(d).wootters_NC).epsilon(1e-10));
}

TEST_CASE("channel negativity dominates unitary negativity on every reference frame") {
    for (const auto& f : reference_frames(4))
        CHECK(frame_channel_negativity(f).value >= frame_unitary_negativity(f).value - 1e-12);
}

TEST_CASE("max-negativity state census") {
    const auto plus = count_max_negativity_states(hesse_frame(FrameKind::sic_plus));
    CHECK(plus.count == 9);
    const auto minus = count_max_negativity_states(hesse_frame(FrameKind::sic_minus));
    CHECK(minus.count == 0);
    const auto w2 = count_max_negativity_states(wootters_frame(2));
    CHECK(w2.count == 4);

    // every witness is a pure state attaining N_plus
    const NqprFrame fp = hesse_frame(FrameKind::sic_plus);
    for (const auto& w : plus.witnesses) {
        CHECK(w.trace() == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(hs_inner(w, w) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(state_negativity(w, fp) == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("rotation invariance of all three negativity measures") {
    const NqprFrame f = hesse_frame(FrameKind::sic_minus);
    for (std::uint64_t s = 0; s < 3; ++s) {
        const NqprFrame g = rotate_frame(f, random_unitary(3, 17, s));
        CHECK(frame_negativity(g).value == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
        CHECK(frame_unitary_negativity(g).value == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(frame_channel_negativity(g).value == doctest::Approx(5.0 / 3.0).epsilon(1e-10));
    }
}
