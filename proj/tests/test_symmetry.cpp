#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qpr/negativity.hpp"
#include "qpr/oracles.hpp"
#include "qpr/symmetry.hpp"
#include "qpr/verify.hpp"

using namespace qpr;

namespace {

bool is_valid_permutation(const std::vector<int>& sigma, int n) {
    if (static_cast<int>(sigma.size()) != n) return false;
    std::vector<int> seen(n, 0);
    for (int v : sigma) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

}  // namespace

TEST_CASE("classify the identity as a permutation") {
    const NqprFrame f = wootters_frame(3);
    const SymmetryVerdict v = classify(unitary_transfer_matrix(ComplexMatrix::identity(3), f));
    REQUIRE(v.permutation);
    REQUIRE(is_valid_permutation(v.sigma, 9));
    for (int j = 0; j < 9; ++j) CHECK(v.sigma[j] == j);
}

TEST_CASE("displacements permute the Wootters frame") {
    for (int d : {2, 3, 5}) {
        const NqprFrame f = wootters_frame(d);
        const WeylPair p = weyl_pair(d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                const ComplexMatrix u = displacement(a, b, p);
                const SymmetryVerdict v = classify(unitary_transfer_matrix(u, f));
                CHECK(v.permutation);
                CHECK(is_valid_permutation(v.sigma, d * d));
                const auto sigma = is_symmetry(u, f);
                REQUIRE(sigma.has_value());
                CHECK(*sigma == v.sigma);
            }
    }
}

TEST_CASE("classify and is_symmetry agree on the sic frames") {
    const SicSet s = sic_from_fiducial(d3_family(0.0));
    for (FrameKind kind : {FrameKind::sic_minus, FrameKind::sic_plus}) {
        const NqprFrame f = sic_frame(s, kind);
        const WeylPair p = weyl_pair(3);
        const ComplexMatrix u = displacement(1, 2, p);
        const SymmetryVerdict v = classify(unitary_transfer_matrix(u, f));
        CHECK(v.permutation);
        const auto sigma = is_symmetry(u, f);
        REQUIRE(sigma.has_value());
        CHECK(*sigma == v.sigma);
        // HW orbit structure: sigma shifts (j,k) -> (j+1, k+2)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                CHECK((*sigma)[3 * j + k] == 3 * ((j + 1) % 3) + (k + 2) % 3);
    }
}

TEST_CASE("generic unitaries are not symmetries and have negative entries") {
    const NqprFrame f = sic_frame(sic_from_fiducial(d3_family(0.0)), FrameKind::sic_minus);
    for (std::uint64_t s = 0; s < 20; ++s) {
        const ComplexMatrix u = random_unitary(3, 51, s);
        const SymmetryVerdict v = classify(unitary_transfer_matrix(u, f));
        CHECK_FALSE(v.permutation);
        CHECK(v.min_entry < -1e-6);
        CHECK_FALSE(is_symmetry(u, f).has_value());
    }
}

TEST_CASE("small perturbation of a symmetry is rejected") {
    const NqprFrame f = wootters_frame(3);
    const WeylPair p = weyl_pair(3);
    // rotate X slightly by a diagonal phase
    ComplexMatrix ph = ComplexMatrix::identity(3);
    const double eps = 1e-3;
    ph(1, 1) = cxd{std::cos(eps), std::sin(eps)};
    const ComplexMatrix u = ph * p.X;
    const SymmetryVerdict v = classify(unitary_transfer_matrix(u, f));
    CHECK_FALSE(v.permutation);
    CHECK_FALSE(is_symmetry(u, f).has_value());
}

TEST_CASE("hw covariance") {
    const WeylPair p2 = weyl_pair(2);
    const WeylPair p3 = weyl_pair(3);
    CHECK(hw_covariant(wootters_frame(2), p2));
    CHECK(hw_covariant(wootters_frame(3), p3));
    const SicSet s = sic_from_fiducial(d3_family(0.0));
    CHECK(hw_covariant(sic_frame(s, FrameKind::sic_minus), p3));
    CHECK(hw_covariant(sic_frame(s, FrameKind::sic_plus), p3));
    // a Haar-rotated frame loses HW covariance
    const NqprFrame rot = rotate_frame(wootters_frame(3), random_unitary(3, 61, 0));
    CHECK_FALSE(hw_covariant(rot, p3));
}

TEST_CASE("saturating unitary is unitary and attains the spectral bound") {
    for (const auto& f : reference_frames(3)) {
        const Witnessed w = frame_unitary_negativity(f);
        const ComplexMatrix u = saturating_unitary(f, w.j, w.k);
        CHECK(u.unitarity_defect() < 1e-10);
        // tr(Q_j U Q_k U^dag) = lambda_j^up . lambda_k^down = -w.value
        const ComplexMatrix img = u * f.elements[w.k].matrix() * u.adjoint();
        const double overlap = hs_inner(f.elements[w.j].matrix(), img);
        CHECK(overlap == doctest::Approx(-w.value).epsilon(1e-9));
    }
}

TEST_CASE("symmetry unitaries have zero negativity; fuzz across the orbit") {
    const NqprFrame f = wootters_frame(3);
    const WeylPair p = weyl_pair(3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            CHECK(unitary_negativity(displacement(a, b, p), f) ==
                  doctest::Approx(0.0).epsilon(1e-9));
}
