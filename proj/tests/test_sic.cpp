#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "qpr/sic.hpp"

using namespace qpr;

TEST_CASE("d3 family fiducials") {
    const FiducialRecord f0 = d3_family(0.0);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(f0.amplitudes[0]) < 1e-15);
    CHECK(std::abs(f0.amplitudes[1] - cxd{s, 0.0}) < 1e-15);
    CHECK(std::abs(f0.amplitudes[2] - cxd{-s, 0.0}) < 1e-15);

    const double t = std::numbers::pi / 9.0;
    const FiducialRecord fe = d3_family(t);
    CHECK(std::abs(fe.amplitudes[2] - cxd{-s * std::cos(t), -s * std::sin(t)}) < 1e-15);

    for (double tt : {0.0, 0.1, 0.3, 2.5}) CHECK(norm(d3_family(tt).amplitudes) ==
                                                 doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("Hesse SIC validates at 1e-10") {
    const SicSet s = sic_from_fiducial(d3_family(0.0));
    const SicReport rep = validate_sic(s, 1e-10);
    CHECK(rep.pass);
    CHECK(rep.max_fidelity_deviation < 1e-10);
    // pairwise fidelity 1/(d+1) = 1/4
    CHECK(hs_inner(s.projectors[0], s.projectors[1]) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("d=2 tetrahedron fiducial generates a SIC") {
    const SicSet s = sic_from_fiducial(d2_tetrahedron());
    CHECK(validate_sic(s, 1e-10).pass);
    CHECK(hs_inner(s.projectors[0], s.projectors[3]) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("t outside the canonical range still yields a SIC") {
    const SicSet s = sic_from_fiducial(d3_family(std::numbers::pi / 4.0));
    CHECK(validate_sic(s, 1e-10).pass);
}

TEST_CASE("whole canonical family validates") {
    const double tmax = std::numbers::pi / 9.0;
    for (int i = 0; i < 12; ++i) {
        const double t = tmax * i / 11;
        CHECK(validate_sic(sic_from_fiducial(d3_family(t)), 1e-10).pass);
    }
}

TEST_CASE("displacement conjugation shifts the orbit index") {
    const SicSet s = sic_from_fiducial(d3_family(0.0));
    const WeylPair pair = weyl_pair(3);
    const int a = 1, b = 2;
    const ComplexMatrix dab = displacement(a, b, pair);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            const ComplexMatrix img = dab * s.projectors[3 * j + k].matrix() * dab.adjoint();
            const int jj = (j + a) % 3, kk = (k + b) % 3;
            CHECK(hs_distance(img, s.projectors[3 * jj + kk].matrix()) < 1e-12);
        }
}

TEST_CASE("degenerate projector set fails fidelity") {
    SicSet s;
    s.dim = 2;
    ComplexMatrix p(2);
    p(0, 0) = 1.0;
    for (int i = 0; i < 4; ++i) s.projectors.emplace_back(p);
    const SicReport rep = validate_sic(s, 1e-10);
    CHECK_FALSE(rep.pass);
    CHECK(rep.max_fidelity_deviation > 0.1);
}

TEST_CASE("mixed element fails rank-1") {
    SicSet s = sic_from_fiducial(d3_family(0.0));
    s.projectors[4] = HermitianOperator(cxd{1.0 / 3.0, 0.0} * ComplexMatrix::identity(3));
    const SicReport rep = validate_sic(s, 1e-10);
    CHECK_FALSE(rep.pass);
    CHECK(rep.max_rank1_deviation > 0.1);
}

TEST_CASE("non-unit fiducial rejected") {
    FiducialRecord rec = d2_tetrahedron();
    for (auto& a : rec.amplitudes) a *= 0.9;
    CHECK_THROWS_AS(sic_from_fiducial(rec), validation_error);
}

TEST_CASE("non-SIC fiducial rejected") {
    FiducialRecord rec;
    rec.dim = 3;
    rec.amplitudes = {cxd{1.0, 0.0}, cxd{0.0, 0.0}, cxd{0.0, 0.0}};
    rec.source = "basis state";
    CHECK_THROWS_AS(sic_from_fiducial(rec), validation_error);
}

TEST_CASE("text fiducial file round-trips bit-exactly") {
    const FiducialRecord rec = d2_tetrahedron();
    std::stringstream ss;
    save_fiducial(rec, ss);
    const FiducialRecord back = load_fiducial(ss, "roundtrip");
    REQUIRE(back.dim == 2);
    CHECK(back.tolerance == rec.tolerance);
    for (int i = 0; i < 2; ++i) {
        CHECK(back.amplitudes[i].real() == rec.amplitudes[i].real());
        CHECK(back.amplitudes[i].imag() == rec.amplitudes[i].imag());
    }
}

TEST_CASE("json fiducial file round-trips bit-exactly") {
    const FiducialRecord rec = d3_family(0.17);
    std::stringstream ss;
    save_fiducial(rec, ss, /*as_json=*/true);
    const FiducialRecord back = load_fiducial(ss, "roundtrip");
    REQUIRE(back.dim == 3);
    for (int i = 0; i < 3; ++i) CHECK(back.amplitudes[i] == rec.amplitudes[i]);
}

TEST_CASE("text format with comments") {
    std::stringstream ss("# tetrahedron-ish\ndim 2\ntol 1e-10\n0.8880738339771151 0\n"
                         "0.3250575836718681 0.32505758367186816  # last row\n");
    const FiducialRecord rec = load_fiducial(ss);
    CHECK(rec.dim == 2);
    CHECK(norm(rec.amplitudes) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("truncated file is a parse error") {
    std::stringstream ss("dim 3\n");
    CHECK_THROWS_AS(load_fiducial(ss), io_error);
    std::stringstream ss2("dim 3\ntol 1e-10\n0.1 0.0\n");
    CHECK_THROWS_AS(load_fiducial(ss2), io_error);
}

TEST_CASE("norm-violating file rejected") {
    std::stringstream ss("dim 2\ntol 1e-10\n0.9 0\n0 0\n");
    CHECK_THROWS_AS(load_fiducial(ss), validation_error);
}
