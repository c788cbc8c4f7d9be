#pragma once

#include "qpr/report.hpp"

namespace qpr {

struct CheckResult {
    std::string name;
    bool pass = false;
    double deviation = 0.0;  // measured worst-case deviation for the check
    std::string detail;
};

struct VerifyOptions {
    int unitary_samples = 10000;
    int channel_samples = 1000;
    int haar_rotations = 100;
    int lemma_samples = 10000;
    int born_samples = 100;
    std::uint64_t seed = 1;
};

// Standard frame set used by the bound checks: sic-minus/sic-plus in d = 2, 3
// and Wootters frames up to max_dim.
std::vector<NqprFrame> reference_frames(int max_dim);

// Pi_j reconstructed from a sic-minus frame via Eq-inverting the affine map.
SicSet sic_from_minus_frame(const NqprFrame& f);

std::vector<CheckResult> verify_thm1(const VerifyOptions& opt);
std::vector<CheckResult> verify_thm2(const VerifyOptions& opt);
std::vector<CheckResult> verify_thm3(const VerifyOptions& opt);
std::vector<CheckResult> verify_thm4(const VerifyOptions& opt);
std::vector<CheckResult> verify_thm5(const VerifyOptions& opt);
std::vector<CheckResult> verify_thm6(const VerifyOptions& opt);
std::vector<CheckResult> verify_lemmas(int d, const VerifyOptions& opt);
std::vector<CheckResult> verify_born(const VerifyOptions& opt);

struct ScanRow {
    double t = 0.0;
    double N = 0.0, N_U = 0.0, N_C = 0.0;
    bool sic_ok = false;
    bool hw_cov = false;
    std::string label;
};

std::vector<ScanRow> scan_d3(int steps);

}  // namespace qpr
