#include "qpr/verify.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace qpr {

namespace {

CheckResult check(const std::string& name, bool pass, double dev, const std::string& detail = "") {
    return {name, pass, dev, detail};
}

const std::vector<int> kWoottersDims = {2, 3, 4, 5, 6, 8, 9};

}  // namespace

std::vector<NqprFrame> reference_frames(int max_dim) {
    std::vector<NqprFrame> frames;
    if (max_dim >= 2) {
        const SicSet s2 = sic_from_fiducial(d2_tetrahedron());
        frames.push_back(sic_frame(s2, FrameKind::sic_minus));
        frames.push_back(sic_frame(s2, FrameKind::sic_plus));
    }
    if (max_dim >= 3) {
        const SicSet s3 = sic_from_fiducial(d3_family(0.0));
        frames.push_back(sic_frame(s3, FrameKind::sic_minus));
        frames.push_back(sic_frame(s3, FrameKind::sic_plus));
    }
    for (int d : kWoottersDims)
        if (d <= max_dim) frames.push_back(wootters_frame(d));
    return frames;
}

SicSet sic_from_minus_frame(const NqprFrame& f) {
    const int d = f.dim;
    const double root = std::sqrt(d + 1.0);
    SicSet s;
    s.dim = d;
    s.label = "reconstructed from " + f.provenance;
    const ComplexMatrix id = ComplexMatrix::identity(d);
    for (const auto& q : f.elements) {
        ComplexMatrix pi = q.matrix() - cxd{(1.0 - root) / d, 0.0} * id;
        pi *= cxd{1.0 / root, 0.0};
        s.projectors.emplace_back(std::move(pi), 1e-9);
    }
    return s;
}

std::vector<CheckResult> verify_thm1(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    const auto frames = reference_frames(4);
    for (const auto& f : frames) {
        const ClosedForms cf = closed_forms(f.dim);
        std::vector<NqprFrame> copies;
        copies.push_back(f);
        for (int r = 0; r < opt.haar_rotations; ++r)
            copies.push_back(rotate_frame(f, random_unitary(f.dim, opt.seed, 100 * r + f.dim)));

        double worst = 0.0;
        bool ok = true;
        for (const auto& g : copies) {
            const double n = frame_negativity(g).value;
            const double below = cf.N_minus - n;
            const double above = n - cf.N_plus;
            worst = std::max({worst, below, above});
            ok = ok && below <= 1e-9 && above <= 1e-9;
        }
        out.push_back(check("thm1 bounds " + to_string(f.kind) + " d=" + std::to_string(f.dim) +
                                " (+" + std::to_string(opt.haar_rotations) + " rotations)",
                            ok, std::max(0.0, worst)));

        if (f.kind == FrameKind::sic_minus) {
            const double dev = std::abs(frame_negativity(f).value - cf.N_minus);
            bool lower_all = true;
            for (const auto& q : f.elements)
                lower_all = lower_all && spectrum_class(q) == SpectrumClass::lower_extremal;
            const SicReport rep = validate_sic(sic_from_minus_frame(f), 1e-9);
            out.push_back(check("thm1 saturation sic-minus d=" + std::to_string(f.dim),
                                dev <= 1e-9 && lower_all && rep.pass,
                                std::max(dev, rep.max_fidelity_deviation)));
        }
    }
    return out;
}

std::vector<CheckResult> verify_thm2(const VerifyOptions& opt) {
    (void)opt;
    std::vector<CheckResult> out;
    const SicSet hesse = sic_from_fiducial(d3_family(0.0));

    auto match_all = [](const MaxNegativityStates& mx, const SicSet& sic) {
        double worst = 0.0;
        for (const auto& w : mx.witnesses) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& p : sic.projectors)
                best = std::min(best, hs_distance(w.matrix(), p.matrix()));
            worst = std::max(worst, best);
        }
        return worst;
    };

    {
        const auto mx = count_max_negativity_states(sic_frame(hesse, FrameKind::sic_plus));
        const double dev = match_all(mx, hesse);
        out.push_back(check("thm2 sic-plus d=3 count=9, witnesses = Hesse projectors",
                            mx.count == 9 && dev < 1e-8, dev,
                            "count=" + std::to_string(mx.count)));
    }
    {
        const auto mx = count_max_negativity_states(wootters_frame(3));
        const double dev = match_all(mx, hesse);
        out.push_back(check("thm2 wootters d=3 count=9, witnesses = Hesse projectors",
                            mx.count == 9 && dev < 1e-8, dev,
                            "count=" + std::to_string(mx.count)));
    }
    {
        const auto mx = count_max_negativity_states(sic_frame(hesse, FrameKind::sic_minus));
        out.push_back(check("thm2 sic-minus d=3 count=0", mx.count == 0, mx.count));
    }
    {
        const auto mx = count_max_negativity_states(wootters_frame(2));
        double worst = 1.0;
        if (mx.count == 4) {
            worst = 0.0;
            for (const auto& w : mx.witnesses) {
                const auto& m = w.matrix();
                const double bx = 2.0 * std::real(m(0, 1));
                const double by = 2.0 * std::imag(m(1, 0));
                const double bz = std::real(m(0, 0)) - std::real(m(1, 1));
                const double target = 1.0 / std::sqrt(3.0);
                worst = std::max({worst, std::abs(std::abs(bx) - target),
                                  std::abs(std::abs(by) - target),
                                  std::abs(std::abs(bz) - target)});
            }
        }
        out.push_back(check("thm2 wootters d=2 count=4, magic-state Bloch components",
                            mx.count == 4 && worst <= 1e-9, worst,
                            "count=" + std::to_string(mx.count)));
    }
    return out;
}

std::vector<CheckResult> verify_thm3(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (const auto& f : reference_frames(4)) {
        const ClosedForms cf = closed_forms(f.dim);
        const Witnessed fw = frame_unitary_negativity(f);

        const bool in_range = fw.value >= 1.0 - 1e-9 && fw.value <= cf.NU_upper + 1e-9;
        out.push_back(check("thm3 range " + to_string(f.kind) + " d=" + std::to_string(f.dim),
                            in_range, fw.value));
        if (f.kind == FrameKind::sic_minus || f.kind == FrameKind::sic_plus)
            out.push_back(check("thm3 sic lower-bound saturation " + to_string(f.kind) +
                                    " d=" + std::to_string(f.dim),
                                std::abs(fw.value - 1.0) <= 1e-9, std::abs(fw.value - 1.0)));

        double sampled_max = 0.0;
        for (int s = 0; s < opt.unitary_samples; ++s)
            sampled_max = std::max(
                sampled_max, unitary_negativity(random_unitary(f.dim, opt.seed, s), f));
        const double sat =
            unitary_negativity(saturating_unitary(f, fw.j, fw.k), f);
        const bool ok = sampled_max <= fw.value + 1e-9 && std::abs(sat - fw.value) <= 1e-9;
        out.push_back(check("thm3/eq6 oracle " + to_string(f.kind) + " d=" +
                                std::to_string(f.dim),
                            ok, std::max(sampled_max - fw.value, std::abs(sat - fw.value)),
                            "sampled_max=" + std::to_string(sampled_max)));
    }
    return out;
}

std::vector<CheckResult> verify_thm4(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (const auto& f : reference_frames(4)) {
        const ClosedForms cf = closed_forms(f.dim);
        const Witnessed fw = frame_channel_negativity(f);

        out.push_back(check("thm4 lower bound " + to_string(f.kind) + " d=" +
                                std::to_string(f.dim),
                            fw.value >= cf.NC_lower - 1e-9, cf.NC_lower - fw.value));
        if (f.kind == FrameKind::sic_minus)
            out.push_back(check("thm4 saturation sic-minus d=" + std::to_string(f.dim),
                                std::abs(fw.value - cf.NC_lower) <= 1e-9,
                                std::abs(fw.value - cf.NC_lower)));

        double sampled_max = 0.0;
        for (int s = 0; s < opt.channel_samples; ++s)
            sampled_max = std::max(
                sampled_max, channel_negativity(random_channel(f.dim, opt.seed, s), f));
        const double sat = channel_negativity(saturating_channel(f, fw.j, fw.k), f);
        const bool ok = sampled_max <= fw.value + 1e-9 && std::abs(sat - fw.value) <= 1e-9;
        out.push_back(check("thm4/eq7 oracle " + to_string(f.kind) + " d=" +
                                std::to_string(f.dim),
                            ok, std::max(sampled_max - fw.value, std::abs(sat - fw.value)),
                            "sampled_max=" + std::to_string(sampled_max)));
    }
    return out;
}

std::vector<CheckResult> verify_thm5(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (int d : {2, 3}) {
        const SicSet s =
            sic_from_fiducial(d == 2 ? d2_tetrahedron() : d3_family(0.0));
        for (FrameKind kind : {FrameKind::sic_minus, FrameKind::sic_plus}) {
            const NqprFrame f = sic_frame(s, kind);
            const WeylPair pair = weyl_pair(d);

            bool all_perm = true;
            for (int j = 0; j < d && all_perm; ++j)
                for (int k = 0; k < d && all_perm; ++k) {
                    const ComplexMatrix disp = displacement(j, k, pair);
                    const SymmetryVerdict v = classify(unitary_transfer_matrix(disp, f));
                    const auto sigma = is_symmetry(disp, f);
                    all_perm = v.permutation && sigma.has_value() &&
                               (!v.sigma.empty() && sigma.has_value());
                }
            out.push_back(check("thm5 displacements permute " + to_string(kind) +
                                    " d=" + std::to_string(d),
                                all_perm, all_perm ? 0.0 : 1.0));

            double worst_min = 0.0;
            bool all_negative = true;
            const int haar = std::min(opt.unitary_samples, 1000);
            for (int smp = 0; smp < haar; ++smp) {
                const ComplexMatrix u = random_unitary(d, opt.seed, 7000 + smp);
                const SymmetryVerdict v = classify(unitary_transfer_matrix(u, f));
                worst_min = std::min(worst_min, v.min_entry);
                all_negative = all_negative && v.min_entry < -1e-6;
            }
            out.push_back(check("thm5 haar unitaries negative " + to_string(kind) +
                                    " d=" + std::to_string(d),
                                all_negative, worst_min,
                                std::to_string(haar) + " samples"));
        }
    }
    return out;
}

std::vector<ScanRow> scan_d3(int steps) {
    if (steps < 2) throw std::invalid_argument("scan_d3: steps must be >= 2");
    std::vector<ScanRow> rows;
    const double tmax = std::numbers::pi / 9.0;
    const WeylPair pair = weyl_pair(3);
    for (int i = 0; i < steps; ++i) {
        const double t = tmax * i / (steps - 1);
        const SicSet s = sic_from_fiducial(d3_family(t));
        const NqprFrame f = sic_frame(s, FrameKind::sic_minus);
        ScanRow row;
        row.t = t;
        row.N = frame_negativity(f).value;
        row.N_U = frame_unitary_negativity(f).value;
        row.N_C = frame_channel_negativity(f).value;
        row.sic_ok = validate_sic(s, 1e-10).pass;
        row.hw_cov = hw_covariant(f, pair);
        row.label = (i == 0) ? "hesse" : "";
        rows.push_back(row);
    }
    return rows;
}

std::vector<CheckResult> verify_thm6(const VerifyOptions& opt) {
    (void)opt;
    std::vector<CheckResult> out;
    const auto rows = scan_d3(50);
    double worst = 0.0;
    bool flags = true;
    for (const auto& r : rows) {
        worst = std::max({worst, std::abs(r.N - 1.0 / 3.0), std::abs(r.N_U - 1.0),
                          std::abs(r.N_C - 5.0 / 3.0)});
        flags = flags && r.sic_ok && r.hw_cov;
    }
    out.push_back(check("thm6 family scan (50 points): constant (1/3, 1, 5/3), covariant",
                        flags && worst <= 1e-9, worst));

    // the d=3 Wootters frame is the Hesse Q^+ frame: Pi_00 = (1 - A_00)/2
    const NqprFrame w3 = wootters_frame(3);
    ComplexMatrix pi00 = ComplexMatrix::identity(3) - w3.elements[0].matrix();
    pi00 *= cxd{0.5, 0.0};
    const HermitianOperator proj(std::move(pi00));
    cvec psi = proj.spectrum().eigenvector(0);
    // strip the global phase using the largest amplitude
    int big = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(psi[i]) > std::abs(psi[big])) big = i;
    const cxd phase = psi[big] / std::abs(psi[big]);
    for (auto& a : psi) a /= phase;
    const double s = 1.0 / std::sqrt(2.0);
    cvec target = {cxd{0.0, 0.0}, cxd{s, 0.0}, cxd{-s, 0.0}};
    const cxd tphase = target[big] / std::abs(target[big]);
    for (auto& a : target) a /= tphase;
    double dev = 0.0;
    for (int i = 0; i < 3; ++i) dev = std::max(dev, std::abs(psi[i] - target[i]));
    out.push_back(check("thm6 wootters-derived fiducial = (0,1,-1)/sqrt(2)", dev <= 1e-10, dev));
    return out;
}

std::vector<CheckResult> verify_lemmas(int d, const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    auto push = [&](const OracleReport& r) {
        const bool pass = !r.violated && r.extremal_attained && r.gap < 1e-4;
        out.push_back(check("lemma " + r.lemma + " d=" + std::to_string(d), pass, r.gap,
                            "bound=" + std::to_string(r.bound) +
                                " best=" + std::to_string(r.best_found)));
    };
    push(lemma_l1_check(d, opt.lemma_samples, opt.seed));
    if (d >= 3) {
        push(lemma_channel_lower_check(d, opt.lemma_samples, opt.seed));
        const double f1 = lemma_channel_lower_f(d, 1, d - 1);
        const double root = std::sqrt(d + 1.0);
        const double bound = d - root + 2.0 / d * root - 2.0 / d;
        bool mono = std::abs(f1 - bound) <= 1e-10;
        if (d >= 4) mono = mono && lemma_channel_lower_f(d, 2, d - 2) > f1;
        out.push_back(check("lemma f(1,d-1) closed form d=" + std::to_string(d), mono,
                            std::abs(f1 - bound)));
    }
    push(lemma_negc2_check(d, opt.lemma_samples, opt.seed));

    const OracleReport t1 = theorem1_spectrum_check(d, opt.lemma_samples, opt.seed);
    out.push_back(check("extremal spectrum range d=" + std::to_string(d),
                        !t1.violated && t1.extremal_attained, t1.best_found));
    return out;
}

std::vector<CheckResult> verify_born(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (const auto& f : reference_frames(4)) {
        double worst = 0.0;
        for (int s = 0; s < opt.born_samples; ++s) {
            const HermitianOperator rho = random_state(f.dim, opt.seed, s);
            const int outcomes = 2 + static_cast<int>(s % static_cast<std::uint64_t>(f.dim));
            const auto povm = random_povm(f.dim, outcomes, opt.seed, s);
            worst = std::max(worst, born_check(rho, povm, f));
        }
        out.push_back(check("born rule " + to_string(f.kind) + " d=" + std::to_string(f.dim),
                            worst < 1e-9, worst,
                            std::to_string(opt.born_samples) + " state/POVM pairs"));
    }
    return out;
}

}  // namespace qpr
