#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qpr/verify.hpp"

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitIo = 4;

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

struct Config {
    int dim = 3;
    std::string frame = "sic-minus";
    std::string fiducial_file;
    double t = 0.0;
    int samples = 1000;
    std::uint64_t seed = 1;
    std::string which = "all";
    int steps = 50;
    std::string format = "json";
    std::string output;
    std::string data_dir;
    int threads = 1;
};

std::ostream& open_output(const Config& cfg, std::ofstream& file) {
    if (cfg.output.empty()) return std::cout;
    file.open(cfg.output);
    if (!file) throw qpr::io_error("cannot open output file " + cfg.output);
    return file;
}

std::string resolve_fiducial_path(const Config& cfg) {
    if (cfg.fiducial_file.empty() || cfg.fiducial_file.find('/') != std::string::npos)
        return cfg.fiducial_file;
    std::string dir = cfg.data_dir;
    if (dir.empty())
        if (const char* env = std::getenv("QPRLAB_DATA")) dir = env;
    if (dir.empty()) return cfg.fiducial_file;
    return dir + "/" + cfg.fiducial_file;
}

qpr::NqprFrame build_frame(const Config& cfg) {
    const qpr::FrameKind kind = qpr::frame_kind_from_string(cfg.frame);
    if (kind == qpr::FrameKind::wootters) return qpr::wootters_frame(cfg.dim);
    if (kind == qpr::FrameKind::custom)
        throw std::invalid_argument("custom frames must come from export-frame JSON; unsupported here");

    qpr::FiducialRecord rec;
    if (!cfg.fiducial_file.empty()) {
        rec = qpr::load_fiducial_file(resolve_fiducial_path(cfg));
        if (rec.dim != cfg.dim)
            throw qpr::validation_error("fiducial dimension does not match --dim");
    } else if (cfg.dim == 2) {
        rec = qpr::d2_tetrahedron();
    } else if (cfg.dim == 3) {
        rec = qpr::d3_family(cfg.t);
    } else {
        throw qpr::validation_error(
            "built-in fiducials exist only for d = 2, 3; pass --fiducial-file for d >= 4");
    }
    return qpr::sic_frame(qpr::sic_from_fiducial(rec), kind);
}

int cmd_analyze(const Config& cfg) {
    const qpr::NqprFrame f = build_frame(cfg);
    const qpr::NegativityReport rep = qpr::analyze_frame(f);
    std::ofstream file;
    std::ostream& out = open_output(cfg, file);
    if (cfg.format == "csv") {
        out << "dim,frame,N,N_U,N_C,N_minus,N_plus,NC_lower,NC_upper\n"
            << qpr::csv_row(rep) << "\n";
    } else {
        out << qpr::to_json(rep).dump(2) << "\n";
    }
    return 0;
}

int cmd_verify(const Config& cfg) {
    qpr::VerifyOptions opt;
    opt.seed = cfg.seed;
    opt.unitary_samples = cfg.samples;
    opt.channel_samples = std::max(1, cfg.samples / 10);
    opt.lemma_samples = cfg.samples;
    opt.born_samples = std::min(cfg.samples, 100);

    std::vector<qpr::CheckResult> results;
    auto add = [&](std::vector<qpr::CheckResult> r) {
        for (auto& c : r) results.push_back(std::move(c));
    };
    const std::string& w = cfg.which;
    if (w == "thm1" || w == "all") add(qpr::verify_thm1(opt));
    if (w == "thm2" || w == "all") add(qpr::verify_thm2(opt));
    if (w == "thm3" || w == "all") add(qpr::verify_thm3(opt));
    if (w == "thm4" || w == "all") add(qpr::verify_thm4(opt));
    if (w == "thm5" || w == "all") add(qpr::verify_thm5(opt));
    if (w == "thm6" || w == "all") add(qpr::verify_thm6(opt));
    if (w == "lemmas" || w == "all") add(qpr::verify_lemmas(cfg.dim, opt));
    if (w == "born" || w == "all") add(qpr::verify_born(opt));
    if (results.empty()) {
        std::cerr << "unknown --which value: " << w << "\n";
        return kExitUsage;
    }

    bool all_pass = true;
    qpr::json report = qpr::json::array();
    for (const auto& c : results) {
        all_pass = all_pass && c.pass;
        qpr::json j;
        j["check"] = c.name;
        j["pass"] = c.pass;
        j["deviation"] = c.deviation;
        if (!c.detail.empty()) j["detail"] = c.detail;
        report.push_back(j);
        std::cerr << (c.pass ? "PASS " : "FAIL ") << c.name << " (deviation "
                  << fmt17(c.deviation) << ")\n";
    }
    std::ofstream file;
    std::ostream& out = open_output(cfg, file);
    out << report.dump(2) << "\n";
    return all_pass ? 0 : kExitVerifyFail;
}

int cmd_scan_d3(const Config& cfg) {
    const auto rows = qpr::scan_d3(cfg.steps);
    std::ofstream file;
    std::ostream& out = open_output(cfg, file);
    out << "t,N,N_U,N_C,sic_ok,hw_covariant,label\n";
    for (const auto& r : rows)
        out << fmt17(r.t) << "," << fmt17(r.N) << "," << fmt17(r.N_U) << "," << fmt17(r.N_C)
            << "," << (r.sic_ok ? "true" : "false") << "," << (r.hw_cov ? "true" : "false") << ","
            << r.label << "\n";
    return 0;
}

int cmd_bounds(const Config& cfg) {
    const qpr::ClosedForms cf = qpr::closed_forms(cfg.dim);
    std::ofstream file;
    std::ostream& out = open_output(cfg, file);
    if (cfg.format == "csv") {
        out << "dim,N_minus,N_plus,NU_sic,NC_minus,NC_plus,NU_upper,NC_upper,"
               "wootters_N,wootters_NU,wootters_NC\n";
        out << cf.dim << "," << fmt17(cf.N_minus) << "," << fmt17(cf.N_plus) << ","
            << fmt17(cf.NU_sic) << "," << fmt17(cf.NC_minus) << "," << fmt17(cf.NC_plus) << ","
            << fmt17(cf.NU_upper) << "," << fmt17(cf.NC_upper) << "," << fmt17(cf.wootters_N)
            << "," << fmt17(cf.wootters_NU) << "," << fmt17(cf.wootters_NC) << "\n";
    } else {
        out << qpr::to_json(cf).dump(2) << "\n";
    }
    return 0;
}

int cmd_validate_sic(const Config& cfg) {
    qpr::FiducialRecord rec;
    if (!cfg.fiducial_file.empty())
        rec = qpr::load_fiducial_file(resolve_fiducial_path(cfg));
    else if (cfg.dim == 2)
        rec = qpr::d2_tetrahedron();
    else if (cfg.dim == 3)
        rec = qpr::d3_family(cfg.t);
    else
        throw qpr::validation_error("pass --fiducial-file for d >= 4");

    const qpr::SicSet s = qpr::sic_from_fiducial(rec);
    const qpr::SicReport rep = qpr::validate_sic(s, rec.tolerance);
    std::ofstream file;
    std::ostream& out = open_output(cfg, file);
    out << qpr::to_json(rep).dump(2) << "\n";
    return rep.pass ? 0 : kExitValidation;
}

int cmd_export_frame(const Config& cfg) {
    const qpr::NqprFrame f = build_frame(cfg);
    std::ofstream file;
    std::ostream& out = open_output(cfg, file);
    out << qpr::frame_to_json(f).dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"normal quasiprobability representations: frames, negativity, verification"};
    app.require_subcommand(1);
    Config cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--dim", cfg.dim, "Hilbert space dimension");
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--samples", cfg.samples, "Monte Carlo sample count");
        sub->add_option("--format", cfg.format, "json|csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--output,-o", cfg.output, "output path (default stdout)");
        sub->add_option("--threads", cfg.threads, "worker thread bound");
        sub->add_option("--data-dir", cfg.data_dir, "fiducial fixture directory");
    };
    auto add_frame_opts = [&](CLI::App* sub) {
        sub->add_option("--frame", cfg.frame, "sic-minus|sic-plus|wootters")
            ->check(CLI::IsMember({"sic-minus", "sic-plus", "wootters"}));
        sub->add_option("--fiducial-t", cfg.t, "d=3 family parameter t");
        sub->add_option("--fiducial-file", cfg.fiducial_file, "fiducial file (text or JSON)");
    };

    auto* analyze = app.add_subcommand("analyze", "negativity report for one frame");
    add_common(analyze);
    add_frame_opts(analyze);

    auto* verify = app.add_subcommand("verify", "run theorem/lemma verification suites");
    add_common(verify);
    verify->add_option("--which", cfg.which, "thm1..thm6|lemmas|born|all");

    auto* scan = app.add_subcommand("scan-d3", "scan the d=3 fiducial family");
    add_common(scan);
    scan->add_option("--steps", cfg.steps, "grid points over [0, pi/9]")
        ->check(CLI::Range(2, 1000000));

    auto* bounds = app.add_subcommand("bounds", "closed-form reference values for a dimension");
    add_common(bounds);

    auto* vsic = app.add_subcommand("validate-sic", "validate a SIC orbit");
    add_common(vsic);
    add_frame_opts(vsic);

    auto* exportf = app.add_subcommand("export-frame", "emit a frame as JSON");
    add_common(exportf);
    add_frame_opts(exportf);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (scan->parsed()) return cmd_scan_d3(cfg);
        if (bounds->parsed()) return cmd_bounds(cfg);
        if (vsic->parsed()) return cmd_validate_sic(cfg);
        if (exportf->parsed()) return cmd_export_frame(cfg);
    } catch (const qpr::io_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const qpr::validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
