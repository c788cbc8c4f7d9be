#include "qpr/sic.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace qpr {

namespace {

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

FiducialRecord d3_family(double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("d3_family: t must be finite");
    const double s = 1.0 / std::sqrt(2.0);
    FiducialRecord rec;
    rec.dim = 3;
    rec.amplitudes = {cxd{0.0, 0.0}, cxd{s, 0.0}, cxd{-s * std::cos(t), -s * std::sin(t)}};
    rec.source = "d3-family t=" + fmt17(t);
    rec.tolerance = 1e-10;
    return rec;
}

FiducialRecord d2_tetrahedron() {
    // Bloch vector (1,1,1)/sqrt(3): theta = acos(1/sqrt(3)), phi = pi/4
    const double theta = std::acos(1.0 / std::sqrt(3.0));
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    const double q = std::numbers::pi / 4.0;
    FiducialRecord rec;
    rec.dim = 2;
    rec.amplitudes = {cxd{c, 0.0}, cxd{s * std::cos(q), s * std::sin(q)}};
    rec.source = "d2-tetrahedron";
    rec.tolerance = 1e-10;
    return rec;
}

SicSet sic_from_fiducial(const FiducialRecord& psi) {
    const int d = psi.dim;
    if (d < 2) throw std::invalid_argument("sic_from_fiducial: dim must be >= 2");
    if (static_cast<int>(psi.amplitudes.size()) != d)
        throw std::invalid_argument("sic_from_fiducial: amplitude count does not match dim");
    if (std::abs(norm(psi.amplitudes) - 1.0) > std::max(psi.tolerance, 1e-12))
        throw validation_error("sic_from_fiducial: fiducial is not unit norm");

    const WeylPair pair = weyl_pair(d);
    SicSet s;
    s.dim = d;
    s.fiducial = psi.amplitudes;
    s.label = psi.source;
    s.projectors.reserve(static_cast<size_t>(d) * d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            cvec v = displacement(j, k, pair).apply(psi.amplitudes);
            s.projectors.emplace_back(ComplexMatrix::outer(v, v));
        }

    SicReport rep = validate_sic(s, std::max(psi.tolerance, 1e-12));
    if (rep.max_fidelity_deviation > rep.tolerance)
        throw validation_error("sic_from_fiducial: not a SIC fiducial (fidelity deviation " +
                               fmt17(rep.max_fidelity_deviation) + ")");
    if (!rep.pass)
        throw validation_error("sic_from_fiducial: orbit failed SIC validation");
    return s;
}

SicReport validate_sic(const SicSet& s, double tol) {
    const int d = s.dim;
    const int n = static_cast<int>(s.projectors.size());
    SicReport rep;
    rep.tolerance = tol;
    if (n != d * d) {
        rep.max_fidelity_deviation = 1.0;
        return rep;
    }

    for (const auto& p : s.projectors) {
        const auto& ev = p.eigenvalues();
        double dev = std::abs(ev[0] - 1.0);
        for (size_t r = 1; r < ev.size(); ++r) dev = std::max(dev, std::abs(ev[r]));
        rep.max_rank1_deviation = std::max(rep.max_rank1_deviation, dev);
    }

    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) {
            const double target = (j == k) ? 1.0 : 1.0 / (d + 1.0);
            const double dev = std::abs(hs_inner(s.projectors[j], s.projectors[k]) - target);
            if (dev > rep.max_fidelity_deviation) {
                rep.max_fidelity_deviation = dev;
                rep.fidelity_j = j;
                rep.fidelity_k = k;
            }
        }

    ComplexMatrix sum = ComplexMatrix::zero(d);
    for (const auto& p : s.projectors) sum += p.matrix();
    sum -= cxd{static_cast<double>(d), 0.0} * ComplexMatrix::identity(d);
    rep.max_resolution_deviation = sum.max_abs();

    rep.pass = rep.max_rank1_deviation <= tol && rep.max_fidelity_deviation <= tol &&
               rep.max_resolution_deviation <= tol * d;
    return rep;
}

namespace {

FiducialRecord fiducial_from_json(const nlohmann::json& j, const std::string& source) {
    FiducialRecord rec;
    try {
        rec.dim = j.at("dim").get<int>();
        rec.tolerance = j.at("tol").get<double>();
        for (const auto& amp : j.at("amplitudes")) {
            if (!amp.is_array() || amp.size() != 2)
                throw io_error("fiducial: amplitude entries must be [re, im]");
            rec.amplitudes.emplace_back(amp[0].get<double>(), amp[1].get<double>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("fiducial: malformed JSON: ") + e.what());
    }
    rec.source = source;
    return rec;
}

void check_record(const FiducialRecord& rec) {
    if (rec.dim < 2) throw io_error("fiducial: dim must be >= 2");
    if (static_cast<int>(rec.amplitudes.size()) != rec.dim)
        throw io_error("fiducial: expected " + std::to_string(rec.dim) + " amplitudes, got " +
                       std::to_string(rec.amplitudes.size()));
    if (std::abs(norm(rec.amplitudes) - 1.0) > std::max(rec.tolerance, 1e-12))
        throw validation_error("fiducial: norm violation (|psi| = " + fmt17(norm(rec.amplitudes)) +
                               ")");
}

}  // namespace

FiducialRecord load_fiducial(std::istream& in, const std::string& source) {
    // sniff the first non-space character: '{' means JSON
    char c;
    while (in.get(c) && std::isspace(static_cast<unsigned char>(c))) {
    }
    if (!in) throw io_error("fiducial: empty input");
    in.putback(c);
    FiducialRecord rec;
    if (c == '{') {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw io_error(std::string("fiducial: JSON parse error: ") + e.what());
        }
        rec = fiducial_from_json(j, source);
    } else {
        rec.source = source;
        std::string line;
        int state = 0;  // 0: want dim, 1: want tol, 2: amplitudes
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            std::string tok;
            if (!(ls >> tok)) continue;
            if (state == 0) {
                if (tok != "dim" || !(ls >> rec.dim)) throw io_error("fiducial: expected 'dim <d>'");
                state = 1;
            } else if (state == 1) {
                if (tok != "tol" || !(ls >> rec.tolerance))
                    throw io_error("fiducial: expected 'tol <float>'");
                state = 2;
            } else {
                double re, im;
                std::istringstream as(line);
                if (!(as >> re >> im)) throw io_error("fiducial: expected '<re> <im>' line");
                rec.amplitudes.emplace_back(re, im);
            }
        }
        if (state < 2) throw io_error("fiducial: truncated file (missing header)");
    }
    check_record(rec);
    return rec;
}

FiducialRecord load_fiducial_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("fiducial: cannot open " + path);
    return load_fiducial(in, path);
}

void save_fiducial(const FiducialRecord& rec, std::ostream& out, bool as_json) {
    if (as_json) {
        nlohmann::ordered_json j;
        j["dim"] = rec.dim;
        j["tol"] = rec.tolerance;
        auto& amps = j["amplitudes"] = nlohmann::json::array();
        for (const auto& a : rec.amplitudes) amps.push_back({a.real(), a.imag()});
        out << j.dump(2) << "\n";
    } else {
        out << "dim " << rec.dim << "\n";
        out << "tol " << fmt17(rec.tolerance) << "\n";
        for (const auto& a : rec.amplitudes)
            out << fmt17(a.real()) << " " << fmt17(a.imag()) << "\n";
    }
}

}  // namespace qpr
