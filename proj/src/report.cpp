#include "qpr/report.hpp"

#include <cstdio>
#include <sstream>

namespace qpr {

namespace {

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

NegativityReport analyze_frame(const NqprFrame& f) {
    NegativityReport r;
    r.dim = f.dim;
    r.kind = f.kind;
    r.provenance = f.provenance;
    r.N_witness = frame_negativity(f);
    r.NU_witness = frame_unitary_negativity(f);
    r.NC_witness = frame_channel_negativity(f);
    r.N = r.N_witness.value;
    r.N_U = r.NU_witness.value;
    r.N_C = r.NC_witness.value;
    r.bounds = closed_forms(f.dim);
    const WeylPair pair = weyl_pair(f.dim);
    r.symmetry = classify(unitary_transfer_matrix(pair.X, f));
    return r;
}

json to_json(const ClosedForms& c) {
    json j;
    j["dim"] = c.dim;
    j["N_minus"] = c.N_minus;
    j["N_plus"] = c.N_plus;
    j["NU_sic"] = c.NU_sic;
    j["NC_minus"] = c.NC_minus;
    j["NC_plus"] = c.NC_plus;
    j["NU_lower"] = c.NU_lower;
    j["NU_upper"] = c.NU_upper;
    j["NC_lower"] = c.NC_lower;
    j["NC_upper"] = c.NC_upper;
    j["wootters_N"] = c.wootters_N;
    j["wootters_NU"] = c.wootters_NU;
    j["wootters_NC"] = c.wootters_NC;
    j["two_adic_valuation"] = c.two_adic_valuation;
    return j;
}

json to_json(const NegativityReport& r) {
    json j;
    j["schema"] = 1;
    j["dim"] = r.dim;
    j["frame"] = to_string(r.kind);
    j["provenance"] = r.provenance;
    j["N"] = r.N;
    j["N_U"] = r.N_U;
    j["N_C"] = r.N_C;
    j["witnesses"] = {{"N", {{"j", r.N_witness.j}}},
                      {"N_U", {{"j", r.NU_witness.j}, {"k", r.NU_witness.k}}},
                      {"N_C", {{"j", r.NC_witness.j}, {"k", r.NC_witness.k}}}};
    j["bounds"] = to_json(r.bounds);
    if (r.symmetry) {
        json s;
        s["kind"] = r.symmetry->permutation ? "permutation" : "has-negative-entries";
        if (r.symmetry->permutation) {
            s["sigma"] = r.symmetry->sigma;
        } else {
            s["min_entry"] = r.symmetry->min_entry;
            s["index"] = {r.symmetry->min_j, r.symmetry->min_k};
        }
        j["symmetry"] = s;
    }
    return j;
}

json to_json(const FrameReport& r) {
    json j;
    j["max_trace_deviation"] = r.max_trace_deviation;
    j["max_orthogonality_deviation"] = r.max_orthogonality_deviation;
    j["max_resolution_deviation"] = r.max_resolution_deviation;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    return j;
}

json to_json(const SicReport& r) {
    json j;
    j["max_rank1_deviation"] = r.max_rank1_deviation;
    j["max_fidelity_deviation"] = r.max_fidelity_deviation;
    j["fidelity_index"] = {r.fidelity_j, r.fidelity_k};
    j["max_resolution_deviation"] = r.max_resolution_deviation;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    return j;
}

json to_json(const OracleReport& r) {
    json j;
    j["lemma"] = r.lemma;
    j["d"] = r.dim;
    j["bound"] = r.bound;
    j["best_found"] = r.best_found;
    j["gap"] = r.gap;
    j["extremal_attained"] = r.extremal_attained;
    j["violated"] = r.violated;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    return j;
}

json frame_to_json(const NqprFrame& f) {
    json j;
    j["dim"] = f.dim;
    j["kind"] = to_string(f.kind);
    j["provenance"] = f.provenance;
    auto& elems = j["elements"] = json::array();
    for (const auto& q : f.elements) {
        json e = json::array();
        for (int r = 0; r < f.dim; ++r) {
            json row = json::array();
            for (int c = 0; c < f.dim; ++c)
                row.push_back({q.matrix()(r, c).real(), q.matrix()(r, c).imag()});
            e.push_back(row);
        }
        elems.push_back(e);
    }
    return j;
}

json channel_to_json(const Channel& c) {
    json j;
    j["dim"] = c.dim;
    auto& ks = j["kraus"] = json::array();
    for (const auto& k : c.kraus) {
        json e = json::array();
        for (int r = 0; r < c.dim; ++r) {
            json row = json::array();
            for (int col = 0; col < c.dim; ++col)
                row.push_back({k(r, col).real(), k(r, col).imag()});
            e.push_back(row);
        }
        ks.push_back(e);
    }
    j["label"] = c.label;
    return j;
}

std::string csv_row(const NegativityReport& r) {
    std::ostringstream out;
    out << r.dim << "," << to_string(r.kind) << "," << fmt17(r.N) << "," << fmt17(r.N_U) << ","
        << fmt17(r.N_C) << "," << fmt17(r.bounds.N_minus) << "," << fmt17(r.bounds.N_plus) << ","
        << fmt17(r.bounds.NC_lower) << "," << fmt17(r.bounds.NC_upper);
    return out.str();
}

}  // namespace qpr
