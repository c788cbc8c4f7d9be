#pragma once

#include <json.hpp>

#include "qpr/negativity.hpp"
#include "qpr/oracles.hpp"
#include "qpr/symmetry.hpp"

namespace qpr {

using json = nlohmann::ordered_json;

struct NegativityReport {
    int dim = 0;
    FrameKind kind = FrameKind::custom;
    std::string provenance;
    double N = 0.0, N_U = 0.0, N_C = 0.0;
    Witnessed N_witness, NU_witness, NC_witness;
    ClosedForms bounds;
    std::optional<SymmetryVerdict> symmetry;  // HW generator X when applicable
};

NegativityReport analyze_frame(const NqprFrame& f);

json to_json(const NegativityReport& r);
json to_json(const FrameReport& r);
json to_json(const SicReport& r);
json to_json(const OracleReport& r);
json to_json(const ClosedForms& c);
json frame_to_json(const NqprFrame& f);
json channel_to_json(const Channel& c);

std::string csv_row(const NegativityReport& r);

}  // namespace qpr
