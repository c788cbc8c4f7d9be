#pragma once

#include <iosfwd>
#include <string>

#include "qpr/hw.hpp"
#include "qpr/linalg.hpp"

namespace qpr {

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FiducialRecord {
    int dim = 0;
    cvec amplitudes;
    std::string source;
    double tolerance = 1e-10;
};

// d^2 rank-1 projectors with pairwise fidelity (d delta + 1)/(d+1),
// ordered by (j,k) lexicographic over the generating HW orbit.
struct SicSet {
    int dim = 0;
    std::vector<HermitianOperator> projectors;
    std::optional<cvec> fiducial;
    std::string label;
};

struct SicReport {
    double max_rank1_deviation = 0.0;     // worst |spectrum - (1,0,...,0)| entry
    double max_fidelity_deviation = 0.0;  // worst |tr(P_j P_k) - (d delta + 1)/(d+1)|
    int fidelity_j = 0, fidelity_k = 0;
    double max_resolution_deviation = 0.0;  // max-norm of sum_j P_j - d*1
    double tolerance = 0.0;
    bool pass = false;
};

// d=3 fiducial family (0, 1, -e^{it})/sqrt(2); t in [0, pi/9] labels the
// canonical family but any real t yields a SIC fiducial.
FiducialRecord d3_family(double t);

// Exact d=2 fiducial with Bloch vector (1,1,1)/sqrt(3).
FiducialRecord d2_tetrahedron();

// HW orbit of a unit fiducial; throws validation_error if the orbit fails the
// SIC fidelity condition at the record's tolerance.
SicSet sic_from_fiducial(const FiducialRecord& psi);

SicReport validate_sic(const SicSet& s, double tol);

// Fiducial files: either the plain-text format
//   dim <d> / tol <t> / then d lines "<re> <im>", '#' comments allowed
// or a JSON object {"dim": d, "tol": t, "amplitudes": [[re, im], ...]}.
FiducialRecord load_fiducial(std::istream& in, const std::string& source = "stream");
FiducialRecord load_fiducial_file(const std::string& path);
void save_fiducial(const FiducialRecord& rec, std::ostream& out, bool as_json = false);

}  // namespace qpr
