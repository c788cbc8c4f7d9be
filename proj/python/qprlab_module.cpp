#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qpr/verify.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

std::vector<std::vector<qpr::cxd>> matrix_rows(const qpr::ComplexMatrix& m) {
    std::vector<std::vector<qpr::cxd>> rows(m.dim(), std::vector<qpr::cxd>(m.dim()));
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) rows[r][c] = m(r, c);
    return rows;
}

qpr::ComplexMatrix matrix_from_rows(const std::vector<std::vector<qpr::cxd>>& rows) {
    const int d = static_cast<int>(rows.size());
    qpr::ComplexMatrix m(d);
    for (int r = 0; r < d; ++r) {
        if (static_cast<int>(rows[r].size()) != d)
            throw std::invalid_argument("matrix rows must form a square matrix");
        for (int c = 0; c < d; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

}  // namespace

PYBIND11_MODULE(_qprlab, m) {
    m.doc() = "normal quasiprobability representations: frames and negativity measures";

    py::register_exception<qpr::validation_error>(m, "ValidationError");

    py::class_<qpr::HermitianOperator>(m, "HermitianOperator")
        .def(py::init([](const std::vector<std::vector<qpr::cxd>>& rows) {
            return qpr::HermitianOperator(matrix_from_rows(rows), 1e-9);
        }))
        .def_property_readonly("dim", &qpr::HermitianOperator::dim)
        .def_property_readonly("eigenvalues", &qpr::HermitianOperator::eigenvalues)
        .def_property_readonly("rows",
                               [](const qpr::HermitianOperator& h) { return matrix_rows(h.matrix()); });

    py::class_<qpr::NqprFrame>(m, "NqprFrame")
        .def_property_readonly("dim", [](const qpr::NqprFrame& f) { return f.dim; })
        .def_property_readonly("kind",
                               [](const qpr::NqprFrame& f) { return qpr::to_string(f.kind); })
        .def_property_readonly("elements", [](const qpr::NqprFrame& f) { return f.elements; })
        .def("__len__", [](const qpr::NqprFrame& f) { return f.elements.size(); });

    m.def("sic_minus_frame", [](int d, double t) {
        const auto rec = (d == 2) ? qpr::d2_tetrahedron() : qpr::d3_family(t);
        if (d != 2 && d != 3) throw std::invalid_argument("built-in SICs exist for d = 2, 3");
        return qpr::sic_frame(qpr::sic_from_fiducial(rec), qpr::FrameKind::sic_minus);
    }, py::arg("d"), py::arg("t") = 0.0);
    m.def("sic_plus_frame", [](int d, double t) {
        const auto rec = (d == 2) ? qpr::d2_tetrahedron() : qpr::d3_family(t);
        if (d != 2 && d != 3) throw std::invalid_argument("built-in SICs exist for d = 2, 3");
        return qpr::sic_frame(qpr::sic_from_fiducial(rec), qpr::FrameKind::sic_plus);
    }, py::arg("d"), py::arg("t") = 0.0);
    m.def("wootters_frame", &qpr::wootters_frame, py::arg("d"));
    m.def("sic_frame_from_fiducial", [](const std::vector<qpr::cxd>& amps, const std::string& sign,
                                        double tol) {
        qpr::FiducialRecord rec;
        rec.dim = static_cast<int>(amps.size());
        rec.amplitudes = amps;
        rec.source = "python fiducial";
        rec.tolerance = tol;
        return qpr::sic_frame(qpr::sic_from_fiducial(rec), qpr::frame_kind_from_string(sign));
    }, py::arg("amplitudes"), py::arg("sign") = "sic-minus", py::arg("tol") = 1e-7);

    m.def("validate_nqpr", [](const qpr::NqprFrame& f, double tol) {
        const auto r = qpr::validate_nqpr(f, tol);
        return py::dict("pass"_a = r.pass, "max_trace_deviation"_a = r.max_trace_deviation,
                        "max_orthogonality_deviation"_a = r.max_orthogonality_deviation,
                        "max_resolution_deviation"_a = r.max_resolution_deviation);
    }, py::arg("frame"), py::arg("tol") = 1e-9);

    m.def("frame_negativity",
          [](const qpr::NqprFrame& f) { return qpr::frame_negativity(f).value; });
    m.def("frame_unitary_negativity",
          [](const qpr::NqprFrame& f) { return qpr::frame_unitary_negativity(f).value; });
    m.def("frame_channel_negativity",
          [](const qpr::NqprFrame& f) { return qpr::frame_channel_negativity(f).value; });
    m.def("state_negativity", &qpr::state_negativity, py::arg("rho"), py::arg("frame"));
    m.def("mu", [](const qpr::HermitianOperator& rho, const qpr::NqprFrame& f) {
        return qpr::mu(rho, f).values;
    });
    m.def("unitary_negativity", [](const std::vector<std::vector<qpr::cxd>>& u,
                                   const qpr::NqprFrame& f) {
        return qpr::unitary_negativity(matrix_from_rows(u), f);
    });

    m.def("closed_forms", [](int d) {
        const auto c = qpr::closed_forms(d);
        return py::dict("dim"_a = c.dim, "N_minus"_a = c.N_minus, "N_plus"_a = c.N_plus,
                        "NC_minus"_a = c.NC_minus, "NC_plus"_a = c.NC_plus,
                        "NU_upper"_a = c.NU_upper, "NC_upper"_a = c.NC_upper,
                        "wootters_N"_a = c.wootters_N, "wootters_NU"_a = c.wootters_NU,
                        "wootters_NC"_a = c.wootters_NC);
    }, py::arg("d"));

    m.def("random_state", [](int d, std::uint64_t seed) { return qpr::random_state(d, seed); },
          py::arg("d"), py::arg("seed") = 1);
}
