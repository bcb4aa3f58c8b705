// Copyright 2026 The typlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "typlab/bounds.hpp"
#include "typlab/config.hpp"
#include "typlab/csv.hpp"
#include "typlab/errors.hpp"
#include "typlab/experiments.hpp"
#include "typlab/sampling.hpp"

namespace py = pybind11;
using namespace typlab;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

py::array_t<Complex> to_numpy(const ComplexVector &v) {
    py::array_t<Complex> out(static_cast<py::ssize_t>(v.dim()));
    std::copy(v.amplitudes().begin(), v.amplitudes().end(), out.mutable_data());
    return out;
}

py::array_t<Complex> to_numpy(const ComplexMatrix &m) {
    const auto n = static_cast<py::ssize_t>(m.dim());
    py::array_t<Complex> out({n, n});
    std::copy(m.data().begin(), m.data().end(), out.mutable_data());
    return out;
}

ComplexVector vector_from(const ComplexArray &a) {
    if (a.ndim() != 1) {
        throw ValidationError("expected a 1-d array of amplitudes");
    }
    return ComplexVector(std::vector<Complex>(a.data(), a.data() + a.size()));
}

ComplexMatrix matrix_from(const ComplexArray &a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1)) {
        throw ValidationError("expected a square 2-d array");
    }
    return ComplexMatrix(static_cast<std::size_t>(a.shape(0)), std::vector<Complex>(a.data(), a.data() + a.size()));
}

ExperimentConfig config_from(const std::string &text, std::optional<std::uint64_t> samples,
                             std::optional<std::uint64_t> seed, unsigned workers) {
    ExperimentConfig c = parse_config(text);
    if (samples) {
        c.samples = *samples;
    }
    if (seed) {
        c.seed = *seed;
    }
    c.workers = workers;
    return c;
}

}  // namespace

PYBIND11_MODULE(_typlab, m) {
    m.doc() = "Typicality experiments on K-separable random pure states.";

    py::register_exception<IoError>(m, "IoError", PyExc_OSError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

    py::class_<Partition>(m, "Partition")
        .def(py::init<std::size_t, std::size_t, std::size_t>(), py::arg("n_sites"), py::arg("n_blocks"),
             py::arg("local_dim") = 2)
        .def_static("with_block_size", &Partition::with_block_size, py::arg("n_sites"), py::arg("block_size"),
                    py::arg("local_dim") = 2)
        .def_property_readonly("n_sites", &Partition::n_sites)
        .def_property_readonly("n_blocks", &Partition::n_blocks)
        .def_property_readonly("block_size", &Partition::block_size)
        .def_property_readonly("local_dim", &Partition::local_dim)
        .def_property_readonly("block_dim", &Partition::block_dim)
        .def("__repr__", &Partition::to_string);

    py::class_<LocalObservable>(m, "LocalObservable")
        .def(py::init([](const ComplexArray &a, const std::string &name) {
                 return LocalObservable(HermitianMatrix(matrix_from(a)), name);
             }),
             py::arg("matrix"), py::arg("name") = "custom")
        .def_static("preset", &LocalObservable::preset, py::arg("name"))
        .def_static("parse", &parse_sigma, py::arg("text"), py::arg("d") = 2,
                    "Parse a preset name or a matrix literal such as [[0,1],[1,0]].")
        .def_property_readonly("name", &LocalObservable::name)
        .def_property_readonly("dim", &LocalObservable::dim)
        .def_property_readonly("op_norm", &LocalObservable::op_norm)
        .def_property_readonly("is_diagonal", &LocalObservable::is_diagonal)
        .def_property_readonly("matrix", [](const LocalObservable &o) { return to_numpy(o.sigma().matrix()); })
        .def("__repr__", [](const LocalObservable &o) { return "LocalObservable('" + o.name() + "')"; });

    py::class_<SampleStats>(m, "SampleStats")
        .def_property_readonly("count", &SampleStats::count)
        .def_property_readonly("mean", &SampleStats::mean)
        .def_property_readonly("variance", &SampleStats::variance)
        .def_property_readonly("mean_stderr", &SampleStats::mean_stderr)
        .def_property_readonly("variance_stderr", &SampleStats::variance_stderr);

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("n", &SweepRow::n)
        .def_readonly("k", &SweepRow::k)
        .def_readonly("n_b", &SweepRow::n_b)
        .def_readonly("m", &SweepRow::m)
        .def_readonly("mean_a", &SweepRow::mean_a)
        .def_readonly("var_a", &SweepRow::var_a)
        .def_readonly("var_a_stderr", &SweepRow::var_a_stderr)
        .def_readonly("density_bound", &SweepRow::density_bound)
        .def_readonly("exact_density_variance", &SweepRow::exact_density_variance)
        .def_readonly("seed", &SweepRow::seed)
        .def("__repr__", &sweep_csv_line);

    py::class_<LogLogFit>(m, "LogLogFit")
        .def_readonly("slope", &LogLogFit::slope)
        .def_readonly("intercept", &LogLogFit::intercept)
        .def_readonly("r_squared", &LogLogFit::r_squared);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("rows", &SweepResult::rows)
        .def_readonly("fit", &SweepResult::fit)
        .def("to_csv", [](const SweepResult &r) { return sweep_csv(r.rows); });

    py::class_<TypicalityReport>(m, "TypicalityReport")
        .def_readonly("n_qubits", &TypicalityReport::n_qubits)
        .def_readonly("samples", &TypicalityReport::samples)
        .def_readonly("mean_trace_norm", &TypicalityReport::mean_trace_norm)
        .def_readonly("mean_trace_norm_stderr", &TypicalityReport::mean_trace_norm_stderr)
        .def_readonly("mean_trace_distance", &TypicalityReport::mean_trace_distance)
        .def_readonly("mean_sq_trace_distance", &TypicalityReport::mean_sq_trace_distance)
        .def_readonly("bound", &TypicalityReport::bound)
        .def_readonly("squared_bound", &TypicalityReport::squared_bound);

    // States.
    m.def(
        "haar_state",
        [](std::size_t dim, std::uint64_t seed, std::uint64_t stream_id) {
            RngStream s(seed, stream_id);
            return to_numpy(haar_state(dim, s));
        },
        py::arg("dim"), py::arg("seed"), py::arg("stream_id") = 0);
    m.def(
        "k_separable_state",
        [](const Partition &p, std::uint64_t sample_index, std::uint64_t seed) {
            const KSeparableState state = k_separable_state(p, sample_index, seed);
            std::vector<py::array_t<Complex>> blocks;
            for (const auto &b : state.blocks()) {
                blocks.push_back(to_numpy(b));
            }
            return blocks;
        },
        py::arg("partition"), py::arg("sample_index"), py::arg("seed"), "Block vectors of one K-separable sample.");
    m.def(
        "expectation_site",
        [](const ComplexArray &block, std::size_t site, const LocalObservable &sigma) {
            return expectation_site(vector_from(block), site, sigma);
        },
        py::arg("block"), py::arg("site"), py::arg("sigma"));
    m.def(
        "expectation_extensive",
        [](const Partition &p, const std::vector<ComplexArray> &blocks, const LocalObservable &sigma) {
            std::vector<ComplexVector> vs;
            for (const auto &b : blocks) {
                vs.push_back(vector_from(b));
            }
            return expectation_extensive(KSeparableState(p, std::move(vs)), {sigma, p.n_sites()});
        },
        py::arg("partition"), py::arg("blocks"), py::arg("sigma"));
    m.def(
        "reduced_state",
        [](const ComplexArray &psi, std::size_t site, std::size_t d) {
            return to_numpy(partial_trace_single_site(vector_from(psi), site, d).hermitian().matrix());
        },
        py::arg("psi"), py::arg("site"), py::arg("local_dim") = 2);
    m.def(
        "trace_norm", [](const ComplexArray &h) { return trace_norm(HermitianMatrix(matrix_from(h))); },
        py::arg("matrix"));

    // Bounds.
    m.def("canonical_typicality_bound", &canonical_typicality_bound_dim, py::arg("d_s"), py::arg("d_r"));
    m.def("canonical_typicality_bound_purity", &canonical_typicality_bound_purity, py::arg("d_s"),
          py::arg("purity"));
    m.def("reimann_variance_bound", &reimann_variance_bound, py::arg("op_norm"), py::arg("purity"));
    m.def("main_variance_bound", &main_variance_bound, py::arg("n_sites"), py::arg("sigma_norm"), py::arg("d"),
          py::arg("n_b"));
    m.def("qubit_variance_bound", &qubit_variance_bound, py::arg("n_sites"), py::arg("n_blocks"));
    m.def("density_variance_bound", &density_variance_bound, py::arg("n_sites"), py::arg("n_blocks"));
    m.def("exact_haar_ensemble_variance", &exact_haar_ensemble_variance, py::arg("partition"), py::arg("sigma"));

    // Experiments.
    m.def(
        "run_ensemble",
        [](const Partition &p, const LocalObservable &sigma, std::uint64_t samples, std::uint64_t seed,
           const std::string &sampler, unsigned workers) {
            SamplerMode mode;
            if (sampler == "haar") {
                mode = SamplerMode::Haar;
            } else if (sampler == "eigenbasis") {
                mode = SamplerMode::Eigenbasis;
            } else {
                throw ValidationError("sampler must be 'haar' or 'eigenbasis'");
            }
            py::gil_scoped_release release;
            return run_ensemble(p, sigma, samples, seed, mode, workers);
        },
        py::arg("partition"), py::arg("sigma"), py::arg("samples"), py::arg("seed"), py::arg("sampler") = "haar",
        py::arg("workers") = 1);
    m.def(
        "run_sweep",
        [](const std::string &config, std::optional<std::uint64_t> samples, std::optional<std::uint64_t> seed,
           unsigned workers) {
            const ExperimentConfig c = config_from(config, samples, seed, workers);
            py::gil_scoped_release release;
            return run_sweep(c);
        },
        py::arg("config"), py::arg("samples") = py::none(), py::arg("seed") = py::none(), py::arg("workers") = 1,
        "Run the sweep described by config text (same grammar as the CLI config file).");
    m.def(
        "fit_loglog_slope",
        [](const std::vector<std::pair<double, double>> &points) { return fit_loglog_slope(points); },
        py::arg("points"));
    m.def(
        "verify_canonical_typicality",
        [](std::size_t n, std::uint64_t samples, std::uint64_t seed, unsigned workers) {
            py::gil_scoped_release release;
            return verify_canonical_typicality(n, samples, seed, workers);
        },
        py::arg("n_qubits"), py::arg("samples"), py::arg("seed"), py::arg("workers") = 1);
    m.def(
        "read_csv", [](const std::string &text) { return read_csv(text); }, py::arg("text"));

    m.attr("CSV_HEADER") = std::string(kSweepCsvHeader);
}
