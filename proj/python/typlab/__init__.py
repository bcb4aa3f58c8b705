# Copyright 2026 The typlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Typicality experiments on K-separable random pure states."""

from ._typlab import (
    CSV_HEADER,
    ConsistencyError,
    IoError,
    LocalObservable,
    LogLogFit,
    Partition,
    SampleStats,
    SweepResult,
    SweepRow,
    TypicalityReport,
    canonical_typicality_bound,
    canonical_typicality_bound_purity,
    density_variance_bound,
    exact_haar_ensemble_variance,
    expectation_extensive,
    expectation_site,
    fit_loglog_slope,
    haar_state,
    k_separable_state,
    main_variance_bound,
    qubit_variance_bound,
    read_csv,
    reduced_state,
    reimann_variance_bound,
    run_ensemble,
    run_sweep,
    trace_norm,
    verify_canonical_typicality,
)

__version__ = "0.1.0"
