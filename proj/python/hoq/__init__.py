# Copyright 2026 The hoq Authors
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
"""Python bindings for the hoq library."""

import json as _json

from ._hoq import (  # noqa: F401
    CMatrix,
    Channel,
    DimensionError,
    IoError,
    LayoutError,
    NumericalError,
    ProcessMatrix,
    SchemaError,
    __version__,
    classical_switch,
    csim_process,
    csim_residual,
    frobenius_distance,
    kraus_channel,
    link_product,
    min_eigenvalue,
    mixed_unitary,
    numeric_rank,
    pauli,
    random_channel,
    random_unitary,
    supermap_apply,
    switch_on_unitaries,
    switch_oracle_kraus,
    switch_process,
    unitary_channel,
)
from . import _hoq


def qccc_check_classical(n=1):
    """Condition residuals of the classical switch decomposition."""
    return _json.loads(_hoq._qccc_check_classical(n))


def qccc_check_naive(n=1):
    """Condition residuals of the naive two-term split of the switch."""
    return _json.loads(_hoq._qccc_check_naive(n))


def set_independence(d=2, m=1, n=1, which="B", basis_seed=0):
    return _json.loads(_hoq._set_independence(d, m, n, which, basis_seed))


def branch_support(seed=0):
    return _json.loads(_hoq._branch_support(seed))


def span_lemma(dim, count, seed):
    return _json.loads(_hoq._span_lemma(dim, count, seed))


def qccc_distance(target, orders=((1, 2), (2, 1)), max_iters=2000, tol=1e-9, stride=1):
    """Dykstra distance estimate from `target` to mixtures of fixed orders."""
    return _json.loads(
        _hoq._qccc_distance(target, [list(o) for o in orders], max_iters, tol, stride)
    )


def run_suite(suite="all", n=1, seed=7, trials=100, threads=1, timings=True):
    return _json.loads(_hoq._run_suite(suite, n, seed, trials, threads, timings))


def validate_file(path):
    return _json.loads(_hoq._validate_file(path))


def process_to_json(p):
    return _json.loads(_hoq._to_json(p))


def process_from_json(doc):
    return _hoq._process_from_json(_json.dumps(doc))
