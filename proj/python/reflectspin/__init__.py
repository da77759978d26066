# Copyright 2026 The reflectspin Authors - All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for the reflectspin verifier."""

import json as _json

from ._core import (
    CapacityError,
    Component,
    ConsistencyError,
    Error,
    InvalidInput,
    IoError,
    NumericalError,
    ParseError,
    System,
    ValidationError,
    VerificationFailure,
    embed,
    multiplet_basis,
    multiplet_counts,
    positive_part,
    project_spin_zero,
    spin_matrix,
    tilde_unitary,
    total_spin,
    trace_inequality,
    verify_json,
)


def verify(path, **options):
    """Verify a model file or directory and return ``(report, exit_code)``.

    ``report`` is the parsed JSON report, the same document the CLI writes.
    """
    text, code = verify_json(str(path), **options)
    return _json.loads(text), code


__all__ = [
    "CapacityError",
    "Component",
    "ConsistencyError",
    "Error",
    "InvalidInput",
    "IoError",
    "NumericalError",
    "ParseError",
    "System",
    "ValidationError",
    "VerificationFailure",
    "embed",
    "multiplet_basis",
    "multiplet_counts",
    "positive_part",
    "project_spin_zero",
    "spin_matrix",
    "tilde_unitary",
    "total_spin",
    "trace_inequality",
    "verify",
    "verify_json",
]
