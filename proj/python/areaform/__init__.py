# Copyright 2026 The areaform Authors
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

"""Finite-instance checks of measure-theoretic area formulas.

Exact values are ``fractions.Fraction``; float-backend values are ``float``;
+inf is ``math.inf``. Point arguments are lists of point ids.
"""

from ._core import (
    InputError,
    Instance,
    check_absolute_continuity,
    federer_density,
    generate,
    hunt,
    load_instance,
    load_instance_file,
    phi,
    psi,
    quotient,
    run_cli,
    verify_area_formula,
)

__all__ = [
    "InputError",
    "Instance",
    "check_absolute_continuity",
    "federer_density",
    "generate",
    "hunt",
    "load_instance",
    "load_instance_file",
    "phi",
    "psi",
    "quotient",
    "run_cli",
    "verify_area_formula",
]
