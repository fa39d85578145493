# Copyright 2026 The grscount Authors
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

"""Exact counts of GRS and MDS codes over small finite fields."""

from ._core import (
    Field,
    GrsCountError,
    check_asymptotic_grs,
    check_asymptotic_mds3,
    count_grs_among_mds,
    count_mds,
    enumerate_grs,
    gamma_grs,
    gamma_grs_hyper,
    gamma_mds3,
    s_kn_size,
    table1,
    verify,
)

__all__ = [
    "Field",
    "GrsCountError",
    "check_asymptotic_grs",
    "check_asymptotic_mds3",
    "count_grs_among_mds",
    "count_mds",
    "enumerate_grs",
    "gamma_grs",
    "gamma_grs_hyper",
    "gamma_mds3",
    "s_kn_size",
    "table1",
    "verify",
]
