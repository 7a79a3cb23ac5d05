# Copyright 2026 The discord-bounds Authors
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

"""Bounds on the quantum discord of qubit-qudit states."""

from ._core import (
    DensityMatrix,
    DiscordBounds,
    DiscordError,
    UnitaryMatrix,
    accessible_info_bounds,
    apply_filter,
    bell_diagonal,
    binary_channel,
    co,
    compute_bounds,
    conditional_discord,
    dqc1_bounds,
    dqc1_state,
    h,
    lorentz_spectrum,
    minimize_povm,
    minimize_projective,
    q_matrix,
    random_state,
    random_traceless_unitary,
    random_unitary,
    read_state,
    wootters_concurrence,
    write_state,
    x_state,
    x_state_discord,
)

__version__ = "1.0.0"
