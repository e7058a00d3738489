// Copyright (c) 2026 The casimir-saturation authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generated by tests/oracles/generate.py; do not edit.
#pragma once

namespace ref {
constexpr double drude_imag_eps = 179.20926699582225598;
constexpr double drude_real_re = -2.8461538461538461538;
constexpr double drude_real_im = 0.76923076923076923077;
constexpr double gold_gamma = 45676359.19863860615;
constexpr double gold_r_tm = 0.96324845341597732502;
constexpr double gold_r_te = -0.85372144190576380203;
constexpr double gold_f_tm = 0.99999491058089916205;
constexpr double gold_f_te = 0.99999649174458859249;
constexpr double gold_matsubara_295K_1um_tm = -2.1301481419880696e-10;
constexpr double gold_matsubara_295K_1um_te = -1.052568789885724e-10;
constexpr double gold_matsubara_295K_300nm_tm = -7.0078965521341945e-09;
constexpr double gold_matsubara_295K_300nm_te = -4.434368041597891e-09;
constexpr double gold_zero_t_1um = -3.913119056589055e-10;
} // namespace ref
