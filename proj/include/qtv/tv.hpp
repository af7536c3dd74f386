// Copyright 2026 The qtv Authors
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

#pragma once

#include <array>
#include <vector>

#include "qtv/image.hpp"

namespace qtv {

enum class ArithmeticMode {
    kFloat,           // pixels normalized to [0,1], exact p-values
    kIntegerRounded,  // raw integer pixels, p-value offsets rounded and saturated
};

/// Parameters of the anisotropic TV iteration.
///
/// The unit convention for lambda follows the arithmetic mode: in float mode
/// pixels are normalized to [0,1] and lambda is expressed in those units; in
/// integer mode pixels stay in [0, 2^q - 1] and lambda applies to raw values.
struct TvParams {
    double lambda = 1.0;
    double epsilon = 1e-3;
    int max_iters = 50;
    ArithmeticMode mode = ArithmeticMode::kIntegerRounded;

    void validate() const;
};

/// 4-connected neighborhood of a pixel plus the noisy center value.
struct Neighborhood {
    double left = 0;
    double right = 0;
    double up = 0;
    double down = 0;
    double center = 0;
};

/// Rounds half away from zero. Half-even rounding would change integer-mode
/// results, so the choice is pinned here and used everywhere.
long long round_half_away(double x);

/// The five fidelity pseudo-values entering the median set, ordered
/// p0 >= p1 >= p2 >= p3 >= p4 around the center value f.
/// Float mode: f + 2/L, f + 1/L, f, f - 1/L, f - 2/L (unclamped).
/// Integer mode: offsets round(2/L), round(1/L), saturated to [0, 2^q - 1].
std::array<double, 5> p_values(double f, double lambda, ArithmeticMode mode, int bit_depth);

/// Median of the nine-element multiset {left, right, up, down, p0..p4}.
double median_update(const Neighborhood& nb, const TvParams& params, int bit_depth);

/// Integer fast path used by both the classical sweep and the tests that pin
/// election of the quantum circuit output. k1 = round(1/L), k2 = round(2/L).
int median_update_int(int left, int right, int up, int down, int f, int k1, int k2, int max_value);

/// Relative-change stopping rule: ||prev - curr||_2 / ||prev||_2 <= epsilon.
/// An all-zero prev counts as converged only when curr is all-zero too.
bool converged(const Image& prev, const Image& curr, double epsilon);
double change_ratio(const std::vector<double>& prev, const std::vector<double>& curr);

struct DenoiseResult {
    Image image;
    int iterations = 0;
    std::vector<double> change_ratios;  // one entry per completed sweep
};

/// Jacobi sweeps of the median update over the whole image, stopping on the
/// relative-change rule or after max_iters sweeps. Borders see edge-replicated
/// neighbors. Float mode keeps a real-valued iterate across sweeps and only
/// rounds when producing the output image.
DenoiseResult tv_denoise(const Image& img, const TvParams& params);

}  // namespace qtv
