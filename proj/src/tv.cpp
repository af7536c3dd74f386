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

#include "qtv/tv.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qtv {

void TvParams::validate() const {
    if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
    if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
    if (max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
}

long long round_half_away(double x) {
    return static_cast<long long>(x >= 0 ? std::floor(x + 0.5) : std::ceil(x - 0.5));
}

std::array<double, 5> p_values(double f, double lambda, ArithmeticMode mode, int bit_depth) {
    if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
    if (mode == ArithmeticMode::kFloat) {
        const double d1 = 1.0 / lambda;
        const double d2 = 2.0 / lambda;
        return {f + d2, f + d1, f, f - d1, f - d2};
    }
    const long long k1 = round_half_away(1.0 / lambda);
    const long long k2 = round_half_away(2.0 / lambda);
    const long long fi = static_cast<long long>(f);
    return {static_cast<double>(Image::clamp_to_depth(fi + k2, bit_depth)),
            static_cast<double>(Image::clamp_to_depth(fi + k1, bit_depth)),
            static_cast<double>(fi),
            static_cast<double>(Image::clamp_to_depth(fi - k1, bit_depth)),
            static_cast<double>(Image::clamp_to_depth(fi - k2, bit_depth))};
}

namespace {

// Median of nine values: the fifth element after sorting. The multiset has
// odd size, so no tie-breaking is involved.
template <typename T>
T median9(std::array<T, 9> v) {
    std::nth_element(v.begin(), v.begin() + 4, v.end());
    return v[4];
}

}  // namespace

double median_update(const Neighborhood& nb, const TvParams& params, int bit_depth) {
    params.validate();
    const auto p = p_values(nb.center, params.lambda, params.mode, bit_depth);
    return median9<double>(
        {nb.left, nb.right, nb.up, nb.down, p[0], p[1], p[2], p[3], p[4]});
}

int median_update_int(int left, int right, int up, int down, int f, int k1, int k2,
                      int max_value) {
    const auto sat = [max_value](int v) { return std::clamp(v, 0, max_value); };
    return median9<int>(
        {left, right, up, down, sat(f + k2), sat(f + k1), f, sat(f - k1), sat(f - k2)});
}

double change_ratio(const std::vector<double>& prev, const std::vector<double>& curr) {
    if (prev.size() != curr.size()) throw std::invalid_argument("dimension mismatch");
    double num = 0, den = 0;
    for (size_t i = 0; i < prev.size(); ++i) {
        const double d = prev[i] - curr[i];
        num += d * d;
        den += prev[i] * prev[i];
    }
    if (den == 0) return num == 0 ? 0.0 : std::numeric_limits<double>::infinity();
    return std::sqrt(num) / std::sqrt(den);
}

bool converged(const Image& prev, const Image& curr, double epsilon) {
    if (prev.width() != curr.width() || prev.height() != curr.height()) {
        throw std::invalid_argument("dimension mismatch");
    }
    std::vector<double> a(prev.pixels().begin(), prev.pixels().end());
    std::vector<double> b(curr.pixels().begin(), curr.pixels().end());
    return change_ratio(a, b) <= epsilon;
}

namespace {

// One Jacobi sweep over a real-valued buffer with replicated borders.
void sweep_float(const std::vector<double>& src, std::vector<double>& dst, int w, int h,
                 double lambda) {
    const double d1 = 1.0 / lambda;
    const double d2 = 2.0 / lambda;
    for (int r = 0; r < h; ++r) {
        const int up = std::max(r - 1, 0);
        const int dn = std::min(r + 1, h - 1);
        for (int c = 0; c < w; ++c) {
            const int lf = std::max(c - 1, 0);
            const int rt = std::min(c + 1, w - 1);
            const double f = src[static_cast<size_t>(r) * w + c];
            dst[static_cast<size_t>(r) * w + c] = median9<double>(
                {src[static_cast<size_t>(r) * w + lf], src[static_cast<size_t>(r) * w + rt],
                 src[static_cast<size_t>(up) * w + c], src[static_cast<size_t>(dn) * w + c],
                 f + d2, f + d1, f, f - d1, f - d2});
        }
    }
}

void sweep_int(const std::vector<int>& src, std::vector<int>& dst, int w, int h, int k1, int k2,
               int maxv) {
    for (int r = 0; r < h; ++r) {
        const int up = std::max(r - 1, 0);
        const int dn = std::min(r + 1, h - 1);
        for (int c = 0; c < w; ++c) {
            const int lf = std::max(c - 1, 0);
            const int rt = std::min(c + 1, w - 1);
            dst[static_cast<size_t>(r) * w + c] = median_update_int(
                src[static_cast<size_t>(r) * w + lf], src[static_cast<size_t>(r) * w + rt],
                src[static_cast<size_t>(up) * w + c], src[static_cast<size_t>(dn) * w + c],
                src[static_cast<size_t>(r) * w + c], k1, k2, maxv);
        }
    }
}

}  // namespace

DenoiseResult tv_denoise(const Image& img, const TvParams& params) {
    params.validate();
    if (img.empty()) throw std::invalid_argument("cannot denoise an empty image");
    const int w = img.width();
    const int h = img.height();

    DenoiseResult result;
    if (params.mode == ArithmeticMode::kFloat) {
        const double scale = static_cast<double>(img.max_value());
        std::vector<double> cur(img.pixels().begin(), img.pixels().end());
        for (double& v : cur) v /= scale;
        std::vector<double> next(cur.size());
        for (int k = 0; k < params.max_iters; ++k) {
            sweep_float(cur, next, w, h, params.lambda);
            const double ratio = change_ratio(cur, next);
            result.change_ratios.push_back(ratio);
            cur.swap(next);
            ++result.iterations;
            if (ratio <= params.epsilon) break;
        }
        std::vector<int> px(cur.size());
        for (size_t i = 0; i < cur.size(); ++i) {
            px[i] = img.clamp(round_half_away(cur[i] * scale));
        }
        result.image = Image(w, h, img.bit_depth(), std::move(px));
    } else {
        const int k1 = static_cast<int>(round_half_away(1.0 / params.lambda));
        const int k2 = static_cast<int>(round_half_away(2.0 / params.lambda));
        std::vector<int> cur = img.pixels();
        std::vector<int> next(cur.size());
        for (int k = 0; k < params.max_iters; ++k) {
            sweep_int(cur, next, w, h, k1, k2, img.max_value());
            std::vector<double> a(cur.begin(), cur.end());
            std::vector<double> b(next.begin(), next.end());
            const double ratio = change_ratio(a, b);
            result.change_ratios.push_back(ratio);
            cur.swap(next);
            ++result.iterations;
            if (ratio <= params.epsilon) break;
        }
        result.image = Image(w, h, img.bit_depth(), std::move(cur));
    }
    return result;
}

}  // namespace qtv
