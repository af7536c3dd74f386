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

#include "qtv/image.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qtv {

int Image::clamp_to_depth(long long v, int bit_depth) {
    const long long hi = (1LL << bit_depth) - 1;
    return static_cast<int>(std::clamp(v, 0LL, hi));
}

Image::Image(int width, int height, int bit_depth)
    : width_(width),
      height_(height),
      bit_depth_(bit_depth),
      pixels_(static_cast<size_t>(width) * height, 0) {
    validate();
}

Image::Image(int width, int height, int bit_depth, std::vector<int> pixels)
    : width_(width), height_(height), bit_depth_(bit_depth), pixels_(std::move(pixels)) {
    validate();
}

void Image::validate() const {
    if (width_ <= 0 || height_ <= 0) {
        throw std::invalid_argument("image dimensions must be positive");
    }
    if (bit_depth_ < 1 || bit_depth_ > 8) {
        throw std::invalid_argument("unsupported bit depth: " + std::to_string(bit_depth_));
    }
    if (pixels_.size() != static_cast<size_t>(width_) * height_) {
        throw std::invalid_argument("pixel buffer size does not match dimensions");
    }
    const int hi = max_value();
    for (int v : pixels_) {
        if (v < 0 || v > hi) {
            throw std::invalid_argument("pixel value " + std::to_string(v) + " out of range");
        }
    }
}

PaddedImage::PaddedImage(const Image& inner) {
    if (inner.empty()) {
        throw std::invalid_argument("cannot pad an empty image");
    }
    const int w = inner.width();
    const int h = inner.height();
    std::vector<int> grid(static_cast<size_t>(w + 2) * (h + 2));
    for (int r = -1; r <= h; ++r) {
        const int sr = std::clamp(r, 0, h - 1);
        for (int c = -1; c <= w; ++c) {
            const int sc = std::clamp(c, 0, w - 1);
            grid[static_cast<size_t>(r + 1) * (w + 2) + (c + 1)] = inner.at(sr, sc);
        }
    }
    grid_ = Image(w + 2, h + 2, inner.bit_depth(), std::move(grid));
}

Image PaddedImage::crop_interior() const {
    const int w = inner_width();
    const int h = inner_height();
    std::vector<int> px(static_cast<size_t>(w) * h);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            px[static_cast<size_t>(r) * w + c] = at(r + 1, c + 1);
        }
    }
    return Image(w, h, bit_depth(), std::move(px));
}

PaddedImage pad(const Image& img) { return PaddedImage(img); }

}  // namespace qtv
