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

#include <cstdint>
#include <vector>

namespace qtv {

/// Grayscale raster with an explicit bit depth in {1..8}. Pixels are stored
/// row-major as plain ints in [0, 2^bit_depth - 1]. Once built, images are
/// treated as immutable values and may be shared freely across threads.
class Image {
  public:
    Image() = default;
    Image(int width, int height, int bit_depth);
    Image(int width, int height, int bit_depth, std::vector<int> pixels);

    int width() const { return width_; }
    int height() const { return height_; }
    int bit_depth() const { return bit_depth_; }
    int max_value() const { return (1 << bit_depth_) - 1; }
    int pixel_count() const { return width_ * height_; }
    bool empty() const { return pixels_.empty(); }

    int at(int row, int col) const { return pixels_[static_cast<size_t>(row) * width_ + col]; }
    int& at(int row, int col) { return pixels_[static_cast<size_t>(row) * width_ + col]; }

    const std::vector<int>& pixels() const { return pixels_; }

    /// Saturating clamp into this image's value range.
    int clamp(long long v) const { return clamp_to_depth(v, bit_depth_); }
    static int clamp_to_depth(long long v, int bit_depth);

    bool operator==(const Image&) const = default;

  private:
    int width_ = 0;
    int height_ = 0;
    int bit_depth_ = 8;
    std::vector<int> pixels_;

    void validate() const;
};

/// Source image surrounded by a one-pixel border filled by edge replication.
/// Interior pixel (r, c) of the source lives at (r + 1, c + 1).
class PaddedImage {
  public:
    explicit PaddedImage(const Image& inner);

    int width() const { return grid_.width(); }    // inner width + 2
    int height() const { return grid_.height(); }  // inner height + 2
    int bit_depth() const { return grid_.bit_depth(); }
    int inner_width() const { return grid_.width() - 2; }
    int inner_height() const { return grid_.height() - 2; }

    /// Access in padded coordinates, row in [0, height), col in [0, width).
    int at(int row, int col) const { return grid_.at(row, col); }
    const Image& grid() const { return grid_; }

    /// The interior, i.e. the original image.
    Image crop_interior() const;

  private:
    Image grid_;
};

/// One-pixel edge-replicated padding.
PaddedImage pad(const Image& img);

}  // namespace qtv
