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

#include <stdexcept>
#include <string>

#include "qtv/image.hpp"

namespace qtv {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reads a grayscale image. Binary PGM (P5) and 8-bit grayscale PNG are
/// accepted; the format is detected from the file's magic bytes. PGM maxval
/// must be 2^k - 1 for some k <= 8; anything wider is rejected as an
/// unsupported bit depth.
Image read_image(const std::string& path);

/// Writes a binary PGM (P5) with maxval 2^bit_depth - 1. The byte stream is
/// bit-exact: write followed by read reproduces the pixel grid.
void write_image(const Image& img, const std::string& path);

}  // namespace qtv
