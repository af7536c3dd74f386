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

#include "qtv/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <vector>

namespace qtv {
namespace {

int depth_for_maxval(int maxval) {
    for (int q = 1; q <= 8; ++q) {
        if (maxval == (1 << q) - 1) return q;
    }
    throw IoError("unsupported bit depth (maxval " + std::to_string(maxval) + ")");
}

// Skips PGM whitespace and '#' comment lines, then parses one decimal token.
int next_pgm_int(std::istream& in, const std::string& path) {
    int ch = in.get();
    while (ch != EOF && (std::isspace(ch) || ch == '#')) {
        if (ch == '#') {
            while (ch != EOF && ch != '\n') ch = in.get();
        }
        ch = in.get();
    }
    if (ch == EOF || !std::isdigit(ch)) {
        throw IoError("malformed PGM header: " + path);
    }
    int value = 0;
    while (ch != EOF && std::isdigit(ch)) {
        value = value * 10 + (ch - '0');
        if (value > 1 << 20) throw IoError("malformed PGM header: " + path);
        ch = in.get();
    }
    return value;
}

Image read_pgm(std::ifstream& in, const std::string& path) {
    char magic[2];
    in.read(magic, 2);
    if (!in || magic[0] != 'P' || magic[1] != '5') {
        throw IoError("not a binary PGM file: " + path);
    }
    const int width = next_pgm_int(in, path);
    const int height = next_pgm_int(in, path);
    const int maxval = next_pgm_int(in, path);
    if (maxval > 255) throw IoError("unsupported bit depth (maxval " + std::to_string(maxval) + ")");
    const int depth = depth_for_maxval(maxval);

    std::vector<unsigned char> raw(static_cast<size_t>(width) * height);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (in.gcount() != static_cast<std::streamsize>(raw.size())) {
        throw IoError("truncated PGM payload: " + path);
    }
    std::vector<int> px(raw.begin(), raw.end());
    for (int v : px) {
        if (v > maxval) throw IoError("PGM sample exceeds maxval: " + path);
    }
    return Image(width, height, depth, std::move(px));
}

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;
    FILE* fp = nullptr;
    ~PngReader() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
        if (fp) std::fclose(fp);
    }
};

Image read_png(const std::string& path) {
    PngReader r;
    r.fp = std::fopen(path.c_str(), "rb");
    if (!r.fp) throw IoError("cannot open file: " + path);
    r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!r.png) throw IoError("libpng init failed");
    r.info = png_create_info_struct(r.png);
    if (!r.info) throw IoError("libpng init failed");
    if (setjmp(png_jmpbuf(r.png))) {
        throw IoError("malformed PNG file: " + path);
    }
    png_init_io(r.png, r.fp);
    png_read_info(r.png, r.info);

    const png_uint_32 width = png_get_image_width(r.png, r.info);
    const png_uint_32 height = png_get_image_height(r.png, r.info);
    const int color = png_get_color_type(r.png, r.info);
    const int depth = png_get_bit_depth(r.png, r.info);
    if (depth > 8) throw IoError("unsupported bit depth (" + std::to_string(depth) + "-bit PNG)");
    if (color != PNG_COLOR_TYPE_GRAY) throw IoError("only grayscale PNG input is supported: " + path);
    if (depth < 8) png_set_expand_gray_1_2_4_to_8(r.png);
    png_read_update_info(r.png, r.info);

    std::vector<unsigned char> row(width);
    std::vector<int> px;
    px.reserve(static_cast<size_t>(width) * height);
    for (png_uint_32 y = 0; y < height; ++y) {
        png_read_row(r.png, row.data(), nullptr);
        px.insert(px.end(), row.begin(), row.end());
    }
    return Image(static_cast<int>(width), static_cast<int>(height), 8, std::move(px));
}

}  // namespace

Image read_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    unsigned char magic[8] = {};
    in.read(reinterpret_cast<char*>(magic), 8);
    if (in.gcount() >= 2 && magic[0] == 'P' && magic[1] == '5') {
        in.clear();
        in.seekg(0);
        return read_pgm(in, path);
    }
    static const unsigned char png_sig[8] = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
    if (in.gcount() == 8 && std::memcmp(magic, png_sig, 8) == 0) {
        in.close();
        return read_png(path);
    }
    throw IoError("unrecognized image format: " + path);
}

void write_image(const Image& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);
    out << "P5\n" << img.width() << " " << img.height() << "\n" << img.max_value() << "\n";
    std::vector<unsigned char> raw;
    raw.reserve(img.pixels().size());
    for (int v : img.pixels()) raw.push_back(static_cast<unsigned char>(v));
    out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace qtv
