// Copyright 2026 The vesseltune authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vesseltune/image_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace vtn {
namespace {

[[noreturn]] void fail(const std::string& path, size_t offset, const std::string& msg) {
  std::ostringstream os;
  os << path << ": " << msg << " (byte offset " << offset << ")";
  throw Error(os.str());
}

struct ByteReader {
  std::string path;
  std::vector<unsigned char> bytes;
  size_t pos = 0;

  explicit ByteReader(const std::string& p) : path(p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error(p + ": cannot open file");
    in.seekg(0, std::ios::end);
    std::streamoff n = in.tellg();
    in.seekg(0);
    bytes.resize(static_cast<size_t>(n));
    if (n > 0) in.read(reinterpret_cast<char*>(bytes.data()), n);
    if (!in) throw Error(p + ": read failed");
  }

  bool eof() const { return pos >= bytes.size(); }
  int peek() const { return eof() ? -1 : bytes[pos]; }
  int get() { return eof() ? -1 : bytes[pos++]; }

  // Skips PGM whitespace and '#' comments.
  void skip_ws() {
    while (!eof()) {
      int c = peek();
      if (c == '#') {
        while (!eof() && get() != '\n') {
        }
      } else if (std::isspace(c)) {
        ++pos;
      } else {
        break;
      }
    }
  }

  unsigned parse_uint(const char* what) {
    skip_ws();
    size_t start = pos;
    if (eof() || !std::isdigit(peek())) fail(path, pos, std::string("expected ") + what);
    unsigned long v = 0;
    while (!eof() && std::isdigit(peek())) {
      v = v * 10 + static_cast<unsigned>(get() - '0');
      if (v > 1000000000UL) fail(path, start, std::string(what) + " out of range");
    }
    return static_cast<unsigned>(v);
  }
};

GrayImage load_pgm(const std::string& path) {
  ByteReader r(path);
  if (r.bytes.size() < 2 || r.bytes[0] != 'P') fail(path, 0, "not a PGM file (missing magic)");
  char kind = static_cast<char>(r.bytes[1]);
  if (kind == '6' || kind == '3') fail(path, 1, "multi-channel PPM input; expected grayscale PGM");
  if (kind != '2' && kind != '5') fail(path, 1, "unsupported PNM magic");
  r.pos = 2;

  unsigned w = r.parse_uint("width");
  unsigned h = r.parse_uint("height");
  unsigned maxval = r.parse_uint("maxval");
  if (w == 0 || h == 0) fail(path, r.pos, "zero image dimension");
  if (maxval == 0 || maxval > 65535) fail(path, r.pos, "maxval out of range [1,65535]");

  GrayImage img(static_cast<int>(w), static_cast<int>(h));
  const double scale = 1.0 / maxval;
  const size_t n = img.size();

  if (kind == '2') {
    for (size_t i = 0; i < n; ++i) {
      unsigned v = r.parse_uint("pixel value");
      if (v > maxval) fail(path, r.pos, "pixel value exceeds maxval");
      img.data[i] = v * scale;
    }
  } else {
    // Binary: exactly one whitespace byte after maxval.
    if (r.eof() || !std::isspace(r.peek())) fail(path, r.pos, "missing separator after maxval");
    r.get();
    const bool two_byte = maxval > 255;
    const size_t need = n * (two_byte ? 2 : 1);
    if (r.bytes.size() - r.pos < need)
      fail(path, r.bytes.size(), "truncated pixel data");
    const unsigned char* p = r.bytes.data() + r.pos;
    if (two_byte) {
      for (size_t i = 0; i < n; ++i) {
        unsigned v = (static_cast<unsigned>(p[2 * i]) << 8) | p[2 * i + 1];  // big-endian
        if (v > maxval) fail(path, r.pos + 2 * i, "pixel value exceeds maxval");
        img.data[i] = v * scale;
      }
    } else {
      for (size_t i = 0; i < n; ++i) {
        unsigned v = p[i];
        if (v > maxval) fail(path, r.pos + i, "pixel value exceeds maxval");
        img.data[i] = v * scale;
      }
    }
  }
  return img;
}

struct PngCloser {
  png_structp png = nullptr;
  png_infop info = nullptr;
  FILE* fp = nullptr;
  bool write = false;
  ~PngCloser() {
    if (png) {
      if (write)
        png_destroy_write_struct(&png, info ? &info : nullptr);
      else
        png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    }
    if (fp) std::fclose(fp);
  }
};

GrayImage load_png(const std::string& path) {
  PngCloser c;
  c.fp = std::fopen(path.c_str(), "rb");
  if (!c.fp) throw Error(path + ": cannot open file");
  unsigned char sig[8];
  if (std::fread(sig, 1, 8, c.fp) != 8 || png_sig_cmp(sig, 0, 8))
    fail(path, 0, "not a PNG file (bad signature)");

  c.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  c.info = png_create_info_struct(c.png);
  if (!c.png || !c.info) throw Error(path + ": libpng init failed");
  if (setjmp(png_jmpbuf(c.png))) throw Error(path + ": libpng decode error");

  png_init_io(c.png, c.fp);
  png_set_sig_bytes(c.png, 8);
  png_read_info(c.png, c.info);

  png_uint_32 w, h;
  int bit_depth, color_type;
  png_get_IHDR(c.png, c.info, &w, &h, &bit_depth, &color_type, nullptr, nullptr, nullptr);
  if (color_type != PNG_COLOR_TYPE_GRAY)
    throw Error(path + ": multi-channel PNG input; expected 8-bit grayscale");
  if (bit_depth == 16) png_set_strip_16(c.png);
  if (bit_depth < 8) png_set_expand_gray_1_2_4_to_8(c.png);
  png_read_update_info(c.png, c.info);

  GrayImage img(static_cast<int>(w), static_cast<int>(h));
  std::vector<unsigned char> row(w);
  for (png_uint_32 y = 0; y < h; ++y) {
    png_read_row(c.png, row.data(), nullptr);
    for (png_uint_32 x = 0; x < w; ++x) img.data[static_cast<size_t>(y) * w + x] = row[x] / 255.0;
  }
  png_read_end(c.png, nullptr);
  return img;
}

uint8_t quantize8(double v) {
  double q = std::lround(std::min(1.0, std::max(0.0, v)) * 255.0);
  return static_cast<uint8_t>(q);
}

}  // namespace

GrayImage load_image(const std::string& path, ImageKind kind) {
  if (kind == ImageKind::autodetect) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) throw Error(path + ": cannot open file");
    char m[2] = {0, 0};
    probe.read(m, 2);
    kind = (m[0] == 'P' && (m[1] == '2' || m[1] == '5' || m[1] == '3' || m[1] == '6'))
               ? ImageKind::pgm
               : ImageKind::png;
  }
  return kind == ImageKind::pgm ? load_pgm(path) : load_png(path);
}

void save_pgm(const GrayImage& img, const std::string& path, bool ascii) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(path + ": cannot open for writing");
  out << (ascii ? "P2" : "P5") << "\n" << img.width << " " << img.height << "\n255\n";
  if (ascii) {
    for (int y = 0; y < img.height; ++y) {
      for (int x = 0; x < img.width; ++x)
        out << static_cast<int>(quantize8(img.at(x, y))) << (x + 1 == img.width ? '\n' : ' ');
    }
  } else {
    std::vector<unsigned char> buf(img.size());
    for (size_t i = 0; i < img.size(); ++i) buf[i] = quantize8(img.data[i]);
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  }
  if (!out) throw Error(path + ": write failed");
}

void save_pgm16(const GrayImage& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(path + ": cannot open for writing");
  out << "P5\n" << img.width << " " << img.height << "\n65535\n";
  std::vector<unsigned char> buf(img.size() * 2);
  for (size_t i = 0; i < img.size(); ++i) {
    double v = std::min(1.0, std::max(0.0, img.data[i]));
    unsigned q = static_cast<unsigned>(std::lround(v * 65535.0));
    buf[2 * i] = static_cast<unsigned char>(q >> 8);
    buf[2 * i + 1] = static_cast<unsigned char>(q & 0xff);
  }
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!out) throw Error(path + ": write failed");
}

void save_png(const GrayImage& img, const std::string& path) {
  PngCloser c;
  c.write = true;
  c.fp = std::fopen(path.c_str(), "wb");
  if (!c.fp) throw Error(path + ": cannot open for writing");
  c.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  c.info = png_create_info_struct(c.png);
  if (!c.png || !c.info) throw Error(path + ": libpng init failed");
  if (setjmp(png_jmpbuf(c.png))) throw Error(path + ": libpng encode error");

  png_init_io(c.png, c.fp);
  png_set_IHDR(c.png, c.info, static_cast<png_uint_32>(img.width),
               static_cast<png_uint_32>(img.height), 8, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(c.png, c.info);
  std::vector<unsigned char> row(img.width);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) row[x] = quantize8(img.at(x, y));
    png_write_row(c.png, row.data());
  }
  png_write_end(c.png, nullptr);
}

void save_mask_pgm(const BinaryMask& mask, const std::string& path) {
  GrayImage img(mask.width, mask.height);
  for (size_t i = 0; i < mask.size(); ++i) img.data[i] = mask.data[i] ? 1.0 : 0.0;
  save_pgm(img, path);
}

BinaryMask load_mask(const std::string& path) {
  GrayImage img = load_image(path);
  BinaryMask m(img.width, img.height);
  for (size_t i = 0; i < img.size(); ++i) m.data[i] = img.data[i] >= 0.5 ? 1 : 0;
  return m;
}

}  // namespace vtn
