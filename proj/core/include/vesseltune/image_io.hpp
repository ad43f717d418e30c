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

#pragma once

#include <string>

#include "vesseltune/types.hpp"

namespace vtn {

enum class ImageKind { pgm, png, autodetect };

/// Loads a single-channel image and normalizes intensities by the format's
/// max value (PGM maxval, or 255 for 8-bit PNG) into [0,1].
/// PGM may be ASCII (P2) or binary (P5), 8- or 16-bit.
/// Errors carry the file path and, for malformed PGM, the byte offset.
GrayImage load_image(const std::string& path, ImageKind kind = ImageKind::autodetect);

/// Writes an 8-bit PGM (P5 by default, P2 when ascii=true). Values are
/// quantized with round(v*255).
void save_pgm(const GrayImage& img, const std::string& path, bool ascii = false);

/// Writes a 16-bit binary PGM (maxval 65535, big-endian samples).
void save_pgm16(const GrayImage& img, const std::string& path);

/// Writes an 8-bit grayscale PNG.
void save_png(const GrayImage& img, const std::string& path);

/// Masks are serialized as 8-bit PGM with foreground=255, background=0.
void save_mask_pgm(const BinaryMask& mask, const std::string& path);

/// Reads a mask from an 8-bit image file; any value >= 128 is foreground.
BinaryMask load_mask(const std::string& path);

}  // namespace vtn
