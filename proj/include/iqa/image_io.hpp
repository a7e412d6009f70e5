#pragma once

#include <filesystem>

#include "iqa/image.hpp"

namespace iqa {

/// Loads an 8- or 16-bit PNG, or a binary/ASCII PGM/PPM, into [0, 1].
///
/// PNG samples are divided by 2^bitdepth - 1; PNM samples by the header's
/// maxval (255 or 65535 for standard files). Gray and RGB layouts are
/// accepted; palette, alpha and sub-byte PNGs are rejected.
///
/// Throws Error{unreadable_file} for I/O or corrupt data and
/// Error{unsupported_format} for readable files in a rejected layout.
Image load_image(const std::filesystem::path& path);

enum class BitDepth { eight = 8, sixteen = 16 };

/// Writes a PNG (format chosen by extension is not attempted; always PNG).
void save_png(const Image& image, const std::filesystem::path& path,
              BitDepth depth = BitDepth::eight);

/// Writes binary PGM (1 channel) or PPM (3 channels).
void save_pnm(const Image& image, const std::filesystem::path& path,
              BitDepth depth = BitDepth::eight);

}  // namespace iqa
