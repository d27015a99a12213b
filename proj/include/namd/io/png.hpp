#pragma once

#include <filesystem>

#include "namd/image.hpp"

namespace namd::io {

/// 16-bit grayscale PNG; values are clamped to [0,1] and scaled by 65535.
void write_png16(const std::filesystem::path& path, const Image& image);
Image read_png16(const std::filesystem::path& path);

}  // namespace namd::io
