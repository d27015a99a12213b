#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "namd/error.hpp"

namespace namd {

/// Single-channel image, row-major, values nominally in [0, 1].
struct Image {
  int height = 0;
  int width = 0;
  std::vector<float> pixels;

  Image() = default;
  Image(int h, int w, float fill = 0.0f)
      : height(h), width(w), pixels(static_cast<std::size_t>(h) * w, fill) {}

  float& at(int y, int x) { return pixels[static_cast<std::size_t>(y) * width + x]; }
  float at(int y, int x) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
  std::size_t size() const { return pixels.size(); }

  friend bool operator==(const Image&, const Image&) = default;
};

/// Snap a [0,1] value onto the 16-bit grid used for on-disk storage so that
/// in-memory and reloaded datasets are bit-identical.
inline float quantize16(float v) {
  if (!(v > 0.0f)) return 0.0f;
  if (v >= 1.0f) return 1.0f;
  const auto level = static_cast<std::uint32_t>(v * 65535.0f + 0.5f);
  return static_cast<float>(level) / 65535.0f;
}

}  // namespace namd
