#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "linca/engine.hpp"

namespace linca {

/// Pattern text, `linca-pattern v1`:
///   header: linca-pattern v1 dim=<D> n=<n> seed=<a> tmax=<t> radius=<r>
///   D = 1: one line per t, 2*r*tmax+1 integers centered on the origin.
///   D = 2: one (2*r*tmax+1)-line block per t, row-major, blocks separated by
///          a blank line.
std::string render_text(const Pattern& p);

struct PatternText {
  int dimension = 1;
  std::int64_t n = 0;
  std::int64_t seed = 0;
  std::int64_t tmax = 0;
  std::int64_t radius = 0;
  /// frames[t] holds row t flattened over the (2*r*tmax+1)^D window.
  std::vector<std::vector<std::int64_t>> frames;
};

/// Reads the output of render_text back.
PatternText parse_pattern_text(std::string_view text);

/// Grey level of a state: 255 for 0, 255 - floor(v*255/(n-1)) otherwise.
std::uint8_t pixel_value(std::int64_t state, std::int64_t n);

/// Binary PGM (P5, maxval 255) of a row-major grey image.
std::string encode_pgm(std::size_t width, std::size_t height, const std::vector<std::uint8_t>& pixels);

/// D = 1: time downward, space across, one image at `path`.
/// D = 2: one image per step, `<stem>_t<k>.pgm` next to `path` with the
/// step index zero-padded to at least 3 digits.
/// Returns the written paths.
std::vector<std::filesystem::path> render_image(const Pattern& p, const std::filesystem::path& path);

/// PGM bytes of a D = 1 pattern (what render_image writes for D = 1).
std::string render_pgm(const Pattern& p);

}  // namespace linca
