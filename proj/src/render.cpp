#include "linca/render.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace linca {

namespace {

std::int64_t window_half_width(const Pattern& p) { return rule_radius(p.rule) * p.horizon(); }

void require_renderable(const Pattern& p) {
  if (p.dimension() > 2) {
    throw Error("render supports D <= 2");
  }
}

}  // namespace

std::string render_text(const Pattern& p) {
  require_renderable(p);
  const std::int64_t w = window_half_width(p);
  std::ostringstream out;
  out << "linca-pattern v1 dim=" << p.dimension() << " n=" << p.modulus.value()
      << " seed=" << p.seed.value() << " tmax=" << p.horizon() << " radius=" << rule_radius(p.rule)
      << "\n";

  for (std::int64_t t = 0; t <= p.horizon(); ++t) {
    const auto& row = p.rows[t];
    if (p.dimension() == 1) {
      for (std::int64_t i = -w; i <= w; ++i) {
        out << (i == -w ? "" : " ") << row.at(Site{i, 0, 0});
      }
      out << "\n";
    } else {
      if (t > 0) {
        out << "\n";
      }
      for (std::int64_t y = -w; y <= w; ++y) {
        for (std::int64_t x = -w; x <= w; ++x) {
          out << (x == -w ? "" : " ") << row.at(Site{y, x, 0});
        }
        out << "\n";
      }
    }
  }
  return out.str();
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) {
      break;
    }
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::int64_t> parse_ints(std::string_view line, std::size_t line_no) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == ' ') {
      ++pos;
      continue;
    }
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), v);
    if (ec != std::errc{}) {
      throw ParseError("bad integer on line " + std::to_string(line_no), pos);
    }
    out.push_back(v);
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

std::int64_t header_field(std::string_view header, std::string_view key) {
  const std::string needle = " " + std::string(key) + "=";
  const auto at = header.find(needle);
  if (at == std::string_view::npos) {
    throw ParseError("pattern header lacks " + std::string(key), 0);
  }
  const char* begin = header.data() + at + needle.size();
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(begin, header.data() + header.size(), v);
  if (ec != std::errc{}) {
    throw ParseError("bad value for " + std::string(key), at + needle.size());
  }
  return v;
}

}  // namespace

PatternText parse_pattern_text(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0].rfind("linca-pattern v1 ", 0) != 0) {
    throw ParseError("missing linca-pattern v1 header", 0);
  }
  PatternText pt;
  pt.dimension = static_cast<int>(header_field(lines[0], "dim"));
  pt.n = header_field(lines[0], "n");
  pt.seed = header_field(lines[0], "seed");
  pt.tmax = header_field(lines[0], "tmax");
  pt.radius = header_field(lines[0], "radius");
  if (pt.dimension < 1 || pt.dimension > 2 || pt.tmax < 0 || pt.radius < 0) {
    throw ParseError("unsupported pattern header", 0);
  }

  const auto width = static_cast<std::size_t>(2 * pt.radius * pt.tmax + 1);
  std::size_t line = 1;
  for (std::int64_t t = 0; t <= pt.tmax; ++t) {
    if (pt.dimension == 2 && t > 0) {
      if (line >= lines.size() || !lines[line].empty()) {
        throw ParseError("expected blank line before block on line " + std::to_string(line + 1), 0);
      }
      ++line;
    }
    const std::size_t height = pt.dimension == 1 ? 1 : width;
    std::vector<std::int64_t> frame;
    for (std::size_t y = 0; y < height; ++y, ++line) {
      if (line >= lines.size()) {
        throw ParseError("pattern text truncated", 0);
      }
      auto values = parse_ints(lines[line], line + 1);
      if (values.size() != width) {
        throw ParseError("line " + std::to_string(line + 1) + " has " +
                             std::to_string(values.size()) + " cells, expected " +
                             std::to_string(width),
                         0);
      }
      frame.insert(frame.end(), values.begin(), values.end());
    }
    pt.frames.push_back(std::move(frame));
  }
  return pt;
}

std::uint8_t pixel_value(std::int64_t state, std::int64_t n) {
  if (state == 0) {
    return 255;
  }
  return static_cast<std::uint8_t>(255 - (state * 255) / (n - 1));
}

std::string encode_pgm(std::size_t width, std::size_t height, const std::vector<std::uint8_t>& pixels) {
  if (pixels.size() != width * height) {
    throw Error("pixel buffer does not match image size");
  }
  std::string out = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  out.append(pixels.begin(), pixels.end());
  return out;
}

std::string render_pgm(const Pattern& p) {
  if (p.dimension() != 1) {
    throw Error("a single PGM image needs a one-dimensional pattern");
  }
  const std::int64_t w = window_half_width(p);
  const auto width = static_cast<std::size_t>(2 * w + 1);
  const auto height = static_cast<std::size_t>(p.horizon() + 1);
  std::vector<std::uint8_t> pixels;
  pixels.reserve(width * height);
  for (std::int64_t t = 0; t <= p.horizon(); ++t) {
    for (std::int64_t i = -w; i <= w; ++i) {
      pixels.push_back(pixel_value(p.rows[t].at(Site{i, 0, 0}), p.modulus.value()));
    }
  }
  return encode_pgm(width, height, pixels);
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error("cannot write " + path.string());
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw Error("failed writing " + path.string());
  }
}

std::string frame_suffix(std::int64_t t, std::int64_t tmax) {
  const std::size_t digits = std::max<std::size_t>(3, std::to_string(tmax).size());
  std::string s = std::to_string(t);
  return std::string(digits - s.size(), '0') + s;
}

}  // namespace

std::vector<std::filesystem::path> render_image(const Pattern& p, const std::filesystem::path& path) {
  require_renderable(p);
  if (p.dimension() == 1) {
    write_file(path, render_pgm(p));
    return {path};
  }

  const std::int64_t w = window_half_width(p);
  const auto side = static_cast<std::size_t>(2 * w + 1);
  std::vector<std::filesystem::path> written;
  for (std::int64_t t = 0; t <= p.horizon(); ++t) {
    std::vector<std::uint8_t> pixels;
    pixels.reserve(side * side);
    for (std::int64_t y = -w; y <= w; ++y) {
      for (std::int64_t x = -w; x <= w; ++x) {
        pixels.push_back(pixel_value(p.rows[t].at(Site{y, x, 0}), p.modulus.value()));
      }
    }
    auto frame = path.parent_path() /
                 (path.stem().string() + "_t" + frame_suffix(t, p.horizon()) + ".pgm");
    write_file(frame, encode_pgm(side, side, pixels));
    written.push_back(std::move(frame));
  }
  return written;
}

}  // namespace linca
