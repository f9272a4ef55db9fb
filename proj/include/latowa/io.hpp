#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "any.hpp"
#include "core.hpp"

namespace latowa {

namespace detail {
inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}
}  // namespace detail

/// Splits a CSV row on top-level commas (commas inside product parentheses
/// don't separate cells) and parses each cell in the lattice's grammar.
/// Errors carry the 1-based offending column.
template <CompleteLattice L>
std::vector<typename L::Element> parse_row(const L& lat, std::string_view line) {
  std::vector<typename L::Element> out;
  std::size_t depth = 0, start = 0, column = 1;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i < line.size() && line[i] == '(') ++depth;
    if (i < line.size() && line[i] == ')' && depth > 0) --depth;
    if (i == line.size() || (line[i] == ',' && depth == 0)) {
      std::string_view cell = detail::trim(line.substr(start, i - start));
      try {
        out.push_back(lat.parse(cell));
      } catch (const ParseError& e) {
        throw ParseError("column " + std::to_string(column) + ": " + e.what());
      }
      start = i + 1;
      ++column;
    }
  }
  return out;
}

template <CompleteLattice L>
std::string format_row(const L& lat, std::span<const typename L::Element> row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ",";
    out += lat.format(row[i]);
  }
  return out;
}

/// Grayscale image, P2 (ASCII) or P5 (binary), maxval 255.
struct PgmImage {
  std::size_t width = 0;
  std::size_t height = 0;
  bool binary = true;
  std::vector<std::uint8_t> pixels;  // row-major

  std::uint8_t at(std::size_t x, std::size_t y) const { return pixels[y * width + x]; }
};

inline PgmImage read_pgm(std::istream& in) {
  auto next_token = [&in]() {
    std::string tok;
    while (in >> tok) {
      if (tok[0] == '#') {
        std::string rest;
        std::getline(in, rest);
        continue;
      }
      return tok;
    }
    throw ParseError("unexpected end of PGM header");
  };
  std::string magic = next_token();
  if (magic != "P2" && magic != "P5")
    throw ParseError("unsupported PGM magic '" + magic + "' (want P2 or P5)");
  PgmImage img;
  img.binary = magic == "P5";
  img.width = std::stoul(next_token());
  img.height = std::stoul(next_token());
  std::string maxval = next_token();
  if (maxval != "255") throw ParseError("unsupported PGM maxval " + maxval);
  img.pixels.resize(img.width * img.height);
  if (img.binary) {
    in.get();  // single whitespace after maxval
    in.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (static_cast<std::size_t>(in.gcount()) != img.pixels.size())
      throw ParseError("truncated PGM pixel data");
  } else {
    for (auto& p : img.pixels) {
      int v;
      if (!(in >> v) || v < 0 || v > 255) throw ParseError("bad PGM pixel value");
      p = static_cast<std::uint8_t>(v);
    }
  }
  return img;
}

inline void write_pgm(std::ostream& out, const PgmImage& img) {
  out << (img.binary ? "P5" : "P2") << "\n"
      << img.width << " " << img.height << "\n255\n";
  if (img.binary) {
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
  } else {
    for (std::size_t y = 0; y < img.height; ++y) {
      for (std::size_t x = 0; x < img.width; ++x) {
        if (x) out << " ";
        out << static_cast<int>(img.at(x, y));
      }
      out << "\n";
    }
  }
}

}  // namespace latowa
