#pragma once

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "udg/errors.hpp"
#include "udg/geometry.hpp"

namespace udg {

// Point file format: UTF-8 text, one `x y` pair per whitespace-separated
// line, `#` starts a comment, ids are line order.

inline PointSet read_points(std::istream& in) {
  PointSet ps;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream ls(line);
    double x, y;
    if (!(ls >> x >> y)) {
      throw InputError("point file line " + std::to_string(lineno) +
                       ": expected two coordinates");
    }
    std::string extra;
    if (ls >> extra) {
      throw InputError("point file line " + std::to_string(lineno) +
                       ": trailing tokens");
    }
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw InputError("point file line " + std::to_string(lineno) +
                       ": non-finite coordinate");
    }
    ps.push_back({x, y});
  }
  return ps;
}

inline PointSet read_points_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open point file: " + path);
  return read_points(f);
}

namespace detail {

/// Shortest decimal form that parses back to the same double.
inline std::string format_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw IoError("double formatting failed");
  return std::string(buf, end);
}

}  // namespace detail

inline void write_points(std::ostream& out, const PointSet& ps) {
  for (const Point& p : ps) {
    out << detail::format_double(p.x) << ' ' << detail::format_double(p.y)
        << '\n';
  }
}

inline void write_points_file(const std::string& path, const PointSet& ps) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot write point file: " + path);
  write_points(f, ps);
  if (!f) throw IoError("write failed: " + path);
}

/// Clique files: whitespace-separated point ids, `#` comments.
inline std::vector<std::size_t> read_indices(std::istream& in) {
  std::vector<std::size_t> ids;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long v;
    while (ls >> v) {
      if (v < 0) {
        throw InputError("clique file line " + std::to_string(lineno) +
                         ": negative id");
      }
      ids.push_back(static_cast<std::size_t>(v));
    }
    if (!ls.eof()) {
      throw InputError("clique file line " + std::to_string(lineno) +
                       ": expected integer ids");
    }
  }
  return ids;
}

inline std::vector<std::size_t> read_indices_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open clique file: " + path);
  return read_indices(f);
}

}  // namespace udg
