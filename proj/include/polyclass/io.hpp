#pragma once

// Shared polytope text format: one polytope per line, vertices separated by
// ';', coordinates by ','. Whitespace is ignored and '#' starts a comment.
// Example: 0,0,0;2,0,0;0,3,0;0,0,18

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "polyclass/common.hpp"
#include "polyclass/point.hpp"

namespace polyclass {

inline std::vector<Point> parse_vertex_line(const std::string& raw, int line_no = 0) {
  std::string s;
  for (char ch : raw) {
    if (ch == '#') break;
    if (!isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) return {};
  auto fail = [&](const std::string& why) {
    throw io_error("line " + std::to_string(line_no) + ": " + why);
  };
  std::vector<Point> pts;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t end = s.find(';', pos);
    std::string tok = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (tok.empty()) fail("empty vertex");
    std::vector<i64> coords;
    size_t cpos = 0;
    while (cpos <= tok.size()) {
      size_t cend = tok.find(',', cpos);
      std::string num = tok.substr(cpos, cend == std::string::npos ? std::string::npos : cend - cpos);
      i64 v = 0;
      auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
      if (ec != std::errc() || p != num.data() + num.size()) fail("bad coordinate '" + num + "'");
      coords.push_back(v);
      if (cend == std::string::npos) break;
      cpos = cend + 1;
    }
    if (coords.size() < 1 || coords.size() > 3) fail("vertex dimension out of range");
    Point pt = Point::zero(int(coords.size()));
    for (size_t i = 0; i < coords.size(); ++i) pt[int(i)] = coords[i];
    pts.push_back(pt);
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  for (const Point& p : pts)
    if (p.dim != pts[0].dim) fail("inconsistent vertex dimensions");
  return pts;
}

inline std::string format_vertices(const std::vector<Point>& pts) {
  std::string out;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ';';
    for (int j = 0; j < pts[i].dim; ++j) {
      if (j) out += ',';
      out += std::to_string(pts[i][j]);
    }
  }
  return out;
}

/// Every non-empty line of the file as a vertex list.
inline std::vector<std::vector<Point>> read_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  std::vector<std::vector<Point>> out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto pts = parse_vertex_line(line, no);
    if (!pts.empty()) out.push_back(std::move(pts));
  }
  return out;
}

}  // namespace polyclass
