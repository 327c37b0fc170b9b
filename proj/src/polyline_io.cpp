// Copyright 2026 The lattice-exp3 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lattice_exp3/polyline_io.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lattice_exp3 {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(const std::string& token) {
  double value = 0.0;
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || token.empty()) {
    throw Error(ErrorCode::kParseError, "bad number '" + token + "'");
  }
  return value;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<Vec3> parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("points") ||
      !doc["points"].is_array()) {
    throw Error(ErrorCode::kParseError, "JSON polyline needs a points array");
  }
  std::vector<Vec3> out;
  for (const auto& p : doc["points"]) {
    if (!p.is_array() || p.size() != 3 || !p[0].is_number() ||
        !p[1].is_number() || !p[2].is_number()) {
      throw Error(ErrorCode::kParseError, "each point must be [x, y, z]");
    }
    out.push_back({p[0].get<double>(), p[1].get<double>(), p[2].get<double>()});
  }
  return out;
}

std::vector<Vec3> parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Vec3> out;
  bool header_seen = false;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (!header_seen) {
      header_seen = true;
      if (line == "x,y,z") continue;
    }
    std::array<double, 3> xyz{};
    std::istringstream row(line);
    std::string cell;
    int col = 0;
    while (std::getline(row, cell, ',')) {
      if (col == 3) throw Error(ErrorCode::kParseError, "too many columns");
      xyz[col++] = parse_double(trim(cell));
    }
    if (col != 3) throw Error(ErrorCode::kParseError, "expected x,y,z row");
    out.push_back({xyz[0], xyz[1], xyz[2]});
  }
  return out;
}

std::vector<Vec3> parse_obj(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Vec3> out;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string tag;
    row >> tag;
    if (tag != "v") continue;
    std::string x, y, z;
    if (!(row >> x >> y >> z)) {
      throw Error(ErrorCode::kParseError, "OBJ vertex needs three numbers");
    }
    out.push_back({parse_double(x), parse_double(y), parse_double(z)});
  }
  return out;
}

}  // namespace

std::optional<PolylineFormat> parse_format(std::string_view name) {
  if (name == "csv") return PolylineFormat::kCsv;
  if (name == "json") return PolylineFormat::kJson;
  if (name == "obj") return PolylineFormat::kObj;
  return std::nullopt;
}

std::string format_polyline(std::span<const Vec3> points,
                            PolylineFormat format) {
  std::string out;
  switch (format) {
    case PolylineFormat::kCsv:
      out = "x,y,z\n";
      for (const Vec3& p : points) {
        out += num(p.x) + "," + num(p.y) + "," + num(p.z) + "\n";
      }
      break;
    case PolylineFormat::kJson:
      out = "{\"closed\":true,\"points\":[";
      for (std::size_t i = 0; i < points.size(); ++i) {
        if (i) out += ",";
        out += "[" + num(points[i].x) + "," + num(points[i].y) + "," +
               num(points[i].z) + "]";
      }
      out += "]}\n";
      break;
    case PolylineFormat::kObj:
      for (const Vec3& p : points) {
        out += "v " + num(p.x) + " " + num(p.y) + " " + num(p.z) + "\n";
      }
      out += "l";
      for (std::size_t i = 1; i <= points.size(); ++i) {
        out += " " + std::to_string(i);
      }
      out += " 1\n";
      break;
  }
  return out;
}

std::vector<Vec3> parse_polyline(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    throw Error(ErrorCode::kParseError, "empty polyline file");
  }
  if (text[first] == '{') return parse_json(text);
  if (text.substr(first, 2) == "v " || text[first] == '#' ||
      text.substr(first, 2) == "o ") {
    return parse_obj(text);
  }
  return parse_csv(text);
}

std::vector<Vec3> read_polyline_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_polyline(buf.str());
}

}  // namespace lattice_exp3
