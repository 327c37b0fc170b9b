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

// Closed-polyline file formats. Closure is implicit everywhere: the last
// vertex is not a repeat of the first.
//
//   csv   header "x,y,z", one vertex per row
//   json  {"closed":true,"points":[[x,y,z],...]}
//   obj   "v x y z" lines followed by one "l 1 2 ... n 1" polyline
//
// Coordinates are written with 17 significant digits, so reading a file
// back reproduces every double exactly.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lattice_exp3/geometry.hpp"

namespace lattice_exp3 {

enum class PolylineFormat { kCsv, kJson, kObj };

std::optional<PolylineFormat> parse_format(std::string_view name);

std::string format_polyline(std::span<const Vec3> points,
                            PolylineFormat format);

/// Detects the format from the content. Throws Error(kParseError).
std::vector<Vec3> parse_polyline(std::string_view text);

/// Throws Error(kParseError) if the file cannot be read or parsed.
std::vector<Vec3> read_polyline_file(const std::string& path);

}  // namespace lattice_exp3
