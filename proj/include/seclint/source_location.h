// Copyright 2026 The seclint Authors.
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

#ifndef SECLINT_SOURCE_LOCATION_H_
#define SECLINT_SOURCE_LOCATION_H_

#include <compare>
#include <ostream>
#include <string>

namespace seclint {

// A position in a C source file. Line and column are 1-based; the column
// counts bytes of the physical line.
struct SourceLocation {
  std::string file;
  int line = 1;
  int column = 1;

  auto operator<=>(const SourceLocation&) const = default;
  bool operator==(const SourceLocation&) const = default;

  std::string ToString() const {
    return file + ":" + std::to_string(line) + ":" + std::to_string(column);
  }
};

inline std::ostream& operator<<(std::ostream& os, const SourceLocation& loc) {
  return os << loc.ToString();
}

}  // namespace seclint

#endif  // SECLINT_SOURCE_LOCATION_H_
