// Copyright 2026 the carleman-lab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CARLEMAN_LAB_IO_HPP
#define CARLEMAN_LAB_IO_HPP

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace carleman::io {

/// Writes content to path atomically (temp file in the same directory +
/// rename), creating parent directories as needed.
void atomic_write(const std::filesystem::path& path, const std::string& content);

std::string read_file(const std::filesystem::path& path);

/// Deterministic shortest-precision-17 formatting used by every emitter.
std::string format_double(double v);

/// Parses a two-column CSV (header skipped when non-numeric).
std::vector<std::pair<double, double>> read_xy_csv(const std::filesystem::path& path);

} // namespace carleman::io

#endif
