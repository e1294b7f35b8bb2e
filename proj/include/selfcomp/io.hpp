// Copyright 2026 The selfcomp Authors
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

#pragma once

// JSON and CSV plumbing for the command-line tool.
//
// Complex scalars serialize as [re, im]; matrices as row-major nested arrays
// of those. A channel document is {"n_in": N, "n_out": M, "kraus": [...]}.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "selfcomp/channel.hpp"

namespace selfcomp::io {

using Json = nlohmann::json;

Json matrix_to_json(const ComplexMatrix<>& m);

// Throws FormatError on anything but a non-empty rectangular array of
// finite [re, im] pairs.
ComplexMatrix<> matrix_from_json(const Json& j);

Json channel_to_json(const KrausSet<>& channel);
KrausSet<> channel_from_json(const Json& j);

// Throws FormatError when the file is missing or does not parse.
Json read_json_file(const std::filesystem::path& path);

// Writes to a sibling temporary file, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents);

// 12 significant digits, '.' decimal point.
std::string format_number(double value);

// Comma-joined, LF-terminated.
std::string csv_line(const std::vector<std::string>& fields);
std::string csv_line(const std::vector<double>& values);

}  // namespace selfcomp::io
