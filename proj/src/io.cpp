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

#include "selfcomp/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace selfcomp::io {

Json matrix_to_json(const ComplexMatrix<>& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix<> matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw FormatError("matrix: expected a non-empty array of rows");
  }
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  if (cols == 0) throw FormatError("matrix: rows must be non-empty arrays");
  ComplexMatrix<> m(static_cast<Index>(j.size()), static_cast<Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    const Json& row = j[r];
    if (!row.is_array() || row.size() != cols) {
      throw FormatError("matrix: ragged rows");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const Json& z = row[c];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() ||
          !z[1].is_number()) {
        throw FormatError("matrix: entries must be [re, im] number pairs");
      }
      const double re = z[0].get<double>();
      const double im = z[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) {
        throw FormatError("matrix: non-finite entry");
      }
      m(static_cast<Index>(r), static_cast<Index>(c)) = {re, im};
    }
  }
  return m;
}

Json channel_to_json(const KrausSet<>& channel) {
  Json ops = Json::array();
  for (const auto& k : channel) ops.push_back(matrix_to_json(k));
  return Json{{"n_in", channel.n_in()},
              {"n_out", channel.n_out()},
              {"kraus", std::move(ops)}};
}

KrausSet<> channel_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("channel: expected a JSON object");
  for (const char* key : {"n_in", "n_out", "kraus"}) {
    if (!j.contains(key)) {
      throw FormatError(std::string("channel: missing key '") + key + "'");
    }
  }
  if (!j["n_in"].is_number_integer() || !j["n_out"].is_number_integer()) {
    throw FormatError("channel: n_in and n_out must be integers");
  }
  const auto n_in = j["n_in"].get<Index>();
  const auto n_out = j["n_out"].get<Index>();
  const Json& kraus = j["kraus"];
  if (!kraus.is_array() || kraus.empty()) {
    throw FormatError("channel: 'kraus' must be a non-empty array");
  }
  std::vector<ComplexMatrix<>> ops;
  for (const Json& k : kraus) {
    ComplexMatrix<> m = matrix_from_json(k);
    if (m.rows() != n_out || m.cols() != n_in) {
      std::ostringstream msg;
      msg << "channel: Kraus operator is " << m.rows() << "x" << m.cols()
          << ", header says " << n_out << "x" << n_in;
      throw FormatError(msg.str());
    }
    ops.push_back(std::move(m));
  }
  return KrausSet<>(std::move(ops));
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += fields[i];
  }
  line += '\n';
  return line;
}

std::string csv_line(const std::vector<double>& values) {
  std::vector<std::string> fields;
  fields.reserve(values.size());
  for (double v : values) fields.push_back(format_number(v));
  return csv_line(fields);
}

}  // namespace selfcomp::io
