// Copyright 2026 The ptqg Authors
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

#ifndef PTQG_REPORT_H
#define PTQG_REPORT_H

#include <string>
#include <utility>
#include <vector>

namespace ptqg {

enum class Format {
    kCsv,
    kJson,
};

/// A table with key/value provenance and summary blocks. CSV renders both as
/// leading "# key=value" lines (summary keys prefixed "summary."); JSON as
/// {"provenance": {...}, "summary": {...}, "data": [...]}. Cells that parse as
/// numbers are emitted as JSON numbers.
struct Report {
    std::vector<std::pair<std::string, std::string>> provenance;
    std::vector<std::pair<std::string, std::string>> summary;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void set(const std::string &key, const std::string &value);
    void note(const std::string &key, const std::string &value);
    void add_row(std::vector<std::string> row);
    std::string render(Format format) const;
    /// Rows only (CSV header plus rows), without provenance.
    std::string render_data(Format format) const;
};

/// Shortest round-trip decimal form ("nan" for NaN).
std::string format_number(double v);

}  // namespace ptqg

#endif
