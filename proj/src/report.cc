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

#include "ptqg/report.h"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace ptqg {

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

namespace {

void upsert(std::vector<std::pair<std::string, std::string>> &kvs, const std::string &key, const std::string &value) {
    for (auto &kv : kvs) {
        if (kv.first == key) {
            kv.second = value;
            return;
        }
    }
    kvs.emplace_back(key, value);
}

}  // namespace

void Report::set(const std::string &key, const std::string &value) {
    upsert(provenance, key, value);
}

void Report::note(const std::string &key, const std::string &value) {
    upsert(summary, key, value);
}

void Report::add_row(std::vector<std::string> row) {
    if (row.size() != header.size()) {
        throw std::invalid_argument("row width does not match the header");
    }
    rows.push_back(std::move(row));
}

namespace {

std::string csv_cell(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

nlohmann::ordered_json json_cell(const std::string &s) {
    if (s.empty()) {
        return s;
    }
    if (s == "nan") {
        return nullptr;
    }
    long long iv = 0;
    auto [ip, iec] = std::from_chars(s.data(), s.data() + s.size(), iv);
    if (iec == std::errc() && ip == s.data() + s.size()) {
        return iv;
    }
    double dv = 0;
    auto [dp, dec] = std::from_chars(s.data(), s.data() + s.size(), dv);
    if (dec == std::errc() && dp == s.data() + s.size() && std::isfinite(dv)) {
        return dv;
    }
    return s;
}

nlohmann::ordered_json json_rows(const Report &r) {
    auto data = nlohmann::ordered_json::array();
    for (const auto &row : r.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (size_t i = 0; i < row.size(); i++) {
            obj[r.header[i]] = json_cell(row[i]);
        }
        data.push_back(std::move(obj));
    }
    return data;
}

}  // namespace

std::string Report::render_data(Format format) const {
    if (format == Format::kJson) {
        return json_rows(*this).dump(2) + "\n";
    }
    std::string out;
    for (size_t i = 0; i < header.size(); i++) {
        out += (i ? "," : "") + csv_cell(header[i]);
    }
    out += "\n";
    for (const auto &row : rows) {
        for (size_t i = 0; i < row.size(); i++) {
            out += (i ? "," : "") + csv_cell(row[i]);
        }
        out += "\n";
    }
    return out;
}

std::string Report::render(Format format) const {
    if (format == Format::kJson) {
        nlohmann::ordered_json doc;
        doc["provenance"] = nlohmann::ordered_json::object();
        for (const auto &[k, v] : provenance) {
            doc["provenance"][k] = v;
        }
        doc["summary"] = nlohmann::ordered_json::object();
        for (const auto &[k, v] : summary) {
            doc["summary"][k] = json_cell(v);
        }
        doc["data"] = json_rows(*this);
        return doc.dump(2) + "\n";
    }
    std::string out;
    for (const auto &[k, v] : provenance) {
        out += "# " + k + "=" + v + "\n";
    }
    for (const auto &[k, v] : summary) {
        out += "# summary." + k + "=" + v + "\n";
    }
    return out + render_data(format);
}

}  // namespace ptqg
