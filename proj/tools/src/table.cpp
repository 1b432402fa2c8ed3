// SPDX-License-Identifier: Apache-2.0
//
// stalecsi: net degrees of freedom of the MISO broadcast channel with delayed limited feedback
// Copyright (C) 2026 The stalecsi authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "stalecsi_cli/table.hpp"

#include <cmath>
#include <cstdio>

namespace stalecsi::cli {

namespace {

std::string quote_csv(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string cell_text(const Cell& cell) {
    struct Visitor {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(const Decimal& d) const { return d.text; }
        std::string operator()(double x) const { return format_double(x); }
        std::string operator()(long long x) const { return std::to_string(x); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
    };
    return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
    struct Visitor {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(const std::string& s) const { return s; }
        nlohmann::ordered_json operator()(const Decimal& d) const { return number(d.value); }
        nlohmann::ordered_json operator()(double x) const { return number(x); }
        nlohmann::ordered_json operator()(long long x) const { return x; }
        nlohmann::ordered_json operator()(bool b) const { return b; }
        static nlohmann::ordered_json number(double x) {
            if (!std::isfinite(x))
                return format_double(x);
            return x;
        }
    };
    return std::visit(Visitor{}, cell);
}

std::string summary_text(const nlohmann::ordered_json& value) {
    if (value.is_string())
        return value.get<std::string>();
    if (value.is_number_float())
        return format_double(value.get<double>());
    return value.dump();
}

} // namespace

std::string format_double(double x) {
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_csv(std::ostream& os, const Table& table) {
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        os << (i ? "," : "") << quote_csv(table.columns[i]);
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << quote_csv(cell_text(row[i]));
        os << '\n';
    }
    for (const auto& [key, value] : table.summary.items())
        os << "# " << key << ": " << summary_text(value) << '\n';
}

void write_json(std::ostream& os, const Table& table, const nlohmann::ordered_json& config) {
    nlohmann::ordered_json doc;
    doc["config"] = config;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i)
            obj[table.columns[i]] = cell_json(row[i]);
        doc["rows"].push_back(std::move(obj));
    }
    doc["summary"] = table.summary;
    os << doc.dump(2) << '\n';
}

} // namespace stalecsi::cli
