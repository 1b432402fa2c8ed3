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

#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace stalecsi::cli {

// A decimal rendering that should stay text in CSV but become a number in JSON.
struct Decimal {
    std::string text;
    double value = 0.0;
};

using Cell = std::variant<std::monostate, std::string, Decimal, double, long long, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
};

// %.12g, with "nan"/"inf" spelled out.
std::string format_double(double x);

// RFC 4180: header row, CRLF-free "\n" line ends, fields quoted when they contain a
// comma, quote, or line break. Summary entries follow as "# key: value" lines.
void write_csv(std::ostream& os, const Table& table);

// {"config": ..., "rows": [{column: value, ...}], "summary": ...}
void write_json(std::ostream& os, const Table& table, const nlohmann::ordered_json& config);

} // namespace stalecsi::cli
