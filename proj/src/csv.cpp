// Copyright 2026 The eur Authors
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

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "eur/error.hpp"
#include "eur/sweep.hpp"

namespace eur {

namespace {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v == 0.0 ? 0.0 : v);  // no "-0"
    return buf;
}

std::string optional_number(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

}  // namespace

void emit_csv(const SweepTable& table, std::ostream& out) {
    if (table.rows.empty()) {
        throw ValidationError("no rows to emit");
    }
    const auto header = table.header();
    for (std::size_t i = 0; i < header.size(); ++i) {
        out << (i ? "," : "") << header[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        out << to_string(row.channel) << ',' << format_number(row.param);
        if (table.timed) {
            out << ',' << optional_number(row.time) << ',' << optional_number(row.rate);
        }
        out << ',' << format_number(row.coeffs.c1) << ',' << format_number(row.coeffs.c2) << ','
            << format_number(row.coeffs.c3);
        if (table.steered) {
            out << ',' << (row.op ? std::string(to_string(*row.op)) : std::string()) << ','
                << optional_number(row.strength);
        }
        for (double v : row.values) {
            out << ',' << format_number(v);
        }
        out << '\n';
    }
}

void write_csv(const SweepTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    emit_csv(table, out);
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

CsvData read_csv(std::istream& in) {
    auto split_line = [](const std::string& line) {
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            const auto next = line.find(',', pos);
            fields.push_back(line.substr(pos, next - pos));
            if (next == std::string::npos) {
                break;
            }
            pos = next + 1;
        }
        return fields;
    };
    CsvData data;
    std::string line;
    if (!std::getline(in, line)) {
        throw IoError("empty CSV input");
    }
    data.header = split_line(line);
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        auto fields = split_line(line);
        if (fields.size() != data.header.size()) {
            throw IoError("CSV row has " + std::to_string(fields.size()) + " fields, header has " +
                          std::to_string(data.header.size()));
        }
        data.rows.push_back(std::move(fields));
    }
    return data;
}

}  // namespace eur
