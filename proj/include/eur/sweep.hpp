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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eur/channels.hpp"
#include "eur/states.hpp"

namespace eur {

enum class Quantity { U, Berta, Pati, Adabi, Tightness, Discord, SMin, Capacity, Witness };

std::string_view to_string(Quantity q);
Quantity parse_quantity(std::string_view text);

struct ParameterGrid {
    double start = 0.0;
    double stop = 1.0;
    int points = 101;

    /// Evenly spaced values; the last one is exactly `stop`.
    std::vector<double> values() const;
};

struct SteeringSpec {
    SteeringKind kind = SteeringKind::Weak;
    std::vector<double> strengths;
};

struct SweepConfig {
    ChannelKind channel = ChannelKind::AD;
    BellDiagonalCoeffs coeffs;
    ParameterGrid grid;
    std::vector<SteeringSpec> steering;
    /// When set (AD only) the grid runs over time t and d = 1 - exp(-lambda t).
    std::optional<double> rate_lambda;
    std::vector<Quantity> outputs{Quantity::U, Quantity::Berta, Quantity::Pati, Quantity::Adabi};

    /// Every violation, one per entry; empty when valid.
    std::vector<std::string> violations() const;
    /// Throws ValidationError listing all violations.
    void validate() const;
};

/// Parses the flat `key = value` format ('#' starts a comment). Keys:
/// channel, c1, c2, c3, start, stop, points, lambda, outputs (comma list),
/// and any number of `steering = <filter|weak>: s1, s2, ...` lines.
SweepConfig parse_config(std::istream& in);
SweepConfig load_config(const std::string& path);

struct SweepRow {
    ChannelKind channel = ChannelKind::AD;
    double param = 0.0;  // channel parameter d or p
    std::optional<double> time;
    std::optional<double> rate;
    BellDiagonalCoeffs coeffs;
    std::optional<SteeringKind> op;
    std::optional<double> strength;
    std::vector<double> values;  // aligned with SweepTable::value_columns
};

struct SweepTable {
    std::vector<std::string> value_columns;
    bool timed = false;
    bool steered = false;
    std::vector<SweepRow> rows;

    std::vector<std::string> header() const;
};

/// Worker count from EUR_THREADS, or the hardware concurrency when unset.
unsigned default_thread_count();

/// Rows in order: steering spec, strength, grid point. Output does not depend
/// on `threads`.
SweepTable run_sweep(const SweepConfig& cfg, unsigned threads = default_thread_count());

/// Concatenates several sweeps that share their output columns.
SweepTable run_sweeps(const std::vector<SweepConfig>& cfgs, unsigned threads = default_thread_count());

std::vector<std::string> preset_names();
/// Figure presets fig1 .. fig6 (plus fig1cd, fig2cd). Throws ValidationError
/// for an unknown name.
std::vector<SweepConfig> preset(std::string_view name);

/// Header plus one line per row, 12 significant digits, '\n' endings.
void emit_csv(const SweepTable& table, std::ostream& out);
void write_csv(const SweepTable& table, const std::string& path);

struct CsvData {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};
CsvData read_csv(std::istream& in);

struct ErrataEntry {
    std::string formula;
    double max_abs_gap = 0.0;
    double at_param = 0.0;
    int applicable = 0;
    int total = 0;
};

struct ErrataReport {
    ChannelKind channel = ChannelKind::AD;
    BellDiagonalCoeffs coeffs;
    /// Pipeline uncertainty at the identity-channel point (d = 0 or p = 1).
    double identity_u = 0.0;
    double identity_param = 0.0;
    std::vector<ErrataEntry> entries;

    std::string to_text() const;
};

/// Compares every closed form for the channel against the numerical
/// pipeline over `grid`; the identity-channel point is always included.
ErrataReport errata_report(const BellDiagonalCoeffs& coeffs, ChannelKind channel, const std::vector<double>& grid);

}  // namespace eur
