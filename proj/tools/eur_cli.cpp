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

// Command-line front end: figure presets, config-driven sweeps, witness
// thresholds, capacity curves and the closed-form errata report.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "eur/applications.hpp"
#include "eur/error.hpp"
#include "eur/sweep.hpp"

namespace {

enum ExitCode { kOk = 0, kValidation = 2, kNumeric = 3, kIo = 4 };

void emit(const eur::SweepTable& table, const std::string& out) {
    if (out.empty() || out == "-") {
        eur::emit_csv(table, std::cout);
        std::cout.flush();
        if (!std::cout) {
            throw eur::IoError("failed writing to stdout");
        }
    } else {
        eur::write_csv(table, out);
    }
}

struct CoeffOptions {
    double c1, c2, c3;
    eur::BellDiagonalCoeffs get() const { return {c1, c2, c3}; }
};

void add_coeffs(CLI::App* cmd, CoeffOptions& c) {
    cmd->add_option("--c1", c.c1, "correlation <sigma_x sigma_x>")->capture_default_str();
    cmd->add_option("--c2", c.c2, "correlation <sigma_y sigma_y>")->capture_default_str();
    cmd->add_option("--c3", c.c3, "correlation <sigma_z sigma_z>")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entropic uncertainty with quantum memory under one-sided noise"};
    app.require_subcommand(1);

    std::string config_path, sweep_out;
    auto* sweep = app.add_subcommand("sweep", "run a sweep described by a key = value config file");
    sweep->add_option("--config", config_path, "config file")->required();
    sweep->add_option("--out", sweep_out, "output CSV (default stdout)");

    std::string preset_name, preset_out;
    auto* preset = app.add_subcommand("preset", "reproduce a figure's data as CSV");
    preset->add_option("name", preset_name, "fig1, fig1cd, fig2, fig2cd, fig3, fig4, fig5 or fig6")->required();
    preset->add_option("--out", preset_out, "output CSV (default stdout)");

    std::string witness_channel;
    CoeffOptions witness_coeffs{-1.0, 1.0, 1.0};
    double witness_s = 0.0;
    auto* witness = app.add_subcommand("witness", "noise threshold where the entropic witness stops firing");
    witness->add_option("--channel", witness_channel, "AD or BPF")->required();
    add_coeffs(witness, witness_coeffs);
    witness->add_option("--s", witness_s, "weak measurement strength")->capture_default_str();

    std::string capacity_channel, capacity_out;
    CoeffOptions capacity_coeffs{1.0, 1.0, -1.0};
    std::optional<double> capacity_lambda;
    double capacity_tmax = 10.0;
    int capacity_points = 101;
    auto* capacity = app.add_subcommand("capacity", "channel capacity curve as CSV");
    capacity->add_option("--channel", capacity_channel, "AD or BPF")->required();
    add_coeffs(capacity, capacity_coeffs);
    capacity->add_option("--lambda", capacity_lambda, "AD decay rate; sweeps time instead of d");
    capacity->add_option("--tmax", capacity_tmax, "end of the time grid when --lambda is given")
        ->capture_default_str();
    capacity->add_option("--points", capacity_points, "grid points")->capture_default_str();
    capacity->add_option("--out", capacity_out, "output CSV (default stdout)");

    std::string errata_channel;
    CoeffOptions errata_coeffs{-0.5, 0.4, 0.8};
    int errata_points = 101;
    auto* errata = app.add_subcommand("errata", "compare closed forms with the numerical pipeline");
    errata->add_option("--channel", errata_channel, "AD or BPF")->required();
    add_coeffs(errata, errata_coeffs);
    errata->add_option("--points", errata_points, "grid points on [0, 1]")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kValidation;
    }

    try {
        if (*sweep) {
            emit(eur::run_sweep(eur::load_config(config_path)), sweep_out);
        } else if (*preset) {
            emit(eur::run_sweeps(eur::preset(preset_name)), preset_out);
        } else if (*witness) {
            const auto kind = eur::parse_channel_kind(witness_channel);
            const auto r = eur::witness_threshold(kind, witness_coeffs.get(), witness_s);
            std::printf("%s_m = %.10f (s = %g)\nwitnessed window: %s\n", r.parameter_name.c_str(),
                        r.critical_value, r.steering_strength_s, r.window_description().c_str());
        } else if (*capacity) {
            const auto kind = eur::parse_channel_kind(capacity_channel);
            eur::CapacitySchedule schedule;
            schedule.points = capacity_points;
            schedule.rate_lambda = capacity_lambda;
            schedule.stop = capacity_lambda ? capacity_tmax : 1.0;
            eur::SweepConfig cfg;
            cfg.channel = kind;
            cfg.coeffs = capacity_coeffs.get();
            cfg.grid = {schedule.start, schedule.stop, schedule.points};
            cfg.rate_lambda = capacity_lambda;
            cfg.outputs = {eur::Quantity::Capacity};
            emit(eur::run_sweep(cfg), capacity_out);
        } else if (*errata) {
            const auto kind = eur::parse_channel_kind(errata_channel);
            if (errata_points < 1) {
                throw eur::ValidationError("points must be positive");
            }
            std::vector<double> grid;
            for (int i = 0; i < errata_points; ++i) {
                grid.push_back(errata_points == 1 ? 0.0 : static_cast<double>(i) / (errata_points - 1));
            }
            std::cout << eur::errata_report(errata_coeffs.get(), kind, grid).to_text();
        }
    } catch (const eur::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const eur::NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return kNumeric;
    } catch (const eur::IoError& e) {
        std::cerr << "I/O failure: " << e.what() << '\n';
        return kIo;
    }
    return kOk;
}
