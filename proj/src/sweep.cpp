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

#include "eur/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <sstream>
#include <thread>

#include "eur/applications.hpp"
#include "eur/bounds.hpp"
#include "eur/error.hpp"

namespace eur {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
    return s;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        const auto next = s.find(sep, pos);
        out.push_back(trim(s.substr(pos, next - pos)));
        if (next == std::string_view::npos) {
            break;
        }
        pos = next + 1;
    }
    return out;
}

std::optional<double> parse_double(const std::string& s) {
    if (s.empty()) {
        return std::nullopt;
    }
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

bool needs_correlations(const std::vector<Quantity>& outputs) {
    for (auto q : outputs) {
        if (q == Quantity::Pati || q == Quantity::Tightness || q == Quantity::Discord || q == Quantity::SMin) {
            return true;
        }
    }
    return false;
}

std::vector<std::string> value_columns(const std::vector<Quantity>& outputs) {
    std::vector<std::string> cols;
    for (auto q : outputs) {
        if (q == Quantity::Tightness) {
            cols.insert(cols.end(), {"t_berta", "t_pati", "t_adabi"});
        } else {
            cols.emplace_back(to_string(q));
        }
    }
    return cols;
}

std::vector<double> evaluate(const std::vector<Quantity>& outputs, const ComplexMatrix& rho) {
    const auto bx = ProjectiveBasis::pauli_x();
    const auto bz = ProjectiveBasis::pauli_z();
    std::optional<BoundReport> report;
    if (needs_correlations(outputs)) {
        report = bound_report(rho, bx, bz);
    }
    std::optional<double> u;
    auto get_u = [&] {
        if (!u) {
            u = report ? report->u_lhs : uncertainty_lhs(rho, bx, bz);
        }
        return *u;
    };
    auto get_berta = [&] { return report ? report->berta : berta_bound(rho, 0.5); };
    auto get_adabi = [&] { return report ? report->adabi : adabi_bound(rho, 0.5, bx, bz); };

    std::vector<double> values;
    for (auto q : outputs) {
        switch (q) {
            case Quantity::U:
                values.push_back(get_u());
                break;
            case Quantity::Berta:
                values.push_back(get_berta());
                break;
            case Quantity::Pati:
                values.push_back(report->pati);
                break;
            case Quantity::Adabi:
                values.push_back(get_adabi());
                break;
            case Quantity::Tightness:
                values.insert(values.end(), {report->tightness_berta, report->tightness_pati, report->tightness_adabi});
                break;
            case Quantity::Discord:
                values.push_back(report->discord);
                break;
            case Quantity::SMin:
                values.push_back(report->s_min_cond);
                break;
            case Quantity::Capacity:
                values.push_back(channel_capacity(rho));
                break;
            case Quantity::Witness:
                values.push_back(get_u() < 1.0 - tol::order ? 1.0 : 0.0);
                break;
        }
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw NumericError("non-finite value in sweep row");
        }
    }
    return values;
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    // Report the failure of the earliest row so errors are reproducible.
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace

std::string_view to_string(Quantity q) {
    switch (q) {
        case Quantity::U:
            return "u";
        case Quantity::Berta:
            return "berta";
        case Quantity::Pati:
            return "pati";
        case Quantity::Adabi:
            return "adabi";
        case Quantity::Tightness:
            return "tightness";
        case Quantity::Discord:
            return "discord";
        case Quantity::SMin:
            return "s_min";
        case Quantity::Capacity:
            return "capacity";
        case Quantity::Witness:
            return "witness";
    }
    return "?";
}

Quantity parse_quantity(std::string_view text) {
    const auto key = lower(std::string(text));
    for (auto q : {Quantity::U, Quantity::Berta, Quantity::Pati, Quantity::Adabi, Quantity::Tightness,
                   Quantity::Discord, Quantity::SMin, Quantity::Capacity, Quantity::Witness}) {
        if (key == to_string(q)) {
            return q;
        }
    }
    throw ValidationError("unknown output '" + std::string(text) + "'");
}

std::vector<double> ParameterGrid::values() const {
    std::vector<double> out(static_cast<std::size_t>(std::max(points, 0)));
    for (int i = 0; i < points; ++i) {
        out[static_cast<std::size_t>(i)] = i == points - 1 ? stop : start + (stop - start) * i / (points - 1);
    }
    return out;
}

std::vector<std::string> SweepConfig::violations() const {
    std::vector<std::string> out;
    if (channel == ChannelKind::Custom) {
        out.emplace_back("channel must be AD or BPF");
    }
    if (auto why = coeffs.physicality_violation(); !why.empty()) {
        out.push_back("coefficients unphysical: " + why);
    }
    if (grid.points < 2) {
        out.emplace_back("points must be at least 2");
    }
    if (!std::isfinite(grid.start) || !std::isfinite(grid.stop)) {
        out.emplace_back("grid bounds must be finite");
    } else if (rate_lambda) {
        if (grid.start < 0.0 || grid.stop < 0.0) {
            out.emplace_back("time grid must be non-negative");
        }
    } else if (grid.start < 0.0 || grid.start > 1.0 || grid.stop < 0.0 || grid.stop > 1.0) {
        out.emplace_back("grid bounds must lie within [0, 1]");
    }
    if (rate_lambda) {
        if (channel != ChannelKind::AD) {
            out.emplace_back("lambda only applies to the AD channel");
        }
        if (!(*rate_lambda >= 0.0)) {
            out.emplace_back("lambda must be non-negative");
        }
    }
    for (const auto& spec : steering) {
        if (spec.strengths.empty()) {
            out.push_back(std::string("steering ") + std::string(to_string(spec.kind)) + " has no strengths");
        }
        for (double s : spec.strengths) {
            try {
                make_steering(spec.kind, s);
            } catch (const ValidationError& e) {
                out.emplace_back(e.what());
            }
        }
    }
    if (outputs.empty()) {
        out.emplace_back("no outputs requested");
    }
    return out;
}

void SweepConfig::validate() const {
    const auto v = violations();
    if (v.empty()) {
        return;
    }
    std::string msg = "invalid sweep configuration:";
    for (const auto& s : v) {
        msg += "\n  - " + s;
    }
    throw ValidationError(msg);
}

SweepConfig parse_config(std::istream& in) {
    SweepConfig cfg;
    std::vector<std::string> errors;
    bool saw_outputs = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (eq == std::string::npos) {
            errors.push_back(where + "expected key = value");
            continue;
        }
        const auto key = lower(trim(std::string_view(line).substr(0, eq)));
        const auto value = trim(std::string_view(line).substr(eq + 1));
        auto number = [&](double& slot) {
            if (auto v = parse_double(value)) {
                slot = *v;
            } else {
                errors.push_back(where + key + " is not a number: '" + value + "'");
            }
        };
        try {
            if (key == "channel") {
                cfg.channel = parse_channel_kind(value);
            } else if (key == "c1") {
                number(cfg.coeffs.c1);
            } else if (key == "c2") {
                number(cfg.coeffs.c2);
            } else if (key == "c3") {
                number(cfg.coeffs.c3);
            } else if (key == "start") {
                number(cfg.grid.start);
            } else if (key == "stop") {
                number(cfg.grid.stop);
            } else if (key == "points") {
                int n = 0;
                auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
                if (ec != std::errc() || ptr != value.data() + value.size()) {
                    errors.push_back(where + "points is not an integer: '" + value + "'");
                } else {
                    cfg.grid.points = n;
                }
            } else if (key == "lambda") {
                double l = 0.0;
                number(l);
                cfg.rate_lambda = l;
            } else if (key == "outputs") {
                if (!saw_outputs) {
                    cfg.outputs.clear();
                    saw_outputs = true;
                }
                for (const auto& tag : split(value, ',')) {
                    cfg.outputs.push_back(parse_quantity(tag));
                }
            } else if (key == "steering") {
                const auto colon = value.find(':');
                if (colon == std::string::npos) {
                    errors.push_back(where + "steering expects '<filter|weak>: s1, s2, ...'");
                    continue;
                }
                SteeringSpec spec;
                spec.kind = parse_steering_kind(trim(std::string_view(value).substr(0, colon)));
                for (const auto& tok : split(std::string_view(value).substr(colon + 1), ',')) {
                    if (auto v = parse_double(tok)) {
                        spec.strengths.push_back(*v);
                    } else {
                        errors.push_back(where + "bad steering strength '" + tok + "'");
                    }
                }
                cfg.steering.push_back(std::move(spec));
            } else {
                errors.push_back(where + "unknown key '" + key + "'");
            }
        } catch (const ValidationError& e) {
            errors.push_back(where + e.what());
        }
    }
    for (auto& v : cfg.violations()) {
        errors.push_back(std::move(v));
    }
    if (!errors.empty()) {
        std::string msg = "invalid sweep configuration:";
        for (const auto& s : errors) {
            msg += "\n  - " + s;
        }
        throw ValidationError(msg);
    }
    return cfg;
}

SweepConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    return parse_config(in);
}

std::vector<std::string> SweepTable::header() const {
    std::vector<std::string> h{"channel", "param"};
    if (timed) {
        h.insert(h.end(), {"t", "lambda"});
    }
    h.insert(h.end(), {"C1", "C2", "C3"});
    if (steered) {
        h.insert(h.end(), {"op", "strength"});
    }
    h.insert(h.end(), value_columns.begin(), value_columns.end());
    return h;
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("EUR_THREADS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (*end == '\0' && n > 0) {
            return static_cast<unsigned>(n);
        }
        throw ValidationError(std::string("EUR_THREADS must be a positive integer, got '") + env + "'");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

SweepTable run_sweep(const SweepConfig& cfg, unsigned threads) {
    cfg.validate();
    SweepTable table;
    table.value_columns = value_columns(cfg.outputs);
    table.timed = cfg.rate_lambda.has_value();
    table.steered = !cfg.steering.empty();

    struct Job {
        double x;
        std::optional<SteeringOp> op;
    };
    std::vector<Job> jobs;
    const auto xs = cfg.grid.values();
    if (cfg.steering.empty()) {
        for (double x : xs) {
            jobs.push_back({x, std::nullopt});
        }
    } else {
        for (const auto& spec : cfg.steering) {
            for (double s : spec.strengths) {
                for (double x : xs) {
                    jobs.push_back({x, make_steering(spec.kind, s)});
                }
            }
        }
    }

    const auto initial = bell_diagonal_density(cfg.coeffs);
    table.rows.resize(jobs.size());
    parallel_for(jobs.size(), threads, [&](std::size_t i) {
        const auto& job = jobs[i];
        SweepRow row;
        row.channel = cfg.channel;
        row.coeffs = cfg.coeffs;
        if (cfg.rate_lambda) {
            row.time = job.x;
            row.rate = cfg.rate_lambda;
            row.param = d_of_t(*cfg.rate_lambda, job.x);
        } else {
            row.param = job.x;
        }
        ComplexMatrix rho = apply_one_sided(make_channel(cfg.channel, row.param), initial);
        if (job.op) {
            row.op = job.op->kind;
            row.strength = job.op->strength;
            rho = apply_steering(*job.op, rho);
        }
        row.values = evaluate(cfg.outputs, rho);
        table.rows[i] = std::move(row);
    });
    return table;
}

SweepTable run_sweeps(const std::vector<SweepConfig>& cfgs, unsigned threads) {
    if (cfgs.empty()) {
        throw ValidationError("no sweeps to run");
    }
    SweepTable out;
    for (std::size_t i = 0; i < cfgs.size(); ++i) {
        auto t = run_sweep(cfgs[i], threads);
        if (i == 0) {
            out.value_columns = t.value_columns;
        } else if (t.value_columns != out.value_columns) {
            throw ValidationError("sweeps in one run must share their output columns");
        }
        out.timed = out.timed || t.timed;
        out.steered = out.steered || t.steered;
        std::move(t.rows.begin(), t.rows.end(), std::back_inserter(out.rows));
    }
    return out;
}

std::vector<std::string> preset_names() {
    return {"fig1", "fig1cd", "fig2", "fig2cd", "fig3", "fig4", "fig5", "fig6"};
}

std::vector<SweepConfig> preset(std::string_view name) {
    const BellDiagonalCoeffs dynamics{-0.5, 0.4, 0.8};
    const BellDiagonalCoeffs max_purity_witness{-1.0, 1.0, 1.0};
    const BellDiagonalCoeffs max_purity_capacity{1.0, 1.0, -1.0};
    const ParameterGrid unit{0.0, 1.0, 101};

    auto make = [&](ChannelKind ch, BellDiagonalCoeffs c, std::vector<Quantity> outs) {
        SweepConfig cfg;
        cfg.channel = ch;
        cfg.coeffs = c;
        cfg.grid = unit;
        cfg.outputs = std::move(outs);
        return cfg;
    };
    const std::vector<Quantity> bounds{Quantity::U, Quantity::Berta, Quantity::Pati, Quantity::Adabi};
    const std::vector<Quantity> panels_cd{Quantity::Tightness, Quantity::Discord, Quantity::SMin};

    if (name == "fig1") {
        return {make(ChannelKind::AD, dynamics, bounds)};
    }
    if (name == "fig1cd") {
        return {make(ChannelKind::AD, dynamics, panels_cd)};
    }
    if (name == "fig2") {
        return {make(ChannelKind::BPF, dynamics, bounds)};
    }
    if (name == "fig2cd") {
        return {make(ChannelKind::BPF, dynamics, panels_cd)};
    }
    if (name == "fig3") {
        auto cfg = make(ChannelKind::AD, dynamics, {Quantity::U});
        cfg.steering = {{SteeringKind::Filter, {0.2, 0.3, 0.4, 0.5}}, {SteeringKind::Weak, {0.0, 0.4, 0.6, 0.8}}};
        return {cfg};
    }
    if (name == "fig4") {
        auto cfg = make(ChannelKind::BPF, dynamics, {Quantity::U});
        cfg.steering = {{SteeringKind::Filter, {0.1, 0.25, 0.5}}, {SteeringKind::Weak, {0.7, 0.4, 0.0}}};
        return {cfg};
    }
    if (name == "fig5") {
        auto ad = make(ChannelKind::AD, max_purity_witness, {Quantity::U, Quantity::Witness});
        ad.steering = {{SteeringKind::Weak, {0.0, 0.4, 0.8}}};
        auto bpf = ad;
        bpf.channel = ChannelKind::BPF;
        return {ad, bpf};
    }
    if (name == "fig6") {
        std::vector<SweepConfig> out;
        for (double lambda : {0.1, 0.3, 0.7}) {
            auto cfg = make(ChannelKind::AD, max_purity_capacity, {Quantity::Capacity});
            cfg.grid = {0.0, 10.0, 101};
            cfg.rate_lambda = lambda;
            out.push_back(cfg);
        }
        out.push_back(make(ChannelKind::BPF, max_purity_capacity, {Quantity::Capacity}));
        return out;
    }
    throw ValidationError("unknown preset '" + std::string(name) + "'");
}

}  // namespace eur
