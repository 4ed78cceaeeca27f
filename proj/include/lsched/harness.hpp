// Copyright 2026 The lsched Authors
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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lsched/layout.hpp"
#include "lsched/metrics.hpp"
#include "lsched/randgen.hpp"
#include "lsched/scheduler.hpp"

namespace lsched {

enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 2,
    kExitSchedulingError = 3,
    kExitPartialFailure = 4,
};

/// Loads a circuit: `.json` files are product files, anything else is a
/// Clifford+T gate file that gets transpiled.
Circuit load_circuit(const std::string &path);

/// Median of a non-empty sample (mean of the two middle values when even).
double median(std::vector<double> values);

/// Runs f(0) .. f(n-1) on up to `threads` workers. Exceptions escape from
/// the lowest failing index after all workers stop.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)> &f);

struct RunOutput {
    ScheduleResult result;
    Metrics metrics;
    std::string trace_csv;
    std::string metrics_json;  // dumped with a trailing newline
};

/// One schedule run with full outputs. Throws SchedulingError / InputError.
RunOutput run_once(const Circuit &circuit, const Layout &layout, const SchedulerConfig &config);

int cmd_transpile(const std::string &in_path, const std::string &out_path, std::ostream &out, std::ostream &err);

struct StatsOptions {
    std::string input;
    std::size_t window = 100;
    std::string window_csv;  // empty: not written
};
int cmd_stats(const StatsOptions &opt, std::ostream &out, std::ostream &err);

struct ScheduleOptions {
    std::string input;
    Arch arch = Arch::PureMagic;
    int density = 1;
    SchedulerConfig config;
    int reps = 1;
    std::string out_dir;  // empty: nothing written besides stdout
    bool verify = false;
};

/// Runs `reps` schedules with seeds seed .. seed + reps - 1. With an output
/// directory, writes trace_<seed>.csv and metrics_<seed>.json per run and
/// summary.json with medians. The summary is also printed.
int cmd_schedule(const ScheduleOptions &opt, std::ostream &out, std::ostream &err);

struct RandgenOptions {
    RandGenParams params;
    std::optional<double> target;  // calibrate size_mean to this products/layer
    std::string out_path;
};
int cmd_randgen(const RandgenOptions &opt, std::ostream &out, std::ostream &err);

int cmd_layout(std::size_t qubits, Arch arch, int density, const std::string &out_path, std::ostream &out);

/// One expanded sweep job: a single input, layout and configuration, run for
/// `reps` consecutive seeds.
struct SweepJob {
    std::size_t job = 0;  // index of the experiment job it came from
    std::string name;
    std::size_t input = 0;  // index into ExperimentSpec::inputs
    Arch arch = Arch::PureMagic;
    int density = 1;
    SchedulerConfig config;
    std::optional<double> mean_cycles;
    int reps = 1;
};

struct SweepInput {
    std::string label;
    std::optional<std::string> file;
    std::optional<RandGenParams> randgen;
    std::optional<double> target;  // calibrate randgen to this products/layer
};

/// Parsed sweep description. List-valued job fields expand to their
/// Cartesian product in field order.
struct ExperimentSpec {
    std::vector<SweepInput> inputs;
    std::vector<SweepJob> jobs;
};

/// Throws InputError on malformed specs. Relative input files resolve
/// against `base_dir`.
ExperimentSpec parse_experiment_spec(const nlohmann::json &doc, const std::string &base_dir = "");

struct SweepRow {
    const SweepJob *job = nullptr;
    int rep = 0;
    std::uint64_t seed = 0;
    double products_per_layer = 0;
    std::optional<Metrics> metrics;
    std::string error;
};

struct SweepOutput {
    std::vector<SweepRow> rows;
    std::string results_csv;
    std::string parallelism_csv;
    std::string density_csv;
    std::string cultivation_csv;
    bool any_failed = false;
};

SweepOutput run_sweep(const ExperimentSpec &spec, std::size_t threads);

int cmd_sweep(
    const std::string &spec_path, const std::string &out_dir, std::size_t threads, std::ostream &out, std::ostream &err);

}  // namespace lsched
