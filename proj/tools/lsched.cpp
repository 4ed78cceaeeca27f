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

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lsched/common.hpp"
#include "lsched/harness.hpp"
#include "lsched/kernels.hpp"

using namespace lsched;

namespace {

kernels::Backend parse_backend(const std::string &name) {
    for (kernels::Backend b : {kernels::Backend::Scalar, kernels::Backend::Avx2, kernels::Backend::Neon}) {
        if (kernels::backend_name(b) == name) {
            return b;
        }
    }
    throw InputError("unknown kernel backend '" + name + "'");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"lsched: lattice-surgery scheduling for Pauli-product circuits"};
    app.require_subcommand(1);

    std::string kernel;
    app.add_option("--kernel", kernel, "Kernel backend: scalar, avx2 or neon (default: best available)");

    // transpile
    auto *tr = app.add_subcommand("transpile", "Lower a Clifford+T gate file to a Pauli-product file");
    std::string tr_in, tr_out;
    tr->add_option("input", tr_in, "Gate file")->required();
    tr->add_option("output", tr_out, "Product file to write")->required();

    // stats
    auto *st = app.add_subcommand("stats", "Layer and parallelism statistics of a circuit");
    StatsOptions st_opt;
    st->add_option("input", st_opt.input, "Product (.json) or gate file")->required();
    st->add_option("--window", st_opt.window, "Moving-window size in layers")->capture_default_str();
    st->add_option("--window-csv", st_opt.window_csv, "Write the windowed statistics here");

    // schedule
    auto *sc = app.add_subcommand("schedule", "Schedule a circuit and report metrics");
    ScheduleOptions sc_opt;
    std::string sc_arch = "pure", sc_packing = "minfit";
    std::optional<double> sc_mean;
    bool sc_no_horizontal = false, sc_no_memo = false, sc_silva = false;
    sc->add_option("input", sc_opt.input, "Product (.json) or gate file")->required();
    sc->add_option("--arch", sc_arch, "bus or pure")->capture_default_str();
    sc->add_option("--density", sc_opt.density, "Ancilla lanes between data doubles")->capture_default_str();
    sc->add_option("--lambda", sc_opt.config.cultivation.lambda, "Cultivation rate per physical cycle")
        ->capture_default_str();
    sc->add_option("--distance", sc_opt.config.cultivation.distance, "Code distance")->capture_default_str();
    sc->add_option("--min-cycles", sc_opt.config.cultivation.min_cycles, "Shortest cultivation in cycles")
        ->capture_default_str();
    sc->add_option("--mean-cycles", sc_mean, "Set lambda from a mean cultivation time (1 = instant)");
    sc->add_flag("--instant-magic", sc_opt.config.instant_magic, "Every cultivation takes one cycle");
    sc->add_option("--packing", sc_packing, "minfit or random")->capture_default_str();
    sc->add_flag("--no-horizontal-edges", sc_no_horizontal, "Reach paired operators only through the sides");
    sc->add_flag("--strict-single-side", sc_opt.config.access.strict_single_side,
                 "Reject products that need both sides of one double");
    sc->add_option("--ready-penalty", sc_opt.config.ready_penalty, "Extra cost for routing through ready cells")
        ->capture_default_str();
    sc->add_flag("--bus-ring-intermediates", sc_opt.config.bus_ring_intermediates,
                 "Let bus ring cells route, not only supply magic");
    sc->add_flag("--no-memo", sc_no_memo, "Recompute every candidate tree after each commit");
    sc->add_flag("--silva-compat", sc_silva, "Instant magic, no top/bottom edges, random packing, bus layout");
    sc->add_option("--seed", sc_opt.config.seed, "Seed of the first run")->capture_default_str();
    sc->add_option("--reps", sc_opt.reps, "Runs with consecutive seeds")->capture_default_str();
    sc->add_option("--out-dir", sc_opt.out_dir, "Directory for traces, metrics and summary");
    sc->add_flag("--verify", sc_opt.verify, "Re-read each trace and check schedule validity");

    // sweep
    auto *sw = app.add_subcommand("sweep", "Run an experiment spec and write CSV tables");
    std::string sw_spec, sw_out = "sweep_out";
    std::size_t sw_jobs = 1;
    sw->add_option("spec", sw_spec, "Experiment spec (JSON)")->required();
    sw->add_option("--out-dir", sw_out, "Output directory")->capture_default_str();
    sw->add_option("--jobs", sw_jobs, "Concurrent runs")->capture_default_str();

    // randgen
    auto *rg = app.add_subcommand("randgen", "Generate a random Pauli-product circuit");
    RandgenOptions rg_opt;
    std::string rg_preset;
    std::optional<double> rg_target;
    std::optional<std::size_t> rg_spread;
    rg->add_option("--qubits", rg_opt.params.num_qubits, "Number of qubits")->capture_default_str();
    rg->add_option("--products", rg_opt.params.num_products, "Number of products")->capture_default_str();
    rg->add_option("--size-mean", rg_opt.params.size_mean, "Mean product size")->capture_default_str();
    rg->add_option("--spread", rg_spread, "Qubit window width (default: all qubits)");
    rg->add_option("--seed", rg_opt.params.seed, "Seed")->capture_default_str();
    rg->add_option("--preset", rg_preset, "Calibrate to low, medium or high parallelism");
    rg->add_option("--target", rg_target, "Calibrate to this many products per layer");
    rg->add_option("-o,--output", rg_opt.out_path, "Product file to write");

    // layout
    auto *ly = app.add_subcommand("layout", "Dump a layout as JSON");
    std::size_t ly_qubits = 8;
    std::string ly_arch = "pure", ly_out;
    int ly_density = 1;
    ly->add_option("--qubits", ly_qubits, "Data qubits")->capture_default_str();
    ly->add_option("--arch", ly_arch, "bus or pure")->capture_default_str();
    ly->add_option("--density", ly_density, "Ancilla lanes")->capture_default_str();
    ly->add_option("-o,--output", ly_out, "File to write (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (!kernel.empty()) {
            kernels::set_active_backend(parse_backend(kernel));
        }
        if (*tr) {
            return cmd_transpile(tr_in, tr_out, std::cout, std::cerr);
        }
        if (*st) {
            return cmd_stats(st_opt, std::cout, std::cerr);
        }
        if (*sc) {
            sc_opt.arch = parse_arch(sc_arch);
            sc_opt.config.packing = parse_packing(sc_packing);
            sc_opt.config.access.allow_horizontal_edges = !sc_no_horizontal;
            sc_opt.config.memoize = !sc_no_memo;
            if (sc_silva) {
                sc_opt.arch = Arch::Bus;
                sc_opt.density = 1;
                sc_opt.config.instant_magic = true;
                sc_opt.config.packing = Packing::RandomOrder;
                sc_opt.config.access.allow_horizontal_edges = false;
            }
            if (sc_mean) {
                if (*sc_mean < 1.0) {
                    throw InputError("--mean-cycles must be at least 1");
                }
                if (*sc_mean == 1.0) {
                    sc_opt.config.instant_magic = true;
                } else {
                    sc_opt.config.cultivation.lambda =
                        lambda_for_mean_cycles(*sc_mean, sc_opt.config.cultivation.distance);
                }
            }
            return cmd_schedule(sc_opt, std::cout, std::cerr);
        }
        if (*sw) {
            return cmd_sweep(sw_spec, sw_out, sw_jobs, std::cout, std::cerr);
        }
        if (*rg) {
            rg_opt.params.spread = rg_spread.value_or(rg_opt.params.num_qubits);
            if (!rg_preset.empty()) {
                rg_opt.target = preset_target(parse_preset(rg_preset));
            }
            if (rg_target) {
                rg_opt.target = rg_target;
            }
            return cmd_randgen(rg_opt, std::cout, std::cerr);
        }
        if (*ly) {
            return cmd_layout(ly_qubits, parse_arch(ly_arch), ly_density, ly_out, std::cout);
        }
    } catch (const InputError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ContractViolation &e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
