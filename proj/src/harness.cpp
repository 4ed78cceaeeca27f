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

#include "lsched/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cinttypes>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "lsched/clifford.hpp"
#include "lsched/common.hpp"
#include "lsched/task_graph.hpp"
#include "lsched/trace.hpp"

namespace lsched {

namespace fs = std::filesystem;

namespace {

bool ends_with(const std::string &s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void write_text(const fs::path &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw InputError("cannot write '" + path.string() + "'");
    }
    f << text;
    if (!f) {
        throw InputError("failed writing '" + path.string() + "'");
    }
}

std::string read_text(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw InputError("cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void ensure_dir(const std::string &dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw InputError("cannot create directory '" + dir + "': " + ec.message());
    }
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string csv_field(const std::string &s) {
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

/// Maps library exceptions to CLI exit codes, printing the message.
template <typename F>
int guarded(std::ostream &err, F &&body) {
    try {
        return body();
    } catch (const SchedulingError &e) {
        err << "scheduling error (product " << e.product_seq() << "): " << e.what() << "\n";
        return kExitSchedulingError;
    } catch (const InputError &e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ContractViolation &e) {
        err << "invalid arguments: " << e.what() << "\n";
        return kExitInputError;
    } catch (const nlohmann::json::exception &e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
}

Layout layout_for(const Circuit &circuit, Arch arch, int density) {
    return generate_layout(std::max<std::size_t>(1, circuit.num_qubits), arch, density);
}

}  // namespace

Circuit load_circuit(const std::string &path) {
    if (ends_with(path, ".json")) {
        return read_circuit_file(path);
    }
    return transpile(read_gate_file(path));
}

double median(std::vector<double> values) {
    if (values.empty()) {
        throw ContractViolation("median of an empty sample");
    }
    std::sort(values.begin(), values.end());
    std::size_t n = values.size();
    return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)> &f) {
    threads = std::max<std::size_t>(1, std::min(threads, n));
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) {
                return;
            }
            try {
                f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; t++) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

RunOutput run_once(const Circuit &circuit, const Layout &layout, const SchedulerConfig &config) {
    TaskGraph graph(circuit);
    RunOutput o;
    o.result = run_schedule(graph, layout, config);
    o.metrics = compute_metrics(graph, layout, o.result, config);
    o.trace_csv = trace_to_csv(o.result.placements);
    o.metrics_json = metrics_to_json(o.metrics, layout, config).dump(2) + "\n";
    return o;
}

int cmd_transpile(const std::string &in_path, const std::string &out_path, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        Circuit c = transpile(read_gate_file(in_path));
        write_circuit_file(out_path, c);
        out << "products " << c.products.size() << "\nqubits " << c.num_qubits << "\n";
        return kExitOk;
    });
}

int cmd_stats(const StatsOptions &opt, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        if (opt.window < 1) {
            throw InputError("window must be at least 1");
        }
        Circuit c = load_circuit(opt.input);
        TaskGraph g(c);
        ParallelismStats s = parallelism_stats(g);
        if (c.products.empty()) {
            err << "warning: circuit has no products\n";
        }
        auto windows = moving_window_stats(g, opt.window);
        nlohmann::ordered_json j;
        j["qubits"] = c.num_qubits;
        j["products"] = c.products.size();
        j["t_count"] = s.t_count;
        j["layers"] = s.num_layers;
        j["avg_products_per_layer"] = s.avg_products_per_layer;
        j["max_products_per_layer"] = s.max_products_per_layer;
        j["window"] = opt.window;
        j["windows"] = windows.size();
        out << j.dump(2) << "\n";
        if (!opt.window_csv.empty()) {
            std::string csv = "layer_index,avg_products,max_products,avg_size,max_size\n";
            for (const auto &w : windows) {
                csv += std::to_string(w.layer_index) + "," + fmt(w.avg_products) + "," +
                       std::to_string(w.max_products) + "," + fmt(w.avg_size) + "," + std::to_string(w.max_size) +
                       "\n";
            }
            write_text(opt.window_csv, csv);
        }
        return kExitOk;
    });
}

int cmd_schedule(const ScheduleOptions &opt, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        if (opt.reps < 1) {
            throw InputError("--reps must be at least 1");
        }
        opt.config.validate();
        Circuit circuit = load_circuit(opt.input);
        Layout layout = layout_for(circuit, opt.arch, opt.density);
        TaskGraph graph(circuit);
        if (!opt.out_dir.empty()) {
            ensure_dir(opt.out_dir);
        }

        std::vector<double> cycles, par, sched, bound, cult;
        nlohmann::ordered_json seeds = nlohmann::ordered_json::array();
        for (int r = 0; r < opt.reps; r++) {
            SchedulerConfig cfg = opt.config;
            cfg.seed = opt.config.seed + static_cast<std::uint64_t>(r);
            RunOutput o = run_once(circuit, layout, cfg);
            if (opt.verify) {
                auto problems =
                    validate_schedule(graph, layout, cfg, o.result.cycles, trace_from_csv(o.trace_csv));
                if (!problems.empty()) {
                    for (const auto &p : problems) {
                        err << "verify: " << p << "\n";
                    }
                    throw SchedulingError("schedule failed verification", -1);
                }
            }
            if (!opt.out_dir.empty()) {
                std::string tag = std::to_string(cfg.seed);
                write_text(fs::path(opt.out_dir) / ("trace_" + tag + ".csv"), o.trace_csv);
                write_text(fs::path(opt.out_dir) / ("metrics_" + tag + ".json"), o.metrics_json);
            }
            seeds.push_back(cfg.seed);
            cycles.push_back(o.metrics.cycles);
            par.push_back(o.metrics.parallel_efficiency);
            sched.push_back(o.metrics.scheduling_efficiency);
            bound.push_back(o.metrics.efficiency_upper_bound);
            if (auto a = o.metrics.cultivation.avg_completed_cycles()) {
                cult.push_back(*a);
            }
        }

        nlohmann::ordered_json summary;
        summary["input"] = opt.input;
        summary["runs"] = opt.reps;
        summary["seeds"] = seeds;
        summary["layers"] = graph.num_layers();
        summary["products"] = graph.size();
        summary["n_cells"] = layout.cell_count();
        nlohmann::ordered_json med;
        med["cycles"] = median(cycles);
        med["parallel_efficiency"] = median(par);
        med["scheduling_efficiency"] = median(sched);
        med["efficiency_upper_bound"] = median(bound);
        if (cult.empty()) {
            med["avg_completed_cycles"] = nullptr;
        } else {
            med["avg_completed_cycles"] = median(cult);
        }
        summary["median"] = std::move(med);
        summary["config"] = config_to_json(layout, opt.config);
        std::string text = summary.dump(2) + "\n";
        if (!opt.out_dir.empty()) {
            write_text(fs::path(opt.out_dir) / "summary.json", text);
        }
        out << text;
        return kExitOk;
    });
}

int cmd_randgen(const RandgenOptions &opt, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        RandGenParams p = opt.params;
        if (opt.target) {
            p = calibrate_preset(*opt.target, p.num_qubits, p.seed, p.num_products);
        }
        Circuit c = generate_random_circuit(p);
        if (!opt.out_path.empty()) {
            write_circuit_file(opt.out_path, c);
        }
        nlohmann::ordered_json j;
        j["num_qubits"] = p.num_qubits;
        j["num_products"] = p.num_products;
        j["size_mean"] = p.size_mean;
        j["spread"] = p.spread;
        j["seed"] = p.seed;
        j["products_per_layer"] = measured_parallelism(c);
        out << j.dump(2) << "\n";
        return kExitOk;
    });
}

int cmd_layout(std::size_t qubits, Arch arch, int density, const std::string &out_path, std::ostream &out) {
    Layout l = generate_layout(qubits, arch, density);
    std::string text = layout_to_json(l);
    if (out_path.empty()) {
        out << text;
    } else {
        write_text(out_path, text);
        out << "width " << l.width() << "\nheight " << l.height() << "\ncells " << l.cell_count() << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// Sweeps.

namespace {

using json = nlohmann::json;

const std::vector<std::string> kExpandable = {
    "arch",
    "density",
    "mean_cycles",
    "lambda",
    "distance",
    "min_cycles",
    "instant_magic",
    "packing",
    "allow_horizontal_edges",
    "strict_single_side",
    "ready_penalty",
    "bus_ring_intermediates",
    "seed",
};

std::vector<json> as_list(const json &v) {
    if (v.is_array()) {
        if (v.empty()) {
            throw InputError("empty list in experiment spec");
        }
        return std::vector<json>(v.begin(), v.end());
    }
    return {v};
}

std::string fmt_short(double v) {
    std::ostringstream s;
    s << v;
    return s.str();
}

std::vector<SweepInput> parse_inputs(const json &v, const std::string &base_dir) {
    std::vector<SweepInput> out;
    for (const json &item : as_list(v)) {
        if (!item.is_object() || item.size() != 1) {
            throw InputError("each input must be {\"file\": ...} or {\"randgen\": {...}}");
        }
        if (item.contains("file")) {
            SweepInput in;
            std::string f = item["file"].get<std::string>();
            fs::path p(f);
            if (p.is_relative() && !base_dir.empty()) {
                p = fs::path(base_dir) / p;
            }
            in.file = p.string();
            in.label = f;
            out.push_back(std::move(in));
            continue;
        }
        if (!item.contains("randgen")) {
            throw InputError("each input must be {\"file\": ...} or {\"randgen\": {...}}");
        }
        const json &r = item["randgen"];
        static const std::vector<std::string> known = {
            "num_qubits", "num_products", "preset", "products_per_layer", "size_mean", "spread", "seed"};
        for (auto it = r.begin(); it != r.end(); ++it) {
            if (std::find(known.begin(), known.end(), it.key()) == known.end()) {
                throw InputError("unknown randgen field '" + it.key() + "'");
            }
        }
        int knobs = r.contains("preset") + r.contains("products_per_layer") + r.contains("size_mean");
        if (knobs != 1) {
            throw InputError("randgen needs exactly one of preset, products_per_layer, size_mean");
        }
        std::size_t q = r.value("num_qubits", std::size_t{64});
        std::size_t n = r.value("num_products", std::size_t{20000});
        std::string knob = r.contains("preset") ? "preset" : r.contains("products_per_layer") ? "products_per_layer"
                                                                                               : "size_mean";
        std::vector<json> spreads = r.contains("spread") ? as_list(r["spread"]) : std::vector<json>{json(q)};
        std::vector<json> seeds = r.contains("seed") ? as_list(r["seed"]) : std::vector<json>{json(0)};
        for (const json &kv : as_list(r[knob])) {
            for (const json &sp : spreads) {
                for (const json &sd : seeds) {
                    SweepInput in;
                    RandGenParams p;
                    p.num_qubits = q;
                    p.num_products = n;
                    p.spread = sp.get<std::size_t>();
                    p.seed = sd.get<std::uint64_t>();
                    std::string label = "randgen:q" + std::to_string(q) + ":n" + std::to_string(n);
                    if (knob == "preset") {
                        Preset pr = parse_preset(kv.get<std::string>());
                        in.target = preset_target(pr);
                        label += ":" + std::string(preset_name(pr));
                    } else if (knob == "products_per_layer") {
                        in.target = kv.get<double>();
                        label += ":ppl" + fmt_short(*in.target);
                    } else {
                        p.size_mean = kv.get<double>();
                        label += ":mean" + fmt_short(p.size_mean) + ":spread" + std::to_string(p.spread);
                    }
                    if (in.target && r.contains("spread")) {
                        throw InputError("spread is fixed to num_qubits when calibrating to a target");
                    }
                    label += ":seed" + std::to_string(p.seed);
                    in.randgen = p;
                    in.label = label;
                    out.push_back(std::move(in));
                }
            }
        }
    }
    return out;
}

SweepJob make_job(const json &flat, std::size_t job_index, const std::string &name, std::size_t input, int reps) {
    SweepJob j;
    j.job = job_index;
    j.name = name;
    j.input = input;
    j.reps = reps;
    if (flat.contains("arch")) {
        j.arch = parse_arch(flat["arch"].get<std::string>());
    }
    if (flat.contains("density")) {
        j.density = flat["density"].get<int>();
        if (j.density < 1) {
            throw InputError("density must be at least 1");
        }
    }
    SchedulerConfig &c = j.config;
    if (flat.contains("distance")) {
        c.cultivation.distance = flat["distance"].get<int>();
    }
    if (flat.contains("min_cycles")) {
        c.cultivation.min_cycles = flat["min_cycles"].get<int>();
    }
    if (flat.contains("lambda")) {
        c.cultivation.lambda = flat["lambda"].get<double>();
    }
    if (flat.contains("instant_magic")) {
        c.instant_magic = flat["instant_magic"].get<bool>();
    }
    if (flat.contains("mean_cycles")) {
        if (flat.contains("lambda")) {
            throw InputError("give either lambda or mean_cycles, not both");
        }
        double m = flat["mean_cycles"].get<double>();
        if (!(m >= 1.0)) {
            throw InputError("mean_cycles must be at least 1");
        }
        j.mean_cycles = m;
        if (m == 1.0) {
            c.instant_magic = true;
        } else {
            c.cultivation.lambda = lambda_for_mean_cycles(m, c.cultivation.distance);
        }
    }
    if (flat.contains("packing")) {
        c.packing = parse_packing(flat["packing"].get<std::string>());
    }
    if (flat.contains("allow_horizontal_edges")) {
        c.access.allow_horizontal_edges = flat["allow_horizontal_edges"].get<bool>();
    }
    if (flat.contains("strict_single_side")) {
        c.access.strict_single_side = flat["strict_single_side"].get<bool>();
    }
    if (flat.contains("ready_penalty")) {
        c.ready_penalty = flat["ready_penalty"].get<int>();
    }
    if (flat.contains("bus_ring_intermediates")) {
        c.bus_ring_intermediates = flat["bus_ring_intermediates"].get<bool>();
    }
    if (flat.contains("seed")) {
        c.seed = flat["seed"].get<std::uint64_t>();
    }
    try {
        c.validate();
    } catch (const ContractViolation &e) {
        throw InputError(std::string("job '") + name + "': " + e.what());
    }
    return j;
}

void expand(
    const json &job,
    std::size_t key,
    json &flat,
    const std::function<void(const json &)> &emit) {
    if (key == kExpandable.size()) {
        emit(flat);
        return;
    }
    const std::string &k = kExpandable[key];
    if (!job.contains(k)) {
        expand(job, key + 1, flat, emit);
        return;
    }
    for (const json &v : as_list(job[k])) {
        flat[k] = v;
        expand(job, key + 1, flat, emit);
    }
    flat.erase(k);
}

double effective_mean(const SweepJob &j) {
    if (j.mean_cycles) {
        return *j.mean_cycles;
    }
    return j.config.instant_magic ? 1.0 : expected_cultivation_cycles(j.config.cultivation);
}

}  // namespace

ExperimentSpec parse_experiment_spec(const nlohmann::json &doc, const std::string &base_dir) {
    try {
        if (!doc.is_object()) {
            throw InputError("experiment spec must be a JSON object");
        }
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            if (it.key() != "jobs" && it.key() != "master_seed") {
                throw InputError("unknown experiment field '" + it.key() + "'");
            }
        }
        std::uint64_t master_seed = doc.value("master_seed", std::uint64_t{0});
        ExperimentSpec spec;
        std::map<std::string, std::size_t> input_index;
        const json jobs = doc.value("jobs", json::array());
        if (!jobs.is_array()) {
            throw InputError("'jobs' must be a list");
        }
        for (std::size_t ji = 0; ji < jobs.size(); ji++) {
            const json &job = jobs[ji];
            if (!job.is_object()) {
                throw InputError("each job must be an object");
            }
            for (auto it = job.begin(); it != job.end(); ++it) {
                const std::string &k = it.key();
                if (k != "name" && k != "input" && k != "reps" &&
                    std::find(kExpandable.begin(), kExpandable.end(), k) == kExpandable.end()) {
                    throw InputError("unknown job field '" + k + "'");
                }
            }
            if (!job.contains("input")) {
                throw InputError("job " + std::to_string(ji) + " has no input");
            }
            std::string name = job.value("name", "job" + std::to_string(ji));
            int reps = job.value("reps", 1);
            if (reps < 1) {
                throw InputError("job '" + name + "': reps must be at least 1");
            }
            std::vector<std::size_t> inputs;
            for (SweepInput &in : parse_inputs(job["input"], base_dir)) {
                auto [it, fresh] = input_index.emplace(in.label, spec.inputs.size());
                if (fresh) {
                    spec.inputs.push_back(std::move(in));
                }
                inputs.push_back(it->second);
            }
            json base = job;
            if (!base.contains("seed")) {
                base["seed"] = master_seed;
            }
            for (std::size_t input : inputs) {
                json flat = json::object();
                expand(base, 0, flat, [&](const json &f) {
                    spec.jobs.push_back(make_job(f, ji, name, input, reps));
                });
            }
        }
        return spec;
    } catch (const json::exception &e) {
        throw InputError(std::string("malformed experiment spec: ") + e.what());
    }
}

SweepOutput run_sweep(const ExperimentSpec &spec, std::size_t threads) {
    const std::size_t ni = spec.inputs.size();
    std::vector<Circuit> circuits(ni);
    std::vector<double> ppl(ni, 0);
    std::vector<std::string> input_error(ni);
    parallel_for(ni, threads, [&](std::size_t i) {
        const SweepInput &in = spec.inputs[i];
        try {
            if (in.file) {
                circuits[i] = load_circuit(*in.file);
            } else {
                RandGenParams p = *in.randgen;
                if (in.target) {
                    p = calibrate_preset(*in.target, p.num_qubits, p.seed, p.num_products);
                }
                circuits[i] = generate_random_circuit(p);
            }
            ppl[i] = measured_parallelism(circuits[i]);
        } catch (const std::exception &e) {
            input_error[i] = e.what();
        }
    });

    SweepOutput out;
    for (const SweepJob &j : spec.jobs) {
        for (int r = 0; r < j.reps; r++) {
            SweepRow row;
            row.job = &j;
            row.rep = r;
            row.seed = j.config.seed + static_cast<std::uint64_t>(r);
            row.products_per_layer = ppl[j.input];
            out.rows.push_back(std::move(row));
        }
    }
    parallel_for(out.rows.size(), threads, [&](std::size_t k) {
        SweepRow &row = out.rows[k];
        const SweepJob &j = *row.job;
        if (!input_error[j.input].empty()) {
            row.error = "input: " + input_error[j.input];
            return;
        }
        try {
            const Circuit &c = circuits[j.input];
            Layout layout = layout_for(c, j.arch, j.density);
            SchedulerConfig cfg = j.config;
            cfg.seed = row.seed;
            TaskGraph g(c);
            ScheduleResult res = run_schedule(g, layout, cfg);
            auto problems = validate_schedule(g, layout, cfg, res.cycles, res.placements);
            if (!problems.empty()) {
                row.error = "invalid schedule: " + problems.front();
                return;
            }
            row.metrics = compute_metrics(g, layout, res, cfg);
        } catch (const std::exception &e) {
            row.error = e.what();
        }
    });

    std::string &rc = out.results_csv;
    rc = "job,name,input,products_per_layer,arch,density,packing,instant_magic,mean_cycles,lambda,distance,rep,seed,"
         "status,cycles,layers,n_cells,n_ref_cells,volume,parallel_efficiency,scheduling_efficiency,"
         "efficiency_upper_bound,avg_completed_cycles,completed,terminated,ready_used_for_routing,error\n";
    for (const SweepRow &row : out.rows) {
        const SweepJob &j = *row.job;
        rc += std::to_string(j.job) + "," + csv_field(j.name) + "," + csv_field(spec.inputs[j.input].label) + "," +
              fmt(row.products_per_layer) + "," + std::string(arch_name(j.arch)) + "," + std::to_string(j.density) +
              "," + std::string(packing_name(j.config.packing)) + "," + (j.config.instant_magic ? "1" : "0") + "," +
              fmt(effective_mean(j)) + "," + fmt_short(j.config.cultivation.lambda) + "," +
              std::to_string(j.config.cultivation.distance) + "," + std::to_string(row.rep) + "," +
              std::to_string(row.seed) + ",";
        if (row.metrics) {
            const Metrics &m = *row.metrics;
            auto avg = m.cultivation.avg_completed_cycles();
            rc += "ok," + std::to_string(m.cycles) + "," + std::to_string(m.layers) + "," +
                  std::to_string(m.n_cells) + "," + std::to_string(m.n_ref_cells) + "," + std::to_string(m.volume) +
                  "," + fmt(m.parallel_efficiency) + "," + fmt(m.scheduling_efficiency) + "," +
                  fmt(m.efficiency_upper_bound) + "," + (avg ? fmt(*avg) : "") + "," +
                  std::to_string(m.cultivation.completed) + "," + std::to_string(m.cultivation.terminated) + "," +
                  std::to_string(m.cultivation.ready_used_for_routing) + ",\n";
        } else {
            out.any_failed = true;
            rc += "error,,,,,,,,,,,,," + csv_field(row.error) + "\n";
        }
    }

    // Per-job medians.
    struct JobAgg {
        std::vector<double> cycles, par, sched, cult;
        double bound = 0;
        int failed = 0;
    };
    std::vector<JobAgg> agg(spec.jobs.size());
    for (const SweepRow &row : out.rows) {
        JobAgg &a = agg[static_cast<std::size_t>(row.job - spec.jobs.data())];
        if (!row.metrics) {
            a.failed++;
            continue;
        }
        a.cycles.push_back(row.metrics->cycles);
        a.par.push_back(row.metrics->parallel_efficiency);
        a.sched.push_back(row.metrics->scheduling_efficiency);
        a.bound = row.metrics->efficiency_upper_bound;
        if (auto avg = row.metrics->cultivation.avg_completed_cycles()) {
            a.cult.push_back(*avg);
        }
    }
    auto med_or_blank = [](const std::vector<double> &v) {
        return v.empty() ? std::string() : fmt(median(v));
    };

    out.parallelism_csv =
        "job,name,input,products_per_layer,arch,density,packing,mean_cycles,runs,failed,median_cycles,"
        "median_parallel_efficiency,median_scheduling_efficiency,efficiency_upper_bound,median_avg_completed_cycles\n";
    for (std::size_t k = 0; k < spec.jobs.size(); k++) {
        const SweepJob &j = spec.jobs[k];
        const JobAgg &a = agg[k];
        out.parallelism_csv += std::to_string(j.job) + "," + csv_field(j.name) + "," +
                               csv_field(spec.inputs[j.input].label) + "," + fmt(ppl[j.input]) + "," +
                               std::string(arch_name(j.arch)) + "," + std::to_string(j.density) + "," +
                               std::string(packing_name(j.config.packing)) + "," + fmt(effective_mean(j)) + "," +
                               std::to_string(a.sched.size()) + "," + std::to_string(a.failed) + "," +
                               med_or_blank(a.cycles) + "," + med_or_blank(a.par) + "," + med_or_blank(a.sched) + "," +
                               (a.sched.empty() ? std::string() : fmt(a.bound)) + "," + med_or_blank(a.cult) + "\n";
    }

    std::vector<const SweepRow *> dens;
    for (const SweepRow &row : out.rows) {
        if (row.metrics) {
            dens.push_back(&row);
        }
    }
    std::stable_sort(dens.begin(), dens.end(), [](const SweepRow *a, const SweepRow *b) {
        const SweepJob &x = *a->job;
        const SweepJob &y = *b->job;
        return std::make_tuple(x.input, x.arch, x.config.packing, effective_mean(x), a->rep, x.density) <
               std::make_tuple(y.input, y.arch, y.config.packing, effective_mean(y), b->rep, y.density);
    });
    out.density_csv =
        "input,products_per_layer,arch,packing,mean_cycles,rep,seed,density,cycles,parallel_efficiency,"
        "scheduling_efficiency\n";
    for (const SweepRow *row : dens) {
        const SweepJob &j = *row->job;
        out.density_csv += csv_field(spec.inputs[j.input].label) + "," + fmt(row->products_per_layer) + "," +
                           std::string(arch_name(j.arch)) + "," + std::string(packing_name(j.config.packing)) + "," +
                           fmt(effective_mean(j)) + "," + std::to_string(row->rep) + "," + std::to_string(row->seed) +
                           "," + std::to_string(j.density) + "," + std::to_string(row->metrics->cycles) + "," +
                           fmt(row->metrics->parallel_efficiency) + "," + fmt(row->metrics->scheduling_efficiency) +
                           "\n";
    }

    // Pure versus bus at each cultivation mean.
    struct Pair {
        std::vector<double> eff[2];
        std::optional<double> bound[2];
    };
    std::map<std::tuple<std::size_t, int, int, double>, Pair> pairs;
    for (std::size_t k = 0; k < spec.jobs.size(); k++) {
        const SweepJob &j = spec.jobs[k];
        Pair &p = pairs[{j.input, j.density, static_cast<int>(j.config.packing), effective_mean(j)}];
        int side = j.arch == Arch::PureMagic ? 0 : 1;
        p.eff[side].insert(p.eff[side].end(), agg[k].sched.begin(), agg[k].sched.end());
        if (!agg[k].sched.empty()) {
            p.bound[side] = agg[k].bound;
        }
    }
    out.cultivation_csv =
        "input,products_per_layer,density,packing,mean_cycles,bound_pure,bound_bus,median_efficiency_pure,"
        "median_efficiency_bus,relative_improvement\n";
    for (const auto &[key, p] : pairs) {
        auto [input, density, packing, mean] = key;
        std::string rel;
        if (!p.eff[0].empty() && !p.eff[1].empty()) {
            rel = fmt(median(p.eff[0]) / median(p.eff[1]));
        }
        out.cultivation_csv += csv_field(spec.inputs[input].label) + "," + fmt(ppl[input]) + "," +
                               std::to_string(density) + "," +
                               std::string(packing_name(static_cast<Packing>(packing))) + "," + fmt(mean) + "," +
                               (p.bound[0] ? fmt(*p.bound[0]) : "") + "," + (p.bound[1] ? fmt(*p.bound[1]) : "") +
                               "," + med_or_blank(p.eff[0]) + "," + med_or_blank(p.eff[1]) + "," + rel + "\n";
    }
    return out;
}

int cmd_sweep(
    const std::string &spec_path, const std::string &out_dir, std::size_t threads, std::ostream &out,
    std::ostream &err) {
    return guarded(err, [&] {
        json doc;
        try {
            doc = json::parse(read_text(spec_path));
        } catch (const json::parse_error &e) {
            throw InputError("experiment spec is not valid JSON: " + std::string(e.what()));
        }
        ExperimentSpec spec = parse_experiment_spec(doc, fs::path(spec_path).parent_path().string());
        SweepOutput res = run_sweep(spec, threads);
        ensure_dir(out_dir);
        fs::path dir(out_dir);
        write_text(dir / "results.csv", res.results_csv);
        write_text(dir / "parallelism.csv", res.parallelism_csv);
        write_text(dir / "density.csv", res.density_csv);
        write_text(dir / "cultivation.csv", res.cultivation_csv);
        std::size_t failed = 0;
        for (const SweepRow &row : res.rows) {
            if (!row.metrics) {
                failed++;
                err << "run failed: job " << row.job->job << " (" << row.job->name << ") seed " << row.seed << ": "
                    << row.error << "\n";
            }
        }
        out << "jobs " << spec.jobs.size() << "\nruns " << res.rows.size() << "\nfailed " << failed << "\n";
        return res.any_failed ? kExitPartialFailure : kExitOk;
    });
}

}  // namespace lsched
