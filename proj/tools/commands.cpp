// Copyright 2026 The hepgrover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include "hepgrover/dataset.hpp"
#include "hepgrover/errors.hpp"
#include "hepgrover/grover.hpp"
#include "hepgrover/io.hpp"
#include "hepgrover/qasm.hpp"
#include "hepgrover/report.hpp"
#include "hepgrover/sampling.hpp"
#include "hepgrover/state_vector.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>

namespace hepgrover::cli {
namespace {

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

int guarded(std::ostream &err, const std::function<int()> &body) {
    try {
        return body();
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const ValidationError &e) {
        err << "invalid input: " << e.what() << '\n';
        return kConfigError;
    } catch (const CapacityError &e) {
        err << "invalid input: " << e.what() << '\n';
        return kConfigError;
    } catch (const UndefinedSearchError &e) {
        err << "invalid input: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
}

EventGroup select_group(const std::filesystem::path &dataset, bool mev,
                        Scheme scheme, std::size_t group) {
    const auto records = load_dataset(dataset, {mev});
    auto groups = group_records(records, group_size(scheme));
    if (group >= groups.size()) {
        throw ConfigError("dataset has " + std::to_string(groups.size()) +
                          " group(s); group " + std::to_string(group) +
                          " requested");
    }
    return std::move(groups[group]);
}

} // namespace

void RunConfig::validate() const {
    if (dataset.empty()) {
        throw ConfigError("a dataset is required");
    }
    (void)scheme_from_int(scheme);
    if (shots == 0) {
        throw ConfigError("shots must be >= 1");
    }
    if (!(threshold > 0.0 && threshold <= 1.0)) {
        throw ConfigError("threshold must lie in (0, 1]");
    }
}

NoiseProfile resolve_noise_profile(const std::string &name_or_path) {
    if (auto builtin = builtin_profile(name_or_path)) {
        return *builtin;
    }
    if (!std::filesystem::exists(name_or_path)) {
        std::string names;
        for (const auto &n : builtin_profile_names()) {
            names += (names.empty() ? "" : ", ") + n;
        }
        throw ConfigError("noise profile '" + name_or_path +
                          "' is neither a file nor one of: " + names);
    }
    try {
        return load_noise_profile(name_or_path);
    } catch (const ParseError &e) {
        throw ParseError(name_or_path + ": " + e.what(), e.line(), e.column());
    }
}

BasisState parse_state_token(const std::string &token) {
    std::string t = token;
    if (!t.empty() && t.front() == '|') {
        if (t.size() < 3 || t.back() != '>') {
            throw ConfigError("malformed ket '" + token + "'");
        }
        return parse_basis_label(t.substr(1, t.size() - 2));
    }
    if (t.rfind("0b", 0) == 0) {
        return parse_basis_label(t.substr(2));
    }
    try {
        std::size_t used = 0;
        const auto v = std::stoull(t, &used, 10);
        if (used != t.size()) {
            throw ConfigError("malformed state '" + token + "'");
        }
        return v;
    } catch (const std::logic_error &) {
        throw ConfigError("malformed state '" + token + "'");
    }
}

int run_search_command(const RunConfig &config, std::ostream &out,
                       std::ostream &err) {
    return guarded(err, [&] {
        config.validate();
        SearchOptions options;
        options.scheme = scheme_from_int(config.scheme);
        options.shots = config.shots;
        options.seed = config.seed;
        options.threshold = config.threshold;
        if (config.noise) {
            options.noise = resolve_noise_profile(*config.noise);
        }
        const auto records = load_dataset(config.dataset, {config.pt_in_mev});
        const auto reports = search_database(records, options);

        if (config.emit_circuit) {
            std::filesystem::create_directories(*config.emit_circuit);
            for (const auto &group :
                 group_records(records, group_size(options.scheme))) {
                const auto plans = plan_group(group, options.scheme);
                for (std::size_t p = 0; p < plans.size(); ++p) {
                    write_circuit_text(
                        plans[p].circuit,
                        *config.emit_circuit /
                            ("group" + std::to_string(group.group_id) + "_pass" +
                             std::to_string(p) + ".qasm"));
                }
            }
        }
        if (config.svg) {
            std::filesystem::create_directories(*config.svg);
            for (const auto &r : reports) {
                const std::string stem = "group" + std::to_string(r.group_id) +
                                         "_pass" + std::to_string(r.pass);
                write_file_atomic(*config.svg / (stem + ".svg"),
                                  render_histogram_svg(r.counts, kEncodedQubits,
                                                       stem));
            }
        }
        if (!config.output.empty()) {
            write_file_atomic(config.output, format_report_jsonl(reports));
        }

        out << render_reports_text(reports);
        std::size_t selected = 0;
        for (const auto &r : reports) {
            selected += r.selections.size();
        }
        out << records.size() << " record(s), " << reports.size()
            << " search(es), " << selected << " selection(s)";
        if (options.noise) {
            out << ", noise profile '" << options.noise->label << "'";
        }
        out << '\n';
        return static_cast<int>(kOk);
    });
}

int demo_grover_command(const DemoConfig &config, std::ostream &out,
                        std::ostream &err) {
    return guarded(err, [&] {
        GroverProblem problem{config.qubits, config.marked, 0};
        problem.validate();
        if (config.shots == 0) {
            throw ConfigError("shots must be >= 1");
        }
        const std::size_t m = config.marked.size();

        if (config.sweep) {
            const auto [first, last] = *config.sweep;
            if (first > last) {
                throw ConfigError("sweep range is empty");
            }
            if (m == 0) {
                throw ConfigError("a sweep needs at least one marked state");
            }
            std::ostringstream csv;
            csv << "iterations,simulated,analytic,sampled\n";
            for (std::size_t k = first; k <= last; ++k) {
                problem.iterations = k;
                const auto outcome =
                    run_grover(problem, config.shots, derive_seed(config.seed, k));
                std::uint64_t hits = 0;
                for (BasisState s : config.marked) {
                    if (auto it = outcome.counts.find(s);
                        it != outcome.counts.end()) {
                        hits += it->second;
                    }
                }
                csv << k << ',' << fixed(outcome.success_probability, 6) << ','
                    << fixed(success_probability_analytic(config.qubits, m, k), 6)
                    << ','
                    << fixed(static_cast<double>(hits) /
                                 static_cast<double>(config.shots),
                             6)
                    << '\n';
            }
            out << csv.str();
            if (!config.output.empty()) {
                write_file_atomic(config.output, csv.str());
            }
            return static_cast<int>(kOk);
        }

        problem.iterations = config.iterations
                                 ? *config.iterations
                                 : (m == 0 ? 0 : optimal_iterations(config.qubits, m));
        const auto outcome = run_grover(problem, config.shots, config.seed);
        const auto probs = probabilities(outcome.final_state);

        std::ostringstream text;
        text << "qubits " << config.qubits << ", marked {";
        bool first = true;
        for (BasisState s : config.marked) {
            text << (first ? "" : ", ") << '|' << basis_label(s, config.qubits)
                 << '>';
            first = false;
        }
        text << "}, iterations " << problem.iterations;
        if (!config.iterations && m > 0) {
            text << " (optimal)";
        }
        text << '\n';
        if (m > 0) {
            text << "success probability: simulated "
                 << fixed(outcome.success_probability, 6) << ", analytic "
                 << fixed(success_probability_analytic(config.qubits, m,
                                                       problem.iterations),
                          6)
                 << '\n';
        }
        text << "state,probability,count\n";
        for (BasisState s = 0; s < probs.size(); ++s) {
            const auto it = outcome.counts.find(s);
            text << basis_label(s, config.qubits) << ',' << fixed(probs[s], 6)
                 << ',' << (it == outcome.counts.end() ? 0 : it->second)
                 << '\n';
        }
        out << text.str()
            << render_histogram_text(outcome.counts, config.qubits,
                                     config.marked);
        if (!config.output.empty()) {
            write_file_atomic(config.output, text.str());
        }
        if (config.svg) {
            write_file_atomic(*config.svg,
                              render_histogram_svg(outcome.counts, config.qubits,
                                                   "Grover search"));
        }
        return static_cast<int>(kOk);
    });
}

int emit_circuit_command(const EmitConfig &config, std::ostream &out,
                         std::ostream &err) {
    return guarded(err, [&] {
        if (config.output.empty()) {
            throw ConfigError("an output path is required");
        }
        Circuit circuit;
        if (config.dataset) {
            const Scheme scheme = scheme_from_int(config.scheme);
            const auto group =
                select_group(*config.dataset, config.pt_in_mev, scheme, config.group);
            const auto plans = plan_group(group, scheme);
            if (config.pass >= plans.size()) {
                throw ConfigError("group " + std::to_string(config.group) +
                                  " has " + std::to_string(plans.size()) +
                                  " pass(es)");
            }
            circuit = plans[config.pass].circuit;
        } else {
            GroverProblem problem{config.qubits, config.marked, 0};
            problem.validate();
            problem.iterations =
                config.iterations
                    ? *config.iterations
                    : (config.marked.empty()
                           ? 0
                           : optimal_iterations(config.qubits, config.marked.size()));
            circuit = build_grover(problem);
        }
        write_circuit_text(circuit, config.output);
        const auto counts = gate_count_report(circuit);
        out << "wrote " << config.output.string() << ": "
            << circuit.num_qubits() << " qubit(s), " << counts.total()
            << " gate(s)";
        if (const auto anc = emitted_ancillas(circuit); anc > 0) {
            out << ", " << anc << " ancilla(s)";
        }
        out << '\n';
        return static_cast<int>(kOk);
    });
}

int noise_sim_command(const NoiseSimConfig &config, std::ostream &out,
                      std::ostream &err) {
    return guarded(err, [&] {
        if (config.circuit.has_value() == config.dataset.has_value()) {
            throw ConfigError("give exactly one of --circuit or --data");
        }
        if (config.shots == 0) {
            throw ConfigError("shots must be >= 1");
        }
        const NoiseProfile profile = resolve_noise_profile(config.noise);
        Circuit circuit;
        std::set<BasisState> marked = config.marked;
        if (config.circuit) {
            circuit = load_circuit_text(*config.circuit);
        } else {
            const Scheme scheme = scheme_from_int(config.scheme);
            const auto group = select_group(*config.dataset, config.pt_in_mev,
                                            scheme, config.group);
            const auto plans = plan_group(group, scheme);
            circuit = plans.front().circuit;
            if (marked.empty()) {
                marked = plans.front().marked;
            }
        }
        const std::size_t n = circuit.num_qubits();
        const BasisState dim = BasisState{1} << n;
        for (BasisState s : marked) {
            if (s >= dim) {
                throw ValidationError("marked state " + std::to_string(s) +
                                      " does not fit " + std::to_string(n) +
                                      " qubits");
            }
        }

        const auto result =
            noisy_run(circuit, marked, profile, config.shots, config.seed, 0);
        const auto ideal = probabilities(apply_circuit(StateVector(n), circuit));
        double ideal_marked = 0.0;
        for (BasisState s : marked) {
            ideal_marked += ideal[s];
        }
        const auto gates = gate_count_report(circuit, profile);

        out << "profile '" << profile.label << "' (p1 " << profile.p1 << ", p2 "
            << profile.p2 << ", p_mcz " << profile.p_mcz << ", readout "
            << profile.readout << ")\n"
            << "gates: " << gates.single << " single, " << gates.two << " two, "
            << gates.multi << " multi; compound survival "
            << fixed(gates.survival, 4) << '\n'
            << "marked fraction " << fixed(result.marked_fraction, 4)
            << " (noiseless " << fixed(ideal_marked, 4) << ", uniform "
            << fixed(1.0 / static_cast<double>(dim), 4) << ") over "
            << result.trajectories << " shots\n"
            << render_histogram_text(result.counts, n, marked);

        if (!config.output.empty()) {
            nlohmann::json counts = nlohmann::json::object();
            for (const auto &[s, c] : result.counts) {
                counts[basis_label(s, n)] = c;
            }
            nlohmann::json marked_json = nlohmann::json::array();
            for (BasisState s : marked) {
                marked_json.push_back(basis_label(s, n));
            }
            const nlohmann::json summary = {
                {"profile",
                 {{"label", profile.label},
                  {"p1", profile.p1},
                  {"p2", profile.p2},
                  {"p_mcz", profile.p_mcz},
                  {"readout", profile.readout}}},
                {"shots", result.trajectories},
                {"seed", config.seed},
                {"marked", std::move(marked_json)},
                {"marked_fraction", result.marked_fraction},
                {"noiseless_marked_probability", ideal_marked},
                {"gate_counts",
                 {{"single", gates.single},
                  {"two", gates.two},
                  {"multi", gates.multi},
                  {"survival", gates.survival}}},
                {"counts", std::move(counts)},
            };
            write_file_atomic(config.output, summary.dump() + "\n");
        }
        return static_cast<int>(kOk);
    });
}

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
    CLI::App app{"Grover search over lepton tables on a state-vector simulator",
                 "hepgrover"};
    app.require_subcommand(1);

    auto add_marked = [](CLI::App *cmd, std::vector<std::string> &tokens) {
        cmd->add_option("--marked", tokens,
                        "marked basis states: 5, 0b101 or '|101>'")
            ->delimiter(',');
    };

    RunConfig run;
    std::string run_out;
    auto *search = app.add_subcommand("search", "search a lepton table for "
                                                "four-lepton events");
    search->add_option("--data", run.dataset, "CSV with event_id,instance,lep_pt")
        ->required();
    search->add_flag("--mev", run.pt_in_mev, "lep_pt column is in MeV");
    search->add_option("--scheme", run.scheme, "encoding scheme (1 or 2)")
        ->capture_default_str();
    search->add_option("--shots", run.shots)->capture_default_str();
    search->add_option("--seed", run.seed)->capture_default_str();
    search->add_option("--threshold", run.threshold)->capture_default_str();
    search->add_option("--noise", run.noise,
                       "bundled profile name or profile file");
    search->add_option("--out", run_out, "JSON-lines report path");
    search->add_option("--emit-circuit", run.emit_circuit,
                       "directory for per-search .qasm files");
    search->add_option("--svg", run.svg, "directory for per-search SVG charts");

    DemoConfig demo;
    std::vector<std::string> demo_marked;
    std::string demo_out;
    std::string sweep;
    auto *dg = app.add_subcommand("demo-grover", "plain Grover search demo");
    dg->add_option("--qubits,-n", demo.qubits)->capture_default_str();
    add_marked(dg, demo_marked);
    dg->add_option("--iterations,-k", demo.iterations);
    dg->add_option("--sweep", sweep, "iteration range FIRST..LAST (CSV curve)");
    dg->add_option("--shots", demo.shots)->capture_default_str();
    dg->add_option("--seed", demo.seed)->capture_default_str();
    dg->add_option("--out", demo_out);
    dg->add_option("--svg", demo.svg);

    EmitConfig emit;
    std::vector<std::string> emit_marked;
    std::string emit_data;
    std::string emit_out;
    auto *ec = app.add_subcommand("emit-circuit", "write a circuit as OpenQASM 2.0");
    ec->add_option("--out", emit_out)->required();
    ec->add_option("--data", emit_data, "take the circuit from a dataset group");
    ec->add_flag("--mev", emit.pt_in_mev);
    ec->add_option("--scheme", emit.scheme)->capture_default_str();
    ec->add_option("--group", emit.group)->capture_default_str();
    ec->add_option("--pass", emit.pass)->capture_default_str();
    ec->add_option("--qubits,-n", emit.qubits)->capture_default_str();
    add_marked(ec, emit_marked);
    ec->add_option("--iterations,-k", emit.iterations);

    NoiseSimConfig ns;
    std::vector<std::string> ns_marked;
    std::string ns_out;
    auto *nsc = app.add_subcommand("noise-sim", "Monte-Carlo gate-error run");
    nsc->add_option("--circuit", ns.circuit, "OpenQASM 2.0 circuit file");
    nsc->add_option("--data", ns.dataset, "take the circuit from a dataset group");
    nsc->add_flag("--mev", ns.pt_in_mev);
    nsc->add_option("--scheme", ns.scheme)->capture_default_str();
    nsc->add_option("--group", ns.group)->capture_default_str();
    add_marked(nsc, ns_marked);
    nsc->add_option("--noise", ns.noise)->capture_default_str();
    nsc->add_option("--shots", ns.shots)->capture_default_str();
    nsc->add_option("--seed", ns.seed)->capture_default_str();
    nsc->add_option("--out", ns_out);

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? static_cast<int>(kOk) : static_cast<int>(kConfigError);
    }

    auto to_states = [&](const std::vector<std::string> &tokens,
                         std::set<BasisState> &into) {
        for (const auto &t : tokens) {
            into.insert(parse_state_token(t));
        }
    };

    if (search->parsed()) {
        run.output = run_out;
        return run_search_command(run, out, err);
    }
    if (dg->parsed()) {
        return guarded(err, [&] {
            to_states(demo_marked, demo.marked);
            demo.output = demo_out;
            if (!sweep.empty()) {
                const auto dots = sweep.find("..");
                if (dots == std::string::npos) {
                    throw ConfigError("sweep must look like FIRST..LAST");
                }
                try {
                    demo.sweep = {std::stoull(sweep.substr(0, dots)),
                                  std::stoull(sweep.substr(dots + 2))};
                } catch (const std::logic_error &) {
                    throw ConfigError("sweep must look like FIRST..LAST");
                }
            }
            return demo_grover_command(demo, out, err);
        });
    }
    if (ec->parsed()) {
        return guarded(err, [&] {
            to_states(emit_marked, emit.marked);
            emit.output = emit_out;
            if (!emit_data.empty()) {
                emit.dataset = emit_data;
            }
            return emit_circuit_command(emit, out, err);
        });
    }
    return guarded(err, [&] {
        to_states(ns_marked, ns.marked);
        ns.output = ns_out;
        return noise_sim_command(ns, out, err);
    });
}

} // namespace hepgrover::cli
