// Copyright 2026 The cliffc Authors
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

#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "cliffc/cnot_advantage.h"
#include "cliffc/reduce.h"
#include "cliffc/serialize.h"

namespace cliffc {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string kind;
    size_t n = 0;
    size_t count = 1;
    std::optional<uint64_t> seed;
    uint64_t stream = 0;
    std::string format = "json";
    size_t jobs = 1;
    std::string input;
    std::string output;
    bool verify = false;
    std::string mode = "measurement";
    size_t max_weight = 2;
};

std::string read_all(std::istream &in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_input(const Config &cfg, std::istream &in) {
    if (cfg.input.empty() || cfg.input == "-") {
        return read_all(in);
    }
    std::ifstream f(cfg.input);
    if (!f) {
        throw UsageError("cannot open input file " + cfg.input);
    }
    return read_all(f);
}

// Tableau JSON when the text starts with '{', circuit text otherwise.
Tableau load_operator(const std::string &text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded()) {
            throw Error(ErrorKind::Parse, "input is not valid JSON");
        }
        Tableau t = tableau_from_json(j);
        if (t.num_qubits() == 0) {
            throw Error(ErrorKind::Parse, "tableau has no qubits");
        }
        if (!is_symplectic(t)) {
            throw Error(ErrorKind::InvalidTableau, "input tableau violates the commutation relations");
        }
        return t;
    }
    Circuit c = parse_circuit(text);
    if (c.num_qubits == 0) {
        throw Error(ErrorKind::Parse, "circuit has no qubits");
    }
    return from_circuit(c);
}

uint64_t resolve_seed(const Config &cfg) {
    if (cfg.seed.has_value()) {
        return *cfg.seed;
    }
    const char *env = std::getenv("CLIFFC_SEED");
    if (env == nullptr || *env == '\0') {
        return 0;
    }
    char *end = nullptr;
    errno = 0;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || *end != '\0' || *env == '-') {
        throw UsageError("CLIFFC_SEED is not an unsigned 64-bit integer");
    }
    return v;
}

std::string hs_record(const HSLayer &w, const std::string &format) {
    if (format == "tableau") {
        return tableau_to_json(hs_tableau(w)).dump() + "\n";
    }
    if (format == "circuit") {
        return format_circuit(hs_circuit(w)) + "\n";
    }
    return json{{"h", w.h.str()}, {"perm", w.perm.images()}}.dump() + "\n";
}

std::string sample_record(const Config &cfg, RandomSource &rng) {
    if (cfg.kind == "clifford") {
        CanonicalForm cf = random_clifford(cfg.n, rng);
        if (cfg.format == "tableau") {
            return tableau_to_json(canonical_to_tableau(cf)).dump() + "\n";
        }
        if (cfg.format == "circuit") {
            return format_circuit(canonical_to_circuit(cf)) + "\n";
        }
        return canonical_to_json(cf).dump() + "\n";
    }
    if (cfg.kind == "gl") {
        BitMatrix m = random_gl(cfg.n, rng);
        if (cfg.format == "tableau") {
            return tableau_to_json(linear_tableau(m)).dump() + "\n";
        }
        if (cfg.format == "circuit") {
            return format_circuit(linear_circuit(m)) + "\n";
        }
        return bit_matrix_to_json(m).dump() + "\n";
    }
    if (cfg.kind == "qmallows") {
        QMallowsSample s = sample_qmallows(cfg.n, rng);
        return hs_record(HSLayer{s.h, s.perm}, cfg.format);
    }
    Permutation perm = sample_mallows(cfg.n, rng);
    if (cfg.format == "json") {
        return json{{"perm", perm.images()}}.dump() + "\n";
    }
    return hs_record(HSLayer{BitVector(cfg.n), perm}, cfg.format);
}

// Sample i always draws from RandomSource(seed, stream, i), so output is independent of --jobs.
int cmd_sample(const Config &cfg, std::ostream &out) {
    uint64_t seed = resolve_seed(cfg);
    size_t jobs = std::max<size_t>(cfg.jobs, 1);
    size_t batch = jobs == 1 ? 1 : 64 * jobs;
    std::vector<std::string> records;
    for (size_t start = 0; start < cfg.count; start += batch) {
        size_t m = std::min(batch, cfg.count - start);
        records.assign(m, std::string());
        auto work = [&](size_t worker) {
            for (size_t i = worker; i < m; i += jobs) {
                RandomSource rng(seed, cfg.stream, start + i);
                records[i] = sample_record(cfg, rng);
            }
        };
        if (jobs == 1) {
            work(0);
        } else {
            std::vector<std::thread> threads;
            for (size_t w = 0; w < jobs; w++) {
                threads.emplace_back(work, w);
            }
            for (auto &t : threads) {
                t.join();
            }
        }
        for (const auto &r : records) {
            out << r;
        }
        out.flush();
    }
    return kExitOk;
}

int cmd_canon(const Config &cfg, std::istream &in, std::ostream &out, std::ostream &err) {
    Tableau u = load_operator(read_input(cfg, in));
    CanonicalForm cf = canonical_form(u);
    Circuit c = canonical_to_circuit(cf);
    bool ok = true;
    if (cfg.verify) {
        ok = canonical_to_tableau(cf) == u && from_circuit(c) == u && canonical_invariants_hold(cf);
    }
    if (cfg.format == "circuit") {
        out << format_circuit(c);
    } else {
        json j{{"canonical", canonical_to_json(cf)}, {"circuit", format_circuit(c)}};
        if (cfg.verify) {
            j["verified"] = ok;
        }
        out << j.dump() << "\n";
    }
    if (!ok) {
        err << "error: canonical form does not recompose to the input\n";
        return kExitFailure;
    }
    return kExitOk;
}

int cmd_reduce(const Config &cfg, std::istream &in, std::ostream &out, std::ostream &err) {
    Tableau u = load_operator(read_input(cfg, in));
    size_t n = u.num_qubits();
    json report{{"mode", cfg.mode}, {"n", n}};
    bool ok = true;
    if (cfg.mode == "measurement") {
        MeasurementReduction r = measurement_reduction(u);
        ok = try_tableau_to_hfree(compose(from_circuit(r.d), u)).has_value() && r.d.two_qubit_count() <= r.bound;
        report["k"] = r.k;
        report["bound"] = r.bound;
        report["two_qubit_gates"] = r.d.two_qubit_count();
        report["relabel"] = r.relabel;
        report["hadamard_free"] = ok;
        out << format_circuit(r.d);
    } else {
        StagedCircuit s = nine_stage_decomposition(u);
        Circuit c = s.flatten();
        ok = from_circuit(c) == u;
        report["labels"] = s.label_string();
        report["two_qubit_gates"] = c.two_qubit_count();
        report["recomposes"] = ok;
        out << format_circuit(c);
    }
    out << "# report: " << report.dump() << "\n";
    if (!ok) {
        err << "error: reduction check failed\n";
        return kExitFailure;
    }
    return kExitOk;
}

int cmd_rewrite(const Config &cfg, std::istream &in, std::ostream &out, std::ostream &err) {
    Circuit c = parse_circuit(read_input(cfg, in));
    RewriteResult r = example1_rewrite(c, RewriteOptions{cfg.max_weight});
    bool ok = from_circuit(r.circuit) == from_circuit(c);
    out << format_circuit(r.circuit);
    out << "# report: " << rewrite_report_to_json(r).dump() << "\n";
    if (!ok) {
        err << "error: rewritten circuit differs from the input\n";
        return kExitFailure;
    }
    return kExitOk;
}

int cmd_pmf(const Config &cfg, std::ostream &out) {
    json j = cfg.kind == "qmallows" ? qmallows_pmf_to_json(cfg.n) : mallows_pmf_to_json(cfg.n);
    out << j.dump() << "\n";
    return kExitOk;
}

int dispatch(CLI::App &app, const Config &cfg, std::istream &in, std::ostream &out, std::ostream &err) {
    if (app.got_subcommand("sample")) {
        return cmd_sample(cfg, out);
    }
    if (app.got_subcommand("canon")) {
        return cmd_canon(cfg, in, out, err);
    }
    if (app.got_subcommand("reduce")) {
        return cmd_reduce(cfg, in, out, err);
    }
    if (app.got_subcommand("rewrite")) {
        return cmd_rewrite(cfg, in, out, err);
    }
    return cmd_pmf(cfg, out);
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
        case ErrorKind::NotCnotCircuit:
        case ErrorKind::OutOfRange:
        case ErrorKind::TooLarge:
            return kExitUsage;
        default:
            return kExitFailure;
    }
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    Config cfg;
    CLI::App app{"Canonical forms, sampling and reductions for Clifford operators", "cliffc"};
    app.require_subcommand(1);

    auto add_io = [&](CLI::App *sub) {
        sub->add_option("-i,--input", cfg.input, "Input file (default stdin)");
        sub->add_option("-o,--output", cfg.output, "Output file (default stdout)");
    };

    CLI::App *sample = app.add_subcommand("sample", "Draw random samples");
    sample->add_option("kind", cfg.kind, "clifford, gl, mallows or qmallows")
        ->required()
        ->check(CLI::IsMember({"clifford", "gl", "mallows", "qmallows"}));
    sample->add_option("-n,--qubits", cfg.n, "Number of qubits")->required()->check(CLI::PositiveNumber);
    sample->add_option("--count", cfg.count, "Number of samples");
    sample->add_option("--seed", cfg.seed, "Seed (default: CLIFFC_SEED, then 0)");
    sample->add_option("--stream", cfg.stream, "Stream id");
    sample->add_option("--format", cfg.format, "json, circuit or tableau")
        ->check(CLI::IsMember({"json", "circuit", "tableau"}));
    sample->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sample->add_option("-o,--output", cfg.output, "Output file (default stdout)");

    CLI::App *canon = app.add_subcommand("canon", "Canonical form of a circuit or tableau");
    add_io(canon);
    canon->add_flag("--verify", cfg.verify, "Recompose and compare with the input");
    canon->add_option("--format", cfg.format, "json or circuit")->check(CLI::IsMember({"json", "circuit"}));

    CLI::App *reduce = app.add_subcommand("reduce", "Hadamard-free reduction or nine-stage decomposition");
    add_io(reduce);
    reduce->add_option("--mode", cfg.mode, "measurement or nine-stage")
        ->check(CLI::IsMember({"measurement", "nine-stage"}));

    CLI::App *rewrite = app.add_subcommand("rewrite", "Reduce two-qubit gates of a CNOT circuit");
    add_io(rewrite);
    rewrite->add_option("--max-weight", cfg.max_weight, "Largest Hadamard mask weight per window")
        ->check(CLI::PositiveNumber);

    CLI::App *pmf = app.add_subcommand("pmf", "Exact probability tables");
    pmf->add_option("kind", cfg.kind, "qmallows or mallows")->required()->check(CLI::IsMember({"qmallows", "mallows"}));
    pmf->add_option("-n,--qubits", cfg.n, "Number of qubits")->required()->check(CLI::PositiveNumber);
    pmf->add_option("-o,--output", cfg.output, "Output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    std::ofstream file;
    std::ostream *sink = &out;
    if (!cfg.output.empty() && cfg.output != "-") {
        file.open(cfg.output);
        if (!file) {
            err << "error: cannot open output file " << cfg.output << "\n";
            return kExitUsage;
        }
        sink = &file;
    }
    try {
        return dispatch(app, cfg, in, *sink, err);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error &e) {
        err << "error: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const json::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace cliffc
