// Command-line front end. Everything goes through the shared library's C
// API; this translation unit never touches the C++ core directly.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qwedge.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitSelftest = 4;

// Accepts "2x2x2" or "2,2,2".
std::vector<size_t> parse_dims(const std::string& spec, bool& ok) {
    std::vector<size_t> dims;
    std::string current;
    ok = false;
    for (const char ch : spec + "x") {
        if (ch == 'x' || ch == ',') {
            if (current.empty()) {
                return {};
            }
            try {
                const unsigned long long value = std::stoull(current);
                if (value == 0) {
                    return {};
                }
                dims.push_back(static_cast<size_t>(value));
            } catch (const std::exception&) {
                return {};
            }
            current.clear();
        } else if (ch >= '0' && ch <= '9') {
            current += ch;
        } else {
            return {};
        }
    }
    ok = !dims.empty();
    return dims;
}

struct MeasureFlags {
    std::string norm = "paper";
    std::string format = "table";
    double norm_tolerance = 1e-9;
};

void add_measure_flags(CLI::App* cmd, MeasureFlags& flags) {
    cmd->add_option("--norm", flags.norm, "normalization mode")
        ->check(CLI::IsMember({"paper", "unit_max"}));
    cmd->add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
    cmd->add_option("--norm-tolerance", flags.norm_tolerance,
                    "norm deviation beyond which inputs are renormalized")
        ->check(CLI::PositiveNumber);
}

qw_norm_mode norm_mode(const MeasureFlags& flags) {
    return flags.norm == "unit_max" ? QW_NORM_UNIT_MAX : QW_NORM_PAPER;
}

// Prints the report for an already-created state and releases both.
int emit_report(qw_state* state, const MeasureFlags& flags, int failure_exit) {
    qw_report* report = nullptr;
    if (qw_measure(state, norm_mode(flags), flags.norm_tolerance, &report) != QW_OK) {
        std::cerr << "error: " << qw_last_error() << "\n";
        qw_state_free(state);
        return failure_exit;
    }
    char* text = nullptr;
    const qw_status status = flags.format == "json" ? qw_report_to_json(report, &text)
                                                    : qw_report_to_table(report, &text);
    int exit_code = 0;
    if (status == QW_OK) {
        std::cout << text;
        if (flags.format == "json") {
            std::cout << "\n";
        }
    } else {
        std::cerr << "error: " << qw_last_error() << "\n";
        exit_code = failure_exit;
    }
    qw_string_free(text);
    qw_report_free(report);
    qw_state_free(state);
    return exit_code;
}

int run_measure(const std::string& path, const MeasureFlags& flags) {
    qw_state* state = nullptr;
    if (qw_state_from_file(path.c_str(), &state) != QW_OK) {
        std::cerr << "error: " << qw_last_error() << "\n";
        return kExitInput;
    }
    return emit_report(state, flags, kExitInput);
}

int run_named(const std::string& name, const MeasureFlags& flags) {
    qw_state* state = nullptr;
    if (qw_state_named(name.c_str(), &state) != QW_OK) {
        std::cerr << "error: " << qw_last_error() << "\n";
        return kExitUsage;
    }
    return emit_report(state, flags, kExitUsage);
}

int run_dump(const std::string& named, const std::string& random_dims, std::uint64_t seed,
             const std::string& output) {
    qw_state* state = nullptr;
    if (!named.empty()) {
        if (qw_state_named(named.c_str(), &state) != QW_OK) {
            std::cerr << "error: " << qw_last_error() << "\n";
            return kExitUsage;
        }
    } else {
        bool ok = false;
        const std::vector<size_t> dims = parse_dims(random_dims, ok);
        if (!ok) {
            std::cerr << "error: invalid dims '" << random_dims << "'\n";
            return kExitUsage;
        }
        if (qw_state_random(dims.data(), dims.size(), seed, &state) != QW_OK) {
            std::cerr << "error: " << qw_last_error() << "\n";
            return kExitUsage;
        }
    }
    char* text = nullptr;
    if (qw_state_to_json(state, &text) != QW_OK) {
        std::cerr << "error: " << qw_last_error() << "\n";
        qw_state_free(state);
        return kExitUsage;
    }
    int exit_code = 0;
    if (output.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(output, std::ios::binary);
        out << text << "\n";
        if (!out) {
            std::cerr << "error: cannot write " << output << "\n";
            exit_code = kExitInput;
        }
    }
    qw_string_free(text);
    qw_state_free(state);
    return exit_code;
}

int run_selftest(std::uint64_t seed, int trials, double tolerance, const std::string& format) {
    int all_passed = 0;
    char* text = nullptr;
    const qw_status status =
        qw_selftest(seed, trials, tolerance, format == "json" ? 1 : 0, &all_passed, &text);
    if (status != QW_OK) {
        std::cerr << "error: " << qw_last_error() << "\n";
        return status == QW_ERR_ARGUMENT ? kExitUsage : kExitInput;
    }
    std::cout << text;
    if (format == "json") {
        std::cout << "\n";
    }
    qw_string_free(text);
    return all_passed ? 0 : kExitSelftest;
}

int run_monotone(const std::string& dims_spec, std::uint64_t seed, int trials,
                 bool unitary_only, const MeasureFlags& flags) {
    bool ok = false;
    const std::vector<size_t> dims = parse_dims(dims_spec, ok);
    if (!ok) {
        std::cerr << "error: invalid dims '" << dims_spec << "'\n";
        return kExitUsage;
    }
    char* text = nullptr;
    const qw_status status = qw_monotone_experiment(
        dims.data(), dims.size(), seed, trials, unitary_only ? 1 : 0, norm_mode(flags),
        flags.format == "json" ? 1 : 0, &text);
    if (status != QW_OK) {
        std::cerr << "error: " << qw_last_error() << "\n";
        return status == QW_ERR_ARGUMENT ? kExitUsage : kExitInput;
    }
    std::cout << text;
    if (flags.format == "json") {
        std::cout << "\n";
    }
    qw_string_free(text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wedge-product entanglement measures for pure multipartite states"};
    app.require_subcommand(1);

    // measure <file>
    auto* measure = app.add_subcommand("measure", "measure a state loaded from a JSON file");
    std::string measure_path;
    MeasureFlags measure_flags;
    measure->add_option("file", measure_path, "state JSON file")->required();
    add_measure_flags(measure, measure_flags);

    // named <name>
    auto* named = app.add_subcommand("named", "measure a named state (bell, ghz:M, w:M, ...)");
    std::string named_name;
    MeasureFlags named_flags;
    named->add_option("name", named_name, "state name")->required();
    add_measure_flags(named, named_flags);

    // dump
    auto* dump = app.add_subcommand("dump", "write a state as JSON");
    std::string dump_named;
    std::string dump_random;
    std::uint64_t dump_seed = 42;
    std::string dump_output;
    auto* dump_named_opt = dump->add_option("--named", dump_named, "named state to dump");
    dump->add_option("--random", dump_random, "dims for a random state, e.g. 2x2x2")
        ->excludes(dump_named_opt);
    dump->add_option("--seed", dump_seed, "random seed");
    dump->add_option("-o,--output", dump_output, "output file (default stdout)");

    // selftest
    auto* selftest = app.add_subcommand("selftest", "run the randomized invariant suites");
    std::uint64_t selftest_seed = 42;
    int selftest_trials = 200;
    double selftest_tolerance = 1e-10;
    std::string selftest_format = "table";
    selftest->add_option("--seed", selftest_seed, "random seed");
    selftest->add_option("--trials", selftest_trials, "checks per suite");
    selftest->add_option("--tolerance", selftest_tolerance, "pass threshold");
    selftest->add_option("--format", selftest_format, "output format")
        ->check(CLI::IsMember({"table", "json"}));

    // monotone
    auto* monotone =
        app.add_subcommand("monotone", "random local-filtering experiment (reports only)");
    std::string monotone_dims = "2x2x2";
    std::uint64_t monotone_seed = 42;
    int monotone_trials = 100;
    bool monotone_unitary_only = false;
    MeasureFlags monotone_flags;
    monotone->add_option("--dims", monotone_dims, "subsystem dimensions, e.g. 2x2x2");
    monotone->add_option("--seed", monotone_seed, "random seed");
    monotone->add_option("--trials", monotone_trials, "number of trials");
    monotone->add_flag("--unitary-only", monotone_unitary_only,
                       "sample unitaries instead of filters");
    add_measure_flags(monotone, monotone_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (measure->parsed()) {
        return run_measure(measure_path, measure_flags);
    }
    if (named->parsed()) {
        return run_named(named_name, named_flags);
    }
    if (dump->parsed()) {
        if (dump_named.empty() && dump_random.empty()) {
            std::cerr << "error: dump needs --named or --random\n";
            return kExitUsage;
        }
        return run_dump(dump_named, dump_random, dump_seed, dump_output);
    }
    if (selftest->parsed()) {
        return run_selftest(selftest_seed, selftest_trials, selftest_tolerance,
                            selftest_format);
    }
    if (monotone->parsed()) {
        return run_monotone(monotone_dims, monotone_seed, monotone_trials,
                            monotone_unitary_only, monotone_flags);
    }
    std::cerr << app.help();
    return kExitUsage;
}
