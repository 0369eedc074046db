#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "amort/harness.hpp"

namespace {

struct Options {
    std::string structure = "all";
    std::int64_t max_size = 64;
    std::int64_t trials = 1000;
    std::int64_t trace_len = 50;
    std::uint64_t seed = 42;
    std::string format = "text";
    std::string output;       // empty: stdout
    std::string script_path;  // trace command only
};

void add_common_flags(CLI::App& cmd, Options& opt, bool with_structure_all) {
    std::vector<std::string> names{"stack", "heap", "fingertree"};
    if (with_structure_all) names.push_back("all");
    cmd.add_option("--structure", opt.structure, "structure to check")
        ->check(CLI::IsMember(names));
    cmd.add_option("--max-size", opt.max_size, "max structure size for generators");
    cmd.add_option("--trials", opt.trials, "number of random traces");
    cmd.add_option("--trace-len", opt.trace_len, "operations per random trace");
    cmd.add_option("--seed", opt.seed, "PRNG seed (std::mt19937_64)");
    cmd.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd.add_option("--output", opt.output, "write output to this file instead of stdout");
}

amort::GenConfig to_config(const Options& opt) {
    amort::GenConfig cfg;
    cfg.max_size = opt.max_size;
    cfg.num_traces = opt.trials;
    cfg.trace_len = opt.trace_len;
    cfg.seed = opt.seed;
    return cfg;
}

int emit(const Options& opt, const std::string& payload) {
    if (opt.output.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream out(opt.output);
    if (!out) {
        std::cerr << "cannot open output file: " << opt.output << "\n";
        return 2;
    }
    out << payload;
    return 0;
}

int cmd_verify(const Options& opt) {
    std::optional<amort::StructureKind> filter;
    if (opt.structure != "all") filter = amort::parse_structure(opt.structure);
    const std::vector<amort::VerifyReport> reports =
        amort::run_all_suites(to_config(opt), filter);

    const std::string payload = opt.format == "json" ? amort::reports_to_json(reports)
                                                     : amort::reports_to_text(reports);
    const int io_status = emit(opt, payload);
    if (io_status != 0) return io_status;

    const bool all_passed = std::all_of(reports.begin(), reports.end(),
                                        [](const auto& r) { return r.passed(); });
    return all_passed ? 0 : 1;
}

int cmd_trace(const Options& opt) {
    const amort::StructureKind kind =
        amort::parse_structure(opt.structure).value_or(amort::StructureKind::Stack);

    amort::Script script;
    if (!opt.script_path.empty()) {
        std::ifstream in(opt.script_path);
        if (!in) {
            std::cerr << "cannot open script file: " << opt.script_path << "\n";
            return 2;
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        script = amort::parse_script(buffer.str());
    } else {
        std::mt19937_64 rng(opt.seed);
        script = amort::random_script(kind, opt.trace_len, rng);
    }

    const amort::Trace trace = amort::run_script(kind, script);

    // Account charges: the documented stack scheme (push deposits one extra
    // unit, multipop pays only its base cost); for the other structures the
    // per-step claimed bound is deposited.
    std::vector<amort::Units> balances;
    amort::Units balance = 0;
    for (const amort::StepRecord& s : trace.steps) {
        amort::Units charge = s.bound;
        if (kind == amort::StructureKind::Stack) charge = s.op == "push" ? 2 : 1;
        balance += charge - s.actual;
        balances.push_back(balance);
    }

    std::string payload;
    if (opt.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            const amort::StepRecord& s = trace.steps[i];
            arr.push_back({{"op", s.op},
                           {"actual", s.actual},
                           {"phi_before", s.phi_before},
                           {"phi_after", s.phi_after},
                           {"amortized", s.amortized()},
                           {"bound", s.bound},
                           {"balance", balances[i]}});
        }
        payload = arr.dump(2) + "\n";
    } else {
        std::ostringstream out;
        out << "step  op        actual  phi_before  phi_after  amortized  bound  balance\n";
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            const amort::StepRecord& s = trace.steps[i];
            char line[160];
            std::snprintf(line, sizeof(line), "%-5zu %-9s %6lld %11lld %10lld %10lld %6lld %8lld\n",
                          i, s.op.c_str(), static_cast<long long>(s.actual),
                          static_cast<long long>(s.phi_before),
                          static_cast<long long>(s.phi_after),
                          static_cast<long long>(s.amortized()),
                          static_cast<long long>(s.bound),
                          static_cast<long long>(balances[i]));
            out << line;
        }
        const amort::TelescopeResult tr = amort::telescope_check(trace);
        out << "telescoping identity: " << (tr.pass ? "holds" : "VIOLATED")
            << " (residual phi " << tr.residual << ")\n";
        payload = out.str();
    }
    return emit(opt, payload);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"amortized-complexity verification harness"};
    app.require_subcommand(1);

    Options verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_common_flags(*verify, verify_opt, true);

    Options trace_opt;
    CLI::App* trace = app.add_subcommand("trace", "emit a per-step cost ledger");
    add_common_flags(*trace, trace_opt, false);
    trace->add_option("--script", trace_opt.script_path,
                      "operation script file (one 'op arg' per line)");

    Options all_opt;
    CLI::App* all = app.add_subcommand("all", "run every suite for every structure");
    add_common_flags(*all, all_opt, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(verify_opt);
        if (trace->parsed()) return cmd_trace(trace_opt);
        all_opt.structure = "all";
        return cmd_verify(all_opt);
    } catch (const amort::MalformedScript& e) {
        std::cerr << "malformed script: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
