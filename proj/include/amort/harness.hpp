#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "amort/binomial_heap.hpp"
#include "amort/cost_core.hpp"
#include "amort/finger_tree.hpp"
#include "amort/stack.hpp"

namespace amort {

enum class StructureKind { Stack, Heap, FingerTree };

std::string to_string(StructureKind kind);
std::optional<StructureKind> parse_structure(const std::string& name);

struct GenConfig {
    StructureKind structure = StructureKind::Stack;
    std::int64_t max_size = 64;
    std::int64_t num_traces = 1000;
    std::int64_t trace_len = 50;
    std::uint64_t seed = 42;  // std::mt19937_64; fully determines random output
};

struct Violation {
    std::string input;   // minimal reproducer
    Units bound = 0;
    Units observed = 0;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::int64_t cases_run = 0;
    std::vector<Violation> violations;
    std::int64_t oracle_mismatches = 0;
    double elapsed_ms = 0.0;

    bool passed() const { return violations.empty() && oracle_mismatches == 0; }
};

std::string report_to_json(const VerifyReport& report);
std::string reports_to_json(const std::vector<VerifyReport>& reports);
// Same JSON with the elapsed_ms field removed, for determinism checks.
std::string reports_to_json_stable(const std::vector<VerifyReport>& reports);
std::string reports_to_text(const std::vector<VerifyReport>& reports);

// ---- generators ----------------------------------------------------------

// All stacks of height 0..max_height with distinct labels, bottom to top.
std::vector<Stack<int>> enumerate_stacks(int max_height);

// Insert orders of length n: ascending, descending, seeded shuffle, and all
// duplicates, to exercise the tie branch of the tree merge.
std::vector<std::vector<int>> heap_insert_orders(std::int64_t n, std::uint64_t seed);

// All finger-tree shapes of spine depth <= max_depth, two tuple-arity
// variants each (all pairs / alternating), leaves labelled 0..n-1 in order.
std::vector<SeqPtr> enumerate_seqs(int max_depth);

// ---- operation scripts ----------------------------------------------------

struct MalformedScript : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScriptOp {
    std::string op;
    std::int64_t arg = 0;
    bool has_arg = false;
};
using Script = std::vector<ScriptOp>;

// Newline-delimited "op" or "op arg" lines; '#' starts a comment.
Script parse_script(const std::string& text);

Script random_script(StructureKind kind, std::int64_t len, std::mt19937_64& rng);

// Executes a script from the empty structure and records one StepRecord per
// op, with the claimed per-op bound filled in. For finger trees the state is
// a main sequence plus a staged sequence ("scons"/"ssnoc" build the staged
// one, "append" glues it onto the main one); the recorded potential is the
// sum over both, so the phi chain stays intact.
Trace run_script(StructureKind kind, const Script& script);

// ---- suites ---------------------------------------------------------------

VerifyReport run_bound_suite(StructureKind kind, const GenConfig& cfg);
VerifyReport run_oracle_suite(StructureKind kind, const GenConfig& cfg);
VerifyReport run_timing_suite(StructureKind kind, const GenConfig& cfg);
// Length/contract checks for the finger-tree helpers (to_tuples_prime,
// tuples_to_list, log2 monotonicity, div cancellation, list append length).
VerifyReport run_helper_suite(const GenConfig& cfg);

std::vector<VerifyReport> run_all_suites(const GenConfig& cfg,
                                         std::optional<StructureKind> filter);

}  // namespace amort
