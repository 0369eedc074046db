#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace amort {

// Abstract time units. Costs are >= 1, potentials >= 0, but the
// amortized value of a step can be negative, so everything is signed.
using Units = std::int64_t;

struct MalformedTrace : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Units amortized_step(Units actual, Units phi_before, Units phi_after) {
    return actual + phi_after - phi_before;
}

struct StepRecord {
    std::string op;
    Units actual = 1;
    Units phi_before = 0;
    Units phi_after = 0;
    Units bound = 0;

    Units amortized() const { return amortized_step(actual, phi_before, phi_after); }

    bool operator==(const StepRecord&) const = default;
};

// A trace always starts from the empty structure, so the initial
// potential is 0 by construction.
struct Trace {
    std::vector<StepRecord> steps;

    bool operator==(const Trace&) const = default;
};

bool known_op_label(const std::string& op);

// Throws MalformedTrace on: unknown op label, actual < 1, negative
// potential, broken phi chaining, or nonzero initial potential.
void validate_trace(const Trace& trace);

struct TelescopeResult {
    bool pass = false;
    Units residual = 0;  // phi after the last step
};

// Checks the exact identity: sum(actual) == sum(amortized) - phi_final.
TelescopeResult telescope_check(const Trace& trace);

struct BoundViolation {
    std::size_t index = 0;
    StepRecord step;
};

// Every step whose amortized value exceeds its claimed bound.
std::vector<BoundViolation> bound_check(const Trace& trace);

struct BankLedger {
    std::vector<Units> balances;  // account after each step

    bool went_negative() const;
};

// Fixed per-op-label charge, e.g. {"push", 2}.
using DepositRule = std::map<std::string, Units>;

// balance_i = balance_{i-1} + charge_i - actual_i. A negative balance is
// reported through the ledger, not thrown: it means the deposit scheme
// fails, not that the harness is broken.
BankLedger banker_simulate(const Trace& trace, const DepositRule& charges);

// One JSON object per step: {op, actual, phi_before, phi_after, bound}.
std::string trace_to_json(const Trace& trace);
Trace trace_from_json(const std::string& text);

}  // namespace amort
