#include "amort/cost_core.hpp"

#include <array>
#include <algorithm>

#include <json.hpp>

namespace amort {

bool known_op_label(const std::string& op) {
    static const std::array<const char*, 6> labels = {
        "push", "multipop", "insert", "cons", "snoc", "append"};
    return std::find(labels.begin(), labels.end(), op) != labels.end();
}

void validate_trace(const Trace& trace) {
    Units prev_phi = 0;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const StepRecord& s = trace.steps[i];
        if (!known_op_label(s.op))
            throw MalformedTrace("unknown op label at step " + std::to_string(i) + ": " + s.op);
        if (s.actual < 1)
            throw MalformedTrace("actual cost < 1 at step " + std::to_string(i));
        if (s.phi_before < 0 || s.phi_after < 0)
            throw MalformedTrace("negative potential at step " + std::to_string(i));
        if (s.phi_before != prev_phi)
            throw MalformedTrace("phi chain broken at step " + std::to_string(i));
        prev_phi = s.phi_after;
    }
}

TelescopeResult telescope_check(const Trace& trace) {
    validate_trace(trace);
    Units actual_sum = 0;
    Units amortized_sum = 0;
    Units phi_final = 0;
    for (const StepRecord& s : trace.steps) {
        actual_sum += s.actual;
        amortized_sum += s.amortized();
        phi_final = s.phi_after;
    }
    return {actual_sum == amortized_sum - phi_final, phi_final};
}

std::vector<BoundViolation> bound_check(const Trace& trace) {
    std::vector<BoundViolation> out;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const StepRecord& s = trace.steps[i];
        if (s.amortized() > s.bound) out.push_back({i, s});
    }
    return out;
}

bool BankLedger::went_negative() const {
    return std::any_of(balances.begin(), balances.end(),
                       [](Units b) { return b < 0; });
}

BankLedger banker_simulate(const Trace& trace, const DepositRule& charges) {
    BankLedger ledger;
    Units balance = 0;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const StepRecord& s = trace.steps[i];
        auto it = charges.find(s.op);
        if (it == charges.end())
            throw MalformedTrace("no deposit rule for op at step " + std::to_string(i) + ": " + s.op);
        balance += it->second - s.actual;
        ledger.balances.push_back(balance);
    }
    return ledger;
}

std::string trace_to_json(const Trace& trace) {
    nlohmann::json arr = nlohmann::json::array();
    for (const StepRecord& s : trace.steps) {
        arr.push_back({{"op", s.op},
                       {"actual", s.actual},
                       {"phi_before", s.phi_before},
                       {"phi_after", s.phi_after},
                       {"bound", s.bound}});
    }
    return arr.dump(2);
}

Trace trace_from_json(const std::string& text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedTrace(std::string("bad trace JSON: ") + e.what());
    }
    if (!arr.is_array()) throw MalformedTrace("trace JSON must be an array");
    Trace trace;
    for (const auto& obj : arr) {
        StepRecord s;
        try {
            s.op = obj.at("op").get<std::string>();
            s.actual = obj.at("actual").get<Units>();
            s.phi_before = obj.at("phi_before").get<Units>();
            s.phi_after = obj.at("phi_after").get<Units>();
            s.bound = obj.at("bound").get<Units>();
        } catch (const nlohmann::json::exception& e) {
            throw MalformedTrace(std::string("bad step object: ") + e.what());
        }
        trace.steps.push_back(std::move(s));
    }
    validate_trace(trace);
    return trace;
}

}  // namespace amort
