#include "amort/harness.hpp"

#include <algorithm>
#include <sstream>

namespace amort {

Script parse_script(const std::string& text) {
    Script script;
    std::istringstream lines(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::string op;
        if (!(tokens >> op)) continue;  // blank line
        ScriptOp entry;
        entry.op = op;
        std::string arg;
        if (tokens >> arg) {
            try {
                std::size_t used = 0;
                entry.arg = std::stoll(arg, &used);
                if (used != arg.size()) throw std::invalid_argument(arg);
            } catch (const std::exception&) {
                throw MalformedScript("line " + std::to_string(lineno) +
                                      ": bad argument '" + arg + "'");
            }
            entry.has_arg = true;
        }
        std::string extra;
        if (tokens >> extra)
            throw MalformedScript("line " + std::to_string(lineno) + ": trailing token '" +
                                  extra + "'");
        script.push_back(std::move(entry));
    }
    return script;
}

namespace {

[[noreturn]] void bad_op(std::size_t index, const ScriptOp& op, const char* structure) {
    throw MalformedScript("step " + std::to_string(index) + ": op '" + op.op +
                          "' not valid for " + structure);
}

void need_arg(std::size_t index, const ScriptOp& op) {
    if (!op.has_arg)
        throw MalformedScript("step " + std::to_string(index) + ": op '" + op.op +
                              "' needs an argument");
}

Trace run_stack(const Script& script) {
    Trace trace;
    Stack<int> s;
    for (std::size_t i = 0; i < script.size(); ++i) {
        const ScriptOp& op = script[i];
        StepRecord step;
        step.phi_before = stack_phi(s);
        if (op.op == "push") {
            need_arg(i, op);
            const int value = static_cast<int>(op.arg);
            step.op = "push";
            step.actual = push_time(value, s);
            step.bound = 2;
            s = push(value, s);
        } else if (op.op == "multipop") {
            need_arg(i, op);
            if (op.arg < 0)
                throw MalformedScript("step " + std::to_string(i) +
                                      ": negative multipop count");
            step.op = "multipop";
            step.actual = multipop_time(op.arg, s);
            step.bound = 2;
            s = multipop(op.arg, s).second;
        } else {
            bad_op(i, op, "stack");
        }
        step.phi_after = stack_phi(s);
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

Trace run_heap(const Script& script) {
    Trace trace;
    Forest<int> f;
    for (std::size_t i = 0; i < script.size(); ++i) {
        const ScriptOp& op = script[i];
        if (op.op != "insert") bad_op(i, op, "heap");
        need_arg(i, op);
        StepRecord step;
        step.op = "insert";
        step.phi_before = heap_phi(f);
        TreePtr<int> t = singleton_tree(static_cast<int>(op.arg));
        step.actual = insert_time(t, f);
        step.bound = 2;
        f = insert_tree(t, f);
        step.phi_after = heap_phi(f);
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

Trace run_fingertree(const Script& script) {
    Trace trace;
    SeqPtr main_seq = nil_seq();
    SeqPtr staged = nil_seq();
    const auto phi_total = [&] { return seq_phi(main_seq) + seq_phi(staged); };
    for (std::size_t i = 0; i < script.size(); ++i) {
        const ScriptOp& op = script[i];
        StepRecord step;
        step.phi_before = phi_total();
        if (op.op == "cons" || op.op == "scons") {
            need_arg(i, op);
            SeqPtr& target = op.op == "cons" ? main_seq : staged;
            ItemPtr x = leaf(op.arg);
            step.op = "cons";
            step.actual = cons_time(x, target);
            step.bound = 3;
            target = cons(x, target);
        } else if (op.op == "snoc" || op.op == "ssnoc") {
            need_arg(i, op);
            SeqPtr& target = op.op == "snoc" ? main_seq : staged;
            ItemPtr x = leaf(op.arg);
            step.op = "snoc";
            step.actual = snoc_time(target, x);
            step.bound = 3;
            target = snoc(target, x);
        } else if (op.op == "append") {
            const auto n1 = static_cast<Units>(seq_to_list(main_seq).size());
            const auto n2 = static_cast<Units>(seq_to_list(staged).size());
            step.op = "append";
            step.actual = glue_time(main_seq, {}, staged);
            step.bound = log2_floor(std::max<Units>(n1 + n2, 2)) + 14;
            main_seq = append(main_seq, staged);
            staged = nil_seq();
        } else {
            bad_op(i, op, "fingertree");
        }
        step.phi_after = phi_total();
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

}  // namespace

Trace run_script(StructureKind kind, const Script& script) {
    switch (kind) {
        case StructureKind::Stack: return run_stack(script);
        case StructureKind::Heap: return run_heap(script);
        case StructureKind::FingerTree: return run_fingertree(script);
    }
    throw MalformedScript("unknown structure kind");
}

}  // namespace amort
