// Acceptance suite: runs every verification criterion at desk scale and
// prints one pass/fail line per criterion. All checks are exact integer
// arithmetic; exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "amort/harness.hpp"

using namespace amort;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::printf("FAIL  criterion %2d: %s (exception: %s)\n", number, name.c_str(),
                    e.what());
        ++failures;
        return;
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    std::printf("%s  criterion %2d: %s (%.0f ms)\n", ok ? "PASS" : "FAIL", number,
                name.c_str(), ms);
    if (!ok) ++failures;
}

GenConfig default_config() {
    GenConfig cfg;
    cfg.max_size = 64;
    cfg.num_traces = 1000;
    cfg.trace_len = 50;
    cfg.seed = 42;
    return cfg;
}

std::vector<ItemPtr> fresh_leaves(std::size_t count, std::int64_t base) {
    std::vector<ItemPtr> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(leaf(base + static_cast<std::int64_t>(i)));
    return out;
}

std::vector<int> binary_increment(std::vector<int> bits) {
    std::size_t i = 0;
    while (i < bits.size() && bits[i] == 1) {
        bits[i] = 0;
        ++i;
    }
    if (i < bits.size())
        bits[i] = 1;
    else
        bits.push_back(1);
    return bits;
}

// enumerated shapes (thinned) plus operation-built trees, for glue pairs
std::vector<SeqPtr> glue_pool() {
    std::vector<SeqPtr> pool;
    const auto enumerated = enumerate_seqs(3);
    for (std::size_t i = 0; i < enumerated.size(); i += 33) pool.push_back(enumerated[i]);
    for (std::size_t n : {0u, 1u, 2u, 3u, 5u, 8u, 13u, 21u, 34u, 55u}) {
        SeqPtr q = nil_seq();
        for (std::size_t i = 0; i < n; ++i)
            q = i % 2 == 0 ? snoc(q, leaf(static_cast<std::int64_t>(i)))
                           : cons(leaf(static_cast<std::int64_t>(i)), q);
        pool.push_back(q);
    }
    return pool;
}

bool stack_push_exact() {
    for (const Stack<int>& s : enumerate_stacks(8))
        if (push_time(1, s) + stack_phi(push(1, s)) - stack_phi(s) != 2) return false;
    return true;
}

bool stack_multipop_bound() {
    for (const Stack<int>& s : enumerate_stacks(8))
        for (Units k = 0; k <= 10; ++k) {
            const auto rest = multipop(k, s).second;
            if (multipop_time(k, s) + stack_phi(rest) - stack_phi(s) > 2) return false;
        }
    return true;
}

bool heap_insert_bound() {
    for (const auto& order : heap_insert_orders(64, 42)) {
        Forest<int> f;
        for (int v : order) {
            const TreePtr<int> t = singleton_tree(v);
            for (const auto& [tree, sub] : insert_recursion_pairs(t, f)) {
                const Units amortized = insert_time(tree, sub) +
                                        heap_phi(insert_tree(tree, sub)) - heap_phi(sub);
                if (amortized > 2) return false;
            }
            f = insert_tree(t, f);
        }
    }
    return true;
}

bool heap_shape() {
    for (const auto& order : heap_insert_orders(64, 42)) {
        Forest<int> f;
        for (int v : order) {
            const std::vector<int> prev = occupancy(f);
            f = heap_insert(v, f);
            if (!validate_heap(f).empty()) return false;
            if (occupancy(f) != binary_increment(prev)) return false;
        }
    }
    return true;
}

bool fingertree_cons_snoc_bound() {
    for (const SeqPtr& q : enumerate_seqs(3)) {
        const ItemPtr x = leaf(-1);
        if (cons_time(x, q) + seq_phi(cons(x, q)) - seq_phi(q) > 3) return false;
        if (snoc_time(q, x) + seq_phi(snoc(q, x)) - seq_phi(q) > 3) return false;
    }
    std::mt19937_64 rng(42);
    for (int t = 0; t < 1000; ++t) {
        const Script script = random_script(StructureKind::FingerTree, 50, rng);
        const Trace trace = run_script(StructureKind::FingerTree, script);
        for (const StepRecord& s : trace.steps)
            if ((s.op == "cons" || s.op == "snoc") && s.amortized() > 3) return false;
    }
    return true;
}

bool fold_lemmas() {
    const auto f_cons = [](const ItemPtr& x, const SeqPtr& acc) { return cons(x, acc); };
    const auto t_cons = [](const ItemPtr& x, const SeqPtr& acc) { return cons_time(x, acc); };
    const auto f_snoc = [](const SeqPtr& acc, const ItemPtr& x) { return snoc(acc, x); };
    const auto t_snoc = [](const SeqPtr& acc, const ItemPtr& x) { return snoc_time(acc, x); };
    for (const SeqPtr& q : enumerate_seqs(3)) {
        for (std::size_t m = 0; m <= 3; ++m) {
            const std::vector<ItemPtr> as = fresh_leaves(m, -100);
            const std::span<const ItemPtr> span(as);
            const Units limit = 3 * static_cast<Units>(m) + 1;
            if (foldr_time(f_cons, t_cons, q, span) +
                    seq_phi(foldr_list(f_cons, q, span)) - seq_phi(q) > limit)
                return false;
            if (foldl_time(f_snoc, t_snoc, q, span) +
                    seq_phi(foldl_list(f_snoc, q, span)) - seq_phi(q) > limit)
                return false;
        }
    }
    return true;
}

bool append_bound() {
    const std::vector<SeqPtr> pool = glue_pool();
    std::vector<Units> sizes;
    for (const SeqPtr& q : pool) sizes.push_back(static_cast<Units>(seq_to_list(q).size()));
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = 0; j < pool.size(); ++j) {
            if (sizes[i] + sizes[j] > 128) continue;
            const Units bound = log2_floor(std::max<Units>(sizes[i] + sizes[j], 2)) + 14;
            for (std::size_t m = 0; m <= 3; ++m) {
                const std::vector<ItemPtr> as = fresh_leaves(m, -50);
                const Units amortized = glue_time(pool[i], as, pool[j]) +
                                        seq_phi(glue(pool[i], as, pool[j])) -
                                        seq_phi(pool[i]) - seq_phi(pool[j]);
                if (amortized > bound) return false;
            }
        }
    return true;
}

bool telescoping_identity() {
    std::mt19937_64 rng(42);
    for (StructureKind kind :
         {StructureKind::Stack, StructureKind::Heap, StructureKind::FingerTree}) {
        for (int t = 0; t < 200; ++t) {
            const Trace trace = run_script(kind, random_script(kind, 50, rng));
            if (!telescope_check(trace).pass) return false;
            Units actual = 0;
            Units bounds = 0;
            for (const StepRecord& s : trace.steps) {
                actual += s.actual;
                bounds += s.bound;
            }
            if (!bound_check(trace).empty()) return false;
            if (actual > bounds) return false;  // corollary of the identity
        }
    }
    return true;
}

bool banker_account() {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 500; ++t) {
        const Trace trace =
            run_script(StructureKind::Stack, random_script(StructureKind::Stack, 50, rng));
        const BankLedger ledger = banker_simulate(trace, {{"push", 2}, {"multipop", 1}});
        for (std::size_t i = 0; i < ledger.balances.size(); ++i)
            if (ledger.balances[i] != trace.steps[i].phi_after) return false;
        if (ledger.went_negative()) return false;
    }
    return true;
}

bool oracle_equivalence() {
    const GenConfig cfg = default_config();
    for (StructureKind kind :
         {StructureKind::Stack, StructureKind::Heap, StructureKind::FingerTree}) {
        const VerifyReport r = run_oracle_suite(kind, cfg);
        if (!r.passed()) return false;
    }
    return true;
}

bool timing_crosscheck() {
    const GenConfig cfg = default_config();
    for (StructureKind kind :
         {StructureKind::Stack, StructureKind::Heap, StructureKind::FingerTree}) {
        const VerifyReport r = run_timing_suite(kind, cfg);
        if (!r.passed()) return false;
    }
    return true;
}

bool helper_contracts() {
    return run_helper_suite(default_config()).passed();
}

bool determinism() {
    GenConfig cfg = default_config();
    // desk-scale here; the full-size determinism path is exercised by the CLI
    cfg.num_traces = 100;
    const auto a = run_all_suites(cfg, std::nullopt);
    const auto b = run_all_suites(cfg, std::nullopt);
    return reports_to_json_stable(a) == reports_to_json_stable(b);
}

}  // namespace

int main() {
    criterion(1, "stack push bound: pushT + dPhi == 2 on all enumerated stacks",
              stack_push_exact);
    criterion(2, "stack multipop bound <= 2 for heights 0..8, k 0..10",
              stack_multipop_bound);
    criterion(3, "heap insert bound <= 2 over 0..64 inserts, adversarial orders",
              heap_insert_bound);
    criterion(4, "heap shape: validate_heap + binary-increment occupancy",
              heap_shape);
    criterion(5, "finger tree cons/snoc bound <= 3 (enumerated + 1000 traces)",
              fingertree_cons_snoc_bound);
    criterion(6, "fold lemmas <= 3*|as| + 1", fold_lemmas);
    criterion(7, "append bound <= log2(max(n1+n2,2)) + 14", append_bound);
    criterion(8, "telescoping identity and bound-sum corollary on all traces",
              telescoping_identity);
    criterion(9, "banker account == stack height, never negative", banker_account);
    criterion(10, "oracle equivalence (list / multiset / list models)",
              oracle_equivalence);
    criterion(11, "timing functions == instrumented unit counters",
              timing_crosscheck);
    criterion(12, "helper contracts (tuples, log2 monotonicity, div, ++ length)",
              helper_contracts);
    criterion(13, "determinism: identical seeds give identical reports", determinism);

    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 13 criteria passed\n");
    return 0;
}
