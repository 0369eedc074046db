#include "amort/harness.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

namespace amort {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_bound(VerifyReport& report, const std::string& input, Units bound,
                 Units observed) {
    ++report.cases_run;
    if (observed > bound) report.violations.push_back({input, bound, observed});
}

void check_exact(VerifyReport& report, const std::string& input, Units expected,
                 Units observed) {
    ++report.cases_run;
    if (observed != expected) report.violations.push_back({input, expected, observed});
}

void check_oracle(VerifyReport& report, bool ok) {
    ++report.cases_run;
    if (!ok) ++report.oracle_mismatches;
}

// Bound, telescoping identity, and the corollary sum(actual) <= sum(bounds)
// on a finished trace.
void check_trace(VerifyReport& report, const Trace& trace, const std::string& name) {
    for (const BoundViolation& v : bound_check(trace))
        report.violations.push_back({name + " step " + std::to_string(v.index) + " (" +
                                         v.step.op + ")",
                                     v.step.bound, v.step.amortized()});
    report.cases_run += static_cast<std::int64_t>(trace.steps.size());

    const TelescopeResult tr = telescope_check(trace);
    ++report.cases_run;
    if (!tr.pass) report.violations.push_back({name + " telescoping identity", 0, 1});

    Units actual_sum = 0;
    Units bound_sum = 0;
    for (const StepRecord& s : trace.steps) {
        actual_sum += s.actual;
        bound_sum += s.bound;
    }
    check_bound(report, name + " total actual vs total bounds", bound_sum, actual_sum);
}

// ---- stack ---------------------------------------------------------------

constexpr int kStackMaxHeight = 8;
constexpr Units kStackMaxK = 10;

VerifyReport stack_bounds(const GenConfig& cfg) {
    VerifyReport report{.suite = "stack-bounds", .seed = cfg.seed};
    for (const Stack<int>& s : enumerate_stacks(kStackMaxHeight)) {
        const Units h = s.height();
        const Units push_amortized =
            push_time(99, s) + stack_phi(push(99, s)) - stack_phi(s);
        check_bound(report, "push onto height " + std::to_string(h), 2, push_amortized);
        for (Units k = 0; k <= kStackMaxK; ++k) {
            const auto [popped, rest] = multipop(k, s);
            const Units amortized = multipop_time(k, s) + stack_phi(rest) - stack_phi(s);
            check_bound(report,
                        "multipop " + std::to_string(k) + " from height " + std::to_string(h),
                        2, amortized);
        }
    }

    std::mt19937_64 rng(cfg.seed);
    for (std::int64_t t = 0; t < cfg.num_traces; ++t) {
        const Script script = random_script(StructureKind::Stack, cfg.trace_len, rng);
        const Trace trace = run_script(StructureKind::Stack, script);
        const std::string name = "stack trace " + std::to_string(t);
        check_trace(report, trace, name);

        // banker: push deposits one extra unit, multipop only pays its base
        // cost; the account must track the stack height exactly.
        const BankLedger ledger = banker_simulate(trace, {{"push", 2}, {"multipop", 1}});
        for (std::size_t i = 0; i < ledger.balances.size(); ++i)
            check_exact(report, name + " bank balance after step " + std::to_string(i),
                        trace.steps[i].phi_after, ledger.balances[i]);
    }
    return report;
}

VerifyReport stack_oracle(const GenConfig& cfg) {
    VerifyReport report{.suite = "stack-oracle", .seed = cfg.seed};
    for (const Stack<int>& s : enumerate_stacks(kStackMaxHeight)) {
        const std::vector<int> model = s.to_list();
        // push: result is x prepended, argument untouched
        const Stack<int> pushed = push(42, s);
        std::vector<int> expected{42};
        expected.insert(expected.end(), model.begin(), model.end());
        check_oracle(report, pushed.to_list() == expected);
        check_oracle(report, s.to_list() == model);
        check_exact(report, "phi == height " + std::to_string(model.size()),
                    static_cast<Units>(model.size()), stack_phi(s));
        for (Units k = 0; k <= kStackMaxK; ++k) {
            const auto [popped, rest] = multipop(k, s);
            const auto take = std::min<std::size_t>(static_cast<std::size_t>(k), model.size());
            const std::vector<int> model_popped(model.begin(), model.begin() + take);
            const std::vector<int> model_rest(model.begin() + take, model.end());
            check_oracle(report, popped == model_popped && rest.to_list() == model_rest);
        }
    }

    std::mt19937_64 rng(cfg.seed);
    for (std::int64_t t = 0; t < cfg.num_traces; ++t) {
        const Script script = random_script(StructureKind::Stack, cfg.trace_len, rng);
        Stack<int> s;
        std::vector<int> model;
        for (const ScriptOp& op : script) {
            if (op.op == "push") {
                s = push(static_cast<int>(op.arg), s);
                model.insert(model.begin(), static_cast<int>(op.arg));
            } else {
                s = multipop(op.arg, s).second;
                const auto take =
                    std::min<std::size_t>(static_cast<std::size_t>(op.arg), model.size());
                model.erase(model.begin(), model.begin() + take);
            }
            check_oracle(report, s.to_list() == model);
        }
    }
    return report;
}

VerifyReport stack_timing(const GenConfig& cfg) {
    VerifyReport report{.suite = "stack-timing", .seed = cfg.seed};
    for (const Stack<int>& s : enumerate_stacks(kStackMaxHeight)) {
        const Units h = s.height();
        CostCounter push_counter;
        push_counted(42, s, push_counter);
        check_exact(report, "pushT at height " + std::to_string(h), push_time(42, s),
                    push_counter.units);
        for (Units k = 0; k <= kStackMaxK; ++k) {
            CostCounter counter;
            multipop_counted(k, s, counter);
            check_exact(report,
                        "multipopT k=" + std::to_string(k) + " height " + std::to_string(h),
                        multipop_time(k, s), counter.units);
        }
    }

    std::mt19937_64 rng(cfg.seed);
    const std::int64_t traces = std::max<std::int64_t>(1, cfg.num_traces / 10);
    for (std::int64_t t = 0; t < traces; ++t) {
        const Script script = random_script(StructureKind::Stack, cfg.trace_len, rng);
        Stack<int> s;
        for (const ScriptOp& op : script) {
            CostCounter counter;
            if (op.op == "push") {
                const Units expected = push_time(static_cast<int>(op.arg), s);
                s = push_counted(static_cast<int>(op.arg), s, counter);
                check_exact(report, "trace pushT", expected, counter.units);
            } else {
                const Units expected = multipop_time(op.arg, s);
                s = multipop_counted(op.arg, s, counter).second;
                check_exact(report, "trace multipopT", expected, counter.units);
            }
        }
    }
    return report;
}

// ---- heap ----------------------------------------------------------------

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

int popcount_of(std::size_t n) {
    int c = 0;
    for (; n != 0; n >>= 1) c += static_cast<int>(n & 1);
    return c;
}

VerifyReport heap_bounds(const GenConfig& cfg) {
    VerifyReport report{.suite = "heap-bounds", .seed = cfg.seed};
    for (const std::vector<int>& order : heap_insert_orders(cfg.max_size, cfg.seed)) {
        Forest<int> f;
        for (std::size_t i = 0; i < order.size(); ++i) {
            const TreePtr<int> t = singleton_tree(order[i]);
            // the bound holds at every recursion depth, not just the root call
            for (const auto& [tree, sub] : insert_recursion_pairs(t, f)) {
                const Units amortized = insert_time(tree, sub) +
                                        heap_phi(insert_tree(tree, sub)) - heap_phi(sub);
                check_bound(report,
                            "insert #" + std::to_string(i) + " rank " +
                                std::to_string(tree->rank()),
                            2, amortized);
            }
            f = insert_tree(t, f);
        }
    }

    std::mt19937_64 rng(cfg.seed);
    const std::int64_t traces = std::max<std::int64_t>(1, cfg.num_traces / 10);
    for (std::int64_t t = 0; t < traces; ++t) {
        const Script script = random_script(StructureKind::Heap, cfg.trace_len, rng);
        check_trace(report, run_script(StructureKind::Heap, script),
                    "heap trace " + std::to_string(t));
    }
    return report;
}

VerifyReport heap_oracle(const GenConfig& cfg) {
    VerifyReport report{.suite = "heap-oracle", .seed = cfg.seed};
    for (const std::vector<int>& order : heap_insert_orders(cfg.max_size, cfg.seed)) {
        Forest<int> f;
        std::vector<int> model;
        for (std::size_t i = 0; i < order.size(); ++i) {
            const std::vector<int> prev_bits = occupancy(f);
            f = heap_insert(order[i], f);
            model.push_back(order[i]);

            check_oracle(report, validate_heap(f).empty());
            check_oracle(report, occupancy(f) == binary_increment(prev_bits));

            std::vector<int> elems = heap_elements(f);
            std::vector<int> sorted_model = model;
            std::sort(elems.begin(), elems.end());
            std::sort(sorted_model.begin(), sorted_model.end());
            check_oracle(report, elems == sorted_model);

            check_exact(report, "phi == popcount after " + std::to_string(i + 1) + " inserts",
                        popcount_of(model.size()), heap_phi(f));
        }
    }
    return report;
}

VerifyReport heap_timing(const GenConfig& cfg) {
    VerifyReport report{.suite = "heap-timing", .seed = cfg.seed};
    for (const std::vector<int>& order : heap_insert_orders(cfg.max_size, cfg.seed)) {
        Forest<int> f;
        for (std::size_t i = 0; i < order.size(); ++i) {
            const TreePtr<int> t = singleton_tree(order[i]);
            CostCounter counter;
            const Forest<int> next = insert_tree_counted(t, f, counter);
            check_exact(report, "insertT at insert #" + std::to_string(i),
                        insert_time(t, f), counter.units);
            f = next;
        }
    }
    return report;
}

// ---- finger tree ----------------------------------------------------------

constexpr int kSeqMaxDepth = 3;

std::vector<ItemPtr> fresh_leaves(std::size_t count, std::int64_t base) {
    std::vector<ItemPtr> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(leaf(base + static_cast<std::int64_t>(i)));
    return out;
}

std::vector<std::int64_t> item_labels(const std::vector<ItemPtr>& items) {
    std::vector<std::int64_t> out;
    for (const ItemPtr& item : items) flatten_item(item, out);
    return out;
}

SeqPtr build_by_ops(std::size_t n, std::int64_t base) {
    SeqPtr q = nil_seq();
    for (std::size_t i = 0; i < n; ++i) {
        if (i % 2 == 0)
            q = snoc(q, leaf(base + static_cast<std::int64_t>(i)));
        else
            q = cons(leaf(base + static_cast<std::int64_t>(i)), q);
    }
    return q;
}

// Enumerated shapes thinned to a pool small enough for pairwise glue checks,
// plus operation-built trees of assorted sizes.
std::vector<SeqPtr> glue_pool() {
    std::vector<SeqPtr> pool;
    const std::vector<SeqPtr> enumerated = enumerate_seqs(kSeqMaxDepth);
    for (std::size_t i = 0; i < enumerated.size(); i += 33) pool.push_back(enumerated[i]);
    for (std::size_t n : {0u, 1u, 2u, 3u, 5u, 8u, 13u, 21u, 34u, 55u})
        pool.push_back(build_by_ops(n, 1 << 20));
    return pool;
}

Units cons_amortized(const ItemPtr& x, const SeqPtr& q) {
    return cons_time(x, q) + seq_phi(cons(x, q)) - seq_phi(q);
}

Units snoc_amortized(const SeqPtr& q, const ItemPtr& x) {
    return snoc_time(q, x) + seq_phi(snoc(q, x)) - seq_phi(q);
}

const auto kCons = [](const ItemPtr& x, const SeqPtr& acc) { return cons(x, acc); };
const auto kConsT = [](const ItemPtr& x, const SeqPtr& acc) { return cons_time(x, acc); };
const auto kSnoc = [](const SeqPtr& acc, const ItemPtr& x) { return snoc(acc, x); };
const auto kSnocT = [](const SeqPtr& acc, const ItemPtr& x) { return snoc_time(acc, x); };

VerifyReport fingertree_bounds(const GenConfig& cfg) {
    VerifyReport report{.suite = "fingertree-bounds", .seed = cfg.seed};
    const std::vector<SeqPtr> seqs = enumerate_seqs(kSeqMaxDepth);
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        const SeqPtr& q = seqs[i];
        const ItemPtr x = leaf(1 << 20);
        const std::string name = "enumerated seq " + std::to_string(i);
        check_bound(report, name + " cons", 3, cons_amortized(x, q));
        check_bound(report, name + " snoc", 3, snoc_amortized(q, x));

        for (std::size_t m = 0; m <= 3; ++m) {
            const std::vector<ItemPtr> as = fresh_leaves(m, 1 << 21);
            const std::span<const ItemPtr> span(as);
            const Units rt = foldr_time(kCons, kConsT, q, span) +
                             seq_phi(foldr_list(kCons, q, span)) - seq_phi(q);
            check_bound(report, name + " foldr/cons |as|=" + std::to_string(m),
                        3 * static_cast<Units>(m) + 1, rt);
            const Units lt = foldl_time(kSnoc, kSnocT, q, span) +
                             seq_phi(foldl_list(kSnoc, q, span)) - seq_phi(q);
            check_bound(report, name + " foldl/snoc |as|=" + std::to_string(m),
                        3 * static_cast<Units>(m) + 1, lt);
        }
    }

    const std::vector<SeqPtr> pool = glue_pool();
    for (std::size_t i = 0; i < pool.size(); ++i) {
        const Units n1 = static_cast<Units>(seq_to_list(pool[i]).size());
        for (std::size_t j = 0; j < pool.size(); ++j) {
            const Units n2 = static_cast<Units>(seq_to_list(pool[j]).size());
            if (n1 + n2 > 128) continue;
            const Units bound = log2_floor(std::max<Units>(n1 + n2, 2)) + 14;
            for (std::size_t m = 0; m <= 3; ++m) {
                const std::vector<ItemPtr> as = fresh_leaves(m, 1 << 22);
                const Units amortized = glue_time(pool[i], as, pool[j]) +
                                        seq_phi(glue(pool[i], as, pool[j])) -
                                        seq_phi(pool[i]) - seq_phi(pool[j]);
                check_bound(report,
                            "glue pool[" + std::to_string(i) + "],pool[" + std::to_string(j) +
                                "] |as|=" + std::to_string(m),
                            bound, amortized);
            }
        }
    }

    std::mt19937_64 rng(cfg.seed);
    for (std::int64_t t = 0; t < cfg.num_traces; ++t) {
        const Script script = random_script(StructureKind::FingerTree, cfg.trace_len, rng);
        check_trace(report, run_script(StructureKind::FingerTree, script),
                    "fingertree trace " + std::to_string(t));
    }
    return report;
}

VerifyReport fingertree_oracle(const GenConfig& cfg) {
    VerifyReport report{.suite = "fingertree-oracle", .seed = cfg.seed};
    const std::vector<SeqPtr> seqs = enumerate_seqs(kSeqMaxDepth);
    for (const SeqPtr& q : seqs) {
        check_oracle(report, validate_seq(q).empty());

        const std::vector<std::int64_t> model = seq_labels(q);
        std::vector<std::int64_t> iota(model.size());
        std::iota(iota.begin(), iota.end(), 0);
        check_oracle(report, model == iota);

        const ItemPtr x = leaf(-1);
        std::vector<std::int64_t> consed{-1};
        consed.insert(consed.end(), model.begin(), model.end());
        check_oracle(report, seq_labels(cons(x, q)) == consed);
        check_oracle(report, validate_seq(cons(x, q)).empty());

        std::vector<std::int64_t> snocced = model;
        snocced.push_back(-1);
        check_oracle(report, seq_labels(snoc(q, x)) == snocced);
        check_oracle(report, validate_seq(snoc(q, x)).empty());
    }

    const std::vector<SeqPtr> pool = glue_pool();
    for (std::size_t i = 0; i < pool.size(); i += 3) {
        for (std::size_t j = 0; j < pool.size(); j += 3) {
            for (std::size_t m = 0; m <= 3; m += 3) {
                const std::vector<ItemPtr> as = fresh_leaves(m, -100);
                const SeqPtr glued = glue(pool[i], as, pool[j]);
                std::vector<std::int64_t> expected = seq_labels(pool[i]);
                const std::vector<std::int64_t> mid = item_labels(as);
                expected.insert(expected.end(), mid.begin(), mid.end());
                const std::vector<std::int64_t> right = seq_labels(pool[j]);
                expected.insert(expected.end(), right.begin(), right.end());
                check_oracle(report, seq_labels(glued) == expected);
                check_oracle(report, validate_seq(glued).empty());
            }
        }
    }

    std::mt19937_64 rng(cfg.seed);
    for (std::int64_t t = 0; t < cfg.num_traces; ++t) {
        const Script script = random_script(StructureKind::FingerTree, cfg.trace_len, rng);
        SeqPtr main_seq = nil_seq();
        SeqPtr staged = nil_seq();
        std::vector<std::int64_t> main_model;
        std::vector<std::int64_t> staged_model;
        for (const ScriptOp& op : script) {
            if (op.op == "cons") {
                main_seq = cons(leaf(op.arg), main_seq);
                main_model.insert(main_model.begin(), op.arg);
            } else if (op.op == "snoc") {
                main_seq = snoc(main_seq, leaf(op.arg));
                main_model.push_back(op.arg);
            } else if (op.op == "scons") {
                staged = cons(leaf(op.arg), staged);
                staged_model.insert(staged_model.begin(), op.arg);
            } else if (op.op == "ssnoc") {
                staged = snoc(staged, leaf(op.arg));
                staged_model.push_back(op.arg);
            } else {  // append
                main_seq = append(main_seq, staged);
                staged = nil_seq();
                main_model.insert(main_model.end(), staged_model.begin(), staged_model.end());
                staged_model.clear();
            }
            check_oracle(report, seq_labels(main_seq) == main_model &&
                                     seq_labels(staged) == staged_model);
        }
        check_oracle(report,
                     validate_seq(main_seq).empty() && validate_seq(staged).empty());
    }
    return report;
}

VerifyReport fingertree_timing(const GenConfig& cfg) {
    VerifyReport report{.suite = "fingertree-timing", .seed = cfg.seed};
    const std::vector<SeqPtr> seqs = enumerate_seqs(kSeqMaxDepth);
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        const SeqPtr& q = seqs[i];
        const ItemPtr x = leaf(1 << 20);
        CostCounter cons_counter;
        cons_counted(x, q, cons_counter);
        check_exact(report, "consT seq " + std::to_string(i), cons_time(x, q),
                    cons_counter.units);
        CostCounter snoc_counter;
        snoc_counted(q, x, snoc_counter);
        check_exact(report, "snocT seq " + std::to_string(i), snoc_time(q, x),
                    snoc_counter.units);
    }

    const std::vector<SeqPtr> pool = glue_pool();
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = 0; j < pool.size(); ++j) {
            for (std::size_t m = 0; m <= 3; ++m) {
                const std::vector<ItemPtr> as = fresh_leaves(m, 1 << 22);
                CostCounter counter;
                glue_counted(pool[i], as, pool[j], counter);
                check_exact(report,
                            "glueT pool[" + std::to_string(i) + "],pool[" + std::to_string(j) +
                                "] |as|=" + std::to_string(m),
                            glue_time(pool[i], as, pool[j]), counter.units);
            }
        }
    }
    return report;
}

}  // namespace

VerifyReport run_helper_suite(const GenConfig& cfg) {
    const auto start = Clock::now();
    VerifyReport report{.suite = "fingertree-helpers", .seed = cfg.seed};

    // to_tuples_prime: piecewise output length and order preservation
    for (std::size_t n = 0; n <= 9; ++n) {
        if (n == 1) continue;
        const std::vector<ItemPtr> xs = fresh_leaves(n, 0);
        const std::vector<ItemPtr> tuples = to_tuples_prime(xs);
        const std::size_t expected = n == 0 ? 0 : n <= 3 ? 1 : n <= 6 ? 2 : 3;
        check_exact(report, "to_tuples_prime length " + std::to_string(n),
                    static_cast<Units>(expected), static_cast<Units>(tuples.size()));
        check_oracle(report, item_labels(tuples) == item_labels(xs));
        if (n >= 2) {
            check_exact(report, "to_tuples length " + std::to_string(n),
                        static_cast<Units>(expected),
                        static_cast<Units>(to_tuples(xs).size()));
        }
    }
    for (std::size_t n : {1u, 10u}) {
        bool threw = false;
        try {
            to_tuples_prime(fresh_leaves(n, 0));
        } catch (const LengthContract&) {
            threw = true;
        }
        check_oracle(report, threw);
    }

    // tuples_to_list: 2|x| <= |y| <= 3|x| on random tuple lists
    std::mt19937_64 rng(cfg.seed);
    for (int round = 0; round < 200; ++round) {
        const std::size_t count = rng() % 20;
        std::vector<ItemPtr> tuples;
        for (std::size_t i = 0; i < count; ++i) {
            if (rng() % 2 == 0)
                tuples.push_back(tuple_pair(leaf(0), leaf(1)));
            else
                tuples.push_back(tuple_triple(leaf(0), leaf(1), leaf(2)));
        }
        const std::size_t flat = tuples_to_list(tuples).size();
        check_oracle(report, 2 * count <= flat && flat <= 3 * count);
    }

    // log2 monotonicity, exhaustive for 1 <= x <= y <= 4096
    std::vector<Units> log_table(4097);
    for (Units n = 1; n <= 4096; ++n) log_table[static_cast<std::size_t>(n)] = log2_floor(n);
    bool monotone = true;
    for (Units x = 1; x <= 4096 && monotone; ++x)
        for (Units y = x; y <= 4096; ++y)
            if (log_table[static_cast<std::size_t>(x)] > log_table[static_cast<std::size_t>(y)]) {
                monotone = false;
                break;
            }
    report.cases_run += 4096 * 4097 / 2;
    if (!monotone) report.violations.push_back({"log2 monotonicity", 0, 1});

    // (2x) div 2 == x, sampled
    for (int round = 0; round < 1000; ++round) {
        const auto x = static_cast<Units>(rng() % 2000001) - 1000000;
        check_exact(report, "divCancel " + std::to_string(x), x, (2 * x) / 2);
    }

    // length law for in-library list append
    for (int round = 0; round < 200; ++round) {
        const std::vector<ItemPtr> xs = fresh_leaves(rng() % 30, 0);
        const std::vector<ItemPtr> ys = fresh_leaves(rng() % 30, 100);
        check_exact(report, "length of xs ++ ys",
                    static_cast<Units>(xs.size() + ys.size()),
                    static_cast<Units>(list_append(xs, ys).size()));
    }

    report.elapsed_ms = ms_since(start);
    return report;
}

namespace {

VerifyReport timed(VerifyReport (*suite)(const GenConfig&), const GenConfig& cfg) {
    const auto start = Clock::now();
    VerifyReport report = suite(cfg);
    report.elapsed_ms = ms_since(start);
    return report;
}

}  // namespace

VerifyReport run_bound_suite(StructureKind kind, const GenConfig& cfg) {
    switch (kind) {
        case StructureKind::Stack: return timed(stack_bounds, cfg);
        case StructureKind::Heap: return timed(heap_bounds, cfg);
        case StructureKind::FingerTree: return timed(fingertree_bounds, cfg);
    }
    throw std::logic_error("unknown structure kind");
}

VerifyReport run_oracle_suite(StructureKind kind, const GenConfig& cfg) {
    switch (kind) {
        case StructureKind::Stack: return timed(stack_oracle, cfg);
        case StructureKind::Heap: return timed(heap_oracle, cfg);
        case StructureKind::FingerTree: return timed(fingertree_oracle, cfg);
    }
    throw std::logic_error("unknown structure kind");
}

VerifyReport run_timing_suite(StructureKind kind, const GenConfig& cfg) {
    switch (kind) {
        case StructureKind::Stack: return timed(stack_timing, cfg);
        case StructureKind::Heap: return timed(heap_timing, cfg);
        case StructureKind::FingerTree: return timed(fingertree_timing, cfg);
    }
    throw std::logic_error("unknown structure kind");
}

std::vector<VerifyReport> run_all_suites(const GenConfig& cfg,
                                         std::optional<StructureKind> filter) {
    std::vector<VerifyReport> reports;
    for (StructureKind kind :
         {StructureKind::Stack, StructureKind::Heap, StructureKind::FingerTree}) {
        if (filter && *filter != kind) continue;
        GenConfig kind_cfg = cfg;
        kind_cfg.structure = kind;
        reports.push_back(run_bound_suite(kind, kind_cfg));
        reports.push_back(run_oracle_suite(kind, kind_cfg));
        reports.push_back(run_timing_suite(kind, kind_cfg));
        if (kind == StructureKind::FingerTree) reports.push_back(run_helper_suite(kind_cfg));
    }
    return reports;
}

}  // namespace amort
