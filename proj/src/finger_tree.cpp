#include "amort/finger_tree.hpp"

namespace amort {

ItemPtr leaf(std::int64_t label) {
    return std::make_shared<const Item>(Item{label, {}});
}

ItemPtr tuple_pair(ItemPtr a, ItemPtr b) {
    return std::make_shared<const Item>(Item{0, {std::move(a), std::move(b)}});
}

ItemPtr tuple_triple(ItemPtr a, ItemPtr b, ItemPtr c) {
    return std::make_shared<const Item>(Item{0, {std::move(a), std::move(b), std::move(c)}});
}

bool item_equal(const ItemPtr& a, const ItemPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->parts.size() != b->parts.size()) return false;
    if (a->is_leaf()) return a->label == b->label;
    for (std::size_t i = 0; i < a->parts.size(); ++i)
        if (!item_equal(a->parts[i], b->parts[i])) return false;
    return true;
}

void flatten_item(const ItemPtr& item, std::vector<std::int64_t>& out) {
    if (item->is_leaf()) {
        out.push_back(item->label);
        return;
    }
    for (const ItemPtr& part : item->parts) flatten_item(part, out);
}

Digit make_digit(std::vector<ItemPtr> items) {
    if (items.empty() || items.size() > 3)
        throw LengthContract("digit must hold 1 to 3 elements, got " +
                             std::to_string(items.size()));
    return Digit{std::move(items)};
}

SeqPtr nil_seq() {
    static const SeqPtr nil = std::make_shared<const Seq>();
    return nil;
}

SeqPtr unit_seq(ItemPtr x) {
    Seq s;
    s.tag = Seq::Tag::Unit;
    s.single = std::move(x);
    return std::make_shared<const Seq>(std::move(s));
}

SeqPtr more_seq(Digit front, SeqPtr spine, Digit back) {
    if (front.items.empty() || front.items.size() > 3 ||
        back.items.empty() || back.items.size() > 3)
        throw LengthContract("more_seq: digit arity out of range");
    Seq s;
    s.tag = Seq::Tag::More;
    s.front = std::move(front);
    s.spine = std::move(spine);
    s.back = std::move(back);
    return std::make_shared<const Seq>(std::move(s));
}

Units danger(const Digit& d) {
    return d.items.size() == 2 ? 0 : 1;
}

Units seq_phi(const SeqPtr& q) {
    Units phi = 0;
    for (const Seq* cur = q.get(); cur->tag == Seq::Tag::More; cur = cur->spine.get())
        phi += danger(cur->front) + danger(cur->back);
    return phi;
}

SeqPtr cons(const ItemPtr& x, const SeqPtr& q) {
    switch (q->tag) {
        case Seq::Tag::Nil:
            return unit_seq(x);
        case Seq::Tag::Unit:
            return more_seq(make_digit({x}), nil_seq(), make_digit({q->single}));
        case Seq::Tag::More:
            break;
    }
    const auto& f = q->front.items;
    if (f.size() < 3) {
        std::vector<ItemPtr> items{x};
        items.insert(items.end(), f.begin(), f.end());
        return more_seq(make_digit(std::move(items)), q->spine, q->back);
    }
    // Three: keep two in front, push the rest down as a pair
    return more_seq(make_digit({x, f[0]}),
                    cons(tuple_pair(f[1], f[2]), q->spine), q->back);
}

SeqPtr snoc(const SeqPtr& q, const ItemPtr& x) {
    switch (q->tag) {
        case Seq::Tag::Nil:
            return unit_seq(x);
        case Seq::Tag::Unit:
            return more_seq(make_digit({q->single}), nil_seq(), make_digit({x}));
        case Seq::Tag::More:
            break;
    }
    const auto& b = q->back.items;
    if (b.size() < 3) {
        std::vector<ItemPtr> items(b.begin(), b.end());
        items.push_back(x);
        return more_seq(q->front, q->spine, make_digit(std::move(items)));
    }
    return more_seq(q->front, snoc(q->spine, tuple_pair(b[0], b[1])),
                    make_digit({b[2], x}));
}

Units cons_time(const ItemPtr& x, const SeqPtr& q) {
    if (q->tag == Seq::Tag::More && q->front.items.size() == 3) {
        const auto& f = q->front.items;
        return 1 + cons_time(tuple_pair(f[1], f[2]), q->spine);
    }
    (void)x;
    return 1;
}

Units snoc_time(const SeqPtr& q, const ItemPtr& x) {
    if (q->tag == Seq::Tag::More && q->back.items.size() == 3) {
        const auto& b = q->back.items;
        return 1 + snoc_time(q->spine, tuple_pair(b[0], b[1]));
    }
    (void)x;
    return 1;
}

SeqPtr cons_counted(const ItemPtr& x, const SeqPtr& q, CostCounter& counter) {
    counter.tick();
    if (q->tag == Seq::Tag::More && q->front.items.size() == 3) {
        const auto& f = q->front.items;
        return more_seq(make_digit({x, f[0]}),
                        cons_counted(tuple_pair(f[1], f[2]), q->spine, counter),
                        q->back);
    }
    return cons(x, q);
}

SeqPtr snoc_counted(const SeqPtr& q, const ItemPtr& x, CostCounter& counter) {
    counter.tick();
    if (q->tag == Seq::Tag::More && q->back.items.size() == 3) {
        const auto& b = q->back.items;
        return more_seq(q->front,
                        snoc_counted(q->spine, tuple_pair(b[0], b[1]), counter),
                        make_digit({b[2], x}));
    }
    return snoc(q, x);
}

std::vector<ItemPtr> digit_items(const Digit& d) {
    return d.items;
}

std::vector<ItemPtr> to_tuples(const std::vector<ItemPtr>& xs) {
    if (xs.size() < 2 || xs.size() > 9)
        throw LengthContract("to_tuples: length must be 2..9, got " +
                             std::to_string(xs.size()));
    return to_tuples_prime(xs);
}

std::vector<ItemPtr> to_tuples_prime(const std::vector<ItemPtr>& xs) {
    if (xs.size() == 1 || xs.size() > 9)
        throw LengthContract("to_tuples_prime: length must be != 1 and <= 9, got " +
                             std::to_string(xs.size()));
    if (xs.empty()) return {};
    if (xs.size() == 2) return {tuple_pair(xs[0], xs[1])};
    if (xs.size() == 4) return {tuple_pair(xs[0], xs[1]), tuple_pair(xs[2], xs[3])};
    std::vector<ItemPtr> out{tuple_triple(xs[0], xs[1], xs[2])};
    std::vector<ItemPtr> rest(xs.begin() + 3, xs.end());
    for (ItemPtr& t : to_tuples_prime(rest)) out.push_back(std::move(t));
    return out;
}

namespace {

std::vector<ItemPtr> prepend_item(const ItemPtr& x, const std::vector<ItemPtr>& xs) {
    std::vector<ItemPtr> out{x};
    out.insert(out.end(), xs.begin(), xs.end());
    return out;
}

SeqPtr foldr_cons(const std::vector<ItemPtr>& xs, const SeqPtr& q) {
    return foldr_list([](const ItemPtr& x, const SeqPtr& acc) { return cons(x, acc); },
                      q, std::span<const ItemPtr>(xs));
}

SeqPtr foldl_snoc(const SeqPtr& q, const std::vector<ItemPtr>& xs) {
    return foldl_list([](const SeqPtr& acc, const ItemPtr& x) { return snoc(acc, x); },
                      q, std::span<const ItemPtr>(xs));
}

Units foldr_cons_time(const SeqPtr& q, const std::vector<ItemPtr>& xs) {
    return foldr_time([](const ItemPtr& x, const SeqPtr& acc) { return cons(x, acc); },
                      [](const ItemPtr& x, const SeqPtr& acc) { return cons_time(x, acc); },
                      q, std::span<const ItemPtr>(xs));
}

Units foldl_snoc_time(const SeqPtr& q, const std::vector<ItemPtr>& xs) {
    return foldl_time([](const SeqPtr& acc, const ItemPtr& x) { return snoc(acc, x); },
                      [](const SeqPtr& acc, const ItemPtr& x) { return snoc_time(acc, x); },
                      q, std::span<const ItemPtr>(xs));
}

SeqPtr foldr_cons_counted(const std::vector<ItemPtr>& xs, const SeqPtr& q,
                          CostCounter& counter) {
    if (xs.empty()) {
        counter.tick();
        return q;
    }
    std::vector<ItemPtr> rest(xs.begin() + 1, xs.end());
    SeqPtr folded = foldr_cons_counted(rest, q, counter);
    return cons_counted(xs.front(), folded, counter);
}

SeqPtr foldl_snoc_counted(const SeqPtr& q, const std::vector<ItemPtr>& xs,
                          CostCounter& counter) {
    SeqPtr acc = q;
    for (const ItemPtr& x : xs) acc = snoc_counted(acc, x, counter);
    counter.tick();  // base clause
    return acc;
}

void check_mid_length(const std::vector<ItemPtr>& mid) {
    if (mid.size() > 3)
        throw LengthContract("glue: middle list longer than 3 (" +
                             std::to_string(mid.size()) + ")");
}

}  // namespace

SeqPtr glue(const SeqPtr& q1, const std::vector<ItemPtr>& mid, const SeqPtr& q2) {
    check_mid_length(mid);
    if (q1->tag == Seq::Tag::Nil) return foldr_cons(mid, q2);
    if (q2->tag == Seq::Tag::Nil) return foldl_snoc(q1, mid);
    if (q1->tag == Seq::Tag::Unit) return foldr_cons(prepend_item(q1->single, mid), q2);
    if (q2->tag == Seq::Tag::Unit) return snoc(foldl_snoc(q1, mid), q2->single);
    std::vector<ItemPtr> inner = to_tuples(list_append(
        list_append(digit_items(q1->back), mid), digit_items(q2->front)));
    return more_seq(q1->front, glue(q1->spine, inner, q2->spine), q2->back);
}

Units glue_time(const SeqPtr& q1, const std::vector<ItemPtr>& mid, const SeqPtr& q2) {
    check_mid_length(mid);
    if (q1->tag == Seq::Tag::Nil) return 1 + foldr_cons_time(q2, mid);
    if (q2->tag == Seq::Tag::Nil) return 1 + foldl_snoc_time(q1, mid);
    if (q1->tag == Seq::Tag::Unit)
        return 1 + foldr_cons_time(q2, prepend_item(q1->single, mid));
    if (q2->tag == Seq::Tag::Unit)
        return 1 + snoc_time(foldl_snoc(q1, mid), q2->single) + foldl_snoc_time(q1, mid);
    std::vector<ItemPtr> inner = to_tuples(list_append(
        list_append(digit_items(q1->back), mid), digit_items(q2->front)));
    return 1 + glue_time(q1->spine, inner, q2->spine);
}

SeqPtr glue_counted(const SeqPtr& q1, const std::vector<ItemPtr>& mid,
                    const SeqPtr& q2, CostCounter& counter) {
    check_mid_length(mid);
    counter.tick();
    if (q1->tag == Seq::Tag::Nil) return foldr_cons_counted(mid, q2, counter);
    if (q2->tag == Seq::Tag::Nil) return foldl_snoc_counted(q1, mid, counter);
    if (q1->tag == Seq::Tag::Unit)
        return foldr_cons_counted(prepend_item(q1->single, mid), q2, counter);
    if (q2->tag == Seq::Tag::Unit)
        return snoc_counted(foldl_snoc_counted(q1, mid, counter), q2->single, counter);
    std::vector<ItemPtr> inner = to_tuples(list_append(
        list_append(digit_items(q1->back), mid), digit_items(q2->front)));
    return more_seq(q1->front, glue_counted(q1->spine, inner, q2->spine, counter),
                    q2->back);
}

SeqPtr append(const SeqPtr& q1, const SeqPtr& q2) {
    return glue(q1, {}, q2);
}

Units log2_floor(Units n) {
    if (n < 1) throw DomainError("log2_floor: argument must be >= 1");
    Units r = 0;
    while (n > 1) {
        n /= 2;
        ++r;
    }
    return r;
}

std::vector<ItemPtr> tuples_to_list(const std::vector<ItemPtr>& xs) {
    std::vector<ItemPtr> out;
    out.reserve(xs.size() * 3);
    for (const ItemPtr& t : xs) {
        if (t->is_leaf())
            throw std::invalid_argument("tuples_to_list: element is not a tuple");
        out.insert(out.end(), t->parts.begin(), t->parts.end());
    }
    return out;
}

std::vector<ItemPtr> seq_to_list(const SeqPtr& q) {
    switch (q->tag) {
        case Seq::Tag::Nil:
            return {};
        case Seq::Tag::Unit:
            return {q->single};
        case Seq::Tag::More:
            return list_append(
                list_append(digit_items(q->front), tuples_to_list(seq_to_list(q->spine))),
                digit_items(q->back));
    }
    return {};
}

std::vector<std::int64_t> seq_labels(const SeqPtr& q) {
    std::vector<std::int64_t> out;
    for (const ItemPtr& item : seq_to_list(q)) flatten_item(item, out);
    return out;
}

namespace {

void check_item(const ItemPtr& item, int expected_depth, const std::string& where,
                std::vector<std::string>& out) {
    if (item->is_leaf()) {
        if (expected_depth != 0)
            out.push_back(where + ": leaf at nesting depth " +
                          std::to_string(expected_depth));
        return;
    }
    if (expected_depth == 0) {
        out.push_back(where + ": tuple where a leaf was expected");
        return;
    }
    if (item->parts.size() != 2 && item->parts.size() != 3) {
        out.push_back(where + ": tuple arity " + std::to_string(item->parts.size()));
        return;
    }
    for (std::size_t i = 0; i < item->parts.size(); ++i)
        check_item(item->parts[i], expected_depth - 1,
                   where + "." + std::to_string(i), out);
}

void check_digit(const Digit& d, int level, const std::string& where,
                 std::vector<std::string>& out) {
    if (d.items.empty() || d.items.size() > 3) {
        out.push_back(where + ": digit arity " + std::to_string(d.items.size()));
        return;
    }
    for (std::size_t i = 0; i < d.items.size(); ++i)
        check_item(d.items[i], level, where + "[" + std::to_string(i) + "]", out);
}

}  // namespace

std::vector<std::string> validate_seq(const SeqPtr& q) {
    std::vector<std::string> out;
    int level = 0;
    const Seq* cur = q.get();
    while (cur->tag == Seq::Tag::More) {
        const std::string where = "level" + std::to_string(level);
        check_digit(cur->front, level, where + ".front", out);
        check_digit(cur->back, level, where + ".back", out);
        cur = cur->spine.get();
        ++level;
    }
    if (cur->tag == Seq::Tag::Unit)
        check_item(cur->single, level, "level" + std::to_string(level) + ".unit", out);
    return out;
}

}  // namespace amort
