#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "amort/cost_core.hpp"
#include "amort/stack.hpp"  // CostCounter

namespace amort {

struct LengthContract : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An element of a finger-tree level: either a labelled leaf or a tuple
// (pair/triple) of elements one nesting level down. The host language has
// no polymorphic recursion, so uniform nesting is a dynamic invariant
// checked by validate_seq.
struct Item;
using ItemPtr = std::shared_ptr<const Item>;

struct Item {
    std::int64_t label = 0;       // meaningful for leaves only
    std::vector<ItemPtr> parts;   // empty: leaf; 2: pair; 3: triple

    bool is_leaf() const { return parts.empty(); }
};

ItemPtr leaf(std::int64_t label);
ItemPtr tuple_pair(ItemPtr a, ItemPtr b);
ItemPtr tuple_triple(ItemPtr a, ItemPtr b, ItemPtr c);

bool item_equal(const ItemPtr& a, const ItemPtr& b);
void flatten_item(const ItemPtr& item, std::vector<std::int64_t>& out);

// 1 to 3 elements at one end of a level.
struct Digit {
    std::vector<ItemPtr> items;
};

Digit make_digit(std::vector<ItemPtr> items);  // throws LengthContract

struct Seq;
using SeqPtr = std::shared_ptr<const Seq>;

struct Seq {
    enum class Tag { Nil, Unit, More };

    Tag tag = Tag::Nil;
    ItemPtr single;  // Unit
    Digit front;     // More
    SeqPtr spine;    // More, elements one nesting level deeper
    Digit back;      // More
};

SeqPtr nil_seq();
SeqPtr unit_seq(ItemPtr x);
SeqPtr more_seq(Digit front, SeqPtr spine, Digit back);

// Digit potential: One and Three are dangerous (they force recursion), Two
// is safe.
Units danger(const Digit& d);

// Sum of digit dangers over all More levels; 0 on Nil and Unit.
Units seq_phi(const SeqPtr& q);

SeqPtr cons(const ItemPtr& x, const SeqPtr& q);
SeqPtr snoc(const SeqPtr& q, const ItemPtr& x);
Units cons_time(const ItemPtr& x, const SeqPtr& q);
Units snoc_time(const SeqPtr& q, const ItemPtr& x);

SeqPtr cons_counted(const ItemPtr& x, const SeqPtr& q, CostCounter& counter);
SeqPtr snoc_counted(const SeqPtr& q, const ItemPtr& x, CostCounter& counter);

std::vector<ItemPtr> digit_items(const Digit& d);

// Packs 2..9 elements into 1..3 pair/triple tuples, preserving order.
std::vector<ItemPtr> to_tuples(const std::vector<ItemPtr>& xs);
// Same but also accepts the empty list; rejects length 1 and > 9.
std::vector<ItemPtr> to_tuples_prime(const std::vector<ItemPtr>& xs);

// Concatenation with at most three loose elements in the middle.
SeqPtr glue(const SeqPtr& q1, const std::vector<ItemPtr>& mid, const SeqPtr& q2);
Units glue_time(const SeqPtr& q1, const std::vector<ItemPtr>& mid, const SeqPtr& q2);
SeqPtr glue_counted(const SeqPtr& q1, const std::vector<ItemPtr>& mid,
                    const SeqPtr& q2, CostCounter& counter);

SeqPtr append(const SeqPtr& q1, const SeqPtr& q2);

// Floor of the base-2 logarithm; n must be >= 1.
Units log2_floor(Units n);

// Unnests one tuple level: 2|xs| <= |result| <= 3|xs|.
std::vector<ItemPtr> tuples_to_list(const std::vector<ItemPtr>& xs);

// Elements of q at q's own nesting level, in order.
std::vector<ItemPtr> seq_to_list(const SeqPtr& q);

// Fully flattened leaf labels, in order.
std::vector<std::int64_t> seq_labels(const SeqPtr& q);

// Dynamic shape check: digit/tuple arities and uniform nesting depth.
std::vector<std::string> validate_seq(const SeqPtr& q);

// List machinery mirrored in-library so the timing functions below can
// reference it.
template <typename T>
std::vector<T> list_append(const std::vector<T>& xs, const std::vector<T>& ys) {
    std::vector<T> out;
    out.reserve(xs.size() + ys.size());
    out.insert(out.end(), xs.begin(), xs.end());
    out.insert(out.end(), ys.begin(), ys.end());
    return out;
}

template <typename B, typename X, typename F>
B foldl_list(F f, B acc, std::span<const X> xs) {
    for (const X& x : xs) acc = f(acc, x);
    return acc;
}

template <typename B, typename X, typename F>
B foldr_list(F f, const B& base, std::span<const X> xs) {
    if (xs.empty()) return base;
    return f(xs.front(), foldr_list(f, base, xs.subspan(1)));
}

// Cost of a right fold: each element pays the element operation's cost
// against the already-folded tail, plus one unit for the base clause.
template <typename B, typename X, typename F, typename FT>
Units foldr_time(F f, FT ft, const B& base, std::span<const X> xs) {
    if (xs.empty()) return 1;
    auto rest = xs.subspan(1);
    return ft(xs.front(), foldr_list(f, base, rest)) + foldr_time(f, ft, base, rest);
}

template <typename B, typename X, typename F, typename FT>
Units foldl_time(F f, FT ft, const B& acc, std::span<const X> xs) {
    if (xs.empty()) return 1;
    return ft(acc, xs.front()) + foldl_time(f, ft, f(acc, xs.front()), xs.subspan(1));
}

}  // namespace amort
