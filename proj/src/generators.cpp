#include "amort/harness.hpp"

#include <algorithm>
#include <memory>

namespace amort {

std::vector<Stack<int>> enumerate_stacks(int max_height) {
    std::vector<Stack<int>> out;
    Stack<int> s;
    out.push_back(s);
    for (int h = 1; h <= max_height; ++h) {
        s = push(h - 1, s);
        out.push_back(s);
    }
    return out;
}

std::vector<std::vector<int>> heap_insert_orders(std::int64_t n, std::uint64_t seed) {
    std::vector<int> ascending(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) ascending[static_cast<std::size_t>(i)] = static_cast<int>(i);

    std::vector<int> descending(ascending.rbegin(), ascending.rend());

    std::vector<int> shuffled = ascending;
    std::mt19937_64 rng(seed);
    for (std::size_t i = shuffled.size(); i > 1; --i)
        std::swap(shuffled[i - 1], shuffled[rng() % i]);

    std::vector<int> duplicates(static_cast<std::size_t>(n), 7);

    return {ascending, descending, shuffled, duplicates};
}

namespace {

struct SeqShape {
    enum class Tag { Nil, Unit, More } tag = Tag::Nil;
    int front = 0;
    int back = 0;
    std::shared_ptr<const SeqShape> spine;
};
using ShapePtr = std::shared_ptr<const SeqShape>;

std::vector<ShapePtr> enumerate_shapes(int max_depth) {
    std::vector<ShapePtr> out;
    out.push_back(std::make_shared<const SeqShape>(SeqShape{SeqShape::Tag::Nil, 0, 0, nullptr}));
    out.push_back(std::make_shared<const SeqShape>(SeqShape{SeqShape::Tag::Unit, 0, 0, nullptr}));
    if (max_depth == 0) return out;
    for (const ShapePtr& spine : enumerate_shapes(max_depth - 1))
        for (int f = 1; f <= 3; ++f)
            for (int b = 1; b <= 3; ++b)
                out.push_back(std::make_shared<const SeqShape>(
                    SeqShape{SeqShape::Tag::More, f, b, spine}));
    return out;
}

// variant 0: pairs everywhere; variant 1: alternate pair/triple.
struct ItemBuilder {
    std::int64_t next_label = 0;
    int tuple_counter = 0;
    int variant = 0;

    ItemPtr build(int level) {
        if (level == 0) return leaf(next_label++);
        const int arity = variant == 0 ? 2 : (tuple_counter++ % 2 == 0 ? 2 : 3);
        if (arity == 2) {
            ItemPtr a = build(level - 1);
            ItemPtr b = build(level - 1);
            return tuple_pair(std::move(a), std::move(b));
        }
        ItemPtr a = build(level - 1);
        ItemPtr b = build(level - 1);
        ItemPtr c = build(level - 1);
        return tuple_triple(std::move(a), std::move(b), std::move(c));
    }

    Digit digit(int size, int level) {
        std::vector<ItemPtr> items;
        for (int i = 0; i < size; ++i) items.push_back(build(level));
        return make_digit(std::move(items));
    }
};

SeqPtr build_seq(const ShapePtr& shape, int level, ItemBuilder& builder) {
    switch (shape->tag) {
        case SeqShape::Tag::Nil:
            return nil_seq();
        case SeqShape::Tag::Unit:
            return unit_seq(builder.build(level));
        case SeqShape::Tag::More: {
            Digit front = builder.digit(shape->front, level);
            SeqPtr spine = build_seq(shape->spine, level + 1, builder);
            Digit back = builder.digit(shape->back, level);
            return more_seq(std::move(front), std::move(spine), std::move(back));
        }
    }
    return nil_seq();
}

}  // namespace

std::vector<SeqPtr> enumerate_seqs(int max_depth) {
    std::vector<SeqPtr> out;
    for (const ShapePtr& shape : enumerate_shapes(max_depth)) {
        for (int variant = 0; variant < 2; ++variant) {
            ItemBuilder builder;
            builder.variant = variant;
            out.push_back(build_seq(shape, 0, builder));
        }
    }
    return out;
}

Script random_script(StructureKind kind, std::int64_t len, std::mt19937_64& rng) {
    Script script;
    std::int64_t label = 0;
    for (std::int64_t i = 0; i < len; ++i) {
        switch (kind) {
            case StructureKind::Stack: {
                if (rng() % 10 < 7)
                    script.push_back({"push", label++, true});
                else
                    script.push_back({"multipop", static_cast<std::int64_t>(rng() % 7), true});
                break;
            }
            case StructureKind::Heap:
                // small value range with duplicates, to hit the tie branch
                script.push_back({"insert", static_cast<std::int64_t>(rng() % 10), true});
                break;
            case StructureKind::FingerTree: {
                const std::uint64_t roll = rng() % 10;
                if (roll < 4)
                    script.push_back({"cons", label++, true});
                else if (roll < 8)
                    script.push_back({"snoc", label++, true});
                else if (roll < 9)
                    script.push_back({rng() % 2 == 0 ? "scons" : "ssnoc", label++, true});
                else
                    script.push_back({"append", 0, false});
                break;
            }
        }
    }
    return script;
}

}  // namespace amort
