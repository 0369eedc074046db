#pragma once

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "amort/cost_core.hpp"
#include "amort/stack.hpp"  // CostCounter

namespace amort {

struct RankMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Binomial tree (min-heap order). Children are stored in strictly
// descending rank order: rank k-1 down to 0. A rank-k tree has exactly
// 2^k elements.
template <typename T>
struct BinTree {
    T root;
    std::vector<std::shared_ptr<const BinTree>> children;

    std::size_t rank() const { return children.size(); }
};

template <typename T>
using TreePtr = std::shared_ptr<const BinTree<T>>;

template <typename T>
TreePtr<T> singleton_tree(T value) {
    return std::make_shared<const BinTree<T>>(BinTree<T>{std::move(value), {}});
}

// Links two equal-rank trees; the bigger root becomes the first child of
// the smaller one. Ties go to the left tree.
template <typename T>
TreePtr<T> merge_tree(const TreePtr<T>& l, const TreePtr<T>& r) {
    if (l->rank() != r->rank())
        throw RankMismatch("merge_tree: ranks " + std::to_string(l->rank()) +
                           " vs " + std::to_string(r->rank()));
    const bool left_wins = l->root <= r->root;
    const TreePtr<T>& winner = left_wins ? l : r;
    const TreePtr<T>& loser = left_wins ? r : l;
    std::vector<TreePtr<T>> children;
    children.reserve(winner->children.size() + 1);
    children.push_back(loser);
    children.insert(children.end(), winner->children.begin(), winner->children.end());
    return std::make_shared<const BinTree<T>>(BinTree<T>{winner->root, std::move(children)});
}

// Positional forest: position i (from the front) holds either no tree or
// one tree of rank i. Persistent list; the empty tail is FEnd.
template <typename T>
class Forest {
    struct Node {
        TreePtr<T> tree;  // null at an F0 position
        std::shared_ptr<const Node> next;
    };

    std::shared_ptr<const Node> head_;

    explicit Forest(std::shared_ptr<const Node> head) : head_(std::move(head)) {}

public:
    Forest() = default;

    bool at_end() const { return head_ == nullptr; }
    bool occupied() const { return head_ != nullptr && head_->tree != nullptr; }
    const TreePtr<T>& front_tree() const { return head_->tree; }
    Forest rest() const { return Forest(head_->next); }

    static Forest prepend(TreePtr<T> tree, const Forest& rest) {
        return Forest(std::make_shared<const Node>(Node{std::move(tree), rest.head_}));
    }
};

template <typename T>
Forest<T> insert_tree(const TreePtr<T>& t, const Forest<T>& f) {
    if (f.at_end()) return Forest<T>::prepend(t, Forest<T>());
    if (!f.occupied()) return Forest<T>::prepend(t, f.rest());
    return Forest<T>::prepend(nullptr, insert_tree(merge_tree(t, f.front_tree()), f.rest()));
}

template <typename T>
Forest<T> heap_insert(T value, const Forest<T>& f) {
    return insert_tree(singleton_tree(std::move(value)), f);
}

// Potential: the number of trees in the forest.
template <typename T>
Units heap_phi(const Forest<T>& f) {
    Units count = 0;
    for (Forest<T> cur = f; !cur.at_end(); cur = cur.rest())
        if (cur.occupied()) ++count;
    return count;
}

// 1 + length of the leading run of occupied positions.
template <typename T>
Units insert_time(const TreePtr<T>&, const Forest<T>& f) {
    Units t = 1;
    for (Forest<T> cur = f; cur.occupied(); cur = cur.rest()) ++t;
    return t;
}

template <typename T>
Forest<T> insert_tree_counted(const TreePtr<T>& t, const Forest<T>& f,
                              CostCounter& counter) {
    counter.tick();
    if (f.at_end()) return Forest<T>::prepend(t, Forest<T>());
    if (!f.occupied()) return Forest<T>::prepend(t, f.rest());
    return Forest<T>::prepend(
        nullptr, insert_tree_counted(merge_tree(t, f.front_tree()), f.rest(), counter));
}

// Every (tree, subforest) pair the insertion recursion visits, so the
// amortized bound can be checked at each depth.
template <typename T>
std::vector<std::pair<TreePtr<T>, Forest<T>>> insert_recursion_pairs(
    const TreePtr<T>& t, const Forest<T>& f) {
    std::vector<std::pair<TreePtr<T>, Forest<T>>> pairs;
    TreePtr<T> cur = t;
    Forest<T> rest = f;
    pairs.emplace_back(cur, rest);
    while (rest.occupied()) {
        cur = merge_tree(cur, rest.front_tree());
        rest = rest.rest();
        pairs.emplace_back(cur, rest);
    }
    return pairs;
}

// Occupancy bits, least significant (rank 0) first.
template <typename T>
std::vector<int> occupancy(const Forest<T>& f) {
    std::vector<int> bits;
    for (Forest<T> cur = f; !cur.at_end(); cur = cur.rest())
        bits.push_back(cur.occupied() ? 1 : 0);
    return bits;
}

template <typename T>
void collect_elements(const TreePtr<T>& t, std::vector<T>& out) {
    out.push_back(t->root);
    for (const auto& child : t->children) collect_elements(child, out);
}

template <typename T>
std::vector<T> heap_elements(const Forest<T>& f) {
    std::vector<T> out;
    for (Forest<T> cur = f; !cur.at_end(); cur = cur.rest())
        if (cur.occupied()) collect_elements(cur.front_tree(), out);
    return out;
}

template <typename T>
std::size_t tree_size(const TreePtr<T>& t) {
    std::size_t n = 1;
    for (const auto& child : t->children) n += tree_size(child);
    return n;
}

namespace detail {

template <typename T>
void validate_tree(const TreePtr<T>& t, std::size_t expected_rank,
                   const std::string& where, std::vector<std::string>& out) {
    if (t->rank() != expected_rank)
        out.push_back(where + ": rank " + std::to_string(t->rank()) +
                      ", expected " + std::to_string(expected_rank));
    for (std::size_t i = 0; i < t->children.size(); ++i) {
        const auto& child = t->children[i];
        if (child->root < t->root)
            out.push_back(where + ": heap order violated at child " + std::to_string(i));
        // child i must have rank (k-1-i)
        const std::size_t child_rank =
            t->children.size() >= i + 1 ? t->children.size() - 1 - i : 0;
        validate_tree(child, child_rank, where + "/" + std::to_string(i), out);
    }
    if (t->rank() == expected_rank) {
        const std::size_t expected_size = std::size_t{1} << expected_rank;
        if (tree_size(t) != expected_size)
            out.push_back(where + ": size " + std::to_string(tree_size(t)) +
                          ", expected " + std::to_string(expected_size));
    }
}

}  // namespace detail

// Runtime replacement for a correct-by-construction shape discipline:
// positional ranks, descending child ranks, heap order, 2^k sizes.
template <typename T>
std::vector<std::string> validate_heap(const Forest<T>& f) {
    std::vector<std::string> violations;
    std::size_t position = 0;
    for (Forest<T> cur = f; !cur.at_end(); cur = cur.rest(), ++position) {
        if (cur.occupied())
            detail::validate_tree(cur.front_tree(), position,
                                  "pos" + std::to_string(position), violations);
    }
    return violations;
}

}  // namespace amort
