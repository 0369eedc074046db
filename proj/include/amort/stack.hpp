#pragma once

#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "amort/cost_core.hpp"

namespace amort {

struct NegativeCount : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Counts one abstract time unit per clause entry of an instrumented
// operation. Shared by all structures.
struct CostCounter {
    Units units = 0;
    void tick() { ++units; }
};

// Immutable cons-list stack. Copies share structure.
template <typename T>
class Stack {
    struct Node {
        T value;
        std::shared_ptr<const Node> next;
    };

    std::shared_ptr<const Node> head_;

    explicit Stack(std::shared_ptr<const Node> head) : head_(std::move(head)) {}

public:
    Stack() = default;

    bool empty() const { return head_ == nullptr; }
    const T& top() const { return head_->value; }
    Stack tail() const { return Stack(head_->next); }

    Stack pushed(T x) const {
        return Stack(std::make_shared<const Node>(Node{std::move(x), head_}));
    }

    Units height() const {
        Units h = 0;
        for (const Node* n = head_.get(); n != nullptr; n = n->next.get()) ++h;
        return h;
    }

    std::vector<T> to_list() const {  // top first
        std::vector<T> out;
        for (const Node* n = head_.get(); n != nullptr; n = n->next.get())
            out.push_back(n->value);
        return out;
    }
};

template <typename T>
Stack<T> push(const T& x, const Stack<T>& s) {
    return s.pushed(x);
}

template <typename T>
std::pair<std::vector<T>, Stack<T>> multipop(Units k, const Stack<T>& s) {
    if (k < 0) throw NegativeCount("multipop: negative count");
    std::vector<T> popped;
    Stack<T> rest = s;
    while (k > 0 && !rest.empty()) {
        popped.push_back(rest.top());
        rest = rest.tail();
        --k;
    }
    return {std::move(popped), std::move(rest)};
}

// Potential: the height of the stack.
template <typename T>
Units stack_phi(const Stack<T>& s) {
    return s.height();
}

template <typename T>
Units push_time(const T&, const Stack<T>&) {
    return 1;
}

// 1 + min(k, height): one unit per clause entry of multipop.
template <typename T>
Units multipop_time(Units k, const Stack<T>& s) {
    if (k < 0) throw NegativeCount("multipop_time: negative count");
    Units t = 1;
    Stack<T> rest = s;
    while (k > 0 && !rest.empty()) {
        ++t;
        rest = rest.tail();
        --k;
    }
    return t;
}

template <typename T>
Stack<T> push_counted(const T& x, const Stack<T>& s, CostCounter& counter) {
    counter.tick();
    return push(x, s);
}

template <typename T>
std::pair<std::vector<T>, Stack<T>> multipop_counted(Units k, const Stack<T>& s,
                                                     CostCounter& counter) {
    if (k < 0) throw NegativeCount("multipop_counted: negative count");
    std::vector<T> popped;
    Stack<T> rest = s;
    while (k > 0 && !rest.empty()) {
        counter.tick();
        popped.push_back(rest.top());
        rest = rest.tail();
        --k;
    }
    counter.tick();  // base clause
    return {std::move(popped), std::move(rest)};
}

}  // namespace amort
