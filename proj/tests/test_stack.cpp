#include <doctest.h>

#include <algorithm>
#include <vector>

#include "amort/harness.hpp"
#include "amort/stack.hpp"

using namespace amort;

namespace {

Stack<int> stack_of(std::initializer_list<int> bottom_to_top) {
    Stack<int> s;
    for (int v : bottom_to_top) s = push(v, s);
    return s;
}

}  // namespace

TEST_CASE("push") {
    const Stack<int> s1 = push(1, Stack<int>());
    CHECK(s1.to_list() == std::vector<int>{1});
    const Stack<int> s2 = push(2, s1);
    CHECK(s2.to_list() == std::vector<int>{2, 1});
    CHECK(s1.to_list() == std::vector<int>{1});  // shared tail untouched
    CHECK(s2.tail().to_list() == s1.to_list());
}

TEST_CASE("multipop") {
    const Stack<int> s = stack_of({1, 2, 3});  // [3,2,1] top first

    SUBCASE("k = 0 leaves the stack alone") {
        const auto [popped, rest] = multipop(0, s);
        CHECK(popped.empty());
        CHECK(rest.to_list() == s.to_list());
    }
    SUBCASE("empty stack") {
        const auto [popped, rest] = multipop(5, Stack<int>());
        CHECK(popped.empty());
        CHECK(rest.empty());
    }
    SUBCASE("partial pop") {
        const auto [popped, rest] = multipop(2, s);
        CHECK(popped == std::vector<int>{3, 2});
        CHECK(rest.to_list() == std::vector<int>{1});
    }
    SUBCASE("negative count") {
        CHECK_THROWS_AS(multipop(-1, s), NegativeCount);
        CHECK_THROWS_AS(multipop_time(-1, s), NegativeCount);
    }
}

TEST_CASE("potential and timing") {
    CHECK(stack_phi(Stack<int>()) == 0);
    CHECK(stack_phi(stack_of({1})) == 1);
    CHECK(stack_phi(stack_of({1, 2, 3, 4, 5, 6, 7})) == 7);

    CHECK(push_time(9, Stack<int>()) == 1);
    CHECK(push_time(9, stack_of({1, 2, 3})) == 1);

    CHECK(multipop_time(4, Stack<int>()) == 1);
    CHECK(multipop_time(0, stack_of({1, 2})) == 1);
    CHECK(multipop_time(3, stack_of({1, 2, 3, 4, 5})) == 4);  // 1 + min(3, 5)
}

TEST_CASE("exhaustive small stacks: bounds and list model") {
    for (const Stack<int>& s : enumerate_stacks(8)) {
        const std::vector<int> model = s.to_list();
        const Units h = static_cast<Units>(model.size());

        // push bound is exactly 2
        CHECK(push_time(99, s) + stack_phi(push(99, s)) - stack_phi(s) == 2);
        // list-model prepend
        CHECK(push(99, s).to_list().size() == model.size() + 1);

        for (Units k = 0; k <= 10; ++k) {
            const auto [popped, rest] = multipop(k, s);
            const auto take = static_cast<std::size_t>(std::min(k, h));
            CHECK(popped == std::vector<int>(model.begin(), model.begin() + take));
            CHECK(rest.to_list() == std::vector<int>(model.begin() + take, model.end()));
            CHECK(multipop_time(k, s) == 1 + std::min(k, h));
            CHECK(multipop_time(k, s) + stack_phi(rest) - stack_phi(s) <= 2);
        }
    }
}

TEST_CASE("timing functions agree with instrumented execution") {
    for (const Stack<int>& s : enumerate_stacks(8)) {
        CostCounter pc;
        push_counted(7, s, pc);
        CHECK(pc.units == push_time(7, s));
        for (Units k = 0; k <= 10; ++k) {
            CostCounter mc;
            const auto counted = multipop_counted(k, s, mc);
            CHECK(mc.units == multipop_time(k, s));
            CHECK(counted.first == multipop(k, s).first);
        }
    }
}
