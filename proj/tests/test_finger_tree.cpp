#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

#include "amort/finger_tree.hpp"
#include "amort/harness.hpp"

using namespace amort;

namespace {

std::vector<ItemPtr> leaves(std::initializer_list<std::int64_t> labels) {
    std::vector<ItemPtr> out;
    for (std::int64_t v : labels) out.push_back(leaf(v));
    return out;
}

std::vector<std::int64_t> labels_of(const std::vector<ItemPtr>& items) {
    std::vector<std::int64_t> out;
    for (const ItemPtr& item : items) flatten_item(item, out);
    return out;
}

SeqPtr seq_of(std::initializer_list<std::int64_t> labels) {
    SeqPtr q = nil_seq();
    for (std::int64_t v : labels) q = snoc(q, leaf(v));
    return q;
}

}  // namespace

TEST_CASE("cons base cases") {
    const SeqPtr u = cons(leaf(1), nil_seq());
    CHECK(u->tag == Seq::Tag::Unit);
    CHECK(seq_labels(u) == std::vector<std::int64_t>{1});

    const SeqPtr m = cons(leaf(0), u);
    REQUIRE(m->tag == Seq::Tag::More);
    CHECK(m->front.items.size() == 1);
    CHECK(m->back.items.size() == 1);
    CHECK(m->spine->tag == Seq::Tag::Nil);
    CHECK(seq_labels(m) == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("cons into a full front digit pushes a pair down") {
    SeqPtr q = more_seq(make_digit(leaves({1, 2, 3})), nil_seq(),
                        make_digit(leaves({4})));
    const SeqPtr r = cons(leaf(0), q);
    REQUIRE(r->tag == Seq::Tag::More);
    CHECK(r->front.items.size() == 2);
    CHECK(r->spine->tag == Seq::Tag::Unit);
    CHECK(r->spine->single->parts.size() == 2);  // Pair(2,3)
    CHECK(seq_labels(r) == std::vector<std::int64_t>{0, 1, 2, 3, 4});
    CHECK(validate_seq(r).empty());

    CHECK(cons_time(leaf(0), q) == 2);  // one recursion into the Nil spine
    CHECK(cons_time(leaf(0), nil_seq()) == 1);
}

TEST_CASE("snoc mirrors cons") {
    CHECK(snoc(nil_seq(), leaf(1))->tag == Seq::Tag::Unit);
    const SeqPtr m = snoc(unit_seq(leaf(1)), leaf(2));
    REQUIRE(m->tag == Seq::Tag::More);
    CHECK(seq_labels(m) == std::vector<std::int64_t>{1, 2});
    CHECK(snoc_time(nil_seq(), leaf(1)) == 1);

    SeqPtr q = more_seq(make_digit(leaves({0})), nil_seq(), make_digit(leaves({1, 2, 3})));
    const SeqPtr r = snoc(q, leaf(4));
    CHECK(r->back.items.size() == 2);
    CHECK(r->spine->tag == Seq::Tag::Unit);
    CHECK(seq_labels(r) == std::vector<std::int64_t>{0, 1, 2, 3, 4});
    CHECK(snoc_time(q, leaf(4)) == 2);
}

TEST_CASE("danger and phi") {
    CHECK(danger(make_digit(leaves({1}))) == 1);
    CHECK(danger(make_digit(leaves({1, 2}))) == 0);
    CHECK(danger(make_digit(leaves({1, 2, 3}))) == 1);

    CHECK(seq_phi(nil_seq()) == 0);
    CHECK(seq_phi(unit_seq(leaf(1))) == 0);
    CHECK(seq_phi(more_seq(make_digit(leaves({0})), nil_seq(),
                           make_digit(leaves({1, 2})))) == 1);

    // three More levels, all (Two, Two) digits
    SeqPtr level2 = more_seq(
        make_digit({tuple_pair(tuple_pair(leaf(0), leaf(1)), tuple_pair(leaf(2), leaf(3))),
                    tuple_pair(tuple_pair(leaf(4), leaf(5)), tuple_pair(leaf(6), leaf(7)))}),
        nil_seq(),
        make_digit({tuple_pair(tuple_pair(leaf(8), leaf(9)), tuple_pair(leaf(10), leaf(11))),
                    tuple_pair(tuple_pair(leaf(12), leaf(13)), tuple_pair(leaf(14), leaf(15)))}));
    SeqPtr level1 = more_seq(
        make_digit({tuple_pair(leaf(16), leaf(17)), tuple_pair(leaf(18), leaf(19))}),
        level2,
        make_digit({tuple_pair(leaf(20), leaf(21)), tuple_pair(leaf(22), leaf(23))}));
    SeqPtr level0 = more_seq(make_digit(leaves({24, 25})), level1,
                             make_digit(leaves({26, 27})));
    CHECK(seq_phi(level0) == 0);
    CHECK(validate_seq(level0).empty());
}

TEST_CASE("to_tuples and to_tuples_prime") {
    CHECK(to_tuples_prime({}).empty());

    const auto two = to_tuples(leaves({0, 1}));
    REQUIRE(two.size() == 1);
    CHECK(two[0]->parts.size() == 2);

    const auto four = to_tuples(leaves({0, 1, 2, 3}));
    REQUIRE(four.size() == 2);
    CHECK(four[0]->parts.size() == 2);
    CHECK(four[1]->parts.size() == 2);

    const auto five = to_tuples(leaves({0, 1, 2, 3, 4}));
    REQUIRE(five.size() == 2);
    CHECK(five[0]->parts.size() == 3);
    CHECK(five[1]->parts.size() == 2);

    const auto six = to_tuples(leaves({0, 1, 2, 3, 4, 5}));
    REQUIRE(six.size() == 2);
    CHECK(six[0]->parts.size() == 3);
    CHECK(six[1]->parts.size() == 3);

    const auto nine = to_tuples(leaves({0, 1, 2, 3, 4, 5, 6, 7, 8}));
    REQUIRE(nine.size() == 3);
    for (const auto& t : nine) CHECK(t->parts.size() == 3);
    CHECK(labels_of(nine) == std::vector<std::int64_t>{0, 1, 2, 3, 4, 5, 6, 7, 8});

    CHECK_THROWS_AS(to_tuples(leaves({0})), LengthContract);
    CHECK_THROWS_AS(to_tuples(leaves({})), LengthContract);
    CHECK_THROWS_AS(to_tuples_prime(leaves({0})), LengthContract);
    CHECK_THROWS_AS(to_tuples_prime(std::vector<ItemPtr>(10, leaf(0))), LengthContract);
}

TEST_CASE("glue and append") {
    SUBCASE("nil left folds onto the right") {
        const SeqPtr r = glue(nil_seq(), leaves({1, 2}), seq_of({3, 4}));
        CHECK(seq_labels(r) == std::vector<std::int64_t>{1, 2, 3, 4});
    }
    SUBCASE("two units") {
        const SeqPtr r = glue(unit_seq(leaf(1)), {}, unit_seq(leaf(2)));
        REQUIRE(r->tag == Seq::Tag::More);
        CHECK(r->front.items.size() == 1);
        CHECK(r->back.items.size() == 1);
        CHECK(seq_labels(r) == std::vector<std::int64_t>{1, 2});
    }
    SUBCASE("middle list too long") {
        CHECK_THROWS_AS(glue(nil_seq(), leaves({1, 2, 3, 4}), nil_seq()), LengthContract);
        CHECK_THROWS_AS(glue_time(nil_seq(), leaves({1, 2, 3, 4}), nil_seq()), LengthContract);
    }
    SUBCASE("append identities") {
        const SeqPtr q = seq_of({1, 2, 3, 4, 5});
        CHECK(seq_labels(append(nil_seq(), q)) == seq_labels(q));
        CHECK(seq_labels(append(q, nil_seq())) == seq_labels(q));
    }
    SUBCASE("append equals list concatenation on random pairs") {
        std::mt19937_64 rng(11);
        for (int round = 0; round < 200; ++round) {
            SeqPtr a = nil_seq();
            SeqPtr b = nil_seq();
            std::vector<std::int64_t> model_a, model_b;
            const std::size_t na = rng() % 40;
            const std::size_t nb = rng() % 40;
            for (std::size_t i = 0; i < na; ++i) {
                a = snoc(a, leaf(static_cast<std::int64_t>(i)));
                model_a.push_back(static_cast<std::int64_t>(i));
            }
            for (std::size_t i = 0; i < nb; ++i) {
                b = cons(leaf(1000 + static_cast<std::int64_t>(i)), b);
                model_b.insert(model_b.begin(), 1000 + static_cast<std::int64_t>(i));
            }
            std::vector<std::int64_t> expected = model_a;
            expected.insert(expected.end(), model_b.begin(), model_b.end());
            CHECK(seq_labels(append(a, b)) == expected);
            CHECK(validate_seq(append(a, b)).empty());
        }
    }
}

TEST_CASE("folds and their timing") {
    const auto f_cons = [](const ItemPtr& x, const SeqPtr& acc) { return cons(x, acc); };
    const auto t_cons = [](const ItemPtr& x, const SeqPtr& acc) { return cons_time(x, acc); };
    const auto f_snoc = [](const SeqPtr& acc, const ItemPtr& x) { return snoc(acc, x); };
    const auto t_snoc = [](const SeqPtr& acc, const ItemPtr& x) { return snoc_time(acc, x); };

    const std::vector<ItemPtr> empty;
    const std::vector<ItemPtr> one = leaves({7});
    const std::vector<ItemPtr> two = leaves({7, 8});

    const SeqPtr q = seq_of({1, 2, 3});
    CHECK(foldr_time(f_cons, t_cons, q, std::span<const ItemPtr>(empty)) == 1);
    CHECK(foldr_time(f_cons, t_cons, nil_seq(), std::span<const ItemPtr>(one)) == 2);
    CHECK(foldl_time(f_snoc, t_snoc, nil_seq(), std::span<const ItemPtr>(two)) == 3);

    // foldr cons q [] == q
    CHECK(foldr_list(f_cons, q, std::span<const ItemPtr>(empty)) == q);
    CHECK(seq_labels(foldr_list(f_cons, q, std::span<const ItemPtr>(two))) ==
          std::vector<std::int64_t>{7, 8, 1, 2, 3});
    CHECK(seq_labels(foldl_list(f_snoc, q, std::span<const ItemPtr>(two))) ==
          std::vector<std::int64_t>{1, 2, 3, 7, 8});
}

TEST_CASE("glue_time base cases") {
    CHECK(glue_time(nil_seq(), {}, nil_seq()) == 2);
    CHECK(glue_time(unit_seq(leaf(1)), {}, unit_seq(leaf(2))) == 3);
}

TEST_CASE("log2_floor") {
    CHECK(log2_floor(1) == 0);
    CHECK(log2_floor(2) == 1);
    CHECK(log2_floor(9) == 3);
    CHECK_THROWS_AS(log2_floor(0), DomainError);
    CHECK_THROWS_AS(log2_floor(-5), DomainError);
}

TEST_CASE("tuples_to_list and seq_to_list") {
    CHECK(tuples_to_list({}).empty());
    const auto flat = tuples_to_list({tuple_pair(leaf(1), leaf(2))});
    REQUIRE(flat.size() == 2);
    CHECK(flat[0]->label == 1);

    const SeqPtr m = more_seq(make_digit(leaves({1})), nil_seq(), make_digit(leaves({2})));
    const auto items = seq_to_list(m);
    REQUIRE(items.size() == 2);
    CHECK(items[0]->label == 1);
    CHECK(items[1]->label == 2);

    CHECK_THROWS(tuples_to_list(leaves({1})));  // a leaf is not a tuple
}

TEST_CASE("validate_seq rejects uneven nesting") {
    // back digit holds a bare leaf where a one-level tuple is required
    SeqPtr bad = more_seq(make_digit({tuple_pair(leaf(0), leaf(1))}), nil_seq(),
                          make_digit(leaves({2})));
    SeqPtr outer = more_seq(make_digit(leaves({9})), unit_seq(tuple_pair(leaf(3), leaf(4))),
                            make_digit(leaves({5})));
    CHECK(validate_seq(outer).empty());
    SeqPtr wrapped = more_seq(make_digit(leaves({9})), bad, make_digit(leaves({5})));
    CHECK(!validate_seq(wrapped).empty());
}

TEST_CASE("cons/snoc/glue bounds on random structures") {
    std::mt19937_64 rng(5);
    SeqPtr q = nil_seq();
    for (int i = 0; i < 400; ++i) {
        const ItemPtr x = leaf(i);
        if (rng() % 2 == 0) {
            CHECK(cons_time(x, q) + seq_phi(cons(x, q)) - seq_phi(q) <= 3);
            q = cons(x, q);
        } else {
            CHECK(snoc_time(q, x) + seq_phi(snoc(q, x)) - seq_phi(q) <= 3);
            q = snoc(q, x);
        }
    }
    CHECK(validate_seq(q).empty());
}
