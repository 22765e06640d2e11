#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "enumorder/tobst.hpp"
#include "enumorder/uniformity.hpp"

using namespace eo;

namespace {

Listing random_listing(std::mt19937_64& rng, std::size_t n, Value limit) {
    std::vector<Value> pool(limit);
    std::iota(pool.begin(), pool.end(), Value{1});
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(n);
    return Listing(std::move(pool));
}

std::vector<std::vector<Value>> all_permutations(std::size_t n) {
    std::vector<Value> base(n);
    std::iota(base.begin(), base.end(), Value{1});
    std::vector<std::vector<Value>> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

}  // namespace

TEST_CASE("tobst_insert places nodes by value") {
    Tobst t;
    Tobst one = t.insert(1, 7);
    CHECK(one.size() == 1);
    CHECK(one.root()->step == 1);
    CHECK(one.root()->value == 7);

    Tobst left = one.insert(2, 2);
    REQUIRE(left.root()->left);
    CHECK(left.root()->left->value == 2);
    CHECK_FALSE(left.root()->right);

    Tobst right = one.insert(2, 14);
    REQUIRE(right.root()->right);
    CHECK(right.root()->right->value == 14);

    // persistence: `one` is untouched by both inserts
    CHECK(one.size() == 1);
    CHECK_FALSE(one.root()->left);
    CHECK_FALSE(one.root()->right);

    CHECK_THROWS_AS(one.insert(2, 7), DuplicateValue);
    CHECK_THROWS_AS(one.insert(3, 4), StepGap);
}

TEST_CASE("tobst_build shapes of the three Example 5.1 listings") {
    // ascending: right chain
    auto asc = tobst_build(Listing({1, 2, 3, 4, 5}));
    CHECK(shape_encode(asc.back()).encoding == "(,(,(,(,(,)))))");

    // descending: left chain
    auto desc = tobst_build(Listing({5, 4, 3, 2, 1}));
    CHECK(shape_encode(desc.back()).encoding == "(((((,),),),),)");

    // 3,5,4,1,2: root 3; left 1 with right 2; right 5 with left 4
    auto mid = tobst_build(Listing({3, 5, 4, 1, 2}));
    const auto& root = mid.back().root();
    CHECK(root->value == 3);
    REQUIRE(root->left);
    CHECK(root->left->value == 1);
    REQUIRE(root->left->right);
    CHECK(root->left->right->value == 2);
    REQUIRE(root->right);
    CHECK(root->right->value == 5);
    REQUIRE(root->right->left);
    CHECK(root->right->left->value == 4);
}

TEST_CASE("shape_encode") {
    CHECK(shape_encode(Tobst{}).encoding == "");
    CHECK(shape_encode(Tobst{}.insert(1, 7)).encoding == "(,)");
    CHECK(shape_encode(tobst_build(Listing({1, 2, 3})).back()) ==
          shape_encode(tobst_build(Listing({4, 7, 9})).back()));
}

TEST_CASE("isomorphic_at_step on the Example 5.3 pair") {
    Listing h1({7, 2, 5, 6, 14});
    Listing h2({6, 8, 1, 2, 5});
    CHECK(isomorphic_at_step(h1, h2, 1));
    CHECK_FALSE(isomorphic_at_step(h1, h2, 2));
    CHECK_FALSE(isomorphic_at_step(h1, h2, 3));
    CHECK_FALSE(isomorphic_at_step(h1, h2, 4));
    CHECK(isomorphic_at_step(h1, h2, 5));
    CHECK_THROWS_AS(isomorphic_at_step(h1, h2, 6), OutOfRange);
}

TEST_CASE("uniform_via_tobst") {
    CHECK(uniform_via_tobst(Listing({2, 4, 6, 8}), Listing({3, 5, 7, 9})));
    CHECK_FALSE(uniform_via_tobst(Listing({7, 2, 5, 6, 14}), Listing({6, 8, 1, 2, 5})));
    CHECK_FALSE(uniform_via_tobst(Listing({1, 2}), Listing({2, 1})));
    CHECK(uniform_via_tobst(Listing{}, Listing{}));
    CHECK_THROWS_AS(uniform_via_tobst(Listing({1}), Listing({1, 2})), LengthMismatch);
}

TEST_CASE("spine_kind") {
    CHECK(spine_kind(tobst_build(Listing({1, 2, 3, 4, 5})).back()) ==
          SpineKind::RightSpine);
    CHECK(spine_kind(tobst_build(Listing({5, 4, 3, 2, 1})).back()) ==
          SpineKind::LeftSpine);
    CHECK(spine_kind(tobst_build(Listing({3, 5, 4, 1, 2})).back()) ==
          SpineKind::Neither);
    CHECK(spine_kind(Tobst{}) == SpineKind::Both);
    CHECK(spine_kind(Tobst{}.insert(1, 9)) == SpineKind::Both);
}

TEST_CASE("export_dot") {
    CHECK(export_dot(Tobst{}) == "digraph tobst {\n}\n");

    std::string single = export_dot(Tobst{}.insert(1, 7));
    CHECK(single == "digraph tobst {\n  n0 [label=\"1:7\"];\n}\n");

    std::string two = export_dot(tobst_build(Listing({7, 2})).back());
    CHECK(two ==
          "digraph tobst {\n"
          "  n0 [label=\"1:7\"];\n"
          "  n1 [label=\"2:2\"];\n"
          "  n0 -> n1 [label=\"L\"];\n"
          "}\n");
}

TEST_CASE("in-order traversal of every snapshot is sorted") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        Listing h = random_listing(rng, rng() % 40, 200);
        auto snapshots = tobst_build(h);
        for (std::size_t i = 0; i < snapshots.size(); ++i) {
            std::vector<Value> expect(h.values().begin(),
                                      h.values().begin() + static_cast<long>(i + 1));
            std::sort(expect.begin(), expect.end());
            CHECK(snapshots[i].in_order_values() == expect);
        }
    }
}

TEST_CASE("snapshot i depends only on the length-i prefix") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 50; ++trial) {
        Listing h = random_listing(rng, 5 + rng() % 10, 60);
        std::size_t i = 1 + rng() % h.size();
        auto full = tobst_build(h);
        auto pre = tobst_build(h.prefix(i));
        CHECK(shape_encode(full[i - 1]) == shape_encode(pre.back()));
        CHECK(full[i - 1].in_order_values() == pre.back().in_order_values());
    }
}

TEST_CASE("equal prefix patterns force isomorphic snapshots") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 8;
        Listing h = random_listing(rng, n, 30);
        Listing g = random_listing(rng, n, 30);
        for (std::size_t i = 1; i <= n; ++i)
            if (order_pattern(h.prefix(i)) == order_pattern(g.prefix(i)))
                CHECK(isomorphic_at_step(h, g, i));
    }
}

TEST_CASE("Prop 5.5 equivalence on all permutation pairs, n <= 4") {
    for (std::size_t n = 1; n <= 4; ++n) {
        auto perms = all_permutations(n);
        for (const auto& a : perms)
            for (const auto& b : perms) {
                Listing h{std::vector<Value>(a)};
                Listing g{std::vector<Value>(b)};
                CHECK(uniform_via_tobst(h, g) == uniform_prefix(h, g).uniform());
            }
    }
}

TEST_CASE("step-5 isomorphism does not imply uniformity") {
    Listing h1({7, 2, 5, 6, 14});
    Listing h2({6, 8, 1, 2, 5});
    CHECK(isomorphic_at_step(h1, h2, 5));
    CHECK(uniform_prefix(h1, h2).kind == VerdictKind::NotUniform);
}
