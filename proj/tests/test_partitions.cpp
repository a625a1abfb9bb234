#include <catch2/catch_amalgamated.hpp>

#include "qtknots/errors.hpp"
#include "qtknots/partition.hpp"
#include "support.hpp"

using namespace qtknots;
using namespace qtknots::test;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}  // namespace

TEST_CASE("partitions_of", "[partitions]") {
    auto three = partitions_of(3);
    REQUIRE(three.size() == 3);
    CHECK(three[0] == P({3}));
    CHECK(three[1] == P({2, 1}));
    CHECK(three[2] == P({1, 1, 1}));

    auto zero = partitions_of(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].size() == 0);
    CHECK(zero[0].length() == 0);

    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(8).size() == 22);
}

TEST_CASE("partition validation and keys", "[partitions]") {
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({2, 0}), std::invalid_argument);
    CHECK(Partition::parse("3,1,1") == P({3, 1, 1}));
    CHECK(P({3, 1, 1}).key() == "3,1,1");
    CHECK_THROWS_AS(Partition::parse("1,2"), ParseError);
    CHECK_THROWS_AS(Partition::parse("a"), ParseError);
}

TEST_CASE("armleg", "[partitions]") {
    CHECK(armleg(P({1}), {0, 0}) == ArmLeg{0, 0, 0, 0});
    CHECK(armleg(P({2, 2}), {0, 0}) == ArmLeg{1, 1, 0, 0});
    CHECK(armleg(P({3, 1}), {0, 0}) == ArmLeg{2, 1, 0, 0});
    CHECK(armleg(P({3, 1}), {2, 0}) == ArmLeg{0, 0, 2, 0});
    CHECK(armleg(P({3, 1}), {0, 1}) == ArmLeg{0, 0, 0, 1});
    CHECK_THROWS_AS(armleg(P({3, 1}), {1, 1}), CellOutsideDiagram);
}

TEST_CASE("cell_weight", "[partitions]") {
    CHECK(cell_weight({0, 0}) == Mono{0, 0});
    CHECK(cell_weight({1, 0}) == Mono{1, 0});
    CHECK(cell_weight({1, 1}) == Mono{1, 1});
}

TEST_CASE("g_lambda", "[partitions]") {
    CHECK(g_lambda(P({1})) == om(1, 0) * om(0, 1));
    CHECK(g_lambda(P({2})) == om(2, 0) * om(-1, 1) * om(1, 0) * om(0, 1));
    CHECK(g_lambda(P({1, 1})) == om(1, -1) * om(0, 2) * om(1, 0) * om(0, 1));
    CHECK(g_lambda(P({1, 1})) == g_lambda(P({2})).swap_qt());
    for (const auto& lam : partitions_of(5)) CHECK(g_lambda(conjugate(lam)) == g_lambda(lam).swap_qt());
}

TEST_CASE("B_lambda", "[partitions]") {
    CHECK(B_lambda(P({2, 1})) == poly("1 + q + t"));
    CHECK(B_lambda(P({1})) == Laurent(1));
    CHECK(B_lambda(P({2, 2})) == poly("1 + q + t + q*t"));
}

TEST_CASE("conjugate", "[partitions]") {
    CHECK(conjugate(P({3})) == P({1, 1, 1}));
    CHECK(conjugate(P({2, 1})) == P({2, 1}));
    CHECK(conjugate(P({2, 2})) == P({2, 2}));
    CHECK(conjugate(P({4, 2, 1})) == P({3, 2, 1, 1}));
    for (const auto& lam : partitions_of(7)) CHECK(conjugate(conjugate(lam)) == lam);
}

TEST_CASE("dominance", "[partitions]") {
    CHECK(dominance_leq(P({1, 1, 1}), P({2, 1})));
    CHECK(dominance_leq(P({2, 1}), P({3})));
    CHECK_FALSE(dominance_leq(P({3}), P({2, 1})));
    CHECK_FALSE(dominance_leq(P({3, 1, 1, 1}), P({2, 2, 2})));
    CHECK_FALSE(dominance_leq(P({2, 2, 2}), P({3, 1, 1, 1})));
    CHECK_THROWS_AS(dominance_leq(P({2}), P({2, 1})), SizeMismatch);
}

TEST_CASE("hook length count and z_lambda", "[partitions]") {
    CHECK(hook_length_count(P({2, 1})) == 2);
    CHECK(hook_length_count(P({3, 2})) == 5);
    CHECK(hook_length_count(P({3, 2, 1})) == 16);
    CHECK(z_lambda(P({2})) == 2);
    CHECK(z_lambda(P({1, 1})) == 2);
    CHECK(z_lambda(P({2, 2, 1})) == 8);
}
