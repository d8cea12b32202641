#include "doctest.h"

#include <stdexcept>

#include <algorithm>
#include <map>

#include "margind/partition.hpp"

using namespace margind;

namespace {

PartialSetPartition pp(const std::string& s, int n) { return parse_partition(s, n); }

// Bell numbers, for the independent enumeration count.
long bell(int k) {
    std::vector<std::vector<long>> tri{{1}};
    for (int i = 1; i <= k; ++i) {
        std::vector<long> row{tri.back().back()};
        for (long v : tri.back()) row.push_back(row.back() + v);
        tri.push_back(row);
    }
    return tri[k][0];
}

long binom(int n, int k) {
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("parse and format") {
    auto p = pp("1|23", 3);
    CHECK(p.block_count() == 2);
    CHECK(p.blocks()[0] == 0b001);
    CHECK(p.blocks()[1] == 0b110);
    CHECK(format_partition(p) == "1|23");

    auto q = pp("12|345|67", 7);
    CHECK(q.block_count() == 3);
    CHECK(q.ground() == 0b1111111);
    CHECK(format_partition(q) == "12|345|67");

    CHECK_THROWS_AS(pp("1|1", 2), std::invalid_argument);
    CHECK_THROWS_AS(pp("1|4", 3), std::invalid_argument);
    CHECK_THROWS_AS(pp("1||2", 3), std::invalid_argument);

    auto b = pp("{1}|{2,3}", 3);
    CHECK(b == p);
    auto wide = PartialSetPartition(12, {0b100000000001, 0b010});
    CHECK(format_partition(wide) == "{1,12}|{2}");
    CHECK(parse_partition(format_partition(wide), 12) == wide);

    // Canonical form ignores block order.
    CHECK(pp("23|1", 3) == pp("1|23", 3));
}

TEST_CASE("format and parse are mutually inverse") {
    for (const auto& p : enumerate_partitions(4, 1))
        CHECK(parse_partition(format_partition(p), 4) == p);
    // Bracket form for a wide ground set.
    PartialSetPartition wide(14, {0b10000000000011, 0b01000000000100});
    CHECK(parse_partition(format_partition(wide), 14) == wide);
}

TEST_CASE("leq matches the Hasse diagrams") {
    CHECK(leq(pp("12", 2), pp("1|2", 2)));
    CHECK(leq(pp("1|2", 3), pp("13|2", 3)));
    CHECK(!leq(pp("1|23", 3), pp("12|3", 3)));
    CHECK(!leq(pp("12|3", 3), pp("1|23", 3)));
    CHECK(leq(pp("2|3", 3), pp("12|3", 3)));
    CHECK(!leq(pp("2|3", 3), pp("1|23", 3)));
    auto arbitrary = pp("14|2|3", 4);
    CHECK(leq(arbitrary, arbitrary));
}

TEST_CASE("leq is a partial order on PP(4)") {
    auto all = enumerate_partitions(4, 0);
    CHECK(all.size() == 52);  // sum over S of Bell(|S|)
    for (const auto& a : all) {
        CHECK(leq(a, a));
        for (const auto& b : all) {
            if (leq(a, b) && leq(b, a)) CHECK(a == b);
            for (const auto& c : all)
                if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
        }
    }
}

TEST_CASE("covers: examples and graded equivalence") {
    CHECK(covers(pp("1|23", 3), pp("123", 3)));
    CHECK(covers(pp("1|23", 3), pp("1|2", 3)));
    CHECK(!covers(pp("1|2|3", 3), pp("1", 3)));

    auto all = enumerate_partitions(4, 0);
    for (const auto& a : all)
        for (const auto& b : all) {
            bool structural = covers(b, a);
            bool graded = !(a == b) && leq(a, b) && b.rank() == a.rank() + 1;
            CHECK(structural == graded);
        }
}

TEST_CASE("leq equals reachability through covers") {
    auto all = enumerate_partitions(3, 0);
    const std::size_t m = all.size();
    std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
        reach[i][i] = true;
        for (std::size_t j = 0; j < m; ++j)
            if (covers(all[j], all[i])) reach[i][j] = true;
    }
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            CHECK(reach[i][j] == leq(all[i], all[j]));
}

TEST_CASE("rank") {
    CHECK(PartialSetPartition(3, {}).rank() == 0);
    CHECK(pp("1|2|3", 3).rank() == 5);
    CHECK(pp("12|345|67", 7).rank() == 9);
}

TEST_CASE("meet_same_support") {
    CHECK(meet_same_support(pp("12|34", 4), pp("13|24", 4)) == pp("1|2|3|4", 4));
    auto p = pp("14|2|3", 4);
    CHECK(meet_same_support(p, p) == p);

    auto a = pp("123|4", 4), b = pp("12|34", 4);
    // Brute-force block-intersection oracle.
    std::vector<Block> parts;
    for (Block x : a.blocks())
        for (Block y : b.blocks())
            if (x & y) parts.push_back(x & y);
    CHECK(meet_same_support(a, b) == PartialSetPartition(4, parts));
    CHECK(meet_same_support(a, b) == pp("12|3|4", 4));

    CHECK_THROWS_AS(meet_same_support(pp("1|2", 3), pp("1|3", 3)),
                    std::invalid_argument);
}

TEST_CASE("enumerate") {
    auto p32 = enumerate_partitions(3, 2);
    REQUIRE(p32.size() == 7);
    std::vector<std::string> got;
    for (const auto& p : p32) got.push_back(format_partition(p));
    CHECK(got == std::vector<std::string>{"1|2", "1|3", "2|3", "1|23", "12|3",
                                          "13|2", "1|2|3"});

    auto p22 = enumerate_partitions(2, 2);
    REQUIRE(p22.size() == 1);
    CHECK(format_partition(p22[0]) == "1|2");

    // Independent count: sum over subsets S with |S| >= 2 of Bell-type
    // partition counts minus the one-block partition.
    long expected = 0;
    for (int k = 2; k <= 4; ++k) expected += binom(4, k) * (bell(k) - 1);
    CHECK(expected == 36);
    CHECK(enumerate_partitions(4, 2).size() == 36);

    // Deterministic order: sorted by (rank, lex) and duplicate free.
    auto p42 = enumerate_partitions(4, 2);
    for (std::size_t i = 0; i + 1 < p42.size(); ++i) {
        CHECK(partition_less(p42[i], p42[i + 1]));
    }
}

TEST_CASE("one-block partitions form the Boolean lattice") {
    auto all = enumerate_partitions(4, 1);
    std::vector<PartialSetPartition> singles;
    for (const auto& p : all)
        if (p.block_count() == 1) singles.push_back(p);
    CHECK(singles.size() == 15);
    for (const auto& a : singles)
        for (const auto& b : singles)
            CHECK(leq(a, b) == ((a.ground() & ~b.ground()) == 0));
}

TEST_CASE("PP(n) is not a lattice: two minimal upper bounds") {
    auto a = pp("1|2", 4), b = pp("3|4", 4);
    auto u1 = pp("13|24", 4), u2 = pp("14|23", 4);
    CHECK(leq(a, u1));
    CHECK(leq(b, u1));
    CHECK(leq(a, u2));
    CHECK(leq(b, u2));
    for (const auto& c : enumerate_partitions(4, 0))
        if (leq(a, c) && leq(b, c)) CHECK(!(leq(c, u1) && leq(c, u2)));
}

TEST_CASE("relabel") {
    CHECK(relabel(pp("1|23", 3), {2, 1, 3}) == pp("13|2", 3));
    auto p = pp("14|2|3", 4);
    CHECK(relabel(p, {1, 2, 3, 4}) == p);

    // Group action: relabel twice = relabel by the composite.
    std::vector<int> s{2, 3, 1}, t{1, 3, 2};
    std::vector<int> ts(3);
    for (int i = 0; i < 3; ++i) ts[i] = t[s[i] - 1];
    for (const auto& q : enumerate_partitions(3, 0))
        CHECK(relabel(relabel(q, s), t) == relabel(q, ts));

    // Orbit of 1|2 under S_3.
    std::vector<int> sigma{1, 2, 3};
    std::vector<PartialSetPartition> orbit;
    do {
        orbit.push_back(relabel(pp("1|2", 3), sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    std::sort(orbit.begin(), orbit.end(), partition_less);
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    REQUIRE(orbit.size() == 3);
    CHECK(orbit[0] == pp("1|2", 3));
    CHECK(orbit[1] == pp("1|3", 3));
    CHECK(orbit[2] == pp("2|3", 3));

    // relabel preserves the poset structure.
    auto all3 = enumerate_partitions(3, 0);
    std::vector<int> rho{3, 1, 2};
    for (const auto& a : all3) {
        CHECK(relabel(a, rho).rank() == a.rank());
        for (const auto& b : all3) {
            CHECK(leq(relabel(a, rho), relabel(b, rho)) == leq(a, b));
            CHECK(covers(relabel(a, rho), relabel(b, rho)) == covers(a, b));
        }
    }
}
