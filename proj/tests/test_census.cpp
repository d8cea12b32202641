#include "doctest.h"

#include <map>
#include <sstream>
#include <set>

#include "margind/census.hpp"

using namespace margind;

TEST_CASE("census sizes for small n") {
    CHECK(enumerate_closed_ideals(2).size() == 2);
    auto i3 = enumerate_closed_ideals(3);
    CHECK(i3.size() == 12);
    CHECK(orbit_count(i3) == 6);
    CHECK(orbit_count_burnside(i3) == 6);
    CHECK_THROWS_AS(enumerate_closed_ideals(6, true), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_closed_ideals(5), std::invalid_argument);
}

TEST_CASE("n=3 census equals brute force over all generator subsets") {
    auto universe = enumerate_partitions(3, 2);
    std::set<SplitClosedIdeal> closed;
    for (std::uint64_t mask = 0; mask < (1ull << 7); ++mask) {
        std::vector<PartialSetPartition> gens;
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (mask >> i & 1) gens.push_back(universe[i]);
        closed.insert(closure(StatementSet(3, gens)));
    }
    auto census = enumerate_closed_ideals(3);
    CHECK(census.size() == closed.size());
    for (const auto& I : census) CHECK(closed.count(I) == 1);
}

TEST_CASE("n=4 census") {
    auto ideals = enumerate_closed_ideals(4);
    CHECK(ideals.size() == 496);
    CHECK(orbit_count(ideals) == 53);
    CHECK(orbit_count_burnside(ideals) == 53);

    // Ideals that are fixed points of the splitting closure form the
    // strict sub-census.
    std::size_t strict = 0;
    for (const auto& I : ideals) {
        if (is_closure_fixed(I)) {
            ++strict;
            CHECK(is_split_closed(I));
        }
    }
    CHECK(strict == 420);
}

TEST_CASE("class censuses") {
    auto g3 = class_census(3, ModelClass::Graphical);
    CHECK(g3.total == 8);
    CHECK(g3.up_to_symmetry == 4);
    auto s3 = class_census(3, ModelClass::Simplicial);
    CHECK(s3.total == 9);
    CHECK(s3.up_to_symmetry == 5);
    auto b3 = class_census(3, ModelClass::Both);
    CHECK(b3.total == 5);
    CHECK(b3.up_to_symmetry == 3);

    auto g4 = class_census(4, ModelClass::Graphical);
    CHECK(g4.total == 64);
    CHECK(g4.up_to_symmetry == 11);
    auto s4 = class_census(4, ModelClass::Simplicial);
    CHECK(s4.total == 114);
    CHECK(s4.up_to_symmetry == 20);
}

TEST_CASE("graphical and simplicial ideals sit inside the census") {
    auto census = enumerate_closed_ideals(4);
    std::set<SplitClosedIdeal> all(census.begin(), census.end());
    for (const auto& I : graphical_ideals(4)) {
        CHECK(all.count(I) == 1);
        CHECK(is_closure_fixed(I));
    }
    for (const auto& I : simplicial_ideals(4)) {
        CHECK(all.count(I) == 1);
        CHECK(is_closure_fixed(I));
    }
}

TEST_CASE("census table spot anchors") {
    auto rows = census_table(4, 2);
    REQUIRE(rows.size() == 53);
    std::map<std::string, const CensusRow*> by_orbit;
    for (const auto& r : rows) by_orbit[orbit_key(r.ideal)] = &r;

    // Look rows up through the orbit of a generator set, so the test does
    // not depend on which relabeling fronts the row.
    auto expect = [&](const std::string& gens, long deg, int dim) {
        StatementSet C(4);
        std::istringstream is(gens);
        std::string tok;
        while (std::getline(is, tok, ';')) C.add(parse_partition(tok, 4));
        std::vector<PartialSetPartition> elems;
        for (const auto& u : enumerate_partitions(4, 2))
            for (const auto& g : C.statements())
                if (leq(u, g)) {
                    elems.push_back(u);
                    break;
                }
        std::string key = orbit_key(SplitClosedIdeal(4, elems));
        REQUIRE(by_orbit.count(key));
        const CensusRow& r = *by_orbit[key];
        CHECK(r.degree == deg);
        CHECK(r.dimension == dim);
        return &r;
    };
    // The empty generator set needs a direct lookup.
    for (const auto& r : rows)
        if (r.generators.empty()) {
            CHECK(r.degree == 1);
            CHECK(r.dimension == 15);
            CHECK(r.is_graphical);
            CHECK(r.is_simplicial);
        }
    expect("1|2", 2, 14);
    expect("12|34", 20, 6);
    expect("1|2|3|4", 24, 4);

    const CensusRow* r1 = expect("1|2;3|4", 4, 13);
    CHECK(r1->is_graphical);
    CHECK(r1->is_simplicial);
    const CensusRow* r2 = expect("1|23", 4, 12);
    CHECK(r2->is_graphical);
    CHECK(!r2->is_simplicial);
    const CensusRow* r3 = expect("1|2|3;1|2|4;1|3|4;2|3|4", 23, 5);
    CHECK(r3->is_simplicial);
    CHECK(!r3->is_graphical);

    // Orbit sizes add up to the full census.
    std::size_t total = 0;
    for (const auto& r : rows) total += r.orbit_size;
    CHECK(total == 496);
}

TEST_CASE("dimension is monotone under ideal containment") {
    auto rows = census_table(4, 2);
    for (const auto& a : rows)
        for (const auto& b : rows) {
            // containment of the representative ideals
            bool contained = true;
            for (const auto& p : a.ideal.elements())
                if (!b.ideal.contains(p)) {
                    contained = false;
                    break;
                }
            if (contained) CHECK(a.dimension >= b.dimension);
        }
}
