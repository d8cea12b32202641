#pragma once

#include <string>
#include <vector>

#include "margind/markov.hpp"
#include "margind/toric.hpp"

// Exhaustive census of the marginal independence models on small n:
// totals, orbit counts under variable relabeling, and per-orbit geometry
// of the binary model varieties.
//
// The census enumerates order ideals of PP(n,2) in which no two-block
// member splits a maximal element.  Every ideal that is closed under
// splitting of arbitrary members qualifies; the remaining entries are
// kept because the exhaustive tables this census reproduces count them as
// separate rows, and each row records whether it is a fixed point of the
// full splitting closure.

namespace margind {

// All census ideals of PP(n,2), exactly once, by antichain enumeration.
// Guarded to n <= 4; pass allow_large to run n = 5 without any runtime
// promise.
std::vector<SplitClosedIdeal> enumerate_closed_ideals(int n, bool allow_large = false);

// True iff I equals the splitting closure of its maximal generators,
// i.e. I is split closed in the strict sense.
bool is_closure_fixed(const SplitClosedIdeal& I);

// Deterministic key identifying the relabeling orbit of an ideal: the
// least element list over all permutations of [n].
std::string orbit_key(const SplitClosedIdeal& I);

std::size_t orbit_count(const std::vector<SplitClosedIdeal>& ideals);

// Burnside count: average number of ideals fixed by each permutation.
std::size_t orbit_count_burnside(const std::vector<SplitClosedIdeal>& ideals);

enum class ModelClass { General, Graphical, Simplicial, Both };

struct ClassCounts {
    std::size_t total = 0;
    std::size_t up_to_symmetry = 0;
};

ClassCounts class_census(int n, ModelClass cls, bool allow_large = false);

// All distinct graphical (resp. simplicial) ideals on n variables.
std::vector<SplitClosedIdeal> graphical_ideals(int n);
std::vector<SplitClosedIdeal> simplicial_ideals(int n);

struct CensusRow {
    SplitClosedIdeal ideal;        // orbit representative (lex-least)
    std::string generators;        // maximal generators, comma separated
    bool is_graphical = false;
    bool is_simplicial = false;
    bool closure_fixed = true;     // strictly split closed
    Integer degree;
    int dimension = 0;
    std::size_t orbit_size = 0;
};

// One row per relabeling orbit of binary models on n variables with the
// variety's degree and projective dimension (computed from the literal
// parametrization, so rows are rendered exactly as stored); rows sorted by
// decreasing dimension, then degree, then generator text.
std::vector<CensusRow> census_table(int n, int threads = 1);

}  // namespace margind
