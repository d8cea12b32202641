#include "margind/census.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace margind {

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

std::string ideal_key(const SplitClosedIdeal& I) {
    std::ostringstream os;
    for (const auto& p : I.elements()) os << format_partition(p) << ';';
    return os.str();
}

}  // namespace

std::vector<SplitClosedIdeal> enumerate_closed_ideals(int n, bool allow_large) {
    if (n < 1 || n > (allow_large ? 5 : 4))
        throw std::invalid_argument("enumerate_closed_ideals: n out of guarded range");
    auto universe = enumerate_partitions(n, 2);
    const std::size_t u = universe.size();
    std::vector<std::vector<bool>> le(u, std::vector<bool>(u));
    for (std::size_t i = 0; i < u; ++i)
        for (std::size_t j = 0; j < u; ++j) le[i][j] = leq(universe[i], universe[j]);

    std::vector<SplitClosedIdeal> result;
    std::vector<std::size_t> antichain;

    // Down-sets correspond to antichains of maximal elements.  A down-set
    // qualifies when none of its two-block members splits a maximal
    // element (the split would be strictly larger, so it can never belong
    // to the set).
    auto qualifies = [&](const std::vector<std::size_t>& maxima,
                         const std::vector<bool>& in) {
        for (std::size_t j : maxima)
            for (std::size_t t = 0; t < u; ++t) {
                if (!in[t] || universe[t].block_count() != 2) continue;
                if (splits(universe[t], universe[j]) &&
                    !(split_by(universe[j], universe[t]) == universe[j]))
                    return false;
            }
        return true;
    };

    std::function<void(std::size_t)> scan = [&](std::size_t start) {
        std::vector<bool> in(u, false);
        for (std::size_t j : antichain)
            for (std::size_t i = 0; i < u; ++i)
                if (le[i][j]) in[i] = true;
        if (qualifies(antichain, in)) {
            std::vector<PartialSetPartition> elems;
            for (std::size_t i = 0; i < u; ++i)
                if (in[i]) elems.push_back(universe[i]);
            result.emplace_back(n, std::move(elems));
        }
        for (std::size_t i = start; i < u; ++i) {
            bool incomparable = true;
            for (std::size_t j : antichain)
                if (le[i][j] || le[j][i]) {
                    incomparable = false;
                    break;
                }
            if (incomparable) {
                antichain.push_back(i);
                scan(i + 1);
                antichain.pop_back();
            }
        }
    };
    scan(0);
    std::sort(result.begin(), result.end());
    return result;
}

bool is_closure_fixed(const SplitClosedIdeal& I) {
    StatementSet gens = maximal_generators(I);
    return closure(gens) == I;
}

std::string orbit_key(const SplitClosedIdeal& I) {
    std::string best;
    for (const auto& sigma : all_permutations(I.n())) {
        std::string k = ideal_key(relabel(I, sigma));
        if (best.empty() || k < best) best = k;
    }
    return best;
}

std::size_t orbit_count(const std::vector<SplitClosedIdeal>& ideals) {
    std::set<std::string> keys;
    for (const auto& I : ideals) keys.insert(orbit_key(I));
    return keys.size();
}

std::size_t orbit_count_burnside(const std::vector<SplitClosedIdeal>& ideals) {
    if (ideals.empty()) return 0;
    int n = ideals.front().n();
    std::size_t fixed_total = 0;
    auto perms = all_permutations(n);
    for (const auto& sigma : perms)
        for (const auto& I : ideals)
            if (relabel(I, sigma) == I) ++fixed_total;
    return fixed_total / perms.size();
}

std::vector<SplitClosedIdeal> graphical_ideals(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
    std::set<SplitClosedIdeal> seen;
    std::vector<SplitClosedIdeal> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        BidirectedGraph G(n);
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (mask >> e & 1) G.add_edge(pairs[e].first, pairs[e].second);
        SplitClosedIdeal I = graph_ideal(G);
        if (seen.insert(I).second) out.push_back(I);
    }
    return out;
}

std::vector<SplitClosedIdeal> simplicial_ideals(int n) {
    // Universe: downward closed families of subsets of size >= 2.
    std::vector<GroundSet> sets;
    GroundSet all = full_ground(n);
    for (GroundSet s = 1; s <= all; ++s)
        if (std::popcount(s) >= 2) sets.push_back(s);
    std::set<SplitClosedIdeal> seen;
    std::vector<SplitClosedIdeal> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sets.size()); ++mask) {
        bool down_closed = true;
        for (std::size_t i = 0; i < sets.size() && down_closed; ++i) {
            if (!(mask >> i & 1)) continue;
            for (std::size_t j = 0; j < sets.size(); ++j)
                if ((sets[j] & ~sets[i]) == 0 && !(mask >> j & 1)) {
                    down_closed = false;
                    break;
                }
        }
        if (!down_closed) continue;
        std::vector<GroundSet> faces;
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (mask >> i & 1) faces.push_back(sets[i]);
        SplitClosedIdeal I = simplicial_ideal(SimplicialComplex(n, faces));
        if (seen.insert(I).second) out.push_back(I);
    }
    return out;
}

ClassCounts class_census(int n, ModelClass cls, bool allow_large) {
    std::vector<SplitClosedIdeal> ideals;
    switch (cls) {
        case ModelClass::General:
            ideals = enumerate_closed_ideals(n, allow_large);
            break;
        case ModelClass::Graphical:
            ideals = graphical_ideals(n);
            break;
        case ModelClass::Simplicial:
            ideals = simplicial_ideals(n);
            break;
        case ModelClass::Both: {
            auto g = graphical_ideals(n);
            auto s = simplicial_ideals(n);
            std::set<SplitClosedIdeal> sset(s.begin(), s.end());
            for (const auto& I : g)
                if (sset.count(I)) ideals.push_back(I);
            break;
        }
    }
    return ClassCounts{ideals.size(), orbit_count(ideals)};
}

std::vector<CensusRow> census_table(int n, int threads) {
    auto ideals = enumerate_closed_ideals(n);
    auto graphical = graphical_ideals(n);
    auto simplicial = simplicial_ideals(n);
    std::set<std::string> graph_keys, simp_keys;
    for (const auto& I : graphical) graph_keys.insert(orbit_key(I));
    for (const auto& I : simplicial) simp_keys.insert(orbit_key(I));

    std::map<std::string, std::pair<SplitClosedIdeal, std::size_t>> orbits;
    for (const auto& I : ideals) {
        std::string k = orbit_key(I);
        auto it = orbits.find(k);
        if (it == orbits.end())
            orbits.emplace(k, std::make_pair(I, std::size_t{1}));
        else
            ++it->second.second;
    }

    std::vector<CensusRow> rows;
    auto perms = all_permutations(n);
    for (auto& [key, rep] : orbits) {
        // Lexicographically least ideal in the orbit fronts the row.
        SplitClosedIdeal canon = rep.first;
        for (const auto& sigma : perms) {
            SplitClosedIdeal img = relabel(rep.first, sigma);
            if (img < canon) canon = img;
        }
        CensusRow row;
        row.ideal = canon;
        std::ostringstream os;
        StatementSet gens = maximal_generators(canon);
        for (std::size_t i = 0; i < gens.statements().size(); ++i) {
            if (i) os << ", ";
            os << format_partition(gens.statements()[i]);
        }
        row.generators = os.str();
        row.is_graphical = graph_keys.count(key) > 0;
        row.is_simplicial = simp_keys.count(key) > 0;
        row.closure_fixed = is_closure_fixed(canon);
        row.orbit_size = rep.second;
        rows.push_back(std::move(row));
    }

    // Geometry per orbit representative; batched, deterministic order.
    StateShape shape = StateShape::binary(n);
    int workers = std::max(1, threads);
    std::vector<std::thread> pool;
    std::size_t chunk = (rows.size() + workers - 1) / std::max<std::size_t>(1, workers);
    for (int w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk, hi = std::min(rows.size(), lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) {
                ParamMatrix A = param_matrix_literal(rows[i].ideal, shape);
                rows[i].degree = toric_degree(A);
                rows[i].dimension = projective_dimension(A);
            }
        });
    }
    for (auto& t : pool) t.join();

    std::sort(rows.begin(), rows.end(), [](const CensusRow& a, const CensusRow& b) {
        if (a.dimension != b.dimension) return a.dimension > b.dimension;
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.generators < b.generators;
    });
    return rows;
}

}  // namespace margind
