#include "margind/closure.hpp"

#include <algorithm>
#include <stdexcept>

namespace margind {

StatementSet::StatementSet(int n, std::vector<PartialSetPartition> statements)
    : n_(n), statements_(std::move(statements)) {
    for (const auto& s : statements_) {
        if (s.n() != n_) throw std::invalid_argument("statement over wrong ground size");
        if (s.block_count() < 2)
            throw std::invalid_argument("statement '" + format_partition(s) +
                                        "' has fewer than two blocks");
    }
    std::sort(statements_.begin(), statements_.end(), partition_less);
    statements_.erase(std::unique(statements_.begin(), statements_.end()),
                      statements_.end());
}

void StatementSet::add(const PartialSetPartition& s) {
    if (s.n() != n_) throw std::invalid_argument("statement over wrong ground size");
    if (s.block_count() < 2)
        throw std::invalid_argument("statement '" + format_partition(s) +
                                    "' has fewer than two blocks");
    auto it = std::lower_bound(statements_.begin(), statements_.end(), s, partition_less);
    if (it == statements_.end() || !(*it == s)) statements_.insert(it, s);
}

SplitClosedIdeal::SplitClosedIdeal(int n, std::vector<PartialSetPartition> elements)
    : n_(n), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end(), partition_less);
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool SplitClosedIdeal::contains(const PartialSetPartition& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p, partition_less);
    return it != elements_.end() && *it == p;
}

bool SplitClosedIdeal::operator<(const SplitClosedIdeal& o) const {
    return std::lexicographical_compare(elements_.begin(), elements_.end(),
                                        o.elements_.begin(), o.elements_.end(),
                                        partition_less);
}

std::optional<std::size_t> splits(const PartialSetPartition& tau,
                                  const PartialSetPartition& pi) {
    if (tau.block_count() != 2)
        throw std::invalid_argument("splits: tau must have exactly two blocks");
    return pi.find_block(tau.ground());
}

PartialSetPartition split_by(const PartialSetPartition& pi,
                             const PartialSetPartition& gamma) {
    std::vector<Block> out;
    out.reserve(pi.block_count());
    for (Block b : pi.blocks()) {
        GroundSet covered = 0;
        std::size_t parts = 0;
        for (Block g : gamma.blocks()) {
            if (Block t = g & b) {
                covered |= t;
                ++parts;
            }
        }
        if (covered == b && parts >= 1) {
            for (Block g : gamma.blocks())
                if (Block t = g & b) out.push_back(t);
        } else {
            out.push_back(b);
        }
    }
    return PartialSetPartition(pi.n(), std::move(out));
}

PartialSetPartition fixpoint_split(const PartialSetPartition& seed,
                                   const StatementSet& C) {
    PartialSetPartition cur = seed;
    // A chain in PP(n) has length at most 2n, so this terminates quickly.
    while (true) {
        PartialSetPartition next = cur;
        for (const auto& s : C.statements()) next = split_by(next, s);
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

PartialSetPartition max_element_for(GroundSet D, const StatementSet& C) {
    if (!D) throw std::invalid_argument("max_element_for: empty ground set");
    return fixpoint_split(PartialSetPartition(C.n(), {D}), C);
}

bool member(const PartialSetPartition& sigma, const StatementSet& C) {
    GroundSet g = sigma.ground();
    bool covered = false;
    for (const auto& s : C.statements())
        if (!(g & ~s.ground())) {
            covered = true;
            break;
        }
    if (!covered) return false;
    return leq(sigma, max_element_for(g, C));
}

SplitClosedIdeal closure(const StatementSet& C) {
    std::vector<PartialSetPartition> elems;
    for (const auto& p : enumerate_partitions(C.n(), 2))
        if (member(p, C)) elems.push_back(p);
    return SplitClosedIdeal(C.n(), std::move(elems));
}

SplitClosedIdeal closure_bruteforce(const StatementSet& C) {
    auto universe = enumerate_partitions(C.n(), 2);
    std::vector<bool> in(universe.size(), false);
    auto index_of = [&](const PartialSetPartition& p) {
        auto it = std::lower_bound(universe.begin(), universe.end(), p, partition_less);
        return static_cast<std::size_t>(it - universe.begin());
    };
    for (const auto& s : C.statements()) in[index_of(s)] = true;

    bool changed = true;
    while (changed) {
        changed = false;
        // Downward closure.
        for (std::size_t i = 0; i < universe.size(); ++i) {
            if (in[i]) continue;
            for (std::size_t j = 0; j < universe.size(); ++j)
                if (in[j] && leq(universe[i], universe[j])) {
                    in[i] = true;
                    changed = true;
                    break;
                }
        }
        // All splittings pi^tau for two-block tau in the set.
        for (std::size_t t = 0; t < universe.size(); ++t) {
            if (!in[t] || universe[t].block_count() != 2) continue;
            for (std::size_t p = 0; p < universe.size(); ++p) {
                if (!in[p]) continue;
                if (splits(universe[t], universe[p])) {
                    std::size_t k = index_of(split_by(universe[p], universe[t]));
                    if (!in[k]) {
                        in[k] = true;
                        changed = true;
                    }
                }
            }
        }
    }
    std::vector<PartialSetPartition> elems;
    for (std::size_t i = 0; i < universe.size(); ++i)
        if (in[i]) elems.push_back(universe[i]);
    return SplitClosedIdeal(C.n(), std::move(elems));
}

StatementSet maximal_generators(const SplitClosedIdeal& I) {
    std::vector<PartialSetPartition> maxima;
    for (const auto& p : I.elements()) {
        bool dominated = false;
        for (const auto& q : I.elements())
            if (!(p == q) && leq(p, q)) {
                dominated = true;
                break;
            }
        if (!dominated) maxima.push_back(p);
    }
    return StatementSet(I.n(), std::move(maxima));
}

bool is_split_closed(const SplitClosedIdeal& I) {
    for (const auto& p : I.elements()) {
        for (const auto& below : enumerate_partitions(I.n(), 2))
            if (leq(below, p) && !I.contains(below)) return false;
        for (const auto& t : I.elements())
            if (t.block_count() == 2 && splits(t, p) && !I.contains(split_by(p, t)))
                return false;
    }
    return true;
}

SplitClosedIdeal relabel(const SplitClosedIdeal& I, const std::vector<int>& sigma) {
    std::vector<PartialSetPartition> elems;
    elems.reserve(I.size());
    for (const auto& p : I.elements()) elems.push_back(relabel(p, sigma));
    return SplitClosedIdeal(I.n(), std::move(elems));
}

}  // namespace margind
