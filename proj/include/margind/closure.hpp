#pragma once

#include <optional>
#include <vector>

#include "margind/partition.hpp"

// Split closures of marginal independence statement sets.
//
// A statement is an element of PP(n,2); a statement set generates the
// smallest order ideal that is also closed under splitting, and that
// ideal is the canonical descriptor of the marginal independence model.
// Membership in the closure is decided in polynomial time through the
// splitting fixpoint, so the closure itself never has to be saturated.

namespace margind {

class StatementSet {
public:
    explicit StatementSet(int n) : n_(n) {}
    // Every statement must live in PP(n,2); duplicates are collapsed and
    // the list is kept in partition_less order so fixpoint traces are
    // reproducible.
    StatementSet(int n, std::vector<PartialSetPartition> statements);

    int n() const { return n_; }
    const std::vector<PartialSetPartition>& statements() const { return statements_; }
    bool empty() const { return statements_.empty(); }

    void add(const PartialSetPartition& s);

    bool operator==(const StatementSet& o) const {
        return n_ == o.n_ && statements_ == o.statements_;
    }

private:
    int n_;
    std::vector<PartialSetPartition> statements_;
};

// Canonical container for an order ideal of PP(n,2); the results of
// closure() are always split closed, and is_split_closed() checks the
// property literally for sets built some other way.
class SplitClosedIdeal {
public:
    SplitClosedIdeal() : n_(0) {}
    SplitClosedIdeal(int n, std::vector<PartialSetPartition> elements);

    int n() const { return n_; }
    const std::vector<PartialSetPartition>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(const PartialSetPartition& p) const;

    bool operator==(const SplitClosedIdeal& o) const {
        return n_ == o.n_ && elements_ == o.elements_;
    }
    bool operator!=(const SplitClosedIdeal& o) const { return !(*this == o); }
    bool operator<(const SplitClosedIdeal& o) const;

private:
    int n_;
    std::vector<PartialSetPartition> elements_;  // partition_less order
};

// If tau (exactly two blocks) splits pi, the index of the block of pi equal
// to the ground set of tau.  Throws if tau is not a two-block partition.
std::optional<std::size_t> splits(const PartialSetPartition& tau,
                                  const PartialSetPartition& pi);

// Generalized splitting: every block of pi that gamma partitions entirely
// is replaced by its trace blocks.  pi <= split_by(pi, gamma) always.
PartialSetPartition split_by(const PartialSetPartition& pi,
                             const PartialSetPartition& gamma);

// Iterate split_by over the statements of C (in their canonical order)
// until the result stabilizes.  The fixpoint does not depend on the
// statement order.
PartialSetPartition fixpoint_split(const PartialSetPartition& seed,
                                   const StatementSet& C);

// Unique maximal element of closure(C) with ground set D: the splitting
// fixpoint of the one-block partition on D.  D must be nonempty.
PartialSetPartition max_element_for(GroundSet D, const StatementSet& C);

// Membership of sigma in closure(C) without materializing the closure.
bool member(const PartialSetPartition& sigma, const StatementSet& C);

// The split closure, materialized by testing membership over all of
// PP(n,2).
SplitClosedIdeal closure(const StatementSet& C);

// Saturation oracle: grow the statement set by downward closure and
// explicit splittings until stable.  Exponential-ish; for cross-checks.
SplitClosedIdeal closure_bruteforce(const StatementSet& C);

// Antichain of maximal elements; closing it recovers the ideal.
StatementSet maximal_generators(const SplitClosedIdeal& I);

// Downward closed and closed under splitting (checked literally).
bool is_split_closed(const SplitClosedIdeal& I);

SplitClosedIdeal relabel(const SplitClosedIdeal& I, const std::vector<int>& sigma);

}  // namespace margind
