#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Partial set partitions of [n] and the poset structure on them.
//
// A partial set partition is an unordered family of disjoint nonempty
// blocks of {1,...,n}; the blocks need not cover [n].  Partitions are kept
// in a canonical form (blocks sorted by their minimum element) so that
// equality, hashing and text output are well defined.  Blocks are stored
// as 64-bit masks, so n <= 64.
//
// Order convention: finer partitions on larger ground sets are higher.
// The top of the subposet PP(n,2) (all partitions with >= 2 blocks) is
// 1|2|...|n and the bottom of the full poset PP(n) is the empty partition.

namespace margind {

using Block = std::uint64_t;     // bit i-1 set  <=>  element i in the block
using GroundSet = std::uint64_t;

constexpr int kMaxGroundSize = 64;

constexpr GroundSet full_ground(int n) {
    return n >= kMaxGroundSize ? ~GroundSet{0} : (GroundSet{1} << n) - 1;
}

class PartialSetPartition {
public:
    PartialSetPartition() : n_(0) {}

    // Blocks are canonicalized; throws std::invalid_argument if blocks
    // overlap, are empty, or fall outside 1..n.
    PartialSetPartition(int n, std::vector<Block> blocks);

    int n() const { return n_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }
    bool empty() const { return blocks_.empty(); }

    GroundSet ground() const;

    // 0 for the empty partition, otherwise #ground + #blocks - 1.
    int rank() const;

    // Index of the block equal to `b`, if any.
    std::optional<std::size_t> find_block(Block b) const;
    // Index of the block containing element `e` (1-based), if any.
    std::optional<std::size_t> block_of(int e) const;

    bool operator==(const PartialSetPartition& o) const {
        return n_ == o.n_ && blocks_ == o.blocks_;
    }
    bool operator!=(const PartialSetPartition& o) const { return !(*this == o); }

    std::size_t hash() const;

private:
    int n_;
    std::vector<Block> blocks_;
};

// tau <= pi in PP(n): |tau| is contained in |pi| and every nonempty trace
// pi_j & |tau| lies inside a single block of tau.
bool leq(const PartialSetPartition& tau, const PartialSetPartition& pi);

// pi covers tau: pi arises from tau by adding one new element to a block,
// by splitting one block in two, or (from the empty partition) by creating
// a first singleton block.
bool covers(const PartialSetPartition& pi, const PartialSetPartition& tau);

// Common refinement of two partitions with equal ground set; all nonempty
// pairwise block intersections.  Throws on ground-set mismatch.
PartialSetPartition meet_same_support(const PartialSetPartition& pi,
                                      const PartialSetPartition& mu);

// Image of pi under a permutation sigma of [n]; sigma[i-1] is the image
// of i.  relabel(relabel(pi, s), t) == relabel(pi, t after s).
PartialSetPartition relabel(const PartialSetPartition& pi,
                            const std::vector<int>& sigma);

// Deterministic total order: by rank, then lexicographically on the
// canonical block form.  Used everywhere an enumeration order is needed.
bool partition_less(const PartialSetPartition& a, const PartialSetPartition& b);

// All partial set partitions of [n] with at least min_blocks blocks, in
// partition_less order.  min_blocks = 2 yields PP(n,2); min_blocks = 0
// includes the empty partition.
std::vector<PartialSetPartition> enumerate_partitions(int n, int min_blocks);

// Text forms.  Compact "1|23" is accepted and emitted for n <= 9; the
// bracket form "{1}|{2,3}" works for any n.  parse throws
// std::invalid_argument with a message naming the offending block.
PartialSetPartition parse_partition(const std::string& text, int n);
std::string format_partition(const PartialSetPartition& pi);

std::string format_ground_set(GroundSet g, int n);

struct PartitionHash {
    std::size_t operator()(const PartialSetPartition& p) const { return p.hash(); }
};

}  // namespace margind
