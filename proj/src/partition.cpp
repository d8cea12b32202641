#include "margind/partition.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace margind {

namespace {

std::string block_text(Block b, int n) {
    std::ostringstream os;
    bool brackets = n > 9;
    if (brackets) os << '{';
    bool first = true;
    for (int e = 1; e <= n; ++e) {
        if (!(b >> (e - 1) & 1)) continue;
        if (!first && brackets) os << ',';
        os << e;
        first = false;
    }
    if (brackets) os << '}';
    return os.str();
}

}  // namespace

PartialSetPartition::PartialSetPartition(int n, std::vector<Block> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    if (n < 0 || n > kMaxGroundSize)
        throw std::invalid_argument("ground size out of range");
    GroundSet all = full_ground(n);
    GroundSet seen = 0;
    for (Block b : blocks_) {
        if (b == 0) throw std::invalid_argument("empty block");
        if (b & ~all)
            throw std::invalid_argument("block " + block_text(b, 64) +
                                        " has elements outside 1.." + std::to_string(n));
        if (b & seen)
            throw std::invalid_argument("overlapping blocks at " + block_text(b & seen, n));
        seen |= b;
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](Block a, Block b) { return (a & -a) < (b & -b); });
}

GroundSet PartialSetPartition::ground() const {
    GroundSet g = 0;
    for (Block b : blocks_) g |= b;
    return g;
}

int PartialSetPartition::rank() const {
    if (blocks_.empty()) return 0;
    return std::popcount(ground()) + static_cast<int>(blocks_.size()) - 1;
}

std::optional<std::size_t> PartialSetPartition::find_block(Block b) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i] == b) return i;
    return std::nullopt;
}

std::optional<std::size_t> PartialSetPartition::block_of(int e) const {
    Block bit = Block{1} << (e - 1);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i] & bit) return i;
    return std::nullopt;
}

std::size_t PartialSetPartition::hash() const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(n_));
    for (Block b : blocks_) mix(b);
    return h;
}

bool leq(const PartialSetPartition& tau, const PartialSetPartition& pi) {
    GroundSet gt = tau.ground();
    if (gt & ~pi.ground()) return false;
    for (Block b : pi.blocks()) {
        Block trace = b & gt;
        if (!trace) continue;
        int low = std::countr_zero(trace) + 1;
        auto i = tau.block_of(low);
        if (!i || (trace & ~tau.blocks()[*i])) return false;
    }
    return true;
}

bool covers(const PartialSetPartition& pi, const PartialSetPartition& tau) {
    if (pi.n() != tau.n()) return false;
    if (tau.empty())
        return pi.block_count() == 1 && std::popcount(pi.blocks()[0]) == 1;
    if (pi.ground() == tau.ground()) {
        // One block of tau split into two.
        if (pi.block_count() != tau.block_count() + 1) return false;
        std::vector<Block> extra;
        for (Block b : pi.blocks())
            if (!tau.find_block(b)) extra.push_back(b);
        return extra.size() == 2 && tau.find_block(extra[0] | extra[1]).has_value();
    }
    // One new element added to an existing block.
    GroundSet added = pi.ground() & ~tau.ground();
    if (std::popcount(added) != 1 || (tau.ground() & ~pi.ground())) return false;
    if (pi.block_count() != tau.block_count()) return false;
    int matched = 0;
    for (Block b : pi.blocks()) {
        if (tau.find_block(b)) continue;
        if (!tau.find_block(b & ~added)) return false;
        ++matched;
    }
    return matched == 1;
}

PartialSetPartition meet_same_support(const PartialSetPartition& pi,
                                      const PartialSetPartition& mu) {
    if (pi.ground() != mu.ground())
        throw std::invalid_argument("meet_same_support: ground sets differ");
    std::vector<Block> parts;
    for (Block a : pi.blocks())
        for (Block b : mu.blocks())
            if (Block c = a & b) parts.push_back(c);
    return PartialSetPartition(pi.n(), std::move(parts));
}

PartialSetPartition relabel(const PartialSetPartition& pi,
                            const std::vector<int>& sigma) {
    std::vector<Block> mapped;
    mapped.reserve(pi.block_count());
    for (Block b : pi.blocks()) {
        Block m = 0;
        for (int e = 1; e <= pi.n(); ++e)
            if (b >> (e - 1) & 1) m |= Block{1} << (sigma[e - 1] - 1);
        mapped.push_back(m);
    }
    return PartialSetPartition(pi.n(), std::move(mapped));
}

bool partition_less(const PartialSetPartition& a, const PartialSetPartition& b) {
    int ra = a.rank(), rb = b.rank();
    if (ra != rb) return ra < rb;
    // Lexicographic on the canonical form: blocks in order, elements
    // ascending, with a separator that sorts before any element.
    auto flat = [](const PartialSetPartition& p) {
        std::vector<int> out;
        for (Block blk : p.blocks()) {
            for (int e = 1; e <= p.n(); ++e)
                if (blk >> (e - 1) & 1) out.push_back(e);
            out.push_back(0);
        }
        return out;
    };
    return flat(a) < flat(b);
}

namespace {

void partitions_of_set(GroundSet s, int n, int min_blocks,
                       std::vector<Block>& cur,
                       std::vector<PartialSetPartition>& out) {
    if (!s) {
        if (static_cast<int>(cur.size()) >= min_blocks)
            out.emplace_back(n, cur);
        return;
    }
    // The lowest remaining element goes with any subset of the rest.
    Block low = s & -s;
    GroundSet rest = s & ~low;
    // Iterate over all subsets of `rest`.
    GroundSet sub = rest;
    while (true) {
        cur.push_back(low | sub);
        partitions_of_set(rest & ~sub, n, min_blocks, cur, out);
        cur.pop_back();
        if (!sub) break;
        sub = (sub - 1) & rest;
    }
}

}  // namespace

std::vector<PartialSetPartition> enumerate_partitions(int n, int min_blocks) {
    // The full listing explodes combinatorially; keep a hard guard so a
    // wrong n fails fast instead of hanging.
    if (n < 1 || n > 20)
        throw std::invalid_argument("enumerate_partitions: n out of range");
    std::vector<PartialSetPartition> out;
    if (min_blocks <= 0) out.emplace_back(n, std::vector<Block>{});
    GroundSet all = full_ground(n);
    std::vector<Block> cur;
    for (GroundSet s = all; s; s = (s - 1) & all)
        partitions_of_set(s, n, std::max(min_blocks, 1), cur, out);
    std::sort(out.begin(), out.end(), partition_less);
    return out;
}

namespace {

Block parse_block(const std::string& piece, int n, bool bracket) {
    Block b = 0;
    auto add = [&](long e) {
        if (e < 1 || e > n)
            throw std::invalid_argument("block '" + piece + "': element " +
                                        std::to_string(e) + " outside 1.." +
                                        std::to_string(n));
        b |= Block{1} << (e - 1);
    };
    if (!bracket) {
        for (char c : piece) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("block '" + piece + "': bad character");
            add(c - '0');
        }
    } else {
        if (piece.size() < 2 || piece.front() != '{' || piece.back() != '}')
            throw std::invalid_argument("block '" + piece + "': expected {..}");
        std::string inner = piece.substr(1, piece.size() - 2);
        std::istringstream is(inner);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (tok.empty())
                throw std::invalid_argument("block '" + piece + "': empty entry");
            std::size_t pos = 0;
            long e = std::stol(tok, &pos);
            if (pos != tok.size())
                throw std::invalid_argument("block '" + piece + "': bad entry '" + tok + "'");
            add(e);
        }
    }
    if (!b) throw std::invalid_argument("empty block '" + piece + "'");
    return b;
}

}  // namespace

PartialSetPartition parse_partition(const std::string& text, int n) {
    std::vector<Block> blocks;
    std::string piece;
    std::istringstream is(text);
    bool bracket = !text.empty() && text[0] == '{';
    while (std::getline(is, piece, '|')) {
        if (piece.empty()) throw std::invalid_argument("empty block in '" + text + "'");
        blocks.push_back(parse_block(piece, n, bracket));
    }
    if (blocks.empty()) throw std::invalid_argument("empty partition text");
    return PartialSetPartition(n, std::move(blocks));
}

std::string format_partition(const PartialSetPartition& pi) {
    if (pi.empty()) return "{}";
    std::ostringstream os;
    for (std::size_t i = 0; i < pi.block_count(); ++i) {
        if (i) os << '|';
        os << block_text(pi.blocks()[i], pi.n());
    }
    return os.str();
}

std::string format_ground_set(GroundSet g, int n) {
    return block_text(g, n);
}

}  // namespace margind
