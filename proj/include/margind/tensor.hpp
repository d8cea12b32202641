#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "margind/partition.hpp"

// Exact rational tensors over finite state spaces and the transform
// between probability and cdf coordinates.
//
// State spaces are [r_1] x ... x [r_n] with every r_l >= 2.  An index
// entry equal to r_l plays the role of "+": in probability coordinates it
// stands for summing the variable out, in cdf coordinates for X_l <= max.
// The support of an index vector is the set of positions not at their
// maximum.

namespace margind {

using Rational = mpq_class;
using IndexVector = std::vector<int>;  // 1-based states, i[l] in 1..r[l]

class StateShape {
public:
    StateShape() = default;
    explicit StateShape(std::vector<int> r);
    static StateShape binary(int n) { return StateShape(std::vector<int>(n, 2)); }

    int n() const { return static_cast<int>(r_.size()); }
    int operator[](int l) const { return r_[l]; }  // 0-based position
    const std::vector<int>& levels() const { return r_; }
    bool is_binary() const;

    std::size_t cell_count() const;
    std::size_t offset(const IndexVector& i) const;
    IndexVector index_at(std::size_t off) const;  // row-major order

    IndexVector max_index() const;
    GroundSet support(const IndexVector& i) const;
    // Index agreeing with i on `mask` (1-based positions) and at max elsewhere.
    IndexVector restrict_to(const IndexVector& i, GroundSet mask) const;

    bool operator==(const StateShape& o) const { return r_ == o.r_; }

private:
    std::vector<int> r_;
    std::vector<std::size_t> stride_;
};

class RationalTensor {
public:
    RationalTensor() = default;
    explicit RationalTensor(StateShape shape)
        : shape_(std::move(shape)), data_(shape_.cell_count()) {}

    const StateShape& shape() const { return shape_; }
    Rational& at(const IndexVector& i) { return data_[shape_.offset(i)]; }
    const Rational& at(const IndexVector& i) const { return data_[shape_.offset(i)]; }
    Rational& flat(std::size_t off) { return data_[off]; }
    const Rational& flat(std::size_t off) const { return data_[off]; }
    std::size_t size() const { return data_.size(); }

    Rational sum() const;
    bool all_nonnegative() const;

    bool operator==(const RationalTensor& o) const {
        return shape_ == o.shape_ && data_ == o.data_;
    }

private:
    StateShape shape_;
    std::vector<Rational> data_;
};

// q_i = sum of p_j over j <= i componentwise.
RationalTensor prob_to_cdf(const RationalTensor& P);

// Moebius inversion on the product poset of the index vectors; exact
// inverse of prob_to_cdf.
RationalTensor cdf_to_prob(const RationalTensor& Q);

// Coordinate label: support-indexed for binary shapes (q_123, q with empty
// support), full index digits otherwise (q_213).
std::string coordinate_name(const StateShape& shape, const IndexVector& i);

}  // namespace margind
