#include "margind/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace margind {

StateShape::StateShape(std::vector<int> r) : r_(std::move(r)) {
    if (r_.size() > 16) throw std::invalid_argument("state shape too long");
    for (int v : r_)
        if (v < 2) throw std::invalid_argument("state counts must be >= 2");
    stride_.assign(r_.size(), 1);
    for (int l = static_cast<int>(r_.size()) - 2; l >= 0; --l)
        stride_[l] = stride_[l + 1] * static_cast<std::size_t>(r_[l + 1]);
}

bool StateShape::is_binary() const {
    for (int v : r_)
        if (v != 2) return false;
    return true;
}

std::size_t StateShape::cell_count() const {
    std::size_t c = 1;
    for (int v : r_) c *= static_cast<std::size_t>(v);
    return c;
}

std::size_t StateShape::offset(const IndexVector& i) const {
    if (i.size() != r_.size()) throw std::invalid_argument("index arity mismatch");
    std::size_t off = 0;
    for (std::size_t l = 0; l < r_.size(); ++l) {
        if (i[l] < 1 || i[l] > r_[l]) throw std::out_of_range("index entry out of range");
        off += stride_[l] * static_cast<std::size_t>(i[l] - 1);
    }
    return off;
}

IndexVector StateShape::index_at(std::size_t off) const {
    IndexVector i(r_.size());
    for (std::size_t l = 0; l < r_.size(); ++l) {
        i[l] = static_cast<int>(off / stride_[l]) + 1;
        off %= stride_[l];
    }
    return i;
}

IndexVector StateShape::max_index() const {
    IndexVector i(r_.size());
    for (std::size_t l = 0; l < r_.size(); ++l) i[l] = r_[l];
    return i;
}

GroundSet StateShape::support(const IndexVector& i) const {
    GroundSet s = 0;
    for (std::size_t l = 0; l < r_.size(); ++l)
        if (i[l] != r_[l]) s |= GroundSet{1} << l;
    return s;
}

IndexVector StateShape::restrict_to(const IndexVector& i, GroundSet mask) const {
    IndexVector j = max_index();
    for (std::size_t l = 0; l < r_.size(); ++l)
        if (mask >> l & 1) j[l] = i[l];
    return j;
}

Rational RationalTensor::sum() const {
    Rational s = 0;
    for (const auto& v : data_) s += v;
    return s;
}

bool RationalTensor::all_nonnegative() const {
    for (const auto& v : data_)
        if (v < 0) return false;
    return true;
}

RationalTensor prob_to_cdf(const RationalTensor& P) {
    RationalTensor Q = P;
    const StateShape& sh = Q.shape();
    // Prefix sums along each axis in turn.
    for (int l = 0; l < sh.n(); ++l) {
        for (std::size_t off = 0; off < Q.size(); ++off) {
            IndexVector i = sh.index_at(off);
            if (i[l] == 1) continue;
            IndexVector j = i;
            --j[l];
            Q.flat(off) += Q.at(j);
        }
    }
    return Q;
}

RationalTensor cdf_to_prob(const RationalTensor& Q) {
    RationalTensor P = Q;
    const StateShape& sh = P.shape();
    // Backward differences along each axis; mu(j,i) factors as a product
    // of the one-dimensional chain Moebius functions.
    for (int l = 0; l < sh.n(); ++l) {
        for (std::size_t off = P.size(); off-- > 0;) {
            IndexVector i = sh.index_at(off);
            if (i[l] == 1) continue;
            IndexVector j = i;
            --j[l];
            P.flat(off) -= P.at(j);
        }
    }
    return P;
}

std::string coordinate_name(const StateShape& shape, const IndexVector& i) {
    std::ostringstream os;
    os << 'q';
    if (shape.is_binary()) {
        GroundSet s = shape.support(i);
        if (s) {
            os << '_';
            for (int l = 0; l < shape.n(); ++l)
                if (s >> l & 1) os << l + 1;
        }
    } else {
        os << '_';
        for (std::size_t l = 0; l < i.size(); ++l) os << i[l];
    }
    return os.str();
}

}  // namespace margind
