#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "margind/closure.hpp"
#include "margind/tensor.hpp"

// Defining equations of a marginal independence model in cdf coordinates
// and the integer matrix of its monomial parametrization.

namespace margind {

// Ground sets D that carry a statement of the ideal; their cdf
// coordinates factor.
std::vector<GroundSet> disconnected_sets(const SplitClosedIdeal& I);

// Unique maximal partition of D into sets connected with respect to I;
// a single block when D itself is connected.
PartialSetPartition max_connected_decomposition(GroundSet D, const SplitClosedIdeal& I);

// One binomial q_lead - prod q_factor per index vector with disconnected
// support; the factors agree with the lead on one maximal connected block
// each and sit at the maximum elsewhere.
struct FactorEquation {
    IndexVector lead;
    std::vector<IndexVector> factors;
};

std::vector<FactorEquation> maximal_equations(const SplitClosedIdeal& I,
                                              const StateShape& shape);

Rational evaluate(const FactorEquation& f, const RationalTensor& Q);
std::string format_equation(const FactorEquation& f, const StateShape& shape);

// A 2x2 minor of a flattening, as the difference of two products of
// coordinates: m[0]*m[1] - m[2]*m[3].
struct MinorEquation {
    std::array<IndexVector, 4> cells;
};

// 2x2 minors of the flattening of the marginalized cdf tensor Q_pi whose
// rows are the joint states of the block containing the minimum element
// and whose columns are the remaining blocks' joint states in row-major
// order.  Indices outside |pi| are pinned to their maximum.
std::vector<MinorEquation> minor_equations(const PartialSetPartition& pi,
                                           const StateShape& shape);

Rational evaluate(const MinorEquation& m, const RationalTensor& Q);

// Probability-coordinate analogue: each matrix entry is a sum of p's over
// the summed-out variables.  Used to verify sample points only.
struct ProbMinorEquation {
    std::array<std::vector<IndexVector>, 4> cells;
};

std::vector<ProbMinorEquation> minor_equations_prob(const PartialSetPartition& pi,
                                                    const StateShape& shape);

Rational evaluate(const ProbMinorEquation& m, const RationalTensor& P);

// Row of the parametrization matrix: the homogenizing t row or a
// theta^{(C)}_l row for a connected set C and a level l with support C.
struct ParamRow {
    bool is_t = false;
    GroundSet conn = 0;
    IndexVector level;  // full index vector, at max outside conn

    std::string label(const StateShape& shape) const;
};

class ParamMatrix {
public:
    ParamMatrix() = default;
    ParamMatrix(const StateShape& shape, std::vector<ParamRow> rows,
                std::vector<IndexVector> cols,
                std::vector<std::vector<int>> entries);

    const StateShape& shape() const { return shape_; }
    const std::vector<ParamRow>& rows() const { return rows_; }
    const std::vector<IndexVector>& cols() const { return cols_; }
    int entry(std::size_t r, std::size_t c) const { return a_[r][c]; }
    const std::vector<std::vector<int>>& entries() const { return a_; }

    // Column position of an index vector; throws on unknown labels.
    std::size_t column_of(const IndexVector& i) const;

    std::string to_csv() const;
    std::string to_plain() const;  // bare integer block, one row per line

private:
    StateShape shape_;
    std::vector<ParamRow> rows_;
    std::vector<IndexVector> cols_;
    std::vector<std::vector<int>> a_;
    std::map<IndexVector, std::size_t> col_index_;
};

// The 0/1 matrix A_C of the monomial parametrization
// q_i = t * prod_j theta^{(pi_j)}_{i restricted to pi_j}, with one column
// per index vector.  Columns are ordered by support size, then support,
// then the index itself, which reproduces the usual printed layout.
ParamMatrix param_matrix(const SplitClosedIdeal& I, const StateShape& shape);

// Variant that reads the factorization of each ground set off the ideal's
// own maximal element with that ground set, without applying any further
// splitting.  Identical to param_matrix whenever I is split closed; the
// census uses it so that ideals are rendered exactly as stored.
ParamMatrix param_matrix_literal(const SplitClosedIdeal& I, const StateShape& shape);

// q_i = prod over rows theta_row^{A[row,i]}; all parameters must be > 0.
RationalTensor evaluate_parametrization(const ParamMatrix& A,
                                        const std::vector<Rational>& theta);

// True iff the exponent vectors of the two monomials agree in every row,
// i.e. the binomial prod q(plus) - prod q(minus) lies in ker of the
// monomial map.
bool binomial_in_kernel(const ParamMatrix& A,
                        const std::vector<IndexVector>& mono_plus,
                        const std::vector<IndexVector>& mono_minus);

}  // namespace margind
