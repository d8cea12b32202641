#pragma once

#include <gmpxx.h>

#include <vector>

#include "margind/model_equations.hpp"

// Dimension and degree of the projective toric variety attached to a
// parametrization matrix, via exact polytope geometry: the degree is the
// normalized lattice volume of the convex hull of the matrix columns
// (t row dropped), measured in the lattice spanned by their differences.

namespace margind {

using Integer = mpz_class;
using LatticePoint = std::vector<Integer>;

struct LatticePolytope {
    std::vector<LatticePoint> points;  // duplicates removed
};

LatticePolytope polytope_of(const ParamMatrix& A);

// Rank over the rationals of an integer matrix (rows of equal length).
int rational_rank(const std::vector<std::vector<Integer>>& m);

// rank(A) - 1; the affine dimension of the column polytope.
int projective_dimension(const ParamMatrix& A);

// Normalized volume (dim! times Euclidean volume measured in the affine
// lattice generated by the point differences).  A single point, or an
// empty set, has degree 1.
Integer normalized_volume(const LatticePolytope& P);

Integer toric_degree(const ParamMatrix& A);

// Determinant of a square integer matrix (Bareiss).
Integer determinant(std::vector<std::vector<Integer>> m);

}  // namespace margind
