#include "margind/toric.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace margind {

LatticePolytope polytope_of(const ParamMatrix& A) {
    LatticePolytope P;
    std::set<std::vector<long>> seen;
    for (std::size_t c = 0; c < A.cols().size(); ++c) {
        std::vector<long> v;
        for (std::size_t r = 1; r < A.rows().size(); ++r)  // drop the t row
            v.push_back(A.entry(r, c));
        if (seen.insert(v).second) {
            LatticePoint p(v.size());
            for (std::size_t k = 0; k < v.size(); ++k) p[k] = v[k];
            P.points.push_back(std::move(p));
        }
    }
    return P;
}

int rational_rank(const std::vector<std::vector<Integer>>& m) {
    if (m.empty()) return 0;
    auto a = m;
    std::size_t rows = a.size(), cols = a[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            Integer f = a[r][c], g = a[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                a[r][k] = a[r][k] * g - a[rank][k] * f;
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

int projective_dimension(const ParamMatrix& A) {
    std::vector<std::vector<Integer>> m;
    for (std::size_t r = 0; r < A.rows().size(); ++r) {
        std::vector<Integer> row;
        for (std::size_t c = 0; c < A.cols().size(); ++c) row.push_back(A.entry(r, c));
        m.push_back(std::move(row));
    }
    return rational_rank(m) - 1;
}

Integer determinant(std::vector<std::vector<Integer>> m) {
    std::size_t d = m.size();
    Integer sign = 1, denom = 1;
    for (std::size_t k = 0; k < d; ++k) {
        std::size_t pivot = k;
        while (pivot < d && m[pivot][k] == 0) ++pivot;
        if (pivot == d) return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t r = k + 1; r < d; ++r) {
            for (std::size_t c = k + 1; c < d; ++c) {
                m[r][c] = m[r][c] * m[k][k] - m[r][k] * m[k][c];
                m[r][c] /= denom;  // exact in the Bareiss scheme
            }
            m[r][k] = 0;
        }
        denom = m[k][k];
    }
    return sign * m[d - 1][d - 1];
}

namespace {

// Row-style Hermite reduction: returns a basis of the lattice generated by
// the given vectors, as echelon rows.
std::vector<std::vector<Integer>> lattice_basis(std::vector<std::vector<Integer>> rows) {
    std::vector<std::vector<Integer>> basis;
    if (rows.empty()) return basis;
    std::size_t dim = rows[0].size();
    std::size_t col = 0;
    while (col < dim && !rows.empty()) {
        // Reduce all rows on this column with a gcd cascade.
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (rows[r][col] != 0 &&
                    (best == rows.size() ||
                     abs(rows[r][col]) < abs(rows[best][col])))
                    best = r;
            if (best == rows.size()) break;  // column cleared
            std::swap(rows[0], rows[best]);
            bool done = true;
            for (std::size_t r = 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                Integer q = rows[r][col] / rows[0][col];
                for (std::size_t c = 0; c < dim; ++c)
                    rows[r][c] -= q * rows[0][c];
                if (rows[r][col] != 0) done = false;
            }
            if (done) {
                basis.push_back(rows[0]);
                rows.erase(rows.begin());
                break;
            }
        }
        ++col;
        // Drop zero rows as they appear.
        rows.erase(std::remove_if(rows.begin(), rows.end(),
                                  [](const std::vector<Integer>& v) {
                                      return std::all_of(v.begin(), v.end(),
                                                         [](const Integer& x) {
                                                             return x == 0;
                                                         });
                                  }),
                   rows.end());
    }
    return basis;
}

// Solve x * B = v over the integers for echelon basis B; the vectors fed
// here lie in the lattice by construction.
std::vector<Integer> coords_in_basis(const std::vector<std::vector<Integer>>& basis,
                                     const std::vector<Integer>& v) {
    std::vector<Integer> x(basis.size(), 0);
    std::vector<Integer> rem = v;
    for (std::size_t r = 0; r < basis.size(); ++r) {
        std::size_t lead = 0;
        while (lead < basis[r].size() && basis[r][lead] == 0) ++lead;
        if (lead == basis[r].size()) continue;
        Integer q = rem[lead] / basis[r][lead];
        if (q * basis[r][lead] != rem[lead])
            throw std::logic_error("vector outside the generated lattice");
        x[r] = q;
        for (std::size_t c = 0; c < rem.size(); ++c) rem[c] -= q * basis[r][c];
    }
    for (const auto& e : rem)
        if (e != 0) throw std::logic_error("vector outside the generated lattice");
    return x;
}

using Facet = std::vector<std::size_t>;  // point indices, sorted

Integer orientation(const std::vector<std::vector<Integer>>& pts,
                    const Facet& facet, std::size_t apex) {
    std::size_t d = pts[0].size();
    std::vector<std::vector<Integer>> m;
    for (std::size_t k = 1; k < facet.size(); ++k) {
        std::vector<Integer> row(d);
        for (std::size_t c = 0; c < d; ++c)
            row[c] = pts[facet[k]][c] - pts[facet[0]][c];
        m.push_back(std::move(row));
    }
    std::vector<Integer> row(d);
    for (std::size_t c = 0; c < d; ++c) row[c] = pts[apex][c] - pts[facet[0]][c];
    m.push_back(std::move(row));
    return determinant(std::move(m));
}

}  // namespace

Integer normalized_volume(const LatticePolytope& P) {
    if (P.points.size() <= 1) return 1;
    std::size_t m = P.points.size();
    std::size_t ambient = P.points[0].size();

    // Difference vectors from the first point, and the lattice they span.
    std::vector<std::vector<Integer>> diffs;
    for (std::size_t i = 1; i < m; ++i) {
        std::vector<Integer> d(ambient);
        for (std::size_t c = 0; c < ambient; ++c)
            d[c] = P.points[i][c] - P.points[0][c];
        diffs.push_back(std::move(d));
    }
    auto basis = lattice_basis(diffs);
    std::size_t dim = basis.size();
    if (dim == 0) return 1;

    // Points in lattice coordinates; point 0 is the origin.
    std::vector<std::vector<Integer>> pts(m, std::vector<Integer>(dim, 0));
    for (std::size_t i = 1; i < m; ++i) pts[i] = coords_in_basis(basis, diffs[i - 1]);

    // Initial full-dimensional simplex, greedily.
    std::vector<std::size_t> simplex{0};
    {
        std::vector<std::vector<Integer>> span;
        for (std::size_t i = 1; i < m && simplex.size() < dim + 1; ++i) {
            span.push_back(pts[i]);
            if (rational_rank(span) == static_cast<int>(span.size()))
                simplex.push_back(i);
            else
                span.pop_back();
        }
    }
    if (simplex.size() != dim + 1)
        throw std::logic_error("degenerate point set after lattice reduction");

    std::vector<std::vector<std::size_t>> simplices{simplex};
    std::vector<bool> used(m, false);
    for (std::size_t i : simplex) used[i] = true;

    // Placing insertion: cone every strictly visible boundary facet to the
    // new point.  Interior or boundary points add nothing.
    for (std::size_t p = 0; p < m; ++p) {
        if (used[p]) continue;
        used[p] = true;
        // Boundary facets of the current triangulation: facets that occur
        // exactly once, each remembered with its opposite vertex.
        std::map<Facet, std::vector<std::size_t>> facet_opp;
        for (const auto& s : simplices)
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Facet f;
                for (std::size_t k = 0; k < s.size(); ++k)
                    if (k != drop) f.push_back(s[k]);
                std::sort(f.begin(), f.end());
                facet_opp[f].push_back(s[drop]);
            }
        std::vector<std::vector<std::size_t>> added;
        for (const auto& [facet, opps] : facet_opp) {
            if (opps.size() != 1) continue;
            Integer side_p = orientation(pts, facet, p);
            if (side_p == 0) continue;
            Integer side_in = orientation(pts, facet, opps[0]);
            if (sgn(side_p) == sgn(side_in)) continue;  // not visible
            std::vector<std::size_t> s = facet;
            s.push_back(p);
            added.push_back(std::move(s));
        }
        simplices.insert(simplices.end(), added.begin(), added.end());
    }

    Integer vol = 0;
    for (const auto& s : simplices) {
        std::vector<std::vector<Integer>> edges;
        for (std::size_t k = 1; k < s.size(); ++k) {
            std::vector<Integer> row(dim);
            for (std::size_t c = 0; c < dim; ++c)
                row[c] = pts[s[k]][c] - pts[s[0]][c];
            edges.push_back(std::move(row));
        }
        vol += abs(determinant(std::move(edges)));
    }
    return vol;
}

Integer toric_degree(const ParamMatrix& A) {
    return normalized_volume(polytope_of(A));
}

}  // namespace margind
