#include "doctest.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "margind/toric.hpp"

using namespace margind;

namespace {

SplitClosedIdeal ideal_of(int n, std::initializer_list<std::string> texts) {
    std::vector<PartialSetPartition> v;
    for (const auto& t : texts) v.push_back(parse_partition(t, n));
    return closure(StatementSet(n, std::move(v)));
}

LatticePolytope points(std::initializer_list<std::vector<long>> ps) {
    LatticePolytope P;
    for (const auto& p : ps) {
        LatticePoint q;
        for (long x : p) q.emplace_back(x);
        P.points.push_back(q);
    }
    return P;
}

// Exact LP feasibility: is x in k * conv(points)?  Tests membership of the
// system {V lambda = x, 1 lambda = k, lambda >= 0} with a phase-1 simplex
// on rationals (Bland's rule).
bool in_dilate(const std::vector<LatticePoint>& pts, const std::vector<Integer>& x,
               long k) {
    std::size_t m = pts.size(), d = pts[0].size();
    std::size_t rows = d + 1, cols = m;
    // Tableau for phase 1: minimize sum of artificials.
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + rows + 1));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < m; ++c) a[r][c] = Rational(pts[c][r]);
        a[r][cols + rows] = Rational(x[r]);
    }
    for (std::size_t c = 0; c < m; ++c) a[d][c] = 1;
    a[d][cols + rows] = k;
    // Make right-hand sides nonnegative, add artificial basis.
    for (std::size_t r = 0; r < rows; ++r) {
        if (a[r][cols + rows] < 0)
            for (auto& v : a[r]) v = -v;
        a[r][cols + r] = 1;
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) basis[r] = cols + r;
    // Objective row: sum of artificial rows.
    std::vector<Rational> obj(cols + rows + 1);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c <= cols + rows; ++c) obj[c] += a[r][c];
    while (true) {
        std::size_t enter = cols + rows;
        for (std::size_t c = 0; c < cols + rows; ++c)
            if (obj[c] > 0) {
                enter = c;
                break;
            }
        if (enter == cols + rows) break;
        std::size_t leave = rows;
        for (std::size_t r = 0; r < rows; ++r) {
            if (a[r][enter] <= 0) continue;
            if (leave == rows ||
                a[r][cols + rows] / a[r][enter] <
                    a[leave][cols + rows] / a[leave][enter] ||
                (a[r][cols + rows] / a[r][enter] ==
                     a[leave][cols + rows] / a[leave][enter] &&
                 basis[r] < basis[leave]))
                leave = r;
        }
        if (leave == rows) break;  // unbounded; cannot happen here
        Rational piv = a[leave][enter];
        for (auto& v : a[leave]) v /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave || a[r][enter] == 0) continue;
            Rational f = a[r][enter];
            for (std::size_t c = 0; c <= cols + rows; ++c)
                a[r][c] -= f * a[leave][c];
        }
        Rational f = obj[enter];
        for (std::size_t c = 0; c <= cols + rows; ++c) obj[c] -= f * a[leave][c];
        basis[leave] = enter;
    }
    // Feasible iff the artificial objective reached zero.
    Rational resid = 0;
    for (std::size_t r = 0; r < rows; ++r)
        if (basis[r] >= cols) resid += a[r][cols + rows];
    return resid == 0;
}

// Ehrhart interpolation oracle: count lattice points of dilates 0..d and
// take d! times the leading coefficient of the interpolating polynomial.
Integer ehrhart_normalized_volume(const std::vector<LatticePoint>& pts) {
    std::size_t d_amb = pts[0].size();
    // Affine dimension via rank of differences.
    std::vector<std::vector<Integer>> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Integer> v(d_amb);
        for (std::size_t c = 0; c < d_amb; ++c) v[c] = pts[i][c] - pts[0][c];
        diffs.push_back(v);
    }
    int dim = diffs.empty() ? 0 : rational_rank(diffs);
    if (dim == 0) return 1;
    std::vector<Rational> counts;  // L(0..dim)
    for (long k = 0; k <= dim; ++k) {
        // Bounding box of k * points.
        std::vector<long> lo(d_amb, 0), hi(d_amb, 0);
        for (std::size_t c = 0; c < d_amb; ++c) {
            long mn = pts[0][c].get_si(), mx = mn;
            for (const auto& p : pts) {
                mn = std::min(mn, (long)p[c].get_si());
                mx = std::max(mx, (long)p[c].get_si());
            }
            lo[c] = mn * k;
            hi[c] = mx * k;
        }
        long count = 0;
        std::vector<Integer> x(d_amb);
        std::function<void(std::size_t)> walk = [&](std::size_t c) {
            if (c == d_amb) {
                if (in_dilate(pts, x, k)) ++count;
                return;
            }
            for (long v = lo[c]; v <= hi[c]; ++v) {
                x[c] = v;
                walk(c + 1);
            }
        };
        walk(0);
        counts.emplace_back(count);
    }
    // Leading coefficient by finite differences: dim! * lead = Delta^dim L(0).
    std::vector<Rational> diff = counts;
    for (int step = 0; step < dim; ++step)
        for (std::size_t i = diff.size() - 1; i > 0; --i) diff[i] = diff[i] - diff[i - 1];
    Rational lead = diff[dim];  // already dim! * leading coefficient
    Integer result(lead.get_num());
    REQUIRE(lead.get_den() == 1);
    return result;
}

}  // namespace

TEST_CASE("projective_dimension anchors") {
    StateShape b4 = StateShape::binary(4);
    CHECK(projective_dimension(param_matrix(SplitClosedIdeal(4, {}), b4)) == 15);
    CHECK(projective_dimension(param_matrix(ideal_of(4, {"1|2"}), b4)) == 14);
    CHECK(projective_dimension(param_matrix(ideal_of(4, {"1|2|3|4"}), b4)) == 4);
}

TEST_CASE("toric_degree anchors") {
    StateShape b4 = StateShape::binary(4);
    CHECK(toric_degree(param_matrix(ideal_of(4, {"1|2|3|4"}), b4)) == 24);
    CHECK(toric_degree(param_matrix(ideal_of(4, {"12|34"}), b4)) == 20);
    CHECK(toric_degree(param_matrix(SplitClosedIdeal(4, {}), b4)) == 1);
}

TEST_CASE("full independence on n variables: degree n!, dimension n") {
    for (int n : {2, 3, 4}) {
        StateShape b = StateShape::binary(n);
        std::string top;
        for (int v = 1; v <= n; ++v) {
            if (v > 1) top += '|';
            top += std::to_string(v);
        }
        auto I = ideal_of(n, {top});
        long fact = 1;
        for (int v = 2; v <= n; ++v) fact *= v;
        CHECK(toric_degree(param_matrix(I, b)) == fact);
        CHECK(projective_dimension(param_matrix(I, b)) == n);
    }
}

TEST_CASE("normalized volume: known polytopes") {
    // Unit square: area 1, normalized 2.
    CHECK(normalized_volume(points({{0, 0}, {1, 0}, {0, 1}, {1, 1}})) == 2);
    // Triangle (0,0),(2,0),(0,1): two fundamental triangles.
    CHECK(normalized_volume(points({{0, 0}, {2, 0}, {0, 1}, {1, 0}})) == 2);
    // Unit cube in Z^3: 6.
    CHECK(normalized_volume(points({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                    {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})) == 6);
    // Single point and segment degenerate to 1.
    CHECK(normalized_volume(points({{3, 4}})) == 1);
    // Volumes are measured in the lattice generated by the point
    // differences: a doubled square or a long segment is unimodularly a
    // unit square or a unit step.
    CHECK(normalized_volume(points({{0, 0}, {2, 2}})) == 1);
    CHECK(normalized_volume(points({{0, 0}, {2, 0}, {0, 2}, {2, 2}})) == 2);
    CHECK(normalized_volume(points({{0, 0}, {2, 0}, {0, 2}})) == 1);
    // Interior and boundary points change nothing.
    CHECK(normalized_volume(points({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 1}})) == 2);
}

TEST_CASE("Ehrhart oracle agrees with the triangulation volume") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 12; ++trial) {
        int dim = 2 + static_cast<int>(rng() % 2);
        int count = 2 + static_cast<int>(rng() % 3);
        LatticePolytope P;
        // Seed with the origin and the standard basis so the difference
        // lattice is the full ambient lattice; the oracle counts ambient
        // points, so the two normalizations must then coincide.
        P.points.emplace_back(LatticePoint(dim, 0));
        for (int c = 0; c < dim; ++c) {
            LatticePoint e(dim, 0);
            e[c] = 1;
            P.points.push_back(e);
        }
        for (int i = 0; i < count; ++i) {
            LatticePoint p;
            for (int c = 0; c < dim; ++c)
                p.emplace_back(static_cast<long>(rng() % 5));
            P.points.push_back(p);
        }
        std::sort(P.points.begin(), P.points.end());
        P.points.erase(std::unique(P.points.begin(), P.points.end()), P.points.end());
        Integer tri = normalized_volume(P);
        Integer ehr = ehrhart_normalized_volume(P.points);
        CHECK(tri == ehr);
    }
}

TEST_CASE("volume does not depend on point insertion order") {
    std::mt19937_64 rng(29);
    StateShape b4 = StateShape::binary(4);
    auto I = ideal_of(4, {"1|23", "14|2"});
    LatticePolytope P = polytope_of(param_matrix(I, b4));
    Integer ref = normalized_volume(P);
    for (int trial = 0; trial < 4; ++trial) {
        LatticePolytope Q = P;
        std::shuffle(Q.points.begin(), Q.points.end(), rng);
        CHECK(normalized_volume(Q) == ref);
    }
}

TEST_CASE("degree invariant under relabeling") {
    StateShape b4 = StateShape::binary(4);
    auto I = ideal_of(4, {"1|2|34"});
    Integer ref = toric_degree(param_matrix(I, b4));
    std::vector<int> sigma{1, 2, 3, 4};
    do {
        auto J = relabel(I, sigma);
        CHECK(toric_degree(param_matrix(J, b4)) == ref);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
}
