#include "margind/model_equations.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace margind {

std::vector<GroundSet> disconnected_sets(const SplitClosedIdeal& I) {
    std::vector<GroundSet> out;
    for (const auto& p : I.elements()) out.push_back(p.ground());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PartialSetPartition max_connected_decomposition(GroundSet D, const SplitClosedIdeal& I) {
    if (!D) throw std::invalid_argument("max_connected_decomposition: empty set");
    return fixpoint_split(PartialSetPartition(I.n(), {D}), maximal_generators(I));
}

namespace {

// Index vectors with the given support, i.e. free below max on `supp` and
// pinned to max elsewhere.
std::vector<IndexVector> indices_with_support(const StateShape& shape, GroundSet supp) {
    std::vector<IndexVector> out{shape.max_index()};
    for (int l = 0; l < shape.n(); ++l) {
        if (!(supp >> l & 1)) continue;
        std::vector<IndexVector> next;
        next.reserve(out.size() * (shape[l] - 1));
        for (const auto& i : out)
            for (int v = 1; v < shape[l]; ++v) {
                IndexVector j = i;
                j[l] = v;
                next.push_back(j);
            }
        out = std::move(next);
    }
    return out;
}

// All joint states (max included) on `mask`, max elsewhere; row-major.
std::vector<IndexVector> all_states_on(const StateShape& shape, GroundSet mask) {
    std::vector<IndexVector> out{shape.max_index()};
    for (int l = 0; l < shape.n(); ++l) {
        if (!(mask >> l & 1)) continue;
        std::vector<IndexVector> next;
        next.reserve(out.size() * shape[l]);
        for (const auto& i : out)
            for (int v = 1; v <= shape[l]; ++v) {
                IndexVector j = i;
                j[l] = v;
                next.push_back(j);
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

std::vector<FactorEquation> maximal_equations(const SplitClosedIdeal& I,
                                              const StateShape& shape) {
    if (shape.n() != I.n())
        throw std::invalid_argument("maximal_equations: shape arity mismatch");
    auto disc = disconnected_sets(I);
    std::vector<FactorEquation> out;
    for (std::size_t off = 0; off < shape.cell_count(); ++off) {
        IndexVector i = shape.index_at(off);
        GroundSet supp = shape.support(i);
        if (!std::binary_search(disc.begin(), disc.end(), supp)) continue;
        PartialSetPartition decomp = max_connected_decomposition(supp, I);
        FactorEquation f;
        f.lead = i;
        for (Block b : decomp.blocks()) f.factors.push_back(shape.restrict_to(i, b));
        out.push_back(std::move(f));
    }
    return out;
}

Rational evaluate(const FactorEquation& f, const RationalTensor& Q) {
    Rational prod = 1;
    for (const auto& j : f.factors) prod *= Q.at(j);
    return Q.at(f.lead) - prod;
}

std::string format_equation(const FactorEquation& f, const StateShape& shape) {
    std::ostringstream os;
    os << coordinate_name(shape, f.lead) << " - ";
    for (std::size_t k = 0; k < f.factors.size(); ++k) {
        if (k) os << '*';
        os << coordinate_name(shape, f.factors[k]);
    }
    return os.str();
}

namespace {

// Joint states of a block (maximum included), row-major in the block's
// positions; entries outside the block sit at max.
std::vector<IndexVector> block_states(const StateShape& shape, Block b) {
    return all_states_on(shape, b);
}

// Merge: take entries of `part` on mask, of `rest` elsewhere.
IndexVector overlay(const IndexVector& rest, const IndexVector& part, GroundSet mask) {
    IndexVector i = rest;
    for (std::size_t l = 0; l < i.size(); ++l)
        if (mask >> l & 1) i[l] = part[l];
    return i;
}

}  // namespace

std::vector<MinorEquation> minor_equations(const PartialSetPartition& pi,
                                           const StateShape& shape) {
    if (pi.block_count() < 2)
        throw std::invalid_argument("minor_equations: need at least two blocks");
    Block rows_block = pi.blocks().front();  // contains the minimum element
    GroundSet cols_mask = pi.ground() & ~rows_block;
    auto rows = block_states(shape, rows_block);
    // Column states run over the remaining blocks jointly, row-major over
    // positions; indices outside |pi| stay at max throughout.
    auto cols = block_states(shape, cols_mask);
    std::vector<MinorEquation> out;
    for (std::size_t r1 = 0; r1 < rows.size(); ++r1)
        for (std::size_t r2 = r1 + 1; r2 < rows.size(); ++r2)
            for (std::size_t c1 = 0; c1 < cols.size(); ++c1)
                for (std::size_t c2 = c1 + 1; c2 < cols.size(); ++c2) {
                    MinorEquation m;
                    m.cells[0] = overlay(rows[r1], cols[c1], cols_mask);
                    m.cells[1] = overlay(rows[r2], cols[c2], cols_mask);
                    m.cells[2] = overlay(rows[r1], cols[c2], cols_mask);
                    m.cells[3] = overlay(rows[r2], cols[c1], cols_mask);
                    out.push_back(std::move(m));
                }
    return out;
}

Rational evaluate(const MinorEquation& m, const RationalTensor& Q) {
    return Q.at(m.cells[0]) * Q.at(m.cells[1]) - Q.at(m.cells[2]) * Q.at(m.cells[3]);
}

std::vector<ProbMinorEquation> minor_equations_prob(const PartialSetPartition& pi,
                                                    const StateShape& shape) {
    auto minors = minor_equations(pi, shape);
    GroundSet outside = full_ground(shape.n()) & ~pi.ground();
    std::vector<ProbMinorEquation> out;
    out.reserve(minors.size());
    for (const auto& m : minors) {
        ProbMinorEquation pm;
        for (int k = 0; k < 4; ++k)
            // '+' marginalization: sum over every joint state of the
            // variables outside |pi|.
            for (const auto& ext : all_states_on(shape, outside))
                pm.cells[k].push_back(overlay(m.cells[k], ext, outside));
        out.push_back(std::move(pm));
    }
    return out;
}

Rational evaluate(const ProbMinorEquation& m, const RationalTensor& P) {
    std::array<Rational, 4> s;
    for (int k = 0; k < 4; ++k) {
        s[k] = 0;
        for (const auto& cell : m.cells[k]) s[k] += P.at(cell);
    }
    return s[0] * s[1] - s[2] * s[3];
}

std::string ParamRow::label(const StateShape& shape) const {
    if (is_t) return "t";
    std::ostringstream os;
    os << "th_";
    for (int l = 0; l < shape.n(); ++l)
        if (conn >> l & 1) os << l + 1;
    if (!shape.is_binary()) {
        os << '_';
        for (int l = 0; l < shape.n(); ++l)
            if (conn >> l & 1) os << level[l];
    }
    return os.str();
}

ParamMatrix::ParamMatrix(const StateShape& shape, std::vector<ParamRow> rows,
                         std::vector<IndexVector> cols,
                         std::vector<std::vector<int>> entries)
    : shape_(shape), rows_(std::move(rows)), cols_(std::move(cols)),
      a_(std::move(entries)) {
    for (std::size_t c = 0; c < cols_.size(); ++c) col_index_[cols_[c]] = c;
}

std::size_t ParamMatrix::column_of(const IndexVector& i) const {
    auto it = col_index_.find(i);
    if (it == col_index_.end())
        throw std::invalid_argument("unknown column label");
    return it->second;
}

std::string ParamMatrix::to_csv() const {
    std::ostringstream os;
    for (const auto& c : cols_) os << ',' << coordinate_name(shape_, c);
    os << '\n';
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        os << rows_[r].label(shape_);
        for (std::size_t c = 0; c < cols_.size(); ++c) os << ',' << a_[r][c];
        os << '\n';
    }
    return os.str();
}

std::string ParamMatrix::to_plain() const {
    std::ostringstream os;
    for (const auto& row : a_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ' ';
            os << row[c];
        }
        os << '\n';
    }
    return os.str();
}

namespace {

bool index_vector_less(const IndexVector& a, const IndexVector& b) { return a < b; }

// Lexicographic order on subsets as sorted element lists; the smallest
// element in the symmetric difference decides.
bool set_lex_less(GroundSet a, GroundSet b) {
    if (a == b) return false;
    GroundSet low = (a ^ b) & -(a ^ b);
    return a & low;
}

}  // namespace

namespace {

// Shared builder; `parts_of` maps every nonempty support to the blocks its
// coordinate factors through.
ParamMatrix build_param_matrix(
    const SplitClosedIdeal& I, const StateShape& shape,
    const std::function<std::vector<Block>(GroundSet)>& parts_of) {
    if (shape.n() != I.n())
        throw std::invalid_argument("param_matrix: shape arity mismatch");
    GroundSet all = full_ground(shape.n());
    auto disc = disconnected_sets(I);

    // Parameter index sets: the connected sets plus any block the columns
    // factor through (those coincide for split closed ideals).
    std::vector<GroundSet> param_sets;
    for (GroundSet s = 1; s <= all; ++s)
        if (!std::binary_search(disc.begin(), disc.end(), s)) param_sets.push_back(s);
    for (GroundSet s = 1; s <= all; ++s)
        for (Block b : parts_of(s)) param_sets.push_back(b);
    std::sort(param_sets.begin(), param_sets.end(), [](GroundSet a, GroundSet b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return set_lex_less(a, b);
    });
    param_sets.erase(std::unique(param_sets.begin(), param_sets.end()),
                     param_sets.end());

    std::vector<ParamRow> rows;
    rows.push_back(ParamRow{true, 0, shape.max_index()});
    std::map<std::pair<GroundSet, IndexVector>, std::size_t> row_index;
    for (GroundSet c : param_sets) {
        auto levels = indices_with_support(shape, c);
        std::sort(levels.begin(), levels.end(), index_vector_less);
        for (const auto& l : levels) {
            row_index[{c, l}] = rows.size();
            rows.push_back(ParamRow{false, c, l});
        }
    }

    // Columns: every index vector, ordered by support size, support, index.
    std::vector<IndexVector> cols;
    cols.reserve(shape.cell_count());
    for (std::size_t off = 0; off < shape.cell_count(); ++off)
        cols.push_back(shape.index_at(off));
    std::stable_sort(cols.begin(), cols.end(),
                     [&shape](const IndexVector& a, const IndexVector& b) {
                         GroundSet sa = shape.support(a), sb = shape.support(b);
                         int pa = std::popcount(sa), pb = std::popcount(sb);
                         if (pa != pb) return pa < pb;
                         if (sa != sb) return set_lex_less(sa, sb);
                         return a < b;
                     });

    std::vector<std::vector<int>> a(rows.size(), std::vector<int>(cols.size(), 0));
    for (std::size_t cidx = 0; cidx < cols.size(); ++cidx) {
        a[0][cidx] = 1;
        GroundSet supp = shape.support(cols[cidx]);
        if (!supp) continue;
        for (Block b : parts_of(supp)) {
            IndexVector level = shape.restrict_to(cols[cidx], b);
            a[row_index.at({b, level})][cidx] = 1;
        }
    }
    return ParamMatrix(shape, std::move(rows), std::move(cols), std::move(a));
}

}  // namespace

ParamMatrix param_matrix(const SplitClosedIdeal& I, const StateShape& shape) {
    return build_param_matrix(I, shape, [&I](GroundSet s) {
        return max_connected_decomposition(s, I).blocks();
    });
}

ParamMatrix param_matrix_literal(const SplitClosedIdeal& I, const StateShape& shape) {
    // Maximal stored element per ground set.
    std::map<GroundSet, PartialSetPartition> top;
    for (const auto& p : I.elements()) {
        auto it = top.find(p.ground());
        if (it == top.end())
            top.emplace(p.ground(), p);
        else if (leq(it->second, p))
            it->second = p;
    }
    for (const auto& [g, p] : top)
        for (const auto& q : I.elements())
            if (q.ground() == g && !leq(q, p))
                throw std::logic_error("ground set without a unique maximal element");
    return build_param_matrix(I, shape, [top](GroundSet s) -> std::vector<Block> {
        auto it = top.find(s);
        if (it == top.end()) return {s};
        return it->second.blocks();
    });
}

RationalTensor evaluate_parametrization(const ParamMatrix& A,
                                        const std::vector<Rational>& theta) {
    if (theta.size() != A.rows().size())
        throw std::invalid_argument("evaluate_parametrization: wrong parameter count");
    for (const auto& t : theta)
        if (t <= 0) throw std::invalid_argument("parameters must be positive");
    RationalTensor Q(A.shape());
    for (std::size_t c = 0; c < A.cols().size(); ++c) {
        Rational v = 1;
        for (std::size_t r = 0; r < A.rows().size(); ++r)
            if (A.entry(r, c)) v *= theta[r];
        Q.at(A.cols()[c]) = v;
    }
    return Q;
}

bool binomial_in_kernel(const ParamMatrix& A,
                        const std::vector<IndexVector>& mono_plus,
                        const std::vector<IndexVector>& mono_minus) {
    std::vector<long> plus(A.rows().size(), 0), minus(A.rows().size(), 0);
    for (const auto& i : mono_plus) {
        std::size_t c = A.column_of(i);
        for (std::size_t r = 0; r < A.rows().size(); ++r) plus[r] += A.entry(r, c);
    }
    for (const auto& i : mono_minus) {
        std::size_t c = A.column_of(i);
        for (std::size_t r = 0; r < A.rows().size(); ++r) minus[r] += A.entry(r, c);
    }
    return plus == minus;
}

}  // namespace margind
