#include "margind/markov.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace margind {

BidirectedGraph::BidirectedGraph(int n) : n_(n), adj_(n, 0) {
    if (n < 1 || n > kMaxGroundSize) throw std::invalid_argument("bad vertex count");
}

BidirectedGraph::BidirectedGraph(int n, const std::vector<std::pair<int, int>>& edges)
    : BidirectedGraph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void BidirectedGraph::add_edge(int u, int v) {
    if (u < 1 || u > n_ || v < 1 || v > n_ || u == v)
        throw std::invalid_argument("bad edge " + std::to_string(u) + "-" +
                                    std::to_string(v));
    adj_[u - 1] |= GroundSet{1} << (v - 1);
    adj_[v - 1] |= GroundSet{1} << (u - 1);
}

bool BidirectedGraph::has_edge(int u, int v) const {
    return adj_[u - 1] >> (v - 1) & 1;
}

std::vector<std::pair<int, int>> BidirectedGraph::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v)
            if (has_edge(u, v)) e.emplace_back(u, v);
    return e;
}

BidirectedGraph BidirectedGraph::complement() const {
    BidirectedGraph c(n_);
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v)
            if (!has_edge(u, v)) c.add_edge(u, v);
    return c;
}

bool BidirectedGraph::connected_on(GroundSet vertices) const {
    if (!vertices) return false;
    GroundSet seen = vertices & -vertices;
    while (true) {
        GroundSet grow = seen;
        for (int v = 1; v <= n_; ++v)
            if (seen >> (v - 1) & 1) grow |= adj_[v - 1] & vertices;
        if (grow == seen) break;
        seen = grow;
    }
    return seen == vertices;
}

SimplicialComplex::SimplicialComplex(int n, const std::vector<GroundSet>& maximal_faces)
    : n_(n) {
    for (GroundSet f : maximal_faces) {
        if (!f || f >> n) throw std::invalid_argument("face outside vertex range");
        // Insert all nonempty subsets.
        GroundSet sub = f;
        while (true) {
            if (sub) faces_.insert(sub);
            if (!sub) break;
            sub = (sub - 1) & f;
        }
    }
}

GroundSet spouse(const BidirectedGraph& G, GroundSet A) {
    GroundSet s = A;
    for (int v = 1; v <= G.n(); ++v)
        if (A >> (v - 1) & 1) s |= G.adjacency()[v - 1];
    return s;
}

StatementSet graph_statements(const BidirectedGraph& G) {
    GroundSet all = full_ground(G.n());
    StatementSet C(G.n());
    for (GroundSet c = 1; c <= all; ++c) {
        if (!G.connected_on(c)) continue;
        GroundSet rest = all & ~spouse(G, c);
        if (!rest) continue;
        C.add(PartialSetPartition(G.n(), {c, rest}));
    }
    return C;
}

SplitClosedIdeal graph_ideal(const BidirectedGraph& G) {
    return closure(graph_statements(G));
}

StatementSet simplicial_statements(const SimplicialComplex& S) {
    StatementSet C(S.n());
    for (GroundSet f : S.faces()) {
        if (std::popcount(f) < 2) continue;
        std::vector<Block> singletons;
        for (int v = 1; v <= S.n(); ++v)
            if (f >> (v - 1) & 1) singletons.push_back(GroundSet{1} << (v - 1));
        C.add(PartialSetPartition(S.n(), std::move(singletons)));
    }
    return C;
}

SplitClosedIdeal simplicial_ideal(const SimplicialComplex& S) {
    return closure(simplicial_statements(S));
}

SimplicialComplex sigma_of_graph(const BidirectedGraph& G) {
    GroundSet all = full_ground(G.n());
    std::vector<GroundSet> faces;
    for (GroundSet f = 1; f <= all; ++f) {
        bool edge_free = true;
        for (auto [u, v] : G.edges())
            if ((f >> (u - 1) & 1) && (f >> (v - 1) & 1)) {
                edge_free = false;
                break;
            }
        if (edge_free) faces.push_back(f);
    }
    return SimplicialComplex(G.n(), faces);
}

bool models_coincide(const BidirectedGraph& G) {
    return graph_ideal(G) == simplicial_ideal(sigma_of_graph(G));
}

bool is_complete_multipartite(const BidirectedGraph& G) {
    BidirectedGraph c = G.complement();
    GroundSet all = full_ground(G.n());
    GroundSet left = all;
    while (left) {
        // Component of the lowest remaining vertex in the complement.
        GroundSet comp = left & -left;
        while (true) {
            GroundSet grow = comp;
            for (int v = 1; v <= G.n(); ++v)
                if (comp >> (v - 1) & 1) grow |= c.adjacency()[v - 1];
            if (grow == comp) break;
            comp = grow;
        }
        // The component must be a clique of the complement.
        for (int u = 1; u <= G.n(); ++u)
            for (int v = u + 1; v <= G.n(); ++v)
                if ((comp >> (u - 1) & 1) && (comp >> (v - 1) & 1) && !c.has_edge(u, v))
                    return false;
        left &= ~comp;
    }
    return true;
}

BidirectedGraph parse_graph(const std::string& text, int n) {
    BidirectedGraph G(n);
    if (text.empty()) return G;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        auto dash = tok.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("edge '" + tok + "': expected u-v");
        int u = std::stoi(tok.substr(0, dash));
        int v = std::stoi(tok.substr(dash + 1));
        G.add_edge(u, v);
    }
    return G;
}

SimplicialComplex parse_complex(const std::string& text, int n) {
    std::vector<GroundSet> faces;
    if (text.empty()) return SimplicialComplex(n, faces);
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        GroundSet f = 0;
        for (char ch : tok) {
            if (ch < '1' || ch > '9')
                throw std::invalid_argument("face '" + tok + "': bad character");
            int v = ch - '0';
            if (v > n)
                throw std::invalid_argument("face '" + tok + "': vertex out of range");
            f |= GroundSet{1} << (v - 1);
        }
        if (!f) throw std::invalid_argument("empty face");
        faces.push_back(f);
    }
    return SimplicialComplex(n, faces);
}

}  // namespace margind
