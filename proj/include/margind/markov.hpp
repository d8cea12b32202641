#pragma once

#include <set>
#include <string>
#include <vector>

#include "margind/closure.hpp"

// Bidirected-graph and simplicial-complex front ends for marginal
// independence models.

namespace margind {

class BidirectedGraph {
public:
    explicit BidirectedGraph(int n);
    BidirectedGraph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    const std::vector<GroundSet>& adjacency() const { return adj_; }
    std::vector<std::pair<int, int>> edges() const;

    BidirectedGraph complement() const;
    bool connected_on(GroundSet vertices) const;

private:
    int n_;
    std::vector<GroundSet> adj_;  // adj_[v-1] excludes v itself
};

class SimplicialComplex {
public:
    explicit SimplicialComplex(int n) : n_(n) {}
    // Downward closure of the given faces (singletons retained).
    SimplicialComplex(int n, const std::vector<GroundSet>& maximal_faces);

    int n() const { return n_; }
    const std::set<GroundSet>& faces() const { return faces_; }
    bool has_face(GroundSet f) const { return faces_.count(f) > 0; }

private:
    int n_;
    std::set<GroundSet> faces_;  // size >= 1, downward closed
};

// Sp(A): A together with every vertex adjacent to A.
GroundSet spouse(const BidirectedGraph& G, GroundSet A);

// Connected set Markov property: one statement C | (V minus Sp(C)) per
// connected vertex set C with nonempty complement of its spouse set.
StatementSet graph_statements(const BidirectedGraph& G);

SplitClosedIdeal graph_ideal(const BidirectedGraph& G);

// Total independence of the variables of each face of size >= 2.
StatementSet simplicial_statements(const SimplicialComplex& S);

SplitClosedIdeal simplicial_ideal(const SimplicialComplex& S);

// Sigma(G): all vertex sets containing no edge of G.  Its 1-skeleton is
// the complementary graph.
SimplicialComplex sigma_of_graph(const BidirectedGraph& G);

// Exact model equality between G and Sigma(G).
bool models_coincide(const BidirectedGraph& G);

// Sufficient condition for the models to coincide: the complement is a
// disjoint union of complete graphs (G complete multipartite).
bool is_complete_multipartite(const BidirectedGraph& G);

// Parsers for the CLI forms "1-2,2-3" and "12,13" / "{1,2},{1,3}".
BidirectedGraph parse_graph(const std::string& text, int n);
SimplicialComplex parse_complex(const std::string& text, int n);

}  // namespace margind
