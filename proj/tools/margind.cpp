// margind — marginal independence models over partial set partitions.
//
// Subcommands: closure, member, generators, matrix, geometry, graph,
// simplicial, census, verify.  Exit codes: 0 success / semantic yes,
// 1 semantic no (member, verify), 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include "margind/census.hpp"
#include "margind/markov.hpp"
#include "margind/model_equations.hpp"
#include "margind/toric.hpp"

using namespace margind;
using nlohmann::json;

namespace {

StatementSet parse_gens(const std::string& text, int n) {
    StatementSet C(n);
    if (text.empty()) return C;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) C.add(parse_partition(tok, n));
    return C;
}

StatementSet parse_gens_json(const std::string& text) {
    json j = json::parse(text);
    int n = j.at("n").get<int>();
    StatementSet C(n);
    for (const auto& stmt : j.at("statements")) {
        std::vector<Block> blocks;
        for (const auto& blk : stmt) {
            Block b = 0;
            for (const auto& e : blk) b |= Block{1} << (e.get<int>() - 1);
            blocks.push_back(b);
        }
        C.add(PartialSetPartition(n, blocks));
    }
    return C;
}

StateShape parse_shape(const std::string& states, int n) {
    if (states.empty()) return StateShape::binary(n);
    std::vector<int> r;
    std::istringstream is(states);
    std::string tok;
    while (std::getline(is, tok, ',')) r.push_back(std::stoi(tok));
    if (static_cast<int>(r.size()) != n)
        throw std::invalid_argument("--states must list exactly n entries");
    return StateShape(std::move(r));
}

json ideal_json(const SplitClosedIdeal& I) {
    json elems = json::array();
    for (const auto& p : I.elements()) elems.push_back(format_partition(p));
    StatementSet gens = maximal_generators(I);
    json g = json::array();
    for (const auto& p : gens.statements()) g.push_back(format_partition(p));
    return json{{"schema", 1},
                {"n", I.n()},
                {"size", I.size()},
                {"elements", elems},
                {"maximal_generators", g}};
}

void print_ideal_text(const SplitClosedIdeal& I, std::ostream& os) {
    os << "elements (" << I.size() << "):\n";
    for (const auto& p : I.elements()) os << "  " << format_partition(p) << "\n";
    StatementSet gens = maximal_generators(I);
    os << "maximal generators:";
    for (const auto& p : gens.statements()) os << " " << format_partition(p);
    os << "\n";
}

// Seeded rational in (0,1) with a smallish denominator.
Rational random_unit(std::mt19937_64& rng, int denom_bits = 6) {
    long denom = 1L << denom_bits;
    long num = 1 + static_cast<long>(rng() % static_cast<unsigned long>(denom - 1));
    Rational q(num, denom);
    q.canonicalize();
    return q;
}

// Parameter vector in (0,1) per theta row, coordinatewise monotone within
// each parameter group; t = 1.
std::vector<Rational> sample_parameters(const ParamMatrix& A, std::mt19937_64& rng) {
    const StateShape& sh = A.shape();
    // Per-variable monotone chains u_l(1) < ... < u_l(r_l - 1) < 1.
    std::vector<std::vector<Rational>> chain(sh.n());
    for (int l = 0; l < sh.n(); ++l) {
        std::vector<Rational> vals;
        for (int v = 1; v < sh[l]; ++v) vals.push_back(random_unit(rng));
        std::sort(vals.begin(), vals.end());
        for (std::size_t k = 1; k < vals.size(); ++k)
            if (vals[k] == vals[k - 1]) vals[k] = (vals[k] + 1) / 2;
        chain[l] = vals;
    }
    std::vector<Rational> theta(A.rows().size(), 1);
    for (std::size_t r = 1; r < A.rows().size(); ++r) {
        const ParamRow& row = A.rows()[r];
        Rational base = 1;
        for (int l = 0; l < sh.n(); ++l)
            if (row.conn >> l & 1) base *= chain[l][row.level[l] - 1];
        // Small distinct perturbation keeps the point generic while
        // staying near the independence point.
        Rational eps(1 + static_cast<long>(rng() % 13), 1L << 14);
        eps.canonicalize();
        theta[r] = base * (1 + eps);
    }
    return theta;
}

int cmd_exit(const std::function<int()>& body) {
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"marginal independence models over partial set partitions"};
    app.require_subcommand(1);

    std::string gens_text, gens_json_text, query, states, format = "text";
    std::string edges, faces, model_class = "general", emit;
    int n = 0;
    unsigned long long seed = 0;
    int threads = 1;
    if (const char* env = std::getenv("MARGIND_THREADS")) threads = std::atoi(env);
    bool up_to_symmetry = false, allow_large = false, plain = false;

    auto add_common = [&](CLI::App* sub, bool needs_gens) {
        sub->add_option("-n,--n", n, "number of variables")->required();
        if (needs_gens) {
            auto* g = sub->add_option("--gens", gens_text,
                                      "comma separated statements, e.g. \"1|23,2|3\"");
            auto* gj = sub->add_option("--gens-json", gens_json_text,
                                       "statement set as JSON");
            g->excludes(gj);
        }
        sub->add_option("--format", format, "text|json|csv");
    };

    auto* c_closure = app.add_subcommand("closure", "split closure of a statement set");
    add_common(c_closure, true);

    auto* c_member = app.add_subcommand("member", "membership in the split closure");
    add_common(c_member, true);
    c_member->add_option("--query", query, "statement to test")->required();

    auto* c_gen = app.add_subcommand("generators", "defining equations of the model");
    add_common(c_gen, true);
    c_gen->add_option("--states", states, "state space sizes, e.g. 2,2,3");

    auto* c_matrix = app.add_subcommand("matrix", "parametrization matrix");
    add_common(c_matrix, true);
    c_matrix->add_option("--states", states, "state space sizes");
    c_matrix->add_flag("--plain", plain, "bare integer block");

    auto* c_geom = app.add_subcommand("geometry", "degree and dimension of the model variety");
    add_common(c_geom, true);
    c_geom->add_option("--states", states, "state space sizes");

    auto* c_graph = app.add_subcommand("graph", "model of a bidirected graph");
    c_graph->add_option("-n,--n", n, "number of vertices")->required();
    c_graph->add_option("--edges", edges, "edge list, e.g. \"1-2,2-3\"");
    c_graph->add_option("--format", format, "text|json");

    auto* c_simp = app.add_subcommand("simplicial", "model of a simplicial complex");
    c_simp->add_option("-n,--n", n, "number of vertices")->required();
    c_simp->add_option("--faces", faces, "maximal faces, e.g. \"12,13,23\"");
    c_simp->add_option("--format", format, "text|json");

    auto* c_census = app.add_subcommand("census", "census of all models for small n");
    c_census->add_option("-n,--n", n, "number of variables")->required();
    c_census->add_option("--class", model_class, "general|graphical|simplicial|both");
    c_census->add_flag("--up-to-symmetry", up_to_symmetry, "orbit counts only");
    c_census->add_option("--emit", emit, "table1|table2");
    c_census->add_option("--format", format, "text|json|csv");
    c_census->add_option("--threads", threads, "worker threads");
    c_census->add_flag("--allow-large", allow_large, "permit n=5 (no runtime promise)");

    auto* c_verify = app.add_subcommand("verify", "sample a model point and check exactness");
    add_common(c_verify, true);
    c_verify->add_option("--states", states, "state space sizes");
    c_verify->add_option("--seed", seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    auto gens = [&]() {
        if (!gens_json_text.empty()) return parse_gens_json(gens_json_text);
        return parse_gens(gens_text, n);
    };

    if (*c_closure) return cmd_exit([&] {
        SplitClosedIdeal I = closure(gens());
        if (format == "json")
            std::cout << ideal_json(I).dump(2) << "\n";
        else
            print_ideal_text(I, std::cout);
        return 0;
    });

    if (*c_member) return cmd_exit([&]() -> int {
        StatementSet C = gens();
        PartialSetPartition sigma = parse_partition(query, n);
        if (sigma.block_count() < 2)
            throw std::invalid_argument("query must have at least two blocks");
        bool yes = member(sigma, C);
        std::cout << (yes ? "yes" : "no") << "\n";
        return yes ? 0 : 1;
    });

    if (*c_gen) return cmd_exit([&] {
        StateShape shape = parse_shape(states, n);
        SplitClosedIdeal I = closure(gens());
        auto eqs = maximal_equations(I, shape);
        if (format == "json") {
            json out = json::array();
            for (const auto& f : eqs) {
                json factors = json::array();
                for (const auto& j : f.factors) factors.push_back(j);
                out.push_back(json{{"lead", f.lead}, {"factors", factors}});
            }
            std::cout << json{{"schema", 1}, {"equations", out}}.dump(2) << "\n";
        } else {
            for (const auto& f : eqs)
                std::cout << format_equation(f, shape) << "\n";
        }
        return 0;
    });

    if (*c_matrix) return cmd_exit([&] {
        StateShape shape = parse_shape(states, n);
        SplitClosedIdeal I = closure(gens());
        ParamMatrix A = param_matrix(I, shape);
        if (plain || format == "text")
            std::cout << A.to_plain();
        else if (format == "json") {
            json cols = json::array(), rows = json::array();
            for (const auto& c : A.cols()) cols.push_back(coordinate_name(shape, c));
            for (const auto& r : A.rows()) rows.push_back(r.label(shape));
            std::cout << json{{"schema", 1},
                              {"rows", rows},
                              {"cols", cols},
                              {"entries", A.entries()}}
                             .dump(2)
                      << "\n";
        } else
            std::cout << A.to_csv();
        return 0;
    });

    if (*c_geom) return cmd_exit([&] {
        StateShape shape = parse_shape(states, n);
        SplitClosedIdeal I = closure(gens());
        ParamMatrix A = param_matrix(I, shape);
        json out{{"schema", 1},
                 {"dimension", projective_dimension(A)},
                 {"degree", toric_degree(A).get_str()},
                 {"num_columns", A.cols().size()},
                 {"num_rows", A.rows().size()}};
        std::cout << out.dump() << "\n";
        return 0;
    });

    if (*c_graph) return cmd_exit([&] {
        BidirectedGraph G = parse_graph(edges, n);
        StatementSet C = graph_statements(G);
        SplitClosedIdeal I = closure(C);
        if (format == "json") {
            json st = json::array();
            for (const auto& p : C.statements()) st.push_back(format_partition(p));
            json out = ideal_json(I);
            out["statements"] = st;
            out["models_coincide_with_complex"] = models_coincide(G);
            out["complete_multipartite"] = is_complete_multipartite(G);
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "statements:";
            for (const auto& p : C.statements()) std::cout << " " << format_partition(p);
            std::cout << "\n";
            print_ideal_text(I, std::cout);
            std::cout << "coincides with complex model: "
                      << (models_coincide(G) ? "yes" : "no")
                      << " (complete multipartite: "
                      << (is_complete_multipartite(G) ? "yes" : "no") << ")\n";
        }
        return 0;
    });

    if (*c_simp) return cmd_exit([&] {
        SimplicialComplex S = parse_complex(faces, n);
        StatementSet C = simplicial_statements(S);
        SplitClosedIdeal I = closure(C);
        if (format == "json") {
            json st = json::array();
            for (const auto& p : C.statements()) st.push_back(format_partition(p));
            json out = ideal_json(I);
            out["statements"] = st;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "statements:";
            for (const auto& p : C.statements()) std::cout << " " << format_partition(p);
            std::cout << "\n";
            print_ideal_text(I, std::cout);
        }
        return 0;
    });

    if (*c_census) return cmd_exit([&] {
        if (emit == "table2") {
            auto rows = census_table(n, threads);
            if (format == "json") {
                json out = json::array();
                for (const auto& r : rows)
                    out.push_back(json{{"generators", r.generators},
                                       {"degree", r.degree.get_str()},
                                       {"dimension", r.dimension},
                                       {"graphical", r.is_graphical},
                                       {"simplicial", r.is_simplicial},
                                       {"closure_fixed", r.closure_fixed},
                                       {"orbit_size", r.orbit_size}});
                std::cout << json{{"schema", 1}, {"rows", out}}.dump(2) << "\n";
            } else {
                std::cout << "generators,degree,dimension,graphical,simplicial,orbit_size\n";
                for (const auto& r : rows)
                    std::cout << '"' << r.generators << "\"," << r.degree.get_str()
                              << ',' << r.dimension << ',' << (r.is_graphical ? 1 : 0)
                              << ',' << (r.is_simplicial ? 1 : 0) << ',' << r.orbit_size
                              << "\n";
            }
            return 0;
        }
        if (emit == "table1") {
            json out{{"schema", 1}};
            for (auto [name, cls] :
                 std::initializer_list<std::pair<const char*, ModelClass>>{
                     {"general", ModelClass::General},
                     {"graphical", ModelClass::Graphical},
                     {"simplicial", ModelClass::Simplicial},
                     {"both", ModelClass::Both}}) {
                ClassCounts c = class_census(n, cls);
                out[name] = json{{"total", c.total}, {"orbits", c.up_to_symmetry}};
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        ModelClass cls = ModelClass::General;
        if (model_class == "graphical") cls = ModelClass::Graphical;
        else if (model_class == "simplicial") cls = ModelClass::Simplicial;
        else if (model_class == "both") cls = ModelClass::Both;
        else if (model_class != "general")
            throw std::invalid_argument("unknown --class " + model_class);
        ClassCounts c = class_census(n, cls, allow_large);
        if (up_to_symmetry)
            std::cout << "orbits=" << c.up_to_symmetry << "\n";
        else
            std::cout << "total=" << c.total << " orbits=" << c.up_to_symmetry << "\n";
        return 0;
    });

    if (*c_verify) return cmd_exit([&]() -> int {
        StateShape shape = parse_shape(states, n);
        StatementSet C = gens();
        SplitClosedIdeal I = closure(C);
        ParamMatrix A = param_matrix(I, shape);
        std::mt19937_64 rng(seed);

        // Minimal statements outside the model.
        std::vector<PartialSetPartition> minimal_out;
        auto universe = enumerate_partitions(n, 2);
        for (const auto& p : universe) {
            if (I.contains(p)) continue;
            bool minimal = true;
            for (const auto& q : universe)
                if (!(q == p) && leq(q, p) && !I.contains(q)) {
                    minimal = false;
                    break;
                }
            if (minimal) minimal_out.push_back(p);
        }

        auto eqs = maximal_equations(I, shape);
        for (int attempt = 0; attempt < 16; ++attempt) {
            auto theta = sample_parameters(A, rng);
            RationalTensor Q = evaluate_parametrization(A, theta);
            bool zero = true;
            for (const auto& f : eqs)
                if (evaluate(f, Q) != 0) zero = false;
            for (const auto& p : I.elements())
                for (const auto& m : minor_equations(p, shape))
                    if (evaluate(m, Q) != 0) zero = false;
            if (!zero) {
                std::cout << "in-model equations failed to vanish\n";
                return 1;
            }
            RationalTensor P = cdf_to_prob(Q);
            if (!P.all_nonnegative() || Q.at(shape.max_index()) != 1) continue;
            bool all_witnessed = true;
            for (const auto& p : minimal_out) {
                bool witness = false;
                for (const auto& m : minor_equations(p, shape))
                    if (evaluate(m, Q) != 0) {
                        witness = true;
                        break;
                    }
                if (!witness) {
                    all_witnessed = false;
                    break;
                }
            }
            if (all_witnessed) {
                std::cout << "ok: equations vanish, distribution valid, "
                          << minimal_out.size() << " non-members witnessed\n";
                return 0;
            }
        }
        std::cout << "failed to find a generic point in 16 attempts\n";
        return 1;
    });

    return 2;
}
