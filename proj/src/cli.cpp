#include "kassoc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "kassoc/json_io.hpp"

namespace kassoc {

namespace {

constexpr const char* kVersion = "kassoc 1.0.0";

const char* kModuleTable =
    "module         operations\n"
    "combinatorics  crosses max_crossing_size is_k_free matchings parity swap\n"
    "               enumerate_k_triangulations accordion\n"
    "coords         separation_vector inverse_separation is_fp_positive grobner_cone\n"
    "               in_grobner_cone cone_face_of cycle_inequalities\n"
    "tropical       max_matchings in_prevariety in_pv_plus second_max_is_swap is_balanced\n"
    "               tropical_determinant tropical_rank sym_construction choose_K\n"
    "algebra        pfaffian pfaffian_initial_form s_polynomial_leading_check\n"
    "               ugb_counterexample parametrize hyperconnectivity_matrix matroid_rank\n"
    "               complete_band\n"
    "fan            crossing_sign g_vector project build_fan validate_fan\n"
    "               associahedron_polytope\n";

struct Context {
    RunConfig cfg;
    std::ostream& out;
    int n = 0;
    int k = 1;
    std::string input;
    bool count = false;

    bool as_json() const { return cfg.output == "json"; }
    json load() const {
        if (input.empty()) throw JsonError("--input FILE is required");
        return read_json_file(input);
    }
    void emit(const json& j) const { out << j.dump(2) << "\n"; }
};

std::string edges_text(const std::vector<Edge>& es, int base) {
    std::string s;
    for (const Edge& e : es) s += (s.empty() ? "" : " ") + edge_key(e, base);
    return s;
}

std::vector<int> parse_vertex_list(const std::string& s, int base) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v + 1 - base);
        } catch (const std::logic_error&) {
            throw Error("malformed vertex list '" + s + "'");
        }
    }
    return out;
}

void require_n(const Context& c) {
    if (c.n <= 0) throw Error("--n is required");
}

int decision(const Context& c, bool value, const std::string& what, json extra = json::object()) {
    if (c.as_json()) {
        extra["decision"] = value;
        extra["question"] = what;
        c.emit(extra);
    } else {
        c.out << what << ": " << (value ? "yes" : "no") << "\n";
        for (auto it = extra.begin(); it != extra.end(); ++it) c.out << "  " << it.key() << ": " << it.value().dump() << "\n";
    }
    return value ? kExitOk : kExitNegative;
}

using Action = std::function<int(Context&)>;

struct Leaf {
    CLI::App* app;
    Action action;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Context ctx{RunConfig{}, out, 0, 1, {}, false};
    CLI::App app{"Exact tools for multitriangulations, Pfaffians and their tropicalizations", "kassoc"};
    app.require_subcommand(0, 1);
    app.fallthrough();
    bool show_version = false;
    app.add_flag("--version", show_version, "Print version and module map");
    app.add_option("--seed", ctx.cfg.seed, "Random seed")->capture_default_str();
    app.add_option("--trials", ctx.cfg.trials, "Random trials")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--index-base", ctx.cfg.index_base, "Vertex label base for input and output")
        ->check(CLI::IsMember({0, 1}))
        ->capture_default_str();
    app.add_option("--output", ctx.cfg.output, "Report format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();

    std::vector<Leaf> leaves;
    auto group = [&](const char* name, const char* desc) {
        CLI::App* g = app.add_subcommand(name, desc);
        g->require_subcommand(1);
        g->fallthrough();
        return g;
    };
    auto leaf = [&](CLI::App* g, const char* name, const char* desc, Action a) {
        CLI::App* s = g->add_subcommand(name, desc);
        s->fallthrough();
        leaves.push_back({s, std::move(a)});
        return s;
    };
    auto with_n = [&](CLI::App* s) { s->add_option("--n", ctx.n, "Number of polygon vertices")->required(); };
    auto with_k = [&](CLI::App* s) { s->add_option("--k", ctx.k, "Order k")->check(CLI::PositiveNumber)->capture_default_str(); };
    auto with_input = [&](CLI::App* s, const char* what) { s->add_option("--input", ctx.input, what)->required(); };
    auto with_count = [&](CLI::App* s) { s->add_flag("--count", ctx.count, "Print only the number of results"); };

    // mt
    CLI::App* mt = group("mt", "Multitriangulations and matchings");
    {
        CLI::App* s = leaf(mt, "enumerate", "Enumerate k-triangulations", [](Context& c) {
            require_n(c);
            std::size_t count = 0;
            for_each_k_triangulation(c.n, c.k, [&](const EdgeSet& t) {
                ++count;
                if (c.count) return;
                if (c.as_json())
                    c.out << to_json(t, c.cfg.index_base).dump() << "\n";
                else
                    c.out << edges_text(t.edges, c.cfg.index_base) << "\n";
            });
            if (c.count) {
                if (c.as_json())
                    c.emit({{"count", count}});
                else
                    c.out << count << "\n";
            }
            return kExitOk;
        });
        with_n(s);
        with_k(s);
        with_count(s);
    }
    {
        CLI::App* s = leaf(mt, "max-crossing", "Size of the largest crossing", [](Context& c) {
            EdgeSet g = edgeset_from_json(c.load(), c.cfg.index_base);
            int m = max_crossing_size(g);
            if (c.as_json())
                c.emit({{"max_crossing_size", m}});
            else
                c.out << m << "\n";
            return kExitOk;
        });
        with_input(s, "EdgeSet JSON");
    }
    {
        CLI::App* s = leaf(mt, "kfree", "Decide whether a graph has no (k+1)-crossing", [](Context& c) {
            EdgeSet g = edgeset_from_json(c.load(), c.cfg.index_base);
            return decision(c, is_k_free(g, c.k), "k-free", {{"k", c.k}, {"max_crossing_size", max_crossing_size(g)}});
        });
        with_input(s, "EdgeSet JSON");
        with_k(s);
    }
    static std::string vertices_arg, from_arg, to_arg, edge_arg, K_arg, weights_arg, off_arg;
    vertices_arg.clear();
    from_arg.clear();
    to_arg.clear();
    edge_arg.clear();
    K_arg = "auto";
    weights_arg.clear();
    off_arg.clear();
    {
        CLI::App* s = leaf(mt, "matchings", "List the perfect matchings of a vertex set", [](Context& c) {
            std::vector<int> U = parse_vertex_list(vertices_arg, c.cfg.index_base);
            auto ms = matchings(U);
            if (c.count) {
                c.as_json() ? c.emit({{"count", ms.size()}}) : void(c.out << ms.size() << "\n");
                return kExitOk;
            }
            json arr = json::array();
            for (const auto& m : ms) {
                if (c.as_json())
                    arr.push_back(to_json(m, c.cfg.index_base));
                else
                    c.out << edges_text(m.pairs, c.cfg.index_base) << "  " << to_string(parity(m)) << "\n";
            }
            if (c.as_json()) c.emit(arr);
            return kExitOk;
        });
        s->add_option("--vertices", vertices_arg, "Comma-separated vertex list")->required();
        with_count(s);
    }
    {
        CLI::App* s = leaf(mt, "accordion", "Accordion between two non-crossing edges of a k-triangulation", [](Context& c) {
            EdgeSet t = edgeset_from_json(c.load(), c.cfg.index_base);
            Edge E = edge_from_key(from_arg, t.n, c.cfg.index_base, "--from");
            Edge F = edge_from_key(to_arg, t.n, c.cfg.index_base, "--to");
            if (t.size() != k_triangulation_size(t.n, c.k) || !is_k_free(t, c.k))
                throw Error("input is not a k-triangulation for k=" + std::to_string(c.k));
            auto seq = accordion(t, c.k, E, F);
            if (c.as_json()) {
                json a = json::array();
                for (const Edge& e : seq) a.push_back(to_json(e, c.cfg.index_base));
                c.emit({{"accordion", a}});
            } else {
                c.out << edges_text(seq, c.cfg.index_base) << "\n";
            }
            return kExitOk;
        });
        with_input(s, "EdgeSet JSON of a k-triangulation");
        with_k(s);
        s->add_option("--from", from_arg, "First edge \"i,j\"")->required();
        s->add_option("--to", to_arg, "Last edge \"i,j\"")->required();
    }

    // cone
    CLI::App* cone = group("cone", "Coordinates and the Groebner cone");
    {
        CLI::App* s = leaf(cone, "facets", "Facet inequalities of the Groebner cone", [](Context& c) {
            require_n(c);
            ConeDescription d = grobner_cone(c.n, c.k);
            if (c.count) {
                c.as_json() ? c.emit({{"count", d.facets.size()}}) : void(c.out << d.facets.size() << "\n");
                return kExitOk;
            }
            if (c.as_json()) {
                json a = json::array();
                for (const auto& f : d.facets) a.push_back(to_json(f, c.cfg.index_base));
                c.emit(a);
            } else {
                for (const auto& f : d.facets) c.out << to_string(f.label) << "\n";
            }
            return kExitOk;
        });
        with_n(s);
        with_k(s);
        with_count(s);
    }
    {
        CLI::App* s = leaf(cone, "describe", "Rays, facets and lineality of the Groebner cone", [](Context& c) {
            require_n(c);
            ConeDescription d = grobner_cone(c.n, c.k);
            if (c.as_json()) {
                c.emit(to_json(d, c.cfg.index_base));
            } else {
                c.out << "lineality dimension: " << d.lineality.size() << "\nrays: " << d.rays.size()
                      << "\nfacets: " << d.facets.size() << "\n";
            }
            return kExitOk;
        });
        with_n(s);
        with_k(s);
    }
    {
        CLI::App* s = leaf(cone, "member", "Decide membership in the Groebner cone", [](Context& c) {
            WeightVector v = weightvector_from_json(c.load(), c.cfg.index_base);
            if (v.n == 2 * c.k + 2) return decision(c, in_grobner_cone_by_cycles(v, c.k), "in Groebner cone (cycle forms)");
            auto bad = violated_facets(v, c.k);
            json violated = json::array();
            for (const auto& f : bad) violated.push_back(to_string(f.label));
            return decision(c, bad.empty(), "in Groebner cone", {{"violated_facets", violated}});
        });
        with_input(s, "WeightVector JSON");
        with_k(s);
    }
    {
        CLI::App* s = leaf(cone, "face", "Labels of the facets strict at a point of the cone", [](Context& c) {
            WeightVector v = weightvector_from_json(c.load(), c.cfg.index_base);
            EdgeSet f = cone_face_of(v, c.k);
            if (c.as_json())
                c.emit(to_json(f, c.cfg.index_base));
            else
                c.out << edges_text(f.edges, c.cfg.index_base) << "\n";
            return kExitOk;
        });
        with_input(s, "WeightVector JSON");
        with_k(s);
    }
    {
        CLI::App* s = leaf(cone, "cycles", "Even-cycle inequalities", [](Context& c) {
            require_n(c);
            auto forms = cycle_inequalities(c.n, c.k);
            if (c.count) {
                c.as_json() ? c.emit({{"count", forms.size()}}) : void(c.out << forms.size() << "\n");
                return kExitOk;
            }
            if (c.as_json()) {
                json a = json::array();
                for (const auto& f : forms) a.push_back(to_json(f, c.cfg.index_base));
                c.emit(a);
            } else {
                for (const auto& f : forms) c.out << f.label.cycle << "\n";
            }
            return kExitOk;
        });
        with_n(s);
        with_k(s);
        with_count(s);
    }
    {
        CLI::App* s = leaf(cone, "fp", "Decide four-point positivity", [](Context& c) {
            WeightVector v = weightvector_from_json(c.load(), c.cfg.index_base);
            return decision(c, is_fp_positive(v), "four-point positive");
        });
        with_input(s, "WeightVector JSON");
    }
    {
        CLI::App* s = leaf(cone, "convert", "Convert a weight vector between the v and w bases", [](Context& c) {
            WeightVector v = weightvector_from_json(c.load(), c.cfg.index_base);
            WeightVector o = v.basis == Basis::V ? inverse_separation(v) : separation_vector(v);
            c.emit(to_json(o, c.cfg.index_base));
            return kExitOk;
        });
        with_input(s, "WeightVector JSON");
    }

    // trop
    CLI::App* trop = group("trop", "Tropical prevariety and tropical matrices");
    {
        CLI::App* s = leaf(trop, "member", "Decide membership in the tropical prevariety", [](Context& c) {
            TropicalWeights v = tropical_weights_from_json(c.load(), c.cfg.index_base);
            return decision(c, in_prevariety(v, c.k), "in prevariety");
        });
        with_input(s, "WeightVector JSON");
        with_k(s);
    }
    {
        CLI::App* s = leaf(trop, "plus", "Decide membership in the (k+1)-free part", [](Context& c) {
            WeightVector v = weightvector_from_json(c.load(), c.cfg.index_base);
            return decision(c, in_pv_plus(v, c.k), "in PV+");
        });
        with_input(s, "WeightVector JSON");
        with_k(s);
    }
    {
        CLI::App* s = leaf(trop, "balanced", "Sign-balance certificate on every (2k+2)-subset", [](Context& c) {
            TropicalWeights v = tropical_weights_from_json(c.load(), c.cfg.index_base);
            return decision(c, is_balanced(v, c.k), "balanced",
                            {{"note", "a positivity certificate, not a decision procedure for the positive part"}});
        });
        with_input(s, "WeightVector JSON");
        with_k(s);
    }
    {
        CLI::App* s = leaf(trop, "maxmatch", "Maximum-weight matchings of a vertex set", [](Context& c) {
            TropicalWeights v = tropical_weights_from_json(c.load(), c.cfg.index_base);
            std::vector<int> U = parse_vertex_list(vertices_arg, c.cfg.index_base);
            auto ms = max_matchings(v, U);
            json arr = json::array();
            for (const auto& wm : ms) {
                json m = to_json(wm.matching, c.cfg.index_base);
                m["weight"] = to_string(wm.weight);
                arr.push_back(m);
                if (!c.as_json())
                    c.out << edges_text(wm.matching.pairs, c.cfg.index_base) << "  " << to_string(wm.parity) << "  "
                          << to_string(wm.weight) << "\n";
            }
            if (c.as_json()) c.emit(arr);
            return kExitOk;
        });
        with_input(s, "WeightVector JSON");
        s->add_option("--vertices", vertices_arg, "Comma-separated vertex list")->required();
    }
    {
        CLI::App* s = leaf(trop, "det", "Tropical determinant", [](Context& c) {
            TropicalMatrix m = tropical_matrix_from_json(c.load());
            auto d = tropical_determinant(m);
            if (c.as_json())
                c.emit({{"value", to_string(d.value)}, {"tie", d.tie}});
            else
                c.out << to_string(d.value) << (d.tie ? " (attained at least twice)" : " (unique)") << "\n";
            return kExitOk;
        });
        with_input(s, "TropicalMatrix JSON");
    }
    {
        CLI::App* s = leaf(trop, "rank", "Tropical rank", [](Context& c) {
            TropicalMatrix m = tropical_matrix_from_json(c.load());
            if (m.rows > 7 || m.cols > 7) throw Error("tropical rank is limited to 7x7 matrices");
            int r = tropical_rank(m);
            c.as_json() ? c.emit({{"tropical_rank", r}}) : void(c.out << r << "\n");
            return kExitOk;
        });
        with_input(s, "TropicalMatrix JSON");
    }
    {
        CLI::App* s = leaf(trop, "sym", "Symmetrized vector v(M,K)", [](Context& c) {
            TropicalMatrix m = tropical_matrix_from_json(c.load());
            std::optional<Rational> K;
            if (K_arg == "auto")
                K = choose_K(m, c.k);
            else if (K_arg != "inf")
                K = parse_rational(K_arg);
            TropicalWeights v = sym_construction(m, K);
            json j = to_json(v, c.cfg.index_base);
            j["K"] = K ? to_string(*K) : "inf";
            c.emit(j);
            return kExitOk;
        });
        with_input(s, "TropicalMatrix JSON");
        with_k(s);
        s->add_option("--K", K_arg, "auto, inf, or a rational")->capture_default_str();
    }

    // alg
    CLI::App* alg = group("alg", "Pfaffians, matroids and completions");
    {
        CLI::App* s = leaf(alg, "pfaffian", "Exact Pfaffian", [](Context& c) {
            AntisymmetricMatrix a = antisymmetric_from_json(c.load(), c.cfg.index_base);
            Rational p = pfaffian(a);
            c.as_json() ? c.emit({{"pfaffian", to_string(p)}}) : void(c.out << to_string(p) << "\n");
            return kExitOk;
        });
        with_input(s, "AntisymmetricMatrix JSON");
    }
    {
        CLI::App* s = leaf(alg, "initial-form", "Initial form of a sub-Pfaffian", [](Context& c) {
            WeightVector v = weightvector_from_json(c.load(), c.cfg.index_base);
            std::vector<int> U = parse_vertex_list(vertices_arg, c.cfg.index_base);
            SparsePolynomial p = pfaffian_initial_form(v, U);
            c.as_json() ? c.emit(to_json(p, c.cfg.index_base)) : void(c.out << p.to_string() << "\n");
            return kExitOk;
        });
        with_input(s, "WeightVector JSON");
        s->add_option("--vertices", vertices_arg, "Comma-separated vertex list")->required();
    }
    {
        CLI::App* s = leaf(alg, "matroid-rank", "Randomized rank in the algebraic matroid", [](Context& c) {
            EdgeSet g = edgeset_from_json(c.load(), c.cfg.index_base);
            std::mt19937_64 rng(c.cfg.seed);
            auto rep = matroid_rank(g, c.k, c.cfg.trials, rng);
            if (c.as_json())
                c.emit({{"rank", rep.rank}, {"trials_run", rep.trials_run}, {"kind", "probabilistic lower bound"}});
            else
                c.out << rep.rank << " (lower bound from " << rep.trials_run << " random trials)\n";
            return kExitOk;
        });
        with_input(s, "EdgeSet JSON");
        with_k(s);
    }
    {
        CLI::App* s = leaf(alg, "complete-band", "Rank-2k completion of band data", [](Context& c) {
            AntisymmetricMatrix a = antisymmetric_from_json(c.load(), c.cfg.index_base);
            std::map<Edge, Rational> known;
            for (const Edge& e : all_edges(a.n))
                if (in_band(e, c.k)) known[e] = a.upper[edge_index(e, a.n)];
            AntisymmetricMatrix m = complete_band(known, a.n, c.k);
            c.emit(to_json(m, c.cfg.index_base));
            return kExitOk;
        });
        with_input(s, "AntisymmetricMatrix JSON with the band entries (absent entries are zero)");
        with_k(s);
    }
    leaf(alg, "ugb-demo", "Certificate that Pfaffians are not a universal Groebner basis", [](Context& c) {
        UgbCertificate cert = ugb_counterexample();
        if (c.as_json()) {
            c.emit(to_json(cert, c.cfg.index_base));
        } else {
            c.out << "leading monomial of h: " << edges_text(cert.in_h, c.cfg.index_base) << "\n"
                  << "weight: " << to_string(cert.weight_in_h) << "\n"
                  << "6-subsets scanned: " << cert.subsets_scanned << "\n"
                  << "subsets whose leading monomial divides it: " << cert.dividing_subsets << "\n";
        }
        return kExitOk;
    });

    // fan
    CLI::App* fan = group("fan", "g-vector fans and associahedra (k = 1)");
    auto with_seed_tri = [&](CLI::App* s) {
        s->add_option("--seed-triangulation,--input", ctx.input, "EdgeSet JSON of a triangulation")->required();
    };
    {
        CLI::App* s = leaf(fan, "build", "Build the g-vector fan of a seed triangulation", [](Context& c) {
            EdgeSet t = edgeset_from_json(c.load(), c.cfg.index_base);
            FanDescription f = build_fan(t);
            if (c.as_json())
                c.emit(to_json(f, c.cfg.index_base));
            else
                c.out << "dimension: " << f.dim << "\nrays: " << f.rays.size() << "\ncones: " << f.cones.size() << "\n";
            return kExitOk;
        });
        with_seed_tri(s);
    }
    {
        CLI::App* s = leaf(fan, "validate", "Check every flip circuit", [](Context& c) {
            EdgeSet t = edgeset_from_json(c.load(), c.cfg.index_base);
            FanDescription f = build_fan(t);
            FanReport r = validate_fan(f, t);
            bool ok = r.exchange_signs_ok && r.rhs_positive;
            if (c.as_json()) {
                c.emit(to_json(r, c.cfg.index_base));
            } else {
                c.out << "flips: " << r.circuits.size() << "\nexchange signs ok: " << (r.exchange_signs_ok ? "yes" : "no")
                      << "\nall circuit sums positive: " << (r.rhs_positive ? "yes" : "no") << "\n";
            }
            return ok ? kExitOk : kExitNegative;
        });
        with_seed_tri(s);
    }
    {
        CLI::App* s = leaf(fan, "polytope", "Associahedron with right-hand sides (j-i)(n+i-j)", [](Context& c) {
            EdgeSet t = edgeset_from_json(c.load(), c.cfg.index_base);
            PolytopeH p = associahedron_polytope(t);
            if (!off_arg.empty()) {
                std::ofstream os(off_arg);
                if (!os) throw Error("cannot write '" + off_arg + "'");
                os << to_off(p);
            }
            if (c.as_json())
                c.emit(to_json(p, c.cfg.index_base));
            else
                c.out << "facets: " << p.labels.size() << "\nvertices: " << p.vertices.size()
                      << "\nparallel pairs: " << p.parallel_pairs.size() << "\n";
            return kExitOk;
        });
        with_seed_tri(s);
        s->add_option("--off", off_arg, "Write the vertices and facets in OFF format (n = 6)");
    }
    {
        CLI::App* s = leaf(fan, "gvector", "g-vector of an edge", [](Context& c) {
            EdgeSet t = normalize_triangulation(edgeset_from_json(c.load(), c.cfg.index_base));
            Edge e = edge_from_key(edge_arg, t.n, c.cfg.index_base, "--edge");
            GVector g = g_vector(t, e);
            if (c.as_json()) {
                json diags = json::array();
                for (const Edge& d : g.diagonals) diags.push_back(to_json(d, c.cfg.index_base));
                c.emit({{"diagonals", diags}, {"g", g.coords}});
            } else {
                for (std::size_t t2 = 0; t2 < g.coords.size(); ++t2)
                    c.out << edge_key(g.diagonals[t2], c.cfg.index_base) << ": " << g.coords[t2] << "\n";
            }
            return kExitOk;
        });
        with_seed_tri(s);
        s->add_option("--edge", edge_arg, "Edge \"i,j\"")->required();
    }
    {
        CLI::App* s = leaf(fan, "project", "Coordinates of a PV+_1 point in the fan of T", [](Context& c) {
            EdgeSet t = edgeset_from_json(c.load(), c.cfg.index_base);
            WeightVector v = weightvector_from_json(read_json_file(weights_arg), c.cfg.index_base);
            Vector x = project(v, t);
            json a = json::array();
            for (const auto& q : x) a.push_back(to_string(q));
            if (c.as_json())
                c.emit({{"coords", a}});
            else
                c.out << a.dump() << "\n";
            return kExitOk;
        });
        with_seed_tri(s);
        s->add_option("--weights", weights_arg, "WeightVector JSON")->required();
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (show_version) {
        out << kVersion << "\n\n" << kModuleTable;
        return kExitOk;
    }
    for (auto& l : leaves) {
        if (!l.app->parsed()) continue;
        try {
            return l.action(ctx);
        } catch (const JsonError& e) {
            err << "error: " << e.what() << "\n";
            return kExitUsage;
        } catch (const Error& e) {
            err << "error: " << e.what() << "\n";
            return kExitUsage;
        } catch (const InternalError& e) {
            err << "internal error: " << e.what() << "\n";
            return kExitInternal;
        }
    }
    out << app.help();
    return args.empty() ? kExitOk : kExitUsage;
}

}  // namespace kassoc
