#include "kassoc/json_io.hpp"

#include <fstream>
#include <sstream>

namespace kassoc {

json parse_json_text(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw JsonError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw JsonError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

namespace {

const json& field(const json& j, const char* name, const std::string& where) {
    if (!j.is_object()) throw JsonError(where + ": expected an object");
    auto it = j.find(name);
    if (it == j.end()) throw JsonError(where + ": missing field '" + name + "'");
    return *it;
}

int int_field(const json& j, const char* name, const std::string& where) {
    const json& f = field(j, name, where);
    if (!f.is_number_integer()) throw JsonError(where + "." + name + ": expected an integer");
    return f.get<int>();
}

Rational rational_value(const json& j, const std::string& where) {
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Rational(Integer(j.dump()));
    } catch (const Error& e) {
        throw JsonError(where + ": " + e.what());
    }
    throw JsonError(where + ": expected a rational string \"p/q\" or an integer");
}

int check_n(int n, const std::string& where) {
    if (n < 2 || n > 64) throw JsonError(where + ".n: expected 2 <= n <= 64");
    return n;
}

}  // namespace

std::string edge_key(const Edge& e, int base) {
    return std::to_string(e.i - 1 + base) + "," + std::to_string(e.j - 1 + base);
}

Edge edge_from_key(const std::string& key, int n, int base, const std::string& where) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw JsonError(where + ": edge key '" + key + "' is not of the form \"i,j\"");
    try {
        std::size_t p1 = 0, p2 = 0;
        std::string a = key.substr(0, comma), b = key.substr(comma + 1);
        int i = std::stoi(a, &p1), j = std::stoi(b, &p2);
        if (p1 != a.size() || p2 != b.size()) throw std::invalid_argument("trailing");
        return edge_from_json(json::array({i, j}), n, base, where);
    } catch (const std::logic_error&) {
        throw JsonError(where + ": edge key '" + key + "' is not of the form \"i,j\"");
    }
}

Edge edge_from_json(const json& j, int n, int base, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw JsonError(where + ": expected an edge [i, j]");
    int a = j[0].get<int>() + 1 - base, b = j[1].get<int>() + 1 - base;
    if (a < 1 || b < 1 || a > n || b > n || a == b)
        throw JsonError(where + ": edge " + j.dump() + " out of range for n=" + std::to_string(n));
    return make_edge(a, b);
}

json to_json(const Edge& e, int base) { return json::array({e.i - 1 + base, e.j - 1 + base}); }

json to_json(const EdgeSet& s, int base) {
    json es = json::array();
    for (const Edge& e : s.edges) es.push_back(to_json(e, base));
    return json{{"n", s.n}, {"edges", es}};
}

EdgeSet edgeset_from_json(const json& j, int base) {
    const std::string where = "EdgeSet";
    int n = check_n(int_field(j, "n", where), where);
    const json& es = field(j, "edges", where);
    if (!es.is_array()) throw JsonError(where + ".edges: expected an array");
    std::vector<Edge> edges;
    for (std::size_t t = 0; t < es.size(); ++t)
        edges.push_back(edge_from_json(es[t], n, base, where + ".edges[" + std::to_string(t) + "]"));
    return EdgeSet(n, edges);
}

json to_json(const WeightVector& v, int base) {
    json entries = json::object();
    for (const Edge& e : all_edges(v.n))
        if (v.at(e) != 0) entries[edge_key(e, base)] = to_string(v.at(e));
    return json{{"n", v.n}, {"basis", to_string(v.basis)}, {"entries", entries}};
}

namespace {

Basis basis_field(const json& j, const std::string& where) {
    const json& b = field(j, "basis", where);
    if (b == "v" || b == "V") return Basis::V;
    if (b == "w" || b == "W") return Basis::W;
    throw JsonError(where + ".basis: expected \"v\" or \"w\"");
}

}  // namespace

WeightVector weightvector_from_json(const json& j, int base) {
    const std::string where = "WeightVector";
    int n = check_n(int_field(j, "n", where), where);
    WeightVector v(n, basis_field(j, where));
    const json& entries = field(j, "entries", where);
    if (!entries.is_object()) throw JsonError(where + ".entries: expected an object");
    for (auto it = entries.begin(); it != entries.end(); ++it) {
        std::string loc = where + ".entries[\"" + it.key() + "\"]";
        v.at(edge_from_key(it.key(), n, base, loc)) = rational_value(it.value(), loc);
    }
    return v;
}

TropicalWeights tropical_weights_from_json(const json& j, int base) {
    const std::string where = "WeightVector";
    int n = check_n(int_field(j, "n", where), where);
    Basis b = basis_field(j, where);
    const json& entries = field(j, "entries", where);
    if (!entries.is_object()) throw JsonError(where + ".entries: expected an object");
    bool has_bottom = false;
    for (auto it = entries.begin(); it != entries.end(); ++it)
        if (it.value() == "-inf") has_bottom = true;
    if (!has_bottom) return TropicalWeights(weightvector_from_json(j, base));
    if (b != Basis::V) throw JsonError(where + ": -inf entries are only allowed in the v basis");
    TropicalWeights t(n);
    for (auto& x : t.x) x = TropicalScalar(Rational(0));
    for (auto it = entries.begin(); it != entries.end(); ++it) {
        std::string loc = where + ".entries[\"" + it.key() + "\"]";
        Edge e = edge_from_key(it.key(), n, base, loc);
        t.at(e) = it.value() == "-inf" ? TropicalScalar::neg_inf() : TropicalScalar(rational_value(it.value(), loc));
    }
    return t;
}

json to_json(const TropicalWeights& v, int base) {
    json entries = json::object();
    for (const Edge& e : all_edges(v.n)) {
        const auto& s = v.at(e);
        if (s.bottom || s.value != 0) entries[edge_key(e, base)] = to_string(s);
    }
    return json{{"n", v.n}, {"basis", "v"}, {"entries", entries}};
}

json to_json(const TropicalMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(to_string(m.at(r, c)));
        rows.push_back(row);
    }
    return json{{"rows", m.rows}, {"cols", m.cols}, {"entries", rows}};
}

TropicalMatrix tropical_matrix_from_json(const json& j) {
    const std::string where = "TropicalMatrix";
    int rows = int_field(j, "rows", where), cols = int_field(j, "cols", where);
    if (rows < 1 || cols < 1 || rows > 16 || cols > 16) throw JsonError(where + ": dimensions must be in 1..16");
    const json& es = field(j, "entries", where);
    if (!es.is_array() || static_cast<int>(es.size()) != rows) throw JsonError(where + ".entries: expected rows arrays");
    TropicalMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        std::string rloc = where + ".entries[" + std::to_string(r) + "]";
        if (!es[r].is_array() || static_cast<int>(es[r].size()) != cols)
            throw JsonError(rloc + ": expected " + std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c) {
            std::string loc = rloc + "[" + std::to_string(c) + "]";
            const json& x = es[r][c];
            if (x == "-inf") {
                m.at(r, c) = TropicalScalar::neg_inf();
            } else {
                m.at(r, c) = TropicalScalar(rational_value(x, loc));
            }
        }
    }
    return m;
}

json to_json(const AntisymmetricMatrix& m, int base) {
    json upper = json::object();
    for (const Edge& e : all_edges(m.n)) {
        const Rational& q = m.upper[edge_index(e, m.n)];
        if (q != 0) upper[edge_key(e, base)] = to_string(q);
    }
    return json{{"n", m.n}, {"upper", upper}};
}

AntisymmetricMatrix antisymmetric_from_json(const json& j, int base) {
    const std::string where = "AntisymmetricMatrix";
    int n = int_field(j, "n", where);
    if (n < 1 || n > 64) throw JsonError(where + ".n: expected 1 <= n <= 64");
    AntisymmetricMatrix m(n);
    const json& upper = field(j, "upper", where);
    if (!upper.is_object()) throw JsonError(where + ".upper: expected an object");
    for (auto it = upper.begin(); it != upper.end(); ++it) {
        std::string loc = where + ".upper[\"" + it.key() + "\"]";
        Edge e = edge_from_key(it.key(), n, base, loc);
        m.set(e.i, e.j, rational_value(it.value(), loc));
    }
    return m;
}

json to_json(const Matching& m, int base) {
    json pairs = json::array();
    for (const Edge& e : m.pairs) pairs.push_back(to_json(e, base));
    return json{{"pairs", pairs}, {"parity", to_string(parity(m))}};
}

json to_json(const LinearForm& f, int base) {
    json coeffs = json::object();
    for (const Edge& e : all_edges(f.n)) {
        const Rational& q = f.coeffs[edge_index(e, f.n)];
        if (q != 0) coeffs[edge_key(e, base)] = to_string(q);
    }
    json label;
    switch (f.label.kind) {
        case FormLabel::Kind::Long: label = {{"kind", "long"}, {"edge", to_json(f.label.edge, base)}}; break;
        case FormLabel::Kind::Short: label = {{"kind", "short"}, {"edge", to_json(f.label.edge, base)}}; break;
        case FormLabel::Kind::Cycle: label = {{"kind", "cycle"}, {"cycle", f.label.cycle}}; break;
    }
    return json{{"label", label}, {"basis", to_string(f.basis)}, {"coeffs", coeffs}};
}

json to_json(const ConeDescription& c, int base) {
    json lin = json::array(), rays = json::array(), facets = json::array();
    for (const auto& l : c.lineality) lin.push_back(to_json(l, base));
    for (const auto& r : c.rays) rays.push_back({{"label", to_json(r.label, base)}, {"ray", to_json(r.ray, base)}});
    for (const auto& f : c.facets) facets.push_back(to_json(f, base));
    return json{{"n", c.n}, {"k", c.k}, {"lineality", lin}, {"rays", rays}, {"facets", facets}};
}

json to_json(const SparsePolynomial& p, int base) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms) {
        json mon = json::array();
        for (const Edge& e : m) mon.push_back(to_json(e, base));
        terms.push_back({{"monomial", mon}, {"coefficient", to_string(c)}});
    }
    return terms;
}

json to_json(const UgbCertificate& c, int base) {
    auto mono = [&](const Monomial& m) {
        json a = json::array();
        for (const Edge& e : m) a.push_back(to_json(e, base));
        return a;
    };
    json weights = json::object();
    for (const auto& [e, q] : c.weights) weights[edge_key(e, base)] = to_string(q);
    return json{{"n", c.n},
                {"weights", weights},
                {"in_f", mono(c.in_f)},
                {"in_g", mono(c.in_g)},
                {"in_h", mono(c.in_h)},
                {"in_h_weight", to_string(c.weight_in_h)},
                {"in_h_coefficient", to_string(c.coefficient_in_h)},
                {"subsets_scanned", c.subsets_scanned},
                {"dividing_subsets", c.dividing_subsets}};
}

json to_json(const FanDescription& f, int base) {
    json rays = json::array();
    for (std::size_t t = 0; t < f.rays.size(); ++t)
        rays.push_back({{"label", to_json(f.ray_labels[t], base)}, {"g", f.rays[t]}});
    json cones = json::array();
    for (std::size_t t = 0; t < f.cones.size(); ++t) {
        json diags = json::array();
        for (const Edge& d : diagonals(f.cone_triangulations[t])) diags.push_back(to_json(d, base));
        cones.push_back({{"rays", f.cones[t]}, {"triangulation", diags}});
    }
    return json{{"dim", f.dim}, {"rays", rays}, {"cones", cones}};
}

json to_json(const FanReport& r, int base) {
    json circuits = json::array();
    for (const auto& c : r.circuits) {
        json coeffs = json::object();
        for (const auto& [e, q] : c.coefficients) coeffs[edge_key(e, base)] = to_string(q);
        circuits.push_back({{"cones", {c.cone_a, c.cone_b}},
                            {"removed", to_json(c.removed, base)},
                            {"added", to_json(c.added, base)},
                            {"coefficients", coeffs},
                            {"rhs_sum", to_string(c.rhs_sum)}});
    }
    return json{{"flips", r.circuits.size()},
                {"exchange_signs_ok", r.exchange_signs_ok},
                {"rhs_positive", r.rhs_positive},
                {"circuits", circuits}};
}

json to_json(const PolytopeH& p, int base) {
    json ineqs = json::array();
    for (std::size_t t = 0; t < p.labels.size(); ++t)
        ineqs.push_back({{"label", to_json(p.labels[t], base)}, {"normal", p.normals[t]}, {"rhs", to_string(p.rhs[t])}});
    json verts = json::array();
    for (const auto& x : p.vertices) {
        json v = json::array();
        for (const auto& q : x) v.push_back(to_string(q));
        verts.push_back(v);
    }
    json par = json::array();
    for (const auto& [a, b] : p.parallel_pairs) par.push_back({to_json(a, base), to_json(b, base)});
    return json{{"dim", p.dim}, {"inequalities", ineqs}, {"vertices", verts}, {"parallel_pairs", par}};
}

}  // namespace kassoc
