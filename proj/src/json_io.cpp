#include "mutant/json_io.hpp"

#include <sstream>

namespace mutant {

json matrix_to_json(const ExchangeMatrix& b) {
    json rows = json::array();
    for (int i = 0; i < b.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < b.size(); ++j) {
            const Int& e = b(i, j);
            // entries beyond 64 bits serialize as strings
            if (e >= std::numeric_limits<long long>::min() &&
                e <= std::numeric_limits<long long>::max())
                row.push_back((long long)e);
            else
                row.push_back(e.str());
        }
        rows.push_back(std::move(row));
    }
    return json{{"labels", b.labels()}, {"rows", rows}};
}

ExchangeMatrix matrix_from_json(const json& j) {
    if (!j.contains("rows")) throw DomainError("matrix JSON needs \"rows\"");
    auto& rows = j.at("rows");
    int n = int(rows.size());
    std::vector<std::string> labels;
    if (j.contains("labels"))
        labels = j.at("labels").get<std::vector<std::string>>();
    else
        labels = ExchangeMatrix::default_labels(n);
    if (int(labels.size()) != n) throw DomainError("matrix JSON: labels/rows size mismatch");
    std::vector<Int> e;
    for (auto& row : rows) {
        if (int(row.size()) != n) throw DomainError("matrix JSON: matrix must be square");
        for (auto& x : row) {
            if (x.is_string())
                e.emplace_back(x.get<std::string>());
            else
                e.emplace_back(x.get<long long>());
        }
    }
    return ExchangeMatrix(std::move(labels), std::move(e));
}

json diagram_to_json(const Diagram& g) {
    json edges = json::array();
    for (auto& e : g.edges())
        edges.push_back(json{{"tail", e.tail + 1}, {"head", e.head + 1}, {"w", e.w}});
    return json{{"n", g.size()}, {"edges", edges}};
}

Diagram diagram_from_json(const json& j) {
    int n = j.at("n").get<int>();
    Diagram g(n);
    for (auto& e : j.at("edges")) {
        int tail = e.at("tail").get<int>() - 1;
        int head = e.at("head").get<int>() - 1;
        long long w = e.contains("w") ? e.at("w").get<long long>() : 1;
        if (tail < 0 || tail >= n || head < 0 || head >= n)
            throw DomainError("diagram JSON: vertex out of range");
        g.set_edge(tail, head, w);
    }
    return g;
}

json seed_to_json(const Seed& s) {
    json pairs = json::array();
    for (auto& c : s.coeffs) pairs.push_back(json::array({c.plus, c.minus}));
    json vars = json::array();
    for (auto& v : s.cluster) vars.push_back(v.str(s.semifield));
    return json{{"matrix", matrix_to_json(s.matrix)},
                {"semifield", s.semifield.gens},
                {"coeff_pairs", pairs},
                {"cluster", vars}};
}

Seed seed_from_json(const json& j) {
    ExchangeMatrix b = matrix_from_json(j.contains("matrix") ? j.at("matrix") : j);
    TropSemifield p;
    if (j.contains("semifield")) p.gens = j.at("semifield").get<std::vector<std::string>>();
    std::vector<CoefficientPair> coeffs(b.size());
    for (auto& c : coeffs) {
        c.plus.assign(p.size(), 0);
        c.minus.assign(p.size(), 0);
    }
    if (j.contains("coeff_pairs")) {
        auto& cp = j.at("coeff_pairs");
        if (int(cp.size()) != b.size())
            throw DomainError("seed JSON: one coefficient pair per position");
        for (int i = 0; i < b.size(); ++i) {
            coeffs[i].plus = cp.at(i).at(0).get<TropElem>();
            coeffs[i].minus = cp.at(i).at(1).get<TropElem>();
        }
    }
    return initial_seed(b, p, coeffs);
}

json root_to_json(const RootVec& v) { return json(v); }

json clusters_to_json(const RootSystem& rs, const std::vector<std::vector<int>>& cls) {
    json out = json::array();
    for (auto& c : cls) {
        json cluster = json::array();
        for (int r : c)
            cluster.push_back(json{{"root", rs.apr(r)}, {"name", root_str(rs.apr(r))}});
        out.push_back(std::move(cluster));
    }
    return json{{"type", rs.type().str()}, {"count", cls.size()}, {"clusters", out}};
}

json complex_graph_to_json(const RootSystem& rs, const ComplexGraph& g) {
    json edges = json::array();
    for (auto& e : g.edges)
        edges.push_back(json{{"u", e.u},
                             {"v", e.v},
                             {"out", root_str(rs.apr(e.beta_u))},
                             {"in", root_str(rs.apr(e.beta_v))}});
    json verts = json::array();
    for (auto& c : g.clusters) {
        json names = json::array();
        for (int r : c) names.push_back(root_str(rs.apr(r)));
        verts.push_back(std::move(names));
    }
    return json{{"clusters", verts}, {"edges", edges}};
}

json engine_graph_to_json(const EngineGraph& g) {
    const TropSemifield& p = g.seeds.at(0).semifield;
    json seeds = json::array();
    for (auto& s : g.seeds) {
        json vars = json::array();
        for (auto& v : s.cluster) vars.push_back(v.str(p));
        seeds.push_back(std::move(vars));
    }
    json edges = json::array();
    for (auto& e : g.edges)
        edges.push_back(json{{"u", e.u}, {"v", e.v}, {"out", e.rel.z}, {"in", e.rel.zbar}});
    json vars = json::array();
    for (auto& v : g.variables) vars.push_back(v.str(p));
    return json{{"closed", g.closed}, {"seeds", seeds}, {"edges", edges}, {"variables", vars}};
}

json mutation_class_to_json(const MutationClassResult& r) {
    json members = json::array();
    for (auto& c : r.members) members.push_back(diagram_to_json(diagram_of_canonical(c)));
    return json{{"closed", r.closed}, {"count", r.members.size()}, {"members", members}};
}

json identity_reports_to_json(const std::vector<IdentityReport>& reports) {
    json out = json::array();
    for (auto& r : reports) {
        json e{{"name", r.name}, {"ok", r.ok}};
        if (!r.ok) e["detail"] = r.detail;
        out.push_back(std::move(e));
    }
    return out;
}

json triangulation_to_json(const PolygonModel& pm, const Triangulation& t) {
    json out = json::array();
    for (int d : t) {
        const ThetaOrbit& o = pm.orbits()[d];
        json diag{{"a", o.a}, {"b", o.b}};
        if (o.kind == ThetaOrbit::Diameter) diag["color"] = "plain";
        if (o.kind == ThetaOrbit::DiameterTilde) diag["color"] = "tilde";
        out.push_back(std::move(diag));
    }
    return out;
}

std::string diagram_dot(const Diagram& g, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (int v = 0; v < g.size(); ++v) os << "  v" << v + 1 << " [label=\"" << v + 1 << "\"];\n";
    for (auto& e : g.edges()) {
        os << "  v" << e.tail + 1 << " -> v" << e.head + 1;
        if (e.w != 1) os << " [label=\"" << e.w << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string mutation_class_dot(const MutationClassResult& r) {
    std::ostringstream os;
    os << "digraph mutation_class {\n";
    int idx = 0;
    for (auto& c : r.members) {
        Diagram g = diagram_of_canonical(c);
        os << "  subgraph cluster_" << idx << " {\n    label=\"member " << idx << "\";\n";
        for (int v = 0; v < g.size(); ++v)
            os << "    m" << idx << "v" << v + 1 << " [label=\"" << v + 1 << "\"];\n";
        for (auto& e : g.edges()) {
            os << "    m" << idx << "v" << e.tail + 1 << " -> m" << idx << "v" << e.head + 1;
            if (e.w != 1) os << " [label=\"" << e.w << "\"]";
            os << ";\n";
        }
        os << "  }\n";
        ++idx;
    }
    os << "}\n";
    return os.str();
}

namespace {

std::string cluster_label(const RootSystem& rs, const std::vector<int>& c) {
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += root_str(rs.apr(c[i]));
    }
    return s;
}

} // namespace

std::string complex_graph_dot(const RootSystem& rs, const ComplexGraph& g) {
    std::ostringstream os;
    os << "graph exchange {\n";
    for (size_t i = 0; i < g.clusters.size(); ++i)
        os << "  c" << i << " [label=\"" << cluster_label(rs, g.clusters[i]) << "\"];\n";
    for (auto& e : g.edges)
        os << "  c" << e.u << " -- c" << e.v << " [label=\"" << root_str(rs.apr(e.beta_u))
           << "/" << root_str(rs.apr(e.beta_v)) << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string engine_graph_dot(const EngineGraph& g) {
    const TropSemifield& p = g.seeds.at(0).semifield;
    std::ostringstream os;
    os << "graph exchange {\n";
    for (size_t i = 0; i < g.seeds.size(); ++i) {
        std::string label;
        for (size_t q = 0; q < g.seeds[i].cluster.size(); ++q) {
            if (q) label += ", ";
            label += g.seeds[i].cluster[q].str(p);
        }
        os << "  s" << i << " [label=\"" << label << "\"];\n";
    }
    for (auto& e : g.edges) os << "  s" << e.u << " -- s" << e.v << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace mutant
