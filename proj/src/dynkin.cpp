#include "mutant/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace mutant {

CartanKillingType::CartanKillingType(std::vector<TypeComponent> comps)
    : components(std::move(comps)) {
    std::sort(components.begin(), components.end());
}

int CartanKillingType::rank() const {
    int r = 0;
    for (auto& c : components) r += c.rank;
    return r;
}

std::string CartanKillingType::str() const {
    if (components.empty()) return "(empty)";
    std::string s;
    for (size_t i = 0; i < components.size(); ++i) {
        if (i) s += " x ";
        s += components[i].str();
    }
    return s;
}

CartanKillingType CartanKillingType::parse(const std::string& in) {
    std::string s;
    for (char c : in)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    std::vector<TypeComponent> comps;
    size_t i = 0;
    while (i < s.size()) {
        char f = char(std::toupper(static_cast<unsigned char>(s[i])));
        if (f < 'A' || f > 'G' || f == 'X')
            throw DomainError("bad type string: " + in);
        ++i;
        int r = 0;
        bool any = false;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            r = r * 10 + (s[i] - '0');
            ++i;
            any = true;
        }
        if (!any) throw DomainError("bad type string: " + in);
        comps.push_back({f, r});
        if (i < s.size()) {
            if (std::tolower(static_cast<unsigned char>(s[i])) != 'x')
                throw DomainError("bad type string: " + in);
            ++i;
        }
    }
    if (comps.empty()) throw DomainError("bad type string: " + in);
    return CartanKillingType(std::move(comps));
}

namespace {

void check_rank(const TypeComponent& c) {
    bool ok = false;
    switch (c.family) {
        case 'A': ok = c.rank >= 1; break;
        case 'B': ok = c.rank >= 2; break;
        case 'C': ok = c.rank >= 2; break;  // C2 accepted on input, reported as B2
        case 'D': ok = c.rank >= 3; break;  // D3 accepted on input, reported as A3
        case 'E': ok = c.rank >= 6 && c.rank <= 8; break;
        case 'F': ok = c.rank == 4; break;
        case 'G': ok = c.rank == 2; break;
        default: ok = false;
    }
    if (!ok) throw DomainError("invalid type component " + c.str());
}

/// Undirected edges of the Coxeter graph of one irreducible factor, with the
/// (a_ij, a_ji) pair carried on each edge.
struct CoxEdge {
    int i, j;
    int aij, aji;  // a_{i,j}, a_{j,i}
};

std::vector<CoxEdge> coxeter_edges(const TypeComponent& c) {
    check_rank(c);
    int n = c.rank;
    std::vector<CoxEdge> e;
    auto chain = [&](int from, int to) {
        for (int i = from; i < to; ++i) e.push_back({i, i + 1, -1, -1});
    };
    switch (c.family) {
        case 'A':
            chain(0, n - 1);
            break;
        case 'B':
            chain(0, n - 2);
            e.push_back({n - 2, n - 1, -1, -2});
            break;
        case 'C':
            chain(0, n - 2);
            e.push_back({n - 2, n - 1, -2, -1});
            break;
        case 'D':
            if (n == 3) return coxeter_edges({'A', 3});
            chain(0, n - 3);
            e.push_back({n - 3, n - 2, -1, -1});
            e.push_back({n - 3, n - 1, -1, -1});
            break;
        case 'E':
            // Chain 1-3-4-5-...-n with 2 attached to 4 (0-based: 0-2-3-4-...).
            e.push_back({0, 2, -1, -1});
            chain(2, n - 1);
            e.push_back({1, 3, -1, -1});
            break;
        case 'F':
            e.push_back({0, 1, -1, -1});
            e.push_back({1, 2, -1, -2});
            e.push_back({2, 3, -1, -1});
            break;
        case 'G':
            e.push_back({0, 1, -3, -1});
            break;
    }
    return e;
}

} // namespace

CartanMatrix cartan_matrix_of(const CartanKillingType& t) {
    int n = t.rank();
    CartanMatrix a(n);
    for (int i = 0; i < n; ++i) a(i, i) = 2;
    int off = 0;
    for (auto& c : t.components) {
        for (auto& e : coxeter_edges(c)) {
            a(off + e.i, off + e.j) = e.aij;
            a(off + e.j, off + e.i) = e.aji;
        }
        off += c.rank;
    }
    return a;
}

Diagram dynkin_diagram(const TypeComponent& c) {
    auto edges = coxeter_edges(c);
    Diagram g(c.rank);
    for (auto& e : edges) g.set_edge(e.i, e.j, std::abs((long long)e.aij * e.aji));
    return g;
}

std::vector<Diagram> dynkin_orientations(const TypeComponent& c) {
    auto edges = coxeter_edges(c);
    std::vector<Diagram> out;
    for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
        Diagram g(c.rank);
        for (size_t i = 0; i < edges.size(); ++i) {
            auto& e = edges[i];
            long long w = std::abs((long long)e.aij * e.aji);
            if (mask & (1u << i))
                g.set_edge(e.j, e.i, w);
            else
                g.set_edge(e.i, e.j, w);
        }
        out.push_back(std::move(g));
    }
    return out;
}

Diagram extended_dynkin_tree(char family, int n, int g2_weight) {
    // n+1 vertices, chains oriented low to high.
    auto path = [](const std::vector<long long>& ws) {
        Diagram g(int(ws.size()) + 1);
        for (size_t i = 0; i < ws.size(); ++i) g.set_edge(int(i), int(i) + 1, ws[i]);
        return g;
    };
    switch (family) {
        case 'B': {
            if (n < 3) throw DomainError("B^(1) needs n >= 3");
            Diagram g(n + 1);
            g.set_edge(0, 2, 1);
            g.set_edge(1, 2, 1);
            for (int i = 2; i < n - 1; ++i) g.set_edge(i, i + 1, 1);
            g.set_edge(n - 1, n, 2);
            return g;
        }
        case 'C': {
            if (n < 2) throw DomainError("C^(1) needs n >= 2");
            std::vector<long long> ws(n, 1);
            ws.front() = 2;
            ws.back() = 2;
            return path(ws);
        }
        case 'D': {
            if (n < 4) throw DomainError("D^(1) needs n >= 4");
            Diagram g(n + 1);
            g.set_edge(0, 2, 1);
            g.set_edge(1, 2, 1);
            for (int i = 2; i < n - 2; ++i) g.set_edge(i, i + 1, 1);
            g.set_edge(n - 2, n - 1, 1);
            g.set_edge(n - 2, n, 1);
            return g;
        }
        case 'E':
            if (n == 6) return t_diagram(2, 2, 2);
            if (n == 7) return t_diagram(3, 1, 3);
            if (n == 8) return t_diagram(2, 1, 5);
            throw DomainError("E^(1) needs n in 6..8");
        case 'F':
            if (n != 4) throw DomainError("F^(1) needs n = 4");
            return path({1, 2, 1, 1});
        case 'G':
            if (n != 2) throw DomainError("G^(1) needs n = 2");
            if (g2_weight < 1 || g2_weight > 3) throw DomainError("G2^(1) weight must be 1..3");
            return path({3, g2_weight});
        default:
            throw DomainError("no extended Dynkin tree for family");
    }
}

Diagram t_diagram(int p, int q, int r) {
    Diagram g(p + q + r + 1);
    int next = 1;
    for (int len : {p, q, r}) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            g.set_edge(prev, next, 1);
            prev = next++;
        }
    }
    return g;
}

Diagram crown_diagram(int p, int q, int r, int s) {
    if (p < 1 || q < 1 || r < 1 || s < 0) throw DomainError("bad crown parameters");
    int cyc = s + 3;
    Diagram g(p + q + r + s);
    for (int i = 0; i < cyc; ++i) g.set_edge(i, (i + 1) % cyc, 1);
    int next = cyc;
    int attach = 0;
    for (int len : {p - 1, q - 1, r - 1}) {
        int prev = attach++;
        for (int i = 0; i < len; ++i) {
            g.set_edge(prev, next, 1);
            prev = next++;
        }
    }
    return g;
}

Diagram oriented_cycle(const std::vector<long long>& weights) {
    int n = int(weights.size());
    if (n < 3) throw DomainError("cycle needs at least 3 vertices");
    Diagram g(n);
    for (int i = 0; i < n; ++i) g.set_edge(i, (i + 1) % n, weights[i]);
    return g;
}

namespace {

std::vector<TypeComponent> candidates_for_rank(int n) {
    std::vector<TypeComponent> out;
    out.push_back({'A', n});
    if (n >= 2) out.push_back({'B', n});
    if (n >= 4) out.push_back({'D', n});
    if (n >= 6 && n <= 8) out.push_back({'E', n});
    if (n == 4) out.push_back({'F', 4});
    if (n == 2) out.push_back({'G', 2});
    return out;
}

/// Bidirectional search: one frontier grows from the input, the other from
/// all orientations of all candidate Dynkin diagrams of the same rank
/// (tagged with their type). Meeting identifies the type; a weight above 3
/// or an unrealizable mutation on the input side certifies 2-infiniteness,
/// and so does exhausting the candidate classes without a meet.
std::optional<TypeComponent> recognize_component(const Diagram& g) {
    int n = g.size();
    if (n == 1) return TypeComponent{'A', 1};
    if (n == 2) {
        switch (g.max_weight()) {
            case 1: return TypeComponent{'A', 2};
            case 2: return TypeComponent{'B', 2};
            case 3: return TypeComponent{'G', 2};
            default: return std::nullopt;
        }
    }
    if (g.max_weight() > 3) return std::nullopt;

    std::map<CanonicalDiagram, TypeComponent> ref_seen;
    std::vector<std::pair<Diagram, TypeComponent>> ref_frontier;
    for (auto& c : candidates_for_rank(n))
        for (auto& g2 : dynkin_orientations(c)) {
            CanonicalDiagram cc = canonical_form(g2);
            if (ref_seen.emplace(cc, c).second) ref_frontier.push_back({diagram_of_canonical(cc), c});
        }

    std::set<CanonicalDiagram> seen;
    CanonicalDiagram c0 = canonical_form(g);
    if (auto it = ref_seen.find(c0); it != ref_seen.end()) return it->second;
    seen.insert(c0);
    std::vector<Diagram> frontier{g};

    while (!frontier.empty()) {
        // Expand the smaller open frontier.
        if (!ref_frontier.empty() && ref_frontier.size() <= frontier.size()) {
            std::vector<std::pair<Diagram, TypeComponent>> next;
            for (auto& [d, t] : ref_frontier)
                for (int k = 0; k < d.size(); ++k) {
                    CanonicalDiagram c = canonical_form(diagram_mutate(d, k));
                    if (seen.count(c)) return t;
                    if (ref_seen.emplace(c, t).second) next.push_back({diagram_of_canonical(c), t});
                }
            ref_frontier = std::move(next);
            if (ref_frontier.empty()) return std::nullopt;  // candidates exhausted
            continue;
        }
        std::vector<Diagram> next;
        for (auto& d : frontier)
            for (int k = 0; k < d.size(); ++k) {
                Diagram m;
                try {
                    m = diagram_mutate(d, k);
                } catch (const DomainError&) {
                    return std::nullopt;  // unrealizable step: not 2-finite
                }
                if (m.max_weight() > 3) return std::nullopt;
                CanonicalDiagram c = canonical_form(m);
                if (!seen.insert(c).second) continue;
                if (auto it = ref_seen.find(c); it != ref_seen.end()) return it->second;
                next.push_back(diagram_of_canonical(c));
            }
        frontier = std::move(next);
    }
    return std::nullopt;  // input class closed without meeting any Dynkin class
}

} // namespace

std::optional<CartanKillingType> recognize_type(const Diagram& g) {
    std::vector<TypeComponent> comps;
    for (auto& verts : g.components()) {
        auto t = recognize_component(g.subdiagram(verts));
        if (!t) return std::nullopt;
        comps.push_back(*t);
    }
    return CartanKillingType(std::move(comps));
}

std::optional<CartanKillingType> recognize_matrix_type(const ExchangeMatrix& b) {
    if (!is_sign_skew_symmetric(b)) return std::nullopt;
    std::vector<TypeComponent> comps;
    for (auto& verts : support_components(b)) {
        ExchangeMatrix sub = b.submatrix(verts);
        auto t = recognize_component(diagram_of(sub));
        if (!t) return std::nullopt;
        if (t->family == 'B' && t->rank >= 3) {
            // Same diagram, different matrices: B_n has one short simple root
            // (one symmetrizer entry below the rest), C_n has one long one.
            auto d = skew_symmetrizer(sub);
            if (!d) return std::nullopt;
            int ones = 0;
            for (auto& x : *d) ones += (x == 1);
            if (ones == t->rank - 1) t->family = 'C';
        }
        comps.push_back(*t);
    }
    return CartanKillingType(std::move(comps));
}

} // namespace mutant
