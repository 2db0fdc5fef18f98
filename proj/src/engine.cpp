#include "mutant/engine.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mutant {

Seed initial_seed(const ExchangeMatrix& b, const TropSemifield& p,
                  const std::vector<CoefficientPair>& coeffs) {
    if (!is_sign_skew_symmetric(b)) throw DomainError("seed matrix is not sign-skew-symmetric");
    if (int(coeffs.size()) != b.size()) throw DomainError("one coefficient pair per position");
    Seed s;
    s.semifield = p;
    s.matrix = b;
    s.coeffs = coeffs;
    for (auto& c : coeffs) {
        if (int(c.plus.size()) != p.size() || !c.is_normalized())
            throw DomainError("coefficient pair is not normalized");
    }
    for (int i = 0; i < b.size(); ++i)
        s.cluster.push_back(Laurent::variable(b.size(), p.size(), i));
    return s;
}

Seed initial_seed(const ExchangeMatrix& b) {
    TropSemifield p;
    std::vector<CoefficientPair> coeffs(b.size());
    return initial_seed(b, p, coeffs);
}

Seed seed_mutate(const Seed& s, int z, Relation* rel) {
    int n = s.rank();
    if (z < 0 || z >= n) throw DomainError("mutation position out of range");
    int nx = s.cluster[z].nx(), np = s.semifield.size();

    Laurent mono_plus = Laurent::one(nx, np), mono_minus = Laurent::one(nx, np);
    for (int x = 0; x < n; ++x) {
        const Int& e = s.matrix(x, z);
        if (e > 0) mono_plus = mono_plus * s.cluster[x].pow(to_ll(e, "exchange exponent"));
        if (e < 0) mono_minus = mono_minus * s.cluster[x].pow(to_ll(-e, "exchange exponent"));
    }
    Laurent rhs = Laurent::coefficient(nx, s.coeffs[z].plus) * mono_plus +
                  Laurent::coefficient(nx, s.coeffs[z].minus) * mono_minus;
    Laurent fresh = rhs.divided_by(s.cluster[z]);

    ExchangeMatrix m2 = mutate(s.matrix, z);
    if (!is_sign_skew_symmetric(m2))
        throw DomainError("mutation inadmissible: mutated matrix not sign-skew-symmetric");

    Seed out;
    out.semifield = s.semifield;
    out.matrix = std::move(m2);
    out.cluster = s.cluster;
    out.cluster[z] = fresh;
    out.coeffs.resize(n);
    for (int x = 0; x < n; ++x) {
        if (x == z) {
            out.coeffs[x] = {s.coeffs[z].minus, s.coeffs[z].plus};
            continue;
        }
        TropElem u = trop_div(s.coeffs[x].plus, s.coeffs[x].minus);
        long long bzx = to_ll(s.matrix(z, x), "coefficient exponent");
        const TropElem& factor = (bzx >= 0) ? s.coeffs[z].plus : s.coeffs[z].minus;
        u = trop_mul(u, trop_pow(factor, bzx));
        out.coeffs[x] = normalize_ratio(u);
    }

    if (rel) {
        rel->z = s.cluster[z].str(s.semifield);
        rel->zbar = fresh.str(s.semifield);
        rel->p_plus = s.coeffs[z].plus;
        rel->p_minus = s.coeffs[z].minus;
        rel->m_plus.clear();
        rel->m_minus.clear();
        for (int x = 0; x < n; ++x) {
            const Int& e = s.matrix(x, z);
            if (e > 0) rel->m_plus.emplace_back(s.cluster[x].str(s.semifield), to_ll(e));
            if (e < 0) rel->m_minus.emplace_back(s.cluster[x].str(s.semifield), to_ll(-e));
        }
        std::sort(rel->m_plus.begin(), rel->m_plus.end());
        std::sort(rel->m_minus.begin(), rel->m_minus.end());
    }
    return out;
}

Seed seed_mutate(const Seed& s, int z) { return seed_mutate(s, z, nullptr); }

namespace {

/// Canonical key of a seed modulo simultaneous relabeling of positions:
/// positions sorted by (variable, coefficient pair), matrix permuted along.
std::string seed_key(const Seed& s) {
    int n = s.rank();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::string> var_strs(n);
    for (int i = 0; i < n; ++i) var_strs[i] = s.cluster[i].str(s.semifield);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (var_strs[a] != var_strs[b]) return var_strs[a] < var_strs[b];
        if (s.coeffs[a].plus != s.coeffs[b].plus) return s.coeffs[a].plus < s.coeffs[b].plus;
        return s.coeffs[a].minus < s.coeffs[b].minus;
    });
    std::ostringstream os;
    for (int i : order) {
        os << var_strs[i] << ";";
        for (int e : s.coeffs[i].plus) os << e << ",";
        os << "|";
        for (int e : s.coeffs[i].minus) os << e << ",";
        os << ";";
    }
    os << "#";
    for (int a : order)
        for (int b : order) os << s.matrix(a, b).str() << ",";
    return os.str();
}

EngineGraph finish_graph(std::vector<Seed> seeds, std::vector<EngineGraph::Edge> edges,
                         bool closed) {
    EngineGraph g;
    g.seeds = std::move(seeds);
    g.edges = std::move(edges);
    g.closed = closed;
    std::vector<Laurent> vars;
    for (auto& s : g.seeds)
        for (auto& v : s.cluster) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    g.variables = std::move(vars);
    std::sort(g.edges.begin(), g.edges.end(), [](const EngineGraph::Edge& a,
                                                 const EngineGraph::Edge& b) {
        return std::tie(a.u, a.v, a.rel.z, a.rel.zbar) < std::tie(b.u, b.v, b.rel.z, b.rel.zbar);
    });
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end(),
                              [](const EngineGraph::Edge& a, const EngineGraph::Edge& b) {
                                  return a.u == b.u && a.v == b.v && a.rel == b.rel;
                              }),
                  g.edges.end());
    return g;
}

} // namespace

EngineGraph build_exchange_graph_serial(const Seed& s0, const EngineOptions& opt) {
    std::vector<Seed> seeds{s0};
    std::unordered_map<std::string, int> ids{{seed_key(s0), 0}};
    std::vector<EngineGraph::Edge> edges;
    std::vector<int> frontier{0};
    bool closed = true;

    while (!frontier.empty()) {
        std::vector<int> next;
        for (int u : frontier) {
            for (int z = 0; z < seeds[u].rank(); ++z) {
                Relation rel;
                Seed m = seed_mutate(seeds[u], z, &rel);
                std::string key = seed_key(m);
                auto [it, fresh_seed] = ids.try_emplace(key, int(seeds.size()));
                if (fresh_seed) {
                    seeds.push_back(std::move(m));
                    next.push_back(it->second);
                }
                int v = it->second;
                if (u < v)
                    edges.push_back({u, v, std::move(rel)});
                else if (v < u) {
                    // Store with endpoints ordered; swap the relation sides.
                    std::swap(rel.z, rel.zbar);
                    std::swap(rel.p_plus, rel.p_minus);
                    std::swap(rel.m_plus, rel.m_minus);
                    edges.push_back({v, u, std::move(rel)});
                }
            }
        }
        if (seeds.size() > opt.seed_cap) {
            closed = false;
            break;
        }
        frontier = std::move(next);
    }
    return finish_graph(std::move(seeds), std::move(edges), closed);
}

EngineGraph build_exchange_graph(const Seed& s0, const EngineOptions& opt) {
#ifndef _OPENMP
    return build_exchange_graph_serial(s0, opt);
#else
    if (!opt.parallel) return build_exchange_graph_serial(s0, opt);
    std::vector<Seed> seeds{s0};
    std::unordered_map<std::string, int> ids{{seed_key(s0), 0}};
    std::vector<EngineGraph::Edge> edges;
    std::vector<int> frontier{0};
    bool closed = true;

    while (!frontier.empty()) {
        size_t fn = frontier.size();
        struct Produced {
            Seed seed;
            std::string key;
            Relation rel;
            int u, z;
        };
        std::vector<std::vector<Produced>> buckets(fn);
        std::string error;
#pragma omp parallel for schedule(dynamic)
        for (size_t q = 0; q < fn; ++q) {
            try {
                int u = frontier[q];
                for (int z = 0; z < seeds[u].rank(); ++z) {
                    Produced p;
                    p.u = u;
                    p.z = z;
                    p.seed = seed_mutate(seeds[u], z, &p.rel);
                    p.key = seed_key(p.seed);
                    buckets[q].push_back(std::move(p));
                }
            } catch (const std::exception& e) {
#pragma omp critical
                error = e.what();
            }
        }
        if (!error.empty()) throw DomainError(error);
        std::vector<int> next;
        for (auto& bucket : buckets)
            for (auto& p : bucket) {
                auto [it, fresh_seed] = ids.try_emplace(p.key, int(seeds.size()));
                if (fresh_seed) {
                    seeds.push_back(std::move(p.seed));
                    next.push_back(it->second);
                }
                int v = it->second;
                Relation rel = std::move(p.rel);
                if (p.u < v)
                    edges.push_back({p.u, v, std::move(rel)});
                else if (v < p.u) {
                    std::swap(rel.z, rel.zbar);
                    std::swap(rel.p_plus, rel.p_minus);
                    std::swap(rel.m_plus, rel.m_minus);
                    edges.push_back({v, p.u, std::move(rel)});
                }
            }
        if (seeds.size() > opt.seed_cap) {
            closed = false;
            break;
        }
        frontier = std::move(next);
    }
    return finish_graph(std::move(seeds), std::move(edges), closed);
#endif
}

RootVec denominator_vector(const Laurent& v) { return v.denominator_vector(); }

bool check_positivity(const Laurent& v) { return v.is_positive(); }

std::map<std::string, int> root_labels(const EngineGraph& g, const RootSystem& rs) {
    if (!g.closed) throw DomainError("root labels require a closed run");
    std::map<std::string, int> out;
    TropSemifield p = g.seeds.at(0).semifield;
    for (auto& v : g.variables) {
        RootVec a = v.denominator_vector();
        out[v.str(p)] = rs.apr_index(a);  // throws if not almost positive
    }
    if (out.size() != g.variables.size())
        throw DomainError("variable strings are not distinct");
    return out;
}

std::map<std::pair<int, int>, RootRelation> exchange_pair_data(const EngineGraph& g,
                                                               const RootSystem& rs) {
    auto labels = root_labels(g, rs);
    auto cls = clusters(rs);
    std::map<std::pair<int, int>, RootRelation> out;
    for (auto& e : g.edges) {
        int beta = labels.at(e.rel.z);
        int beta_prime = labels.at(e.rel.zbar);
        if (!are_exchangeable(rs, beta, beta_prime))
            throw DomainError("exchange edge joins non-exchangeable roots");
        int eps = sign_eps(rs, beta, beta_prime);

        // Monomials in root form. The b_xz > 0 monomial carries p_plus and
        // is the expansion of beta+beta' exactly when eps = +1.
        auto to_roots = [&](const std::vector<std::pair<std::string, long long>>& m) {
            std::map<int, long long> r;
            for (auto& [s, e2] : m) r[labels.at(s)] = e2;
            return r;
        };
        RootRelation rr;
        std::map<int, long long> plus_mono = to_roots(e.rel.m_plus);
        std::map<int, long long> minus_mono = to_roots(e.rel.m_minus);
        if (eps > 0) {
            rr.coeff_plus = e.rel.p_plus;
            rr.coeff_minus = e.rel.p_minus;
            rr.mono_plus = plus_mono;
            rr.mono_minus = minus_mono;
        } else {
            rr.coeff_plus = e.rel.p_minus;
            rr.coeff_minus = e.rel.p_plus;
            rr.mono_plus = minus_mono;
            rr.mono_minus = plus_mono;
        }

        // Check against the root-theoretic prediction.
        RootVec sum(rs.rank());
        for (int i = 0; i < rs.rank(); ++i)
            sum[i] = rs.apr(beta)[i] + rs.apr(beta_prime)[i];
        if (rr.mono_plus != cluster_expansion(rs, sum, cls))
            throw DomainError("exchange monomial differs from expansion of beta+beta'");
        if (rr.mono_minus != cluster_expansion(rs, subplus(rs, beta, beta_prime), cls))
            throw DomainError("exchange monomial differs from expansion of beta(+)beta'");

        auto key = std::make_pair(beta, beta_prime);
        auto [it, fresh] = out.try_emplace(key, rr);
        if (!fresh && !(it->second == rr))
            throw DomainError("exchange relation differs between seeds realizing the same pair");

        // And the reversed orientation of the edge.
        RootRelation rev;
        rev.coeff_plus = rr.coeff_plus;
        rev.coeff_minus = rr.coeff_minus;
        rev.mono_plus = rr.mono_plus;
        rev.mono_minus = rr.mono_minus;
        auto rkey = std::make_pair(beta_prime, beta);
        auto [it2, fresh2] = out.try_emplace(rkey, rev);
        if (!fresh2 && !(it2->second == rev))
            throw DomainError("exchange relation differs between seeds realizing the same pair");
    }
    return out;
}

} // namespace mutant
