#include "mutant/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mutant {

std::string root_str(const RootVec& v) {
    bool neg_simple = false;
    int nz = 0, pos = -1;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) {
            ++nz;
            pos = int(i);
        }
    if (nz == 1 && v[pos] == -1) neg_simple = true;
    if (neg_simple) return "-a" + std::to_string(pos + 1);
    if (nz == 0) return "0";
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!s.empty() && v[i] > 0) s += "+";
        if (v[i] == -1)
            s += "-";
        else if (v[i] != 1)
            s += std::to_string(v[i]);
        s += "a" + std::to_string(i + 1);
    }
    return s;
}

namespace {

long long height(const RootVec& v) {
    long long h = 0;
    for (long long c : v) h += c;
    return h;
}

bool all_nonneg(const RootVec& v) {
    for (long long c : v)
        if (c < 0) return false;
    return true;
}

} // namespace

RootSystem::RootSystem(const CartanKillingType& type, bool parallel_tables) : type_(type) {
    CartanMatrix a = cartan_matrix_of(type);
    n_ = a.n;
    a_.resize(size_t(n_) * n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) a_[size_t(i) * n_ + j] = to_ll(a(i, j));

    // Components of the Coxeter graph.
    component_of_.assign(n_, -1);
    for (int s = 0; s < n_; ++s) {
        if (component_of_[s] >= 0) continue;
        std::vector<int> stk{s}, mem;
        component_of_[s] = int(components_.size());
        while (!stk.empty()) {
            int v = stk.back();
            stk.pop_back();
            mem.push_back(v);
            for (int u = 0; u < n_; ++u)
                if (component_of_[u] < 0 && cartan(v, u) != 0) {
                    component_of_[u] = component_of_[s];
                    stk.push_back(u);
                }
        }
        std::sort(mem.begin(), mem.end());
        components_.push_back(std::move(mem));
    }

    // Bipartition: 2-color each component, + on its lowest index.
    eps_.assign(n_, 0);
    for (auto& comp : components_) {
        std::vector<int> stk{comp[0]};
        eps_[comp[0]] = +1;
        while (!stk.empty()) {
            int v = stk.back();
            stk.pop_back();
            for (int u : comp)
                if (u != v && cartan(v, u) != 0) {
                    if (eps_[u] == 0) {
                        eps_[u] = -eps_[v];
                        stk.push_back(u);
                    } else if (eps_[u] == eps_[v]) {
                        throw DomainError("Coxeter graph is not bipartite");
                    }
                }
        }
    }

    // Minimal symmetrizer per component: d_i a_ij = d_j a_ji.
    d_.assign(n_, 0);
    for (auto& comp : components_) {
        std::vector<std::pair<long long, long long>> r(n_, {0, 1});  // num/den
        r[comp[0]] = {1, 1};
        std::vector<int> stk{comp[0]};
        std::vector<bool> seen(n_, false);
        seen[comp[0]] = true;
        while (!stk.empty()) {
            int i = stk.back();
            stk.pop_back();
            for (int j : comp)
                if (!seen[j] && cartan(i, j) != 0) {
                    seen[j] = true;
                    long long num = r[i].first * std::abs(cartan(i, j));
                    long long den = r[i].second * std::abs(cartan(j, i));
                    long long g = std::gcd(num, den);
                    r[j] = {num / g, den / g};
                    stk.push_back(j);
                }
        }
        long long l = 1;
        for (int i : comp) l = std::lcm(l, r[i].second);
        long long g = 0;
        for (int i : comp) g = std::gcd(g, r[i].first * (l / r[i].second));
        for (int i : comp) d_[i] = r[i].first * (l / r[i].second) / g;
    }

    // Positive roots: closure of the simples under simple reflections.
    std::set<RootVec> pos;
    std::vector<RootVec> frontier;
    for (int i = 0; i < n_; ++i) {
        RootVec e(n_, 0);
        e[i] = 1;
        pos.insert(e);
        frontier.push_back(std::move(e));
    }
    while (!frontier.empty()) {
        std::vector<RootVec> next;
        for (auto& b : frontier)
            for (int i = 0; i < n_; ++i) {
                long long pairing = 0;
                for (int j = 0; j < n_; ++j) pairing += cartan(i, j) * b[j];
                RootVec s = b;
                s[i] -= pairing;
                if (all_nonneg(s) && pos.insert(s).second) next.push_back(std::move(s));
            }
        frontier = std::move(next);
    }
    positive_.assign(pos.begin(), pos.end());
    std::sort(positive_.begin(), positive_.end(), [](const RootVec& x, const RootVec& y) {
        long long hx = height(x), hy = height(y);
        if (hx != hy) return hx < hy;
        return x < y;
    });

    // Coxeter numbers: |Phi_{>0} restricted to comp| = h * rank / 2.
    h_.assign(components_.size(), 0);
    for (size_t c = 0; c < components_.size(); ++c) {
        long long cnt = 0;
        for (auto& b : positive_) {
            int supp = -1;
            for (int i = 0; i < n_; ++i)
                if (b[i] != 0) {
                    supp = component_of_[i];
                    break;
                }
            if (supp == int(c)) ++cnt;
        }
        h_[c] = int(2 * cnt / components_[c].size());
        h_max_ = std::max(h_max_, h_[c]);
    }

    apr_.reserve(n_ + positive_.size());
    for (int i = 0; i < n_; ++i) {
        RootVec e(n_, 0);
        e[i] = -1;
        apr_.push_back(std::move(e));
    }
    for (auto& b : positive_) apr_.push_back(b);
    for (size_t i = 0; i < apr_.size(); ++i) apr_index_[apr_[i]] = int(i);

    compat_ = compatibility_table(*this, parallel_tables);
}

int RootSystem::apr_index(const RootVec& v) const {
    auto it = apr_index_.find(v);
    if (it == apr_index_.end()) throw DomainError("not an almost positive root: " + root_str(v));
    return it->second;
}

bool RootSystem::is_almost_positive(const RootVec& v) const { return apr_index_.count(v) > 0; }

long long RootSystem::form(const RootVec& x, const RootVec& y) const {
    long long s = 0;
    for (int i = 0; i < n_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n_; ++j) s += x[i] * y[j] * d_[i] * cartan(i, j);
    }
    return s;
}

RootVec tau(const RootSystem& rs, int eps, const RootVec& g) {
    int n = rs.rank();
    RootVec r = g;
    for (int i = 0; i < n; ++i) {
        if (rs.sign(i) != eps) continue;
        long long v = -g[i];
        for (int j = 0; j < n; ++j)
            if (j != i && g[j] > 0) v -= rs.cartan(i, j) * g[j];
        r[i] = v;
    }
    return r;
}

RootVec tau_alternating(const RootSystem& rs, int eps, int k, const RootVec& g) {
    RootVec r = g;
    int s = eps;
    for (int i = 0; i < k; ++i) {
        r = tau(rs, s, r);
        s = -s;
    }
    return r;
}

namespace {

int neg_simple_index(const RootVec& v) {
    int pos = -1;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (v[i] != -1 || pos >= 0) return -1;
        pos = int(i);
    }
    return pos;
}

} // namespace

int k_epsilon(const RootSystem& rs, int eps, const RootVec& beta) {
    RootVec cur = beta;
    int s = eps;
    int bound = 2 * rs.max_coxeter_number() + 4;
    for (int k = 0; k <= bound; ++k) {
        RootVec nxt = tau(rs, s, cur);
        if (nxt == cur && neg_simple_index(cur) >= 0) return k;
        cur = std::move(nxt);
        s = -s;
    }
    throw DomainError("k_epsilon did not terminate: not an almost positive root?");
}

int compatibility_degree(const RootSystem& rs, const RootVec& a, const RootVec& b) {
    RootVec x = a, y = b;
    int s = +1;
    int bound = rs.max_coxeter_number() + 1;
    for (int k = 0; k <= bound; ++k) {
        int i = neg_simple_index(x);
        if (i >= 0) return int(std::max<long long>(y[i], 0));
        x = tau(rs, s, x);
        y = tau(rs, s, y);
        s = -s;
    }
    throw DomainError("compatibility reduction exceeded h+1 steps");
}

std::vector<int> compatibility_table_serial(const RootSystem& rs) {
    size_t m = rs.almost_positive().size();
    std::vector<int> t(m * m);
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b)
            t[a * m + b] = compatibility_degree(rs, rs.apr(int(a)), rs.apr(int(b)));
    return t;
}

std::vector<int> compatibility_table(const RootSystem& rs, bool parallel) {
#ifdef _OPENMP
    if (parallel) {
        size_t m = rs.almost_positive().size();
        std::vector<int> t(m * m);
        std::string error;
#pragma omp parallel for collapse(2) schedule(static)
        for (size_t a = 0; a < m; ++a)
            for (size_t b = 0; b < m; ++b) {
                try {
                    t[a * m + b] = compatibility_degree(rs, rs.apr(int(a)), rs.apr(int(b)));
                } catch (const std::exception& e) {
#pragma omp critical
                    error = e.what();
                }
            }
        if (!error.empty()) throw DomainError(error);
        return t;
    }
#else
    (void)parallel;
#endif
    return compatibility_table_serial(rs);
}

bool are_exchangeable(const RootSystem& rs, int a, int b) {
    return rs.compatibility(a, b) == 1 && rs.compatibility(b, a) == 1;
}

int sign_eps(const RootSystem& rs, int beta, int beta_prime) {
    int kp = k_epsilon(rs, +1, rs.apr(beta));
    int kp2 = k_epsilon(rs, +1, rs.apr(beta_prime));
    if (kp < kp2) return +1;
    int km = k_epsilon(rs, -1, rs.apr(beta));
    int km2 = k_epsilon(rs, -1, rs.apr(beta_prime));
    if (km < km2) return -1;
    throw DomainError("sign undefined: roots are compatible");
}

namespace {

int component_of_root(const RootSystem& rs, const RootVec& v) {
    for (int i = 0; i < rs.rank(); ++i)
        if (v[i] != 0) return rs.component_of(i);
    return -1;
}

} // namespace

RootVec subplus(const RootSystem& rs, int beta, int beta_prime) {
    const RootVec& b1 = rs.apr(beta);
    const RootVec& b2 = rs.apr(beta_prime);
    int comp = component_of_root(rs, b1);
    if (comp != component_of_root(rs, b2))
        throw DomainError("roots lie in different components");
    if (rs.components()[comp].size() == 1) return RootVec(rs.rank(), 0);
    int eps = sign_eps(rs, beta, beta_prime);
    int k = k_epsilon(rs, eps, b1) + 1;
    // Apply k alternating factors, add, then undo them in reverse order.
    std::vector<int> signs(k);
    int s = eps;
    RootVec x = b1, y = b2;
    for (int i = 0; i < k; ++i) {
        signs[i] = s;
        x = tau(rs, s, x);
        y = tau(rs, s, y);
        s = -s;
    }
    RootVec sum(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) sum[i] = x[i] + y[i];
    for (int i = k - 1; i >= 0; --i) sum = tau(rs, signs[i], sum);
    return sum;
}

std::vector<std::vector<int>> clusters(const RootSystem& rs) {
    int m = rs.apr_count();
    int n = rs.rank();
    std::vector<std::vector<char>> ok(m, std::vector<char>(m, 0));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            ok[a][b] = (a != b && rs.compatibility(a, b) == 0 && rs.compatibility(b, a) == 0);

    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // Compatible sets are the faces of a pure (n-1)-dimensional complex, so
    // a straight extension search collecting size-n sets finds all maximal
    // ones.
    auto extend = [&](auto&& self, int start) -> void {
        if (int(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < m; ++v) {
            bool good = true;
            for (int u : cur)
                if (!ok[u][v]) {
                    good = false;
                    break;
                }
            if (!good) continue;
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    extend(extend, 0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

/// Determinant by fraction-free elimination; inputs stay well within
/// long long for the ranks involved.
long long bareiss_det(std::vector<std::vector<long long>> m) {
    int n = int(m.size());
    long long prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Solve C x = g for integer x when the columns form a unimodular basis;
/// returns nullopt if the solution is not integral or C is singular.
std::optional<std::vector<long long>> solve_unimodular(const RootSystem& rs,
                                                       const std::vector<int>& cluster,
                                                       const RootVec& g) {
    int n = rs.rank();
    std::vector<std::vector<long long>> c(n, std::vector<long long>(n));
    for (int j = 0; j < n; ++j) {
        const RootVec& col = rs.apr(cluster[j]);
        for (int i = 0; i < n; ++i) c[i][j] = col[i];
    }
    long long det = bareiss_det(c);
    if (det == 0) return std::nullopt;
    std::vector<long long> x(n);
    for (int j = 0; j < n; ++j) {
        auto cj = c;
        for (int i = 0; i < n; ++i) cj[i][j] = g[i];
        long long dj = bareiss_det(cj);
        if (dj % det != 0) return std::nullopt;
        x[j] = dj / det;
    }
    return x;
}

} // namespace

std::map<int, long long> cluster_expansion(const RootSystem& rs, const RootVec& g,
                                           const std::vector<std::vector<int>>& cls) {
    for (auto& c : cls) {
        auto x = solve_unimodular(rs, c, g);
        if (!x) continue;
        bool nonneg = true;
        for (long long v : *x)
            if (v < 0) {
                nonneg = false;
                break;
            }
        if (!nonneg) continue;
        std::map<int, long long> out;
        for (int j = 0; j < rs.rank(); ++j)
            if ((*x)[j] != 0) out[c[j]] = (*x)[j];
        return out;
    }
    throw DomainError("no cluster expansion found for " + root_str(g));
}

std::map<int, long long> cluster_expansion(const RootSystem& rs, const RootVec& g) {
    return cluster_expansion(rs, g, clusters(rs));
}

std::map<int, long long> cluster_expansion_greedy(const RootSystem& rs, const RootVec& g) {
    std::map<int, long long> out;
    // Recursion: strip negative coordinates as negative-simple components,
    // otherwise walk the tau-orbit until a coordinate goes negative and pull
    // the components back (expansions are equivariant under tau).
    auto expand = [&](auto&& self, RootVec v, int depth) -> std::map<int, long long> {
        if (depth > 64) throw DomainError("greedy expansion recursion too deep");
        std::map<int, long long> res;
        bool zero = true;
        for (long long c : v) zero = zero && c == 0;
        if (zero) return res;
        if (!all_nonneg(v)) {
            RootVec rest = v;
            for (int i = 0; i < rs.rank(); ++i)
                if (v[i] < 0) {
                    res[i] = -v[i];  // apr index i is -a_{i+1}
                    rest[i] = 0;
                }
            for (auto& [r, m] : self(self, rest, depth + 1)) res[r] += m;
            return res;
        }
        int bound = 2 * rs.max_coxeter_number() + 6;
        std::vector<int> signs;
        RootVec cur = v;
        int s = +1;
        for (int k = 0; k < bound; ++k) {
            cur = tau(rs, s, cur);
            signs.push_back(s);
            s = -s;
            if (!all_nonneg(cur)) break;
        }
        if (all_nonneg(cur)) throw DomainError("greedy expansion found no negative coordinate");
        for (auto& [r, m] : self(self, cur, depth + 1)) {
            RootVec root = rs.apr(r);
            for (int i = int(signs.size()) - 1; i >= 0; --i) root = tau(rs, signs[i], root);
            res[rs.apr_index(root)] += m;
        }
        return res;
    };
    return expand(expand, g, 0);
}

std::pair<std::vector<int>, int> adjacent_cluster(const RootSystem& rs,
                                                  const std::vector<int>& cluster, int beta) {
    std::vector<int> wall;
    for (int r : cluster)
        if (r != beta) wall.push_back(r);
    if (wall.size() == cluster.size()) throw DomainError("beta is not a member of the cluster");
    int found = -1;
    for (int cand = 0; cand < rs.apr_count(); ++cand) {
        if (cand == beta) continue;
        if (std::find(wall.begin(), wall.end(), cand) != wall.end()) continue;
        bool compat = true;
        for (int r : wall)
            if (rs.compatibility(cand, r) != 0 || rs.compatibility(r, cand) != 0) {
                compat = false;
                break;
            }
        if (!compat) continue;
        if (found >= 0) throw DomainError("wall contained in more than two clusters");
        found = cand;
    }
    if (found < 0) throw DomainError("wall contained in a single cluster");
    wall.push_back(found);
    std::sort(wall.begin(), wall.end());
    return {wall, found};
}

ExchangeMatrix b_matrix_of_cluster(const RootSystem& rs, const std::vector<int>& cluster,
                                   const std::vector<std::vector<int>>& cls) {
    int n = rs.rank();
    std::vector<std::string> labels;
    for (int r : cluster) labels.push_back(root_str(rs.apr(r)));
    std::vector<Int> entries(size_t(n) * n, Int(0));
    ExchangeMatrix b(labels, entries);
    for (int col = 0; col < n; ++col) {
        int beta = cluster[col];
        auto [cprime, beta_prime] = adjacent_cluster(rs, cluster, beta);
        int eps = sign_eps(rs, beta, beta_prime);
        RootVec sum(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) sum[i] = rs.apr(beta)[i] + rs.apr(beta_prime)[i];
        auto plus = cluster_expansion(rs, sum, cls);
        auto minus = cluster_expansion(rs, subplus(rs, beta, beta_prime), cls);
        for (int row = 0; row < n; ++row) {
            long long cp = 0, cm = 0;
            if (auto it = plus.find(cluster[row]); it != plus.end()) cp = it->second;
            if (auto it = minus.find(cluster[row]); it != minus.end()) cm = it->second;
            b(row, col) = Int(eps * (cp - cm));
        }
    }
    return b;
}

ExchangeMatrix b_matrix_of_cluster(const RootSystem& rs, const std::vector<int>& cluster) {
    return b_matrix_of_cluster(rs, cluster, clusters(rs));
}

ExchangeMatrix initial_bipartite_matrix(const RootSystem& rs) {
    // Equals b_matrix_of_cluster at the all-negative cluster: the sign makes
    // column j carry -eps(j) a_ij, matching the expansion-based definition.
    int n = rs.rank();
    ExchangeMatrix b(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) b(i, j) = Int(-rs.sign(j) * rs.cartan(i, j));
    return b;
}

ComplexGraph complex_exchange_graph(const RootSystem& rs) {
    ComplexGraph g;
    g.clusters = clusters(rs);
    std::map<std::vector<int>, int> id;
    for (size_t i = 0; i < g.clusters.size(); ++i) id[g.clusters[i]] = int(i);
    for (size_t u = 0; u < g.clusters.size(); ++u)
        for (int beta : g.clusters[u]) {
            auto [other, beta_prime] = adjacent_cluster(rs, g.clusters[u], beta);
            int v = id.at(other);
            if (int(u) < v) g.edges.push_back({int(u), v, beta, beta_prime});
        }
    std::sort(g.edges.begin(), g.edges.end(), [](auto& a, auto& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    return g;
}

std::vector<GeodesicLoop> geodesic_loops(const RootSystem& rs) {
    auto cls = clusters(rs);
    std::map<std::vector<int>, GeodesicLoop> loops;
    for (auto& c : cls) {
        ExchangeMatrix b = b_matrix_of_cluster(rs, c, cls);
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = i + 1; j < c.size(); ++j) {
                std::vector<int> fixed;
                for (size_t q = 0; q < c.size(); ++q)
                    if (q != i && q != j) fixed.push_back(c[q]);
                if (loops.count(fixed)) continue;
                GeodesicLoop l;
                l.fixed = fixed;
                l.weight = to_ll(iabs(b(int(i), int(j)) * b(int(j), int(i))));
                for (auto& c2 : cls) {
                    if (std::includes(c2.begin(), c2.end(), fixed.begin(), fixed.end()))
                        ++l.length;
                }
                loops[fixed] = std::move(l);
            }
    }
    std::vector<GeodesicLoop> out;
    for (auto& [k, v] : loops) out.push_back(v);
    return out;
}

std::vector<RootVec> exceptional_roots(const RootSystem& rs) {
    std::vector<RootVec> out;
    for (auto& a : rs.positive_roots()) {
        bool has_partner = false;
        long long norm = rs.form(a, a);
        for (int j = 0; j < rs.rank() && !has_partner; ++j) {
            if (a[j] != 1) continue;
            RootVec e(rs.rank(), 0);
            e[j] = 1;
            if (rs.form(e, e) == norm) has_partner = true;
        }
        if (!has_partner) out.push_back(a);
    }
    return out;
}

} // namespace mutant
