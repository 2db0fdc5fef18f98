#include "mutant/diagram.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

namespace mutant {

void Diagram::set_edge(int tail, int head, long long w) {
    if (tail == head) throw DomainError("diagram has no loops");
    if (w <= 0) throw DomainError("edge weight must be positive");
    w_[size_t(tail) * n_ + head] = w;
    w_[size_t(head) * n_ + tail] = -w;
}

void Diagram::remove_edge(int i, int j) {
    w_[size_t(i) * n_ + j] = 0;
    w_[size_t(j) * n_ + i] = 0;
}

std::vector<Diagram::Edge> Diagram::edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (signed_weight(i, j) > 0) out.push_back({i, j, signed_weight(i, j)});
    return out;
}

long long Diagram::max_weight() const {
    long long m = 0;
    for (long long v : w_) m = std::max(m, std::abs(v));
    return m;
}

Diagram Diagram::subdiagram(const std::vector<int>& verts) const {
    Diagram s(int(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = 0; j < verts.size(); ++j)
            s.w_[i * verts.size() + j] = signed_weight(verts[i], verts[j]);
    return s;
}

std::vector<std::vector<int>> Diagram::components() const {
    std::vector<int> comp(n_, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stk{s}, members;
        comp[s] = int(out.size());
        while (!stk.empty()) {
            int v = stk.back();
            stk.pop_back();
            members.push_back(v);
            for (int u = 0; u < n_; ++u)
                if (comp[u] < 0 && weight(v, u) != 0) {
                    comp[u] = comp[s];
                    stk.push_back(u);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::string CanonicalDiagram::bytes() const {
    std::string s;
    s.resize(sizeof(int) + code.size() * sizeof(long long));
    std::memcpy(s.data(), &n, sizeof(int));
    if (!code.empty())
        std::memcpy(s.data() + sizeof(int), code.data(), code.size() * sizeof(long long));
    return s;
}

Diagram diagram_of_canonical(const CanonicalDiagram& c) {
    Diagram g(c.n);
    size_t pos = 0;
    for (int k = 1; k < c.n; ++k)
        for (int i = 0; i < k; ++i) {
            long long w = c.code[pos++];
            if (w > 0)
                g.set_edge(k, i, w);
            else if (w < 0)
                g.set_edge(i, k, -w);
        }
    return g;
}

namespace {

/// Exact color refinement. Colors are dense ints whose order is determined
/// purely by signature values, so the final classes are isomorphism
/// invariants of the weighted digraph.
std::vector<int> refine_colors(const Diagram& g) {
    int n = g.size();
    std::vector<int> color(n, 0);
    int classes = 1;
    for (int round = 0; round <= n; ++round) {
        std::vector<std::pair<std::vector<long long>, int>> sigs(n);
        for (int v = 0; v < n; ++v) {
            std::vector<long long> sig;
            sig.push_back(color[v]);
            std::vector<std::pair<int, long long>> nb;
            for (int u = 0; u < n; ++u)
                if (u != v && g.signed_weight(v, u) != 0)
                    nb.emplace_back(color[u], g.signed_weight(v, u));
            std::sort(nb.begin(), nb.end());
            for (auto& [c, w] : nb) {
                sig.push_back(c);
                sig.push_back(w);
            }
            sigs[v] = {std::move(sig), v};
        }
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return sigs[a].first < sigs[b].first; });
        std::vector<int> next(n);
        int nc = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sigs[order[i]].first != sigs[order[i - 1]].first) ++nc;
            next[order[i]] = nc;
        }
        ++nc;
        if (nc == classes && next == color) break;
        color = std::move(next);
        classes = nc;
        if (classes == n) break;
    }
    return color;
}

struct CanonSearch {
    const Diagram& g;
    int n;
    std::vector<int> color;          // invariant class per vertex
    std::vector<int> pos_class;      // class required at each position
    std::vector<long long> best;     // best complete code so far
    bool have_best = false;
    uint64_t gen = 0;                // bumped on every best update
    std::vector<int> perm;           // perm[pos] = vertex
    std::vector<bool> used;
    std::vector<long long> cur;

    explicit CanonSearch(const Diagram& gg) : g(gg), n(gg.size()) {
        color = refine_colors(g);
        std::vector<int> verts(n);
        std::iota(verts.begin(), verts.end(), 0);
        std::stable_sort(verts.begin(), verts.end(),
                         [&](int a, int b) { return color[a] < color[b]; });
        pos_class.resize(n);
        for (int i = 0; i < n; ++i) pos_class[i] = color[verts[i]];
        perm.assign(n, -1);
        used.assign(n, false);
        cur.reserve(size_t(n) * (n - 1) / 2);
    }

    // Invariant on entry, whenever have_best is set: tight means cur equals
    // the best prefix of the same length; otherwise cur is strictly smaller.
    void dfs(int pos, bool tight) {
        if (pos == n) {
            if (!have_best || !tight) {
                best = cur;
                have_best = true;
                ++gen;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || color[v] != pos_class[pos]) continue;
            size_t mark = cur.size();
            bool t = tight, pruned = false;
            for (int q = 0; q < pos; ++q) {
                long long w = g.signed_weight(v, perm[q]);
                if (have_best && t) {
                    long long b = best[cur.size()];
                    if (w > b) { pruned = true; break; }
                    if (w < b) t = false;
                }
                cur.push_back(w);
            }
            if (!pruned) {
                uint64_t g0 = gen;
                perm[pos] = v;
                used[v] = true;
                dfs(pos + 1, t);
                used[v] = false;
                if (gen != g0) tight = true;  // new best extends this prefix
            }
            cur.resize(mark);
        }
    }
};

} // namespace

CanonicalDiagram canonical_form(const Diagram& g) {
    CanonicalDiagram c;
    c.n = g.size();
    if (c.n <= 1) return c;
    CanonSearch s(g);
    s.dfs(0, true);
    c.code = std::move(s.best);
    return c;
}

Diagram diagram_of(const ExchangeMatrix& b) {
    if (!is_sign_skew_symmetric(b)) throw DomainError("matrix is not sign-skew-symmetric");
    int n = b.size();
    Diagram g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (b(i, j) > 0) g.set_edge(i, j, to_ll(iabs(b(i, j) * b(j, i)), "edge weight"));
    return g;
}

SymmetrizedMatrix surd_lift(const Diagram& g) {
    int n = g.size();
    SymmetrizedMatrix s(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long w = g.signed_weight(i, j);
            if (w > 0) s(i, j) = Surd(1, Int(w));
            if (w < 0) s(i, j) = Surd(-1, Int(-w));
        }
    return s;
}

Diagram diagram_of_surd(const SymmetrizedMatrix& s) {
    Diagram g(s.n);
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j)
            if (s(i, j).sign > 0) g.set_edge(i, j, to_ll(s(i, j).rad, "edge weight"));
    return g;
}

Diagram diagram_mutate(const Diagram& g, int k) {
    if (k < 0 || k >= g.size()) throw DomainError("mutation vertex out of range");
    return diagram_of_surd(mutate(surd_lift(g), k));
}

} // namespace mutant
