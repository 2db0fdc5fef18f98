#include "mutant/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace mutant {

std::vector<std::string> ExchangeMatrix::default_labels(int n) {
    std::vector<std::string> v(n);
    for (int i = 0; i < n; ++i) v[i] = std::to_string(i + 1);
    return v;
}

ExchangeMatrix::ExchangeMatrix(std::vector<std::string> labels, std::vector<Int> entries)
    : n_(int(labels.size())), labels_(std::move(labels)), e_(std::move(entries)) {
    if (e_.size() != size_t(n_) * n_)
        throw DomainError("exchange matrix must be square");
    for (int i = 0; i < n_; ++i)
        if ((*this)(i, i) != 0) throw DomainError("exchange matrix must have zero diagonal");
}

ExchangeMatrix ExchangeMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    int n = int(rows.size());
    std::vector<Int> e;
    e.reserve(size_t(n) * n);
    for (auto& r : rows) {
        if (int(r.size()) != n) throw DomainError("exchange matrix must be square");
        for (long long x : r) e.emplace_back(x);
    }
    return ExchangeMatrix(default_labels(n), std::move(e));
}

ExchangeMatrix ExchangeMatrix::submatrix(const std::vector<int>& idx) const {
    ExchangeMatrix s(int(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i) {
        s.labels_[i] = labels_[idx[i]];
        for (size_t j = 0; j < idx.size(); ++j) s(int(i), int(j)) = (*this)(idx[i], idx[j]);
    }
    return s;
}

ExchangeMatrix mutate(const ExchangeMatrix& b, int k) {
    int n = b.size();
    if (k < 0 || k >= n) throw DomainError("mutation index out of range");
    ExchangeMatrix r = b;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k)
                r(i, j) = -b(i, j);
            else
                r(i, j) = b(i, j) + (iabs(b(i, k)) * b(k, j) + b(i, k) * iabs(b(k, j))) / 2;
        }
    return r;
}

SymmetrizedMatrix mutate(const SymmetrizedMatrix& s, int k) {
    int n = s.n;
    if (k < 0 || k >= n) throw DomainError("mutation index out of range");
    SymmetrizedMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k) {
                r(i, j) = -s(i, j);
            } else {
                // (|s_ik| s_kj + s_ik |s_kj|) / 2 is |s_ik| s_kj when the two
                // summands agree and 0 when they cancel.
                Surd t1 = abs(s(i, k)) * s(k, j);
                Surd t2 = s(i, k) * abs(s(k, j));
                Surd add = (t1 == t2) ? t1 : Surd();
                r(i, j) = s(i, j) + add;
            }
        }
    return r;
}

CartanMatrix cartan_counterpart(const ExchangeMatrix& b) {
    int n = b.size();
    CartanMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = (i == j) ? Int(2) : -iabs(b(i, j));
    return a;
}

bool is_sign_skew_symmetric(const ExchangeMatrix& b) {
    int n = b.size();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const Int& x = b(i, j);
            const Int& y = b(j, i);
            if (x == 0 && y == 0) continue;
            if (x * y >= 0) return false;
        }
    return true;
}

std::vector<std::vector<int>> support_components(const ExchangeMatrix& b) {
    int n = b.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[s] = int(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int u = 0; u < n; ++u)
                if (comp[u] < 0 && (b(v, u) != 0 || b(u, v) != 0)) {
                    comp[u] = comp[s];
                    stack.push_back(u);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

namespace {

struct Rat {
    Int num = 0, den = 1;  // den > 0
    void reduce() {
        Int g = gcd(iabs(num), den);
        if (g > 1) { num /= g; den /= g; }
    }
};

} // namespace

std::optional<std::vector<Int>> skew_symmetrizer(const ExchangeMatrix& b) {
    if (!is_sign_skew_symmetric(b)) return std::nullopt;
    int n = b.size();
    std::vector<Rat> d(n);
    for (auto& comp : support_components(b)) {
        // Spanning-tree propagation: d_j = d_i |b_ij| / |b_ji| along edges.
        std::vector<int> stack{comp[0]};
        std::vector<bool> seen(n, false);
        seen[comp[0]] = true;
        d[comp[0]] = Rat{1, 1};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j : comp) {
                if (seen[j] || b(i, j) == 0) continue;
                seen[j] = true;
                d[j].num = d[i].num * iabs(b(i, j));
                d[j].den = d[i].den * iabs(b(j, i));
                d[j].reduce();
                stack.push_back(j);
            }
        }
        // Scale the block to the smallest positive integers (gcd 1).
        Int l = 1;
        for (int i : comp) l = lcm(l, d[i].den);
        Int g = 0;
        for (int i : comp) {
            d[i].num *= l / d[i].den;
            d[i].den = 1;
            g = gcd(g, d[i].num);
        }
        if (g > 1)
            for (int i : comp) d[i].num /= g;
    }
    // Verify D B skew-symmetric; off-tree edges encode the cycle condition.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d[i].num * b(i, j) != -d[j].num * b(j, i)) return std::nullopt;
    std::vector<Int> out(n);
    for (int i = 0; i < n; ++i) out[i] = d[i].num;
    return out;
}

bool is_skew_symmetrizable(const ExchangeMatrix& b) {
    return skew_symmetrizer(b).has_value();
}

SymmetrizedMatrix symmetrized(const ExchangeMatrix& b) {
    if (!is_skew_symmetrizable(b)) throw DomainError("matrix is not skew-symmetrizable");
    int n = b.size();
    SymmetrizedMatrix s(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s(i, j) = Surd(sgn(b(i, j)), iabs(b(i, j) * b(j, i)));
    return s;
}

namespace {

bool relabel_search(const ExchangeMatrix& a, const ExchangeMatrix& b,
                    std::vector<int>& perm, std::vector<bool>& used, int pos) {
    int n = a.size();
    if (pos == n) return true;
    for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        bool ok = true;
        for (int q = 0; q <= pos && ok; ++q) {
            int u = (q == pos) ? v : perm[q];
            if (a(pos, q) != b(v, u) || a(q, pos) != b(u, v)) ok = false;
        }
        if (!ok) continue;
        perm[pos] = v;
        used[v] = true;
        if (relabel_search(a, b, perm, used, pos + 1)) return true;
        used[v] = false;
    }
    return false;
}

} // namespace

bool equal_up_to_relabeling(const ExchangeMatrix& a, const ExchangeMatrix& b) {
    if (a.size() != b.size()) return false;
    std::vector<int> perm(a.size());
    std::vector<bool> used(a.size(), false);
    return relabel_search(a, b, perm, used, 0);
}

} // namespace mutant
