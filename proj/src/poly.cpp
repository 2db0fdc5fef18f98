#include "mutant/poly.hpp"

#include <algorithm>
#include <map>

namespace mutant {

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.e < b.e; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().e == t.e)
            out.back().c += t.c;
        else
            out.push_back(t);
        if (!out.empty() && out.back().c == 0) out.pop_back();
    }
    // a cancellation can expose an earlier duplicate only if input had
    // unsorted dups; resort-free single pass is enough after sorting
    terms_ = std::move(out);
}

Poly Poly::from_terms(int nvars, std::vector<Term> terms) {
    Poly p(nvars);
    for (auto& t : terms)
        if (int(t.e.size()) != nvars) throw DomainError("term arity mismatch");
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

Poly Poly::constant(int nvars, Int c) {
    Poly p(nvars);
    if (c != 0) p.terms_.push_back({std::vector<int>(nvars, 0), std::move(c)});
    return p;
}

Poly Poly::monomial(std::vector<int> e, Int c) {
    Poly p(int(e.size()));
    if (c != 0) p.terms_.push_back({std::move(e), std::move(c)});
    return p;
}

Poly Poly::variable(int nvars, int i) {
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    return monomial(std::move(e), 1);
}

bool Poly::operator<(const Poly& o) const {
    if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
    auto cmp = [](const Term& a, const Term& b) {
        if (a.e != b.e) return a.e < b.e ? -1 : 1;
        if (a.c != b.c) return a.c < b.c ? -1 : 1;
        return 0;
    };
    size_t n = std::min(terms_.size(), o.terms_.size());
    for (size_t i = 0; i < n; ++i)
        if (int c = cmp(terms_[i], o.terms_[i]); c != 0) return c < 0;
    return terms_.size() < o.terms_.size();
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.c = -t.c;
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    if (nvars_ != o.nvars_) throw DomainError("polynomial arity mismatch");
    Poly p(nvars_);
    p.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].e < o.terms_[j].e)) {
            p.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].e < terms_[i].e) {
            p.terms_.push_back(o.terms_[j++]);
        } else {
            Int c = terms_[i].c + o.terms_[j].c;
            if (c != 0) p.terms_.push_back({terms_[i].e, std::move(c)});
            ++i;
            ++j;
        }
    }
    return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (nvars_ != o.nvars_) throw DomainError("polynomial arity mismatch");
    std::map<std::vector<int>, Int> acc;
    for (auto& a : terms_)
        for (auto& b : o.terms_) {
            std::vector<int> e(nvars_);
            for (int q = 0; q < nvars_; ++q) e[q] = a.e[q] + b.e[q];
            acc[std::move(e)] += a.c * b.c;
        }
    Poly p(nvars_);
    for (auto& [e, c] : acc)
        if (c != 0) p.terms_.push_back({e, c});
    return p;
}

Poly Poly::pow(long long k) const {
    if (k < 0) throw DomainError("negative power of a polynomial");
    Poly r = constant(nvars_, 1);
    Poly b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

std::vector<int> Poly::min_exponents() const {
    std::vector<int> m(nvars_, 0);
    if (terms_.empty()) return m;
    m = terms_[0].e;
    for (auto& t : terms_)
        for (int i = 0; i < nvars_; ++i) m[i] = std::min(m[i], t.e[i]);
    return m;
}

std::optional<Poly> Poly::divided_by(const Poly& d) const {
    if (nvars_ != d.nvars_) throw DomainError("polynomial arity mismatch");
    if (d.is_zero()) throw DomainError("division by zero polynomial");
    if (is_zero()) return Poly(nvars_);
    // Shift both into the polynomial range; quotients transport by the
    // difference of the shifts.
    std::vector<int> sn = min_exponents(), sd = d.min_exponents();
    auto shift = [this](const Poly& p, const std::vector<int>& s) {
        Poly q(p.nvars_);
        q.terms_ = p.terms_;
        for (auto& t : q.terms_)
            for (int i = 0; i < p.nvars_; ++i) t.e[i] -= s[i];
        return q;
    };
    Poly r = shift(*this, sn), v = shift(d, sd);
    Poly q(nvars_);
    const Term& lv = v.terms_.back();
    while (!r.is_zero()) {
        const Term& lr = r.terms_.back();
        std::vector<int> e(nvars_);
        for (int i = 0; i < nvars_; ++i) {
            e[i] = lr.e[i] - lv.e[i];
            if (e[i] < 0) return std::nullopt;
        }
        if (lr.c % lv.c != 0) return std::nullopt;
        Poly t = monomial(std::move(e), lr.c / lv.c);
        q = q + t;
        r = r - t * v;
    }
    // Undo the shifts: result * x^(sn - sd).
    std::vector<int> back(nvars_);
    for (int i = 0; i < nvars_; ++i) back[i] = sn[i] - sd[i];
    return q * monomial(std::move(back), 1);
}

int exact_rank(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Int g = gcd(iabs(m[i][c]), iabs(m[r][c]));
            Int fi = m[r][c] / g, fr = m[i][c] / g;
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * fi - m[r][j] * fr;
        }
        ++r;
    }
    return int(r);
}

} // namespace mutant
