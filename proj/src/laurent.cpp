#include "mutant/laurent.hpp"

#include <algorithm>

namespace mutant {

TropElem trop_one(const TropSemifield& p) { return TropElem(p.size(), 0); }

TropElem trop_mul(const TropElem& a, const TropElem& b) {
    if (a.size() != b.size()) throw DomainError("semifield arity mismatch");
    TropElem r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

TropElem trop_div(const TropElem& a, const TropElem& b) {
    if (a.size() != b.size()) throw DomainError("semifield arity mismatch");
    TropElem r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

TropElem trop_pow(const TropElem& a, long long k) {
    TropElem r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = int(a[i] * k);
    return r;
}

TropElem trop_add(const TropElem& a, const TropElem& b) {
    if (a.size() != b.size()) throw DomainError("semifield arity mismatch");
    TropElem r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

std::string trop_str(const TropSemifield& p, const TropElem& a) {
    std::string s;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        s += p.gens[i];
        if (a[i] != 1) s += "^" + std::to_string(a[i]);
    }
    return s.empty() ? "1" : s;
}

bool CoefficientPair::is_normalized() const {
    if (plus.size() != minus.size()) return false;
    for (size_t i = 0; i < plus.size(); ++i)
        if (std::min(plus[i], minus[i]) != 0) return false;
    return true;
}

CoefficientPair normalize_ratio(const TropElem& u) {
    CoefficientPair c;
    c.plus.resize(u.size());
    c.minus.resize(u.size());
    for (size_t i = 0; i < u.size(); ++i) {
        c.plus[i] = std::max(u[i], 0);
        c.minus[i] = std::max(-u[i], 0);
    }
    return c;
}

Laurent Laurent::one(int nx, int np) {
    Laurent l(nx, np);
    l.poly_ = Poly::constant(nx + np, 1);
    return l;
}

Laurent Laurent::variable(int nx, int np, int i) {
    Laurent l(nx, np);
    l.poly_ = Poly::variable(nx + np, i);
    return l;
}

Laurent Laurent::coefficient(int nx, const TropElem& a, Int c) {
    Laurent l(nx, int(a.size()));
    std::vector<int> e(nx, 0);
    e.insert(e.end(), a.begin(), a.end());
    l.poly_ = Poly::monomial(std::move(e), std::move(c));
    return l;
}

Laurent Laurent::from_poly(int nx, int np, Poly p) {
    if (p.nvars() != nx + np) throw DomainError("laurent arity mismatch");
    Laurent l(nx, np);
    l.poly_ = std::move(p);
    return l;
}

namespace {

void check_shape(const Laurent& a, const Laurent& b) {
    if (a.nx() != b.nx() || a.np() != b.np())
        throw DomainError("laurent expressions over different rings");
}

} // namespace

Laurent Laurent::operator+(const Laurent& o) const {
    check_shape(*this, o);
    return from_poly(nx_, np_, poly_ + o.poly_);
}

Laurent Laurent::operator-(const Laurent& o) const {
    check_shape(*this, o);
    return from_poly(nx_, np_, poly_ - o.poly_);
}

Laurent Laurent::operator*(const Laurent& o) const {
    check_shape(*this, o);
    return from_poly(nx_, np_, poly_ * o.poly_);
}

Laurent Laurent::pow(long long k) const { return from_poly(nx_, np_, poly_.pow(k)); }

Laurent Laurent::divided_by(const Laurent& o) const {
    check_shape(*this, o);
    auto q = poly_.divided_by(o.poly_);
    if (!q) throw DomainError("exchange division is not exact");
    // Division in x may legally produce negative x exponents, but the
    // coefficients must stay in the group ring Z[P]; that is automatic since
    // P is a group (p exponents may be negative too). Nothing to check here.
    return from_poly(nx_, np_, std::move(*q));
}

std::vector<long long> Laurent::denominator_vector() const {
    if (is_zero()) throw DomainError("zero expression has no denominator vector");
    std::vector<int> m = poly_.min_exponents();
    std::vector<long long> a(nx_);
    for (int i = 0; i < nx_; ++i) a[i] = -m[i];
    // The numerator this * x^a must have a nonzero x-constant term.
    bool found = false;
    for (auto& t : poly_.terms()) {
        bool corner = true;
        for (int i = 0; i < nx_ && corner; ++i) corner = (t.e[i] == m[i]);
        if (corner) {
            found = true;
            break;
        }
    }
    if (!found) throw DomainError("no P(x)/x^a normal form: not a cluster variable");
    return a;
}

bool Laurent::is_positive() const {
    for (auto& t : poly_.terms()) {
        if (t.c < 0) return false;
        for (int i = nx_; i < nx_ + np_; ++i)
            if (t.e[i] < 0) return false;
    }
    return true;
}

namespace {

/// Display order: total x-degree, then lexicographically larger x part
/// first (so x1 precedes x2), then the p part the same way.
bool display_before(const Poly::Term& a, const Poly::Term& b, int nx) {
    long long da = 0, db = 0;
    for (int i = 0; i < nx; ++i) {
        da += a.e[i];
        db += b.e[i];
    }
    if (da != db) return da < db;
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

} // namespace

std::string Laurent::str(const TropSemifield& p) const {
    if (int(p.gens.size()) != np_) throw DomainError("semifield arity mismatch");
    if (is_zero()) return "0";
    std::vector<int> m = poly_.min_exponents();
    std::vector<int> den(nx_, 0);
    for (int i = 0; i < nx_; ++i) den[i] = std::max(-m[i], 0);

    auto var_name = [&](int i) {
        return i < nx_ ? "x" + std::to_string(i + 1) : p.gens[i - nx_];
    };
    auto monomial_str = [&](const std::vector<int>& e, bool shift_x) {
        std::string s;
        for (size_t i = 0; i < e.size(); ++i) {
            int v = e[i] + (shift_x && int(i) < nx_ ? den[i] : 0);
            if (v == 0) continue;
            s += var_name(int(i));
            if (v != 1) s += "^" + std::to_string(v);
        }
        return s;
    };

    std::vector<Poly::Term> ts = poly_.terms();
    std::sort(ts.begin(), ts.end(),
              [&](const Poly::Term& a, const Poly::Term& b) { return display_before(a, b, nx_); });
    std::string num;
    for (auto& t : ts) {
        std::string mono = monomial_str(t.e, true);
        Int c = t.c;
        if (!num.empty() && c > 0) num += "+";
        if (c == -1 && !mono.empty())
            num += "-";
        else if (c != 1 || mono.empty())
            num += c.str();
        num += mono;
    }
    int den_factors = 0;
    std::string den_str;
    for (int i = 0; i < nx_; ++i) {
        if (den[i] == 0) continue;
        ++den_factors;
        den_str += var_name(i);
        if (den[i] != 1) den_str += "^" + std::to_string(den[i]);
    }
    if (den_factors == 0) return num;
    if (ts.size() > 1) num = "(" + num + ")";
    if (den_factors > 1) den_str = "(" + den_str + ")";
    return num + "/" + den_str;
}

std::string Laurent::str() const {
    TropSemifield p;
    for (int i = 0; i < np_; ++i) p.gens.push_back("p" + std::to_string(i + 1));
    return str(p);
}

} // namespace mutant
