#include "mutant/identities.hpp"

#include <functional>
#include <sstream>

namespace mutant {

namespace {

/// Generic 2 x m matrix of indeterminates; in type D an extra variable t
/// substitutes column m as t * (column m-1).
struct Columns {
    int m = 0;
    int nvars = 0;
    bool last_is_t = false;  // column m is t * column (m-1)

    Poly z(int i, int a) const {  // i in {1,2}, a in 1..m
        if (last_is_t && a == m) {
            return Poly::variable(nvars, nvars - 1) * z(i, m - 1);
        }
        return Poly::variable(nvars, (i - 1) * (last_is_t ? m - 1 : m) + (a - 1));
    }
    Poly pluecker(int a, int b) const { return z(1, a) * z(2, b) - z(1, b) * z(2, a); }
};

std::string inst(std::initializer_list<int> idx) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (int i : idx) {
        if (!first) os << ",";
        os << i;
        first = false;
    }
    os << ")";
    return os.str();
}

void run_family(std::vector<IdentityReport>& out, const std::string& name,
                const std::function<void(std::vector<IdentityReport>&)>& body) {
    IdentityReport rep{name, true, ""};
    std::vector<IdentityReport> fails;
    body(fails);
    for (auto& f : fails)
        if (!f.ok) {
            rep.ok = false;
            rep.detail = f.detail;
            break;
        }
    out.push_back(rep);
}

void check(std::vector<IdentityReport>& fails, const Poly& lhs, const Poly& rhs,
           const std::string& witness) {
    if (lhs != rhs) fails.push_back({witness, false, "fails at " + witness});
}

std::vector<IdentityReport> verify_A(int n) {
    Columns col{n + 3, 2 * (n + 3), false};
    std::vector<IdentityReport> out;
    run_family(out, "grassmann-pluecker", [&](auto& fails) {
        for (int a = 1; a <= col.m; ++a)
            for (int b = a + 1; b <= col.m; ++b)
                for (int c = b + 1; c <= col.m; ++c)
                    for (int d = c + 1; d <= col.m; ++d)
                        check(fails,
                              col.pluecker(a, c) * col.pluecker(b, d),
                              col.pluecker(a, b) * col.pluecker(c, d) +
                                  col.pluecker(a, d) * col.pluecker(b, c),
                              inst({a, b, c, d}));
    });
    return out;
}

/// The six identities shared by the B (r=1) and C (r=2) realizations; the
/// two types differ in the number of columns and the barred coordinate.
std::vector<IdentityReport> verify_BC(char family, int n) {
    bool is_b = family == 'B';
    int r = is_b ? 1 : 2;
    int cols = is_b ? n + 2 : n + 1;
    Columns col{cols, 2 * cols, false};
    int top = n + 1;  // barred index range 1..n+1

    auto plain = [&](int a, int b) { return col.pluecker(a, b); };
    auto barred = [&](int a, int b) {  // D_{a b~}, a <= b
        if (is_b) {
            if (a == b) return col.pluecker(a, n + 2);
            return col.pluecker(a, n + 2) * col.pluecker(b, n + 2) - col.pluecker(a, b);
        }
        return col.z(1, a) * col.z(1, b) + col.z(2, a) * col.z(2, b);
    };
    auto diam = [&](int a) { return barred(a, a); };

    std::vector<IdentityReport> out;
    run_family(out, "quadrilateral", [&](auto& fails) {
        for (int a = 1; a <= top; ++a)
            for (int b = a + 1; b <= top; ++b)
                for (int c = b + 1; c <= top; ++c)
                    for (int d = c + 1; d <= top; ++d)
                        check(fails, plain(a, c) * plain(b, d),
                              plain(a, b) * plain(c, d) + plain(a, d) * plain(b, c),
                              inst({a, b, c, d}));
    });
    run_family(out, "one-barred", [&](auto& fails) {
        for (int a = 1; a <= top; ++a)
            for (int b = a + 1; b <= top; ++b)
                for (int c = b + 1; c <= top; ++c)
                    for (int d = c + 1; d <= top; ++d)
                        check(fails, barred(a, c) * plain(b, d),
                              barred(a, b) * plain(c, d) + barred(a, d) * plain(b, c),
                              inst({a, b, c, d}));
    });
    run_family(out, "two-barred", [&](auto& fails) {
        for (int a = 1; a <= top; ++a)
            for (int b = a + 1; b <= top; ++b)
                for (int c = b + 1; c <= top; ++c)
                    for (int d = c + 1; d <= top; ++d)
                        check(fails, barred(a, c) * barred(b, d),
                              plain(a, b) * plain(c, d) + barred(a, d) * barred(b, c),
                              inst({a, b, c, d}));
    });
    run_family(out, "shared-vertex", [&](auto& fails) {
        for (int a = 1; a <= top; ++a)
            for (int b = a + 1; b <= top; ++b)
                for (int c = b + 1; c <= top; ++c)
                    check(fails, plain(a, c) * barred(a, b),
                          plain(a, b) * barred(a, c) + diam(a).pow(2 / r) * plain(b, c),
                          inst({a, b, c}));
    });
    run_family(out, "shared-vertex-barred", [&](auto& fails) {
        for (int a = 1; a <= top; ++a)
            for (int b = a + 1; b <= top; ++b)
                for (int c = b + 1; c <= top; ++c)
                    check(fails, barred(a, b) * barred(b, c),
                          plain(a, b) * plain(b, c) + diam(b).pow(2 / r) * barred(a, c),
                          inst({a, b, c}));
    });
    run_family(out, "diameters", [&](auto& fails) {
        for (int a = 1; a <= top; ++a)
            for (int b = a + 1; b <= top; ++b)
                check(fails, diam(a) * diam(b), plain(a, b).pow(r) + barred(a, b).pow(r),
                      inst({a, b}));
    });
    return out;
}

std::vector<IdentityReport> verify_D(int n) {
    // Columns 1..n+1 generic, column n+2 = t * column n+1.
    Columns col{n + 2, 2 * (n + 1) + 1, true};
    auto plain = [&](int a, int b) { return col.pluecker(a, b); };
    auto diam = [&](int a) { return col.pluecker(a, n + 1); };
    auto diam_t = [&](int a) { return col.pluecker(a, n + 2); };
    auto barred = [&](int a, int b) {  // a < b <= n
        return col.pluecker(a, n + 1) * col.pluecker(b, n + 2) - col.pluecker(a, b);
    };

    std::vector<IdentityReport> out;
    run_family(out, "quotient-relation", [&](auto& fails) {
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                check(fails, diam(a) * diam_t(b), diam_t(a) * diam(b), inst({a, b}));
    });
    run_family(out, "quadrilateral", [&](auto& fails) {
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = b + 1; c <= n; ++c)
                    for (int d = c + 1; d <= n; ++d)
                        check(fails, plain(a, c) * plain(b, d),
                              plain(a, b) * plain(c, d) + plain(a, d) * plain(b, c),
                              inst({a, b, c, d}));
    });
    run_family(out, "one-barred", [&](auto& fails) {
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = b + 1; c <= n; ++c)
                    for (int d = c + 1; d <= n; ++d)
                        check(fails, barred(a, c) * plain(b, d),
                              barred(a, b) * plain(c, d) + barred(a, d) * plain(b, c),
                              inst({a, b, c, d}));
    });
    run_family(out, "two-barred", [&](auto& fails) {
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = b + 1; c <= n; ++c)
                    for (int d = c + 1; d <= n; ++d)
                        check(fails, barred(a, c) * barred(b, d),
                              plain(a, b) * plain(c, d) + barred(a, d) * barred(b, c),
                              inst({a, b, c, d}));
    });
    run_family(out, "shared-vertex", [&](auto& fails) {
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = b + 1; c <= n; ++c)
                    check(fails, plain(a, c) * barred(a, b),
                          plain(a, b) * barred(a, c) + diam(a) * diam_t(a) * plain(b, c),
                          inst({a, b, c}));
    });
    run_family(out, "shared-vertex-barred", [&](auto& fails) {
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = b + 1; c <= n; ++c)
                    check(fails, barred(a, b) * barred(b, c),
                          plain(a, b) * plain(b, c) + diam(b) * diam_t(b) * barred(a, c),
                          inst({a, b, c}));
    });
    run_family(out, "colored-diameters", [&](auto& fails) {
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                check(fails, diam(a) * diam_t(b), plain(a, b) + barred(a, b),
                      inst({a, b}));
                check(fails, diam_t(a) * diam(b), plain(a, b) + barred(a, b),
                      inst({a, b}));
            }
    });
    run_family(out, "diameter-pair", [&](auto& fails) {
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = b + 1; c <= n; ++c) {
                    check(fails, diam(a) * barred(b, c),
                          plain(a, b) * diam(c) + barred(a, c) * diam(b), inst({a, b, c}));
                    check(fails, diam_t(a) * barred(b, c),
                          plain(a, b) * diam_t(c) + barred(a, c) * diam_t(b),
                          inst({a, b, c}));
                }
    });
    return out;
}

} // namespace

std::vector<IdentityReport> verify_geometric_identities(char family, int n) {
    switch (family) {
        case 'A': return verify_A(n);
        case 'B':
        case 'C': return verify_BC(family, n);
        case 'D': return verify_D(n);
        default: throw DomainError("identities exist for classical types only");
    }
}

bool all_hold(const std::vector<IdentityReport>& reports) {
    for (auto& r : reports)
        if (!r.ok) return false;
    return true;
}

} // namespace mutant
