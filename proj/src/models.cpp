#include "mutant/models.hpp"

#include <algorithm>
#include <sstream>

namespace mutant {

std::string ThetaOrbit::str() const {
    std::ostringstream os;
    os << "[" << a << "," << b << "]";
    if (kind == DiameterTilde) os << "~";
    return os.str();
}

PolygonModel::PolygonModel(char family, int n) : family_(family), n_(n) {
    switch (family) {
        case 'A': m_ = n + 3; half_ = 0; break;
        case 'B':
        case 'C': m_ = 2 * n + 2; half_ = n + 1; break;
        case 'D':
            if (n < 4) throw DomainError("type D model needs n >= 4");
            m_ = 2 * n;
            half_ = n;
            break;
        default: throw DomainError("polygon models exist for types A, B, C, D");
    }
    if (n < 1) throw DomainError("rank must be positive");

    auto adjacent = [&](int u, int v) {
        int d = std::abs(u - v);
        return d == 1 || d == m_ - 1;
    };

    // Enumerate orbits of diagonals.
    for (int a = 1; a <= m_; ++a)
        for (int b = a + 1; b <= m_; ++b) {
            if (adjacent(a, b)) continue;
            if (family_ == 'A') {
                orbits_.push_back({ThetaOrbit::Pair, a, b});
                continue;
            }
            if (b - a == half_) {
                if (a > half_) continue;  // one representative per diameter
                if (family_ == 'D') {
                    orbits_.push_back({ThetaOrbit::Diameter, a, b});
                    orbits_.push_back({ThetaOrbit::DiameterTilde, a, b});
                } else {
                    orbits_.push_back({ThetaOrbit::Diameter, a, b});
                }
                continue;
            }
            int ta = antipode(a), tb = antipode(b);
            if (ta > tb) std::swap(ta, tb);
            if (std::make_pair(a, b) <= std::make_pair(ta, tb))
                orbits_.push_back({ThetaOrbit::Pair, a, b});
        }
    std::sort(orbits_.begin(), orbits_.end());
    for (size_t i = 0; i < orbits_.size(); ++i) orbit_index_[orbits_[i]] = int(i);

    // Snake labeling of the negative simples.
    auto snake_pair = [&](int i) {  // 1-based i
        int lo = 1 + (i + 2) / 2;
        int hi = m_ + 1 - (i + 1) / 2;
        return std::make_pair(lo, hi);
    };
    int chain = (family_ == 'D') ? n_ - 2 : n_;
    for (int i = 1; i <= chain; ++i) {
        auto [lo, hi] = snake_pair(i);
        snake_.push_back(orbit_of(lo, hi));
    }
    if (family_ == 'B' || family_ == 'C') {
        // the last snake entry is the unique diameter on the snake
        if (orbits_[snake_.back()].kind != ThetaOrbit::Diameter)
            throw DomainError("snake construction broken: expected a diameter");
    }
    if (family_ == 'D') {
        auto [lo, hi] = snake_pair(n_ - 1);
        snake_.push_back(orbit_of(lo, hi, false));
        snake_.push_back(orbit_of(lo, hi, true));
    }

    // Compatibility-degree table.
    int cnt = int(orbits_.size());
    compat_.assign(size_t(cnt) * cnt, 0);
    for (int i = 0; i < cnt; ++i)
        for (int j = 0; j < cnt; ++j) compat_[size_t(i) * cnt + j] = raw_crossing_degree(i, j);

    // Roots from crossing counts against the snake.
    root_of_orbit_.resize(cnt);
    for (int i = 0; i < cnt; ++i) {
        RootVec v(n_, 0);
        auto it = std::find(snake_.begin(), snake_.end(), i);
        if (it != snake_.end()) {
            v[it - snake_.begin()] = -1;
        } else {
            for (int q = 0; q < n_; ++q) v[q] = crossing_degree(snake_[q], i);
        }
        root_of_orbit_[i] = v;
        if (!root_index_.emplace(v, i).second)
            throw DomainError("orbit-to-root map is not injective");
    }

    // Side generators, one per Theta-orbit of sides.
    for (int a = 1; a <= m_; ++a) {
        int b = (a % m_) + 1;
        int u = std::min(a, b), v = std::max(a, b);
        if (family_ != 'A') {
            int tu = antipode(u), tv = antipode(v);
            if (tu > tv) std::swap(tu, tv);
            if (std::make_pair(tu, tv) < std::make_pair(u, v)) continue;
        }
        side_index_[{u, v}] = int(sides_.gens.size());
        sides_.gens.push_back("p" + std::to_string(u) + "_" + std::to_string(v));
    }
}

int PolygonModel::antipode(int v) const {
    if (half_ == 0) throw DomainError("type A has no antipodal map");
    return ((v - 1 + half_) % m_) + 1;
}

int PolygonModel::orbit_index(const ThetaOrbit& o) const {
    auto it = orbit_index_.find(o);
    if (it == orbit_index_.end()) throw DomainError("no such orbit " + o.str());
    return it->second;
}

int PolygonModel::orbit_of(int u, int v, bool tilde) const {
    if (u == v) throw DomainError("degenerate diagonal");
    int a = std::min(u, v), b = std::max(u, v);
    ThetaOrbit o;
    if (family_ != 'A' && b - a == half_) {
        o.kind = tilde ? ThetaOrbit::DiameterTilde : ThetaOrbit::Diameter;
        o.a = a;
        o.b = b;
        return orbit_index(o);
    }
    if (tilde) throw DomainError("tilde applies to diameters only");
    o.kind = ThetaOrbit::Pair;
    if (family_ != 'A') {
        int ta = antipode(a), tb = antipode(b);
        if (ta > tb) std::swap(ta, tb);
        if (std::make_pair(ta, tb) < std::make_pair(a, b)) {
            a = ta;
            b = tb;
        }
    }
    o.a = a;
    o.b = b;
    return orbit_index(o);
}

namespace {

/// Strict crossing of chords (a,b) and (c,d): endpoints interleave.
bool chords_cross(int m, int a, int b, int c, int d) {
    if (a == c || a == d || b == c || b == d) return false;
    auto inside = [&](int lo, int hi, int x) {
        // x strictly inside the ccw arc lo -> hi
        int off_hi = (hi - lo + m) % m;
        int off_x = (x - lo + m) % m;
        return 0 < off_x && off_x < off_hi;
    };
    return inside(a, b, c) != inside(a, b, d);
}

} // namespace

int PolygonModel::raw_crossing_degree(int ia, int ib) const {
    const ThetaOrbit& A = orbits_[ia];
    const ThetaOrbit& B = orbits_[ib];
    auto diags = [&](const ThetaOrbit& o) {
        std::vector<std::pair<int, int>> v{{o.a, o.b}};
        if (o.kind == ThetaOrbit::Pair && family_ != 'A') {
            int ta = antipode(o.a), tb = antipode(o.b);
            if (std::minmax(ta, tb) != std::minmax(o.a, o.b))
                v.push_back({std::min(ta, tb), std::max(ta, tb)});
        }
        return v;
    };
    switch (family_) {
        case 'A':
            return chords_cross(m_, A.a, A.b, B.a, B.b) ? 1 : 0;
        case 'B': {
            int c = 0;
            for (auto& [u, v] : diags(B)) c += chords_cross(m_, A.a, A.b, u, v);
            return c;
        }
        case 'C': {
            int c = 0;
            for (auto& [u, v] : diags(A)) c += chords_cross(m_, u, v, B.a, B.b);
            return c;
        }
        case 'D': {
            bool adiam = A.kind != ThetaOrbit::Pair, bdiam = B.kind != ThetaOrbit::Pair;
            if (adiam && bdiam) {
                if (A.a == B.a && A.b == B.b) return 0;  // same location
                return A.kind == B.kind ? 0 : 1;         // colors cross once at the center
            }
            int c = 0;
            for (auto& [u1, v1] : diags(A))
                for (auto& [u2, v2] : diags(B)) c += chords_cross(m_, u1, v1, u2, v2);
            // Crossing points come in antipodal pairs away from the center.
            return c / 2;
        }
    }
    throw DomainError("unreachable");
}

int PolygonModel::crossing_degree(int orb_a, int orb_b) const {
    return compat_[size_t(orb_a) * orbits_.size() + orb_b];
}

int PolygonModel::orbit_of_root(const RootVec& v) const {
    auto it = root_index_.find(v);
    if (it == root_index_.end()) throw DomainError("no orbit represents " + root_str(v));
    return it->second;
}

std::vector<Triangulation> PolygonModel::triangulations() const {
    int cnt = int(orbits_.size());
    std::vector<Triangulation> out;
    std::vector<int> cur;
    auto compatible = [&](int a, int b) {
        return crossing_degree(a, b) == 0 && crossing_degree(b, a) == 0;
    };
    auto extend = [&](auto&& self, int start) -> void {
        if (int(cur.size()) == n_) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < cnt; ++v) {
            bool good = true;
            for (int u : cur)
                if (!compatible(u, v)) {
                    good = false;
                    break;
                }
            if (good) {
                cur.push_back(v);
                self(self, v + 1);
                cur.pop_back();
            }
        }
    };
    extend(extend, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Triangulation, int> PolygonModel::flip(const Triangulation& t, int orb) const {
    std::vector<int> wall;
    for (int d : t)
        if (d != orb) wall.push_back(d);
    if (wall.size() == t.size()) throw DomainError("orbit not in the triangulation");
    int found = -1;
    for (int cand = 0; cand < int(orbits_.size()); ++cand) {
        if (cand == orb) continue;
        if (std::find(wall.begin(), wall.end(), cand) != wall.end()) continue;
        bool good = true;
        for (int u : wall)
            if (crossing_degree(u, cand) != 0 || crossing_degree(cand, u) != 0) {
                good = false;
                break;
            }
        if (!good) continue;
        if (found >= 0) throw DomainError("flip is not unique");
        found = cand;
    }
    if (found < 0) throw DomainError("no flip exists");
    wall.push_back(found);
    std::sort(wall.begin(), wall.end());
    return {wall, found};
}

std::optional<int> PolygonModel::side_index(int u, int v) const {
    int a = std::min(u, v), b = std::max(u, v);
    int d = b - a;
    if (d != 1 && d != m_ - 1) return std::nullopt;
    auto it = side_index_.find({a, b});
    if (it != side_index_.end()) return it->second;
    if (family_ != 'A') {
        int ta = antipode(a), tb = antipode(b);
        if (ta > tb) std::swap(ta, tb);
        it = side_index_.find({ta, tb});
        if (it != side_index_.end()) return it->second;
    }
    return std::nullopt;
}

namespace {

/// Accumulates one side of a model relation: diagonal factors become orbit
/// exponents, side factors become semifield generator exponents.
struct TermBuilder {
    const PolygonModel& pm;
    std::map<int, long long> mono;
    TropElem coeff;

    explicit TermBuilder(const PolygonModel& p) : pm(p), coeff(p.side_semifield().size(), 0) {}

    void factor(int u, int v, long long e, bool tilde = false) {
        if (auto s = pm.side_index(u, v)) {
            if (tilde) throw DomainError("side cannot be a tilde diameter");
            coeff[*s] += int(e);
            return;
        }
        mono[pm.orbit_of(u, v, tilde)] += e;
    }
};

struct OrbitReps {
    std::vector<std::pair<int, int>> reps;  // both diagonals for pairs
};

OrbitReps reps_of(const PolygonModel& pm, const ThetaOrbit& o) {
    OrbitReps r;
    r.reps.push_back({o.a, o.b});
    if (o.kind == ThetaOrbit::Pair && pm.family() != 'A') {
        int ta = pm.antipode(o.a), tb = pm.antipode(o.b);
        if (std::minmax(ta, tb) != std::minmax(o.a, o.b))
            r.reps.push_back({std::min(ta, tb), std::max(ta, tb)});
    }
    return r;
}

bool ccw_from(const PolygonModel& pm, int a, const std::vector<int>& rest) {
    int m = pm.gon();
    int prev = 0;
    for (int v : rest) {
        int off = (v - a + m) % m;
        if (off <= prev) return false;
        prev = off;
    }
    return true;
}

} // namespace

ModelRelation model_exchange_relation(const PolygonModel& pm, int orb_a, int orb_b) {
    if (pm.crossing_degree(orb_a, orb_b) != 1 || pm.crossing_degree(orb_b, orb_a) != 1)
        throw DomainError("orbits are not exchangeable");
    const ThetaOrbit& A = pm.orbits()[orb_a];
    const ThetaOrbit& B = pm.orbits()[orb_b];
    char fam = pm.family();
    long long r = (fam == 'C') ? 2 : 1;

    TermBuilder t1(pm), t2(pm);
    bool built = false;

    bool a_diam = A.kind != ThetaOrbit::Pair;
    bool b_diam = B.kind != ThetaOrbit::Pair;

    if (a_diam && b_diam) {
        if (fam == 'B' || fam == 'C') {
            // x_aa x_bb = p+ x_ab^r + p- x_ab~^r
            for (int a : {A.a, A.b}) {
                for (int b : {B.a, B.b}) {
                    if (!ccw_from(pm, a, {b, pm.antipode(a)})) continue;
                    t1.factor(a, b, r);
                    t2.factor(a, pm.antipode(b), r);
                    built = true;
                    break;
                }
                if (built) break;
            }
        } else if (fam == 'D') {
            // x_aa x~_bb = p+ x_ab + p- x_ab~, colors must differ
            const ThetaOrbit& P = (A.kind == ThetaOrbit::Diameter) ? A : B;
            const ThetaOrbit& Q = (A.kind == ThetaOrbit::Diameter) ? B : A;
            if (P.kind == Q.kind) throw DomainError("same-color diameters are compatible");
            for (int a : {P.a, P.b}) {
                for (int b : {Q.a, Q.b}) {
                    if (!ccw_from(pm, a, {b, pm.antipode(a)})) continue;
                    t1.factor(a, b, 1);
                    t2.factor(a, pm.antipode(b), 1);
                    built = true;
                    break;
                }
                if (built) break;
            }
        }
    } else if (a_diam != b_diam) {
        if (fam != 'D') throw DomainError("diameter-pair exchange exists only in type D");
        // x_aa x_bc~ = p+ x_ab x_cc + p- x_ac~ x_bb  (diameters keep the color)
        const ThetaOrbit& P = a_diam ? A : B;
        const ThetaOrbit& Q = a_diam ? B : A;
        bool tilde = P.kind == ThetaOrbit::DiameterTilde;
        for (int a : {P.a, P.b}) {
            for (auto& [u, v] : reps_of(pm, Q).reps) {
                for (auto [b, cbar] : {std::pair{u, v}, std::pair{v, u}}) {
                    int c = pm.antipode(cbar);
                    if (!ccw_from(pm, a, {b, c, pm.antipode(a)})) continue;
                    t1.factor(a, b, 1);
                    t1.factor(c, pm.antipode(c), 1, tilde);
                    t2.factor(a, cbar, 1);
                    t2.factor(b, pm.antipode(b), 1, tilde);
                    built = true;
                    break;
                }
                if (built) break;
            }
            if (built) break;
        }
    } else {
        // Two pair orbits. Generic quadrilateral first; both role
        // assignments, since only x_ac may wrap past the antipode of a.
        for (auto [U, V] : {std::pair{&A, &B}, std::pair{&B, &A}}) {
            for (auto& [a0, c0] : reps_of(pm, *U).reps) {
                for (auto& [b0, d0] : reps_of(pm, *V).reps) {
                    for (auto [a, c] : {std::pair{a0, c0}, std::pair{c0, a0}}) {
                        for (auto [b, d] : {std::pair{b0, d0}, std::pair{d0, b0}}) {
                            std::vector<int> rest{b, c, d};
                            if (fam != 'A') rest.push_back(pm.antipode(a));
                            if (!ccw_from(pm, a, rest)) continue;
                            t1.factor(a, b, 1);
                            t1.factor(c, d, 1);
                            t2.factor(a, d, 1);
                            t2.factor(b, c, 1);
                            built = true;
                            break;
                        }
                        if (built) break;
                    }
                    if (built) break;
                }
                if (built) break;
            }
            if (built) break;
        }
        if (!built && fam != 'A') {
            // Shared-vertex form: x_ac x_ab~ = p+ x_ab x_ac~ + p- D x_bc,
            // where D = x_aa^{2/r} (B/C) or x_aa x~_aa (D).
            for (auto [U, V] : {std::pair{&A, &B}, std::pair{&B, &A}}) {
                for (auto& [u1, u2] : reps_of(pm, *U).reps) {
                    for (auto [a, c] : {std::pair{u1, u2}, std::pair{u2, u1}}) {
                        for (auto& [v1, v2] : reps_of(pm, *V).reps) {
                            int w = -1;
                            if (v1 == a) w = v2;
                            if (v2 == a) w = v1;
                            if (w < 0) continue;
                            int b = pm.antipode(w);
                            if (!ccw_from(pm, a, {b, c, pm.antipode(a)})) continue;
                            t1.factor(a, b, 1);
                            t1.factor(a, pm.antipode(c), 1);
                            if (fam == 'D') {
                                t2.factor(a, pm.antipode(a), 1, false);
                                t2.factor(a, pm.antipode(a), 1, true);
                            } else {
                                t2.factor(a, pm.antipode(a), 2 / r);
                            }
                            t2.factor(b, c, 1);
                            built = true;
                            break;
                        }
                        if (built) break;
                    }
                    if (built) break;
                }
                if (built) break;
            }
        }
    }
    if (!built) throw DomainError("no relation pattern matches the pair");

    ModelRelation rel;
    rel.z = orb_a;
    rel.zbar = orb_b;
    if (std::tie(t1.mono, t1.coeff) <= std::tie(t2.mono, t2.coeff)) {
        rel.m1 = std::move(t1.mono);
        rel.c1 = std::move(t1.coeff);
        rel.m2 = std::move(t2.mono);
        rel.c2 = std::move(t2.coeff);
    } else {
        rel.m1 = std::move(t2.mono);
        rel.c1 = std::move(t2.coeff);
        rel.m2 = std::move(t1.mono);
        rel.c2 = std::move(t1.coeff);
    }
    return rel;
}

CoefficientPair special_coefficients(const ModelRelation& rel) {
    CoefficientPair c{rel.c1, rel.c2};
    if (!c.is_normalized()) throw DomainError("special coefficients share a factor");
    return c;
}

ExchangeMatrix b_matrix_of_triangulation(const PolygonModel& pm, const Triangulation& t) {
    if (pm.family() != 'A') throw DomainError("triangulation matrix is defined for type A");
    int n = pm.n(), m = pm.gon();
    std::vector<std::string> labels;
    for (int d : t) labels.push_back(pm.orbits()[d].str());
    ExchangeMatrix bm(labels, std::vector<Int>(size_t(n) * n, Int(0)));

    auto has_edge = [&](int u, int v) {
        if (u == v) return false;
        int a = std::min(u, v), b = std::max(u, v);
        if (b - a == 1 || b - a == m - 1) return true;  // polygon side
        for (int d : t)
            if (pm.orbits()[d].a == a && pm.orbits()[d].b == b) return true;
        return false;
    };
    // In a triangulated convex polygon any 3-cycle bounds a face.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const ThetaOrbit& di = pm.orbits()[t[i]];
            const ThetaOrbit& dj = pm.orbits()[t[j]];
            int shared = -1, bi = -1, bj = -1;
            for (int u : {di.a, di.b})
                for (int v : {dj.a, dj.b})
                    if (u == v) shared = u;
            if (shared < 0) continue;
            bi = (di.a == shared) ? di.b : di.a;
            bj = (dj.a == shared) ? dj.b : dj.a;
            if (!has_edge(bi, bj)) continue;
            // counter-clockwise (shared, bi, bj) gives +1
            int oi = (bi - shared + m) % m, oj = (bj - shared + m) % m;
            bm(i, j) = (oi < oj) ? Int(1) : Int(-1);
        }
    return bm;
}

Seed model_initial_seed(const PolygonModel& pm, const RootSystem& rs) {
    if (pm.n() != rs.rank()) throw DomainError("model and root system rank differ");
    int n = pm.n();
    ExchangeMatrix b = initial_bipartite_matrix(rs);
    Triangulation snake_t = pm.snake();
    std::sort(snake_t.begin(), snake_t.end());

    std::vector<CoefficientPair> coeffs(n);
    for (int z = 0; z < n; ++z) {
        auto [t2, partner] = pm.flip(snake_t, pm.snake()[z]);
        ModelRelation rel = model_exchange_relation(pm, pm.snake()[z], partner);
        // The b_xz > 0 monomial carries p+; positions are snake orbits.
        std::map<int, long long> mono_plus;
        for (int x = 0; x < n; ++x) {
            const Int& e = b(x, z);
            if (e > 0) mono_plus[pm.snake()[x]] = to_ll(e);
        }
        if (rel.m1 == mono_plus)
            coeffs[z] = {rel.c1, rel.c2};
        else if (rel.m2 == mono_plus)
            coeffs[z] = {rel.c2, rel.c1};
        else
            throw DomainError("snake relation does not match the seed matrix");
    }
    return initial_seed(b, pm.side_semifield(), coeffs);
}

bool compatible_monomial_independence(int n, int deg) {
    RootSystem rs(CartanKillingType('A', n));
    EngineGraph g = build_exchange_graph(initial_seed(initial_bipartite_matrix(rs)));
    if (!g.closed) throw DomainError("type A run did not close");
    // variable for each almost positive root
    std::vector<Laurent> var_of(rs.apr_count(), Laurent::zero(n, 0));
    for (auto& v : g.variables) var_of[rs.apr_index(v.denominator_vector())] = v;

    // Enumerate compatible monomials of total degree <= deg.
    std::vector<Laurent> monos;
    std::vector<int> support;
    auto rec = [&](auto&& self, int start, int budget, Laurent acc) -> void {
        monos.push_back(acc);
        if (budget == 0) return;
        for (int v = start; v < rs.apr_count(); ++v) {
            bool good = true;
            for (int u : support)
                if (rs.compatibility(u, v) != 0 || rs.compatibility(v, u) != 0) {
                    good = false;
                    break;
                }
            if (!good) continue;
            support.push_back(v);
            Laurent cur = acc;
            for (int e = 1; e <= budget; ++e) {
                cur = cur * var_of[v];
                self(self, v + 1, budget - e, cur);
            }
            support.pop_back();
        }
    };
    rec(rec, 0, deg, Laurent::one(n, 0));

    // Rank of the coefficient matrix over the x-monomials.
    std::map<std::vector<int>, int> col;
    for (auto& l : monos)
        for (auto& t : l.poly().terms()) col.emplace(t.e, int(col.size()));
    std::vector<std::vector<Int>> mat(monos.size(), std::vector<Int>(col.size(), Int(0)));
    for (size_t i = 0; i < monos.size(); ++i)
        for (auto& t : monos[i].poly().terms()) mat[i][col[t.e]] = t.c;
    return exact_rank(std::move(mat)) == int(monos.size());
}

} // namespace mutant
