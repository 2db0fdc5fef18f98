#pragma once

#include "mutant/matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mutant {

/// Weighted directed graph Gamma(B): no loops, no multiple edges, positive
/// integer weights. Absent edge = weight 0. Stored as a signed adjacency
/// matrix: w(i,j) > 0 means an edge i -> j of that weight, and then
/// w(j,i) = -w(i,j).
class Diagram {
public:
    Diagram() = default;
    explicit Diagram(int n) : n_(n), w_(size_t(n) * n, 0) {}

    int size() const { return n_; }

    /// Signed weight: +w for i -> j, -w for j -> i, 0 if disconnected.
    long long signed_weight(int i, int j) const { return w_[size_t(i) * n_ + j]; }

    /// Weight of the edge between i and j regardless of direction.
    long long weight(int i, int j) const { return std::abs(w_[size_t(i) * n_ + j]); }

    bool has_edge(int tail, int head) const { return signed_weight(tail, head) > 0; }

    void set_edge(int tail, int head, long long w);
    void remove_edge(int i, int j);

    struct Edge {
        int tail, head;
        long long w;
        bool operator==(const Edge& o) const = default;
    };
    std::vector<Edge> edges() const;
    long long max_weight() const;

    Diagram subdiagram(const std::vector<int>& verts) const;
    std::vector<std::vector<int>> components() const;

    bool operator==(const Diagram& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    int n_ = 0;
    std::vector<long long> w_;
};

/// Canonical byte encoding of a diagram, minimized over all vertex
/// relabelings: two diagrams are isomorphic as weighted digraphs iff their
/// encodings compare equal.
struct CanonicalDiagram {
    int n = 0;
    std::vector<long long> code;  // n(n-1)/2 signed weights in placement order

    bool operator==(const CanonicalDiagram& o) const = default;
    auto operator<=>(const CanonicalDiagram& o) const = default;
    std::string bytes() const;
};

CanonicalDiagram canonical_form(const Diagram& g);

/// Rebuild a representative diagram from its canonical code.
Diagram diagram_of_canonical(const CanonicalDiagram& c);

/// Gamma(B): edge i -> j of weight |b_ij b_ji| iff b_ij > 0.
/// Throws DomainError unless B is sign-skew-symmetric.
Diagram diagram_of(const ExchangeMatrix& b);

/// Diagram mutation at vertex k, computed through the surd-matrix lift:
/// the diagram is lifted to its skew-symmetric surd representative, the
/// matrix mutation is applied there, and the result is projected back.
/// Throws DomainError when the diagram is not realizable along this
/// mutation (a triangle weight product fails to be a perfect square).
Diagram diagram_mutate(const Diagram& g, int k);

/// Surd lift used by diagram_mutate: s_ij = sqrt(w) for an edge i -> j.
SymmetrizedMatrix surd_lift(const Diagram& g);
Diagram diagram_of_surd(const SymmetrizedMatrix& s);

struct MutationClassResult {
    bool closed = false;
    /// Canonical members, sorted; deterministic regardless of schedule.
    std::vector<CanonicalDiagram> members;
};

struct MutationClassOptions {
    long long weight_cap = 3;
    size_t size_cap = size_t(1) << 62;
    bool parallel = true;
};

/// BFS over diagram mutations modulo isomorphism. Stops early with
/// closed = false as soon as an edge weight exceeds weight_cap or the
/// member count exceeds size_cap; otherwise returns the complete class.
MutationClassResult mutation_class(const Diagram& g, const MutationClassOptions& opt = {});

/// Straight-line serial reference for mutation_class; kept for testing the
/// parallel kernel against.
MutationClassResult mutation_class_serial(const Diagram& g, const MutationClassOptions& opt = {});

/// True iff every diagram mutation equivalent to g has all weights <= 3.
/// Terminates on every input: once weights stay bounded the class is finite.
bool is_2_finite(const Diagram& g);

/// Mutation equivalence modulo simultaneous relabeling. On 2-finite inputs
/// the classes are compared exactly; otherwise a bidirectional capped search
/// is run and DomainError("indeterminate") is thrown when both classes
/// exceed the caps without meeting.
bool are_mutation_equivalent(const Diagram& a, const Diagram& b,
                             long long weight_cap = 64, size_t size_cap = 1 << 20);

} // namespace mutant
