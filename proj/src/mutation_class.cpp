#include "mutant/diagram.hpp"
#include "mutant/dynkin.hpp"

#include <algorithm>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mutant {

MutationClassResult mutation_class_serial(const Diagram& g, const MutationClassOptions& opt) {
    MutationClassResult res;
    std::unordered_set<std::string> seen;
    std::vector<CanonicalDiagram> members;

    CanonicalDiagram c0 = canonical_form(g);
    if (g.max_weight() > opt.weight_cap) {
        res.closed = false;
        res.members = {c0};
        return res;
    }
    seen.insert(c0.bytes());
    members.push_back(c0);
    std::vector<Diagram> frontier{diagram_of_canonical(c0)};

    // Layer-complete semantics, shared with the parallel kernel: a weight
    // violation anywhere in the layer stops the search (closed = false); a
    // realizability error is thrown only when the layer has no violation.
    bool violated = false;
    while (!frontier.empty() && !violated) {
        std::vector<Diagram> next;
        std::vector<CanonicalDiagram> next_keys;
        std::string error;
        for (const Diagram& d : frontier) {
            for (int k = 0; k < d.size(); ++k) {
                Diagram m;
                try {
                    m = diagram_mutate(d, k);
                } catch (const DomainError& e) {
                    if (error.empty()) error = e.what();
                    break;  // abandon this frontier item
                }
                if (m.max_weight() > opt.weight_cap) {
                    violated = true;
                    continue;
                }
                CanonicalDiagram c = canonical_form(m);
                if (seen.insert(c.bytes()).second) {
                    next_keys.push_back(c);
                    next.push_back(diagram_of_canonical(c));
                }
            }
        }
        if (violated) break;
        if (!error.empty()) throw DomainError(error);
        members.insert(members.end(), next_keys.begin(), next_keys.end());
        if (members.size() > opt.size_cap) {
            violated = true;
            break;
        }
        frontier = std::move(next);
    }
    std::sort(members.begin(), members.end());
    res.closed = !violated;
    res.members = std::move(members);
    return res;
}

/// Layer-synchronous BFS with the frontier expanded in parallel. Layers are
/// merged serially, so the member set and the closed flag are independent of
/// the schedule.
MutationClassResult mutation_class(const Diagram& g, const MutationClassOptions& opt) {
#ifndef _OPENMP
    return mutation_class_serial(g, opt);
#else
    if (!opt.parallel) return mutation_class_serial(g, opt);

    MutationClassResult res;
    std::unordered_set<std::string> seen;
    std::vector<CanonicalDiagram> members;

    CanonicalDiagram c0 = canonical_form(g);
    if (g.max_weight() > opt.weight_cap) {
        res.closed = false;
        res.members = {c0};
        return res;
    }
    seen.insert(c0.bytes());
    members.push_back(c0);
    std::vector<Diagram> frontier{diagram_of_canonical(c0)};

    bool violated = false;
    while (!frontier.empty() && !violated) {
        size_t fn = frontier.size();
        std::vector<std::vector<CanonicalDiagram>> produced(fn);
        std::vector<std::string> errors(fn);
        bool layer_violated = false;

#pragma omp parallel for schedule(dynamic) reduction(|| : layer_violated)
        for (size_t idx = 0; idx < fn; ++idx) {
            const Diagram& d = frontier[idx];
            for (int k = 0; k < d.size(); ++k) {
                Diagram m;
                try {
                    m = diagram_mutate(d, k);
                } catch (const std::exception& e) {
                    errors[idx] = e.what();
                    break;  // abandon this frontier item, matching the serial kernel
                }
                if (m.max_weight() > opt.weight_cap) {
                    layer_violated = true;
                    continue;
                }
                produced[idx].push_back(canonical_form(m));
            }
        }
        if (layer_violated) {
            violated = true;
            break;
        }
        for (auto& e : errors)
            if (!e.empty()) throw DomainError(e);
        std::vector<Diagram> next;
        for (auto& batch : produced)
            for (auto& c : batch)
                if (seen.insert(c.bytes()).second) {
                    members.push_back(c);
                    next.push_back(diagram_of_canonical(c));
                }
        if (members.size() > opt.size_cap) {
            violated = true;
            break;
        }
        frontier = std::move(next);
    }
    std::sort(members.begin(), members.end());
    res.closed = !violated;
    res.members = std::move(members);
    return res;
#endif
}

bool is_2_finite(const Diagram& g) {
    MutationClassOptions opt;
    opt.weight_cap = 3;
    try {
        return mutation_class(g, opt).closed;
    } catch (const DomainError&) {
        // A mutation that is not realizable cannot occur in the class of a
        // 2-finite matrix, where every triangle weight product is a square.
        return false;
    }
}

namespace {

/// One BFS layer under caps. Returns false when the ball stops being
/// complete: an edge weight passes the cap, or a mutation is unrealizable.
bool expand_layer(std::vector<Diagram>& frontier, std::unordered_set<std::string>& seen,
                  std::vector<CanonicalDiagram>& members, long long weight_cap) {
    std::vector<Diagram> next;
    for (const Diagram& d : frontier)
        for (int k = 0; k < d.size(); ++k) {
            Diagram m;
            try {
                m = diagram_mutate(d, k);
            } catch (const DomainError&) {
                return false;
            }
            if (m.max_weight() > weight_cap) return false;
            CanonicalDiagram c = canonical_form(m);
            if (seen.insert(c.bytes()).second) {
                members.push_back(c);
                next.push_back(diagram_of_canonical(c));
            }
        }
    frontier = std::move(next);
    return true;
}

} // namespace

bool are_mutation_equivalent(const Diagram& a, const Diagram& b, long long weight_cap,
                             size_t size_cap) {
    if (a.size() != b.size()) return false;
    CanonicalDiagram ca = canonical_form(a), cb = canonical_form(b);
    if (ca == cb) return true;

    // Bidirectional capped search, layer by layer, until the balls
    // intersect, one side closes (a closed capped ball is the whole class),
    // or the caps run out.
    std::unordered_set<std::string> seen_a{ca.bytes()}, seen_b{cb.bytes()};
    std::vector<CanonicalDiagram> mem_a{ca}, mem_b{cb};
    std::vector<Diagram> fr_a{diagram_of_canonical(ca)}, fr_b{diagram_of_canonical(cb)};
    // A side whose start already exceeds the cap just never expands; the
    // other side can still settle the question by closing.
    bool grow_a = a.max_weight() <= weight_cap, grow_b = b.max_weight() <= weight_cap;

    auto intersects = [&]() {
        const auto& small = mem_a.size() <= mem_b.size() ? mem_a : mem_b;
        const auto& big_seen = mem_a.size() <= mem_b.size() ? seen_b : seen_a;
        for (const auto& c : small)
            if (big_seen.count(c.bytes())) return true;
        return false;
    };

    while (true) {
        if (intersects()) return true;
        // A side that closed without violating the cap enumerated its entire
        // class; no intersection then settles the question.
        if ((grow_a && fr_a.empty()) || (grow_b && fr_b.empty())) return false;
        bool a_open = grow_a && !fr_a.empty();
        bool b_open = grow_b && !fr_b.empty();
        if (!a_open && !b_open)
            throw DomainError("indeterminate: mutation classes exceed search caps");
        if (mem_a.size() + mem_b.size() > size_cap)
            throw DomainError("indeterminate: mutation classes exceed search caps");
        // Expand the smaller open side.
        bool pick_a = a_open && (!b_open || mem_a.size() <= mem_b.size());
        if (pick_a)
            grow_a = expand_layer(fr_a, seen_a, mem_a, weight_cap);
        else
            grow_b = expand_layer(fr_b, seen_b, mem_b, weight_cap);
    }
}

} // namespace mutant
