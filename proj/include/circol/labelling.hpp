#pragma once

// Edge labellings induced by circular colourings, cycle and path weights,
// edge-cut relabelling, and the constructive cut-relabelling reconfiguration
// whose failure mode is a distinguishing fundamental cycle.

#include <algorithm>
#include <cassert>
#include <optional>
#include <vector>

#include "circol/circular.hpp"
#include "circol/graph.hpp"

namespace circol {

// Per-edge value in {0..p-1} on the canonical u->v orientation.  A valid
// labelling satisfies
//   P1: q <= label <= p-q on every edge,
//   P2: every cycle weight is a multiple of p.
struct EdgeLabelling {
    CircularParams params;
    std::vector<int> labels;  // indexed by canonical edge order

    friend bool operator==(const EdgeLabelling& a, const EdgeLabelling& b) {
        return a.params == b.params && a.labels == b.labels;
    }
};

struct not_applicable : std::invalid_argument {
    Edge edge;
    not_applicable(const std::string& what, Edge e) : std::invalid_argument(what), edge(e) {}
};

struct p2_violation : std::invalid_argument {
    Cycle cycle;
    p2_violation(const std::string& what, Cycle c)
        : std::invalid_argument(what), cycle(std::move(c)) {}
};

inline EdgeLabelling induced_labelling(const Graph& g, const CircularColouring& c) {
    if (verify_colouring(g, c))
        throw invalid_colouring("induced_labelling: not a valid (p,q)-colouring");
    EdgeLabelling lab;
    lab.params = c.params;
    lab.labels.resize(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i)
        lab.labels[i] = mod_p(c.colours[g.edges[i].v] - c.colours[g.edges[i].u], c.params.p);
    return lab;
}

inline bool satisfies_p1(const Graph& g, const EdgeLabelling& lab) {
    for (int i = 0; i < g.edge_count(); ++i)
        if (lab.labels[i] < lab.params.q || lab.labels[i] > lab.params.p - lab.params.q)
            return false;
    return true;
}

// Weight of a walk given by the vertex sequence, traversed first-to-last:
// label on forward arcs, p - label on backward arcs.  Not reduced modulo p.
inline long long path_weight(const Graph& g, const EdgeLabelling& lab,
                             const std::vector<int>& path) {
    long long w = 0;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        int a = path[i], b = path[i + 1];
        int ei = g.edge_index(a, b);
        if (ei < 0) throw not_a_path("path_weight: consecutive pair is not an edge");
        w += (a < b) ? lab.labels[ei] : lab.params.p - lab.labels[ei];
    }
    return w;
}

inline long long cycle_weight(const Graph& g, const EdgeLabelling& lab, const Cycle& cyc) {
    long long w = path_weight(g, lab, cyc.verts);
    int a = cyc.verts.back(), b = cyc.verts.front();
    int ei = g.edge_index(a, b);
    if (ei < 0) throw not_a_path("cycle_weight: closing pair is not an edge");
    w += (a < b) ? lab.labels[ei] : lab.params.p - lab.labels[ei];
    return w;
}

// Path weight from the root to every vertex along the tree.
inline std::vector<long long> tree_weights(const Graph& g, const SpanningTree& t,
                                           const EdgeLabelling& lab) {
    std::vector<long long> wt(g.n, 0);
    for (int v : t.bfs_order) {
        if (v == t.root) continue;
        int par = t.parent[v];
        int lbl = lab.labels[t.parent_edge[v]];
        wt[v] = wt[par] + ((par < v) ? lbl : lab.params.p - lbl);
    }
    return wt;
}

// Shift all labels across the cut of X by alpha: minus alpha on arcs leaving
// X, plus alpha on arcs entering X.
struct CutRelabelStep {
    std::vector<int> x;  // sorted, nonempty, proper
    int alpha = 1;
};

inline EdgeLabelling relabel_cut(const Graph& g, const EdgeLabelling& lab,
                                 const CutRelabelStep& step) {
    if (step.x.empty() || static_cast<int>(step.x.size()) >= g.n)
        throw std::invalid_argument("relabel_cut: X must be a nonempty proper subset");
    if (step.alpha < 1 || step.alpha > lab.params.p - 1)
        throw std::invalid_argument("relabel_cut: alpha out of range");
    std::vector<char> in_x(g.n, 0);
    for (int v : step.x) in_x[v] = 1;
    const int p = lab.params.p, q = lab.params.q, a = step.alpha;
    EdgeLabelling out = lab;
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges[i];
        if (in_x[e.u] == in_x[e.v]) continue;
        if (in_x[e.u]) {  // arc leaves X
            if (lab.labels[i] < q + a)
                throw not_applicable("relabel_cut: label below q+alpha on outgoing arc", e);
            out.labels[i] -= a;
        } else {  // arc enters X
            if (lab.labels[i] > p - q - a)
                throw not_applicable("relabel_cut: label above p-q-alpha on incoming arc", e);
            out.labels[i] += a;
        }
    }
    return out;
}

// Rebuild a colouring from a valid labelling: base colour at vertex 0, then
// tree weights modulo p.  Well defined independent of the tree by P2; a
// fundamental cycle breaking P2 is reported.
inline CircularColouring colouring_from_labelling(const Graph& g, const EdgeLabelling& lab,
                                                  int base) {
    if (!satisfies_p1(g, lab))
        throw std::invalid_argument("colouring_from_labelling: labelling violates P1");
    SpanningTree t = spanning_tree(g, 0);
    std::vector<long long> wt = tree_weights(g, t, lab);
    CircularColouring c;
    c.params = lab.params;
    c.colours.resize(g.n);
    for (int v = 0; v < g.n; ++v) c.colours[v] = mod_p(base + wt[v], lab.params.p);
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges[i];
        if (t.parent_edge[e.u] == i || t.parent_edge[e.v] == i) continue;
        if (mod_p(c.colours[e.v] - c.colours[e.u], lab.params.p) != lab.labels[i])
            throw p2_violation("colouring_from_labelling: fundamental cycle weight not 0 mod p",
                               canonical_cycle(fundamental_cycle(g, t, e)));
    }
    return c;
}

// Outcome of the cut-relabelling reconfiguration between two labellings:
// either a step sequence transforming src into dst exactly, or a fundamental
// cycle of the canonical spanning tree with different weights (reported on
// its canonical traversal).
struct RelabelSequenceResult {
    std::vector<CutRelabelStep> steps;
    std::optional<Cycle> distinguishing_cycle;
    long long src_weight = 0;
    long long dst_weight = 0;

    bool reconfigurable() const { return !distinguishing_cycle.has_value(); }
};

inline RelabelSequenceResult relabel_sequence(const Graph& g, const EdgeLabelling& src,
                                              const EdgeLabelling& dst) {
    if (src.params != dst.params)
        throw std::invalid_argument("relabel_sequence: parameter mismatch");
    RelabelSequenceResult res;
    SpanningTree t = spanning_tree(g, 0);
    std::vector<long long> wt_dst = tree_weights(g, t, dst);
    EdgeLabelling cur = src;

    int guard = g.edge_count() + 1;
    while (guard-- > 0) {
        if (cur.labels == dst.labels) return res;
        std::vector<long long> wt_cur = tree_weights(g, t, cur);
        bool any_pos = false;
        for (int v = 0; v < g.n; ++v) any_pos |= wt_cur[v] > wt_dst[v];
        std::vector<char> in_x(g.n, 0);
        for (int v = 0; v < g.n; ++v)
            in_x[v] = any_pos ? wt_cur[v] <= wt_dst[v] : wt_cur[v] < wt_dst[v];

        int alpha = cur.params.p;
        for (int i = 0; i < g.edge_count(); ++i) {
            const Edge& e = g.edges[i];
            if (in_x[e.u] == in_x[e.v]) continue;
            bool leaving = in_x[e.u];
            bool ok = leaving ? cur.labels[i] > dst.labels[i] : cur.labels[i] < dst.labels[i];
            if (!ok) {
                Cycle c = canonical_cycle(fundamental_cycle(g, t, e));
                res.distinguishing_cycle = c;
                res.src_weight = cycle_weight(g, src, c);
                res.dst_weight = cycle_weight(g, dst, c);
                return res;
            }
            alpha = std::min(alpha, std::abs(cur.labels[i] - dst.labels[i]));
        }

        CutRelabelStep step;
        for (int v = 0; v < g.n; ++v)
            if (in_x[v]) step.x.push_back(v);
        step.alpha = alpha;
        assert(!step.x.empty() && static_cast<int>(step.x.size()) < g.n);
        cur = relabel_cut(g, cur, step);
        res.steps.push_back(std::move(step));
    }
    throw std::logic_error("relabel_sequence: failed to converge within |E| steps");
}

}  // namespace circol
