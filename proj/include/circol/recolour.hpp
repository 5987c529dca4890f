#pragma once

// The 2 <= p/q < 4 decision procedure: tight digraph, fixed vertices via
// strongly connected components, realization of cut recolourings as
// single-vertex steps, and the full algorithm returning either a stepwise
// valid reconfiguration sequence or one of three checkable obstructions.

#include <algorithm>
#include <cassert>
#include <optional>
#include <string>
#include <vector>

#include "circol/circular.hpp"
#include "circol/graph.hpp"
#include "circol/labelling.hpp"

namespace circol {

// Arcs along edges whose label is exactly q (canonical direction) or p-q
// (reversed).  When p = 2q both hold and every edge carries a 2-cycle.
inline Digraph tight_digraph(const Graph& g, const EdgeLabelling& lab) {
    Digraph d(g.n);
    const int p = lab.params.p, q = lab.params.q;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (lab.labels[i] == q) d.add_arc(g.edges[i].u, g.edges[i].v);
        if (lab.labels[i] == p - q) d.add_arc(g.edges[i].v, g.edges[i].u);
    }
    d.finalize();
    return d;
}

// Shortest directed cycle through v inside its (nontrivial) component,
// found by BFS in ascending neighbour order.
inline std::vector<int> directed_cycle_through(const Digraph& d, const SccPartition& scc, int v) {
    const int comp = scc.comp_of[v];
    std::vector<int> parent(d.n, -2);
    std::vector<int> queue{v};
    parent[v] = -1;
    for (size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (int w : d.out[x]) {
            if (scc.comp_of[w] != comp) continue;
            if (w == v) {
                std::vector<int> cyc;
                for (int y = x; y != -1; y = parent[y]) cyc.push_back(y);
                std::reverse(cyc.begin(), cyc.end());
                return cyc;  // v, ..., x; arc x -> v closes it
            }
            if (parent[w] == -2) {
                parent[w] = x;
                queue.push_back(w);
            }
        }
    }
    throw std::logic_error("directed_cycle_through: vertex not on a directed cycle");
}

struct FixedVertex {
    int vertex = 0;
    std::vector<int> witness_cycle;  // directed cycle of D_f through the vertex
};

// Vertices in nontrivial strongly connected components of D_f; their colours
// cannot change under any reconfiguration (requires p/q < 4).
inline std::vector<FixedVertex> scc_fixed_vertices(const Graph& g, const CircularColouring& c) {
    if (!c.params.below_four())
        throw param_out_of_range("scc_fixed_vertices: requires p/q < 4");
    EdgeLabelling lab = induced_labelling(g, c);
    Digraph d = tight_digraph(g, lab);
    SccPartition scc = strongly_connected_components(d);
    std::vector<FixedVertex> out;
    for (int v = 0; v < g.n; ++v)
        if (scc.vertex_in_nontrivial(v))
            out.push_back({v, directed_cycle_through(d, scc, v)});
    return out;
}

struct RecolourStep {
    int vertex = 0;
    int new_colour = 0;

    friend bool operator==(RecolourStep a, RecolourStep b) {
        return a.vertex == b.vertex && a.new_colour == b.new_colour;
    }
};

struct directed_cycle_in_x : std::invalid_argument {
    std::vector<int> cycle;
    directed_cycle_in_x(const std::string& what, std::vector<int> cyc)
        : std::invalid_argument(what), cycle(std::move(cyc)) {}
};

namespace detail {

// Per-unit-round recolouring order for shifting `members` by dir: sinks first
// when increasing, sources first when decreasing.  Fails with the witness
// directed cycle when the induced tight digraph is not acyclic.
inline bool shift_order(const Digraph& tight, const std::vector<int>& members, int dir,
                        std::vector<int>* order, std::vector<int>* cycle) {
    std::vector<int> local;
    Digraph sub = induced_subdigraph(tight, members, &local);
    TopoResult topo = topological_sort(sub);
    if (std::holds_alternative<Cycle>(topo)) {
        if (cycle) {
            cycle->clear();
            for (int x : std::get<Cycle>(topo).verts) cycle->push_back(members[x]);
        }
        return false;
    }
    const auto& ord = std::get<std::vector<int>>(topo);
    order->clear();
    order->reserve(ord.size());
    for (int x : ord) order->push_back(members[x]);
    if (dir > 0) std::reverse(order->begin(), order->end());
    return true;
}

inline void emit_rounds(const std::vector<int>& order, int dir, int rounds, int p,
                        std::vector<int>& colours, std::vector<RecolourStep>& steps) {
    for (int round = 0; round < rounds; ++round)
        for (int v : order) {
            colours[v] = mod_p(colours[v] + dir, p);
            steps.push_back({v, colours[v]});
        }
}

}  // namespace detail

// Shift the colours of X by dir*alpha through single-vertex steps, every
// prefix remaining a valid colouring.  X = V(G) is allowed (global rotation).
inline std::vector<RecolourStep> realize_cut_recolour(const Graph& g, const CircularColouring& c,
                                                      const std::vector<int>& x, int alpha,
                                                      int dir) {
    if (!c.params.below_four())
        throw param_out_of_range("realize_cut_recolour: requires p/q < 4");
    if (dir != 1 && dir != -1) throw std::invalid_argument("realize_cut_recolour: dir must be +-1");
    if (alpha < 1) throw std::invalid_argument("realize_cut_recolour: alpha must be positive");
    EdgeLabelling lab = induced_labelling(g, c);
    Digraph tight = tight_digraph(g, lab);
    std::vector<int> members = x;
    std::sort(members.begin(), members.end());
    std::vector<int> order, cyc;
    if (!detail::shift_order(tight, members, dir, &order, &cyc))
        throw directed_cycle_in_x("realize_cut_recolour: induced tight digraph has a directed cycle",
                                  cyc);
    std::vector<RecolourStep> steps;
    std::vector<int> colours = c.colours;
    detail::emit_rounds(order, dir, alpha, c.params.p, colours, steps);
    return steps;
}

struct Obstruction {
    enum class Kind { fixed_vertex, cycle_weight, fixed_path };
    Kind kind = Kind::fixed_vertex;

    // fixed_vertex
    int vertex = -1;
    std::vector<int> witness_cycle;  // directed cycle of D_f through vertex
    int f_colour = -1;
    int g_colour = -1;

    // cycle_weight / fixed_path
    Cycle cycle;             // canonical traversal
    std::vector<int> path;   // tree path between two fixed vertices
    long long f_weight = 0;
    long long g_weight = 0;
};

struct RecolourResult {
    std::vector<RecolourStep> steps;
    std::optional<Obstruction> obstruction;

    bool yes() const { return !obstruction.has_value(); }
};

// Figure-style decision procedure.  Requires a connected graph, 2 <= p/q < 4
// and two valid colourings on the same parameters.
inline RecolourResult recolour(const Graph& g, const CircularColouring& from,
                               const CircularColouring& to) {
    if (from.params != to.params)
        throw std::invalid_argument("recolour: colourings use different parameters");
    if (!from.params.below_four()) throw param_out_of_range("recolour: requires p/q < 4");
    if (!is_connected(g)) throw disconnected_graph("recolour: graph is not connected");
    if (verify_colouring(g, from) || verify_colouring(g, to))
        throw invalid_colouring("recolour: input colouring is invalid");

    const int p = from.params.p;
    RecolourResult res;
    EdgeLabelling lab_f0 = induced_labelling(g, from);
    EdgeLabelling lab_g = induced_labelling(g, to);

    // Step 1: fixed vertices must agree.
    {
        Digraph d0 = tight_digraph(g, lab_f0);
        SccPartition scc = strongly_connected_components(d0);
        for (int v = 0; v < g.n; ++v) {
            if (!scc.vertex_in_nontrivial(v)) continue;
            if (from.colours[v] == to.colours[v]) continue;
            Obstruction obs;
            obs.kind = Obstruction::Kind::fixed_vertex;
            obs.vertex = v;
            obs.witness_cycle = directed_cycle_through(d0, scc, v);
            obs.f_colour = from.colours[v];
            obs.g_colour = to.colours[v];
            res.obstruction = obs;
            return res;
        }
    }

    // Step 2: drive the tree path weights of the current labelling onto the
    // target's, one cut at a time.
    SpanningTree t = spanning_tree(g, 0);
    std::vector<long long> wt_g = tree_weights(g, t, lab_g);
    std::vector<int> cur = from.colours;

    // YES instances need at most 2|V| iterations; instances that will end in
    // a cycle certificate are additionally bounded by the edge-agreement
    // metric of the cocycle construction.
    int guard = g.edge_count() + 2 * g.n + 2;
    while (guard-- > 0) {
        CircularColouring cc(from.params, cur);
        EdgeLabelling lab_cur = induced_labelling(g, cc);
        std::vector<long long> wt_f = tree_weights(g, t, lab_cur);

        bool any_pos = false, any_diff = false;
        for (int v = 0; v < g.n; ++v) {
            any_pos |= wt_f[v] > wt_g[v];
            any_diff |= wt_f[v] != wt_g[v];
        }
        if (!any_diff) break;

        // Side whose colours increase by one per round.
        std::vector<char> in_s(g.n, 0);
        for (int v = 0; v < g.n; ++v)
            in_s[v] = any_pos ? wt_f[v] <= wt_g[v] : wt_f[v] < wt_g[v];

        int alpha = p;
        for (int i = 0; i < g.edge_count(); ++i) {
            const Edge& e = g.edges[i];
            if (in_s[e.u] == in_s[e.v]) continue;
            bool leaving = in_s[e.u];
            bool ok = leaving ? lab_cur.labels[i] > lab_g.labels[i]
                              : lab_cur.labels[i] < lab_g.labels[i];
            if (!ok) {
                // Cycle weights are invariant along the steps taken so far,
                // so report them under the original colourings.
                Obstruction obs;
                obs.kind = Obstruction::Kind::cycle_weight;
                obs.cycle = canonical_cycle(fundamental_cycle(g, t, e));
                obs.f_weight = cycle_weight(g, lab_f0, obs.cycle);
                obs.g_weight = cycle_weight(g, lab_g, obs.cycle);
                assert(obs.f_weight != obs.g_weight);
                res.obstruction = obs;
                return res;
            }
            alpha = std::min(alpha, std::abs(lab_cur.labels[i] - lab_g.labels[i]));
        }
        assert(alpha < p);

        Digraph tight = tight_digraph(g, lab_cur);
        std::vector<int> side, other;
        for (int v = 0; v < g.n; ++v) (in_s[v] ? side : other).push_back(v);

        std::vector<int> order, cyc_s, cyc_o;
        if (detail::shift_order(tight, side, +1, &order, &cyc_s)) {
            detail::emit_rounds(order, +1, alpha, p, cur, res.steps);
        } else if (detail::shift_order(tight, other, -1, &order, &cyc_o)) {
            detail::emit_rounds(order, -1, alpha, p, cur, res.steps);
        } else {
            // Both sides pin a directed cycle: the tree path between the two
            // fixed witnesses has different weights, and path weights between
            // fixed vertices are invariant along valid sequences.
            Obstruction obs;
            obs.kind = Obstruction::Kind::fixed_path;
            int x = *std::min_element(cyc_s.begin(), cyc_s.end());
            int y = *std::min_element(cyc_o.begin(), cyc_o.end());
            obs.path = tree_path(t, x, y);
            obs.f_weight = path_weight(g, lab_f0, obs.path);
            obs.g_weight = path_weight(g, lab_g, obs.path);
            assert(obs.f_weight != obs.g_weight);
            res.obstruction = obs;
            return res;
        }
    }
    if (guard < 0) throw std::logic_error("recolour: cut iteration failed to converge");

    // Step 3: labellings agree, so cur = to + k; rotate everything if k != 0.
    int k = mod_p(to.colours[0] - cur[0], p);
    if (k != 0) {
        CircularColouring cc(from.params, cur);
        EdgeLabelling lab_cur = induced_labelling(g, cc);
        Digraph tight = tight_digraph(g, lab_cur);
        std::vector<int> all(g.n);
        for (int v = 0; v < g.n; ++v) all[v] = v;
        int dir = 2 * k <= p ? +1 : -1;
        int rounds = dir > 0 ? k : p - k;
        std::vector<int> order, cyc;
        if (!detail::shift_order(tight, all, dir, &order, &cyc))
            throw std::logic_error("recolour: rotation blocked by a directed cycle");
        detail::emit_rounds(order, dir, rounds, p, cur, res.steps);
    }
    assert(cur == to.colours);
    return res;
}

struct SequenceCheck {
    bool ok = true;
    int bad_index = -1;
    std::string reason;
};

// Validates that each step changes exactly one vertex, every intermediate map
// is a valid colouring, and the final map equals `to`.
inline SequenceCheck check_sequence(const Graph& g, const CircularColouring& from,
                                    const CircularColouring& to,
                                    const std::vector<RecolourStep>& steps) {
    SequenceCheck bad;
    bad.ok = false;
    if (verify_colouring(g, from)) {
        bad.bad_index = -1;
        bad.reason = "initial colouring is invalid";
        return bad;
    }
    const int p = from.params.p;
    std::vector<int> cur = from.colours;
    for (int i = 0; i < static_cast<int>(steps.size()); ++i) {
        bad.bad_index = i;
        const RecolourStep& s = steps[i];
        if (s.vertex < 0 || s.vertex >= g.n) { bad.reason = "vertex out of range"; return bad; }
        if (s.new_colour < 0 || s.new_colour >= p) { bad.reason = "colour out of range"; return bad; }
        if (s.new_colour == cur[s.vertex]) {
            bad.reason = "step does not change exactly one vertex";
            return bad;
        }
        for (size_t j = 0; j < g.adj[s.vertex].size(); ++j)
            if (!compatible(from.params, s.new_colour, cur[g.adj[s.vertex][j]])) {
                bad.reason = "intermediate colouring is invalid";
                return bad;
            }
        cur[s.vertex] = s.new_colour;
    }
    if (from.params != to.params || cur != to.colours) {
        bad.bad_index = static_cast<int>(steps.size()) - 1;
        bad.reason = "final colouring differs from target";
        return bad;
    }
    return SequenceCheck{};
}

// Independent re-validation of a NO certificate against the original inputs.
inline bool validate_obstruction(const Graph& g, const CircularColouring& from,
                                 const CircularColouring& to, const Obstruction& obs) {
    EdgeLabelling lab_f = induced_labelling(g, from);
    EdgeLabelling lab_g = induced_labelling(g, to);
    Digraph d = tight_digraph(g, lab_f);

    auto is_directed_cycle = [&](const std::vector<int>& cyc) {
        if (cyc.size() < 2) return false;
        for (size_t i = 0; i < cyc.size(); ++i)
            if (!d.has_arc(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
        return true;
    };

    switch (obs.kind) {
        case Obstruction::Kind::fixed_vertex: {
            if (!is_directed_cycle(obs.witness_cycle)) return false;
            if (std::find(obs.witness_cycle.begin(), obs.witness_cycle.end(), obs.vertex) ==
                obs.witness_cycle.end())
                return false;
            return from.colours[obs.vertex] == obs.f_colour &&
                   to.colours[obs.vertex] == obs.g_colour && obs.f_colour != obs.g_colour;
        }
        case Obstruction::Kind::cycle_weight: {
            const auto& vs = obs.cycle.verts;
            if (vs.size() < 3) return false;
            std::vector<int> sorted = vs;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
            for (size_t i = 0; i < vs.size(); ++i)
                if (!g.has_edge(vs[i], vs[(i + 1) % vs.size()])) return false;
            return cycle_weight(g, lab_f, obs.cycle) == obs.f_weight &&
                   cycle_weight(g, lab_g, obs.cycle) == obs.g_weight &&
                   obs.f_weight != obs.g_weight;
        }
        case Obstruction::Kind::fixed_path: {
            if (obs.path.size() < 2) return false;
            std::vector<int> sorted = obs.path;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
            for (size_t i = 0; i + 1 < obs.path.size(); ++i)
                if (!g.has_edge(obs.path[i], obs.path[i + 1])) return false;
            SccPartition scc = strongly_connected_components(d);
            if (!scc.vertex_in_nontrivial(obs.path.front()) ||
                !scc.vertex_in_nontrivial(obs.path.back()))
                return false;
            return path_weight(g, lab_f, obs.path) == obs.f_weight &&
                   path_weight(g, lab_g, obs.path) == obs.g_weight &&
                   obs.f_weight != obs.g_weight;
        }
    }
    return false;
}

}  // namespace circol
