#pragma once

// Undirected graphs with a canonical low-to-high edge orientation, plus the
// structural subroutines shared by the rest of the library: BFS spanning
// trees, fundamental cycles, strongly connected components, topological
// sorting and simple-cycle enumeration.  Everything here is deterministic:
// neighbours are visited in ascending id order and ties break by vertex id.

#include <algorithm>
#include <cassert>
#include <functional>
#include <optional>
#include <queue>
#include <utility>
#include <variant>
#include <vector>

#include "circol/errors.hpp"

namespace circol {

// Canonically oriented edge: always u < v, the arc points u -> v.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(Edge a, Edge b) { return a.u == b.u && a.v == b.v; }
    friend bool operator!=(Edge a, Edge b) { return !(a == b); }
    friend bool operator<(Edge a, Edge b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

struct Graph {
    int n = 0;
    std::vector<Edge> edges;                 // sorted; defines canonical edge order
    std::vector<std::vector<int>> adj;       // sorted neighbour lists
    std::vector<std::vector<int>> adj_edge;  // adj_edge[u][i] = index of edge {u, adj[u][i]}

    Graph() = default;

    Graph(int n_, const std::vector<std::pair<int, int>>& es) : n(n_) {
        if (n < 0) throw std::invalid_argument("graph: negative vertex count");
        edges.reserve(es.size());
        for (auto [a, b] : es) {
            if (a == b) throw std::invalid_argument("graph: self-loop");
            if (a < 0 || b < 0 || a >= n || b >= n)
                throw std::invalid_argument("graph: endpoint out of range");
            if (a > b) std::swap(a, b);
            edges.push_back({a, b});
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("graph: parallel edge");
        build_adjacency();
    }

    int edge_count() const { return static_cast<int>(edges.size()); }

    // Index in canonical edge order, or -1.
    int edge_index(int a, int b) const {
        if (a > b) std::swap(a, b);
        Edge e{a, b};
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it == edges.end() || !(*it == e)) return -1;
        return static_cast<int>(it - edges.begin());
    }

    bool has_edge(int a, int b) const { return edge_index(a, b) >= 0; }

private:
    void build_adjacency() {
        adj.assign(n, {});
        adj_edge.assign(n, {});
        for (int i = 0; i < edge_count(); ++i) {
            adj[edges[i].u].push_back(edges[i].v);
            adj_edge[edges[i].u].push_back(i);
            adj[edges[i].v].push_back(edges[i].u);
            adj_edge[edges[i].v].push_back(i);
        }
        // Edges are sorted, so each list is already ascending for the lower
        // endpoint; the higher endpoint's list needs one sort pass.
        for (int v = 0; v < n; ++v) {
            std::vector<int> order(adj[v].size());
            for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
            std::sort(order.begin(), order.end(),
                      [&](int a, int b) { return adj[v][a] < adj[v][b]; });
            std::vector<int> na(adj[v].size());
            std::vector<int> ne(adj[v].size());
            for (size_t i = 0; i < order.size(); ++i) {
                na[i] = adj[v][order[i]];
                ne[i] = adj_edge[v][order[i]];
            }
            adj[v] = std::move(na);
            adj_edge[v] = std::move(ne);
        }
    }
};

// Simple cycle, stored as the vertex sequence v0,...,v_{l-1}; the closing
// edge {v_{l-1}, v0} is implicit.  Traversal direction is the listed order.
struct Cycle {
    std::vector<int> verts;

    int length() const { return static_cast<int>(verts.size()); }
    friend bool operator==(const Cycle& a, const Cycle& b) { return a.verts == b.verts; }
};

// Representative of the equivalence class under rotation and reversal:
// starts at the minimum vertex and proceeds toward its smaller cycle
// neighbour, which is the lexicographically least traversal.
inline Cycle canonical_cycle(const Cycle& c) {
    const auto& vs = c.verts;
    const int l = c.length();
    assert(l >= 3);
    int mi = 0;
    for (int i = 1; i < l; ++i)
        if (vs[i] < vs[mi]) mi = i;
    std::vector<int> fwd(l), bwd(l);
    for (int i = 0; i < l; ++i) {
        fwd[i] = vs[(mi + i) % l];
        bwd[i] = vs[(mi - i + l) % l];
    }
    return Cycle{fwd <= bwd ? fwd : bwd};
}

struct SpanningTree {
    int root = 0;
    std::vector<int> parent;       // -1 at root
    std::vector<int> parent_edge;  // edge index to parent; -1 at root
    std::vector<int> depth;
    std::vector<int> bfs_order;
};

// BFS tree exploring neighbours in ascending id order.
inline SpanningTree spanning_tree(const Graph& g, int root) {
    if (root < 0 || root >= g.n) throw std::invalid_argument("spanning_tree: root out of range");
    SpanningTree t;
    t.root = root;
    t.parent.assign(g.n, -2);
    t.parent_edge.assign(g.n, -1);
    t.depth.assign(g.n, 0);
    t.parent[root] = -1;
    t.bfs_order.push_back(root);
    for (size_t head = 0; head < t.bfs_order.size(); ++head) {
        int v = t.bfs_order[head];
        for (size_t i = 0; i < g.adj[v].size(); ++i) {
            int w = g.adj[v][i];
            if (t.parent[w] != -2) continue;
            t.parent[w] = v;
            t.parent_edge[w] = g.adj_edge[v][i];
            t.depth[w] = t.depth[v] + 1;
            t.bfs_order.push_back(w);
        }
    }
    if (static_cast<int>(t.bfs_order.size()) != g.n)
        throw disconnected_graph("spanning_tree: graph is not connected");
    return t;
}

// Tree path from a to b through their lowest common ancestor.
inline std::vector<int> tree_path(const SpanningTree& t, int a, int b) {
    std::vector<int> up, down;
    int x = a, y = b;
    while (t.depth[x] > t.depth[y]) { up.push_back(x); x = t.parent[x]; }
    while (t.depth[y] > t.depth[x]) { down.push_back(y); y = t.parent[y]; }
    while (x != y) {
        up.push_back(x); x = t.parent[x];
        down.push_back(y); y = t.parent[y];
    }
    up.push_back(x);
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
}

// The unique cycle in T+e, listed from the endpoint of e closer to the root
// (ties by smaller id) so that e is the final, implicit edge.
inline Cycle fundamental_cycle(const Graph& g, const SpanningTree& t, Edge e) {
    int ei = g.edge_index(e.u, e.v);
    if (ei < 0) throw std::invalid_argument("fundamental_cycle: not an edge");
    if (t.parent_edge[e.u] == ei || t.parent_edge[e.v] == ei)
        throw tree_edge_error("fundamental_cycle: edge belongs to the tree");
    int a = e.u, b = e.v;
    if (t.depth[b] < t.depth[a] || (t.depth[b] == t.depth[a] && b < a)) std::swap(a, b);
    return Cycle{tree_path(t, a, b)};
}

struct Digraph {
    int n = 0;
    std::vector<std::vector<int>> out;  // sorted
    std::vector<std::vector<int>> in;   // sorted

    Digraph() = default;
    explicit Digraph(int n_) : n(n_), out(n_), in(n_) {}

    Digraph(int n_, const std::vector<std::pair<int, int>>& arcs) : Digraph(n_) {
        for (auto [a, b] : arcs) add_arc(a, b);
        finalize();
    }

    void add_arc(int a, int b) {
        if (a == b) throw std::invalid_argument("digraph: self-loop arc");
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("digraph: endpoint out of range");
        out[a].push_back(b);
        in[b].push_back(a);
    }

    void finalize() {
        for (auto& l : out) { std::sort(l.begin(), l.end()); l.erase(std::unique(l.begin(), l.end()), l.end()); }
        for (auto& l : in)  { std::sort(l.begin(), l.end()); l.erase(std::unique(l.begin(), l.end()), l.end()); }
    }

    bool has_arc(int a, int b) const {
        return std::binary_search(out[a].begin(), out[a].end(), b);
    }

    long long arc_count() const {
        long long s = 0;
        for (const auto& l : out) s += static_cast<long long>(l.size());
        return s;
    }
};

struct SccPartition {
    std::vector<int> comp_of;                 // component id per vertex
    std::vector<std::vector<int>> components; // ordered by minimum vertex, members ascending

    bool nontrivial(int comp) const { return components[comp].size() >= 2; }
    bool vertex_in_nontrivial(int v) const { return nontrivial(comp_of[v]); }
};

// Iterative Tarjan; component ids are renumbered by minimum member for a
// reproducible partition.
inline SccPartition strongly_connected_components(const Digraph& d) {
    const int n = d.n;
    std::vector<int> index(n, -1), low(n, 0), stck;
    std::vector<char> on_stack(n, 0);
    std::vector<int> raw_comp(n, -1);
    int next_index = 0, raw_count = 0;

    struct Frame { int v; size_t i; };
    std::vector<Frame> frames;
    for (int s = 0; s < n; ++s) {
        if (index[s] != -1) continue;
        frames.push_back({s, 0});
        index[s] = low[s] = next_index++;
        stck.push_back(s);
        on_stack[s] = 1;
        while (!frames.empty()) {
            auto& f = frames.back();
            if (f.i < d.out[f.v].size()) {
                int w = d.out[f.v][f.i++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stck.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                if (low[v] == index[v]) {
                    while (true) {
                        int w = stck.back();
                        stck.pop_back();
                        on_stack[w] = 0;
                        raw_comp[w] = raw_count;
                        if (w == v) break;
                    }
                    ++raw_count;
                }
            }
        }
    }

    SccPartition part;
    std::vector<std::vector<int>> raw(raw_count);
    for (int v = 0; v < n; ++v) raw[raw_comp[v]].push_back(v);
    for (auto& c : raw) std::sort(c.begin(), c.end());
    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    part.components = std::move(raw);
    part.comp_of.assign(n, -1);
    for (int c = 0; c < static_cast<int>(part.components.size()); ++c)
        for (int v : part.components[c]) part.comp_of[v] = c;
    return part;
}

// Order with every arc pointing forward (ties by ascending id), or a witness
// directed cycle.  The cycle's consecutive pairs (cyclically) are arcs of d.
using TopoResult = std::variant<std::vector<int>, Cycle>;

inline TopoResult topological_sort(const Digraph& d) {
    const int n = d.n;
    std::vector<int> indeg(n, 0);
    for (int v = 0; v < n; ++v) indeg[v] = static_cast<int>(d.in[v].size());
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<int> order;
    order.reserve(n);
    std::vector<char> done(n, 0);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        done[v] = 1;
        for (int w : d.out[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(order.size()) == n) return order;

    // Remaining vertices all have an in-arc among themselves: walk backwards
    // from the least remaining vertex until a repeat closes a cycle.
    int start = 0;
    while (done[start]) ++start;
    std::vector<int> walk{start};
    std::vector<int> pos(n, -1);
    pos[start] = 0;
    while (true) {
        int v = walk.back();
        int prev = -1;
        for (int w : d.in[v])
            if (!done[w]) { prev = w; break; }
        assert(prev != -1);
        if (pos[prev] != -1) {
            // Arcs run walk[i+1] -> walk[i]; reverse the closed segment.
            std::vector<int> cyc(walk.begin() + pos[prev], walk.end());
            std::reverse(cyc.begin() + 1, cyc.end());
            return Cycle{cyc};
        }
        pos[prev] = static_cast<int>(walk.size());
        walk.push_back(prev);
    }
}

// Streaming simple-cycle enumeration.  Each cycle is reported exactly once,
// already in canonical form (minimum vertex first, smaller neighbour second),
// in lexicographic DFS order.  Return false from fn to stop early.
inline void for_each_cycle(const Graph& g, const std::function<bool(const Cycle&)>& fn,
                           int max_len = 0) {
    std::vector<int> path;
    std::vector<char> on_path(g.n, 0);
    bool stop = false;

    std::function<void(int, int)> dfs = [&](int s, int v) {
        if (stop) return;
        for (int w : g.adj[v]) {
            if (stop) return;
            if (w == s) {
                if (path.size() >= 3 && path[1] < path.back())
                    if (!fn(Cycle{path})) { stop = true; return; }
                continue;
            }
            if (w < s || on_path[w]) continue;
            if (max_len > 0 && static_cast<int>(path.size()) >= max_len) continue;
            path.push_back(w);
            on_path[w] = 1;
            dfs(s, w);
            on_path[w] = 0;
            path.pop_back();
        }
    };

    for (int s = 0; s < g.n && !stop; ++s) {
        path.assign(1, s);
        on_path.assign(g.n, 0);
        on_path[s] = 1;
        dfs(s, s);
    }
}

// Collecting variant; cap = 0 means unlimited, otherwise exceeding it throws.
inline std::vector<Cycle> enumerate_cycles(const Graph& g, int max_len = 0, long long cap = 0) {
    std::vector<Cycle> out;
    bool over = false;
    for_each_cycle(g, [&](const Cycle& c) {
        if (cap > 0 && static_cast<long long>(out.size()) >= cap) {
            over = true;
            return false;
        }
        out.push_back(c);
        return true;
    }, max_len);
    if (over) throw budget_exceeded("enumerate_cycles: cycle cap exceeded");
    return out;
}

inline bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<int> stack{0};
    std::vector<char> seen(g.n, 0);
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.adj[v])
            if (!seen[w]) { seen[w] = 1; ++cnt; stack.push_back(w); }
    }
    return cnt == g.n;
}

// Connected components, each a sorted vertex list, ordered by minimum vertex.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.adj[v])
                if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Subgraph induced by verts (must be sorted); vertex i of the result is
// verts[i].
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> local(g.n, -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) local[verts[i]] = i;
    std::vector<std::pair<int, int>> es;
    for (const Edge& e : g.edges)
        if (local[e.u] >= 0 && local[e.v] >= 0)
            es.emplace_back(local[e.u], local[e.v]);
    return Graph(static_cast<int>(verts.size()), es);
}

// Subdigraph induced by members (sorted); vertices keep their global ids via
// the returned mapping inside topo-style helpers below.
inline Digraph induced_subdigraph(const Digraph& d, const std::vector<int>& members,
                                  std::vector<int>* local_of = nullptr) {
    std::vector<int> local(d.n, -1);
    for (int i = 0; i < static_cast<int>(members.size()); ++i) local[members[i]] = i;
    Digraph sub(static_cast<int>(members.size()));
    for (int i = 0; i < static_cast<int>(members.size()); ++i)
        for (int w : d.out[members[i]])
            if (local[w] >= 0) sub.add_arc(i, local[w]);
    sub.finalize();
    if (local_of) *local_of = std::move(local);
    return sub;
}

}  // namespace circol
