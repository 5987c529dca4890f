#pragma once

// Counting simple cycles of length divisible by k, and the constructive
// colouring procedure that extends a proper k-colouring across one more edge
// by sink elimination in a permutation digraph.

#include <algorithm>
#include <cassert>
#include <numeric>
#include <optional>
#include <variant>
#include <vector>

#include "circol/errors.hpp"
#include "circol/graph.hpp"

namespace circol {

struct not_proper_on_g_minus_e : std::invalid_argument {
    explicit not_proper_on_g_minus_e(const std::string& what) : std::invalid_argument(what) {}
};

inline constexpr int kMaxPermutationK = 8;

inline long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Number of simple cycles (counted as subgraphs) whose length is 0 mod k.
// cap = 0 means unlimited; a positive cap bounds the total cycles visited.
inline long long count_cycles_mod_k(const Graph& g, int k, long long cap = 0,
                                    std::vector<Cycle>* listing = nullptr) {
    if (k < 2) throw std::invalid_argument("count_cycles_mod_k: k >= 2 required");
    long long count = 0, seen = 0;
    bool over = false;
    for_each_cycle(g, [&](const Cycle& c) {
        if (cap > 0 && ++seen > cap) {
            over = true;
            return false;
        }
        if (c.length() % k == 0) {
            ++count;
            if (listing) listing->push_back(c);
        }
        return true;
    });
    if (over) throw budget_exceeded("count_cycles_mod_k: cycle budget exceeded");
    return count;
}

// Arcs x -> y for edges xy with f(x) = pi(i), f(y) = pi(i+1 mod k); S_f is
// what u reaches.  Directed cycles in here always have length 0 mod k.
inline Digraph permutation_digraph(const Graph& g, const std::vector<int>& f,
                                   const std::vector<int>& pi) {
    const int k = static_cast<int>(pi.size());
    std::vector<int> succ(k);
    for (int i = 0; i < k; ++i) succ[pi[i]] = pi[(i + 1) % k];
    Digraph d(g.n);
    for (const Edge& e : g.edges) {
        if (succ[f[e.u]] == f[e.v]) d.add_arc(e.u, e.v);
        if (succ[f[e.v]] == f[e.u]) d.add_arc(e.v, e.u);
    }
    d.finalize();
    return d;
}

struct PermutationWitness {
    std::vector<int> pi;
    std::vector<int> cycle;  // directed cycle of F_{f,pi} reachable from u
};

struct NoAcyclicPermutation {
    std::vector<PermutationWitness> witnesses;  // one per permutation, lex order
};

using ExtendResult = std::variant<std::vector<int>, NoAcyclicPermutation>;

// Given a proper k-colouring f of g-e, produce one of g, or report that for
// every permutation fixing u's colour class the reachable part of the
// permutation digraph has a directed cycle.
inline ExtendResult extend_colouring(const Graph& g, Edge e, const std::vector<int>& f, int k) {
    if (k < 2 || k > kMaxPermutationK)
        throw std::invalid_argument("extend_colouring: k must be between 2 and 8");
    if (g.edge_index(e.u, e.v) < 0) throw std::invalid_argument("extend_colouring: e not an edge");
    if (static_cast<int>(f.size()) != g.n)
        throw not_proper_on_g_minus_e("extend_colouring: wrong domain");
    for (int c : f)
        if (c < 0 || c >= k) throw not_proper_on_g_minus_e("extend_colouring: colour out of range");
    int ei = g.edge_index(e.u, e.v);
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == ei) continue;
        if (f[g.edges[i].u] == f[g.edges[i].v])
            throw not_proper_on_g_minus_e("extend_colouring: not proper on g-e");
    }
    if (f[e.u] != f[e.v]) return f;

    const int u = e.u, v = e.v;
    // Rebase so the conflicting colour class is 0; permutations then fix 0.
    const int base = f[u];
    std::vector<int> fb(g.n);
    for (int x = 0; x < g.n; ++x) fb[x] = ((f[x] - base) % k + k) % k;

    NoAcyclicPermutation failure;
    std::vector<int> tail(k - 1);
    std::iota(tail.begin(), tail.end(), 1);
    do {
        std::vector<int> pi(1, 0);
        pi.insert(pi.end(), tail.begin(), tail.end());
        std::vector<int> cur = fb;
        // F on g - e: edge e itself contributes no arc because its endpoints
        // share colour 0 and no colour is its own successor.
        Digraph full = permutation_digraph(g, cur, pi);

        // S = vertices reachable from u.
        std::vector<char> in_s(g.n, 0);
        std::vector<int> members, stack{u};
        in_s[u] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : full.out[x])
                if (!in_s[y]) { in_s[y] = 1; stack.push_back(y); }
        }
        for (int x = 0; x < g.n; ++x)
            if (in_s[x]) members.push_back(x);

        std::vector<int> local;
        Digraph sub = induced_subdigraph(full, members, &local);
        TopoResult topo = topological_sort(sub);
        if (std::holds_alternative<Cycle>(topo)) {
            PermutationWitness w;
            w.pi = pi;
            for (int x : std::get<Cycle>(topo).verts) w.cycle.push_back(members[x]);
            failure.witnesses.push_back(std::move(w));
            continue;
        }

        // Sink elimination on F[S]: recolour the lowest-id sink to its
        // successor colour and delete it, until u or v moves.
        std::vector<int> inv(k);
        for (int i = 0; i < k; ++i) inv[pi[i]] = i;
        std::vector<int> outdeg(members.size(), 0);
        std::vector<std::vector<int>> in_local(members.size());
        for (size_t a = 0; a < members.size(); ++a)
            for (int b : sub.out[a]) {
                ++outdeg[a];
                in_local[b].push_back(static_cast<int>(a));
            }
        std::vector<char> alive(members.size(), 1);
        while (true) {
            int sink = -1;
            for (size_t a = 0; a < members.size(); ++a)
                if (alive[a] && outdeg[a] == 0) { sink = static_cast<int>(a); break; }
            assert(sink >= 0);
            int x = members[sink];
            cur[x] = pi[(inv[cur[x]] + 1) % k];
            if (x == u || x == v) break;
            alive[sink] = 0;
            for (int a : in_local[sink])
                if (alive[a]) --outdeg[a];
        }
        assert(cur[u] != cur[v]);
        std::vector<int> result(g.n);
        for (int x = 0; x < g.n; ++x) result[x] = (cur[x] + base) % k;
        return result;
    } while (std::next_permutation(tail.begin(), tail.end()));
    return failure;
}

struct SparseColourFailure {
    int edge_index = -1;          // canonical index of the edge being added
    Edge edge;
    long long cycles_mod_k = 0;   // 0 mod k cycles of the prefix graph without this edge
    NoAcyclicPermutation detail;
};

using SparseColourResult = std::variant<std::vector<int>, SparseColourFailure>;

// Edge-by-edge induction: colour the empty graph trivially, then extend
// across every edge in canonical order.  Succeeds whenever each prefix minus
// its new edge has fewer than (k-1)!/2 cycles of length 0 mod k; a failing
// step is reported with that prefix's cycle count.
inline SparseColourResult colour_sparse_cycles(const Graph& g, int k) {
    if (k < 3 || k > kMaxPermutationK)
        throw std::invalid_argument("colour_sparse_cycles: k must be between 3 and 8");
    std::vector<int> f(g.n, 0);
    std::vector<std::pair<int, int>> prefix;
    for (int i = 0; i < g.edge_count(); ++i) {
        prefix.emplace_back(g.edges[i].u, g.edges[i].v);
        Graph gi(g.n, prefix);
        ExtendResult ext = extend_colouring(gi, g.edges[i], f, k);
        if (std::holds_alternative<NoAcyclicPermutation>(ext)) {
            Graph gprev(g.n, {prefix.begin(), prefix.end() - 1});
            SparseColourFailure fail;
            fail.edge_index = i;
            fail.edge = g.edges[i];
            fail.cycles_mod_k = count_cycles_mod_k(gprev, k);
            fail.detail = std::get<NoAcyclicPermutation>(std::move(ext));
            return fail;
        }
        f = std::get<std::vector<int>>(std::move(ext));
    }
    return f;
}

// Brute-force k-colourability; test and acceptance support.
inline bool k_colourable(const Graph& g, int k) {
    std::vector<int> col(g.n, -1);
    std::vector<std::vector<int>> earlier(g.n);
    for (const Edge& e : g.edges) earlier[e.v].push_back(e.u);
    std::function<bool(int)> rec = [&](int v) {
        if (v == g.n) return true;
        // Symmetry break: vertex v needs at most min(v, k-1)+1 colour trials.
        int lim = std::min(k, v + 1);
        for (int c = 0; c < lim; ++c) {
            bool ok = true;
            for (int w : earlier[v])
                if (col[w] == c) { ok = false; break; }
            if (!ok) continue;
            col[v] = c;
            if (rec(v + 1)) return true;
        }
        col[v] = -1;
        return false;
    };
    return rec(0);
}

inline int chromatic_number(const Graph& g) {
    for (int k = 1; k <= g.n; ++k)
        if (k_colourable(g, k)) return k;
    return g.n == 0 ? 0 : g.n;
}

}  // namespace circol
