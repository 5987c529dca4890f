#pragma once

// Brute-force ground truth: enumerate all (p,q)-colourings of a small graph,
// explore the configuration graph under single-vertex recolouring, answer
// reachability queries.  Exists to check the algorithm, not to compete with
// it; all published results are identical across thread counts.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "circol/circular.hpp"
#include "circol/errors.hpp"
#include "circol/graph.hpp"

namespace circol {

inline constexpr long long kDefaultStateBudget = 2'000'000;

// All valid colourings in lexicographic order of their colour vectors.
inline std::vector<std::vector<int>> enumerate_colourings(const Graph& g, CircularParams pr,
                                                          long long cap = kDefaultStateBudget) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(g.n, 0);
    // Backtracking over vertices 0..n-1; only edges to earlier vertices
    // constrain, so partial assignments prune exactly.
    std::vector<std::vector<int>> earlier(g.n);
    for (const Edge& e : g.edges) earlier[e.v].push_back(e.u);

    std::function<void(int)> rec = [&](int v) {
        if (v == g.n) {
            if (cap > 0 && static_cast<long long>(out.size()) >= cap)
                throw budget_exceeded("enumerate_colourings: state budget exceeded");
            out.push_back(cur);
            return;
        }
        for (int c = 0; c < pr.p; ++c) {
            bool ok = true;
            for (int w : earlier[v])
                if (!compatible(pr, c, cur[w])) { ok = false; break; }
            if (!ok) continue;
            cur[v] = c;
            rec(v + 1);
        }
    };
    rec(0);
    return out;
}

namespace detail {

struct StateHash {
    size_t operator()(const std::vector<uint8_t>& s) const {
        uint64_t h = 1469598103934665603ull;
        for (uint8_t b : s) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

inline std::vector<uint8_t> pack_state(const std::vector<int>& c) {
    std::vector<uint8_t> s(c.size());
    for (size_t i = 0; i < c.size(); ++i) s[i] = static_cast<uint8_t>(c[i]);
    return s;
}

// Valid single-vertex moves from `state`, in (vertex, colour) order.
template <typename Fn>
inline void for_each_move(const Graph& g, CircularParams pr, const std::vector<uint8_t>& state,
                          Fn&& fn) {
    for (int v = 0; v < g.n; ++v) {
        for (int c = 0; c < pr.p; ++c) {
            if (c == state[v]) continue;
            bool ok = true;
            for (int w : g.adj[v])
                if (!compatible(pr, c, state[w])) { ok = false; break; }
            if (ok) fn(v, c);
        }
    }
}

}  // namespace detail

struct OracleDecision {
    bool reachable = false;
    long long distance = -1;  // BFS distance when reachable
};

// BFS from `from` only; does not materialize unreachable states.  The visited
// set is bounded by `cap`.  Frontier expansion may run on several threads;
// the published decision and distance are independent of the thread count.
inline OracleDecision oracle_decide(const Graph& g, CircularParams pr,
                                    const CircularColouring& from, const CircularColouring& to,
                                    long long cap = kDefaultStateBudget, int threads = 1) {
    if (from.params != pr || to.params != pr)
        throw std::invalid_argument("oracle_decide: parameter mismatch");
    if (verify_colouring(g, from) || verify_colouring(g, to))
        throw invalid_colouring("oracle_decide: input colouring is invalid");
    if (threads < 1) threads = 1;

    std::vector<uint8_t> src = detail::pack_state(from.colours);
    std::vector<uint8_t> dst = detail::pack_state(to.colours);
    if (src == dst) return {true, 0};

    std::unordered_set<std::vector<uint8_t>, detail::StateHash> visited{src};
    std::vector<std::vector<uint8_t>> frontier{src};
    long long dist = 0;

    while (!frontier.empty()) {
        ++dist;
        std::vector<std::vector<std::vector<uint8_t>>> produced(
            std::max<size_t>(1, std::min<size_t>(threads, frontier.size())));
        auto expand = [&](size_t slot, size_t lo, size_t hi) {
            for (size_t i = lo; i < hi; ++i) {
                const auto& st = frontier[i];
                detail::for_each_move(g, pr, st, [&](int v, int c) {
                    std::vector<uint8_t> nxt = st;
                    nxt[v] = static_cast<uint8_t>(c);
                    produced[slot].push_back(std::move(nxt));
                });
            }
        };
        if (produced.size() == 1) {
            expand(0, 0, frontier.size());
        } else {
            std::vector<std::thread> pool;
            size_t chunk = (frontier.size() + produced.size() - 1) / produced.size();
            for (size_t s = 0; s < produced.size(); ++s) {
                size_t lo = std::min(frontier.size(), s * chunk);
                size_t hi = std::min(frontier.size(), lo + chunk);
                pool.emplace_back(expand, s, lo, hi);
            }
            for (auto& th : pool) th.join();
        }
        std::vector<std::vector<uint8_t>> next;
        for (auto& block : produced)
            for (auto& st : block) {
                if (!visited.insert(st).second) continue;
                if (st == dst) return {true, dist};
                if (static_cast<long long>(visited.size()) > cap)
                    throw budget_exceeded("oracle_decide: state budget exceeded");
                next.push_back(std::move(st));
            }
        frontier = std::move(next);
    }
    return {false, -1};
}

struct ComponentsSummary {
    long long components = 0;
    std::vector<long long> sizes;  // descending
    long long frozen = 0;

    std::string to_string() const {
        std::string s = "components=" + std::to_string(components) + " sizes=";
        for (size_t i = 0; i < sizes.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(sizes[i]);
        }
        s += " frozen=" + std::to_string(frozen);
        return s;
    }
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace detail

// Full enumeration followed by union-find over single-vertex moves.
// "Frozen" counts states with no valid move at all.
inline ComponentsSummary components_summary(const Graph& g, CircularParams pr,
                                            long long cap = kDefaultStateBudget, int threads = 1) {
    if (threads < 1) threads = 1;
    std::vector<std::vector<int>> states = enumerate_colourings(g, pr, cap);
    const long long ns = static_cast<long long>(states.size());

    // States are lexicographically sorted, so a move's destination index is a
    // binary search away.
    auto index_of = [&](const std::vector<int>& s) {
        auto it = std::lower_bound(states.begin(), states.end(), s);
        return static_cast<long long>(it - states.begin());
    };

    std::vector<std::vector<std::pair<long long, long long>>> unions(
        std::max<size_t>(1, std::min<long long>(threads, std::max<long long>(ns, 1))));
    std::vector<long long> degree(ns, 0);
    auto scan = [&](size_t slot, long long lo, long long hi) {
        for (long long i = lo; i < hi; ++i) {
            std::vector<int> probe = states[i];
            for (int v = 0; v < g.n; ++v) {
                int keep = probe[v];
                for (int c = 0; c < pr.p; ++c) {
                    if (c == keep) continue;
                    bool ok = true;
                    for (int w : g.adj[v])
                        if (!compatible(pr, c, probe[w])) { ok = false; break; }
                    if (!ok) continue;
                    probe[v] = c;
                    long long j = index_of(probe);
                    probe[v] = keep;
                    ++degree[i];
                    if (j > i) unions[slot].emplace_back(i, j);
                }
            }
        }
    };
    if (unions.size() == 1) {
        scan(0, 0, ns);
    } else {
        std::vector<std::thread> pool;
        long long chunk = (ns + static_cast<long long>(unions.size()) - 1) /
                          static_cast<long long>(unions.size());
        for (size_t s = 0; s < unions.size(); ++s) {
            long long lo = std::min(ns, static_cast<long long>(s) * chunk);
            long long hi = std::min(ns, lo + chunk);
            pool.emplace_back(scan, s, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    detail::UnionFind uf(static_cast<int>(ns));
    for (const auto& block : unions)
        for (auto [a, b] : block) uf.unite(static_cast<int>(a), static_cast<int>(b));

    ComponentsSummary out;
    std::vector<long long> size_of(ns, 0);
    for (long long i = 0; i < ns; ++i) {
        ++size_of[uf.find(static_cast<int>(i))];
        if (degree[i] == 0) ++out.frozen;
    }
    for (long long i = 0; i < ns; ++i)
        if (size_of[i] > 0) out.sizes.push_back(size_of[i]);
    std::sort(out.sizes.rbegin(), out.sizes.rend());
    out.components = static_cast<long long>(out.sizes.size());
    return out;
}

// Component id per state over the full enumeration; shared by the test
// harnesses that compare algorithm verdicts against exhaustive ground truth.
inline std::vector<int> configuration_components(const Graph& g, CircularParams pr,
                                                 const std::vector<std::vector<int>>& states) {
    detail::UnionFind uf(static_cast<int>(states.size()));
    auto index_of = [&](const std::vector<int>& s) {
        auto it = std::lower_bound(states.begin(), states.end(), s);
        return static_cast<int>(it - states.begin());
    };
    std::vector<int> probe;
    for (int i = 0; i < static_cast<int>(states.size()); ++i) {
        probe = states[i];
        for (int v = 0; v < g.n; ++v) {
            int keep = probe[v];
            for (int c = 0; c < pr.p; ++c) {
                if (c == keep) continue;
                bool ok = true;
                for (int w : g.adj[v])
                    if (!compatible(pr, c, probe[w])) { ok = false; break; }
                if (!ok) continue;
                probe[v] = c;
                int j = index_of(probe);
                if (j > i) uf.unite(i, j);
                probe[v] = keep;
            }
        }
    }
    std::vector<int> comp(states.size());
    for (int i = 0; i < static_cast<int>(states.size()); ++i) comp[i] = uf.find(i);
    return comp;
}

}  // namespace circol
