#pragma once

// Circular clique arithmetic: (p,q) parameters, colour compatibility, cyclic
// intervals, colouring validation and the clique graph G_{p,q} itself.

#include <cstdlib>
#include <optional>
#include <vector>

#include "circol/errors.hpp"
#include "circol/graph.hpp"

namespace circol {

struct CircularParams {
    int p = 2;
    int q = 1;

    CircularParams() = default;
    CircularParams(int p_, int q_) : p(p_), q(q_) {
        if (q < 1 || p < 1) throw param_out_of_range("circular params: p,q must be positive");
        if (p < 2 * q) throw param_out_of_range("circular params: p/q >= 2 required");
    }

    int k() const { return p / q; }       // floor(p/q)
    int r() const { return p - k() * q; }
    bool below_four() const { return p < 4 * q; }

    friend bool operator==(CircularParams a, CircularParams b) { return a.p == b.p && a.q == b.q; }
    friend bool operator!=(CircularParams a, CircularParams b) { return !(a == b); }
};

inline int mod_p(long long x, int p) {
    long long m = x % p;
    return static_cast<int>(m < 0 ? m + p : m);
}

// Colours i and j may appear on adjacent vertices: q <= |i-j| <= p-q, taken
// on the plain integer representatives.
inline bool compatible(CircularParams pr, int i, int j) {
    int d = std::abs(i - j);
    return pr.q <= d && d <= pr.p - pr.q;
}

// G_{p,q}: vertex set {0..p-1}, edges between compatible colours.
inline Graph circular_clique(CircularParams pr) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < pr.p; ++i)
        for (int j = i + 1; j < pr.p; ++j)
            if (compatible(pr, i, j)) es.emplace_back(i, j);
    return Graph(pr.p, es);
}

struct CircularColouring {
    CircularParams params;
    std::vector<int> colours;

    CircularColouring() = default;
    CircularColouring(CircularParams pr, std::vector<int> cs)
        : params(pr), colours(std::move(cs)) {}

    friend bool operator==(const CircularColouring& a, const CircularColouring& b) {
        return a.params == b.params && a.colours == b.colours;
    }
};

struct ViolatingEdge {
    int u = 0;
    int v = 0;
};

// nullopt when every edge satisfies the (p,q) condition; otherwise the first
// violating edge in canonical edge order.
inline std::optional<ViolatingEdge> verify_colouring(const Graph& g, const CircularColouring& c) {
    if (static_cast<int>(c.colours.size()) != g.n)
        throw domain_mismatch("verify_colouring: colouring domain differs from V(G)");
    for (int x : c.colours)
        if (x < 0 || x >= c.params.p)
            throw colour_out_of_range("verify_colouring: colour outside {0..p-1}");
    for (const Edge& e : g.edges)
        if (!compatible(c.params, c.colours[e.u], c.colours[e.v]))
            return ViolatingEdge{e.u, e.v};
    return std::nullopt;
}

// The set {a, a+1, ..., b} with wrap-around modulo p; always nonempty.
struct CyclicInterval {
    int a = 0;
    int b = 0;

    friend bool operator==(CyclicInterval x, CyclicInterval y) { return x.a == y.a && x.b == y.b; }
};

inline int interval_size(CyclicInterval iv, int p) {
    return mod_p(iv.b - iv.a, p) + 1;
}

inline bool interval_contains(CyclicInterval iv, int p, int x) {
    return mod_p(x - iv.a, p) <= mod_p(iv.b - iv.a, p);
}

inline std::vector<int> interval_members(CyclicInterval iv, int p) {
    std::vector<int> out;
    int len = interval_size(iv, p);
    out.reserve(len);
    for (int i = 0; i < len; ++i) out.push_back(mod_p(iv.a + i, p));
    return out;
}

struct NeighbourSet {
    std::vector<int> members;                  // ascending
    std::optional<CyclicInterval> interval;    // set when the members form one cyclic run
};

// Exact common neighbourhood of colours i and j in G_{p,q}.  For
// 2 <= p/q < 4 this is always a cyclic interval; outside that range the
// explicit member list is authoritative and interval may be absent.
inline NeighbourSet common_neighbours(CircularParams pr, int i, int j) {
    NeighbourSet ns;
    for (int x = 0; x < pr.p; ++x)
        if (compatible(pr, x, i) && compatible(pr, x, j)) ns.members.push_back(x);
    if (ns.members.empty()) return ns;
    if (static_cast<int>(ns.members.size()) == pr.p) {
        ns.interval = CyclicInterval{0, pr.p - 1};
        return ns;
    }
    std::vector<char> in(pr.p, 0);
    for (int x : ns.members) in[x] = 1;
    int gaps = 0, start = -1;
    for (int x = 0; x < pr.p; ++x) {
        int next = (x + 1) % pr.p;
        if (in[x] && !in[next]) ++gaps;
        if (!in[x] && in[next]) start = next;
    }
    if (gaps == 1) {
        int len = static_cast<int>(ns.members.size());
        ns.interval = CyclicInterval{start, mod_p(start + len - 1, pr.p)};
    }
    return ns;
}

}  // namespace circol
