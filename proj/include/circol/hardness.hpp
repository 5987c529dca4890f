#pragma once

// Compilation of a k-recolouring instance (G, f, g) into a (p,q)-recolouring
// instance (G', alpha, beta) for p/q >= 4: interval partition of the colour
// circle, forbidding paths with list enforcement through a pinned G_{p,q}
// copy, standard path colourings, the case-by-case lifting of k-colouring
// moves, and the projection back.

#include <algorithm>
#include <cassert>
#include <optional>
#include <utility>
#include <vector>

#include "circol/circular.hpp"
#include "circol/errors.hpp"
#include "circol/graph.hpp"
#include "circol/recolour.hpp"

namespace circol {

struct r_is_zero : std::invalid_argument {
    explicit r_is_zero(const std::string& what) : std::invalid_argument(what) {}
};

struct not_a_proper_colouring : std::invalid_argument {
    explicit not_a_proper_colouring(const std::string& what) : std::invalid_argument(what) {}
};

struct invalid_k_sequence : std::invalid_argument {
    explicit invalid_k_sequence(const std::string& what) : std::invalid_argument(what) {}
};

struct invalid_pq_sequence : std::invalid_argument {
    explicit invalid_pq_sequence(const std::string& what) : std::invalid_argument(what) {}
};

// Smallest positive t with (t+1)q = r (mod p).  Always solvable since
// gcd(p,q) divides r, and t+1 <= p.
inline int path_length_t(CircularParams pr) {
    if (pr.k() < 4) throw param_out_of_range("path_length_t: requires p/q >= 4");
    if (pr.r() == 0) throw r_is_zero("path_length_t: r = 0 has no forbidding paths");
    for (int t = 1; t <= pr.p; ++t)
        if (mod_p(static_cast<long long>(t + 1) * pr.q, pr.p) == pr.r()) return t;
    throw std::logic_error("path_length_t: no solution found");
}

// Blocks S_0 = [0, q+r-1] and S_i = [iq+r, (i+1)q+r-1]; gamma maps a
// k-colour to its block's left endpoint and phi maps a (p,q)-colour to its
// block index.
struct IntervalPartition {
    CircularParams params;
    std::vector<CyclicInterval> blocks;

    int gamma(int i) const { return blocks[i].a; }
    int block_of(int colour) const {
        int q = params.q, r = params.r();
        if (colour < q + r) return 0;
        return (colour - r) / q;
    }
};

inline IntervalPartition interval_partition(CircularParams pr) {
    if (pr.k() < 4) throw param_out_of_range("interval_partition: requires p/q >= 4");
    IntervalPartition part;
    part.params = pr;
    const int q = pr.q, r = pr.r(), k = pr.k();
    part.blocks.push_back({0, q + r - 1});
    for (int i = 1; i < k; ++i) part.blocks.push_back({i * q + r, (i + 1) * q + r - 1});
    return part;
}

// Lists for internal path vertices x_0..x_t and, per vertex, the set of
// y-indices it is joined to.  Construction asserts that the colours
// compatible with every enforcing y are exactly the list.
struct ForbiddingPathSpec {
    CircularParams params;
    int t = 0;
    std::vector<CyclicInterval> lists;       // size t+1
    std::vector<std::vector<int>> enforce;   // size t+1, ascending y-indices
};

inline ForbiddingPathSpec forbidding_path_spec(CircularParams pr,
                                               bool check_consistency = true) {
    ForbiddingPathSpec spec;
    spec.params = pr;
    spec.t = path_length_t(pr);
    const int p = pr.p, q = pr.q, t = spec.t;
    spec.lists.resize(t + 1);
    spec.enforce.resize(t + 1);
    spec.lists[0] = spec.lists[t] = CyclicInterval{mod_p(p - 1, p), mod_p(2 * q - 1, p)};
    for (int i = 1; i <= t - 1; ++i)
        spec.lists[i] = CyclicInterval{mod_p(i * q, p), mod_p((i + 2) * q - 1, p)};
    std::vector<int> ends = interval_members({mod_p(3 * q - 1, p), mod_p(p - q - 1, p)}, p);
    std::sort(ends.begin(), ends.end());
    spec.enforce[0] = spec.enforce[t] = ends;
    for (int i = 1; i <= t - 1; ++i) {
        std::vector<int> ys =
            interval_members({mod_p((i + 3) * q - 1, p), mod_p((i - 1) * q, p)}, p);
        std::sort(ys.begin(), ys.end());
        spec.enforce[i] = ys;
    }

    if (check_consistency) {
        for (int i = 0; i <= t; ++i) {
            std::vector<int> allowed;
            for (int c = 0; c < p; ++c) {
                bool ok = true;
                for (int y : spec.enforce[i])
                    if (!compatible(pr, c, y)) { ok = false; break; }
                if (ok) allowed.push_back(c);
            }
            std::vector<int> listed = interval_members(spec.lists[i], p);
            std::sort(listed.begin(), listed.end());
            if (allowed != listed)
                throw std::logic_error(
                    "forbidding_path_spec: enforcement sets do not realize the lists for p=" +
                    std::to_string(p) + " q=" + std::to_string(q));
        }
    }
    return spec;
}

// One forbidding path a -> x_0 -> ... -> x_t -> b; xs holds G' vertex ids.
struct ForbiddingPath {
    int from = 0;
    int to = 0;
    std::vector<int> xs;
};

struct ReductionInstance {
    CircularParams params;
    int k = 0;
    Graph g_original;
    Graph g_prime;
    CircularColouring alpha, beta;
    IntervalPartition partition;

    bool bypass = false;       // r = 0: G' = G with composed colourings
    bool identity = false;     // q = 1 (forces r = 0): G' = G, alpha = f
    int y_base = -1;           // y_i has id y_base + i when gadgets exist
    ForbiddingPathSpec path_spec;
    std::vector<ForbiddingPath> paths;  // 2 per edge: index 2e is P_uv, 2e+1 is P_vu

    // Path leaving `a` along edge (a,b).
    const ForbiddingPath& path_from(int a, int b) const {
        int ei = g_original.edge_index(a, b);
        return paths[2 * ei + (a < b ? 0 : 1)];
    }
};

namespace detail {

inline void check_proper_k_colouring(const Graph& g, const std::vector<int>& f, int k,
                                     const char* who) {
    if (static_cast<int>(f.size()) != g.n)
        throw not_a_proper_colouring(std::string(who) + ": wrong domain");
    for (int c : f)
        if (c < 0 || c >= k) throw not_a_proper_colouring(std::string(who) + ": colour out of range");
    for (const Edge& e : g.edges)
        if (f[e.u] == f[e.v])
            throw not_a_proper_colouring(std::string(who) + ": adjacent vertices share a colour");
}

// Standard colouring of the internal vertices of the path from a to b, given
// the endpoint colours under gamma.
inline std::vector<int> standard_path_colours(const ForbiddingPathSpec& spec, int colour_a,
                                              int colour_b) {
    const int p = spec.params.p, q = spec.params.q, t = spec.t;
    std::vector<int> xs(t + 1);
    if (colour_a == 0) {
        for (int i = 0; i <= t; ++i) xs[i] = mod_p(static_cast<long long>(i + 1) * q, p);
    } else if (colour_b == 0) {
        for (int i = 0; i < t; ++i) xs[i] = mod_p(static_cast<long long>(i) * q, p);
        xs[t] = q;
    } else {
        for (int i = 0; i < t; ++i) xs[i] = mod_p(static_cast<long long>(i) * q, p);
        xs[t] = 0;
    }
    return xs;
}

}  // namespace detail

inline ReductionInstance build_reduction(const Graph& g, const std::vector<int>& f,
                                         const std::vector<int>& g_target, CircularParams pr) {
    if (pr.k() < 4) throw param_out_of_range("build_reduction: requires p/q >= 4");
    ReductionInstance red;
    red.params = pr;
    red.k = pr.k();
    red.g_original = g;
    red.partition = interval_partition(pr);
    detail::check_proper_k_colouring(g, f, red.k, "build_reduction(f)");
    detail::check_proper_k_colouring(g, g_target, red.k, "build_reduction(g)");

    if (pr.r() == 0) {
        red.bypass = true;
        red.identity = (pr.q == 1);
        red.g_prime = g;
        std::vector<int> a(g.n), b(g.n);
        for (int v = 0; v < g.n; ++v) {
            a[v] = red.partition.gamma(f[v]);
            b[v] = red.partition.gamma(g_target[v]);
        }
        red.alpha = CircularColouring(pr, a);
        red.beta = CircularColouring(pr, b);
        assert(!verify_colouring(red.g_prime, red.alpha));
        assert(!verify_colouring(red.g_prime, red.beta));
        return red;
    }

    red.path_spec = forbidding_path_spec(pr);
    const int t = red.path_spec.t;
    const int n = g.n, p = pr.p, m = g.edge_count();
    red.y_base = n;
    int next = n + p;

    std::vector<std::pair<int, int>> es;
    for (const Edge& e : g.edges) es.emplace_back(e.u, e.v);
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (compatible(pr, i, j)) es.emplace_back(n + i, n + j);

    for (int ei = 0; ei < m; ++ei) {
        const Edge& e = g.edges[ei];
        for (int side = 0; side < 2; ++side) {
            ForbiddingPath path;
            path.from = side == 0 ? e.u : e.v;
            path.to = side == 0 ? e.v : e.u;
            for (int i = 0; i <= t; ++i) path.xs.push_back(next++);
            es.emplace_back(path.from, path.xs.front());
            for (int i = 0; i < t; ++i) es.emplace_back(path.xs[i], path.xs[i + 1]);
            es.emplace_back(path.xs.back(), path.to);
            for (int i = 0; i <= t; ++i)
                for (int y : red.path_spec.enforce[i]) es.emplace_back(path.xs[i], n + y);
            red.paths.push_back(std::move(path));
        }
    }
    red.g_prime = Graph(next, es);
    assert(red.g_prime.n == n + p + 2 * m * (t + 1));

    auto extend = [&](const std::vector<int>& h) {
        std::vector<int> c(red.g_prime.n, 0);
        for (int v = 0; v < n; ++v) c[v] = red.partition.gamma(h[v]);
        for (int i = 0; i < p; ++i) c[n + i] = i;
        for (const ForbiddingPath& path : red.paths) {
            std::vector<int> xs =
                detail::standard_path_colours(red.path_spec, c[path.from], c[path.to]);
            for (int i = 0; i <= t; ++i) c[path.xs[i]] = xs[i];
        }
        return c;
    };
    red.alpha = CircularColouring(pr, extend(f));
    red.beta = CircularColouring(pr, extend(g_target));
    assert(!verify_colouring(red.g_prime, red.alpha));
    assert(!verify_colouring(red.g_prime, red.beta));
    return red;
}

namespace detail {

// Emits a recolouring of one G' vertex, skipping no-ops, and keeps the
// running colouring current.
struct LiftEmitter {
    std::vector<int>& eta;
    std::vector<RecolourStep>& steps;

    void operator()(int vertex, int colour) {
        if (eta[vertex] == colour) return;
        eta[vertex] = colour;
        steps.push_back({vertex, colour});
    }
};

}  // namespace detail

// Lift a valid k-recolouring sequence from f to g_target into a valid
// (p,q)-recolouring sequence on G' from alpha to beta.  After each lifted
// block the restriction to V(G) is gamma composed with the current
// k-colouring and every path carries a standard colouring again.
inline std::vector<RecolourStep> lift_sequence(const ReductionInstance& red,
                                               const std::vector<std::pair<int, int>>& ksteps) {
    const Graph& g = red.g_original;
    const int k = red.k;

    // Recover f from alpha's restriction and validate the k-sequence.
    std::vector<int> h(g.n);
    for (int v = 0; v < g.n; ++v) h[v] = red.partition.block_of(red.alpha.colours[v]);
    {
        std::vector<int> sim = h;
        for (auto [v, c] : ksteps) {
            if (v < 0 || v >= g.n || c < 0 || c >= k)
                throw invalid_k_sequence("lift_sequence: step out of range");
            if (sim[v] == c) throw invalid_k_sequence("lift_sequence: step changes nothing");
            for (int w : g.adj[v])
                if (sim[w] == c) throw invalid_k_sequence("lift_sequence: improper intermediate");
            sim[v] = c;
        }
        std::vector<int> target(g.n);
        for (int v = 0; v < g.n; ++v) target[v] = red.partition.block_of(red.beta.colours[v]);
        if (sim != target)
            throw invalid_k_sequence("lift_sequence: sequence does not end at g_target");
    }

    std::vector<RecolourStep> steps;
    std::vector<int> eta = red.alpha.colours;
    detail::LiftEmitter emit{eta, steps};

    if (red.bypass) {
        for (auto [v, c] : ksteps) emit(v, red.partition.gamma(c));
        return steps;
    }

    const int p = red.params.p, q = red.params.q, r = red.params.r();
    const int t = red.path_spec.t;
    auto gamma = [&](int c) { return red.partition.gamma(c); };

    for (auto [u, c_new] : ksteps) {
        const int c_old = h[u];
        const std::vector<int>& nbrs = g.adj[u];  // ascending

        if (c_old >= 1 && c_new >= 1) {
            // Case (a): both endpoints of the move lie in nonzero blocks; the
            // path boundaries carry 0 or r, compatible with every gamma value.
            emit(u, gamma(c_new));
        } else if (c_old == 0 && c_new >= 2) {
            // Case (b)
            emit(u, gamma(c_new));
            for (int v : nbrs) emit(red.path_from(v, u).xs[t], 0);
            for (int v : nbrs) {
                const ForbiddingPath& uv = red.path_from(u, v);
                for (int i = 0; i < t; ++i) emit(uv.xs[i], mod_p(i * q, p));
                emit(uv.xs[t], 0);
            }
        } else if (c_old == 0 && c_new == 1) {
            // Case (c); every neighbour sits in a block >= 2 here.
            for (int v : nbrs) {
                const ForbiddingPath& uv = red.path_from(u, v);
                for (int i = t; i >= 0; --i) emit(uv.xs[i], mod_p((i + 2) * q - 1, p));
            }
            for (int v : nbrs) {
                const ForbiddingPath& vu = red.path_from(v, u);
                emit(vu.xs[t - 1], mod_p(-q - 1, p));
                emit(vu.xs[t], 2 * q - 1);
            }
            emit(u, q - 1);
            for (int v : nbrs) {
                emit(red.path_from(u, v).xs[0], p - 1);
                emit(red.path_from(v, u).xs[t], p - 1);
            }
            emit(u, q + r);
            for (int v : nbrs) {
                const ForbiddingPath& vu = red.path_from(v, u);
                emit(vu.xs[t - 1], mod_p(r - 2 * q, p));
                emit(vu.xs[t], 0);
            }
            for (int v : nbrs) {
                const ForbiddingPath& uv = red.path_from(u, v);
                for (int i = 0; i < t; ++i) emit(uv.xs[i], mod_p(i * q, p));
                emit(uv.xs[t], 0);
            }
        } else if (c_old >= 2 && c_new == 0) {
            // Case (d)
            for (int v : nbrs) {
                emit(red.path_from(v, u).xs[t], q);
                const ForbiddingPath& uv = red.path_from(u, v);
                for (int i = t; i >= 0; --i) emit(uv.xs[i], mod_p((i + 1) * q, p));
            }
            emit(u, 0);
        } else {
            // Case (e): c_old == 1, c_new == 0; neighbours sit in blocks >= 2.
            assert(c_old == 1 && c_new == 0);
            for (int v : nbrs) {
                emit(red.path_from(v, u).xs[t], p - 1);
                emit(red.path_from(u, v).xs[0], p - 1);
            }
            emit(u, q - 1);
            for (int v : nbrs) {
                const ForbiddingPath& uv = red.path_from(u, v);
                for (int i = t; i >= 0; --i) emit(uv.xs[i], mod_p((i + 2) * q - 1, p));
            }
            for (int v : nbrs) {
                const ForbiddingPath& vu = red.path_from(v, u);
                emit(vu.xs[t - 1], mod_p(-q - 1, p));
                emit(vu.xs[t], 2 * q - 1);
            }
            emit(u, 0);
            for (int v : nbrs) {
                const ForbiddingPath& uv = red.path_from(u, v);
                for (int i = 0; i <= t; ++i) emit(uv.xs[i], mod_p((i + 1) * q, p));
                const ForbiddingPath& vu = red.path_from(v, u);
                emit(vu.xs[t], q);
                emit(vu.xs[t - 1], mod_p(r - 2 * q, p));
            }
        }
        h[u] = c_new;
    }
    return steps;
}

// Project a valid (p,q)-sequence on G' starting at alpha down to the induced
// k-colouring steps on V(G); moves that keep every original vertex in its
// block are dropped.
inline std::vector<std::pair<int, int>> project_sequence(const ReductionInstance& red,
                                                         const std::vector<RecolourStep>& steps) {
    const Graph& gp = red.g_prime;
    std::vector<int> eta = red.alpha.colours;
    std::vector<int> h(red.g_original.n);
    for (int v = 0; v < red.g_original.n; ++v) h[v] = red.partition.block_of(eta[v]);

    std::vector<std::pair<int, int>> out;
    for (const RecolourStep& s : steps) {
        if (s.vertex < 0 || s.vertex >= gp.n || s.new_colour < 0 || s.new_colour >= red.params.p)
            throw invalid_pq_sequence("project_sequence: step out of range");
        if (eta[s.vertex] == s.new_colour)
            throw invalid_pq_sequence("project_sequence: step changes nothing");
        for (int w : gp.adj[s.vertex])
            if (!compatible(red.params, s.new_colour, eta[w]))
                throw invalid_pq_sequence("project_sequence: invalid intermediate colouring");
        eta[s.vertex] = s.new_colour;
        if (s.vertex < red.g_original.n) {
            int b = red.partition.block_of(s.new_colour);
            if (b != h[s.vertex]) {
                h[s.vertex] = b;
                // The forbidding paths guarantee properness of the projected
                // k-colouring at every point.
                for (int w : red.g_original.adj[s.vertex]) assert(h[w] != b);
                out.emplace_back(s.vertex, b);
            }
        }
    }
    return out;
}

struct ForbiddingCounterexample {
    int colour_u = 0;
    int colour_v = 0;
    std::vector<int> uv_path;  // internal colours of P_uv
    std::vector<int> vu_path;  // internal colours of P_vu
};

namespace detail {

// List-respecting colourings of one path a -> x_0 .. x_t -> b with fixed
// endpoint colours; returns one witness assignment if any exists.
inline std::optional<std::vector<int>> colour_path_with_lists(const ForbiddingPathSpec& spec,
                                                              int colour_a, int colour_b) {
    const int p = spec.params.p, t = spec.t;
    std::vector<std::vector<int>> feas(t + 1);
    for (int c : interval_members(spec.lists[0], p))
        if (compatible(spec.params, c, colour_a)) feas[0].push_back(c);
    for (int i = 1; i <= t; ++i)
        for (int c : interval_members(spec.lists[i], p))
            for (int prev : feas[i - 1])
                if (compatible(spec.params, c, prev)) { feas[i].push_back(c); break; }
    std::optional<int> last;
    for (int c : feas[t])
        if (compatible(spec.params, c, colour_b)) { last = c; break; }
    if (!last) return std::nullopt;
    std::vector<int> out(t + 1);
    out[t] = *last;
    for (int i = t - 1; i >= 0; --i)
        for (int c : feas[i])
            if (compatible(spec.params, c, out[i + 1])) { out[i] = c; break; }
    return out;
}

}  // namespace detail

// Exhaustively searches, over all compatible endpoint colour pairs, for a
// list-respecting colouring of P_uv and P_vu that puts both endpoints in
// S_0.  Returns the first counterexample in (colour_u, colour_v) order, or
// nullopt when the gadget forbids it as intended.
inline std::optional<ForbiddingCounterexample> check_forbidding_property(
    const ForbiddingPathSpec& spec) {
    CircularParams pr = spec.params;
    IntervalPartition part = interval_partition(pr);
    for (int cu = 0; cu < pr.p; ++cu) {
        if (part.block_of(cu) != 0) continue;
        for (int cv = 0; cv < pr.p; ++cv) {
            if (part.block_of(cv) != 0) continue;
            if (!compatible(pr, cu, cv)) continue;  // u and v are adjacent in G'
            auto uv = detail::colour_path_with_lists(spec, cu, cv);
            if (!uv) continue;
            auto vu = detail::colour_path_with_lists(spec, cv, cu);
            if (!vu) continue;
            return ForbiddingCounterexample{cu, cv, *uv, *vu};
        }
    }
    return std::nullopt;
}

inline std::optional<ForbiddingCounterexample> check_forbidding_property(CircularParams pr) {
    return check_forbidding_property(forbidding_path_spec(pr));
}

}  // namespace circol
