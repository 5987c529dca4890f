#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "circol/circular.hpp"
#include "circol/graph.hpp"

namespace circol::test {

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, es);
}

inline CircularColouring col(int p, int q, std::vector<int> cs) {
    return CircularColouring(CircularParams(p, q), std::move(cs));
}

// SplitMix64: tiny deterministic generator for reproducible fixtures.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // Uniform in [0, bound); bound > 0.
    uint64_t below(uint64_t bound) { return next() % bound; }
    bool chance(uint32_t num, uint32_t den) { return next() % den < num; }
};

// All labelled graphs on n vertices from an edge bitmask, pairs in
// lexicographic order (0,1),(0,2),...,(n-2,n-1).
inline Graph graph_from_mask(int n, uint64_t mask) {
    std::vector<std::pair<int, int>> es;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1) es.emplace_back(i, j);
    return Graph(n, es);
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

}  // namespace circol::test
