#pragma once

// Test-side oracles, deliberately implemented with different algorithms than
// the library: cofactor expansion instead of Bareiss, union-find instead of
// BFS, permutation counting instead of DFS cycle enumeration, and a
// table-indexed graph6 decoder instead of the streaming one.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tucensus/graph.hpp"
#include "tucensus/matrix.hpp"

namespace oracle {

using tucensus::Graph;
using tucensus::Int;
using tucensus::IntMatrix;

inline std::filesystem::path data_path(const std::string& name) {
    return std::filesystem::path(TUCENSUS_SOURCE_DIR) / "data" / name;
}

inline Int cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Int total = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (m(0, col) == 0) continue;
        IntMatrix sub(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == col) continue;
                sub(r - 1, cc++) = m(r, c);
            }
        }
        const Int term = m(0, col) * cofactor_det(sub);
        total += (col % 2 == 0) ? term : -term;
    }
    return total;
}

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

struct ComponentFacts {
    std::vector<int> vertices; // 1-based
    int edges = 0;
    bool has_odd_cycle = false;
};

// Union-find partition of a spanning subgraph given by 1-based edge labels,
// with odd-cycle detection by 2-coloring each component.
inline std::vector<ComponentFacts> subgraph_components(const Graph& g, const std::vector<int>& edge_labels) {
    const int n = g.vertex_count();
    DisjointSet dsu(n + 1);
    for (int label : edge_labels) {
        const tucensus::Edge e = g.edge(label);
        dsu.unite(e.u, e.v);
    }
    std::map<int, ComponentFacts> by_root;
    for (int v = 1; v <= n; ++v) by_root[dsu.find(v)].vertices.push_back(v);
    for (int label : edge_labels) by_root[dsu.find(g.edge(label).u)].edges += 1;

    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n) + 1);
    for (int label : edge_labels) {
        const tucensus::Edge e = g.edge(label);
        adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, label);
        adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, label);
    }
    std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
    std::vector<ComponentFacts> out;
    for (auto& [root, facts] : by_root) {
        bool odd = false;
        for (int start : facts.vertices) {
            if (color[static_cast<std::size_t>(start)] != -1) continue;
            color[static_cast<std::size_t>(start)] = 0;
            std::vector<int> stack = {start};
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                for (auto [w, label] : adj[static_cast<std::size_t>(v)]) {
                    if (color[static_cast<std::size_t>(w)] == -1) {
                        color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                        stack.push_back(w);
                    } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                        odd = true;
                    }
                }
            }
        }
        facts.has_odd_cycle = odd;
        out.push_back(facts);
    }
    return out;
}

inline void enumerate_edge_subsets(int m, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            fn(pick);
            return;
        }
        for (int e = start; e <= m - (k - depth) + 1; ++e) {
            pick[static_cast<std::size_t>(depth)] = e;
            rec(e + 1, depth + 1);
        }
    };
    if (k >= 0 && k <= m) rec(1, 0);
}

// Census of spanning subgraphs with n-1 edges whose components are all trees
// or odd-unicyclic and whose tree part covers `vertex`, keyed by the number
// of odd-unicyclic components.
inline std::map<int, std::int64_t> minor_census_oracle(const Graph& g, int vertex) {
    std::map<int, std::int64_t> census;
    enumerate_edge_subsets(g.edge_count(), g.vertex_count() - 1, [&](const std::vector<int>& labels) {
        int odd_unicyclic = 0;
        for (const ComponentFacts& comp : subgraph_components(g, labels)) {
            const int v = static_cast<int>(comp.vertices.size());
            if (comp.edges == v - 1) continue; // tree
            if (comp.edges == v && comp.has_odd_cycle) {
                if (std::find(comp.vertices.begin(), comp.vertices.end(), vertex) != comp.vertices.end()) return;
                ++odd_unicyclic;
                continue;
            }
            return;
        }
        census[odd_unicyclic] += 1;
    });
    return census;
}

inline std::map<int, std::int64_t> det_census_oracle(const Graph& g) {
    std::map<int, std::int64_t> census;
    if (g.edge_count() < g.vertex_count()) return census;
    enumerate_edge_subsets(g.edge_count(), g.vertex_count(), [&](const std::vector<int>& labels) {
        int k = 0;
        for (const ComponentFacts& comp : subgraph_components(g, labels)) {
            if (comp.edges != static_cast<int>(comp.vertices.size()) || !comp.has_odd_cycle) return;
            ++k;
        }
        census[k] += 1;
    });
    return census;
}

inline Int weighted_sum_oracle(const std::map<int, std::int64_t>& census) {
    Int total = 0;
    for (const auto& [c, count] : census) {
        Int w = count;
        w <<= 2 * c;
        total += w;
    }
    return total;
}

inline std::int64_t spanning_trees_oracle(const Graph& g) {
    std::int64_t count = 0;
    const int n = g.vertex_count();
    enumerate_edge_subsets(g.edge_count(), n - 1, [&](const std::vector<int>& labels) {
        DisjointSet dsu(n + 1);
        for (int label : labels) {
            const tucensus::Edge e = g.edge(label);
            if (!dsu.unite(e.u, e.v)) return;
        }
        ++count;
    });
    return count;
}

// Cycles with vertex set exactly S, counted by fixing min(S) first and walking
// permutations of the rest; each cycle appears twice (orientation).
inline std::int64_t cycles_on_vertex_set(const Graph& g, const std::vector<int>& s) {
    if (s.size() < 3) return 0;
    std::vector<int> rest(s.begin() + 1, s.end());
    std::sort(rest.begin(), rest.end());
    std::int64_t closed = 0;
    do {
        bool ok = g.adjacent(s.front(), rest.front());
        for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = g.adjacent(rest[i], rest[i + 1]);
        if (ok && g.adjacent(rest.back(), s.front())) ++closed;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return closed / 2;
}

inline std::int64_t count_cycles_oracle(const Graph& g, bool odd_only) {
    const int n = g.vertex_count();
    std::int64_t total = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) s.push_back(v + 1);
        if (s.size() < 3) continue;
        if (odd_only && s.size() % 2 == 0) continue;
        total += cycles_on_vertex_set(g, s);
    }
    return total;
}

// graph6 decode via explicit bit table: bit of pair (i,j), 0 <= i < j, is
// j(j-1)/2 + i into the concatenated 6-bit payloads.
inline Graph decode_graph6_oracle(const std::string& s) {
    const int n = static_cast<unsigned char>(s.at(0)) - 63;
    std::vector<bool> bits;
    for (std::size_t idx = 1; idx < s.size(); ++idx) {
        const int value = static_cast<unsigned char>(s[idx]) - 63;
        for (int b = 5; b >= 0; --b) bits.push_back((value >> b) & 1);
    }
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (bits.at(static_cast<std::size_t>(j * (j - 1) / 2 + i))) edges.emplace_back(i + 1, j + 1);
    return Graph::build(n, edges);
}

inline std::set<std::pair<int, int>> edge_set(const Graph& g) {
    std::set<std::pair<int, int>> out;
    for (const tucensus::Edge& e : g.edges()) out.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    return out;
}

inline bool same_graph(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && edge_set(a) == edge_set(b);
}

} // namespace oracle
