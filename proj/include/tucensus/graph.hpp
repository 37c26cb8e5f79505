#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tucensus/errors.hpp"

namespace tucensus {

// Edge endpoints are 1-based vertex labels, kept in input order.
struct Edge {
    int u = 0;
    int v = 0;

    bool operator==(const Edge&) const = default;
    std::pair<int, int> normalized() const { return {std::min(u, v), std::max(u, v)}; }
};

// Simple undirected graph with canonical 1-based vertex and edge labels.
// The edge list order is the edge labeling every incidence-matrix column uses.
class Graph {
public:
    static Graph build(int n, const std::vector<std::pair<int, int>>& pairs) {
        if (n < 1)
            throw error(errc::vertex_out_of_range, "vertex count must be at least 1, got " + std::to_string(n));
        Graph g;
        g.n_ = n;
        g.adj_.assign(static_cast<std::size_t>(n) + 1, {});
        std::set<std::pair<int, int>> seen;
        int label = 0;
        for (const auto& [u, v] : pairs) {
            ++label;
            const std::string where = "edge " + std::to_string(label) + " (" + std::to_string(u) + "," +
                                      std::to_string(v) + ")";
            if (u < 1 || u > n || v < 1 || v > n)
                throw error(errc::vertex_out_of_range, where + ": endpoint outside 1.." + std::to_string(n));
            if (u == v)
                throw error(errc::self_loop, where + ": self-loops are not allowed");
            if (!seen.insert(std::minmax(u, v)).second)
                throw error(errc::duplicate_edge, where + ": duplicate edge");
            g.edges_.push_back({u, v});
            g.adj_[static_cast<std::size_t>(u)].push_back(v);
            g.adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    // 1-based edge label.
    const Edge& edge(int j) const {
        if (j < 1 || j > edge_count())
            throw error(errc::index_out_of_range, "edge label " + std::to_string(j) + " outside 1.." +
                                                      std::to_string(edge_count()));
        return edges_[static_cast<std::size_t>(j - 1)];
    }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool adjacent(int u, int v) const {
        const auto& nb = neighbors(u);
        check_vertex(v);
        return std::find(nb.begin(), nb.end(), v) != nb.end();
    }

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    void check_vertex(int v) const {
        if (v < 1 || v > n_)
            throw error(errc::vertex_out_of_range,
                        "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_; // 1-based; slot 0 unused
};

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& pairs) { return Graph::build(n, pairs); }

enum class ComponentKind { tree, odd_unicyclic, even_unicyclic, multi_cyclic };

inline const char* component_kind_name(ComponentKind k) {
    switch (k) {
        case ComponentKind::tree: return "Tree";
        case ComponentKind::odd_unicyclic: return "OddUnicyclic";
        case ComponentKind::even_unicyclic: return "EvenUnicyclic";
        case ComponentKind::multi_cyclic: return "MultiCyclic";
    }
    return "Unknown";
}

struct ComponentInfo {
    std::vector<int> vertices; // ascending
    int edge_count = 0;
    ComponentKind kind = ComponentKind::tree;
};

struct ComponentProfile {
    std::vector<ComponentInfo> components;
    std::vector<int> component_of; // 1-based vertex -> component index (0-based); slot 0 unused

    int count(ComponentKind k) const {
        int c = 0;
        for (const auto& comp : components)
            if (comp.kind == k) ++c;
        return c;
    }
    bool connected() const { return components.size() == 1; }
};

namespace detail {

// Length of the unique cycle of a unicyclic vertex set: strip leaves until only
// the cycle remains.
inline int unicyclic_cycle_length(const Graph& g, const std::vector<int>& vertices,
                                  const std::vector<int>& comp_of, int comp_idx) {
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (int v : vertices) deg[static_cast<std::size_t>(v)] = g.degree(v);
    std::queue<int> leaves;
    for (int v : vertices)
        if (deg[static_cast<std::size_t>(v)] == 1) leaves.push(v);
    int remaining = static_cast<int>(vertices.size());
    while (!leaves.empty()) {
        int v = leaves.front();
        leaves.pop();
        deg[static_cast<std::size_t>(v)] = 0;
        --remaining;
        for (int w : g.neighbors(v)) {
            if (comp_of[static_cast<std::size_t>(w)] != comp_idx) continue;
            if (deg[static_cast<std::size_t>(w)] > 0 && --deg[static_cast<std::size_t>(w)] == 1) leaves.push(w);
        }
    }
    return remaining;
}

} // namespace detail

inline ComponentProfile components(const Graph& g) {
    const int n = g.vertex_count();
    ComponentProfile profile;
    profile.component_of.assign(static_cast<std::size_t>(n) + 1, -1);
    for (int start = 1; start <= n; ++start) {
        if (profile.component_of[static_cast<std::size_t>(start)] != -1) continue;
        const int idx = static_cast<int>(profile.components.size());
        ComponentInfo info;
        std::queue<int> bfs;
        bfs.push(start);
        profile.component_of[static_cast<std::size_t>(start)] = idx;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            info.vertices.push_back(v);
            for (int w : g.neighbors(v)) {
                if (profile.component_of[static_cast<std::size_t>(w)] == -1) {
                    profile.component_of[static_cast<std::size_t>(w)] = idx;
                    bfs.push(w);
                }
            }
        }
        std::sort(info.vertices.begin(), info.vertices.end());
        profile.components.push_back(std::move(info));
    }
    for (const Edge& e : g.edges())
        ++profile.components[static_cast<std::size_t>(profile.component_of[static_cast<std::size_t>(e.u)])]
              .edge_count;
    for (std::size_t i = 0; i < profile.components.size(); ++i) {
        ComponentInfo& comp = profile.components[i];
        const int nv = static_cast<int>(comp.vertices.size());
        const int ne = comp.edge_count;
        if (ne == nv - 1) {
            comp.kind = ComponentKind::tree;
        } else if (ne == nv) {
            int len = detail::unicyclic_cycle_length(g, comp.vertices, profile.component_of, static_cast<int>(i));
            comp.kind = (len % 2 == 1) ? ComponentKind::odd_unicyclic : ComponentKind::even_unicyclic;
        } else {
            comp.kind = ComponentKind::multi_cyclic;
        }
    }
    return profile;
}

inline bool is_connected(const Graph& g) { return components(g).connected(); }

// Spanning subgraph on all n vertices with the edges whose labels lie in S.
// Edge labels of the result follow ascending label order from g.
inline Graph spanning_subgraph(const Graph& g, const std::vector<int>& edge_labels) {
    std::vector<int> sorted = edge_labels;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(sorted.size());
    int prev = 0;
    for (int j : sorted) {
        if (j < 1 || j > g.edge_count())
            throw error(errc::index_out_of_range, "edge label " + std::to_string(j) + " outside 1.." +
                                                      std::to_string(g.edge_count()));
        if (j == prev)
            throw error(errc::index_out_of_range, "edge label " + std::to_string(j) + " repeated in subset");
        prev = j;
        const Edge& e = g.edge(j);
        pairs.emplace_back(e.u, e.v);
    }
    return Graph::build(g.vertex_count(), pairs);
}

struct BipartiteCheck {
    bool bipartite = false;
    // bipartite: 0/1 side per vertex (1-based; slot 0 unused).
    std::vector<int> coloring;
    // not bipartite: odd closed walk as a vertex sequence, first == last.
    std::vector<int> odd_closed_walk;
};

inline BipartiteCheck is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    BipartiteCheck result;
    std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
    std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
    for (int start = 1; start <= n; ++start) {
        if (color[static_cast<std::size_t>(start)] != -1) continue;
        color[static_cast<std::size_t>(start)] = 0;
        std::queue<int> bfs;
        bfs.push(start);
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            for (int w : g.neighbors(v)) {
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                    parent[static_cast<std::size_t>(w)] = v;
                    bfs.push(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                    // Same side: v->root plus root->w plus edge wv closes an odd walk.
                    std::vector<int> up_v, up_w;
                    for (int x = v; x != 0; x = parent[static_cast<std::size_t>(x)]) up_v.push_back(x);
                    for (int x = w; x != 0; x = parent[static_cast<std::size_t>(x)]) up_w.push_back(x);
                    result.bipartite = false;
                    result.odd_closed_walk = up_v;
                    std::reverse(up_w.begin(), up_w.end());
                    // Both chains end at the BFS root; keep it once.
                    result.odd_closed_walk.insert(result.odd_closed_walk.end(), up_w.begin() + 1, up_w.end());
                    result.odd_closed_walk.push_back(v);
                    return result;
                }
            }
        }
    }
    result.bipartite = true;
    result.coloring = std::move(color);
    return result;
}

// 2-colorability per connected component, aligned with components(g) order.
inline std::vector<bool> component_bipartite_flags(const Graph& g, const ComponentProfile& profile) {
    std::vector<bool> flags(profile.components.size(), true);
    std::vector<int> color(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
    for (std::size_t idx = 0; idx < profile.components.size(); ++idx) {
        const int start = profile.components[idx].vertices.front();
        color[static_cast<std::size_t>(start)] = 0;
        std::queue<int> bfs;
        bfs.push(start);
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            for (int w : g.neighbors(v)) {
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                    bfs.push(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                    flags[idx] = false;
                }
            }
        }
    }
    return flags;
}

inline bool has_bipartite_component(const Graph& g) {
    ComponentProfile profile = components(g);
    for (bool flag : component_bipartite_flags(g, profile))
        if (flag) return true;
    return false;
}

inline constexpr std::int64_t cycle_budget = 10'000'000;

// Visits every simple cycle exactly once, as its vertex sequence. Canonical
// representative: starts at the smallest vertex, and the second vertex is
// smaller than the last. Returning false from the callback stops early.
inline void for_each_simple_cycle(const Graph& g, const std::function<bool(const std::vector<int>&)>& visit) {
    const int n = g.vertex_count();
    std::vector<char> in_path(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> path;
    std::int64_t found = 0;
    bool stop = false;

    std::function<void(int, int)> dfs = [&](int start, int v) {
        if (stop) return;
        for (int w : g.neighbors(v)) {
            if (stop) return;
            if (w == start && path.size() >= 3) {
                if (path[1] < path.back()) {
                    if (++found > cycle_budget)
                        throw error(errc::budget_exceeded,
                                    "simple-cycle enumeration exceeded " + std::to_string(cycle_budget));
                    if (!visit(path)) {
                        stop = true;
                        return;
                    }
                }
            } else if (w > start && !in_path[static_cast<std::size_t>(w)]) {
                path.push_back(w);
                in_path[static_cast<std::size_t>(w)] = 1;
                dfs(start, w);
                in_path[static_cast<std::size_t>(w)] = 0;
                path.pop_back();
            }
        }
    };

    for (int s = 1; s <= n && !stop; ++s) {
        path.assign(1, s);
        in_path.assign(static_cast<std::size_t>(n) + 1, 0);
        in_path[static_cast<std::size_t>(s)] = 1;
        dfs(s, s);
    }
}

inline std::vector<std::vector<int>> simple_cycles(const Graph& g) {
    std::vector<std::vector<int>> cycles;
    for_each_simple_cycle(g, [&](const std::vector<int>& c) {
        cycles.push_back(c);
        return true;
    });
    return cycles;
}

inline std::int64_t count_odd_cycles(const Graph& g) {
    std::int64_t count = 0;
    for_each_simple_cycle(g, [&](const std::vector<int>& c) {
        if (c.size() % 2 == 1) ++count;
        return true;
    });
    return count;
}

inline std::vector<std::vector<int>> odd_cycles(const Graph& g) {
    std::vector<std::vector<int>> cycles;
    for_each_simple_cycle(g, [&](const std::vector<int>& c) {
        if (c.size() % 2 == 1) cycles.push_back(c);
        return true;
    });
    return cycles;
}

inline bool has_even_cycle(const Graph& g) {
    bool found = false;
    for_each_simple_cycle(g, [&](const std::vector<int>& c) {
        if (c.size() % 2 == 0) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

// Connected, 2-regular, odd length.
inline bool is_odd_cycle_graph(const Graph& g) {
    if (g.vertex_count() % 2 == 0 || g.vertex_count() < 3) return false;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    return is_connected(g);
}

inline bool is_odd_unicyclic_graph(const Graph& g) {
    ComponentProfile profile = components(g);
    return profile.connected() && profile.components[0].kind == ComponentKind::odd_unicyclic;
}

// Small named fixtures used throughout tests and docs.
inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return Graph::build(n, e);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(n, 1);
    return Graph::build(n, e);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
    return Graph::build(n, e);
}

inline Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 2; i <= leaves + 1; ++i) e.emplace_back(1, i);
    return Graph::build(leaves + 1, e);
}

// Triangle 2-3-4 with the pendant vertex 1. Tests pin this exact edge order.
inline Graph paw_graph() { return Graph::build(4, {{1, 2}, {2, 3}, {3, 4}, {2, 4}}); }

} // namespace tucensus
