#pragma once

#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tucensus/detail/combinatorics.hpp"
#include "tucensus/graph.hpp"
#include "tucensus/matrix.hpp"

namespace tucensus {

// Case split for a spanning subgraph with n-1 edges.
enum class Nm1Kind {
    tree,
    even_cycle_spare_vertex, // an even cycle exists (and the edge count forces a vertex off it)
    odd_multicyclic_trees,   // only odd cycles, some component with at least two of them
    tu,                      // odd-unicyclic components plus exactly one tree
};

struct Nm1Class {
    Nm1Kind kind = Nm1Kind::tree;
    int odd_unicyclic = 0;          // tu: c(H)
    std::vector<int> tree_vertices; // tu: vertex set of the unique tree component
};

// Case split for a spanning subgraph with n edges.
enum class NKind {
    tree_component,
    even_unicyclic_present,
    all_odd_unicyclic,
};

struct NClass {
    NKind kind = NKind::tree_component;
    int odd_unicyclic = 0; // all_odd_unicyclic: k
};

inline Nm1Class classify_nm1(const Graph& h) {
    if (h.edge_count() != h.vertex_count() - 1)
        throw error(errc::arity_mismatch, "expected n-1 = " + std::to_string(h.vertex_count() - 1) + " edges, got " +
                                              std::to_string(h.edge_count()));
    ComponentProfile profile = components(h);
    bool even_unicyclic = false, multi = false;
    for (const ComponentInfo& comp : profile.components) {
        if (comp.kind == ComponentKind::even_unicyclic) even_unicyclic = true;
        if (comp.kind == ComponentKind::multi_cyclic) multi = true;
    }
    Nm1Class result;
    if (even_unicyclic || (multi && has_even_cycle(h))) {
        result.kind = Nm1Kind::even_cycle_spare_vertex;
        return result;
    }
    if (multi) {
        // All cycles odd and some component carries at least two of them; the
        // edge deficit then forces at least two tree components.
        assert(profile.count(ComponentKind::tree) >= 2);
        result.kind = Nm1Kind::odd_multicyclic_trees;
        return result;
    }
    if (profile.connected()) {
        result.kind = Nm1Kind::tree;
        return result;
    }
    // Remaining components are odd-unicyclic plus trees; with n-1 edges the
    // tree count is exactly one.
    result.kind = Nm1Kind::tu;
    for (const ComponentInfo& comp : profile.components) {
        if (comp.kind == ComponentKind::odd_unicyclic) {
            ++result.odd_unicyclic;
        } else {
            assert(comp.kind == ComponentKind::tree);
            assert(result.tree_vertices.empty());
            result.tree_vertices = comp.vertices;
        }
    }
    return result;
}

inline NClass classify_n(const Graph& h) {
    if (h.edge_count() != h.vertex_count())
        throw error(errc::arity_mismatch, "expected n = " + std::to_string(h.vertex_count()) + " edges, got " +
                                              std::to_string(h.edge_count()));
    ComponentProfile profile = components(h);
    NClass result;
    if (profile.count(ComponentKind::tree) > 0) {
        result.kind = NKind::tree_component;
        return result;
    }
    if (profile.count(ComponentKind::even_unicyclic) > 0) {
        result.kind = NKind::even_unicyclic_present;
        return result;
    }
    // No tree component with m = n leaves only unicyclic components.
    assert(profile.count(ComponentKind::multi_cyclic) == 0);
    result.kind = NKind::all_odd_unicyclic;
    result.odd_unicyclic = static_cast<int>(profile.components.size());
    return result;
}

// Counts of qualifying TU-subgraphs keyed by their number of odd-unicyclic
// components; each entry contributes weight 4^c to the minor/determinant sums.
struct TUCensus {
    std::map<int, std::int64_t> by_components;

    std::int64_t total() const {
        std::int64_t t = 0;
        for (const auto& [c, count] : by_components) t += count;
        return t;
    }

    Int weighted_sum() const {
        Int sum = 0;
        for (const auto& [c, count] : by_components) {
            Int w = 1;
            w <<= 2 * c; // 4^c
            sum += w * count;
        }
        return sum;
    }
};

namespace detail {

inline void require_connected_nontrivial(const Graph& g) {
    if (g.vertex_count() < 2) throw error(errc::too_small, "needs at least 2 vertices");
    if (!is_connected(g)) throw error(errc::disconnected, "needs a connected graph");
}

} // namespace detail

// Census of TU-subgraphs with n-1 edges whose unique tree contains each vertex,
// computed in one pass over all (n-1)-edge subsets. Entry v-1 belongs to vertex v.
inline std::vector<TUCensus> minor_census_all(const Graph& g) {
    detail::require_connected_nontrivial(g);
    const int n = g.vertex_count();
    check_subset_budget(g.edge_count(), n - 1);
    std::vector<TUCensus> per_vertex(static_cast<std::size_t>(n));
    detail::for_each_combination(g.edge_count(), n - 1, [&](const std::vector<int>& s) {
        Nm1Class cls = classify_nm1(spanning_subgraph(g, s));
        if (cls.kind == Nm1Kind::tree) {
            for (int v = 1; v <= n; ++v) ++per_vertex[static_cast<std::size_t>(v - 1)].by_components[0];
        } else if (cls.kind == Nm1Kind::tu) {
            for (int v : cls.tree_vertices)
                ++per_vertex[static_cast<std::size_t>(v - 1)].by_components[cls.odd_unicyclic];
        }
    });
    return per_vertex;
}

inline TUCensus minor_census(const Graph& g, int vertex) {
    detail::require_connected_nontrivial(g);
    if (vertex < 1 || vertex > g.vertex_count())
        throw error(errc::vertex_out_of_range,
                    "vertex " + std::to_string(vertex) + " outside 1.." + std::to_string(g.vertex_count()));
    return minor_census_all(g)[static_cast<std::size_t>(vertex - 1)];
}

// Census of spanning subgraphs with n edges whose components are all
// odd-unicyclic, keyed by component count k. Empty when m < n.
inline TUCensus det_census(const Graph& g) {
    TUCensus census;
    const int n = g.vertex_count();
    if (g.edge_count() < n) return census;
    check_subset_budget(g.edge_count(), n);
    detail::for_each_combination(g.edge_count(), n, [&](const std::vector<int>& s) {
        NClass cls = classify_n(spanning_subgraph(g, s));
        if (cls.kind == NKind::all_odd_unicyclic) ++census.by_components[cls.odd_unicyclic];
    });
    return census;
}

inline std::int64_t count_ous(const Graph& g) { return det_census(g).total(); }

// Brute-force spanning tree count: (n-1)-edge subsets inducing a connected
// acyclic spanning subgraph.
inline std::int64_t count_spanning_trees(const Graph& g) {
    const int n = g.vertex_count();
    if (g.edge_count() < n - 1) return 0;
    check_subset_budget(g.edge_count(), n - 1);
    std::int64_t count = 0;
    detail::for_each_combination(g.edge_count(), n - 1, [&](const std::vector<int>& s) {
        ComponentProfile profile = components(spanning_subgraph(g, s));
        if (profile.connected() && profile.components[0].kind == ComponentKind::tree) ++count;
    });
    return count;
}

struct SubdetCheck {
    Int det_value;
    std::vector<Int> predicted; // admissible values for this subgraph class
};

// det(N(i;S]) for |S| = n-1, or det(N[;S]) for |S| = n, together with the
// value set the classification theorems predict.
inline SubdetCheck incidence_subdet(const Graph& g, std::optional<int> vertex, const std::vector<int>& edge_set) {
    const int n = g.vertex_count();
    const int expected = vertex ? n - 1 : n;
    if (static_cast<int>(edge_set.size()) != expected)
        throw error(errc::arity_mismatch, "expected " + std::to_string(expected) + " edges in S, got " +
                                              std::to_string(edge_set.size()));
    IntMatrix incidence = incidence_matrix(g);
    Graph h = spanning_subgraph(g, edge_set);
    SubdetCheck check;
    if (vertex) {
        check.det_value = det(submatrix(incidence, Drop{{*vertex}}, Keep{edge_set}));
        Nm1Class cls = classify_nm1(h);
        switch (cls.kind) {
            case Nm1Kind::tree:
                check.predicted = {Int(-1), Int(1)};
                break;
            case Nm1Kind::even_cycle_spare_vertex:
            case Nm1Kind::odd_multicyclic_trees:
                check.predicted = {Int(0)};
                break;
            case Nm1Kind::tu: {
                bool on_tree = std::find(cls.tree_vertices.begin(), cls.tree_vertices.end(), *vertex) !=
                               cls.tree_vertices.end();
                if (on_tree) {
                    Int p = Int(1) << cls.odd_unicyclic;
                    check.predicted = {-p, p};
                } else {
                    check.predicted = {Int(0)};
                }
                break;
            }
        }
    } else {
        check.det_value = det(submatrix(incidence, Drop{{}}, Keep{edge_set}));
        NClass cls = classify_n(h);
        if (cls.kind == NKind::all_odd_unicyclic) {
            Int p = Int(1) << cls.odd_unicyclic;
            check.predicted = {-p, p};
        } else {
            check.predicted = {Int(0)};
        }
    }
    return check;
}

} // namespace tucensus
