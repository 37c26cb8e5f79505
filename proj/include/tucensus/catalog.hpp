#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "tucensus/errors.hpp"
#include "tucensus/graph.hpp"

namespace tucensus {
namespace detail {

// Adjacency masks index the upper triangle column-major: pair (i,j) with
// 0 <= i < j gets bit j(j-1)/2 + i, the graph6 bit order.
inline int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

inline std::vector<std::vector<int>> perm_bit_tables(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> tables;
    const int bits = n * (n - 1) / 2;
    do {
        std::vector<int> table(static_cast<std::size_t>(bits));
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                int pi = perm[static_cast<std::size_t>(i)];
                int pj = perm[static_cast<std::size_t>(j)];
                if (pi > pj) std::swap(pi, pj);
                table[static_cast<std::size_t>(pair_bit(i, j))] = pair_bit(pi, pj);
            }
        tables.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return tables;
}

inline std::uint32_t canonical_mask(std::uint32_t mask, const std::vector<std::vector<int>>& tables) {
    std::uint32_t best = ~0u;
    for (const auto& table : tables) {
        std::uint32_t permuted = 0;
        std::uint32_t bits = mask;
        while (bits) {
            int b = std::countr_zero(bits);
            bits &= bits - 1;
            permuted |= 1u << table[static_cast<std::size_t>(b)];
        }
        best = std::min(best, permuted);
    }
    return best;
}

inline Graph graph_from_mask(int n, std::uint32_t mask) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask & (1u << pair_bit(i, j))) edges.emplace_back(i + 1, j + 1);
    return Graph::build(n, edges);
}

} // namespace detail

inline constexpr int catalog_max_n = 7;

// All simple graphs on n vertices up to isomorphism, grown a vertex at a time
// from the (n-1)-vertex catalog and deduplicated by canonical adjacency mask.
inline const std::vector<Graph>& all_graphs(int n) {
    if (n < 1 || n > catalog_max_n)
        throw error(errc::index_out_of_range, "catalog supports 1 <= n <= " + std::to_string(catalog_max_n));
    static std::map<int, std::vector<Graph>> cache = [] {
        std::map<int, std::vector<Graph>> built;
        std::vector<std::uint32_t> masks = {0}; // n = 1
        built[1] = {detail::graph_from_mask(1, 0)};
        for (int n_cur = 2; n_cur <= catalog_max_n; ++n_cur) {
            auto tables = detail::perm_bit_tables(n_cur);
            std::set<std::uint32_t> canon;
            const int new_vertex = n_cur - 1;
            for (std::uint32_t base : masks) {
                for (std::uint32_t nb = 0; nb < (1u << new_vertex); ++nb) {
                    std::uint32_t mask = base;
                    for (int i = 0; i < new_vertex; ++i)
                        if (nb & (1u << i)) mask |= 1u << detail::pair_bit(i, new_vertex);
                    canon.insert(detail::canonical_mask(mask, tables));
                }
            }
            masks.assign(canon.begin(), canon.end());
            std::vector<Graph>& out = built[n_cur];
            out.reserve(masks.size());
            for (std::uint32_t mask : masks) out.push_back(detail::graph_from_mask(n_cur, mask));
        }
        return built;
    }();
    return cache.at(n);
}

inline const std::vector<Graph>& connected_graphs(int n) {
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<Graph> conn;
        for (const Graph& g : all_graphs(n))
            if (is_connected(g)) conn.push_back(g);
        it = cache.emplace(n, std::move(conn)).first;
    }
    return it->second;
}

} // namespace tucensus
