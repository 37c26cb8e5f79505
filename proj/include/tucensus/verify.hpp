#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tucensus/enumeration.hpp"
#include "tucensus/graph.hpp"
#include "tucensus/matrix.hpp"
#include "tucensus/report.hpp"
#include "tucensus/spectral.hpp"

namespace tucensus {

namespace detail {

inline std::string int_list(const std::vector<Int>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += xs[i].str();
    }
    return out + "]";
}

inline std::string edge_set_string(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

// passed and witness from the accumulated cases; specific witnesses set by the
// builder win over the generic first-failing-case one.
inline void settle(VerificationItem& item) {
    item.passed = true;
    for (const VerificationCase& c : item.cases)
        if (!c.passed) {
            item.passed = false;
            if (item.witness.empty()) item.witness = c.label + ": " + c.lhs + " vs " + c.rhs;
            return;
        }
}

} // namespace detail

inline VerificationItem verify_minor_formula(const Graph& g, int i) {
    VerificationItem item;
    item.theorem = theorem::minor_formula;
    item.relation = "equals";
    Int rhs = minor_census(g, i).weighted_sum();
    Int lhs = det(principal_submatrix(signless_laplacian(g), i));
    item.lhs = lhs.str();
    item.rhs = rhs.str();
    item.passed = lhs == rhs;
    if (!item.passed) item.witness = "vertex " + std::to_string(i);
    return item;
}

inline VerificationItem verify_det_formula(const Graph& g) {
    VerificationItem item;
    item.theorem = theorem::det_formula;
    item.relation = "equals";
    Int lhs = det(signless_laplacian(g));
    Int rhs = det_census(g).weighted_sum();
    item.lhs = lhs.str();
    item.rhs = rhs.str();
    item.passed = lhs == rhs;
    return item;
}

inline VerificationItem verify_minor_vs_trees(const Graph& g, int i) {
    detail::require_connected_nontrivial(g);
    VerificationItem item;
    item.theorem = theorem::minor_vs_trees;
    item.relation = "geq";
    Int lhs = det(principal_submatrix(signless_laplacian(g), i));
    Int t = det(principal_submatrix(laplacian(g), 1));
    bool all_through_i = true;
    for (const auto& cycle : odd_cycles(g))
        if (std::find(cycle.begin(), cycle.end(), i) == cycle.end()) all_through_i = false;
    item.lhs = lhs.str();
    item.rhs = t.str();
    const std::string vs = std::to_string(i);
    item.cases.push_back({"det(Q(" + vs + ")) >= t(G)", lhs.str(), t.str(), lhs >= t});
    item.cases.push_back({"equality iff all odd cycles contain vertex " + vs, lhs == t ? "equal" : "strict",
                          all_through_i ? "all cycles through it" : "some cycle avoids it",
                          (lhs == t) == all_through_i});
    detail::settle(item);
    return item;
}

inline VerificationItem verify_eigen_sum(const Graph& g) {
    detail::require_connected_nontrivial(g);
    VerificationItem item;
    item.theorem = theorem::eigen_sum;
    item.relation = "geq";
    const int n = g.vertex_count();
    IntMatrix q = signless_laplacian(g);
    Int sum = 0;
    for (int i = 1; i <= n; ++i) sum += det(principal_submatrix(q, i));
    Int nt = Int(n) * det(principal_submatrix(laplacian(g), 1));
    item.lhs = sum.str();
    item.rhs = nt.str();
    item.cases.push_back({"sum of det(Q(i)) >= n*t(G)", sum.str(), nt.str(), sum >= nt});

    const bool sharp = is_odd_cycle_graph(g) || is_bipartite(g).bipartite;
    item.cases.push_back({"equality iff odd cycle graph or bipartite", sum == nt ? "equal" : "strict",
                          sharp ? "sharp case" : "generic case", (sum == nt) == sharp});

    // Float route: the (n-1)-th elementary symmetric function of Q's
    // eigenvalues should reproduce the exact sum within relative 1e-6.
    Spectrum lambda = signless_spectrum(g);
    std::vector<double> sym(static_cast<std::size_t>(n) + 1, 0.0);
    sym[0] = 1.0;
    for (double value : lambda.values)
        for (std::size_t k = sym.size() - 1; k >= 1; --k) sym[k] += value * sym[k - 1];
    const double from_eigen = sym[static_cast<std::size_t>(n - 1)];
    const double exact = sum.convert_to<double>();
    const bool close = std::abs(from_eigen - exact) <= 1e-6 * std::max(1.0, std::abs(exact));
    item.cases.push_back(
        {"e_(n-1) of Q eigenvalues matches the exact sum", format_significant(from_eigen), sum.str(), close});
    detail::settle(item);
    return item;
}

inline VerificationItem verify_oc_bound(const Graph& g) {
    VerificationItem item;
    item.theorem = theorem::oc_bound;
    item.relation = "geq";
    Int lhs = det(signless_laplacian(g));
    const std::int64_t oc = count_odd_cycles(g);
    Int rhs = Int(4) * oc;
    item.lhs = lhs.str();
    item.rhs = rhs.str();
    item.cases.push_back({"det(Q) >= 4*oc(G)", lhs.str(), rhs.str(), lhs >= rhs});
    const bool sharp = is_bipartite(g).bipartite || is_odd_unicyclic_graph(g);
    item.cases.push_back({"equality iff bipartite or odd-unicyclic", lhs == rhs ? "equal" : "strict",
                          sharp ? "sharp case" : "generic case", (lhs == rhs) == sharp});
    detail::settle(item);
    return item;
}

inline VerificationItem verify_ous_bound(const Graph& g) {
    VerificationItem item;
    item.theorem = theorem::ous_bound;
    item.relation = "geq";
    Int lhs = det(signless_laplacian(g));
    Int rhs = Int(4) * count_ous(g);
    item.lhs = lhs.str();
    item.rhs = rhs.str();
    item.cases.push_back({"det(Q) >= 4*ous(G)", lhs.str(), rhs.str(), lhs >= rhs});
    detail::settle(item);
    return item;
}

inline VerificationItem verify_subdet_classification(const Graph& g) {
    detail::require_connected_nontrivial(g);
    const int n = g.vertex_count();
    const int m = g.edge_count();
    // Work = one determinant per (vertex, (n-1)-subset) pair plus one per n-subset.
    Int work = binomial(m, n - 1) * n + binomial(m, n);
    if (work > subset_budget)
        throw error(errc::budget_exceeded,
                    "subdeterminant sweep needs " + work.str() + " checks, cap " + std::to_string(subset_budget));

    VerificationItem item;
    item.theorem = theorem::subdet_classification;
    item.relation = "memberOf";
    IntMatrix incidence = incidence_matrix(g);

    std::int64_t minor_checks = 0, minor_violations = 0;
    detail::for_each_combination(m, n - 1, [&](const std::vector<int>& s) {
        const Nm1Class cls = classify_nm1(spanning_subgraph(g, s));
        for (int i = 1; i <= n; ++i) {
            const Int value = det(submatrix(incidence, Drop{{i}}, Keep{s}));
            bool member = false;
            switch (cls.kind) {
                case Nm1Kind::tree:
                    member = value == 1 || value == -1;
                    break;
                case Nm1Kind::even_cycle_spare_vertex:
                case Nm1Kind::odd_multicyclic_trees:
                    member = value == 0;
                    break;
                case Nm1Kind::tu: {
                    const bool on_tree = std::find(cls.tree_vertices.begin(), cls.tree_vertices.end(), i) !=
                                         cls.tree_vertices.end();
                    if (on_tree) {
                        Int p = Int(1) << cls.odd_unicyclic;
                        member = value == p || value == -p;
                    } else {
                        member = value == 0;
                    }
                    break;
                }
            }
            ++minor_checks;
            if (!member) {
                ++minor_violations;
                if (item.witness.empty())
                    item.witness = "i=" + std::to_string(i) + ", S=" + detail::edge_set_string(s) +
                                   ": det=" + value.str();
            }
        }
    });
    item.cases.push_back({"det(N(i;S]) in predicted set over " + std::to_string(minor_checks) + " pairs",
                          std::to_string(minor_violations) + " violations", "0 violations", minor_violations == 0});

    std::int64_t full_checks = 0, full_violations = 0;
    if (m >= n) {
        detail::for_each_combination(m, n, [&](const std::vector<int>& s) {
            const NClass cls = classify_n(spanning_subgraph(g, s));
            const Int value = det(submatrix(incidence, Drop{{}}, Keep{s}));
            bool member;
            if (cls.kind == NKind::all_odd_unicyclic) {
                Int p = Int(1) << cls.odd_unicyclic;
                member = value == p || value == -p;
            } else {
                member = value == 0;
            }
            ++full_checks;
            if (!member) {
                ++full_violations;
                if (item.witness.empty()) item.witness = "S=" + detail::edge_set_string(s) + ": det=" + value.str();
            }
        });
    }
    item.cases.push_back({"det(N[S]) in {0, +-2^k} over " + std::to_string(full_checks) + " subsets",
                          std::to_string(full_violations) + " violations", "0 violations", full_violations == 0});

    item.lhs = std::to_string(minor_checks + full_checks) + " determinants";
    item.rhs = "all within predicted sets";
    detail::settle(item);
    return item;
}

inline VerificationItem verify_mtt(const Graph& g) {
    VerificationItem item;
    item.theorem = theorem::mtt;
    item.relation = "equals";
    SpanningTreeTriple triple = mtt_eigen_form(g);
    const std::string enumerated = std::to_string(triple.t_enumerated);
    item.lhs = enumerated;
    item.rhs = triple.t_determinant.str();
    IntMatrix l = laplacian(g);
    for (int i = 1; i <= g.vertex_count(); ++i) {
        Int minor = det(principal_submatrix(l, i));
        item.cases.push_back(
            {"det(L(" + std::to_string(i) + ")) = t(G)", minor.str(), enumerated, minor == triple.t_enumerated});
    }
    const double target = static_cast<double>(triple.t_enumerated);
    const bool close = std::abs(triple.t_eigen - target) <= 1e-6 * std::max(1.0, target);
    item.cases.push_back(
        {"(mu_2*...*mu_n)/n = t(G)", format_significant(triple.t_eigen), enumerated, close});
    detail::settle(item);
    return item;
}

namespace detail {

// Aggregated per-vertex items for verify_all: one enumeration pass feeds every
// vertex's census, and the odd-cycle list is computed once.
inline VerificationItem minor_formula_item(const Graph& g) {
    VerificationItem item;
    item.theorem = theorem::minor_formula;
    item.relation = "equals";
    std::vector<TUCensus> censuses = minor_census_all(g);
    IntMatrix q = signless_laplacian(g);
    std::vector<Int> lhs_values, rhs_values;
    for (int i = 1; i <= g.vertex_count(); ++i) {
        Int lhs = det(principal_submatrix(q, i));
        Int rhs = censuses[static_cast<std::size_t>(i - 1)].weighted_sum();
        item.cases.push_back({"i=" + std::to_string(i), lhs.str(), rhs.str(), lhs == rhs});
        lhs_values.push_back(lhs);
        rhs_values.push_back(rhs);
    }
    item.lhs = int_list(lhs_values);
    item.rhs = int_list(rhs_values);
    settle(item);
    return item;
}

inline VerificationItem minor_vs_trees_item(const Graph& g) {
    require_connected_nontrivial(g);
    VerificationItem item;
    item.theorem = theorem::minor_vs_trees;
    item.relation = "geq";
    IntMatrix q = signless_laplacian(g);
    Int t = det(principal_submatrix(laplacian(g), 1));
    const std::vector<std::vector<int>> cycles = odd_cycles(g);
    std::vector<Int> minors;
    for (int i = 1; i <= g.vertex_count(); ++i) {
        Int lhs = det(principal_submatrix(q, i));
        bool all_through_i = true;
        for (const auto& cycle : cycles)
            if (std::find(cycle.begin(), cycle.end(), i) == cycle.end()) all_through_i = false;
        const bool ok = lhs >= t && (lhs == t) == all_through_i;
        item.cases.push_back({"i=" + std::to_string(i) + (all_through_i ? " (on every odd cycle)" : ""), lhs.str(),
                              t.str(), ok});
        minors.push_back(lhs);
    }
    item.lhs = int_list(minors);
    item.rhs = t.str();
    settle(item);
    return item;
}

} // namespace detail

inline VerificationReport verify_all(const Graph& g, const std::vector<std::string>& only = {}) {
    VerificationReport report;
    report.name = "graph";
    report.summary.n = g.vertex_count();
    report.summary.m = g.edge_count();
    report.summary.bipartite = is_bipartite(g).bipartite;
    report.summary.spanning_trees = det(principal_submatrix(laplacian(g), 1)).str();
    try {
        report.summary.odd_cycles = count_odd_cycles(g);
    } catch (const error& e) {
        if (e.code() != errc::budget_exceeded) throw;
    }
    try {
        report.summary.ous = count_ous(g);
    } catch (const error& e) {
        if (e.code() != errc::budget_exceeded) throw;
    }

    auto wanted = [&](const char* id) {
        return only.empty() || std::find(only.begin(), only.end(), id) != only.end();
    };
    auto add = [&](const char* id, const std::function<VerificationItem()>& build) {
        if (!wanted(id)) return;
        const auto start = std::chrono::steady_clock::now();
        VerificationItem item;
        try {
            item = build();
        } catch (const error& e) {
            item = {};
            item.theorem = id;
            item.skipped = true;
            item.passed = true; // vacuous
            switch (e.code()) {
                case errc::budget_exceeded:
                    item.reason = "budget exceeded: " + e.message();
                    break;
                case errc::disconnected:
                    item.reason = "requires connected graph";
                    break;
                case errc::too_small:
                    item.reason = "requires at least 2 vertices";
                    break;
                default:
                    throw;
            }
        }
        item.elapsed_us =
            std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
        report.items.push_back(std::move(item));
    };

    add(theorem::minor_formula, [&] { return detail::minor_formula_item(g); });
    add(theorem::det_formula, [&] { return verify_det_formula(g); });
    add(theorem::mtt, [&] { return verify_mtt(g); });
    add(theorem::minor_vs_trees, [&] { return detail::minor_vs_trees_item(g); });
    add(theorem::eigen_sum, [&] { return verify_eigen_sum(g); });
    add(theorem::oc_bound, [&] { return verify_oc_bound(g); });
    add(theorem::ous_bound, [&] { return verify_ous_bound(g); });
    add(theorem::subdet_classification, [&] { return verify_subdet_classification(g); });
    add(theorem::bipartite_spectra, [&] { return bipartite_spectral_check(g); });
    add(theorem::charpoly, [&] { return charpoly_identity_check(g); });
    return report;
}

// 1 on any failed item, else 3 on any budget skip, else 0. Input errors never
// reach a report; the CLI maps them to 2 before verification starts.
inline int exit_code(const VerificationReport& report) {
    for (const VerificationItem& item : report.items)
        if (!item.skipped && !item.passed) return 1;
    if (report.any_budget_skip()) return 3;
    return 0;
}

} // namespace tucensus
