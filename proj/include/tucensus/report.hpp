#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tucensus {

// Frozen theorem identifiers; downstream diffs depend on these strings.
namespace theorem {
inline constexpr const char* minor_formula = "MINOR_FORMULA";
inline constexpr const char* det_formula = "DET_FORMULA";
inline constexpr const char* mtt = "MTT";
inline constexpr const char* oc_bound = "OC_BOUND";
inline constexpr const char* ous_bound = "OUS_BOUND";
inline constexpr const char* minor_vs_trees = "MINOR_VS_TREES";
inline constexpr const char* eigen_sum = "EIGEN_SUM";
inline constexpr const char* bipartite_spectra = "BIPARTITE_SPECTRA";
inline constexpr const char* subdet_classification = "SUBDET_CLASSIFICATION";
inline constexpr const char* charpoly = "CHARPOLY";

inline const std::vector<std::string>& all_ids() {
    static const std::vector<std::string> ids = {
        minor_formula, det_formula,  mtt,        minor_vs_trees,    eigen_sum,
        oc_bound,      ous_bound,    subdet_classification, bipartite_spectra, charpoly,
    };
    return ids;
}
} // namespace theorem

// One per-vertex (or otherwise indexed) instance inside an aggregated item.
struct VerificationCase {
    std::string label; // e.g. "i=1"
    std::string lhs;
    std::string rhs;
    bool passed = false;
};

struct VerificationItem {
    std::string theorem;
    std::string relation; // "equals" | "geq" | "memberOf"
    std::string lhs;
    std::string rhs;
    bool passed = false;
    bool skipped = false;
    std::string reason;  // present iff skipped
    std::string witness; // present iff failed
    std::vector<VerificationCase> cases;
    std::int64_t elapsed_us = 0;

    bool ok() const { return skipped || passed; }
};

struct GraphSummary {
    int n = 0;
    int m = 0;
    bool bipartite = false;
    std::string spanning_trees;            // decimal, via det(L(1))
    std::optional<std::int64_t> odd_cycles; // absent when over budget
    std::optional<std::int64_t> ous;        // absent when over budget
};

struct VerificationReport {
    std::string name;
    GraphSummary summary;
    std::vector<VerificationItem> items;

    bool all_passed() const {
        for (const auto& item : items)
            if (!item.ok()) return false;
        return true;
    }
    bool any_budget_skip() const {
        for (const auto& item : items)
            if (item.skipped && item.reason.find("budget") != std::string::npos) return true;
        return false;
    }
};

} // namespace tucensus
