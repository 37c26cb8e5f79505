#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "tucensus/errors.hpp"
#include "tucensus/graph.hpp"
#include "tucensus/report.hpp"

namespace tucensus {

struct GraphDocument {
    std::string name;
    Graph graph;
    std::string source_format; // "edgelist" or "graph6"
};

namespace detail {

inline std::string strip_comment_and_trim(const std::string& line) {
    const auto hash = line.find('#');
    std::string s = hash == std::string::npos ? line : line.substr(0, hash);
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

inline error line_error(errc code, int lineno, const std::string& what) {
    return error(code, "line " + std::to_string(lineno) + ": " + what);
}

} // namespace detail

// Edge-list format: a header "n m", then exactly m lines "u v" with 1-based
// endpoints. '#' starts a comment; blank lines are ignored. File order is the
// edge labeling, so round trips preserve labels.
inline GraphDocument parse_edgelist(const std::string& text, const std::string& name = "graph") {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool have_header = false;
    long long n = 0;
    long long m = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = detail::strip_comment_and_trim(raw);
        if (line.empty()) continue;
        std::istringstream fields(line);
        if (!have_header) {
            if (!(fields >> n >> m) || !(fields >> std::ws).eof())
                throw detail::line_error(errc::malformed, lineno, "expected header \"n m\", got \"" + line + "\"");
            if (n < 1) throw detail::line_error(errc::malformed, lineno, "vertex count must be at least 1");
            if (m < 0) throw detail::line_error(errc::malformed, lineno, "edge count must be nonnegative");
            have_header = true;
            continue;
        }
        long long u = 0;
        long long v = 0;
        if (!(fields >> u >> v) || !(fields >> std::ws).eof())
            throw detail::line_error(errc::malformed, lineno, "expected edge \"u v\", got \"" + line + "\"");
        if (static_cast<long long>(edges.size()) == m)
            throw error(errc::count_mismatch,
                        "line " + std::to_string(lineno) + ": more edge lines than the declared m = " + std::to_string(m));
        if (u < 1 || u > n || v < 1 || v > n)
            throw detail::line_error(errc::vertex_out_of_range, lineno,
                                     "endpoint outside 1.." + std::to_string(n) + " in \"" + line + "\"");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (!have_header) throw error(errc::malformed, "missing \"n m\" header line");
    if (static_cast<long long>(edges.size()) != m)
        throw error(errc::count_mismatch, "header declares " + std::to_string(m) + " edges, file has " +
                                              std::to_string(edges.size()));
    GraphDocument doc;
    doc.name = name;
    doc.graph = Graph::build(static_cast<int>(n), edges);
    doc.source_format = "edgelist";
    return doc;
}

inline std::string serialize_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

// graph6 short form: byte n+63, then the upper triangle column-major
// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed big-endian six bits per
// printable byte, each offset by 63. Decoded edge order is the bit order.
inline Graph parse_graph6_line(const std::string& line) {
    static const std::string header = ">>graph6<<";
    std::string s = line;
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw error(errc::malformed, "empty graph6 string");
    const int head = static_cast<unsigned char>(s[0]);
    if (head == 126) throw error(errc::malformed, "long-form graph6 (n >= 63) is not supported");
    if (head < 63 || head > 126)
        throw error(errc::bad_checksum_char, "size byte " + std::to_string(head) + " outside printable range 63..126");
    const int n = head - 63;
    const long long bits_needed = static_cast<long long>(n) * (n - 1) / 2;
    const long long chars_needed = (bits_needed + 5) / 6;
    const long long data_chars = static_cast<long long>(s.size()) - 1;
    if (data_chars < chars_needed)
        throw error(errc::truncated_bits, "n = " + std::to_string(n) + " needs " + std::to_string(chars_needed) +
                                              " data bytes, got " + std::to_string(data_chars));
    if (data_chars > chars_needed)
        throw error(errc::malformed, std::to_string(data_chars - chars_needed) + " trailing bytes after " +
                                         std::to_string(chars_needed) + " data bytes");
    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    int i = 0;
    int j = 1;
    for (long long idx = 0; idx < data_chars; ++idx) {
        const int c = static_cast<unsigned char>(s[static_cast<std::size_t>(1 + idx)]);
        if (c < 63 || c > 126)
            throw error(errc::bad_checksum_char,
                        "data byte " + std::to_string(c) + " at position " + std::to_string(1 + idx) +
                            " outside printable range 63..126");
        const int value = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            const bool set = (value >> b) & 1;
            if (bit >= bits_needed) {
                if (set) throw error(errc::malformed, "nonzero padding bits");
                continue;
            }
            if (set) edges.emplace_back(i + 1, j + 1);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph::build(n, edges);
}

inline GraphDocument parse_graph6(const std::string& text, const std::string& name = "graph") {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const auto end = line.find_last_not_of(" \t\r");
        GraphDocument doc;
        doc.name = name;
        doc.graph = parse_graph6_line(line.substr(begin, end - begin + 1));
        doc.source_format = "graph6";
        return doc;
    }
    throw error(errc::malformed, "no graph6 line found");
}

// One graph per nonblank line; names are "<base>:<lineno>".
inline std::vector<GraphDocument> parse_graph6_collection(const std::string& text, const std::string& base_name) {
    std::vector<GraphDocument> docs;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const auto end = line.find_last_not_of(" \t\r");
        GraphDocument doc;
        doc.name = base_name + ":" + std::to_string(lineno);
        try {
            doc.graph = parse_graph6_line(line.substr(begin, end - begin + 1));
        } catch (const error& e) {
            throw error(e.code(), base_name + " line " + std::to_string(lineno) + ": " + e.message());
        }
        doc.source_format = "graph6";
        docs.push_back(std::move(doc));
    }
    if (docs.empty()) throw error(errc::malformed, base_name + ": no graph6 lines found");
    return docs;
}

inline std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n >= 63) throw error(errc::malformed, "graph6 short form supports n < 63, got n = " + std::to_string(n));
    std::string out(1, static_cast<char>(63 + n));
    int value = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | (g.adjacent(i + 1, j + 1) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + value));
                value = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>(63 + (value << (6 - filled))));
    return out;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::malformed, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline bool is_graph6_path(const std::filesystem::path& path) {
    const std::string ext = path.extension().string();
    return ext == ".g6" || ext == ".graph6";
}

inline GraphDocument load_graph_file(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    const std::string name = path.stem().string();
    return is_graph6_path(path) ? parse_graph6(text, name) : parse_edgelist(text, name);
}

enum class ReportFormat { json, text };

inline ReportFormat report_format_from_name(const std::string& name) {
    if (name == "json") return ReportFormat::json;
    if (name == "text") return ReportFormat::text;
    throw error(errc::malformed, "unknown report format \"" + name + "\" (expected json or text)");
}

inline std::string theorem_description(const std::string& id) {
    if (id == theorem::minor_formula) return "det(Q(i)) = sum of 4^c(H) over spanning H with n-1 edges whose tree part covers i";
    if (id == theorem::det_formula) return "det(Q) = sum of 4^c(H) over spanning H with n edges, all components odd-unicyclic";
    if (id == theorem::mtt) return "t(G) = det(L(i)) = (mu_2 * ... * mu_n) / n";
    if (id == theorem::minor_vs_trees) return "det(Q(i)) >= t(G), with equality iff every odd cycle passes through i";
    if (id == theorem::eigen_sum) return "(1/n) * sum_i det(Q(i)) >= t(G), with equality iff an odd cycle graph or bipartite";
    if (id == theorem::oc_bound) return "det(Q)/4 >= oc(G), with equality iff bipartite or odd-unicyclic";
    if (id == theorem::ous_bound) return "det(Q) >= 4 * ous(G)";
    if (id == theorem::subdet_classification) return "det(N(i;S]) in {0, +-2^c} and det(N[S]) in {0, +-2^k}";
    if (id == theorem::bipartite_spectra) return "L and Q have the same spectrum iff the graph is bipartite";
    if (id == theorem::charpoly) return "a_1 = -2m, a_2 = 2m^2 - m - (1/2) sum d_i^2, a_n = (-1)^n det(Q)";
    return id;
}

namespace detail {

inline nlohmann::ordered_json report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["name"] = report.name;
    nlohmann::ordered_json graph;
    graph["n"] = report.summary.n;
    graph["m"] = report.summary.m;
    graph["bipartite"] = report.summary.bipartite;
    graph["spanningTrees"] = report.summary.spanning_trees;
    if (report.summary.odd_cycles) graph["oddCycles"] = std::to_string(*report.summary.odd_cycles);
    if (report.summary.ous) graph["ous"] = std::to_string(*report.summary.ous);
    j["graph"] = graph;
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const VerificationItem& item : report.items) {
        nlohmann::ordered_json o;
        o["theorem"] = item.theorem;
        if (item.skipped) {
            o["skipped"] = true;
            o["reason"] = item.reason;
        } else {
            o["relation"] = item.relation;
            o["lhs"] = item.lhs;
            o["rhs"] = item.rhs;
            o["passed"] = item.passed;
            if (!item.witness.empty()) o["witness"] = item.witness;
            if (!item.cases.empty()) {
                nlohmann::ordered_json cases = nlohmann::ordered_json::array();
                for (const VerificationCase& c : item.cases) {
                    nlohmann::ordered_json cj;
                    cj["label"] = c.label;
                    cj["lhs"] = c.lhs;
                    cj["rhs"] = c.rhs;
                    cj["passed"] = c.passed;
                    cases.push_back(std::move(cj));
                }
                o["cases"] = std::move(cases);
            }
        }
        o["elapsedMicros"] = item.elapsed_us;
        items.push_back(std::move(o));
    }
    j["items"] = std::move(items);
    j["allPassed"] = report.all_passed();
    return j;
}

inline std::string relation_symbol(const std::string& relation) {
    if (relation == "equals") return "=";
    if (relation == "geq") return ">=";
    if (relation == "memberOf") return "in";
    return relation;
}

inline std::string report_to_text(const VerificationReport& report) {
    std::ostringstream out;
    out << "graph " << report.name << ": n = " << report.summary.n << ", m = " << report.summary.m << ", "
        << (report.summary.bipartite ? "bipartite" : "not bipartite") << '\n';
    out << "t(G) = " << report.summary.spanning_trees;
    if (report.summary.odd_cycles) out << ", oc(G) = " << *report.summary.odd_cycles;
    if (report.summary.ous) out << ", ous(G) = " << *report.summary.ous;
    out << "\n\n";
    for (const VerificationItem& item : report.items) {
        const char* status = item.skipped ? "SKIP" : (item.passed ? "PASS" : "FAIL");
        out << status << ' ' << item.theorem << "\n     " << theorem_description(item.theorem) << '\n';
        if (item.skipped) {
            out << "     skipped: " << item.reason << '\n';
            continue;
        }
        out << "     " << item.lhs << ' ' << relation_symbol(item.relation) << ' ' << item.rhs << '\n';
        for (const VerificationCase& c : item.cases)
            out << "       " << (c.passed ? "ok  " : "FAIL") << ' ' << c.label << ": " << c.lhs << " vs " << c.rhs
                << '\n';
        if (!item.witness.empty()) out << "     witness: " << item.witness << '\n';
    }
    out << '\n' << (report.all_passed() ? "all items passed" : "FAILURES PRESENT") << '\n';
    return out.str();
}

} // namespace detail

// JSON is emitted compact; exact integers ride as decimal strings so that
// arbitrary precision survives any JSON parser.
inline std::string emit_report(const VerificationReport& report, ReportFormat format) {
    if (format == ReportFormat::json) return detail::report_to_json(report).dump() + "\n";
    return detail::report_to_text(report);
}

} // namespace tucensus
