#pragma once

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "tucensus/enumeration.hpp"
#include "tucensus/errors.hpp"
#include "tucensus/graph.hpp"
#include "tucensus/io.hpp"
#include "tucensus/matrix.hpp"
#include "tucensus/report.hpp"
#include "tucensus/verify.hpp"

namespace tucensus::cli {

// Exit codes: 0 all pass, 1 some verification failed, 2 bad input or usage,
// 3 budget exceeded. Worst wins across a batch, ordered 2 > 1 > 3 > 0.
namespace detail {

inline int worse(int a, int b) {
    static constexpr int rank[4] = {0, 2, 3, 1};
    return rank[a] >= rank[b] ? a : b;
}

inline std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : csv) {
        if (ch == ',') {
            if (!cur.empty()) parts.push_back(std::move(cur));
            cur.clear();
        } else if (ch != ' ') {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) parts.push_back(std::move(cur));
    return parts;
}

inline std::vector<GraphDocument> load_batch(const std::filesystem::path& path) {
    namespace fs = std::filesystem;
    if (fs::is_directory(path)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(path))
            if (entry.is_regular_file()) files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        if (files.empty()) throw error(errc::malformed, path.string() + ": no graph files in directory");
        std::vector<GraphDocument> docs;
        for (const fs::path& file : files) docs.push_back(load_graph_file(file));
        return docs;
    }
    if (is_graph6_path(path)) return parse_graph6_collection(read_file(path), path.stem().string());
    return {load_graph_file(path)};
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact checks for signless Laplacian subgraph census identities"};
    app.name("tucensus");
    app.require_subcommand(1);

    std::string file;
    std::string format_name = "text";
    std::string only_csv;
    std::string what;
    int vertex = 0;
    int max_n = 9;

    CLI::App* matrices = app.add_subcommand("matrices", "print D, A, N, L, Q for a graph");
    matrices->add_option("file", file, "edge-list or graph6 file")->required();

    CLI::App* minor = app.add_subcommand("minor", "principal minor det(Q(i)) for one vertex");
    minor->add_option("file", file, "edge-list or graph6 file")->required();
    minor->add_option("--vertex", vertex, "1-based vertex to delete")->required();

    CLI::App* census = app.add_subcommand("census", "subgraph census behind det(Q) or det(Q(i))");
    census->add_option("file", file, "edge-list or graph6 file")->required();
    CLI::Option* census_vertex = census->add_option("--vertex", vertex, "census for Q(i) instead of Q");

    CLI::App* verify = app.add_subcommand("verify", "check every applicable identity on one graph");
    verify->add_option("file", file, "edge-list or graph6 file")->required();
    verify->add_option("--only", only_csv, "comma-separated theorem ids");
    verify->add_option("--format", format_name, "json or text")->check(CLI::IsMember({"json", "text"}));

    CLI::App* batch = app.add_subcommand("batch", "verify every graph in a directory or graph6 file");
    batch->add_option("path", file, "directory of graph files, or graph6 file with one graph per line")->required();
    batch->add_option("--max-n", max_n, "skip graphs with more vertices (default 9)")->check(CLI::PositiveNumber);

    CLI::App* count = app.add_subcommand("count", "count spanning trees, odd cycles, or odd-unicyclic covers");
    count->add_option("file", file, "edge-list or graph6 file")->required();
    count->add_option("--what", what, "trees, odd-cycles, or ous")
        ->required()
        ->check(CLI::IsMember({"trees", "odd-cycles", "ous"}));

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("tucensus");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_storage.size());
    for (const std::string& s : argv_storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (matrices->parsed()) {
            const GraphDocument doc = load_graph_file(file);
            out << "graph " << doc.name << ": n = " << doc.graph.vertex_count() << ", m = " << doc.graph.edge_count()
                << "\n\n";
            out << "D =\n" << degree_matrix(doc.graph).to_string() << '\n';
            out << "A =\n" << adjacency_matrix(doc.graph).to_string() << '\n';
            out << "N =\n" << incidence_matrix(doc.graph).to_string() << '\n';
            out << "L =\n" << laplacian(doc.graph).to_string() << '\n';
            out << "Q =\n" << signless_laplacian(doc.graph).to_string() << '\n';
            return 0;
        }
        if (minor->parsed()) {
            const GraphDocument doc = load_graph_file(file);
            const IntMatrix q = signless_laplacian(doc.graph);
            const IntMatrix qi = principal_submatrix(q, vertex);
            out << "Q(" << vertex << ") =\n" << qi.to_string() << '\n';
            out << "det(Q(" << vertex << ")) = " << det(qi) << '\n';
            return 0;
        }
        if (census->parsed()) {
            const GraphDocument doc = load_graph_file(file);
            if (census_vertex->count() > 0) {
                const TUCensus c = minor_census(doc.graph, vertex);
                out << "spanning subgraphs of " << doc.name << " with " << (doc.graph.vertex_count() - 1)
                    << " edges, components trees or odd-unicyclic, vertex " << vertex << " in a tree\n";
                for (const auto& [components, cnt] : c.by_components) out << "c = " << components << ": " << cnt << '\n';
                out << "total: " << c.total() << '\n';
                out << "sum 4^c: " << c.weighted_sum() << '\n';
            } else {
                const TUCensus c = det_census(doc.graph);
                out << "spanning subgraphs of " << doc.name << " with " << doc.graph.vertex_count()
                    << " edges, every component odd-unicyclic\n";
                for (const auto& [components, cnt] : c.by_components) out << "k = " << components << ": " << cnt << '\n';
                out << "total: " << c.total() << '\n';
                out << "sum 4^k: " << c.weighted_sum() << '\n';
            }
            return 0;
        }
        if (verify->parsed()) {
            const GraphDocument doc = load_graph_file(file);
            const std::vector<std::string> only = detail::split_csv(only_csv);
            const auto& known = theorem::all_ids();
            for (const std::string& id : only)
                if (std::find(known.begin(), known.end(), id) == known.end())
                    throw error(errc::malformed, "unknown theorem id \"" + id + "\"");
            VerificationReport report = verify_all(doc.graph, only);
            report.name = doc.name;
            out << emit_report(report, report_format_from_name(format_name));
            return exit_code(report);
        }
        if (batch->parsed()) {
            const std::vector<GraphDocument> docs = detail::load_batch(file);
            int worst = 0;
            int passed = 0;
            int failed = 0;
            int budget = 0;
            int skipped = 0;
            for (const GraphDocument& doc : docs) {
                if (doc.graph.vertex_count() > max_n) {
                    ++skipped;
                    out << doc.name << ": skipped (n = " << doc.graph.vertex_count() << " exceeds --max-n " << max_n
                        << ")\n";
                    continue;
                }
                VerificationReport report = verify_all(doc.graph);
                report.name = doc.name;
                const int code = exit_code(report);
                worst = detail::worse(worst, code);
                if (code == 0) {
                    ++passed;
                    out << doc.name << ": pass\n";
                } else if (code == 1) {
                    ++failed;
                    std::string first;
                    std::string witness;
                    for (const VerificationItem& item : report.items)
                        if (!item.skipped && !item.passed) {
                            first = item.theorem;
                            witness = item.witness;
                            break;
                        }
                    out << doc.name << ": FAIL " << first;
                    if (!witness.empty()) out << " (" << witness << ")";
                    out << '\n';
                } else {
                    ++budget;
                    std::string reason;
                    for (const VerificationItem& item : report.items)
                        if (item.skipped && item.reason.find("budget") != std::string::npos) {
                            reason = item.reason;
                            break;
                        }
                    out << doc.name << ": budget-limited (" << reason << ")\n";
                }
            }
            out << "batch: " << docs.size() << " graphs, " << passed << " pass, " << failed << " fail, " << budget
                << " budget-limited, " << skipped << " skipped\n";
            return worst;
        }
        if (count->parsed()) {
            const GraphDocument doc = load_graph_file(file);
            if (what == "trees")
                out << count_spanning_trees(doc.graph) << '\n';
            else if (what == "odd-cycles")
                out << count_odd_cycles(doc.graph) << '\n';
            else
                out << count_ous(doc.graph) << '\n';
            return 0;
        }
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == errc::budget_exceeded ? 3 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace tucensus::cli
