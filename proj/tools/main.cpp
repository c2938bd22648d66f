// cubepal: construct, verify, and search vertex-distinguishing edge colorings
// of hypercubes, plus sequence-irregularity queries on small ordered graphs.
//
// Exit codes: 0 decisive/verified, 1 verification failed, 2 invalid request,
// 3 I/O or format error, 4 budget exhausted (Unknown).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cubepal/constructions.hpp"
#include "cubepal/document.hpp"
#include "cubepal/errors.hpp"
#include "cubepal/hypercube.hpp"
#include "cubepal/search.hpp"
#include "cubepal/seqirr.hpp"
#include "cubepal/verify.hpp"

namespace {

using namespace cubepal;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kBadRequest = 2;
constexpr int kIoOrFormat = 3;
constexpr int kUnknown = 4;

std::string sequence_text(std::span<const Color> seq) {
    std::string out = "[";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(seq[i]);
    }
    return out + "]";
}

std::string edge_text(const EdgeRef& e) {
    return "(v=" + std::to_string(e.canonical_vertex) +
           ", dim=" + std::to_string(e.dimension) + ")";
}

Mode parse_mode(const std::string& text) {
    if (text == "general") return Mode::General;
    if (text == "proper") return Mode::Proper;
    throw DomainError("mode must be 'general' or 'proper', got '" + text + "'");
}

struct ConstructArgs {
    std::string mode;
    int n = 0;
    std::string out;
};

int run_construct(const ConstructArgs& args) {
    const Mode mode = parse_mode(args.mode);
    Coloring coloring = [&] {
        if (mode == Mode::General) return general_two_coloring(args.n);
        if (args.n >= 2 && args.n <= 4) return proper_table(args.n);
        return proper_n_coloring(args.n);
    }();

    const Verdict distinct = distinguishes(coloring);
    const Verdict proper = is_proper(coloring);
    const std::uint64_t vertices = std::uint64_t{1} << coloring.n;
    std::cout << "n=" << coloring.n << " k=" << coloring.k << " mode=" << args.mode
              << " edges=" << coloring.colors.size() << "\n";
    std::cout << "palettes: " << vertices << ", distinct: " << (distinct.ok ? "yes" : "no")
              << "\n";
    std::cout << "proper: " << (proper.ok ? "yes" : "no") << "\n";

    ColoringDocument doc;
    doc.coloring = std::move(coloring);
    doc.provenance = "construct --mode " + args.mode + " --n " + std::to_string(args.n);
    write_document(args.out, doc);
    std::cout << "wrote: " << args.out << "\n";
    return kOk;
}

struct VerifyArgs {
    std::string in;
    bool require_proper = false;
    bool verbose = false;
};

int run_verify(const VerifyArgs& args) {
    const ColoringDocument doc = read_document(args.in);
    const Coloring& c = doc.coloring;
    std::cout << "n=" << c.n << " k=" << c.k << " edges=" << c.colors.size() << "\n";

    const Verdict distinct = distinguishes(c);
    std::cout << "distinct: " << (distinct.ok ? "yes" : "no") << "\n";
    if (!distinct.ok) {
        const auto& [u, v] = std::get<VertexPair>(*distinct.witness);
        std::cout << "witness: (" << u << ", " << v << ")\n";
        if (args.verbose)
            for (const auto& group : palette_collision_groups(c)) {
                std::cout << "collision group:";
                for (Vertex m : group) std::cout << " " << m;
                std::cout << " palette " << sequence_text(palette(c, group.front())) << "\n";
            }
        std::cout << "result: FAIL\n";
        return kVerifyFailed;
    }

    const Verdict proper = is_proper(c);
    std::cout << "proper: " << (proper.ok ? "yes" : "no") << "\n";
    if (args.require_proper && !proper.ok) {
        const auto& [e1, e2] = std::get<EdgePair>(*proper.witness);
        std::cout << "witness: " << edge_text(e1) << " and " << edge_text(e2)
                  << " share a color\n";
        std::cout << "result: FAIL\n";
        return kVerifyFailed;
    }
    std::cout << "result: OK\n";
    return kOk;
}

struct SearchArgs {
    std::string mode;
    int n = 0;
    int k = 0;
    bool minimize = false;
    int k_max = 0;
    std::string out;
    Budget budget;
    SearchOptions options;
    unsigned threads = 1;
};

void write_witness(const std::string& path, const Coloring& witness,
                   const std::string& provenance) {
    if (path.empty()) return;
    ColoringDocument doc;
    doc.coloring = witness;
    doc.provenance = provenance;
    write_document(path, doc);
    std::cout << "wrote: " << path << "\n";
}

int run_search(const SearchArgs& args) {
    const Mode mode = parse_mode(args.mode);
    if (args.minimize) {
        const MinColorsOutcome result =
            min_colors(args.n, mode, args.k_max, args.budget, args.options);
        for (const auto& [k, status] : result.probes)
            std::cout << "probe k=" << k << ": " << to_string(status) << "\n";
        std::cout << "nodes: " << result.nodes_explored << "\n";
        if (result.status == Status::Unknown) {
            std::cout << "status: Unknown\n";
            return kUnknown;
        }
        if (result.status == Status::Infeasible) {
            std::cout << "no feasible k within the probed range\n";
            return kOk;
        }
        std::cout << "k_min = " << result.k_min << "\n";
        write_witness(args.out, *result.witness,
                      "search --mode " + args.mode + " --n " + std::to_string(args.n) +
                          " --min");
        return kOk;
    }

    const SearchOutcome outcome = feasible(args.n, mode, args.k, args.budget, args.options);
    std::cout << "status: " << to_string(outcome.status) << "\n";
    std::cout << "nodes: " << outcome.nodes_explored << "\n";
    // timing is inherently nonreproducible, so the canonical-output mode
    // omits it
    if (!args.options.deterministic_witness)
        std::cout << "elapsed_ms: " << outcome.elapsed.count() << "\n";
    if (outcome.status == Status::Unknown) return kUnknown;
    if (outcome.witness) {
        if (args.out.empty() && outcome.witness->colors.size() <= 512)
            std::cout << "witness: " << sequence_text(outcome.witness->colors) << "\n";
        write_witness(args.out, *outcome.witness,
                      "search --mode " + args.mode + " --n " + std::to_string(args.n) +
                          " --k " + std::to_string(args.k));
    }
    return kOk;
}

int run_bound(const std::string& graph_path) {
    const EdgeOrderedGraph g = parse_edge_list_file(graph_path);
    std::cout << "M_G = " << mg_bound(g) << "\n";
    return kOk;
}

struct SeqirrArgs {
    std::string graph;
    bool specific = false;
    bool general = false;
    int k = 0;
    int k_max = 8;
    bool paper_h2_check = false;
    Budget budget;
    unsigned threads = 1;
};

int run_h2_check() {
    const EdgeOrderedGraph g = h2_counterexample_ordering();
    std::cout << "ordering:";
    std::vector<int> by_rank(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) by_rank[g.order[e]] = static_cast<int>(e);
    for (std::size_t r = 0; r < by_rank.size(); ++r) {
        const auto& [u, v] = g.edges[by_rank[r]];
        std::cout << " e" << (r + 1) << "=(" << vertex_name(2, static_cast<Vertex>(u)) << ","
                  << vertex_name(2, static_cast<Vertex>(v)) << ")";
    }
    std::cout << "\n";

    const H2ClaimReport report = h2_claim_report();
    std::cout << "colorings enumerated: " << report.census.total << " (2 colors, "
              << g.edges.size() << " edges)\n";
    std::cout << "distinguishing colorings: " << report.census.distinguishing << "\n";
    if (report.census.first_witness)
        std::cout << "first witness by edge rank: "
                  << sequence_text(*report.census.first_witness) << "\n";
    std::cout << "verdict: " << (report.claim_holds ? "Infeasible" : "Feasible") << "\n";
    std::cout << "published claim (no distinguishing 2-coloring exists): "
              << (report.claim_holds ? "AGREES" : "DISAGREES") << "\n";
    return kOk;
}

int run_seqirr(const SeqirrArgs& args) {
    if (args.paper_h2_check) return run_h2_check();
    const EdgeOrderedGraph g = parse_edge_list_file(args.graph);

    if (args.specific || args.general) {
        const StrengthOutcome outcome = args.specific
            ? specific_strength(g, args.k_max, args.budget)
            : general_strength(g, args.k_max, args.budget);
        std::cout << "nodes: " << outcome.nodes_explored << "\n";
        if (outcome.status == Status::Unknown) {
            std::cout << "status: Unknown (budget or k-max exhausted)\n";
            return kUnknown;
        }
        std::cout << (args.specific ? "specific_strength = " : "general_strength = ")
                  << outcome.k << "\n";
        return kOk;
    }

    const GraphSearchOutcome outcome = feasible_for_ordering(g, args.k, args.budget);
    std::cout << "vertices=" << g.num_vertices << " edges=" << g.edges.size()
              << " k=" << args.k << "\n";
    std::cout << "status: " << to_string(outcome.status) << "\n";
    std::cout << "nodes: " << outcome.nodes_explored << "\n";
    if (outcome.status == Status::Unknown) return kUnknown;
    if (outcome.witness)
        std::cout << "witness by edge id: " << sequence_text(*outcome.witness) << "\n";
    return kOk;
}

struct ExportArgs {
    std::string in;
    std::string format;
    std::string out;
};

int run_export(const ExportArgs& args) {
    const ColoringDocument doc = read_document(args.in);
    std::string text;
    if (args.format == "dot") text = to_dot(doc.coloring);
    else if (args.format == "json") text = to_json(doc);
    else throw DomainError("format must be 'dot' or 'json'");
    if (args.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(args.out, std::ios::binary | std::ios::trunc);
        if (!file) throw IoError("cannot open for writing: " + args.out);
        file << text;
        if (!file) throw IoError("write failed: " + args.out);
        std::cout << "wrote: " << args.out << "\n";
    }
    return kOk;
}

void add_budget_flags(CLI::App* cmd, Budget& budget) {
    cmd->add_option("--max-nodes", budget.max_nodes, "node budget (0 = unlimited)");
    cmd->add_option("--max-millis", budget.max_millis, "time budget in ms (0 = unlimited)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex-distinguishing edge colorings of hypercubes via palette sequences"};
    app.require_subcommand(1);

    ConstructArgs construct_args;
    auto* construct = app.add_subcommand(
        "construct", "build a distinguishing coloring and write it as JSON");
    construct->add_option("--mode", construct_args.mode, "general or proper")->required();
    construct->add_option("--n", construct_args.n, "hypercube dimension")->required();
    construct->add_option("--out", construct_args.out, "output document path")->required();

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "check a coloring document");
    verify->add_option("--in", verify_args.in, "document path")->required();
    verify->add_flag("--require-proper", verify_args.require_proper,
                     "also require a proper coloring");
    verify->add_flag("--verbose", verify_args.verbose, "list all palette collisions");

    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "exact feasibility / minimal color search");
    search->add_option("--mode", search_args.mode, "general or proper")->required();
    search->add_option("--n", search_args.n, "hypercube dimension")->required();
    auto* k_opt = search->add_option("--k", search_args.k, "color count to decide");
    auto* min_flag = search->add_flag("--min", search_args.minimize,
                                      "find the smallest feasible color count");
    k_opt->excludes(min_flag);
    search->add_option("--k-max", search_args.k_max, "cap for --min probes (0 = default)");
    search->add_option("--out", search_args.out, "write a Feasible witness here");
    add_budget_flags(search, search_args.budget);
    search->add_flag("!--no-symmetry-breaking", search_args.options.symmetry_breaking,
                     "disable color/vertex symmetry reductions");
    search->add_flag("!--no-class-pruning", search_args.options.parallel_class_pruning,
                     "disable the per-dimension color multiplicity cap (4-cube, k=4)");
    search->add_flag("--deterministic-witness", search_args.options.deterministic_witness,
                     "return the lexicographically smallest witness");
    search->add_option("--threads", search_args.threads,
                       "worker hint; searches currently run on one thread")
        ->check(CLI::PositiveNumber);

    std::string bound_graph;
    auto* bound = app.add_subcommand("bound", "counting lower bound M_G for a graph file");
    bound->add_option("--graph", bound_graph, "edge-list file")->required();

    SeqirrArgs seqirr_args;
    auto* seqirr = app.add_subcommand(
        "seqirr", "sequence-distinguishing queries for edge-ordered graphs");
    auto* graph_opt = seqirr->add_option("--graph", seqirr_args.graph, "edge-list file");
    auto* specific_flag =
        seqirr->add_flag("--specific", seqirr_args.specific,
                         "smallest k feasible for SOME ordering");
    auto* general_flag =
        seqirr->add_flag("--general", seqirr_args.general,
                         "smallest k feasible for EVERY ordering");
    auto* k_flag = seqirr->add_option("--k", seqirr_args.k,
                                      "decide feasibility of the file's ordering at k")
                       ->check(CLI::PositiveNumber);
    seqirr->add_option("--k-max", seqirr_args.k_max, "strength probe cap");
    auto* h2_flag = seqirr->add_flag("--paper-h2-check", seqirr_args.paper_h2_check,
                                     "adjudicate the published two-color claim for a fixed "
                                     "4-cycle ordering by full enumeration");
    add_budget_flags(seqirr, seqirr_args.budget);
    seqirr->add_option("--threads", seqirr_args.threads,
                       "worker hint; searches currently run on one thread")
        ->check(CLI::PositiveNumber);
    specific_flag->excludes(general_flag);
    specific_flag->excludes(k_flag);
    general_flag->excludes(k_flag);
    h2_flag->excludes(graph_opt);

    ExportArgs export_args;
    auto* exporter = app.add_subcommand("export", "re-emit a document as dot or json");
    exporter->add_option("--in", export_args.in, "document path")->required();
    exporter->add_option("--format", export_args.format, "dot or json")->required();
    exporter->add_option("--out", export_args.out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadRequest;
    }

    try {
        if (construct->parsed()) return run_construct(construct_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (search->parsed()) return run_search(search_args);
        if (bound->parsed()) return run_bound(bound_graph);
        if (seqirr->parsed()) {
            if (!seqirr_args.paper_h2_check && seqirr_args.graph.empty()) {
                std::cerr << "error: --graph is required unless --paper-h2-check is given\n";
                return kBadRequest;
            }
            if (!seqirr_args.paper_h2_check && !seqirr_args.specific && !seqirr_args.general &&
                seqirr_args.k == 0) {
                std::cerr << "error: pick one of --k, --specific, --general, "
                             "--paper-h2-check\n";
                return kBadRequest;
            }
            return run_seqirr(seqirr_args);
        }
        if (exporter->parsed()) return run_export(export_args);
    } catch (const RangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadRequest;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadRequest;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoOrFormat;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoOrFormat;
    }
    return kBadRequest;
}
