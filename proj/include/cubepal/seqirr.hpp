#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubepal/hypercube.hpp"
#include "cubepal/search.hpp"

namespace cubepal {

/// A simple graph together with a global ordering of its edge set. The
/// ordering induces the local order in which each vertex reads the colors of
/// its incident edges.
struct EdgeOrderedGraph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;  // normalized u < v
    std::vector<int> order;                  // order[e] = global rank, 0-based
};

/// Validates and normalizes: vertices in range, no loops or parallel edges,
/// order a bijection on [0, |E|). An empty `order` means file order.
EdgeOrderedGraph make_edge_ordered_graph(int num_vertices,
                                         std::vector<std::pair<int, int>> edges,
                                         std::vector<int> order = {});

/// Parses the edge-list format: `#` starts a comment, `u v` lines add edges
/// (0-based vertices), and an optional `order: i1 i2 ...` line lists edge
/// positions (0-based, in file order) by increasing global rank. Throws
/// FormatError on any violation.
EdgeOrderedGraph parse_edge_list(std::istream& in);
EdgeOrderedGraph parse_edge_list_file(const std::string& path);

/// Colors of v's incident edges in increasing global rank; length deg(v).
std::vector<Color> global_palette(const EdgeOrderedGraph& g, std::span<const Color> coloring,
                                  int v);

/// Counting lower bound on the colors needed to distinguish by sequences:
/// max over degrees i (with n_i vertices of degree i) of the smallest k with
/// k^i >= n_i. Exact integer arithmetic. Throws DomainError if the graph is
/// empty or has isolated vertices.
int mg_bound(const EdgeOrderedGraph& g);

struct GraphSearchOutcome {
    Status status = Status::Unknown;
    std::optional<std::vector<Color>> witness;  // by edge id, present iff Feasible
    std::uint64_t nodes_explored = 0;
};

/// Decides by pruned exhaustive backtracking whether g's ordering admits a
/// k-coloring with all vertex sequences distinct. Requires |E| <= 20.
GraphSearchOutcome feasible_for_ordering(const EdgeOrderedGraph& g, int k,
                                         const Budget& budget = {});

/// Plain census over all k^|E| colorings of the fixed ordering: how many
/// distinguish, and the first witness in enumeration order. Requires
/// k^|E| <= 2^24.
struct OrderingCensus {
    std::uint64_t total = 0;
    std::uint64_t distinguishing = 0;
    std::optional<std::vector<Color>> first_witness;
};
OrderingCensus census_for_ordering(const EdgeOrderedGraph& g, int k);

struct StrengthOutcome {
    Status status = Status::Unknown;  // Feasible: k valid; Unknown: budget or k_max hit
    int k = 0;
    std::uint64_t nodes_explored = 0;
};

/// Smallest k <= k_max such that SOME ordering of g's edges admits a
/// distinguishing k-coloring. Enumerates all |E|! orderings (|E| <= 8),
/// or only orbit representatives when a group of edge automorphisms is
/// supplied. Throws DomainError for graphs with a 2-vertex component or
/// isolated vertices (never distinguishable).
StrengthOutcome specific_strength(const EdgeOrderedGraph& g, int k_max = 8,
                                  const Budget& budget = {},
                                  std::span<const std::vector<int>> automorphisms = {});

/// Smallest k <= k_max such that EVERY ordering of g's edges admits a
/// distinguishing k-coloring. Same guards as specific_strength.
StrengthOutcome general_strength(const EdgeOrderedGraph& g, int k_max = 8,
                                 const Budget& budget = {},
                                 std::span<const std::vector<int>> automorphisms = {});

/// All edge permutations induced by vertex automorphisms of g, found by
/// brute force over vertex bijections. Requires num_vertices <= 8.
std::vector<std::vector<int>> edge_automorphism_group(const EdgeOrderedGraph& g);

/// H_n as an edge-ordered graph whose global rank is the dimension-major
/// edge index, so global sequences coincide with dimension palettes.
/// Requires n <= 10 (explicit edge list).
EdgeOrderedGraph hypercube_ordering(int n);

/// The fixed 4-cycle ordering behind the published two-color claim:
/// e1=(00,01), e2=(00,10), e3=(10,11), e4=(01,11).
EdgeOrderedGraph h2_counterexample_ordering();

/// Adjudicates the published claim that the ordering above admits no
/// distinguishing 2-coloring, by full enumeration of all 16 colorings.
/// claim_holds is true iff no distinguishing coloring exists.
struct H2ClaimReport {
    OrderingCensus census;
    bool claim_holds = false;
};
H2ClaimReport h2_claim_report();

} // namespace cubepal
