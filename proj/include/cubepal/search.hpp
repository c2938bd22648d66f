#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "cubepal/hypercube.hpp"

namespace cubepal {

enum class Status { Feasible, Infeasible, Unknown };

/// Resource limits for a search. 0 means unlimited. Hitting a limit yields
/// Status::Unknown, never a fabricated verdict.
struct Budget {
    std::uint64_t max_nodes = 0;
    std::uint64_t max_millis = 0;
};

struct SearchOptions {
    /// Fix vertex 0's palette to the identity permutation (proper k = n) or
    /// force colors to first appear in increasing order (edge branching).
    /// Sound for the status by color-relabel invariance; affects only which
    /// witness is found and how fast.
    bool symmetry_breaking = true;

    /// Prune subtrees where more than two same-colored edges share a
    /// dimension. Applies only to the 4-cube with k = 4, where any proper
    /// distinguishing coloring would need exactly two per class.
    bool parallel_class_pruning = true;

    /// Return the lexicographically smallest witness by color array instead
    /// of the first one found. Edge searches switch to index-order
    /// branching; the permutation search is already canonical and ignores
    /// this flag.
    bool deterministic_witness = false;
};

struct SearchOutcome {
    Status status = Status::Unknown;
    std::optional<Coloring> witness;   // present iff status == Feasible
    std::uint64_t nodes_explored = 0;
    std::chrono::milliseconds elapsed{0};
    Budget budget;
};

/// Decides whether H_n admits a k-coloring (proper if mode == Proper) with
/// all vertex palettes distinct. Exhaustive backtracking; proper requests
/// with k == n and n <= 6 are answered by permutation_csp(). Feasible
/// witnesses are verifier-checked before return. Requires n in
/// [2, kMaxDimension] and k in [1, 63].
SearchOutcome feasible(int n, Mode mode, int k, const Budget& budget = {},
                       const SearchOptions& options = {});

struct MinColorsOutcome {
    /// Feasible: k_min/witness valid. Infeasible: no k <= k_max works.
    /// Unknown: some probe exhausted its budget.
    Status status = Status::Unknown;
    int k_min = 0;
    std::optional<Coloring> witness;
    std::uint64_t nodes_explored = 0;
    std::vector<std::pair<int, Status>> probes;
};

/// Smallest k <= k_max for which feasible() reports Feasible, probing
/// upward from the mode floor (2 for general, n for proper). k_max == 0
/// picks a default that covers the known minima.
MinColorsOutcome min_colors(int n, Mode mode, int k_max = 0, const Budget& budget = {},
                            const SearchOptions& options = {});

/// Proper k = n feasibility as a permutation assignment problem: give every
/// vertex a distinct permutation of {1..n} such that the endpoints of each
/// dimension-i edge agree at entry i. Variables are vertices in BFS order
/// from 0, values are permutations in lexicographic order; with
/// symmetry_breaking vertex 0 is pinned to the identity. Requires
/// 2 <= n <= 6.
SearchOutcome permutation_csp(int n, const Budget& budget = {},
                              const SearchOptions& options = {});

/// Independent oracle: plain enumeration of all k^(n*2^(n-1)) colorings
/// with no pruning or symmetry breaking. Requires k^edges <= 2^28, else
/// RangeError.
SearchOutcome brute_force_oracle(int n, Mode mode, int k);

const char* to_string(Status s);

} // namespace cubepal
