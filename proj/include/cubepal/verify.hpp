#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "cubepal/hypercube.hpp"

namespace cubepal {

using VertexPair = std::pair<Vertex, Vertex>;
using EdgePair = std::pair<EdgeRef, EdgeRef>;

/// Result of a single property check. ok == false iff a witness is present,
/// and the witness actually violates the checked property: a vertex pair
/// with equal palettes, or two adjacent edges with equal colors.
struct Verdict {
    bool ok = true;
    std::optional<std::variant<VertexPair, EdgePair>> witness;

    static Verdict pass() { return Verdict{}; }
    static Verdict fail(VertexPair w) { return Verdict{false, w}; }
    static Verdict fail(EdgePair w) { return Verdict{false, w}; }
};

/// ok iff no two edges sharing a vertex have equal colors. The witness is
/// the first offending edge pair in (vertex, dimension, dimension) order.
Verdict is_proper(const Coloring& c);

/// ok iff all 2^n palettes are pairwise distinct. On failure the witness is
/// the lexicographically smallest colliding vertex pair.
Verdict distinguishes(const Coloring& c);

/// All groups of vertices sharing a palette (size >= 2), members ascending,
/// groups ordered by smallest member. Full listing behind the CLI's
/// verbosity flag; Verdict itself carries a single witness.
std::vector<std::vector<Vertex>> palette_collision_groups(const Coloring& c);

/// For every color used, the set of dimensions in which it occurs.
std::map<Color, std::set<int>> color_dimension_profile(const Coloring& c);

/// Exact edge counts per (dimension, color) pair (only nonzero counts appear).
std::map<std::pair<int, Color>, std::uint64_t> parallel_color_multiplicity(const Coloring& c);

/// True iff every palette is a permutation of {1..n}. Requires k == n,
/// otherwise throws DomainError.
bool palette_permutation_check(const Coloring& c);

/// The distance between two distinct edges of the same dimension:
/// min(dist(x,x'), dist(x,y')) over the Hamming distance of endpoints,
/// where e1 = xy and e2 = x'y'. Throws DomainError if the dimensions differ
/// or the edges are equal.
int parallel_edge_distance(int n, const EdgeRef& e1, const EdgeRef& e2);

} // namespace cubepal
