#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cubepal/hypercube.hpp"

namespace cubepal {

/// Entrywise flip of a palette over {1,2}. Throws DomainError on any other
/// entry. An involution.
Palette complement_palette(const Palette& p);

/// A 2-coloring of H_n (n >= 2) under which all 2^n palettes are distinct.
///
/// Built inductively: the two halves carry the (n-1)-coloring with colors
/// interchanged in the second half; the dimension-n matching is colored so
/// that vertices with entrywise-complementary (n-1)-palettes get different
/// matching colors. First-half vertices are processed in increasing id, and
/// within each complement pair the smaller id receives color 1, making the
/// output fully deterministic.
Coloring general_two_coloring(int n);

/// The dimension-n matching step behind general_two_coloring(n): pairs of
/// first-half vertices whose (n-1)-palettes are entrywise complementary,
/// with the matching colors assigned inside each pair. The pairing is a
/// perfect matching on the 2^(n-1) first-half vertices, listed with the
/// smaller vertex first.
struct TwoColoringStepTrace {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::vector<std::pair<Color, Color>> matching_colors;  // at (smaller, partner)
};
TwoColoringStepTrace general_two_coloring_step(int n);

/// Fixed proper distinguishing colorings for the small cases: k = 4 for
/// n in {2,3} and k = 5 for n = 4. Throws RangeError for any other n.
Coloring proper_table(int n);

/// Where a color sits when it forms a perfect matching: the set of
/// dimensions it occurs in. Returns nullopt unless every vertex is incident
/// to exactly one edge of the color. The induction base has this structure
/// for color 1 with dimensions {3, 5}.
struct SpecialColorStructure {
    Color color = 0;
    std::set<int> dimensions;

    friend bool operator==(const SpecialColorStructure&, const SpecialColorStructure&) = default;
};
std::optional<SpecialColorStructure> special_color_structure(const Coloring& c, Color color);

/// How the embedded 5-cube base coloring was obtained.
enum class H5BaseOrigin {
    PaletteReconstruction,  // recovered from the 32 target palette sequences
    PropertySearch,         // fallback constraint search over the structural properties
};

/// The proper 5-coloring of H_5 used as the induction base: proper, all 32
/// palettes distinct, color 1 confined to dimensions 3 and 5, and every
/// vertex incident to exactly one color-1 edge. Computed once and cached.
const Coloring& h5_base();

/// Which path produced h5_base().
H5BaseOrigin h5_base_origin();

/// The fallback behind h5_base(): searches directly for any proper
/// 5-coloring of H_5 with distinct palettes in which color 1 forms a
/// perfect matching inside dimensions {3, 5}. Kept callable so the fallback
/// stays exercised even while reconstruction succeeds.
std::optional<Coloring> h5_property_search();

/// Recovers an edge coloring from one palette per vertex: assigns each given
/// palette to a vertex so that the endpoints of every dimension-i edge agree
/// at entry i, then reads the edge colors off the assignment. Returns
/// nullopt when no consistent assignment exists. Deterministic: vertices are
/// filled in BFS order and palettes tried in the given order. Requires
/// n <= 6 (assignment search) and exactly 2^n palettes of length n.
std::optional<Coloring> coloring_from_palettes(int n, const std::vector<Palette>& palettes,
                                               Mode mode);

/// Relabels dimensions by the bijection pi (pi[i-1] is the image of
/// dimension i): an edge of dimension i at v maps to an edge of dimension
/// pi(i) at the coordinate-permuted vertex, keeping its color. Palettes obey
/// palette(out, m(v))[pi(i)-1] == palette(c, v)[i-1].
Coloring dimension_permuted(const Coloring& c, const std::vector<int>& pi);

/// Swaps colors a and b on every edge; all other edges unchanged.
Coloring color_swapped(const Coloring& c, Color a, Color b);

/// A proper n-coloring of H_n (5 <= n <= kMaxDimension) distinguishing all
/// vertices. n = 5 is h5_base(); n = 6 pairs the base with its
/// dimension-rotated copy; n >= 7 pairs the previous coloring with a copy in
/// which colors n-1 and n-2 are interchanged. Every dimension-n edge gets
/// the fresh color n.
Coloring proper_n_coloring(int n);

} // namespace cubepal
