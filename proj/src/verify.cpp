#include "cubepal/verify.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace cubepal {

Verdict is_proper(const Coloring& c) {
    const std::uint64_t vertices = std::uint64_t{1} << c.n;
    for (std::uint64_t v = 0; v < vertices; ++v) {
        const Palette p = palette(c, static_cast<Vertex>(v));
        for (int i = 1; i <= c.n; ++i)
            for (int j = i + 1; j <= c.n; ++j)
                if (p[i - 1] == p[j - 1]) {
                    const EdgeRef a = edge_from_index(c.n, edge_index(c.n, static_cast<Vertex>(v), i));
                    const EdgeRef b = edge_from_index(c.n, edge_index(c.n, static_cast<Vertex>(v), j));
                    return Verdict::fail(EdgePair{a, b});
                }
    }
    return Verdict::pass();
}

namespace {

// Vertex ids sorted by (palette, id); equal palettes end up adjacent with
// ascending members.
std::vector<Vertex> vertices_by_palette(const std::vector<Palette>& pals) {
    std::vector<Vertex> order(pals.size());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        if (pals[a] != pals[b]) return pals[a] < pals[b];
        return a < b;
    });
    return order;
}

} // namespace

Verdict distinguishes(const Coloring& c) {
    const std::vector<Palette> pals = all_palettes(c);
    const std::vector<Vertex> order = vertices_by_palette(pals);
    // Smallest colliding pair: the group with the smallest leading member
    // wins, and within it the two smallest members form the pair.
    std::optional<VertexPair> best;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        if (pals[order[i]] != pals[order[i + 1]]) continue;
        const VertexPair cand{order[i], order[i + 1]};
        if (!best || cand.first < best->first) best = cand;
        // skip to the end of this group
        while (i + 1 < order.size() && pals[order[i]] == pals[order[i + 1]]) ++i;
    }
    if (best) return Verdict::fail(*best);
    return Verdict::pass();
}

std::vector<std::vector<Vertex>> palette_collision_groups(const Coloring& c) {
    const std::vector<Palette> pals = all_palettes(c);
    const std::vector<Vertex> order = vertices_by_palette(pals);
    std::vector<std::vector<Vertex>> groups;
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i + 1;
        while (j < order.size() && pals[order[j]] == pals[order[i]]) ++j;
        if (j - i >= 2) groups.emplace_back(order.begin() + i, order.begin() + j);
        i = j;
    }
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return groups;
}

std::map<Color, std::set<int>> color_dimension_profile(const Coloring& c) {
    std::map<Color, std::set<int>> profile;
    const std::uint64_t block = std::uint64_t{1} << (c.n - 1);
    for (std::size_t idx = 0; idx < c.colors.size(); ++idx) {
        const int dim = static_cast<int>(idx / block) + 1;
        profile[c.colors[idx]].insert(dim);
    }
    return profile;
}

std::map<std::pair<int, Color>, std::uint64_t> parallel_color_multiplicity(const Coloring& c) {
    std::map<std::pair<int, Color>, std::uint64_t> counts;
    const std::uint64_t block = std::uint64_t{1} << (c.n - 1);
    for (std::size_t idx = 0; idx < c.colors.size(); ++idx) {
        const int dim = static_cast<int>(idx / block) + 1;
        ++counts[{dim, c.colors[idx]}];
    }
    return counts;
}

bool palette_permutation_check(const Coloring& c) {
    if (c.k != c.n)
        throw DomainError("palette permutation check requires k == n, got k=" +
                          std::to_string(c.k) + " n=" + std::to_string(c.n));
    const std::uint64_t vertices = std::uint64_t{1} << c.n;
    for (std::uint64_t v = 0; v < vertices; ++v) {
        Palette p = palette(c, static_cast<Vertex>(v));
        std::sort(p.begin(), p.end());
        for (int i = 1; i <= c.n; ++i)
            if (p[i - 1] != i) return false;
    }
    return true;
}

int parallel_edge_distance(int n, const EdgeRef& e1, const EdgeRef& e2) {
    if (e1.dimension != e2.dimension)
        throw DomainError("parallel edge distance requires edges of equal dimension");
    // validate and canonicalize through the index map
    const EdgeRef a = edge_from_index(n, edge_index(n, e1.canonical_vertex, e1.dimension));
    const EdgeRef b = edge_from_index(n, edge_index(n, e2.canonical_vertex, e2.dimension));
    if (a == b) throw DomainError("parallel edge distance requires distinct edges");
    const int dxx = std::popcount(a.canonical_vertex ^ b.canonical_vertex);
    const int dxy = std::popcount(a.canonical_vertex ^ other_endpoint(b));
    return std::min(dxx, dxy);
}

} // namespace cubepal
