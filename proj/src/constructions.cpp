#include "cubepal/constructions.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>

namespace cubepal {

Palette complement_palette(const Palette& p) {
    Palette out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] != 1 && p[i] != 2)
            throw DomainError("complement is defined over {1,2}, entry " +
                              std::to_string(i) + " is " + std::to_string(p[i]));
        out[i] = (p[i] == 1) ? Color{2} : Color{1};
    }
    return out;
}

namespace {

Color swap12(Color c) { return c == 1 ? Color{2} : Color{1}; }

// Palettes over {1,2} packed as bits: entry i -> bit (i-1), entry value 2
// sets the bit. A distinguishing 2-coloring of H_m realizes every pattern
// exactly once, so the packed values index an array of size 2^m.
std::vector<std::uint32_t> packed_palettes(const std::vector<Color>& colors, int m) {
    const std::uint64_t vertices = std::uint64_t{1} << m;
    std::vector<std::uint32_t> packed(vertices, 0);
    for (std::uint64_t v = 0; v < vertices; ++v)
        for (int i = 1; i <= m; ++i)
            if (colors[edge_index(m, static_cast<Vertex>(v), i)] == 2)
                packed[v] |= std::uint32_t{1} << (i - 1);
    return packed;
}

} // namespace

Coloring general_two_coloring(int n) {
    if (n < 2 || n > kMaxDimension)
        throw RangeError("general two-coloring requires 2 <= n <= " +
                         std::to_string(kMaxDimension) + ", got " + std::to_string(n));
    std::vector<Color> cur = {1, 2, 1, 2};  // H_2 base case
    for (int m = 3; m <= n; ++m) {
        const std::uint64_t half = std::uint64_t{1} << (m - 1);  // vertices per half
        const std::uint64_t block = half;                        // edges per dimension in H_m
        const std::uint64_t prev_block = half >> 1;              // edges per dimension in H_(m-1)
        std::vector<Color> next(static_cast<std::size_t>(m) * block, 0);

        // dimensions 1..m-1: copy into the first half, color-swap in the second
        for (int d = 1; d <= m - 1; ++d)
            for (std::uint64_t s = 0; s < prev_block; ++s) {
                const Color c = cur[(d - 1) * prev_block + s];
                next[(d - 1) * block + s] = c;
                next[(d - 1) * block + prev_block + s] = swap12(c);
            }

        // dimension m: pair each first-half vertex with the one carrying the
        // complementary palette; the pair's two matching edges get colors 1, 2.
        const std::vector<std::uint32_t> packed = packed_palettes(cur, m - 1);
        const std::uint32_t mask = (std::uint32_t{1} << (m - 1)) - 1;
        std::vector<Vertex> by_palette(half);
        for (std::uint64_t v = 0; v < half; ++v)
            by_palette[packed[v]] = static_cast<Vertex>(v);
        const std::uint64_t matching = static_cast<std::uint64_t>(m - 1) * block;
        for (std::uint64_t v = 0; v < half; ++v) {
            if (next[matching + v] != 0) continue;
            const Vertex partner = by_palette[~packed[v] & mask];
            next[matching + v] = 1;
            next[matching + partner] = 2;
        }
        cur = std::move(next);
    }
    return make_coloring(n, 2, Mode::General, std::move(cur));
}

TwoColoringStepTrace general_two_coloring_step(int n) {
    if (n < 3 || n > kMaxDimension)
        throw RangeError("the matching step exists for 3 <= n <= " +
                         std::to_string(kMaxDimension) + ", got " + std::to_string(n));
    const Coloring below = general_two_coloring(n - 1);
    const std::vector<std::uint32_t> packed = packed_palettes(below.colors, n - 1);
    const std::uint32_t mask = (std::uint32_t{1} << (n - 1)) - 1;
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    std::vector<Vertex> by_palette(half);
    for (std::uint64_t v = 0; v < half; ++v) by_palette[packed[v]] = static_cast<Vertex>(v);

    TwoColoringStepTrace trace;
    std::vector<bool> placed(half, false);
    for (std::uint64_t v = 0; v < half; ++v) {
        if (placed[v]) continue;
        const Vertex partner = by_palette[~packed[v] & mask];
        placed[v] = placed[partner] = true;
        trace.pairs.emplace_back(static_cast<Vertex>(v), partner);
        trace.matching_colors.emplace_back(Color{1}, Color{2});
    }
    return trace;
}

std::optional<SpecialColorStructure> special_color_structure(const Coloring& c, Color color) {
    const std::uint64_t vertices = std::uint64_t{1} << c.n;
    for (std::uint64_t v = 0; v < vertices; ++v) {
        int incident = 0;
        for (int i = 1; i <= c.n; ++i)
            if (c.colors[edge_index(c.n, static_cast<Vertex>(v), i)] == color) ++incident;
        if (incident != 1) return std::nullopt;
    }
    SpecialColorStructure out;
    out.color = color;
    const std::uint64_t block = std::uint64_t{1} << (c.n - 1);
    for (std::size_t idx = 0; idx < c.colors.size(); ++idx)
        if (c.colors[idx] == color) out.dimensions.insert(static_cast<int>(idx / block) + 1);
    return out;
}

Coloring proper_table(int n) {
    switch (n) {
    case 2:
        return make_coloring(2, 4, Mode::Proper, {3, 4, 1, 2});
    case 3:
        return make_coloring(3, 4, Mode::Proper,
                             {1, 1, 3, 4, 3, 2, 1, 2, 4, 4, 2, 3});
    case 4:
        return make_coloring(4, 5, Mode::Proper,
                             {3, 1, 4, 2, 2, 4, 3, 1,
                              4, 2, 1, 3, 3, 1, 4, 2,
                              2, 1, 3, 4, 1, 4, 2, 3,
                              5, 5, 5, 5, 5, 5, 5, 5});
    default:
        throw RangeError("no fixed proper table for n=" + std::to_string(n) +
                         " (supported: 2, 3, 4)");
    }
}

std::optional<Coloring> coloring_from_palettes(int n, const std::vector<Palette>& palettes,
                                               Mode mode) {
    if (n < 1 || n > 6)
        throw RangeError("palette reconstruction supports 1 <= n <= 6, got " +
                         std::to_string(n));
    const std::size_t vertices = std::size_t{1} << n;
    if (palettes.size() != vertices)
        throw DomainError("expected " + std::to_string(vertices) + " palettes, got " +
                          std::to_string(palettes.size()));
    int k = 0;
    for (const Palette& p : palettes) {
        if (p.size() != static_cast<std::size_t>(n))
            throw DomainError("every palette must have length n");
        for (Color c : p) {
            if (c < 1) throw DomainError("palette entries must be >= 1");
            k = std::max<int>(k, c);
        }
    }

    const std::vector<Vertex> order = bfs_vertex_order(n);
    std::vector<int> assigned(vertices, -1);  // vertex -> palette id
    std::vector<bool> used(vertices, false);

    // Depth-first assignment; the only constraint is that the endpoints of
    // every dimension-i edge agree at entry i.
    auto extend = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == vertices) return true;
        const Vertex v = order[pos];
        for (std::size_t cand = 0; cand < palettes.size(); ++cand) {
            if (used[cand]) continue;
            bool consistent = true;
            for (int i = 1; i <= n && consistent; ++i) {
                const Vertex w = v ^ (Vertex{1} << (i - 1));
                if (assigned[w] >= 0 && palettes[assigned[w]][i - 1] != palettes[cand][i - 1])
                    consistent = false;
            }
            if (!consistent) continue;
            assigned[v] = static_cast<int>(cand);
            used[cand] = true;
            if (self(self, pos + 1)) return true;
            assigned[v] = -1;
            used[cand] = false;
        }
        return false;
    };
    if (!extend(extend, 0)) return std::nullopt;

    std::vector<Color> colors(static_cast<std::size_t>(n) * (vertices >> 1));
    for (std::size_t v = 0; v < vertices; ++v)
        for (int i = 1; i <= n; ++i)
            colors[edge_index(n, static_cast<Vertex>(v), i)] = palettes[assigned[v]][i - 1];
    return make_coloring(n, k, mode, std::move(colors));
}

namespace {

// The 32 palette sequences the 5-cube base coloring must realize, one per
// vertex: each is a permutation of {1..5} with the single 1 in position 3
// or 5, and together they admit a consistent vertex assignment.
const std::vector<Palette>& h5_target_palettes() {
    static const std::vector<Palette> targets = {
        {4, 5, 3, 2, 1}, {3, 5, 4, 2, 1}, {5, 4, 3, 2, 1}, {5, 3, 4, 2, 1},
        {4, 3, 5, 2, 1}, {3, 5, 1, 2, 4}, {5, 4, 2, 3, 1}, {5, 2, 1, 3, 4},
        {2, 4, 3, 5, 1}, {2, 3, 4, 5, 1}, {4, 2, 3, 5, 1}, {3, 2, 4, 5, 1},
        {2, 4, 5, 3, 1}, {2, 5, 1, 3, 4}, {4, 3, 2, 5, 1}, {3, 2, 1, 5, 4},
        {5, 4, 1, 2, 3}, {4, 3, 1, 2, 5}, {5, 2, 1, 4, 3}, {3, 2, 1, 4, 5},
        {5, 4, 1, 3, 2}, {4, 5, 2, 3, 1}, {5, 3, 1, 4, 2}, {3, 2, 5, 4, 1},
        {2, 5, 1, 4, 3}, {3, 5, 1, 4, 2}, {2, 4, 1, 5, 3}, {4, 3, 1, 5, 2},
        {2, 3, 1, 4, 5}, {3, 5, 2, 4, 1}, {2, 4, 1, 3, 5}, {4, 2, 5, 3, 1},
    };
    return targets;
}

} // namespace

// Candidate palettes are exactly the permutations of {1..5} with the 1 in
// position 3 or 5; the assignment constraints are the same as in
// coloring_from_palettes plus all-different.
std::optional<Coloring> h5_property_search() {
    std::vector<Palette> candidates;
    Palette perm = {1, 2, 3, 4, 5};
    do {
        if (perm[2] == 1 || perm[4] == 1) candidates.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    constexpr std::size_t vertices = 32;
    const std::vector<Vertex> order = bfs_vertex_order(5);
    std::vector<int> assigned(vertices, -1);
    std::vector<bool> used(candidates.size(), false);

    auto extend = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == vertices) return true;
        const Vertex v = order[pos];
        for (std::size_t cand = 0; cand < candidates.size(); ++cand) {
            if (used[cand]) continue;
            bool consistent = true;
            for (int i = 1; i <= 5 && consistent; ++i) {
                const Vertex w = v ^ (Vertex{1} << (i - 1));
                if (assigned[w] >= 0 && candidates[assigned[w]][i - 1] != candidates[cand][i - 1])
                    consistent = false;
            }
            if (!consistent) continue;
            assigned[v] = static_cast<int>(cand);
            used[cand] = true;
            if (self(self, pos + 1)) return true;
            assigned[v] = -1;
            used[cand] = false;
        }
        return false;
    };
    if (!extend(extend, 0)) return std::nullopt;

    std::vector<Color> colors(80);
    for (std::size_t v = 0; v < vertices; ++v)
        for (int i = 1; i <= 5; ++i)
            colors[edge_index(5, static_cast<Vertex>(v), i)] = candidates[assigned[v]][i - 1];
    return make_coloring(5, 5, Mode::Proper, std::move(colors));
}

namespace {

struct H5Base {
    Coloring coloring;
    H5BaseOrigin origin;
};

const H5Base& h5_base_cached() {
    static const H5Base base = [] {
        if (auto rec = coloring_from_palettes(5, h5_target_palettes(), Mode::Proper))
            return H5Base{std::move(*rec), H5BaseOrigin::PaletteReconstruction};
        auto fallback = h5_property_search();
        if (!fallback)
            throw std::logic_error("no 5-cube base coloring found by either path");
        return H5Base{std::move(*fallback), H5BaseOrigin::PropertySearch};
    }();
    return base;
}

} // namespace

const Coloring& h5_base() { return h5_base_cached().coloring; }

H5BaseOrigin h5_base_origin() { return h5_base_cached().origin; }

Coloring dimension_permuted(const Coloring& c, const std::vector<int>& pi) {
    if (pi.size() != static_cast<std::size_t>(c.n))
        throw DomainError("permutation must list images of all " + std::to_string(c.n) +
                          " dimensions");
    std::vector<bool> hit(c.n, false);
    for (int image : pi) {
        if (image < 1 || image > c.n || hit[image - 1])
            throw DomainError("dimension permutation is not a bijection on 1..n");
        hit[image - 1] = true;
    }

    std::vector<Color> out(c.colors.size());
    const std::uint64_t edge_count = c.colors.size();
    for (std::uint64_t idx = 0; idx < edge_count; ++idx) {
        const EdgeRef e = edge_from_index(c.n, idx);
        Vertex mapped = 0;
        for (int i = 1; i <= c.n; ++i)
            if (e.canonical_vertex & (Vertex{1} << (i - 1)))
                mapped |= Vertex{1} << (pi[i - 1] - 1);
        out[edge_index(c.n, mapped, pi[e.dimension - 1])] = c.colors[idx];
    }
    return make_coloring(c.n, c.k, c.mode, std::move(out));
}

Coloring color_swapped(const Coloring& c, Color a, Color b) {
    if (a < 1 || a > c.k || b < 1 || b > c.k)
        throw DomainError("swap colors must lie in 1..k");
    std::vector<Color> out = c.colors;
    for (Color& col : out) {
        if (col == a) col = b;
        else if (col == b) col = a;
    }
    return make_coloring(c.n, c.k, c.mode, std::move(out));
}

Coloring proper_n_coloring(int n) {
    if (n < 5 || n > kMaxDimension)
        throw RangeError("proper n-coloring requires 5 <= n <= " +
                         std::to_string(kMaxDimension) + " (use proper_table below 5), got " +
                         std::to_string(n));
    Coloring cur = h5_base();
    for (int m = 6; m <= n; ++m) {
        const std::uint64_t half = std::uint64_t{1} << (m - 1);
        const std::uint64_t block = half;
        const std::uint64_t prev_block = half >> 1;

        const Coloring second = (m == 6)
            ? dimension_permuted(cur, {2, 3, 4, 5, 1})
            : color_swapped(cur, static_cast<Color>(m - 1), static_cast<Color>(m - 2));

        std::vector<Color> next(static_cast<std::size_t>(m) * block);
        for (int d = 1; d <= m - 1; ++d)
            for (std::uint64_t s = 0; s < prev_block; ++s) {
                next[(d - 1) * block + s] = cur.colors[(d - 1) * prev_block + s];
                next[(d - 1) * block + prev_block + s] = second.colors[(d - 1) * prev_block + s];
            }
        const std::uint64_t matching = static_cast<std::uint64_t>(m - 1) * block;
        for (std::uint64_t v = 0; v < half; ++v)
            next[matching + v] = static_cast<Color>(m);
        cur = make_coloring(m, m, Mode::Proper, std::move(next));
    }
    return cur;
}

} // namespace cubepal
