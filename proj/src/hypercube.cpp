#include "cubepal/hypercube.hpp"

#include <queue>
#include <string>

namespace cubepal {

namespace {

void check_dimension(int n) {
    if (n < 1 || n > kMaxDimension)
        throw RangeError("dimension n must be in [1, " + std::to_string(kMaxDimension) +
                         "], got " + std::to_string(n));
}

void check_vertex(int n, Vertex v) {
    if (v >= (Vertex{1} << n))
        throw RangeError("vertex " + std::to_string(v) + " out of range for n=" +
                         std::to_string(n));
}

} // namespace

Hypercube make_hypercube(int n) {
    check_dimension(n);
    const std::uint64_t vertices = std::uint64_t{1} << n;
    return Hypercube{n, vertices, static_cast<std::uint64_t>(n) * (vertices >> 1)};
}

Coloring make_coloring(int n, int k, Mode mode, std::vector<Color> colors) {
    check_dimension(n);
    if (k < 1 || k > kMaxColorCount)
        throw DomainError("color count k must be in [1, " + std::to_string(kMaxColorCount) +
                          "], got " + std::to_string(k));
    const std::uint64_t expected = make_hypercube(n).edge_count;
    if (colors.size() != expected)
        throw DomainError("color array has " + std::to_string(colors.size()) +
                          " entries, expected " + std::to_string(expected));
    for (Color c : colors)
        if (c < 1 || c > k)
            throw DomainError("edge color " + std::to_string(c) + " outside 1.." +
                              std::to_string(k));
    return Coloring{n, k, mode, std::move(colors)};
}

std::uint32_t squeeze(Vertex v, int dim) {
    const Vertex low = v & ((Vertex{1} << (dim - 1)) - 1);
    return low | ((v >> dim) << (dim - 1));
}

EdgeIndex edge_index(int n, Vertex v, int dim) {
    check_dimension(n);
    check_vertex(n, v);
    if (dim < 1 || dim > n)
        throw RangeError("edge dimension " + std::to_string(dim) + " out of range for n=" +
                         std::to_string(n));
    v &= ~(Vertex{1} << (dim - 1));  // canonicalize
    const std::uint64_t block = std::uint64_t{1} << (n - 1);
    return static_cast<EdgeIndex>(dim - 1) * block + squeeze(v, dim);
}

EdgeRef edge_from_index(int n, EdgeIndex idx) {
    check_dimension(n);
    const std::uint64_t block = std::uint64_t{1} << (n - 1);
    if (idx >= static_cast<std::uint64_t>(n) * block)
        throw RangeError("edge index " + std::to_string(idx) + " out of range for n=" +
                         std::to_string(n));
    const int dim = static_cast<int>(idx / block) + 1;
    const Vertex s = static_cast<Vertex>(idx % block);
    const Vertex low = s & ((Vertex{1} << (dim - 1)) - 1);
    const Vertex v = low | ((s >> (dim - 1)) << dim);
    return EdgeRef{v, dim};
}

Vertex other_endpoint(const EdgeRef& e) {
    return e.canonical_vertex ^ (Vertex{1} << (e.dimension - 1));
}

std::vector<Vertex> neighbors(int n, Vertex v) {
    check_dimension(n);
    check_vertex(n, v);
    std::vector<Vertex> out(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        out[i - 1] = v ^ (Vertex{1} << (i - 1));
    return out;
}

std::vector<Vertex> bfs_vertex_order(int n) {
    check_dimension(n);
    const std::size_t count = std::size_t{1} << n;
    std::vector<Vertex> order;
    order.reserve(count);
    std::vector<bool> seen(count, false);
    std::queue<Vertex> queue;
    queue.push(0);
    seen[0] = true;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop();
        order.push_back(v);
        for (int i = 1; i <= n; ++i) {
            const Vertex w = v ^ (Vertex{1} << (i - 1));
            if (!seen[w]) {
                seen[w] = true;
                queue.push(w);
            }
        }
    }
    return order;
}

Palette palette(const Coloring& c, Vertex v) {
    check_vertex(c.n, v);
    Palette out(static_cast<std::size_t>(c.n));
    for (int i = 1; i <= c.n; ++i)
        out[i - 1] = c.colors[edge_index(c.n, v, i)];
    return out;
}

std::vector<Palette> all_palettes(const Coloring& c) {
    const std::size_t count = std::size_t{1} << c.n;
    std::vector<Palette> out;
    out.reserve(count);
    for (std::size_t v = 0; v < count; ++v)
        out.push_back(palette(c, static_cast<Vertex>(v)));
    return out;
}

} // namespace cubepal
