#pragma once

#include <cstdint>
#include <vector>

#include "cubepal/errors.hpp"

namespace cubepal {

/// Vertices of the n-cube are integers in [0, 2^n). Coordinate i (1-based)
/// of the corresponding binary string is stored in bit (i-1), so two
/// vertices are adjacent iff their values differ in exactly one bit.
using Vertex = std::uint32_t;

/// Edge colors are integers 1..k. 0 is reserved as "unassigned" in searches.
using Color = std::uint16_t;

/// Dimension-major linear index of an edge, see edge_index().
using EdgeIndex = std::uint64_t;

/// The color sequence at a vertex: entry i-1 is the color of the incident
/// edge of dimension i.
using Palette = std::vector<Color>;

inline constexpr int kMaxDimension = 24;  // keeps edge arrays near 2*10^8 entries
inline constexpr int kMaxColorCount = 65535;

struct Hypercube {
    int n = 0;
    std::uint64_t vertex_count = 0;
    std::uint64_t edge_count = 0;
};

/// Descriptor for H_n with vertex_count = 2^n and edge_count = n*2^(n-1).
/// Throws RangeError unless 1 <= n <= kMaxDimension.
Hypercube make_hypercube(int n);

/// An edge named by its canonical endpoint (the one with bit dimension-1
/// clear) and its dimension. The other endpoint is canonical_vertex XOR
/// 2^(dimension-1).
struct EdgeRef {
    Vertex canonical_vertex = 0;
    int dimension = 1;

    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

enum class Mode { General, Proper };

/// A full edge coloring of H_n. `colors` is indexed by EdgeIndex and holds
/// values in 1..k. `mode` records what the producer claims; nothing here is
/// verified beyond the value ranges (see verify.hpp for the actual checks).
struct Coloring {
    int n = 0;
    int k = 0;
    Mode mode = Mode::General;
    std::vector<Color> colors;
};

/// Validating constructor for Coloring. Throws RangeError for bad n,
/// DomainError for bad k, wrong array length, or out-of-range entries.
Coloring make_coloring(int n, int k, Mode mode, std::vector<Color> colors);

/// Drops bit (dim-1) from v and shifts the higher bits down by one.
std::uint32_t squeeze(Vertex v, int dim);

/// Dimension-major edge numbering: edges of dimension 1 occupy indices
/// [0, 2^(n-1)), dimension 2 the next 2^(n-1), and so on. Within a block the
/// offset is squeeze(canonical_vertex, dim). If bit (dim-1) of v is set, v
/// is canonicalized first (both endpoints name the same edge).
EdgeIndex edge_index(int n, Vertex v, int dim);

/// Inverse of edge_index. Throws RangeError for an out-of-range index.
EdgeRef edge_from_index(int n, EdgeIndex idx);

/// The non-canonical endpoint of e.
Vertex other_endpoint(const EdgeRef& e);

/// The n neighbors of v; entry i-1 is v XOR 2^(i-1).
std::vector<Vertex> neighbors(int n, Vertex v);

/// Vertices of H_n in breadth-first order from 0, expanding neighbors in
/// dimension order. Used as the canonical deterministic vertex order by the
/// searches.
std::vector<Vertex> bfs_vertex_order(int n);

/// The palette at v: entry i-1 = c.colors[edge_index(v, i)].
Palette palette(const Coloring& c, Vertex v);

/// All 2^n palettes, indexed by vertex.
std::vector<Palette> all_palettes(const Coloring& c);

} // namespace cubepal
