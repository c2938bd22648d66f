#pragma once

#include <string>

#include "cubepal/hypercube.hpp"

namespace cubepal {

inline constexpr const char* kSchemaVersion = "cube-palette/1";

/// On-disk form of a coloring. Serialized field order is fixed:
/// schema_version, n, k, mode, colors, provenance.
struct ColoringDocument {
    std::string schema_version = kSchemaVersion;
    Coloring coloring;
    std::string provenance;
};

/// Serializes with stable field order; identical documents produce
/// byte-identical text.
std::string to_json(const ColoringDocument& doc);

/// Parses and validates. Throws FormatError on malformed JSON, an unknown
/// schema version, or any invariant violation (wrong array length,
/// out-of-range entries, bad mode string).
ColoringDocument document_from_json(const std::string& text);

ColoringDocument read_document(const std::string& path);   // IoError / FormatError
void write_document(const std::string& path, const ColoringDocument& doc);  // IoError

/// Graphviz rendering with one edge line per edge, in index order, each
/// carrying a label with the edge's color. Vertex names are coordinate
/// strings (coordinate 1 first).
std::string to_dot(const Coloring& c);

/// "010..." with coordinate i at string position i.
std::string vertex_name(int n, Vertex v);

} // namespace cubepal
