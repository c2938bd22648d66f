#pragma once

#include <stdexcept>

namespace cubepal {

/// A structural argument (dimension, vertex, index, color count) is outside
/// the supported range.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Arguments are individually in range but jointly invalid (non-bijective
/// permutation, mismatched dimensions, graph with isolated vertices, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Input text (JSON document, edge list) does not match the documented
/// grammar or schema.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reading or writing a file failed at the OS level.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cubepal
