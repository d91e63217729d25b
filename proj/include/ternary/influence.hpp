#pragma once

#include <cstdint>

#include "ternary/point_set.hpp"
#include "ternary/rational.hpp"

namespace ternary {

// Geometric boundary edges of S, each adjacency counted once.
std::uint64_t boundary_edge_count(const PointSet& s);

// Influence under the ordered-pair convention: every boundary adjacency
// contributes twice, so this equals 2 * boundary_edge_count / 3^n. The
// per-adjacency (undirected) normalization is influence(s) / 2.
Rational influence(const PointSet& s);

// Independent oracle: visits every point and each of its incident
// neighbours, counting ordered disagreeing pairs directly.
Rational influence_naive(const PointSet& s);

}  // namespace ternary
