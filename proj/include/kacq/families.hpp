#pragma once

#include <cstddef>
#include <vector>

#include "kacq/quiver.hpp"

namespace kacq {

/// Connected quivers with 1..max_vertices vertices and at most max_arrows
/// arrows, one per isomorphism class, in a fixed order. Vertex ids are
/// "1", "2", ...; arrow ids "a1", "a2", ...
std::vector<Quiver> connected_quivers(std::size_t max_vertices, std::size_t max_arrows, bool allow_loops = true);

/// Every labelled multigraph (one arrow per edge, pointing from the lower
/// to the higher vertex) on exactly n vertices with at most max_edges
/// edges. Includes disconnected graphs.
std::vector<Quiver> labelled_multigraphs(std::size_t n, std::size_t max_edges, bool allow_loops = true);

/// Non-zero dimension vectors with n entries and total at most max_total.
std::vector<DimVector> dimension_vectors(std::size_t n, int max_total);

/// Every reorientation of the non-loop arrows (2^k quivers, including q).
std::vector<Quiver> reorientations(const Quiver& q);

} // namespace kacq
