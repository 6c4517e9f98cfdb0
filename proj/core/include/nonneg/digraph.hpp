#pragma once

#include <vector>

#include "nonneg/matrix.hpp"
#include "nonneg/tensor.hpp"

namespace nonneg {

/// Adjacency lists; arc i -> j is present when M(i, j) > 0.
using Digraph = std::vector<std::vector<Index>>;

Digraph support_digraph(const NonnegativeMatrix& m);

/// Strongly connected components (Tarjan, iterative). Returns a component id
/// per vertex; ids are assigned in reverse topological order of the
/// condensation, i.e. a component only has arcs into components with smaller
/// or equal id.
std::vector<std::size_t> strong_components(const Digraph& g, std::size_t& count);

}  // namespace nonneg
