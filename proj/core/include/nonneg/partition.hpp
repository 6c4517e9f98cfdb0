#pragma once

#include <vector>

#include "nonneg/matrix.hpp"
#include "nonneg/tensor.hpp"

namespace nonneg {

enum class PartitionKind { Weak, Strong };

struct Block {
  IndexSet indices;
  /// The tensor induced by `indices`.
  Tensor tensor;
};

/// Ordered, disjoint blocks covering 0..n-1.
///
/// Weak partitions have weakly irreducible blocks and no representation
/// coupling from a later block back into an earlier one at the level that
/// split them. Strong partitions have irreducible blocks, and an entry whose
/// row lies in a later block never has all trailing indices inside a single
/// earlier block.
struct BlockPartition {
  PartitionKind kind = PartitionKind::Weak;
  std::vector<Block> blocks;
};

/// Strongly connected components of the support digraph of `m`, ordered so
/// that every cross-component arc points from an earlier block to a later
/// one. Among components ready to be emitted, the one holding the smallest
/// index goes first. Each block is sorted.
std::vector<IndexSet> matrix_blocks(const NonnegativeMatrix& m);

BlockPartition weak_partition(const Tensor& t);

BlockPartition strong_partition(const Tensor& t);

}  // namespace nonneg
