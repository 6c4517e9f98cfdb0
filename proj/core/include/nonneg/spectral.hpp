#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nonneg/errors.hpp"
#include "nonneg/hopm.hpp"
#include "nonneg/partition.hpp"
#include "nonneg/tensor.hpp"

namespace nonneg {

struct BlockResult {
  IndexSet indices;
  double value = 0.0;
  Vector vector;
  BracketBounds bracket;
  std::size_t iterations = 0;
  double residual = 0.0;
  HopmTrace trace;
};

struct SpectralReport {
  double rho = 0.0;
  /// Weak partition the radius was assembled from.
  BlockPartition partition;
  std::vector<BlockResult> block_results;
  /// Position in block_results of a block attaining rho.
  std::size_t argmax_block = 0;
  /// Zero-padded block eigenvector, present only when it passes the
  /// residual check against the full tensor.
  std::optional<Vector> assembled_vector;
  double assembled_residual = 0.0;
  double certification_tolerance = 0.0;
  std::size_t total_iterations = 0;
};

/// A block failed to converge. partial() holds every block solved before it.
class SpectralConvergenceError : public Error {
 public:
  SpectralConvergenceError(const std::string& what, SpectralReport partial,
                           std::size_t failed_block, ConvergenceError cause)
      : Error(what), partial_(std::move(partial)), failed_block_(failed_block),
        cause_(std::move(cause)) {}

  const SpectralReport& partial() const { return partial_; }
  std::size_t failed_block() const { return failed_block_; }
  const ConvergenceError& cause() const { return cause_; }

 private:
  SpectralReport partial_;
  std::size_t failed_block_;
  ConvergenceError cause_;
};

/// Spectral radius of an arbitrary nonnegative tensor: weak partition, the
/// power method on every block, maximum of the block radii.
SpectralReport spectral_radius(const Tensor& t, const HopmConfig& config = {});

/// Pads the eigenvector of a maximizing block with zeros and returns it if
/// residual(t, rho, v) <= report.certification_tolerance. Blocks tied at the
/// maximum are tried in order.
std::optional<Vector> assemble_eigenvector(const Tensor& t, const SpectralReport& report);

}  // namespace nonneg
