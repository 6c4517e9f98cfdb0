#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nonneg/tensor.hpp"

namespace nonneg {

struct SimulationParams {
  std::size_t n = 3;
  int order = 3;
  double density = 0.5;
  std::size_t trials = 50;
  std::uint64_t seed = 1;
  double tolerance = 1e-6;
  std::size_t max_iterations = 10000;
  /// Worker threads; 0 uses the hardware concurrency. Results do not depend
  /// on this value.
  unsigned threads = 1;

  /// Throws std::invalid_argument for n, order < 2, trials or tolerance out
  /// of range, or a density outside (0, 1].
  void validate() const;
};

struct TrialOutcome {
  double rho = 0.0;
  bool weakly_irreducible = false;
  std::size_t iterations = 0;
  std::size_t blocks = 0;
  /// Residual of the maximizing block's eigenpair on its induced tensor.
  double residual = 0.0;
};

/// Averages over `trials` random tensors.
struct SimulationRow {
  std::size_t n = 0;
  int order = 0;
  double density = 0.0;
  std::size_t trials = 0;
  double mean_rho = 0.0;
  double percent_weakly_irreducible = 0.0;
  double mean_iterations = 0.0;
  double mean_blocks = 0.0;
  double mean_residual = 0.0;
  double wall_time = 0.0;
};

/// Every one of the n^m positions is nonzero independently with probability
/// `density`, with a value uniform on (0, 1). The mask draw and the value
/// draw are both consumed at every position, so for a fixed seed raising the
/// density only adds entries.
Tensor random_tensor(std::size_t n, int order, double density, std::uint64_t seed);

/// Trial i uses seed params.seed + i.
TrialOutcome run_trial(const SimulationParams& params, std::size_t trial);

/// Throws SpectralConvergenceError if any trial fails to converge.
SimulationRow simulate(const SimulationParams& params);

/// (n, density) pairs of the standard random-tensor experiment, order 3.
std::vector<SimulationParams> sweep_parameters(std::size_t trials, std::uint64_t seed,
                                               double tolerance);

}  // namespace nonneg
