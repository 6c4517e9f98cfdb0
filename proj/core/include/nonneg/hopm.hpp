#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nonneg/errors.hpp"
#include "nonneg/tensor.hpp"

namespace nonneg {

enum class StartKind { Uniform, Random };

struct HopmConfig {
  /// Stop once the Collatz-Wielandt bracket is at most this wide.
  double tolerance = 1e-6;
  std::size_t max_iterations = 10000;
  /// Iterate on T + E and subtract 1 from the bounds.
  bool shift = true;
  StartKind start = StartKind::Uniform;
  /// Seed for StartKind::Random.
  std::uint64_t seed = 0;
  /// Abort when the bracket width has not decreased for this many iterations.
  std::size_t stagnation_window = 50;

  /// Throws std::invalid_argument on a non-positive tolerance or zero
  /// iteration budget.
  void validate() const;
};

struct BracketBounds {
  double lower = 0.0;
  double upper = 0.0;

  double width() const { return upper - lower; }
  double midpoint() const { return 0.5 * (lower + upper); }
};

/// One power-method iteration: bounds evaluated at x^{(k-1)}, in the
/// unshifted scale, plus the residual at the bracket midpoint.
struct TraceRow {
  std::size_t iteration = 0;
  double upper = 0.0;
  double lower = 0.0;
  double gap = 0.0;
  double residual = 0.0;
};

using HopmTrace = std::vector<TraceRow>;

struct HopmResult {
  /// Midpoint eigenvalue estimate, the sum-normalized positive vector at
  /// which the final bracket was evaluated, and its residual against T.
  Eigenpair pair;
  BracketBounds bracket;
  std::size_t iterations = 0;
  HopmTrace trace;
};

/// The power method ran out of iterations or stagnated. Carries the best
/// bracket seen and the trace so far.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, BracketBounds best, std::size_t iterations,
                   HopmTrace trace)
      : Error(what), best_(best), iterations_(iterations), trace_(std::move(trace)) {}

  const BracketBounds& best() const { return best_; }
  std::size_t iterations() const { return iterations_; }
  const HopmTrace& trace() const { return trace_; }

 private:
  BracketBounds best_;
  std::size_t iterations_;
  HopmTrace trace_;
};

/// Collatz-Wielandt bounds: min and max over i of (T x^{m-1})_i / x_i^{m-1}.
/// Throws std::invalid_argument unless x is strictly positive.
BracketBounds cw_bounds(const Tensor& t, std::span<const double> x);

/// Contract, take the componentwise (m-1)-th root, normalize to unit sum.
/// Throws ZeroIterate when the contraction vanishes.
Vector hopm_step(const Tensor& t, std::span<const double> x);

/// Bracketed higher-order power method for a weakly irreducible tensor.
/// Dimension 1 returns the single diagonal entry after one iteration.
/// Throws NotWeaklyIrreducible or ConvergenceError.
HopmResult hopm_run(const Tensor& t, const HopmConfig& config = {});

/// Hilbert projective distance log(max(y/x) / min(y/x)) over the common
/// support; +infinity when the supports differ. Throws std::invalid_argument
/// for zero or negative vectors.
double hilbert_distance(std::span<const double> x, std::span<const double> y);

/// Strictly positive start vector on the simplex.
Vector start_vector(std::size_t n, StartKind kind, std::uint64_t seed);

}  // namespace nonneg
