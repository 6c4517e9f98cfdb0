#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nonneg/matrix.hpp"
#include "nonneg/tensor.hpp"

// Brute-force reference implementations. They share no algorithmic code with
// analysis, partition or hopm and refuse inputs beyond hard size guards
// (OracleGuardExceeded) instead of approximating.
namespace nonneg::oracle {

inline constexpr std::size_t kMaxSubsetDim = 16;
inline constexpr std::size_t kMaxDenseDim = 64;
inline constexpr std::size_t kMaxGridDim = 4;

struct SubsetVerdict {
  bool reducible = false;
  /// Set I certifying reducibility.
  std::optional<IndexSet> witness;
  /// Number of subsets examined.
  std::uint64_t work = 0;
};

struct GridVerdict {
  /// Largest min-ratio found on the lattice; a lower bound on rho.
  double lower_bound = 0.0;
  /// Lattice point attaining it (sums to 1).
  Vector point;
  std::uint64_t work = 0;
};

struct MatrixRadius {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Enumerates every proper nonempty I (in increasing bitmask order) and
/// reports the first with T_{i i2..im} = 0 for all i in I and i2..im outside I.
SubsetVerdict reducible_bruteforce(const Tensor& t);

/// Same enumeration against G(T), built here by visiting every index tuple.
SubsetVerdict weakly_reducible_bruteforce(const Tensor& t);

/// G(T) from a dense sweep over all n^m index tuples.
NonnegativeMatrix dense_representation(const Tensor& t);

/// (M + E)^{n-1} > 0 computed by repeated dense multiplication.
bool matrix_irreducible_dense(const NonnegativeMatrix& m);

/// Irreducible blocks through the dense power (M + E)^{n-1}, sorted by
/// column counts ascending then row counts descending, grouped by mutual
/// reachability.
std::vector<IndexSet> dense_blocks(const NonnegativeMatrix& m);

/// Maximin of (T x^{m-1})_i / x_i^{m-1} over interior simplex lattice points
/// k / resolution. Requires a weakly irreducible tensor with n <= 4 and
/// resolution >= n.
GridVerdict cw_grid(const Tensor& t, std::size_t resolution);

/// Spectral radius of a matrix by plain power iteration on M + I with
/// Collatz-Wielandt bracketing.
MatrixRadius matrix_radius_reference(const NonnegativeMatrix& m, std::size_t max_iterations = 1000000);

}  // namespace nonneg::oracle
