#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "nonneg/matrix.hpp"
#include "nonneg/tensor.hpp"
#include "nonneg/tensor_io.hpp"

namespace nonneg::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(NONNEG_TEST_DATA) / name;
}

inline Tensor load(const std::string& name) { return read_tensor_file(data_path(name)); }

// T111 = 1, T122 = 3, T211 = 5, T222 = 1, T333 = 4.
inline Tensor two_blocks() { return load("two_blocks.tns"); }
// Leading 2x2 block of two_blocks().
inline Tensor coupled_block() {
  return Tensor(3, 2, {{{0, 0, 0}, 1.0}, {{0, 1, 1}, 3.0}, {{1, 0, 0}, 5.0}, {{1, 1, 1}, 1.0}});
}
// Symmetric: T111 = T222 = 1, T112 = T121 = T211 = 4.
inline Tensor symmetric_pair() { return load("symmetric_pair.tns"); }
// T122 = 1 only.
inline Tensor lone_entry() { return load("lone_entry.tns"); }
// T122 = T222 = 1: strictly nonnegative, weakly reducible.
inline Tensor trailing_pair() { return load("trailing_pair.tns"); }
// Weakly primitive but reducible through the closed set {2}.
inline Tensor hidden_closed_set() { return load("hidden_closed_set.tns"); }
// T122 = T233 = T311 = 1: weakly irreducible, not weakly primitive.
inline Tensor three_cycle() { return load("three_cycle.tns"); }
// T122 = T211 = 1: weakly positive, not weakly primitive.
inline Tensor swap_pair() { return load("swap_pair.tns"); }
// T122 = T121 = T211 = T212 = 1: weakly positive and weakly primitive, not primitive.
inline Tensor swap_full() { return load("swap_full.tns"); }
// Primitive, neither weakly nor essentially positive.
inline Tensor cycle_with_loops() { return load("cycle_with_loops.tns"); }
inline Tensor all_ones() { return load("all_ones.tns"); }

inline std::vector<std::string> fixture_files() {
  return {"two_blocks.tns",   "symmetric_pair.tns", "lone_entry.tns",
          "trailing_pair.tns", "hidden_closed_set.tns", "three_cycle.tns",
          "swap_pair.tns",    "swap_full.tns",      "cycle_with_loops.tns",
          "all_ones.tns",     "matrix_pair.tns"};
}

inline double uniform(std::mt19937_64& rng, double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Random sparse tensor; every position kept with probability `density`.
inline Tensor random_sparse(std::mt19937_64& rng, int order, std::size_t n, double density) {
  std::vector<Entry> entries;
  std::vector<Index> tuple(static_cast<std::size_t>(order), 0);
  while (true) {
    if (uniform(rng) < density) entries.push_back({tuple, uniform(rng, 0.05, 1.0)});
    std::size_t k = tuple.size();
    while (k > 0 && ++tuple[k - 1] == n) tuple[--k] = 0;
    if (k == 0) break;
  }
  return Tensor(order, n, std::move(entries));
}

// Random tensor with every row nonempty.
inline Tensor random_strictly_nonnegative(std::mt19937_64& rng, int order, std::size_t n,
                                          double density) {
  while (true) {
    Tensor t = random_sparse(rng, order, n, density);
    bool ok = true;
    for (Index i = 0; i < n; ++i) {
      auto [b, e] = t.row_range(i);
      ok = ok && b != e;
    }
    if (ok) return t;
  }
}

inline NonnegativeMatrix random_matrix(std::mt19937_64& rng, std::size_t n, double density) {
  NonnegativeMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (uniform(rng) < density) m.set(i, j, uniform(rng, 0.05, 1.0));
  return m;
}

inline Vector random_positive(std::mt19937_64& rng, std::size_t n) {
  Vector x(n);
  for (double& v : x) v = uniform(rng, 0.05, 1.0);
  return x;
}

inline IndexSet random_subset(std::mt19937_64& rng, std::size_t n) {
  IndexSet s;
  while (s.empty()) {
    for (Index i = 0; i < n; ++i)
      if (uniform(rng) < 0.5) s.push_back(i);
  }
  return s;
}

inline Tensor matrix_as_tensor(const NonnegativeMatrix& m) {
  std::vector<Entry> entries;
  for (Index i = 0; i < m.dim(); ++i)
    for (Index j = 0; j < m.dim(); ++j)
      if (m(i, j) > 0.0) entries.push_back({{i, j}, m(i, j)});
  return Tensor(2, m.dim(), std::move(entries));
}

}  // namespace nonneg::testing
