#include "nonneg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "nonneg/errors.hpp"

namespace nonneg::oracle {
namespace {

void guard(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw OracleGuardExceeded(std::string(what) + ": dimension " + std::to_string(n) +
                              " exceeds the oracle limit " + std::to_string(limit));
  }
}

using Dense = std::vector<std::vector<bool>>;

Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool v = false;
      for (std::size_t k = 0; k < n && !v; ++k) v = a[i][k] && b[k][j];
      c[i][j] = v;
    }
  }
  return c;
}

// (M + E)^{n-1} as a zero/nonzero pattern.
Dense reachability(const NonnegativeMatrix& m) {
  const std::size_t n = m.dim();
  Dense step(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) step[i][j] = i == j || m(i, j) > 0.0;
  }
  Dense c = step;
  for (std::size_t k = 1; k + 1 < n; ++k) c = multiply(c, step);
  return c;
}

// Calls visit(tuple) for every tuple in {0..n-1}^length.
template <typename Visit>
void for_each_tuple(std::size_t n, std::size_t length, Visit&& visit) {
  std::vector<Index> tuple(length, 0);
  while (true) {
    visit(tuple);
    std::size_t p = length;
    while (p > 0) {
      --p;
      if (++tuple[p] < n) break;
      tuple[p] = 0;
      if (p == 0) return;
    }
    if (length == 0) return;
  }
}

IndexSet mask_to_set(std::uint64_t mask, std::size_t n) {
  IndexSet s;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1U) s.push_back(static_cast<Index>(i));
  }
  return s;
}

}  // namespace

SubsetVerdict reducible_bruteforce(const Tensor& t) {
  const std::size_t n = t.dim();
  guard(n, kMaxSubsetDim, "reducible_bruteforce");
  SubsetVerdict v;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    ++v.work;
    bool zero = true;
    for (std::size_t k = 0; k < t.nnz() && zero; ++k) {
      const auto idx = t.indices(k);
      if (!(mask >> idx[0] & 1U)) continue;
      const bool outside =
          std::none_of(idx.begin() + 1, idx.end(), [&](Index j) { return mask >> j & 1U; });
      if (outside) zero = false;
    }
    if (zero) {
      v.reducible = true;
      v.witness = mask_to_set(mask, n);
      return v;
    }
  }
  return v;
}

NonnegativeMatrix dense_representation(const Tensor& t) {
  const std::size_t n = t.dim();
  const auto m = static_cast<std::size_t>(t.order());
  NonnegativeMatrix g(n);
  std::vector<Index> full(m);
  for (std::size_t i = 0; i < n; ++i) {
    full[0] = static_cast<Index>(i);
    for_each_tuple(n, m - 1, [&](const std::vector<Index>& tail) {
      std::copy(tail.begin(), tail.end(), full.begin() + 1);
      const double value = t.at(full);
      if (value == 0.0) return;
      for (std::size_t j = 0; j < n; ++j) {
        if (std::find(tail.begin(), tail.end(), static_cast<Index>(j)) != tail.end()) {
          g.add(i, j, value);
        }
      }
    });
  }
  return g;
}

SubsetVerdict weakly_reducible_bruteforce(const Tensor& t) {
  const std::size_t n = t.dim();
  guard(n, kMaxSubsetDim, "weakly_reducible_bruteforce");
  const NonnegativeMatrix g = dense_representation(t);
  SubsetVerdict v;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    ++v.work;
    bool zero = true;
    for (std::size_t i = 0; i < n && zero; ++i) {
      if (!(mask >> i & 1U)) continue;
      for (std::size_t j = 0; j < n && zero; ++j) {
        if (!(mask >> j & 1U) && g(i, j) > 0.0) zero = false;
      }
    }
    if (zero) {
      v.reducible = true;
      v.witness = mask_to_set(mask, n);
      return v;
    }
  }
  return v;
}

bool matrix_irreducible_dense(const NonnegativeMatrix& m) {
  guard(m.dim(), kMaxDenseDim, "matrix_irreducible_dense");
  for (const auto& row : reachability(m)) {
    if (std::find(row.begin(), row.end(), false) != row.end()) return false;
  }
  return true;
}

std::vector<IndexSet> dense_blocks(const NonnegativeMatrix& m) {
  const std::size_t n = m.dim();
  guard(n, kMaxDenseDim, "dense_blocks");
  const Dense c = reachability(m);

  std::vector<std::size_t> col_count(n, 0);
  std::vector<std::size_t> row_count(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (c[i][j]) {
        ++row_count[i];
        ++col_count[j];
      }
    }
  }
  // Symmetric permutations only reorder, so both sorts can act on one order.
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return col_count[a] < col_count[b]; });
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return row_count[a] > row_count[b]; });

  std::vector<bool> taken(n, false);
  std::vector<IndexSet> blocks;
  for (Index seed : order) {
    if (taken[seed]) continue;
    IndexSet block{seed};
    taken[seed] = true;
    for (Index d : order) {
      if (!taken[d] && c[seed][d] && c[d][seed]) {
        block.push_back(d);
        taken[d] = true;
      }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

GridVerdict cw_grid(const Tensor& t, std::size_t resolution) {
  const std::size_t n = t.dim();
  guard(n, kMaxGridDim, "cw_grid");
  if (resolution < n) throw std::invalid_argument("cw_grid: resolution must be at least n");
  if (n > 1 && weakly_reducible_bruteforce(t).reducible) {
    throw NotWeaklyIrreducible("cw_grid needs a weakly irreducible tensor");
  }

  const int degree = t.order() - 1;
  GridVerdict v;
  v.lower_bound = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> parts(n, 1);
  Vector x(n);

  // Visit every composition of `resolution` into n positive parts.
  auto evaluate = [&] {
    ++v.work;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = static_cast<double>(parts[i]) / static_cast<double>(resolution);
    }
    std::vector<double> y(n, 0.0);
    for (std::size_t k = 0; k < t.nnz(); ++k) {
      double term = t.value(k);
      for (Index j : t.trailing(k)) term *= x[j];
      y[t.row(k)] += term;
    }
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) worst = std::min(worst, y[i] / std::pow(x[i], degree));
    if (worst > v.lower_bound) {
      v.lower_bound = worst;
      v.point = x;
    }
  };

  auto recurse = [&](auto&& self, std::size_t pos, std::size_t remaining) -> void {
    if (pos + 1 == n) {
      parts[pos] = remaining;
      evaluate();
      return;
    }
    const std::size_t slots_after = n - pos - 1;
    for (std::size_t k = 1; k + slots_after <= remaining; ++k) {
      parts[pos] = k;
      self(self, pos + 1, remaining - k);
    }
  };
  recurse(recurse, 0, resolution);
  return v;
}

MatrixRadius matrix_radius_reference(const NonnegativeMatrix& m, std::size_t max_iterations) {
  const std::size_t n = m.dim();
  MatrixRadius out;
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  std::vector<double> y(n);
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += m(i, j) * x[j];
      y[i] = s;
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    bool positive = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] <= 0.0) {
        positive = false;
        continue;
      }
      lo = std::min(lo, y[i] / x[i]);
      hi = std::max(hi, y[i] / x[i]);
    }
    out = {0.5 * (lo + hi), lo, hi, it, false};
    if (positive && hi - lo <= 1e-13 * std::max(1.0, hi)) {
      out.converged = true;
      return out;
    }
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += y[i];
      total += x[i];
    }
    for (double& c : x) c /= total;
  }
  return out;
}

}  // namespace nonneg::oracle
