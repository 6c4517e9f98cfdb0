#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace nonneg {

/// Zero-based tensor index. Text formats and CLI output are one-based.
using Index = std::uint32_t;
using Vector = std::vector<double>;
/// Sorted, duplicate-free list of zero-based indices.
using IndexSet = std::vector<Index>;

struct Entry {
  std::vector<Index> indices;
  double value = 0.0;
};

/// Sparse nonnegative tensor of order m >= 2 and dimension n >= 1.
///
/// Entries are kept in lexicographic order of their index tuples, so two
/// tensors with the same nonzero pattern and values compare equal. Only
/// strictly positive values are stored; explicit zeros passed to the
/// constructor are dropped. Instances are immutable.
class Tensor {
 public:
  /// Throws InvalidTensor on order < 2, dim < 1, a tuple of the wrong length,
  /// an index >= dim, a negative or non-finite value, or a repeated tuple.
  Tensor(int order, std::size_t dim, std::vector<Entry> entries);

  static Tensor zero(int order, std::size_t dim);
  static Tensor identity(int order, std::size_t dim);

  int order() const { return order_; }
  std::size_t dim() const { return dim_; }
  std::size_t nnz() const { return values_.size(); }

  /// Full index tuple of the k-th stored entry.
  std::span<const Index> indices(std::size_t k) const {
    return {indices_.data() + k * static_cast<std::size_t>(order_),
            static_cast<std::size_t>(order_)};
  }
  /// Indices i2..im of the k-th stored entry.
  std::span<const Index> trailing(std::size_t k) const {
    return indices(k).subspan(1);
  }
  Index row(std::size_t k) const {
    return indices_[k * static_cast<std::size_t>(order_)];
  }
  double value(std::size_t k) const { return values_[k]; }

  /// Half-open range of stored entries whose first index is i.
  std::pair<std::size_t, std::size_t> row_range(Index i) const {
    return {row_ptr_[i], row_ptr_[i + 1]};
  }

  /// Value at a full index tuple; 0 when absent.
  double at(std::span<const Index> tuple) const;
  double diagonal(Index i) const;

  std::vector<Entry> entries() const;

  bool operator==(const Tensor&) const = default;

 private:
  int order_;
  std::size_t dim_;
  std::vector<Index> indices_;
  std::vector<double> values_;
  std::vector<std::size_t> row_ptr_;
};

struct Eigenpair {
  double value = 0.0;
  Vector vector;
  /// 2-norm of T x^{m-1} - value * x^{[m-1]}.
  double residual = 0.0;
};

/// Induced sub-tensor together with the original index of each local index.
struct InducedTensor {
  Tensor tensor;
  IndexSet indices;
};

/// (T x^{m-1})_i = sum over row-i entries of value * x_{i2} * ... * x_{im}.
Vector contract(const Tensor& t, std::span<const double> x);

/// Componentwise (m-1)-th root of contract(t, x). x must be nonnegative.
Vector f_map(const Tensor& t, std::span<const double> x);

/// x^{[p]}: componentwise power.
Vector power(std::span<const double> x, int p);

/// Componentwise p-th root of a nonnegative vector; the root of 0 is 0.
Vector root(std::span<const double> x, int p);

/// Keeps the entries whose indices all lie in `indices`, relabelled by their
/// position in the sorted set. Throws InvalidTensor for an empty set or an
/// out-of-range index.
InducedTensor induced(const Tensor& t, std::span<const Index> indices);

/// T + E, where E is the identity tensor of the same order and dimension.
Tensor add_identity(const Tensor& t);

/// c * T for c >= 0.
Tensor scaled(const Tensor& t, double c);

/// Relabels every index position simultaneously: entry (i1..im) moves to
/// (perm[i1]..perm[im]). perm must be a permutation of 0..n-1.
Tensor permuted(const Tensor& t, std::span<const Index> perm);

/// True iff every entry equals the entry at each permutation of its tuple.
bool is_symmetric(const Tensor& t);

/// 2-norm of contract(t, x) - lambda * x^{[m-1]}.
double residual(const Tensor& t, double lambda, std::span<const double> x);

}  // namespace nonneg
