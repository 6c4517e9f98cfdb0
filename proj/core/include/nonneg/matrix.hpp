#pragma once

#include <cstddef>
#include <vector>

namespace nonneg {

/// Dense square matrix with nonnegative entries, stored row-major.
class NonnegativeMatrix {
 public:
  explicit NonnegativeMatrix(std::size_t dim) : dim_(dim), values_(dim * dim, 0.0) {}

  /// Throws InvalidTensor if the rows are ragged or hold a negative or
  /// non-finite value.
  static NonnegativeMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static NonnegativeMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * dim_ + j]; }

  void set(std::size_t i, std::size_t j, double v);
  void add(std::size_t i, std::size_t j, double v);

  std::vector<std::vector<double>> rows() const;

  bool operator==(const NonnegativeMatrix&) const = default;

 private:
  std::size_t dim_;
  std::vector<double> values_;
};

}  // namespace nonneg
