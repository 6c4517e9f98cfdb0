#include "nonneg/matrix.hpp"

#include <cmath>
#include <string>

#include "nonneg/errors.hpp"

namespace nonneg {
namespace {

void check_value(double v) {
  if (!std::isfinite(v) || v < 0.0) {
    throw InvalidTensor("matrix entries must be finite and nonnegative");
  }
}

}  // namespace

NonnegativeMatrix NonnegativeMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  NonnegativeMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw InvalidTensor("matrix row " + std::to_string(i + 1) + " has " +
                          std::to_string(rows[i].size()) + " entries, expected " +
                          std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

NonnegativeMatrix NonnegativeMatrix::identity(std::size_t dim) {
  NonnegativeMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 1.0);
  return m;
}

void NonnegativeMatrix::set(std::size_t i, std::size_t j, double v) {
  check_value(v);
  values_[i * dim_ + j] = v;
}

void NonnegativeMatrix::add(std::size_t i, std::size_t j, double v) {
  check_value(v);
  values_[i * dim_ + j] += v;
}

std::vector<std::vector<double>> NonnegativeMatrix::rows() const {
  std::vector<std::vector<double>> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    out[i].assign(values_.begin() + static_cast<std::ptrdiff_t>(i * dim_),
                  values_.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim_));
  }
  return out;
}

}  // namespace nonneg
