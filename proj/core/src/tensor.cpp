#include "nonneg/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "nonneg/errors.hpp"

namespace nonneg {
namespace {

void require_length(const Tensor& t, std::size_t length, const char* what) {
  if (length != t.dim()) {
    throw DimensionMismatch(std::string(what) + ": vector of length " +
                            std::to_string(length) +
                            " paired with a tensor of dimension " +
                            std::to_string(t.dim()));
  }
}

std::string tuple_string(std::span<const Index> tuple) {
  std::string s = "(";
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    if (k != 0) s += ",";
    s += std::to_string(tuple[k] + 1);
  }
  return s + ")";
}

}  // namespace

Tensor::Tensor(int order, std::size_t dim, std::vector<Entry> entries)
    : order_(order), dim_(dim) {
  if (order < 2) throw InvalidTensor("tensor order must be at least 2");
  if (dim < 1) throw InvalidTensor("tensor dimension must be at least 1");

  const auto m = static_cast<std::size_t>(order);
  std::erase_if(entries, [](const Entry& e) { return e.value == 0.0; });
  for (const auto& e : entries) {
    if (e.indices.size() != m) {
      throw InvalidTensor("entry has " + std::to_string(e.indices.size()) +
                          " indices, tensor order is " + std::to_string(m));
    }
    for (Index i : e.indices) {
      if (i >= dim) {
        throw InvalidTensor("index " + std::to_string(i + 1) +
                            " out of range 1.." + std::to_string(dim));
      }
    }
    if (!std::isfinite(e.value) || e.value < 0.0) {
      throw InvalidTensor("entry " + tuple_string(e.indices) +
                          " has a negative or non-finite value");
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.indices < b.indices; });
  for (std::size_t k = 1; k < entries.size(); ++k) {
    if (entries[k].indices == entries[k - 1].indices) {
      throw InvalidTensor("duplicate entry " + tuple_string(entries[k].indices));
    }
  }

  indices_.reserve(entries.size() * m);
  values_.reserve(entries.size());
  row_ptr_.assign(dim + 1, 0);
  for (const auto& e : entries) {
    indices_.insert(indices_.end(), e.indices.begin(), e.indices.end());
    values_.push_back(e.value);
    ++row_ptr_[e.indices.front() + 1];
  }
  std::partial_sum(row_ptr_.begin(), row_ptr_.end(), row_ptr_.begin());
}

Tensor Tensor::zero(int order, std::size_t dim) { return Tensor(order, dim, {}); }

Tensor Tensor::identity(int order, std::size_t dim) {
  std::vector<Entry> entries;
  entries.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    entries.push_back(
        {std::vector<Index>(static_cast<std::size_t>(order), static_cast<Index>(i)), 1.0});
  }
  return Tensor(order, dim, std::move(entries));
}

double Tensor::at(std::span<const Index> tuple) const {
  if (tuple.size() != static_cast<std::size_t>(order_) || tuple[0] >= dim_) return 0.0;
  auto [lo, hi] = row_range(tuple[0]);
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const auto probe = indices(mid);
    const auto cmp = std::lexicographical_compare_three_way(
        probe.begin(), probe.end(), tuple.begin(), tuple.end());
    if (cmp == 0) return values_[mid];
    if (cmp < 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return 0.0;
}

double Tensor::diagonal(Index i) const {
  const std::vector<Index> tuple(static_cast<std::size_t>(order_), i);
  return at(tuple);
}

std::vector<Entry> Tensor::entries() const {
  std::vector<Entry> out;
  out.reserve(nnz());
  for (std::size_t k = 0; k < nnz(); ++k) {
    const auto idx = indices(k);
    out.push_back({{idx.begin(), idx.end()}, values_[k]});
  }
  return out;
}

Vector contract(const Tensor& t, std::span<const double> x) {
  require_length(t, x.size(), "contract");
  Vector y(t.dim(), 0.0);
  for (std::size_t k = 0; k < t.nnz(); ++k) {
    double term = t.value(k);
    for (Index j : t.trailing(k)) term *= x[j];
    y[t.row(k)] += term;
  }
  return y;
}

Vector power(std::span<const double> x, int p) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double v = 1.0;
    for (int k = 0; k < p; ++k) v *= x[i];
    out[i] = v;
  }
  return out;
}

Vector root(std::span<const double> x, int p) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double v = x[i];
    if (v <= 0.0) {
      out[i] = 0.0;
    } else if (p == 1) {
      out[i] = v;
    } else if (p == 2) {
      out[i] = std::sqrt(v);
    } else {
      out[i] = std::exp(std::log(v) / p);
    }
  }
  return out;
}

Vector f_map(const Tensor& t, std::span<const double> x) {
  return root(contract(t, x), t.order() - 1);
}

InducedTensor induced(const Tensor& t, std::span<const Index> indices) {
  if (indices.empty()) throw InvalidTensor("induced tensor needs a nonempty index set");
  IndexSet sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.back() >= t.dim()) {
    throw InvalidTensor("induced index " + std::to_string(sorted.back() + 1) +
                        " out of range 1.." + std::to_string(t.dim()));
  }

  constexpr Index absent = static_cast<Index>(-1);
  std::vector<Index> local(t.dim(), absent);
  for (std::size_t k = 0; k < sorted.size(); ++k) local[sorted[k]] = static_cast<Index>(k);

  std::vector<Entry> entries;
  for (std::size_t k = 0; k < t.nnz(); ++k) {
    const auto idx = t.indices(k);
    Entry e{std::vector<Index>(idx.size()), t.value(k)};
    bool inside = true;
    for (std::size_t p = 0; p < idx.size() && inside; ++p) {
      e.indices[p] = local[idx[p]];
      inside = e.indices[p] != absent;
    }
    if (inside) entries.push_back(std::move(e));
  }
  return {Tensor(t.order(), sorted.size(), std::move(entries)), std::move(sorted)};
}

Tensor add_identity(const Tensor& t) {
  auto entries = t.entries();
  const auto m = static_cast<std::size_t>(t.order());
  std::vector<bool> has_diagonal(t.dim(), false);
  for (auto& e : entries) {
    const bool diagonal = std::all_of(e.indices.begin(), e.indices.end(),
                                      [&](Index i) { return i == e.indices[0]; });
    if (diagonal) {
      e.value += 1.0;
      has_diagonal[e.indices[0]] = true;
    }
  }
  for (std::size_t i = 0; i < t.dim(); ++i) {
    if (!has_diagonal[i]) entries.push_back({std::vector<Index>(m, static_cast<Index>(i)), 1.0});
  }
  return Tensor(t.order(), t.dim(), std::move(entries));
}

Tensor scaled(const Tensor& t, double c) {
  if (!(c >= 0.0) || !std::isfinite(c)) throw InvalidTensor("scale factor must be finite and >= 0");
  auto entries = t.entries();
  for (auto& e : entries) e.value *= c;
  return Tensor(t.order(), t.dim(), std::move(entries));
}

Tensor permuted(const Tensor& t, std::span<const Index> perm) {
  require_length(t, perm.size(), "permuted");
  std::vector<bool> seen(perm.size(), false);
  for (Index p : perm) {
    if (p >= perm.size() || seen[p]) throw InvalidTensor("relabelling is not a permutation");
    seen[p] = true;
  }
  auto entries = t.entries();
  for (auto& e : entries) {
    for (auto& i : e.indices) i = perm[i];
  }
  return Tensor(t.order(), t.dim(), std::move(entries));
}

bool is_symmetric(const Tensor& t) {
  for (std::size_t k = 0; k < t.nnz(); ++k) {
    const auto idx = t.indices(k);
    std::vector<Index> tuple(idx.begin(), idx.end());
    std::sort(tuple.begin(), tuple.end());
    do {
      if (t.at(tuple) != t.value(k)) return false;
    } while (std::next_permutation(tuple.begin(), tuple.end()));
  }
  return true;
}

double residual(const Tensor& t, double lambda, std::span<const double> x) {
  require_length(t, x.size(), "residual");
  const Vector y = contract(t, x);
  const Vector p = power(x, t.order() - 1);
  double sum = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double d = y[i] - lambda * p[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

}  // namespace nonneg
