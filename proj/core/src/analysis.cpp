#include "nonneg/analysis.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>

#include "nonneg/digraph.hpp"
#include "nonneg/errors.hpp"

namespace nonneg {
namespace {

using Support = std::vector<bool>;

// One boolean F_T step: rows having an entry whose trailing indices all lie
// in `s`.
Support support_step(const Tensor& t, const Support& s) {
  Support next(t.dim(), false);
  for (std::size_t k = 0; k < t.nnz(); ++k) {
    if (next[t.row(k)]) continue;
    const auto tail = t.trailing(k);
    if (std::all_of(tail.begin(), tail.end(), [&](Index j) { return s[j]; })) {
      next[t.row(k)] = true;
    }
  }
  return next;
}

Support close(const Tensor& t, Support s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < t.nnz(); ++k) {
      if (s[t.row(k)]) continue;
      const auto tail = t.trailing(k);
      if (std::all_of(tail.begin(), tail.end(), [&](Index j) { return s[j]; })) {
        s[t.row(k)] = true;
        changed = true;
      }
    }
  }
  return s;
}

IndexSet to_index_set(const Support& s) {
  IndexSet out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i]) out.push_back(static_cast<Index>(i));
  }
  return out;
}

bool all_set(const Support& s) {
  return std::all_of(s.begin(), s.end(), [](bool b) { return b; });
}

// Rows of a boolean matrix packed into 64-bit words.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  static BitMatrix pattern(const NonnegativeMatrix& m) {
    BitMatrix b(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
      for (std::size_t j = 0; j < m.dim(); ++j) {
        if (m(i, j) > 0.0) b.set(i, j);
      }
    }
    return b;
  }

  static BitMatrix identity(std::size_t n) {
    BitMatrix b(n);
    for (std::size_t i = 0; i < n; ++i) b.set(i, i);
    return b;
  }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }

  BitMatrix operator*(const BitMatrix& rhs) const {
    BitMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t k = 0; k < n_; ++k) {
        if (!get(i, k)) continue;
        for (std::size_t w = 0; w < words_; ++w) {
          out.bits_[i * words_ + w] |= rhs.bits_[k * words_ + w];
        }
      }
    }
    return out;
  }

  bool all() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (!get(i, j)) return false;
      }
    }
    return true;
  }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace

NonnegativeMatrix majorization(const Tensor& t) {
  NonnegativeMatrix m(t.dim());
  for (std::size_t k = 0; k < t.nnz(); ++k) {
    const auto tail = t.trailing(k);
    if (std::all_of(tail.begin(), tail.end(), [&](Index j) { return j == tail[0]; })) {
      m.set(t.row(k), tail[0], t.value(k));
    }
  }
  return m;
}

NonnegativeMatrix representation(const Tensor& t) {
  NonnegativeMatrix g(t.dim());
  std::vector<Index> distinct;
  for (std::size_t k = 0; k < t.nnz(); ++k) {
    const auto tail = t.trailing(k);
    distinct.assign(tail.begin(), tail.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Index j : distinct) g.add(t.row(k), j, t.value(k));
  }
  return g;
}

Vector row_sums(const Tensor& t) {
  Vector r(t.dim(), 0.0);
  for (std::size_t k = 0; k < t.nnz(); ++k) r[t.row(k)] += t.value(k);
  return r;
}

IndexSet support_closure(const Tensor& t, std::span<const Index> start) {
  if (start.empty()) throw InvalidTensor("support closure needs a nonempty start set");
  Support s(t.dim(), false);
  for (Index i : start) {
    if (i >= t.dim()) {
      throw InvalidTensor("support index " + std::to_string(i + 1) + " out of range");
    }
    s[i] = true;
  }
  return to_index_set(close(t, std::move(s)));
}

std::optional<IndexSet> proper_closed_set(const Tensor& t) {
  for (std::size_t j = 0; j < t.dim(); ++j) {
    Support s(t.dim(), false);
    s[j] = true;
    s = close(t, std::move(s));
    if (!all_set(s)) return to_index_set(s);
  }
  return std::nullopt;
}

bool is_irreducible(const Tensor& t) { return !proper_closed_set(t).has_value(); }

bool matrix_irreducible(const NonnegativeMatrix& m) {
  if (m.dim() <= 1) return true;
  std::size_t count = 0;
  strong_components(support_digraph(m), count);
  return count == 1;
}

bool matrix_primitive(const NonnegativeMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return false;
  if (n == 1) return m(0, 0) > 0.0;
  std::size_t exponent = n * n - 2 * n + 2;
  BitMatrix base = BitMatrix::pattern(m);
  BitMatrix result = BitMatrix::identity(n);
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result.all();
}

bool tensor_primitive(const Tensor& t, const PrimitivityOptions& options) {
  const std::size_t n = t.dim();
  if (n == 1) return t.diagonal(0) > 0.0;

  const Vector r = row_sums(t);
  if (std::any_of(r.begin(), r.end(), [](double v) { return v <= 0.0; })) return false;
  if (matrix_primitive(majorization(t))) return true;
  if (!matrix_primitive(representation(t))) return false;

  const std::size_t cap =
      options.max_states != 0 ? options.max_states : std::size_t{1} << std::min<std::size_t>(n, 20);

  // With R(T) > 0 the full support maps to itself, so each start either
  // reaches it or falls into a cycle of proper supports.
  for (std::size_t j = 0; j < n; ++j) {
    Support s(n, false);
    s[j] = true;
    std::unordered_set<Support> visited;
    while (!all_set(s)) {
      if (std::none_of(s.begin(), s.end(), [](bool b) { return b; })) return false;
      if (!visited.insert(s).second) return false;
      if (visited.size() > cap) {
        throw PrimitivityUndecided("primitivity undecided: more than " + std::to_string(cap) +
                                   " support states from index " + std::to_string(j + 1));
      }
      s = support_step(t, s);
    }
  }
  return true;
}

StructureProfile classify(const Tensor& t, const PrimitivityOptions& options) {
  StructureProfile p;
  const Vector r = row_sums(t);
  p.strictly_nonnegative = std::all_of(r.begin(), r.end(), [](double v) { return v > 0.0; });

  const NonnegativeMatrix g = representation(t);
  p.weakly_irreducible = matrix_irreducible(g);
  p.weakly_primitive = matrix_primitive(g);
  p.irreducible = is_irreducible(t);

  const NonnegativeMatrix m = majorization(t);
  p.weakly_positive = true;
  p.essentially_positive = true;
  for (std::size_t i = 0; i < t.dim(); ++i) {
    for (std::size_t j = 0; j < t.dim(); ++j) {
      if (m(i, j) > 0.0) continue;
      p.essentially_positive = false;
      if (i != j) p.weakly_positive = false;
    }
  }
  p.primitive = tensor_primitive(t, options);
  return p;
}

}  // namespace nonneg
