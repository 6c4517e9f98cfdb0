#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "nonneg/matrix.hpp"
#include "nonneg/tensor.hpp"

namespace nonneg {

/// The seven structural classes of a nonnegative tensor.
struct StructureProfile {
  bool strictly_nonnegative = false;
  bool weakly_irreducible = false;
  bool weakly_primitive = false;
  bool irreducible = false;
  bool primitive = false;
  bool weakly_positive = false;
  bool essentially_positive = false;

  bool operator==(const StructureProfile&) const = default;
};

struct PrimitivityOptions {
  /// Budget of distinct support states visited per starting index. Zero
  /// selects 2^min(n, 20).
  std::size_t max_states = 0;
};

/// M(T)_{ij} = T_{ij...j}.
NonnegativeMatrix majorization(const Tensor& t);

/// G(T)_{ij} = sum of the row-i entries whose trailing indices contain j.
/// An entry adds its full value once for every distinct trailing index.
NonnegativeMatrix representation(const Tensor& t);

/// R(T)_i = sum of row-i entries, i.e. contract(t, ones).
Vector row_sums(const Tensor& t);

/// Smallest superset of `start` closed under: i joins when some entry
/// T_{i i2..im} > 0 has all of i2..im in the set. Throws InvalidTensor for an
/// empty or out-of-range start set.
IndexSet support_closure(const Tensor& t, std::span<const Index> start);

/// First proper closed set found by closing the singletons {0}, {1}, ... in
/// order, or nullopt when the tensor is irreducible. The complement of the
/// returned set is a reducibility witness.
std::optional<IndexSet> proper_closed_set(const Tensor& t);

bool is_irreducible(const Tensor& t);

/// Strong connectivity of the support digraph. dim 1 counts as irreducible.
bool matrix_irreducible(const NonnegativeMatrix& m);

/// Boolean power M^{n^2-2n+2} is entrywise positive. dim 1: M_11 > 0.
bool matrix_primitive(const NonnegativeMatrix& m);

/// Exact primitivity of the tensor map F_T. Throws PrimitivityUndecided when
/// the support-state budget is exhausted.
bool tensor_primitive(const Tensor& t, const PrimitivityOptions& options = {});

StructureProfile classify(const Tensor& t, const PrimitivityOptions& options = {});

}  // namespace nonneg
