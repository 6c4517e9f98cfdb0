#include "nonneg/partition.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

#include "nonneg/analysis.hpp"
#include "nonneg/digraph.hpp"

namespace nonneg {
namespace {

IndexSet relabel(const IndexSet& local, const IndexSet& labels) {
  IndexSet out;
  out.reserve(local.size());
  for (Index i : local) out.push_back(labels[i]);
  return out;
}

void refine_weak(const Tensor& t, const IndexSet& labels, std::vector<Block>& out) {
  const auto parts = matrix_blocks(representation(t));
  if (parts.size() == 1) {
    out.push_back({labels, t});
    return;
  }
  // The induced tensor drops entries that leave the block, so its own
  // representation can be reducible even when the block of G(T) was not.
  for (const auto& part : parts) {
    auto sub = induced(t, part);
    refine_weak(sub.tensor, relabel(sub.indices, labels), out);
  }
}

void refine_strong(const Tensor& t, const IndexSet& labels, std::vector<Block>& out) {
  auto closed = proper_closed_set(t);
  if (!closed) {
    out.push_back({labels, t});
    return;
  }
  // Rows outside the closed set have no entry with every trailing index
  // inside it, so the closed set goes first.
  IndexSet rest;
  std::size_t c = 0;
  for (Index i = 0; i < t.dim(); ++i) {
    if (c < closed->size() && (*closed)[c] == i) {
      ++c;
    } else {
      rest.push_back(i);
    }
  }
  for (const IndexSet* part : {&*closed, &rest}) {
    auto sub = induced(t, *part);
    refine_strong(sub.tensor, relabel(sub.indices, labels), out);
  }
}

IndexSet all_indices(std::size_t n) {
  IndexSet s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Index>(i);
  return s;
}

}  // namespace

std::vector<IndexSet> matrix_blocks(const NonnegativeMatrix& m) {
  const std::size_t n = m.dim();
  const Digraph g = support_digraph(m);
  std::size_t count = 0;
  const auto component = strong_components(g, count);

  std::vector<IndexSet> members(count);
  for (std::size_t v = 0; v < n; ++v) members[component[v]].push_back(static_cast<Index>(v));

  std::vector<std::vector<std::size_t>> successors(count);
  std::vector<std::size_t> in_degree(count, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (Index w : g[v]) {
      if (component[v] != component[w]) successors[component[v]].push_back(component[w]);
    }
  }
  for (auto& s : successors) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (std::size_t c : s) ++in_degree[c];
  }

  // Kahn's algorithm keyed by the smallest index of each component.
  using Ready = std::pair<Index, std::size_t>;
  std::priority_queue<Ready, std::vector<Ready>, std::greater<>> ready;
  for (std::size_t c = 0; c < count; ++c) {
    if (in_degree[c] == 0) ready.emplace(members[c].front(), c);
  }
  std::vector<IndexSet> blocks;
  blocks.reserve(count);
  while (!ready.empty()) {
    const std::size_t c = ready.top().second;
    ready.pop();
    blocks.push_back(members[c]);
    for (std::size_t s : successors[c]) {
      if (--in_degree[s] == 0) ready.emplace(members[s].front(), s);
    }
  }
  return blocks;
}

BlockPartition weak_partition(const Tensor& t) {
  BlockPartition p{PartitionKind::Weak, {}};
  refine_weak(t, all_indices(t.dim()), p.blocks);
  return p;
}

BlockPartition strong_partition(const Tensor& t) {
  BlockPartition p{PartitionKind::Strong, {}};
  refine_strong(t, all_indices(t.dim()), p.blocks);
  return p;
}

}  // namespace nonneg
