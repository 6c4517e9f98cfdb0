#include "nonneg/digraph.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace nonneg {

Digraph support_digraph(const NonnegativeMatrix& m) {
  Digraph g(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (m(i, j) > 0.0) g[i].push_back(static_cast<Index>(j));
    }
  }
  return g;
}

std::vector<std::size_t> strong_components(const Digraph& g, std::size_t& count) {
  constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
  const std::size_t n = g.size();
  std::vector<std::size_t> order(n, unvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<std::size_t> component(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<Index> stack;
  std::vector<std::pair<Index, std::size_t>> frames;
  std::size_t next_order = 0;
  count = 0;

  for (std::size_t s = 0; s < n; ++s) {
    if (order[s] != unvisited) continue;
    order[s] = low[s] = next_order++;
    stack.push_back(static_cast<Index>(s));
    on_stack[s] = true;
    frames.emplace_back(static_cast<Index>(s), 0);

    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < g[v].size()) {
        const Index w = g[v][pos++];
        if (order[w] == unvisited) {
          order[w] = low[w] = next_order++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], order[w]);
        }
        continue;
      }

      const Index done = v;
      frames.pop_back();
      if (low[done] == order[done]) {
        Index w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component[w] = count;
        } while (w != done);
        ++count;
      }
      if (!frames.empty()) {
        const Index parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return component;
}

}  // namespace nonneg
