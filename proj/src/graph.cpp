#include "graph.hpp"

#include <algorithm>
#include <limits>

namespace gradelic::graph {

std::vector<std::size_t> scc(const Adjacency& adj, std::size_t* count) {
  constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
  const std::size_t n = adj.size();
  std::vector<std::size_t> index(n, unset), low(n, 0), comp(n, unset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // (vertex, next edge)
  std::size_t next_index = 0, next_comp = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unset) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, e] = call.back();
      if (e < adj[v].size()) {
        std::size_t w = adj[v][e++];
        if (index[w] == unset) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = next_comp;
        } while (w != v);
        ++next_comp;
      }
      std::size_t done = v;
      call.pop_back();
      if (!call.empty()) {
        std::size_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  if (count) *count = next_comp;
  return comp;
}

std::vector<bool> on_cycle(const Adjacency& adj) {
  std::size_t k = 0;
  auto comp = scc(adj, &k);
  std::vector<std::size_t> members(k, 0);
  for (std::size_t c : comp) ++members[c];
  std::vector<bool> out(adj.size(), false);
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (members[comp[v]] > 1) {
      out[v] = true;
      continue;
    }
    for (std::size_t w : adj[v]) {
      if (w == v) out[v] = true;
    }
  }
  return out;
}

std::vector<bool> can_reach(const Adjacency& adj, const std::vector<bool>& target) {
  Adjacency rev(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) {
    for (std::size_t w : adj[v]) rev[w].push_back(v);
  }
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::size_t> work;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (target[v]) {
      seen[v] = true;
      work.push_back(v);
    }
  }
  while (!work.empty()) {
    std::size_t v = work.back();
    work.pop_back();
    for (std::size_t u : rev[v]) {
      if (!seen[u]) {
        seen[u] = true;
        work.push_back(u);
      }
    }
  }
  return seen;
}

std::vector<bool> reachable(const Adjacency& adj, std::size_t from) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::size_t> work{from};
  seen[from] = true;
  while (!work.empty()) {
    std::size_t v = work.back();
    work.pop_back();
    for (std::size_t w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        work.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace gradelic::graph
