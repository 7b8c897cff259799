#pragma once

// Small graph helpers shared by the automata and game code. Internal only.

#include <cstddef>
#include <vector>

namespace gradelic::graph {

using Adjacency = std::vector<std::vector<std::size_t>>;

// Tarjan's algorithm, iterative so deep games do not blow the stack.
// Returns the component index of each vertex; components come out in
// reverse topological order.
std::vector<std::size_t> scc(const Adjacency& adj, std::size_t* count = nullptr);

// True for vertices lying on some cycle (a non-trivial SCC or a self-loop).
std::vector<bool> on_cycle(const Adjacency& adj);

// Vertices from which some vertex in `target` is reachable (targets included).
std::vector<bool> can_reach(const Adjacency& adj, const std::vector<bool>& target);

// Vertices reachable from `from`.
std::vector<bool> reachable(const Adjacency& adj, std::size_t from);

}  // namespace gradelic::graph
