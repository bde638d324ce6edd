#pragma once

#include <cstdint>

#include "sgw/graph.hpp"
#include "sgw/labels.hpp"
#include "sgw/path_engine.hpp"

namespace sgw {

// W(G): sum of BFS distances over unordered pairs; Infinite when G is
// disconnected with at least two vertices.
ExtendedCount wiener_classical(const Graph& g);

// W_sigma(G): sum of signed distances over unordered pairs.
ExtendedCount wiener_signed(const Graph& g, const Signing& s, const EngineLimits& limits = {});

// Sum over components of |U_i||V_i| when G is bipartite, 0 otherwise. Every
// signing has W_sigma(G) >= this value.
ExtendedCount bipartite_lower_bound(const Graph& g);

// Number of degree-1 vertices; also a lower bound on W_sigma(G).
std::uint64_t leaf_lower_bound(const Graph& g);

// Signed Wiener index of a tree via the unique path between each pair.
// Requires is_tree(t).
std::uint64_t tree_signed_wiener(const Graph& t, const Signing& s);

}  // namespace sgw
