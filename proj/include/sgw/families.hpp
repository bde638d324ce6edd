#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sgw/graph.hpp"

namespace sgw {

enum class Family { path, cycle, star, complete, complete_bipartite, blowup, theta };

// Named graph family plus its integer parameters:
//   path/cycle/star/complete   {n}
//   complete_bipartite         {a, b}
//   blowup                     {n_1, ..., n_t}  blowup of the cycle C_t, t >= 3
//   theta                      {l_1, ..., l_t}  t internally disjoint paths of
//                                               the given lengths between x, y
struct FamilySpec {
  Family family = Family::path;
  std::vector<int> params;
};

// Vertex-order conventions:
//   path, cycle       traversal order
//   star              center 0, leaves 1..n-1
//   complete          edges in lexicographic order
//   complete_bipartite  parts {0..a-1} and {a..a+b-1}
//   blowup            parts contiguous; edges grouped by consecutive part pair
//   theta             endpoints x=0, y=1, then internal vertices path by path
Graph make_family(const FamilySpec& spec);

// Blowup of an arbitrary base graph: vertex i becomes an independent set of
// size parts[i], edges become complete bipartite joins.
Graph blowup(const Graph& base, const std::vector<int>& parts);

// Parses "cycle:11", "blowup:2,2,2", "complete-bipartite:2,3", "theta:1,2,2".
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

inline Graph path_graph(int n) { return make_family({Family::path, {n}}); }
inline Graph cycle_graph(int n) { return make_family({Family::cycle, {n}}); }
inline Graph star_graph(int n) { return make_family({Family::star, {n}}); }
inline Graph complete_graph(int n) { return make_family({Family::complete, {n}}); }
inline Graph complete_bipartite_graph(int a, int b) {
  return make_family({Family::complete_bipartite, {a, b}});
}
inline Graph theta_graph(std::vector<int> lengths) {
  return make_family({Family::theta, std::move(lengths)});
}

}  // namespace sgw
