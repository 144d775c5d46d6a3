#pragma once
#include <cstdint>
#include <vector>

#include "hyp5/facet_graph.hpp"
#include "hyp5/permgroup.hpp"
#include "hyp5/toddcoxeter.hpp"

namespace hyp5 {

// The 272-vertex adjacency graph of the long pieces, built from the coset
// action of [5,3,3,3] on the 170 cosets of the index-170 subgroup. Vertices
// are the orbit of a 10-point sigma-orbit omega under elementwise action,
// labeled by the sorted point sets in lexicographic order.
struct LongGraphBundle {
  FacetGraph graph;
  FreeCyclicAction psi;              // (abcde)^2, order 17
  CosetTable table;                  // the 170-coset table
  std::vector<int> omega;            // seed vertex (sorted point set)
  std::uint64_t group_order = 0;     // 1958400
  std::uint64_t stab_order = 0;      // 7200
  std::vector<std::size_t> sigma_orbit_sizes;  // ascending: 10, 10, 150
};

// which_omega: 0 or 1 picks one of the two 10-point sigma orbits (0 default,
// listed by smallest element). Every build is fully certified: vertex count,
// simplicity, generator closure on vertices and edges, stabilizer order, and
// freeness of psi; failures throw ConstructionMismatchError.
LongGraphBundle build_long_graph(int which_omega = 0);

// Isomorphism-invariant profile used to compare the two omega choices:
// vertex count, edge count, sorted degree sequence, psi orbit sizes.
std::vector<std::uint64_t> long_graph_profile(const LongGraphBundle& b);

}  // namespace hyp5
