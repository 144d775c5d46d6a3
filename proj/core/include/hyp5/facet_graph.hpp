#pragma once
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyp5/bitmatrix.hpp"

namespace hyp5 {

// Simple undirected graph with bit-row adjacency and canonical integer-tuple
// vertex labels (sorted point sets or F5 vectors, depending on the build).
struct FacetGraph {
  int n = 0;
  std::vector<BitVec> adj;
  std::vector<std::vector<int>> labels;

  explicit FacetGraph(int nverts = 0);

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return adj[u].get(std::size_t(v)); }
  int degree(int u) const { return int(adj[u].weight()); }
  std::uint64_t edge_count() const;  // unordered edges
  // Symmetry and loop-freeness; throws ConstructionMismatchError on failure.
  void check_simple() const;
};

// Permutation of the vertices acting freely with uniform orbit size.
struct FreeCyclicAction {
  std::vector<int> perm;
  int order = 0;

  int apply(int v, int times = 1) const;
  std::vector<std::vector<int>> orbits() const;  // listed by smallest element
};

// Throws unless psi^order = id and no psi^j (0 < j < order) has a fixed point.
void certify_free_action(const FreeCyclicAction& psi, int nverts);

// Arc-list text format: "p edge N M" with M counting directed arcs (both
// directions of every edge), then one "e u v" line per arc, 1-based,
// lexicographically sorted. Readers verify symmetry and loop-freeness.
void write_graph_file(std::ostream& os, const FacetGraph& g);
FacetGraph read_graph_file(std::istream& is);
void write_graph_file(const std::string& path, const FacetGraph& g);
FacetGraph read_graph_file_from(const std::string& path);

}  // namespace hyp5
