#pragma once
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "hyp5/f5.hpp"
#include "hyp5/facet_graph.hpp"

namespace hyp5 {

// The 650-vertex graph on {v : K(v,v) = 3} with edges {v,w} where K(v,w) = 1,
// certified against the orbit construction: vertices = Q v0, edges = Q-orbit
// of the ordered pair (v0, eps v0) (78000 ordered pairs, 120-regular).
struct F5GraphBundle {
  FacetGraph graph;
  std::vector<F5Vec> verts;        // lexicographic order, parallel to vertex ids
  std::array<int, 3125> index{};   // vector key -> vertex id, or -1
  std::uint64_t ordered_pairs = 0; // 78000
  int v0 = -1;                     // id of (0,0,0,0,1)

  int vertex_of(const F5Vec& v) const { return index[f5vec_key(v)]; }
};

F5GraphBundle build_f5_graph();

struct CliqueCensus {
  std::uint64_t total = 0;                        // 156000
  std::vector<std::uint64_t> orbit_sizes;         // real orbit first: 78000, 78000
  std::vector<std::array<int, 5>> real_cliques;   // canonical sorted vertex ids
  std::array<int, 5> seed{};                      // {v0, e v0, de v0, gde v0, bgde v0}
};
CliqueCensus five_clique_census(const F5GraphBundle& b);

struct LAnalysis {
  std::size_t l_order = 0;                 // 125
  std::vector<std::vector<int>> orbits;    // 26 orbits of 25 vertex ids
  bool all_independent = false;
  std::vector<std::uint32_t> compat;       // orbit-compatibility bitmasks
  std::uint64_t pairing_count = 0;         // 64
  std::vector<std::vector<std::pair<int, int>>> pairings;  // all perfect matchings
};
LAnalysis l_subgroup_analysis(const F5GraphBundle& b);

// Exact-rank evidence for Adj + shift*I over the rationals: rank mod a large
// prime (a lower bound for the rational rank) plus integer kernel vectors
// verified exactly (each lowers the upper bound by one). When
// gfp_rank + verified_kernel_dim == n the rational rank equals gfp_rank.
struct RankCertificate {
  int n = 0;
  int gfp_rank = 0;
  int verified_kernel_dim = 0;
  std::vector<std::vector<long long>> kernel;
};
RankCertificate shifted_adjacency_rank(const FacetGraph& g, int shift);

struct SpectralReport {
  int degree = 0;             // 120 = largest eigenvalue of a connected regular graph
  RankCertificate rank10;     // for Adj + 10*I; deficiency certifies eigenvalue -10
  std::vector<int> coloring;  // proper coloring from an L-orbit pairing
  int colors = 0;             // 13
};
SpectralReport spectral_certificate(const F5GraphBundle& b, const LAnalysis& l);

struct EulerReport {
  std::array<std::uint64_t, 5> faces{};  // counts in dimensions 0..4
  long long chi = 0;
};
EulerReport euler_characteristic_X(int nverts, const std::vector<std::array<int, 5>>& cliques);

}  // namespace hyp5
