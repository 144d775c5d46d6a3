#pragma once
#include <cstdint>
#include <functional>
#include <vector>

#include "hyp5/facet_graph.hpp"

namespace hyp5 {

// A good set picks one vertex per psi-orbit and is independent in the graph.
// The search branches over orbits in increasing order of remaining candidate
// count (fail-first) with bitmask pruning.

// Exact census, parallelized over the root orbit's candidates. progress (if
// set) is invoked after each finished root branch with (done, total).
std::uint64_t count_good_sets(const FacetGraph& g, const FreeCyclicAction& psi, int threads = 0,
                              const std::function<void(std::size_t, std::size_t)>& progress = {});

// Streams every good set (sorted vertex list) in deterministic order; the
// callback returns false to stop early.
void for_each_good_set(const FacetGraph& g, const FreeCyclicAction& psi,
                       const std::function<bool(const std::vector<int>&)>& cb);

// n distinct good sets, deterministic for a fixed seed (own Fisher-Yates, so
// the stream does not depend on the standard library implementation).
std::vector<std::vector<int>> sample_good_sets(const FacetGraph& g, const FreeCyclicAction& psi,
                                               std::size_t n, std::uint64_t seed);

// Contract re-check used by tests and the CLI: one vertex per orbit, pairwise
// non-adjacent.
bool is_good_set(const FacetGraph& g, const FreeCyclicAction& psi, const std::vector<int>& s);

}  // namespace hyp5
