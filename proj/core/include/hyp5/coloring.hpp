#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "hyp5/bitmatrix.hpp"
#include "hyp5/facet_graph.hpp"
#include "hyp5/zetavol.hpp"

namespace hyp5 {

// Mod-2 coloring of the facets of a right-angled piece. Column v of lambda is
// the color of facet v (canonical vertex order). shift records the psi-step k
// a QR coloring was built with (basis colorings use 1, hand-built ones 0);
// quotient_compatibility tests the step color(psi^shift F) = R color(F).
struct Coloring {
  int m = 0;               // target dimension (rows of lambda)
  BitMatrix lambda{0, 0};  // m x facet-count characteristic matrix
  int shift = 0;
  // Largest clique bound a validate_coloring pass certified; -1 = never.
  int validated_bound = -1;

  int facets() const { return int(lambda.cols()); }
  BitVec color(int v) const { return lambda.col_vec(std::size_t(v)); }
};

struct ValidationReport {
  bool valid = false;
  int bound = 0;
  // First offending clique in ascending vertex order (ascending DFS order):
  // size 1 = zero color, size 2 = equal colors on an edge, etc.
  std::vector<int> violating_clique;
};

// True iff the colors of every clique of size <= clique_bound are linearly
// independent. Enumerates all cliques (ascending-id DFS over adjacency
// masks); strictly stronger than a per-vertex check on graphs with cliques
// that do not extend to vertices. Stamps c.validated_bound on success.
ValidationReport validate_coloring(const FacetGraph& g, Coloring& c, int clique_bound = 5);

// Facet in psi^j(I) gets basis vector e_j; m = psi.order. Requires I good
// (one vertex per psi-orbit, independent); always valid afterwards.
Coloring basis_coloring(const FacetGraph& g, const FreeCyclicAction& psi,
                        const std::vector<int>& good);

// Facet in psi^{jk}(I) gets column A_j of the QR tables, i.e. column t of
// build_shifted_family(k) on psi^t(I); m = 9. Requires I good, psi of order
// 17 and gcd(k, 17) = 1.
Coloring qr_coloring(const FacetGraph& g, const FreeCyclicAction& psi,
                     const std::vector<int>& good, int k);

// w with w * lambda = all-ones (every color hits 1), or nullopt. Existence
// makes the glued manifold orientable.
std::optional<BitVec> orientability_witness(const Coloring& c);

// Sum over nonzero row-space words omega of (components of the subgraph
// induced on support(omega)) - 1. Field-independent away from
// characteristic 2. Requires a completed validate_coloring at bound >= 5.
std::uint64_t first_betti(const FacetGraph& g, const Coloring& c);

// Minimum support size over nonzero row-space words (the >= 80 floor for QR
// colorings). Throws UndefinedDistanceError when the row space is {0}.
std::size_t min_support_weight(const Coloring& c);

// Diagnostic: component count of the subgraph induced on each single row of
// lambda (weight-one words only, not the full Betti sum).
std::vector<std::uint64_t> row_component_counts(const FacetGraph& g, const Coloring& c);

// True iff color(psi^shift(F)) = R color(F) for every facet F, the condition
// making the quotient map well defined. Structural mismatches (R not m x m,
// psi on the wrong vertex count) report false, not an error.
bool quotient_compatibility(const Coloring& c, const FreeCyclicAction& psi, const BitMatrix& R);

struct ManifoldLedger {
  int m = 0;
  std::uint64_t copies = 0;  // 2^m mirrored copies of the piece
  std::uint64_t quotient = 1;
  std::uint64_t blocks = 0;  // copies * facets_per_piece / quotient
  std::uint64_t prisms = 0;  // blocks * prisms_per_facet_block
  ZetaValue volume;          // prisms * vol(P)
  bool orientable = false;
  std::optional<BitVec> witness;
};

// Exact integer accounting for the glued manifold. quotient > 1 requires psi
// and R with quotient == psi.order and quotient_compatibility true; all
// products are overflow-checked and divisions exact.
ManifoldLedger ledger(const FacetGraph& g, const Coloring& c, std::uint64_t facets_per_piece,
                      std::uint64_t prisms_per_facet_block, std::uint64_t quotient = 1,
                      const FreeCyclicAction* psi = nullptr, const BitMatrix* R = nullptr);

}  // namespace hyp5
