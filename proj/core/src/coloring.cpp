#include "hyp5/coloring.hpp"

#include <bit>
#include <cstdint>
#include <limits>

#include "hyp5/codes17.hpp"
#include "hyp5/errors.hpp"
#include "hyp5/goodsets.hpp"

namespace hyp5 {

namespace {

void and_into(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] &= src[k];
}

template <typename F>
void for_each_bit(const std::vector<std::uint64_t>& words, F&& f) {
  for (std::size_t k = 0; k < words.size(); ++k) {
    std::uint64_t w = words[k];
    while (w) {
      f(int(k * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
}

// Ascending-id clique DFS carrying an xor echelon basis of the packed colors;
// the first dependent extension (in lexicographic clique order) is reported.
struct Validator {
  const std::vector<BitVec>& up;  // adj(v) restricted to ids > v
  const std::vector<std::uint64_t>& packed;
  int bound;
  std::uint64_t lead[64] = {};
  std::vector<int> clique;
  std::vector<int> witness;

  // False when x lies in the span; otherwise inserts and records the slot.
  bool insert(std::uint64_t x, int& slot) {
    while (x) {
      int b = 63 - std::countl_zero(x);
      if (!lead[b]) {
        lead[b] = x;
        slot = b;
        return true;
      }
      x ^= lead[b];
    }
    return false;
  }

  bool dfs(int v, const BitVec& cand) {
    clique.push_back(v);
    int slot = -1;
    if (!insert(packed[std::size_t(v)], slot)) {
      witness = clique;
      clique.pop_back();
      return false;
    }
    bool ok = true;
    if (int(clique.size()) < bound) {
      for (std::size_t k = 0; k < cand.words().size() && ok; ++k) {
        std::uint64_t w = cand.words()[k];
        while (w && ok) {
          int u = int(k * 64 + std::countr_zero(w));
          w &= w - 1;
          BitVec next = cand;
          and_into(next.words(), up[std::size_t(u)].words());
          ok = dfs(u, next);
        }
      }
    }
    lead[slot] = 0;
    clique.pop_back();
    return ok;
  }
};

std::uint64_t component_count(const FacetGraph& g, const BitVec& support) {
  std::vector<std::uint64_t> remaining = support.words();
  std::size_t nw = remaining.size();
  std::uint64_t comps = 0;
  std::vector<std::uint64_t> frontier(nw), next(nw);
  while (true) {
    int start = -1;
    for (std::size_t k = 0; k < nw && start < 0; ++k)
      if (remaining[k]) start = int(k * 64 + std::countr_zero(remaining[k]));
    if (start < 0) break;
    ++comps;
    std::fill(frontier.begin(), frontier.end(), 0);
    frontier[std::size_t(start) >> 6] = std::uint64_t(1) << (start & 63);
    remaining[std::size_t(start) >> 6] &= ~(std::uint64_t(1) << (start & 63));
    while (true) {
      std::fill(next.begin(), next.end(), 0);
      for_each_bit(frontier, [&](int v) {
        const auto& aw = g.adj[std::size_t(v)].words();
        for (std::size_t k = 0; k < nw; ++k) next[k] |= aw[k] & remaining[k];
      });
      bool any = false;
      for (std::size_t k = 0; k < nw; ++k) {
        remaining[k] &= ~next[k];
        any = any || next[k];
      }
      if (!any) break;
      frontier = next;
    }
  }
  return comps;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > std::numeric_limits<std::uint64_t>::max())
    throw InvalidArgumentError("ledger: count overflow");
  return static_cast<std::uint64_t>(p);
}

}  // namespace

ValidationReport validate_coloring(const FacetGraph& g, Coloring& c, int clique_bound) {
  if (c.facets() != g.n) throw ShapeError("validate_coloring: coloring/graph size mismatch");
  if (int(c.lambda.rows()) != c.m) throw ShapeError("validate_coloring: lambda rows != m");
  if (c.m < 1 || c.m > 64)
    throw InvalidArgumentError("validate_coloring: m must be in [1, 64]");
  if (clique_bound < 1) throw InvalidArgumentError("validate_coloring: bound must be positive");

  std::vector<std::uint64_t> packed(std::size_t(g.n), 0);
  for (int v = 0; v < g.n; ++v)
    for (int r = 0; r < c.m; ++r)
      if (c.lambda.get(std::size_t(r), std::size_t(v)))
        packed[std::size_t(v)] |= std::uint64_t(1) << r;

  ValidationReport rep;
  rep.bound = clique_bound;
  // zero colors are singleton violations; report the smallest witness first
  for (int v = 0; v < g.n; ++v) {
    if (!packed[std::size_t(v)]) {
      rep.valid = false;
      rep.violating_clique = {v};
      return rep;
    }
  }

  std::vector<BitVec> up(std::size_t(g.n), BitVec(std::size_t(g.n)));
  for (int v = 0; v < g.n; ++v) {
    up[std::size_t(v)] = g.adj[std::size_t(v)];
    for (int u = 0; u <= v; ++u) up[std::size_t(v)].set(std::size_t(u), false);
  }

  Validator vd{up, packed, clique_bound, {}, {}, {}};
  for (int v = 0; v < g.n; ++v) {
    if (!vd.dfs(v, up[std::size_t(v)])) {
      rep.valid = false;
      rep.violating_clique = vd.witness;
      return rep;
    }
  }
  rep.valid = true;
  if (clique_bound > c.validated_bound) c.validated_bound = clique_bound;
  return rep;
}

Coloring basis_coloring(const FacetGraph& g, const FreeCyclicAction& psi,
                        const std::vector<int>& good) {
  if (!is_good_set(g, psi, good)) throw InvalidArgumentError("basis_coloring: set is not good");
  Coloring c;
  c.m = psi.order;
  c.shift = 1;
  c.lambda = BitMatrix(std::size_t(psi.order), std::size_t(g.n));
  for (int x : good)
    for (int j = 0; j < psi.order; ++j)
      c.lambda.set(std::size_t(j), std::size_t(psi.apply(x, j)), true);
  return c;
}

Coloring qr_coloring(const FacetGraph& g, const FreeCyclicAction& psi,
                     const std::vector<int>& good, int k) {
  if (psi.order != 17) throw InvalidArgumentError("qr_coloring: psi must have order 17");
  BitMatrix fam = build_shifted_family(k);  // also rejects 17 | k
  if (!is_good_set(g, psi, good)) throw InvalidArgumentError("qr_coloring: set is not good");
  Coloring c;
  c.m = 9;
  c.shift = ((k % 17) + 17) % 17;
  c.lambda = BitMatrix(9, std::size_t(g.n));
  for (int x : good)
    for (int t = 0; t < 17; ++t) {
      std::size_t v = std::size_t(psi.apply(x, t));
      for (std::size_t r = 0; r < 9; ++r)
        if (fam.get(r, std::size_t(t))) c.lambda.set(r, v, true);
    }
  return c;
}

std::optional<BitVec> orientability_witness(const Coloring& c) {
  return solve_row(c.lambda, BitVec::ones(c.lambda.cols()));
}

std::uint64_t first_betti(const FacetGraph& g, const Coloring& c) {
  if (c.facets() != g.n) throw ShapeError("first_betti: coloring/graph size mismatch");
  if (c.validated_bound < 5)
    throw InvalidArgumentError("first_betti: coloring not validated at bound >= 5");
  RowSpace rs(c.lambda);
  BitVec w;
  bool zero_seen = false;
  std::uint64_t sum = 0;
  while (rs.next(w)) {
    if (!zero_seen) {  // Gray enumeration starts at the zero word
      zero_seen = true;
      continue;
    }
    sum += component_count(g, w) - 1;
  }
  return sum;
}

std::size_t min_support_weight(const Coloring& c) { return min_distance(c.lambda); }

std::vector<std::uint64_t> row_component_counts(const FacetGraph& g, const Coloring& c) {
  if (c.facets() != g.n) throw ShapeError("row_component_counts: coloring/graph size mismatch");
  std::vector<std::uint64_t> out;
  out.reserve(c.lambda.rows());
  for (std::size_t r = 0; r < c.lambda.rows(); ++r)
    out.push_back(component_count(g, c.lambda.row_vec(r)));
  return out;
}

bool quotient_compatibility(const Coloring& c, const FreeCyclicAction& psi, const BitMatrix& R) {
  if (c.m <= 0) return false;
  if (R.rows() != std::size_t(c.m) || R.cols() != std::size_t(c.m)) return false;
  if (int(psi.perm.size()) != c.facets()) return false;
  for (int v = 0; v < c.facets(); ++v)
    if (c.color(psi.apply(v, c.shift)) != R.mul_right(c.color(v))) return false;
  return true;
}

ManifoldLedger ledger(const FacetGraph& g, const Coloring& c, std::uint64_t facets_per_piece,
                      std::uint64_t prisms_per_facet_block, std::uint64_t quotient,
                      const FreeCyclicAction* psi, const BitMatrix* R) {
  if (c.facets() != g.n) throw ShapeError("ledger: coloring/graph size mismatch");
  if (facets_per_piece != std::uint64_t(g.n))
    throw InvalidArgumentError("ledger: facets_per_piece must match the graph order");
  if (prisms_per_facet_block == 0)
    throw InvalidArgumentError("ledger: prisms_per_facet_block must be positive");
  if (quotient == 0) throw InvalidArgumentError("ledger: quotient must be positive");
  if (c.m < 1 || c.m > 62) throw InvalidArgumentError("ledger: m must be in [1, 62]");
  if (quotient > 1) {
    if (psi == nullptr || R == nullptr)
      throw ConstructionMismatchError("ledger: quotient > 1 requires psi and R");
    if (std::uint64_t(psi->order) != quotient)
      throw ConstructionMismatchError("ledger: quotient must equal the psi order");
    if (!quotient_compatibility(c, *psi, *R))
      throw ConstructionMismatchError("ledger: coloring is not quotient compatible");
  }
  ManifoldLedger led;
  led.m = c.m;
  led.quotient = quotient;
  led.copies = std::uint64_t(1) << c.m;
  std::uint64_t raw = checked_mul(led.copies, facets_per_piece);
  if (raw % quotient != 0)
    throw ConstructionMismatchError("ledger: quotient does not divide copies * facets");
  led.blocks = raw / quotient;
  led.prisms = checked_mul(led.blocks, prisms_per_facet_block);
  led.volume = vol_of_prisms(led.prisms);
  led.witness = orientability_witness(c);
  led.orientable = led.witness.has_value();
  return led;
}

}  // namespace hyp5
