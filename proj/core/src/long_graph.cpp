#include "hyp5/long_graph.hpp"

#include <algorithm>
#include <map>

#include "hyp5/errors.hpp"

namespace hyp5 {

namespace {

std::vector<int> apply_set(const Perm& g, const std::vector<int>& s) {
  std::vector<int> t;
  t.reserve(s.size());
  for (int v : s) t.push_back(g[v]);
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

LongGraphBundle build_long_graph(int which_omega) {
  if (which_omega != 0 && which_omega != 1)
    throw InvalidArgumentError("which_omega must be 0 or 1");

  const CoxeterDiagram d = CoxeterDiagram::path({5, 3, 3, 3});
  Presentation p = Presentation::coxeter(d);
  std::vector<std::vector<int>> sub;
  for (const char* w : {"ac", "ae", "decd", "bacbab"}) sub.push_back(parse_word(w, 5));

  LongGraphBundle b;
  b.table = todd_coxeter(p, sub);
  if (b.table.cosets != 170)
    throw ConstructionMismatchError("expected 170 cosets for the index-170 subgroup");
  const std::vector<Perm>& gens = b.table.act;

  // Sigma = <a,b,c,d>: orbit sizes 150, 10, 10; omega is a 10-point orbit.
  std::vector<Perm> sigma(gens.begin(), gens.begin() + 4);
  auto orbits = point_orbits(170, sigma);
  for (const auto& o : orbits) b.sigma_orbit_sizes.push_back(o.size());
  std::sort(b.sigma_orbit_sizes.begin(), b.sigma_orbit_sizes.end());
  if (b.sigma_orbit_sizes != std::vector<std::size_t>{10, 10, 150})
    throw ConstructionMismatchError("sigma orbit sizes are not {10, 10, 150}");
  std::vector<std::vector<int>> tens;
  for (const auto& o : orbits)
    if (o.size() == 10) tens.push_back(o);
  b.omega = tens[which_omega];

  // Vertices: orbit of omega, then canonical lexicographic numbering.
  auto vert_sets = set_orbit(gens, b.omega, 1000);
  if (vert_sets.size() != 272)
    throw ConstructionMismatchError("vertex orbit size is not 272");
  std::sort(vert_sets.begin(), vert_sets.end());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < int(vert_sets.size()); ++i) index.emplace(vert_sets[i], i);

  b.graph = FacetGraph(272);
  b.graph.labels = vert_sets;

  // Edges: orbit of the adjacent pair {omega, omega.e}.
  SetPair seed{b.omega, apply_set(gens[4], b.omega)};
  auto edge_orbit = set_pair_orbit(gens, seed, 200000);
  for (const SetPair& e : edge_orbit) {
    auto ia = index.find(e.a), ib = index.find(e.b);
    if (ia == index.end() || ib == index.end())
      throw ConstructionMismatchError("edge endpoint outside the vertex orbit");
    b.graph.add_edge(ia->second, ib->second);
  }
  b.graph.check_simple();
  if (b.graph.edge_count() != edge_orbit.size())
    throw ConstructionMismatchError("edge orbit contains duplicate pairs");

  // Generator closure: every generator permutes vertices and preserves edges.
  for (const Perm& g : gens) {
    std::vector<int> vperm(272);
    for (int v = 0; v < 272; ++v) {
      auto it = index.find(apply_set(g, vert_sets[v]));
      if (it == index.end())
        throw ConstructionMismatchError("generator does not preserve the vertex set");
      vperm[v] = it->second;
    }
    for (int u = 0; u < 272; ++u)
      for (int v = u + 1; v < 272; ++v)
        if (b.graph.has_edge(u, v) != b.graph.has_edge(vperm[u], vperm[v]))
          throw ConstructionMismatchError("generator does not preserve the edge set");
  }

  // Orders: the full image and the vertex stabilizer.
  PermutationGroup g170(170, gens);
  b.group_order = g170.order();
  if (b.group_order != 1958400)
    throw ConstructionMismatchError("group order is not 1958400");
  b.stab_order = set_stabilizer_order(g170, b.omega, 1000);
  if (b.stab_order != 7200) throw ConstructionMismatchError("omega stabilizer is not 7200");

  // psi = (abcde)^2 acting on vertices: free of order 17 with 16 orbits.
  Perm psi170 = perm_identity(170);
  for (int rep = 0; rep < 2; ++rep)
    for (int g = 0; g < 5; ++g) psi170 = perm_compose(psi170, gens[g]);
  b.psi.order = 17;
  b.psi.perm.assign(272, -1);
  for (int v = 0; v < 272; ++v) {
    auto it = index.find(apply_set(psi170, vert_sets[v]));
    if (it == index.end())
      throw ConstructionMismatchError("psi does not preserve the vertex set");
    b.psi.perm[v] = it->second;
  }
  certify_free_action(b.psi, 272);
  if (b.psi.orbits().size() != 16)
    throw ConstructionMismatchError("psi does not have 16 orbits");
  return b;
}

std::vector<std::uint64_t> long_graph_profile(const LongGraphBundle& b) {
  std::vector<std::uint64_t> prof{std::uint64_t(b.graph.n), b.graph.edge_count(),
                                  std::uint64_t(b.psi.orbits().size()),
                                  std::uint64_t(b.psi.order)};
  std::vector<std::uint64_t> degs;
  for (int v = 0; v < b.graph.n; ++v) degs.push_back(std::uint64_t(b.graph.degree(v)));
  std::sort(degs.begin(), degs.end());
  prof.insert(prof.end(), degs.begin(), degs.end());
  return prof;
}

}  // namespace hyp5
