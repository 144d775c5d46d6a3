#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "hyp5/errors.hpp"
#include "hyp5/f5_fixtures.hpp"
#include "hyp5/f5graph.hpp"
#include "hyp5/facet_graph.hpp"
#include "hyp5/goodsets.hpp"
#include "hyp5/long_graph.hpp"

using namespace hyp5;

namespace {

// Build once; the constructors already certify themselves, so reuse is safe.
const LongGraphBundle& long_bundle() {
  static const LongGraphBundle b = build_long_graph(0);
  return b;
}

const F5GraphBundle& f5_bundle() {
  static const F5GraphBundle b = build_f5_graph();
  return b;
}

const CliqueCensus& clique_census() {
  static const CliqueCensus c = five_clique_census(f5_bundle());
  return c;
}

const LAnalysis& l_analysis() {
  static const LAnalysis a = l_subgroup_analysis(f5_bundle());
  return a;
}

FacetGraph cycle_graph(int n) {
  FacetGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

// All transversals of psi-orbits checked pairwise: the reference census.
std::set<std::vector<int>> brute_force_good_sets(const FacetGraph& g,
                                                 const FreeCyclicAction& psi) {
  auto orbits = psi.orbits();
  std::set<std::vector<int>> out;
  std::vector<std::size_t> pick(orbits.size(), 0);
  while (true) {
    std::vector<int> s;
    for (std::size_t o = 0; o < orbits.size(); ++o) s.push_back(orbits[o][pick[o]]);
    bool ok = true;
    for (std::size_t i = 0; i < s.size() && ok; ++i)
      for (std::size_t j = i + 1; j < s.size() && ok; ++j)
        if (g.has_edge(s[i], s[j])) ok = false;
    if (ok) {
      std::sort(s.begin(), s.end());
      out.insert(s);
    }
    std::size_t o = 0;
    while (o < orbits.size() && ++pick[o] == orbits[o].size()) pick[o++] = 0;
    if (o == orbits.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("facet graphs store undirected simple edges") {
  FacetGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  CHECK(g.edge_count() == 4);
  CHECK(g.degree(0) == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
  CHECK_NOTHROW(g.check_simple());

  CHECK_THROWS_AS(g.add_edge(0, 4), InvalidArgumentError);
  CHECK_THROWS_AS(g.add_edge(-1, 0), InvalidArgumentError);
  CHECK_THROWS_AS(g.add_edge(2, 2), ConstructionMismatchError);

  FacetGraph bad(3);
  bad.adj[0].set(1, true);  // one direction only
  CHECK_THROWS_AS(bad.check_simple(), ConstructionMismatchError);
  FacetGraph loop(2);
  loop.adj[1].set(1, true);
  CHECK_THROWS_AS(loop.check_simple(), ConstructionMismatchError);
}

TEST_CASE("graph files round-trip through the arc-list format") {
  FacetGraph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  g.add_edge(0, 4);

  std::ostringstream os;
  write_graph_file(os, g);
  std::string text = os.str();
  CHECK(text.substr(0, text.find('\n')) == "p edge 5 8");

  std::istringstream is("c written by hand\n" + text);
  FacetGraph h = read_graph_file(is);
  REQUIRE(h.n == g.n);
  CHECK(h.edge_count() == g.edge_count());
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v) CHECK(h.has_edge(u, v) == g.has_edge(u, v));

  const char* tmp = "graphs_roundtrip.tmp";
  write_graph_file(tmp, g);
  FacetGraph f = read_graph_file_from(tmp);
  CHECK(f.edge_count() == g.edge_count());
  std::remove(tmp);
}

TEST_CASE("graph file parsing rejects malformed input") {
  auto parse = [](const std::string& s) {
    std::istringstream is(s);
    return read_graph_file(is);
  };
  CHECK_THROWS_AS(parse(""), IoError);
  CHECK_THROWS_AS(parse("e 1 2\n"), IoError);              // edge before header
  CHECK_THROWS_AS(parse("p node 3 0\n"), IoError);         // wrong kind
  CHECK_THROWS_AS(parse("p edge 3 2\ne 1 2\n"), IoError);  // count mismatch
  CHECK_THROWS_AS(parse("p edge 3 2\ne 1 2\ne 1 2\n"), IoError);  // asymmetric
  CHECK_THROWS_AS(parse("p edge 3 1\ne 1 1\n"), IoError);  // loop
  CHECK_THROWS_AS(parse("p edge 3 2\ne 1 4\ne 4 1\n"), IoError);  // range
  CHECK_THROWS_AS(parse("p edge 3 0\nx 1 2\n"), IoError);  // unknown tag
  CHECK_THROWS_AS(read_graph_file_from("no_such_graph_file.txt"), IoError);
}

TEST_CASE("free cyclic actions are certified") {
  FreeCyclicAction rot{{2, 3, 4, 5, 0, 1}, 3};  // +2 mod 6
  CHECK_NOTHROW(certify_free_action(rot, 6));
  auto orbs = rot.orbits();
  REQUIRE(orbs.size() == 2);
  CHECK(orbs[0] == std::vector<int>{0, 2, 4});
  CHECK(orbs[1] == std::vector<int>{1, 3, 5});
  CHECK(rot.apply(0) == 2);
  CHECK(rot.apply(0, 2) == 4);
  CHECK(rot.apply(0, 3) == 0);
  CHECK(rot.apply(0, -1) == 4);

  FreeCyclicAction full{{1, 2, 3, 4, 5, 0}, 6};
  CHECK_NOTHROW(certify_free_action(full, 6));
  CHECK(full.orbits().size() == 1);

  FreeCyclicAction fixed{{0, 2, 1}, 2};  // 0 is a fixed point
  CHECK_THROWS_AS(certify_free_action(fixed, 3), ConstructionMismatchError);
  FreeCyclicAction wrong{{1, 2, 3, 4, 5, 0}, 3};  // order != cycle length
  CHECK_THROWS_AS(certify_free_action(wrong, 6), ConstructionMismatchError);
  CHECK_THROWS_AS(certify_free_action(rot, 7), ConstructionMismatchError);
}

TEST_CASE("good-set search matches brute force on small graphs") {
  FacetGraph g(6);
  g.add_edge(0, 1);
  g.add_edge(3, 4);
  g.add_edge(1, 5);
  g.add_edge(2, 4);
  FreeCyclicAction psi{{3, 4, 5, 0, 1, 2}, 2};  // orbits {0,3} {1,4} {2,5}
  REQUIRE_NOTHROW(certify_free_action(psi, 6));

  auto expect = brute_force_good_sets(g, psi);
  CHECK(count_good_sets(g, psi, 1) == expect.size());
  CHECK(count_good_sets(g, psi, 4) == expect.size());

  std::set<std::vector<int>> streamed;
  for_each_good_set(g, psi, [&](const std::vector<int>& s) {
    CHECK(is_good_set(g, psi, s));
    streamed.insert(s);
    return true;
  });
  CHECK(streamed == expect);

  int calls = 0;
  for_each_good_set(g, psi, [&](const std::vector<int>&) {
    ++calls;
    return false;
  });
  CHECK(calls == 1);

  auto sampled = sample_good_sets(g, psi, expect.size(), 42);
  CHECK(std::set<std::vector<int>>(sampled.begin(), sampled.end()) == expect);
  CHECK(sample_good_sets(g, psi, 2, 7) == sample_good_sets(g, psi, 2, 7));

  // Edge-free graph: every transversal is good.
  FacetGraph h(6);
  CHECK(count_good_sets(h, psi) == 8);

  // Fully blocked pair of orbits: no good set, and sampling reports it.
  FacetGraph blocked(4);
  blocked.add_edge(0, 1);
  blocked.add_edge(0, 3);
  blocked.add_edge(2, 1);
  blocked.add_edge(2, 3);
  FreeCyclicAction psi4{{2, 3, 0, 1}, 2};
  CHECK(count_good_sets(blocked, psi4) == 0);
  CHECK_THROWS_AS(sample_good_sets(blocked, psi4, 1, 1), ConstructionMismatchError);

  CHECK(!is_good_set(g, psi, {0, 1}));           // wrong size
  CHECK(!is_good_set(g, psi, {0, 3, 1}));        // two from one orbit
  CHECK(!is_good_set(g, psi, {0, 1, 2}));        // adjacent pair
  CHECK(!is_good_set(g, psi, {0, 1, 6}));        // out of range
  CHECK(is_good_set(g, psi, {0, 4, 5}));
}

TEST_CASE("the long facet graph is built and certified") {
  const LongGraphBundle& b = long_bundle();
  CHECK(b.graph.n == 272);
  CHECK(b.table.cosets == 170);
  CHECK(b.group_order == 1958400);
  CHECK(b.stab_order == 7200);
  CHECK(b.sigma_orbit_sizes == std::vector<std::size_t>{10, 10, 150});
  CHECK(b.omega.size() == 10);
  CHECK(b.psi.order == 17);
  CHECK(b.psi.orbits().size() == 16);
  for (const auto& o : b.psi.orbits()) CHECK(o.size() == 17);
  CHECK_NOTHROW(b.graph.check_simple());

  // Canonical numbering: labels are sorted coset sets in increasing order.
  CHECK(std::is_sorted(b.graph.labels.begin(), b.graph.labels.end()));
  for (const auto& l : b.graph.labels) {
    CHECK(l.size() == 10);
    CHECK(std::is_sorted(l.begin(), l.end()));
  }

  // Both 10-point sigma-orbits produce the same graph up to the profile.
  const LongGraphBundle other = build_long_graph(1);
  CHECK(other.omega != b.omega);
  CHECK(long_graph_profile(other) == long_graph_profile(b));

  CHECK_THROWS_AS(build_long_graph(2), InvalidArgumentError);
}

TEST_CASE("sampled good sets on the long graph satisfy the contract") {
  const LongGraphBundle& b = long_bundle();
  auto samples = sample_good_sets(b.graph, b.psi, 25, 0x5eed3001);
  CHECK(samples.size() == 25);
  for (const auto& s : samples) {
    CHECK(s.size() == 16);
    CHECK(is_good_set(b.graph, b.psi, s));
    // psi maps good sets to good sets, one full orbit of 17.
    std::vector<int> image;
    for (int v : s) image.push_back(b.psi.apply(v));
    CHECK(is_good_set(b.graph, b.psi, image));
  }
  CHECK(samples == sample_good_sets(b.graph, b.psi, 25, 0x5eed3001));
}

TEST_CASE("the quadric graph matches its orbit description") {
  const F5GraphBundle& b = f5_bundle();
  CHECK(b.verts.size() == 650);
  CHECK(b.graph.n == 650);
  CHECK(b.graph.edge_count() == 39000);
  CHECK(b.ordered_pairs == 78000);
  for (int v = 0; v < b.graph.n; ++v) CHECK(b.graph.degree(v) == 120);

  REQUIRE(b.v0 >= 0);
  CHECK(b.verts[b.v0] == F5Vec{0, 0, 0, 0, 1});
  CHECK(std::is_sorted(b.verts.begin(), b.verts.end()));
  for (std::size_t i = 0; i < b.verts.size(); ++i)
    CHECK(b.index[f5vec_key(b.verts[i])] == int(i));

  // Edge rule: form value 1 on the quadric.
  const F5Fixtures& fx = f5_fixtures();
  CHECK(f5_form(fx.K, b.verts[b.v0], b.verts[b.v0]) == 3);
  int checked = 0;
  for (int j = 0; j < b.graph.n && checked < 500; ++j) {
    if (j == b.v0) continue;
    ++checked;
    int f = f5_form(fx.K, b.verts[b.v0], b.verts[std::size_t(j)]);
    CHECK(b.graph.has_edge(b.v0, j) == (f == 1));
  }
}

TEST_CASE("the five-clique census splits into two orbits of 78000") {
  const CliqueCensus& c = clique_census();
  CHECK(c.total == 156000);
  REQUIRE(c.orbit_sizes.size() == 2);
  CHECK(c.orbit_sizes[0] == 78000);
  CHECK(c.orbit_sizes[1] == 78000);
  REQUIRE(c.real_cliques.size() == 78000);

  const F5GraphBundle& b = f5_bundle();
  CHECK(std::is_sorted(c.seed.begin(), c.seed.end()));
  CHECK(std::binary_search(c.real_cliques.begin(), c.real_cliques.end(), c.seed));
  CHECK(std::is_sorted(c.real_cliques.begin(), c.real_cliques.end()));

  // Spot-check: every 97th real clique is a genuine 5-clique.
  for (std::size_t i = 0; i < c.real_cliques.size(); i += 97) {
    const auto& q = c.real_cliques[i];
    for (int x = 0; x < 5; ++x)
      for (int y = x + 1; y < 5; ++y) CHECK(b.graph.has_edge(q[x], q[y]));
  }
}

TEST_CASE("the L-orbits pair into exactly 64 matchings") {
  const LAnalysis& a = l_analysis();
  CHECK(a.l_order == 125);
  REQUIRE(a.orbits.size() == 26);
  std::vector<char> seen(650, 0);
  for (const auto& o : a.orbits) {
    CHECK(o.size() == 25);
    for (int v : o) {
      CHECK(!seen[std::size_t(v)]);
      seen[std::size_t(v)] = 1;
    }
  }
  CHECK(std::count(seen.begin(), seen.end(), char(1)) == 650);
  CHECK(a.all_independent);

  CHECK(a.pairing_count == 64);
  REQUIRE(a.pairings.size() == 64);
  std::set<std::vector<std::pair<int, int>>> distinct(a.pairings.begin(),
                                                      a.pairings.end());
  CHECK(distinct.size() == 64);
  for (const auto& pairing : a.pairings) {
    REQUIRE(pairing.size() == 13);
    std::uint32_t used = 0;
    for (auto [i, j] : pairing) {
      CHECK((a.compat[std::size_t(i)] >> j & 1u) == 1u);
      used |= 1u << i;
      used |= 1u << j;
    }
    CHECK(used == (1u << 26) - 1);
  }
}

TEST_CASE("shifted adjacency ranks carry exact kernel certificates") {
  // K4: A + I is the all-ones matrix, rank 1 with a 3-dimensional kernel.
  FacetGraph k4(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
  RankCertificate c = shifted_adjacency_rank(k4, 1);
  CHECK(c.n == 4);
  CHECK(c.gfp_rank == 1);
  CHECK(c.verified_kernel_dim == 3);
  REQUIRE(c.kernel.size() == 3);
  for (const auto& z : c.kernel) {
    long long sum = std::accumulate(z.begin(), z.end(), 0LL);
    CHECK(sum == 0);  // (A + I) z = J z = (sum) 1
    CHECK(std::any_of(z.begin(), z.end(), [](long long x) { return x != 0; }));
  }

  // Path on three vertices: rank 2, kernel spanned by (1, 0, -1).
  FacetGraph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  RankCertificate cp = shifted_adjacency_rank(p3, 0);
  CHECK(cp.gfp_rank == 2);
  CHECK(cp.verified_kernel_dim == 1);
  REQUIRE(cp.kernel.size() == 1);
  CHECK(cp.kernel[0][0] == -cp.kernel[0][2]);
  CHECK(cp.kernel[0][1] == 0);

  // C4 adjacency: rank 2, kernel dimension 2.
  RankCertificate cc = shifted_adjacency_rank(cycle_graph(4), 0);
  CHECK(cc.gfp_rank == 2);
  CHECK(cc.verified_kernel_dim == 2);

  // Full-rank case: C5 adjacency is invertible.
  RankCertificate c5 = shifted_adjacency_rank(cycle_graph(5), 0);
  CHECK(c5.gfp_rank == 5);
  CHECK(c5.verified_kernel_dim == 0);
}

TEST_CASE("the spectral certificate pins the -10 eigenvalue and a 13-coloring") {
  const F5GraphBundle& b = f5_bundle();
  SpectralReport r = spectral_certificate(b, l_analysis());
  CHECK(r.degree == 120);
  CHECK(r.colors == 13);

  CHECK(r.rank10.n == 650);
  CHECK(r.rank10.verified_kernel_dim >= 1);
  CHECK(r.rank10.gfp_rank + r.rank10.verified_kernel_dim <= 650);
  CHECK(r.rank10.gfp_rank < 650);
  // Verified kernel vectors give the exact rational rank when the bounds meet.
  CHECK(r.rank10.gfp_rank + r.rank10.verified_kernel_dim == 650);

  // Independent re-check of one kernel vector over the integers.
  REQUIRE(!r.rank10.kernel.empty());
  const auto& z = r.rank10.kernel.front();
  for (int i = 0; i < 650; ++i) {
    long long s = 10 * z[std::size_t(i)];
    for (int j = 0; j < 650; ++j)
      if (b.graph.has_edge(i, j)) s += z[std::size_t(j)];
    CHECK(s == 0);
  }

  // The coloring is proper, covers every vertex, and uses classes of 50.
  REQUIRE(r.coloring.size() == 650);
  std::array<int, 13> sizes{};
  for (int v = 0; v < 650; ++v) {
    REQUIRE(r.coloring[std::size_t(v)] >= 0);
    REQUIRE(r.coloring[std::size_t(v)] < 13);
    ++sizes[std::size_t(r.coloring[std::size_t(v)])];
  }
  for (int s : sizes) CHECK(s == 50);
  for (int u = 0; u < 650; ++u)
    for (int v = u + 1; v < 650; ++v)
      if (b.graph.has_edge(u, v)) CHECK(r.coloring[u] != r.coloring[v]);
}

TEST_CASE("euler characteristics of small clique complexes") {
  EulerReport one = euler_characteristic_X(5, {{{0, 1, 2, 3, 4}}});
  CHECK(one.faces == std::array<std::uint64_t, 5>{5, 10, 10, 5, 1});
  CHECK(one.chi == 1);

  EulerReport two =
      euler_characteristic_X(10, {{{0, 1, 2, 3, 4}}, {{5, 6, 7, 8, 9}}});
  CHECK(two.chi == 2);

  // Two simplices glued along a triangle: still contractible-like counts.
  EulerReport glued =
      euler_characteristic_X(7, {{{0, 1, 2, 3, 4}}, {{0, 1, 2, 5, 6}}});
  CHECK(glued.faces == std::array<std::uint64_t, 5>{7, 17, 19, 10, 2});
  CHECK(glued.chi == 1);

  // Duplicated input simplices collapse.
  EulerReport dup =
      euler_characteristic_X(5, {{{0, 1, 2, 3, 4}}, {{4, 3, 2, 1, 0}}});
  CHECK(dup.faces == one.faces);

  CHECK_THROWS_AS(euler_characteristic_X(4, {{{0, 1, 2, 3, 4}}}),
                  InvalidArgumentError);
  CHECK_THROWS_AS(euler_characteristic_X(5, {{{0, 1, 2, 3, 3}}}),
                  InvalidArgumentError);
  CHECK_THROWS_AS(euler_characteristic_X(0, {}), InvalidArgumentError);
}

TEST_CASE("the real 4-simplices assemble to a complex with chi 650") {
  const CliqueCensus& c = clique_census();
  EulerReport rep = euler_characteristic_X(650, c.real_cliques);
  CHECK(rep.faces[0] == 650);
  CHECK(rep.faces[4] == 78000);
  CHECK(rep.chi == 650);
}
