#include "hyp5/f5graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "hyp5/errors.hpp"
#include "hyp5/f5_fixtures.hpp"

namespace hyp5 {

namespace {

constexpr int kQuadricSize = 650;
constexpr int kDegree = 120;
constexpr std::uint64_t kUnorderedEdges = 39000;
constexpr std::uint64_t kOrderedPairs = 78000;
constexpr std::uint64_t kTotalCliques = 156000;
constexpr std::uint64_t kCliqueOrbit = 78000;

// Vertex permutations induced by the generator matrices; certify that each
// generator maps the quadric to itself along the way.
std::vector<std::vector<int>> generator_perms(const F5GraphBundle& b) {
  const F5Fixtures& fx = f5_fixtures();
  const F5Matrix gens[5] = {fx.alpha, fx.beta, fx.gamma, fx.delta, fx.eps};
  std::vector<std::vector<int>> perms(5, std::vector<int>(b.verts.size()));
  for (int gi = 0; gi < 5; ++gi) {
    for (std::size_t v = 0; v < b.verts.size(); ++v) {
      int w = b.index[f5vec_key(f5_apply(gens[gi], b.verts[v]))];
      if (w < 0)
        throw ConstructionMismatchError("generator image leaves the quadric");
      perms[gi][v] = w;
    }
  }
  return perms;
}

void and_into(BitVec& dst, const BitVec& src) {
  auto& d = dst.words();
  const auto& s = src.words();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] &= s[i];
}

// Clears bits 0..v inclusive, leaving the strictly-higher neighbours.
BitVec above(const BitVec& a, int v) {
  BitVec r = a;
  auto& w = r.words();
  std::size_t wi = std::size_t(v) / 64;
  for (std::size_t k = 0; k < wi; ++k) w[k] = 0;
  int b = v % 64;
  if (b == 63)
    w[wi] = 0;
  else
    w[wi] &= ~((std::uint64_t(1) << (b + 1)) - 1);
  return r;
}

template <typename Fn>
void for_each_bit(const BitVec& v, Fn&& fn) {
  const auto& ws = v.words();
  for (std::size_t wi = 0; wi < ws.size(); ++wi) {
    std::uint64_t w = ws[wi];
    while (w) {
      fn(int(wi * 64) + std::countr_zero(w));
      w &= w - 1;
    }
  }
}

std::uint64_t pack_clique(const std::array<int, 5>& c) {
  std::uint64_t k = 0;
  for (int v : c) k = k * 1024 + std::uint64_t(v);
  return k;
}

std::array<int, 5> unpack_clique(std::uint64_t k) {
  std::array<int, 5> c{};
  for (int i = 4; i >= 0; --i) {
    c[i] = int(k % 1024);
    k /= 1024;
  }
  return c;
}

// Orbit of a clique under the generator-induced vertex permutations,
// recorded as packed sorted keys.  Every image must be a known clique.
std::unordered_set<std::uint64_t> clique_orbit(
    const std::array<int, 5>& seed, const std::vector<std::vector<int>>& perms,
    const std::unordered_set<std::uint64_t>& all) {
  std::unordered_set<std::uint64_t> seen;
  std::deque<std::array<int, 5>> queue;
  seen.insert(pack_clique(seed));
  queue.push_back(seed);
  while (!queue.empty()) {
    std::array<int, 5> c = queue.front();
    queue.pop_front();
    for (const auto& p : perms) {
      std::array<int, 5> d;
      for (int i = 0; i < 5; ++i) d[i] = p[c[i]];
      std::sort(d.begin(), d.end());
      std::uint64_t k = pack_clique(d);
      if (!all.count(k))
        throw ConstructionMismatchError("clique image is not a 5-clique");
      if (seen.insert(k).second) queue.push_back(d);
    }
  }
  return seen;
}

constexpr long long kPrime = 2147483647;  // 2^31 - 1
constexpr long long kWangBound = 32767;   // 2 * B^2 < kPrime

long long pow_mod(long long b, long long e, long long m) {
  long long r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// Rational reconstruction a -> num/den with |num|, den <= kWangBound;
// returns false when no representative exists within the bound.
bool wang(long long a, long long& num, long long& den) {
  long long r0 = kPrime, r1 = a, t0 = 0, t1 = 1;
  while (r1 > kWangBound) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1;
    long long t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return false;
  if (t1 < 0) {
    t1 = -t1;
    r1 = -r1;
  }
  if (t1 > kWangBound || std::gcd(std::abs(r1), t1) != 1) return false;
  num = r1;
  den = t1;
  return true;
}

}  // namespace

F5GraphBundle build_f5_graph() {
  const F5Fixtures& fx = f5_fixtures();
  F5GraphBundle b;
  b.index.fill(-1);

  // Quadric {v : K(v,v) = 3} in lexicographic order.
  F5Vec v;
  for (int a0 = 0; a0 < 5; ++a0)
    for (int a1 = 0; a1 < 5; ++a1)
      for (int a2 = 0; a2 < 5; ++a2)
        for (int a3 = 0; a3 < 5; ++a3)
          for (int a4 = 0; a4 < 5; ++a4) {
            v = {std::uint8_t(a0), std::uint8_t(a1), std::uint8_t(a2),
                 std::uint8_t(a3), std::uint8_t(a4)};
            if (f5_form(fx.K, v, v) == 3) {
              b.index[f5vec_key(v)] = int(b.verts.size());
              b.verts.push_back(v);
            }
          }
  if (b.verts.size() != kQuadricSize)
    throw ConstructionMismatchError("quadric has " +
                                    std::to_string(b.verts.size()) +
                                    " points, expected 650");

  FacetGraph g(kQuadricSize);
  g.labels.resize(kQuadricSize);
  for (int i = 0; i < kQuadricSize; ++i)
    g.labels[i] = {b.verts[i][0], b.verts[i][1], b.verts[i][2], b.verts[i][3],
                   b.verts[i][4]};
  for (int i = 0; i < kQuadricSize; ++i)
    for (int j = i + 1; j < kQuadricSize; ++j)
      if (f5_form(fx.K, b.verts[i], b.verts[j]) == 1) g.add_edge(i, j);
  g.check_simple();
  if (g.edge_count() != kUnorderedEdges)
    throw ConstructionMismatchError("edge count " +
                                    std::to_string(g.edge_count()) +
                                    ", expected 39000");
  for (int i = 0; i < kQuadricSize; ++i)
    if (g.degree(i) != kDegree)
      throw ConstructionMismatchError("graph is not 120-regular");

  b.v0 = b.index[f5vec_key(F5Vec{0, 0, 0, 0, 1})];
  if (b.v0 < 0) throw ConstructionMismatchError("e5 is not on the quadric");
  b.graph = std::move(g);

  auto perms = generator_perms(b);
  // Generators act by graph automorphisms.
  for (const auto& p : perms)
    for (int i = 0; i < kQuadricSize; ++i)
      for (int j = i + 1; j < kQuadricSize; ++j)
        if (b.graph.has_edge(i, j) != b.graph.has_edge(p[i], p[j]))
          throw ConstructionMismatchError("generator breaks adjacency");

  // Vertex transitivity: the orbit of v0 covers the quadric.
  {
    std::vector<char> seen(kQuadricSize, 0);
    std::deque<int> queue{b.v0};
    seen[b.v0] = 1;
    std::size_t cnt = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (const auto& p : perms)
        if (!seen[p[u]]) {
          seen[p[u]] = 1;
          ++cnt;
          queue.push_back(p[u]);
        }
    }
    if (cnt != kQuadricSize)
      throw ConstructionMismatchError("orbit of v0 misses quadric points");
  }

  // The orbit of the ordered pair (v0, eps v0) is exactly the 78000 ordered
  // edges, so the form-value description and the orbit description agree.
  {
    int u1 = perms[4][b.v0];
    if (!b.graph.has_edge(b.v0, u1))
      throw ConstructionMismatchError("(v0, eps v0) is not an edge");
    std::vector<char> seen(kQuadricSize * kQuadricSize, 0);
    std::deque<int> queue;
    auto push = [&](int a, int c) {
      int code = a * kQuadricSize + c;
      if (!seen[code]) {
        seen[code] = 1;
        queue.push_back(code);
        ++b.ordered_pairs;
      }
    };
    b.ordered_pairs = 0;
    push(b.v0, u1);
    while (!queue.empty()) {
      int code = queue.front();
      queue.pop_front();
      int a = code / kQuadricSize, c = code % kQuadricSize;
      if (!b.graph.has_edge(a, c))
        throw ConstructionMismatchError("pair orbit leaves the edge set");
      for (const auto& p : perms) push(p[a], p[c]);
    }
    if (b.ordered_pairs != kOrderedPairs)
      throw ConstructionMismatchError("pair orbit size " +
                                      std::to_string(b.ordered_pairs) +
                                      ", expected 78000");
  }
  return b;
}

CliqueCensus five_clique_census(const F5GraphBundle& b) {
  const FacetGraph& g = b.graph;
  const int n = g.n;
  std::vector<BitVec> up;
  up.reserve(n);
  for (int v = 0; v < n; ++v) up.push_back(above(g.adj[v], v));

  CliqueCensus c;
  std::vector<std::uint64_t> all_keys;
  all_keys.reserve(kTotalCliques);
  // Ascending-id enumeration: each clique appears exactly once.
  for (int v1 = 0; v1 < n; ++v1) {
    for_each_bit(up[v1], [&](int v2) {
      BitVec p2 = up[v1];
      and_into(p2, up[v2]);
      for_each_bit(p2, [&](int v3) {
        BitVec p3 = p2;
        and_into(p3, up[v3]);
        for_each_bit(p3, [&](int v4) {
          BitVec p4 = p3;
          and_into(p4, up[v4]);
          for_each_bit(p4, [&](int v5) {
            all_keys.push_back(pack_clique({v1, v2, v3, v4, v5}));
          });
        });
      });
    });
  }
  c.total = all_keys.size();
  if (c.total != kTotalCliques)
    throw ConstructionMismatchError("found " + std::to_string(c.total) +
                                    " 5-cliques, expected 156000");
  std::unordered_set<std::uint64_t> all(all_keys.begin(), all_keys.end());
  if (all.size() != all_keys.size())
    throw ConstructionMismatchError("duplicate clique in enumeration");

  // Real seed: v0 extended along eps, delta, gamma, beta.
  const F5Fixtures& fx = f5_fixtures();
  const F5Matrix chain[4] = {fx.eps, fx.delta, fx.gamma, fx.beta};
  std::array<int, 5> seed{};
  seed[0] = b.v0;
  F5Vec cur = b.verts[b.v0];
  for (int i = 0; i < 4; ++i) {
    cur = f5_apply(chain[i], cur);
    int id = b.index[f5vec_key(cur)];
    if (id < 0) throw ConstructionMismatchError("seed chain leaves quadric");
    seed[i + 1] = id;
  }
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (!g.has_edge(seed[i], seed[j]))
        throw ConstructionMismatchError("seed is not a 5-clique");
  std::sort(seed.begin(), seed.end());
  c.seed = seed;

  auto perms = generator_perms(b);
  std::unordered_set<std::uint64_t> real = clique_orbit(seed, perms, all);
  if (real.size() != kCliqueOrbit)
    throw ConstructionMismatchError("real orbit size " +
                                    std::to_string(real.size()) +
                                    ", expected 78000");

  // The complement must be a single orbit of the same size.
  std::uint64_t other_seed = 0;
  bool have_other = false;
  c.real_cliques.reserve(real.size());
  for (std::uint64_t k : all_keys) {
    if (real.count(k)) {
      c.real_cliques.push_back(unpack_clique(k));
    } else if (!have_other) {
      other_seed = k;
      have_other = true;
    }
  }
  if (!have_other) throw ConstructionMismatchError("no virtual cliques");
  std::unordered_set<std::uint64_t> other =
      clique_orbit(unpack_clique(other_seed), perms, all);
  if (other.size() != kCliqueOrbit)
    throw ConstructionMismatchError("virtual orbit size " +
                                    std::to_string(other.size()) +
                                    ", expected 78000");
  for (std::uint64_t k : other)
    if (real.count(k))
      throw ConstructionMismatchError("clique orbits are not disjoint");
  c.orbit_sizes = {real.size(), other.size()};
  return c;
}

LAnalysis l_subgroup_analysis(const F5GraphBundle& b) {
  const F5Fixtures& fx = f5_fixtures();
  LAnalysis a;
  F5Closure L({fx.L1, fx.L2}, 500);
  a.l_order = L.order();
  if (a.l_order != 125)
    throw ConstructionMismatchError("|L| = " + std::to_string(a.l_order) +
                                    ", expected 125");

  const int n = int(b.verts.size());
  std::vector<char> seen(n, 0);
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    std::vector<int> orb;
    for (const F5Vec& w : L.orbit(b.verts[v])) {
      int id = b.index[f5vec_key(w)];
      if (id < 0) throw ConstructionMismatchError("L-orbit leaves quadric");
      seen[id] = 1;
      orb.push_back(id);
    }
    std::sort(orb.begin(), orb.end());
    if (orb.size() != 25)
      throw ConstructionMismatchError("L-orbit size " +
                                      std::to_string(orb.size()) +
                                      ", expected 25");
    a.orbits.push_back(std::move(orb));
  }
  if (a.orbits.size() != 26)
    throw ConstructionMismatchError("got " + std::to_string(a.orbits.size()) +
                                    " L-orbits, expected 26");

  const int m = int(a.orbits.size());
  auto joint_independent = [&](const std::vector<int>& x,
                               const std::vector<int>& y) {
    for (int u : x)
      for (int w : y)
        if (u != w && b.graph.has_edge(u, w)) return false;
    return true;
  };
  a.all_independent = true;
  for (const auto& o : a.orbits)
    if (!joint_independent(o, o)) a.all_independent = false;

  a.compat.assign(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (joint_independent(a.orbits[i], a.orbits[j])) {
        a.compat[i] |= 1u << j;
        a.compat[j] |= 1u << i;
      }

  // Perfect matchings of the compatibility graph: count by DP over the
  // unmatched-set mask, then enumerate explicitly (the count is small).
  std::unordered_map<std::uint32_t, std::uint64_t> memo;
  const std::uint32_t full = m == 32 ? ~0u : ((1u << m) - 1);
  auto count = [&](auto&& self, std::uint32_t mask) -> std::uint64_t {
    if (mask == 0) return 1;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int i = std::countr_zero(mask);
    std::uint64_t total = 0;
    std::uint32_t cand = a.compat[i] & mask & ~((1u << i) | ((1u << i) - 1));
    while (cand) {
      int j = std::countr_zero(cand);
      cand &= cand - 1;
      total += self(self, mask & ~((1u << i) | (1u << j)));
    }
    memo.emplace(mask, total);
    return total;
  };
  a.pairing_count = count(count, full);

  std::vector<std::pair<int, int>> cur;
  auto enumerate = [&](auto&& self, std::uint32_t mask) -> void {
    if (mask == 0) {
      a.pairings.push_back(cur);
      return;
    }
    if (memo.count(mask) && memo[mask] == 0) return;
    int i = std::countr_zero(mask);
    std::uint32_t cand = a.compat[i] & mask & ~((1u << i) | ((1u << i) - 1));
    while (cand) {
      int j = std::countr_zero(cand);
      cand &= cand - 1;
      cur.emplace_back(i, j);
      self(self, mask & ~((1u << i) | (1u << j)));
      cur.pop_back();
    }
  };
  enumerate(enumerate, full);
  if (a.pairings.size() != a.pairing_count)
    throw ConstructionMismatchError("pairing enumeration disagrees with count");
  return a;
}

RankCertificate shifted_adjacency_rank(const FacetGraph& g, int shift) {
  const int n = g.n;
  RankCertificate cert;
  cert.n = n;
  std::vector<long long> a(std::size_t(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for_each_bit(g.adj[i], [&](int j) { a[std::size_t(i) * n + j] = 1; });
    a[std::size_t(i) * n + i] =
        ((shift % kPrime) + kPrime) % kPrime;
  }

  // RREF mod p.
  std::vector<int> pivot_col;
  std::vector<int> free_col;
  int rank = 0;
  for (int col = 0; col < n; ++col) {
    int sel = -1;
    for (int r = rank; r < n; ++r)
      if (a[std::size_t(r) * n + col] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) {
      free_col.push_back(col);
      continue;
    }
    for (int j = 0; j < n; ++j)
      std::swap(a[std::size_t(sel) * n + j], a[std::size_t(rank) * n + j]);
    long long inv = pow_mod(a[std::size_t(rank) * n + col], kPrime - 2, kPrime);
    for (int j = col; j < n; ++j)
      a[std::size_t(rank) * n + j] = a[std::size_t(rank) * n + j] * inv % kPrime;
    for (int r = 0; r < n; ++r) {
      if (r == rank) continue;
      long long f = a[std::size_t(r) * n + col];
      if (f == 0) continue;
      for (int j = col; j < n; ++j) {
        a[std::size_t(r) * n + j] =
            (a[std::size_t(r) * n + j] -
             f * a[std::size_t(rank) * n + j]) % kPrime;
        if (a[std::size_t(r) * n + j] < 0) a[std::size_t(r) * n + j] += kPrime;
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }
  cert.gfp_rank = rank;

  // Mod-p kernel basis, one vector per free column; lift each entry by
  // rational reconstruction, clear denominators, and verify exactly.
  for (int f : free_col) {
    std::vector<long long> x(n, 0);
    x[f] = 1;
    for (int r = 0; r < rank; ++r)
      x[pivot_col[r]] = (kPrime - a[std::size_t(r) * n + f]) % kPrime;

    std::vector<long long> num(n), den(n);
    bool ok = true;
    long long lcm = 1;
    for (int j = 0; j < n && ok; ++j) {
      if (!wang(x[j], num[j], den[j])) {
        ok = false;
        break;
      }
      long long g2 = std::gcd(lcm, den[j]);
      lcm = lcm / g2 * den[j];
      if (lcm > (1LL << 40)) ok = false;
    }
    if (!ok) continue;
    std::vector<long long> z(n);
    for (int j = 0; j < n; ++j) z[j] = num[j] * (lcm / den[j]);

    bool zero = true;
    for (int j = 0; j < n && zero; ++j) zero = z[j] == 0;
    if (zero) continue;
    bool verified = true;
    for (int i = 0; i < n && verified; ++i) {
      __int128 s = __int128(shift) * z[i];
      for_each_bit(g.adj[i], [&](int j) { s += z[j]; });
      if (s != 0) verified = false;
    }
    if (verified) {
      ++cert.verified_kernel_dim;
      cert.kernel.push_back(std::move(z));
    }
  }
  return cert;
}

SpectralReport spectral_certificate(const F5GraphBundle& b, const LAnalysis& l) {
  SpectralReport r;
  for (int v = 0; v < b.graph.n; ++v)
    if (b.graph.degree(v) != kDegree)
      throw ConstructionMismatchError("graph is not 120-regular");
  r.degree = kDegree;

  // An exact integer (-10)-eigenvector pins the least eigenvalue at -10 or
  // below; with the 13-coloring this meets the 1 + 120/10 colouring floor.
  r.rank10 = shifted_adjacency_rank(b.graph, 10);
  if (r.rank10.verified_kernel_dim < 1)
    throw ConstructionMismatchError("no certified kernel vector for A + 10I");
  if (r.rank10.gfp_rank + r.rank10.verified_kernel_dim > r.rank10.n)
    throw ConstructionMismatchError("rank bounds are inconsistent");

  if (l.pairings.empty())
    throw ConstructionMismatchError("no orbit pairing available");
  const auto& pairing = l.pairings.front();
  if (pairing.size() != 13)
    throw ConstructionMismatchError("pairing does not have 13 classes");
  r.coloring.assign(b.graph.n, -1);
  for (std::size_t cls = 0; cls < pairing.size(); ++cls) {
    for (int oi : {pairing[cls].first, pairing[cls].second})
      for (int v : l.orbits[oi]) {
        if (r.coloring[v] != -1)
          throw ConstructionMismatchError("orbit pairing overlaps");
        r.coloring[v] = int(cls);
      }
  }
  for (int v = 0; v < b.graph.n; ++v)
    if (r.coloring[v] < 0)
      throw ConstructionMismatchError("coloring misses a vertex");
  for (int u = 0; u < b.graph.n; ++u)
    for_each_bit(b.graph.adj[u], [&](int v) {
      if (r.coloring[u] == r.coloring[v])
        throw ConstructionMismatchError("coloring is not proper");
    });
  r.colors = int(pairing.size());
  return r;
}

EulerReport euler_characteristic_X(
    int nverts, const std::vector<std::array<int, 5>>& cliques) {
  if (nverts <= 0 || nverts > 1024)
    throw InvalidArgumentError("vertex count out of range");
  EulerReport rep;
  rep.faces[0] = std::uint64_t(nverts);

  std::vector<std::array<int, 5>> sorted;
  sorted.reserve(cliques.size());
  for (const auto& c : cliques) {
    std::array<int, 5> s = c;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < 5; ++i) {
      if (s[i] < 0 || s[i] >= nverts)
        throw InvalidArgumentError("clique vertex out of range");
      if (i > 0 && s[i] == s[i - 1])
        throw InvalidArgumentError("clique has a repeated vertex");
    }
    sorted.push_back(s);
  }

  for (int k = 2; k <= 5; ++k) {
    std::vector<int> masks;
    for (int msk = 0; msk < 32; ++msk)
      if (std::popcount(unsigned(msk)) == k) masks.push_back(msk);
    std::vector<std::uint64_t> keys;
    keys.reserve(sorted.size() * masks.size());
    for (const auto& c : sorted)
      for (int msk : masks) {
        std::uint64_t key = 0;
        for (int i = 0; i < 5; ++i)
          if (msk & (1 << i)) key = key * 1024 + std::uint64_t(c[i]);
        keys.push_back(key);
      }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    rep.faces[k - 1] = keys.size();
  }
  rep.chi = 0;
  for (int d = 0; d < 5; ++d)
    rep.chi += (d % 2 == 0 ? 1 : -1) * (long long)rep.faces[d];
  return rep;
}

}  // namespace hyp5
