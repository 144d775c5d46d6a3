#include "hyp5/goodsets.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "hyp5/errors.hpp"

namespace hyp5 {

namespace {

constexpr int kMaxOrbits = 64;

struct Searcher {
  const FacetGraph& g;
  std::vector<std::vector<int>> orbits;
  int K = 0;
  // adjmask[v][o]: members of orbit o adjacent to vertex v, as an orbit-local bitmask
  std::vector<std::array<std::uint64_t, kMaxOrbits>> adjmask;

  Searcher(const FacetGraph& graph, const FreeCyclicAction& psi) : g(graph), orbits(psi.orbits()) {
    K = int(orbits.size());
    if (K > kMaxOrbits) throw InvalidArgumentError("too many orbits for the bitmask search");
    for (const auto& o : orbits)
      if (o.size() > 64) throw InvalidArgumentError("orbit too large for the bitmask search");
    adjmask.assign(std::size_t(g.n), {});
    for (int o = 0; o < K; ++o)
      for (std::size_t i = 0; i < orbits[o].size(); ++i) {
        int v = orbits[o][i];
        for (int u = 0; u < g.n; ++u)
          if (g.has_edge(u, v)) adjmask[u][o] |= std::uint64_t(1) << i;
      }
  }

  std::uint64_t full_mask(int o) const {
    return orbits[o].size() == 64 ? ~std::uint64_t(0)
                                  : (std::uint64_t(1) << orbits[o].size()) - 1;
  }

  // Fail-first: remaining orbit with the fewest candidates, lowest index on ties.
  int pick(const std::array<std::uint64_t, kMaxOrbits>& masks, std::uint64_t remaining) const {
    int best = -1, bestpc = 65;
    for (std::uint64_t r = remaining; r;) {
      int o = std::countr_zero(r);
      r &= r - 1;
      int pc = std::popcount(masks[o]);
      if (pc < bestpc) {
        bestpc = pc;
        best = o;
      }
    }
    return best;
  }

  std::uint64_t count(std::array<std::uint64_t, kMaxOrbits> masks, std::uint64_t remaining) const {
    if (remaining == 0) return 1;
    int o = pick(masks, remaining);
    std::uint64_t cand = masks[o];
    if (cand == 0) return 0;
    std::uint64_t rem2 = remaining & ~(std::uint64_t(1) << o);
    std::uint64_t total = 0;
    while (cand) {
      int i = std::countr_zero(cand);
      cand &= cand - 1;
      int v = orbits[o][std::size_t(i)];
      std::array<std::uint64_t, kMaxOrbits> m2 = masks;
      for (std::uint64_t r = rem2; r;) {
        int o2 = std::countr_zero(r);
        r &= r - 1;
        m2[o2] &= ~adjmask[std::size_t(v)][o2];
      }
      total += count(m2, rem2);
    }
    return total;
  }

  bool stream(std::array<std::uint64_t, kMaxOrbits> masks, std::uint64_t remaining,
              std::vector<int>& chosen,
              const std::function<bool(const std::vector<int>&)>& cb) const {
    if (remaining == 0) {
      std::vector<int> out = chosen;
      std::sort(out.begin(), out.end());
      return cb(out);
    }
    int o = pick(masks, remaining);
    std::uint64_t cand = masks[o];
    std::uint64_t rem2 = remaining & ~(std::uint64_t(1) << o);
    while (cand) {
      int i = std::countr_zero(cand);
      cand &= cand - 1;
      int v = orbits[o][std::size_t(i)];
      std::array<std::uint64_t, kMaxOrbits> m2 = masks;
      for (std::uint64_t r = rem2; r;) {
        int o2 = std::countr_zero(r);
        r &= r - 1;
        m2[o2] &= ~adjmask[std::size_t(v)][o2];
      }
      chosen.push_back(v);
      bool go_on = stream(m2, rem2, chosen, cb);
      chosen.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  bool sample_one(std::array<std::uint64_t, kMaxOrbits> masks, std::uint64_t remaining,
                  std::vector<int>& chosen, std::mt19937_64& rng) const {
    if (remaining == 0) return true;
    int o = pick(masks, remaining);
    std::uint64_t cand = masks[o];
    if (cand == 0) return false;
    std::array<int, 64> idx{};
    int cnt = 0;
    while (cand) {
      idx[std::size_t(cnt++)] = std::countr_zero(cand);
      cand &= cand - 1;
    }
    for (int i = cnt - 1; i > 0; --i) {  // explicit Fisher-Yates for portability
      int j = int(rng() % std::uint64_t(i + 1));
      std::swap(idx[std::size_t(i)], idx[std::size_t(j)]);
    }
    std::uint64_t rem2 = remaining & ~(std::uint64_t(1) << o);
    for (int i = 0; i < cnt; ++i) {
      int v = orbits[o][std::size_t(idx[std::size_t(i)])];
      std::array<std::uint64_t, kMaxOrbits> m2 = masks;
      for (std::uint64_t r = rem2; r;) {
        int o2 = std::countr_zero(r);
        r &= r - 1;
        m2[o2] &= ~adjmask[std::size_t(v)][o2];
      }
      chosen.push_back(v);
      if (sample_one(m2, rem2, chosen, rng)) return true;
      chosen.pop_back();
    }
    return false;
  }

  std::array<std::uint64_t, kMaxOrbits> root_masks() const {
    std::array<std::uint64_t, kMaxOrbits> m{};
    for (int o = 0; o < K; ++o) m[o] = full_mask(o);
    return m;
  }
  std::uint64_t root_remaining() const {
    return K == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << K) - 1;
  }
};

}  // namespace

std::uint64_t count_good_sets(const FacetGraph& g, const FreeCyclicAction& psi, int threads,
                              const std::function<void(std::size_t, std::size_t)>& progress) {
  Searcher s(g, psi);
  if (s.K == 0) return 1;  // the empty transversal
  if (threads <= 0) threads = int(std::thread::hardware_concurrency());
  if (threads <= 0) threads = 1;

  // Branch the root orbit's candidates across workers; summation is exact, so
  // the result does not depend on the worker count.
  auto masks = s.root_masks();
  std::uint64_t remaining = s.root_remaining();
  int o = s.pick(masks, remaining);
  std::uint64_t rem2 = remaining & ~(std::uint64_t(1) << o);
  std::vector<int> branch;
  for (std::uint64_t cand = masks[o]; cand;) {
    branch.push_back(std::countr_zero(cand));
    cand &= cand - 1;
  }

  std::vector<std::uint64_t> partial(branch.size(), 0);
  std::vector<std::thread> pool;
  std::size_t stride = std::size_t(threads);
  std::mutex report_mu;
  std::size_t done = 0;
  for (std::size_t w = 0; w < stride && w < branch.size(); ++w)
    pool.emplace_back([&, w] {
      for (std::size_t bi = w; bi < branch.size(); bi += stride) {
        int v = s.orbits[o][std::size_t(branch[bi])];
        auto m2 = masks;
        for (std::uint64_t r = rem2; r;) {
          int o2 = std::countr_zero(r);
          r &= r - 1;
          m2[o2] &= ~s.adjmask[std::size_t(v)][o2];
        }
        partial[bi] = s.count(m2, rem2);
        if (progress) {
          std::lock_guard<std::mutex> lock(report_mu);
          progress(++done, branch.size());
        }
      }
    });
  for (auto& t : pool) t.join();
  std::uint64_t total = 0;
  for (std::uint64_t x : partial) total += x;
  return total;
}

void for_each_good_set(const FacetGraph& g, const FreeCyclicAction& psi,
                       const std::function<bool(const std::vector<int>&)>& cb) {
  Searcher s(g, psi);
  std::vector<int> chosen;
  if (s.K == 0) {
    cb({});
    return;
  }
  s.stream(s.root_masks(), s.root_remaining(), chosen, cb);
}

std::vector<std::vector<int>> sample_good_sets(const FacetGraph& g, const FreeCyclicAction& psi,
                                               std::size_t n, std::uint64_t seed) {
  Searcher s(g, psi);
  std::mt19937_64 rng(seed);
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> out;
  std::size_t dry_spells = 0;
  while (out.size() < n) {
    std::vector<int> chosen;
    if (!s.sample_one(s.root_masks(), s.root_remaining(), chosen, rng))
      throw ConstructionMismatchError("graph admits no good set");
    std::sort(chosen.begin(), chosen.end());
    if (seen.insert(chosen).second) {
      out.push_back(std::move(chosen));
      dry_spells = 0;
    } else if (++dry_spells > 1000 * (n + 1)) {
      throw EnumerationOverflowError("sampling cannot find enough distinct good sets");
    }
  }
  return out;
}

bool is_good_set(const FacetGraph& g, const FreeCyclicAction& psi, const std::vector<int>& set) {
  auto orbits = psi.orbits();
  std::vector<int> per_orbit(orbits.size(), 0);
  std::vector<int> owner(std::size_t(g.n), -1);
  for (std::size_t o = 0; o < orbits.size(); ++o)
    for (int v : orbits[o]) owner[std::size_t(v)] = int(o);
  for (int v : set) {
    if (v < 0 || v >= g.n) return false;
    ++per_orbit[std::size_t(owner[std::size_t(v)])];
  }
  for (int c : per_orbit)
    if (c != 1) return false;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (g.has_edge(set[i], set[j])) return false;
  return true;
}

}  // namespace hyp5
