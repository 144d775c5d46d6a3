#include "hyp5/permgroup.hpp"

#include <algorithm>
#include <set>

#include "hyp5/errors.hpp"

namespace hyp5 {

Perm perm_identity(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = int(i);
  return r;
}

bool perm_is_identity(const Perm& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != int(i)) return false;
  return true;
}

PermutationGroup::PermutationGroup(int degree, std::vector<Perm> gens)
    : deg_(degree), gens_(std::move(gens)) {
  if (degree < 0 || degree > 1024) throw InvalidArgumentError("degree outside design envelope");
  for (const Perm& g : gens_) {
    if (int(g.size()) != degree) throw InvalidArgumentError("generator degree mismatch");
    std::vector<bool> hit(degree, false);
    for (int v : g) {
      if (v < 0 || v >= degree || hit[v]) throw InvalidArgumentError("generator is not a permutation");
      hit[v] = true;
    }
  }

  for (const Perm& g : gens_) place(g, 0);

  // Strong generating test, deepest level first: every Schreier generator of
  // level l must sift to identity through the levels below. A nontrivial
  // residue is installed at the level whose orbit it extends; only levels up
  // to that one lose their verified status, so verification resumes there.
  for (std::size_t i = levels_.size(); i > 0;) {
    std::size_t l = i - 1;
    bool defect = false;
    for (std::size_t oi = 0; oi < levels_[l].orbit.size() && !defect; ++oi)
      for (std::size_t si = 0; si < levels_[l].strong.size() && !defect; ++si) {
        const Level& L = levels_[l];
        int q = L.strong[si][L.orbit[oi]];
        Perm sg = perm_compose(perm_compose(L.transversal[oi], L.strong[si]),
                               perm_inverse(L.transversal[L.where[q]]));
        std::size_t stop = 0;
        Perm h = sift(std::move(sg), l + 1, &stop);
        if (!perm_is_identity(h)) {
          place(h, l + 1);  // grows an orbit in levels l+1..stop, or the base
          i = std::min(stop + 1, levels_.size());
          defect = true;
        }
      }
    if (!defect) i = l;
  }
}

void PermutationGroup::add_level(int base) {
  Level L;
  L.base = base;
  L.orbit = {base};
  L.transversal = {perm_identity(deg_)};
  L.where.assign(deg_, -1);
  L.where[base] = 0;
  levels_.push_back(std::move(L));
}

void PermutationGroup::recompute_orbit(std::size_t l) {
  Level& L = levels_[l];
  L.orbit = {L.base};
  L.transversal = {perm_identity(deg_)};
  L.where.assign(deg_, -1);
  L.where[L.base] = 0;
  for (std::size_t head = 0; head < L.orbit.size(); ++head) {
    int p = L.orbit[head];
    for (const Perm& s : L.strong) {
      int q = s[p];
      if (L.where[q] < 0) {
        L.where[q] = int(L.orbit.size());
        L.orbit.push_back(q);
        L.transversal.push_back(perm_compose(L.transversal[head], s));
      }
    }
  }
}

Perm PermutationGroup::sift(Perm g, std::size_t from, std::size_t* stop) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    int im = g[levels_[l].base];
    int idx = levels_[l].where[im];
    if (idx < 0) {
      if (stop) *stop = l;
      return g;
    }
    g = perm_compose(g, perm_inverse(levels_[l].transversal[idx]));
  }
  if (stop) *stop = levels_.size();
  return g;
}

// Install g (which fixes the base prefix before lo) as a strong generator at
// every level from lo down to the first base point it moves, extending the
// base with its smallest moved point when it fixes all existing ones.
void PermutationGroup::place(const Perm& g, std::size_t lo) {
  if (perm_is_identity(g)) return;
  std::size_t m = lo;
  while (m < levels_.size() && g[levels_[m].base] == levels_[m].base) ++m;
  if (m == levels_.size()) {
    int moved = -1;
    for (int i = 0; i < deg_; ++i)
      if (g[i] != i) {
        moved = i;
        break;
      }
    add_level(moved);
  }
  for (std::size_t l = lo; l <= m; ++l) {
    levels_[l].strong.push_back(g);
    recompute_orbit(l);
  }
}

std::uint64_t PermutationGroup::order() const {
  std::uint64_t o = 1;
  for (const Level& L : levels_) o *= std::uint64_t(L.orbit.size());
  return o;
}

bool PermutationGroup::contains(const Perm& g) const {
  if (int(g.size()) != deg_) return false;
  return perm_is_identity(sift(g, 0, nullptr));
}

std::vector<std::vector<int>> point_orbits(int degree, const std::vector<Perm>& gens) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(degree, false);
  for (int seed = 0; seed < degree; ++seed) {
    if (seen[seed]) continue;
    std::vector<int> orb{seed};
    seen[seed] = true;
    for (std::size_t head = 0; head < orb.size(); ++head)
      for (const Perm& g : gens) {
        int q = g[orb[head]];
        if (!seen[q]) {
          seen[q] = true;
          orb.push_back(q);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

namespace {
std::vector<int> apply_set(const Perm& g, const std::vector<int>& s) {
  std::vector<int> t;
  t.reserve(s.size());
  for (int v : s) t.push_back(g[v]);
  std::sort(t.begin(), t.end());
  return t;
}
}  // namespace

std::vector<std::vector<int>> set_orbit(const std::vector<Perm>& gens, std::vector<int> seed,
                                        std::size_t cap) {
  std::sort(seed.begin(), seed.end());
  std::set<std::vector<int>> seen{seed};
  std::vector<std::vector<int>> orb{std::move(seed)};
  for (std::size_t head = 0; head < orb.size(); ++head)
    for (const Perm& g : gens) {
      std::vector<int> t = apply_set(g, orb[head]);
      if (seen.insert(t).second) {
        orb.push_back(std::move(t));
        if (orb.size() > cap) throw EnumerationOverflowError("set orbit exceeds cap");
      }
    }
  return orb;
}

namespace {
SetPair canon_pair(SetPair p) {
  std::sort(p.a.begin(), p.a.end());
  std::sort(p.b.begin(), p.b.end());
  if (p.b < p.a) std::swap(p.a, p.b);
  return p;
}
}  // namespace

std::vector<SetPair> set_pair_orbit(const std::vector<Perm>& gens, SetPair seed, std::size_t cap) {
  seed = canon_pair(std::move(seed));
  auto key = [](const SetPair& p) { return std::make_pair(p.a, p.b); };
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen{key(seed)};
  std::vector<SetPair> orb{std::move(seed)};
  for (std::size_t head = 0; head < orb.size(); ++head)
    for (const Perm& g : gens) {
      SetPair t = canon_pair({apply_set(g, orb[head].a), apply_set(g, orb[head].b)});
      if (seen.insert(key(t)).second) {
        orb.push_back(std::move(t));
        if (orb.size() > cap) throw EnumerationOverflowError("set pair orbit exceeds cap");
      }
    }
  return orb;
}

std::uint64_t set_stabilizer_order(const PermutationGroup& g, const std::vector<int>& seed,
                                   std::size_t cap) {
  std::uint64_t orb = set_orbit(g.generators(), seed, cap).size();
  std::uint64_t o = g.order();
  if (o % orb != 0) throw ConstructionMismatchError("orbit size does not divide group order");
  return o / orb;
}

}  // namespace hyp5
