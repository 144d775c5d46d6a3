#include "hyp5/toddcoxeter.hpp"

#include <deque>
#include <utility>

#include "hyp5/errors.hpp"

namespace hyp5 {

Presentation Presentation::coxeter(const CoxeterDiagram& d) {
  Presentation p;
  p.ngens = d.n;
  for (int i = 0; i < d.n; ++i) p.relators.push_back({i, i});
  for (int i = 0; i < d.n; ++i)
    for (int j = i + 1; j < d.n; ++j) {
      int m = d.m[i][j];
      if (m == 0) continue;  // infinite label: no pair relator
      std::vector<int> w;
      for (int k = 0; k < m; ++k) {
        w.push_back(i);
        w.push_back(j);
      }
      p.relators.push_back(std::move(w));
    }
  return p;
}

std::vector<int> parse_word(const std::string& s, int ngens) {
  std::vector<int> w;
  for (char ch : s) {
    int k = ch - 'a';
    if (k < 0 || k >= ngens) throw InvalidArgumentError("word letter outside generator range");
    w.push_back(k);
  }
  return w;
}

int trace_word(const CosetTable& t, int coset, const std::vector<int>& w) {
  for (int g : w) coset = t.act[g][coset];
  return coset;
}

namespace {

struct Enumerator {
  int ngens;
  std::size_t max_cosets;
  std::vector<std::vector<int>> tab;  // tab[g][c], -1 undefined
  std::vector<int> parent;            // union-find; smaller index survives
  std::size_t live = 0;

  Enumerator(int ng, std::size_t cap) : ngens(ng), max_cosets(cap), tab(ng) { new_coset(); }

  int rep(int c) {
    while (parent[c] != c) {
      parent[c] = parent[parent[c]];
      c = parent[c];
    }
    return c;
  }

  int new_coset() {
    if (parent.size() >= max_cosets)
      throw EnumerationOverflowError("coset enumeration exceeds max_cosets");
    int c = int(parent.size());
    parent.push_back(c);
    for (auto& row : tab) row.push_back(-1);
    ++live;
    return c;
  }

  int get(int g, int c) {
    int t = tab[g][c];
    return t < 0 ? -1 : rep(t);
  }
  void put(int g, int c, int d) {  // involutory generators: symmetric entries
    tab[g][c] = d;
    tab[g][d] = c;
  }

  void coincide(int a, int b) {
    std::deque<std::pair<int, int>> q{{a, b}};
    while (!q.empty()) {
      auto [x, y] = q.front();
      q.pop_front();
      x = rep(x);
      y = rep(y);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      parent[y] = x;
      --live;
      for (int g = 0; g < ngens; ++g) {
        int ty = tab[g][y];
        if (ty < 0) continue;
        ty = rep(ty);
        int tx = get(g, x);
        if (tx < 0) {
          put(g, x, ty);
        } else if (tx != ty) {
          q.emplace_back(tx, ty);
        }
      }
    }
  }

  // Scan word at coset c, defining cosets as needed to close it. Returns
  // false when a resulting coincidence killed c.
  bool scan_fill(const std::vector<int>& w, int c) {
    for (;;) {
      c = rep(c);
      std::size_t i = 0, j = w.size();
      int f = c, b = c;
      while (i < j) {
        int t = get(w[i], f);
        if (t < 0) break;
        f = t;
        ++i;
      }
      if (i == j) {
        if (f != c) coincide(f, c);
        return rep(c) == c;
      }
      while (j > i + 1) {
        int t = get(w[j - 1], b);
        if (t < 0) break;
        b = t;
        --j;
      }
      if (j == i + 1) {
        put(w[i], f, b);  // deduction closing the gap; rescan to confirm
      } else {
        put(w[i], f, new_coset());
      }
    }
  }
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<std::vector<int>>& subgroup,
                        std::size_t max_cosets) {
  if (p.ngens <= 0) throw InvalidArgumentError("presentation needs at least one generator");
  auto check = [&](const std::vector<int>& w, bool allow_empty) {
    if (w.empty() && !allow_empty) throw InvalidArgumentError("empty relator");
    for (int g : w)
      if (g < 0 || g >= p.ngens) throw InvalidArgumentError("word letter outside generator range");
  };
  for (const auto& r : p.relators) check(r, false);
  for (const auto& w : subgroup) check(w, true);

  Enumerator e(p.ngens, max_cosets);
  for (const auto& w : subgroup) e.scan_fill(w, 0);
  for (int c = 0; c < int(e.parent.size()); ++c) {
    if (e.rep(c) != c) continue;
    for (const auto& r : p.relators)
      if (!e.scan_fill(r, c)) break;
  }
  // Coincidences can graft unscanned entries onto already-processed cosets;
  // re-scan everything until the table is a fixed point.
  for (bool changed = true; changed;) {
    changed = false;
    std::size_t before = e.live;
    for (const auto& w : subgroup) e.scan_fill(w, 0);
    for (int c = 0; c < int(e.parent.size()); ++c) {
      if (e.rep(c) != c) continue;
      for (const auto& r : p.relators)
        if (!e.scan_fill(r, c)) break;
    }
    if (e.live != before) changed = true;
  }

  // Compress live cosets, then standardize by BFS from coset 0.
  std::vector<int> dense(e.parent.size(), -1);
  std::vector<int> livelist;
  for (int c = 0; c < int(e.parent.size()); ++c)
    if (e.rep(c) == c) {
      dense[c] = int(livelist.size());
      livelist.push_back(c);
    }
  int n = int(livelist.size());
  std::vector<std::vector<int>> act0(p.ngens, std::vector<int>(n, -1));
  for (int g = 0; g < p.ngens; ++g)
    for (int i = 0; i < n; ++i) {
      int t = e.get(g, livelist[i]);
      if (t < 0) throw ConstructionMismatchError("coset table incomplete after enumeration");
      act0[g][i] = dense[t];
    }

  std::vector<int> newid(n, -1);
  std::vector<int> order;
  newid[0] = 0;
  order.push_back(0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    int cur = order[head];
    for (int g = 0; g < p.ngens; ++g) {
      int t = act0[g][cur];
      if (newid[t] < 0) {
        newid[t] = int(order.size());
        order.push_back(t);
      }
    }
  }
  if (int(order.size()) != n)
    throw ConstructionMismatchError("coset table is not transitive from coset 0");

  CosetTable out;
  out.cosets = n;
  out.act.assign(p.ngens, std::vector<int>(n, -1));
  for (int g = 0; g < p.ngens; ++g)
    for (int i = 0; i < n; ++i) out.act[g][newid[i]] = newid[act0[g][i]];

  // Certify: every relator closes everywhere, subgroup words fix coset 0.
  for (int c = 0; c < n; ++c)
    for (const auto& r : p.relators)
      if (trace_word(out, c, r) != c)
        throw ConstructionMismatchError("relator does not close on the final table");
  for (const auto& w : subgroup)
    if (trace_word(out, 0, w) != 0)
      throw ConstructionMismatchError("subgroup word moves coset 0");
  return out;
}

}  // namespace hyp5
